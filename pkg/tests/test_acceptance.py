"""Acceptance gate: one test per shipping criterion, one PASS/FAIL line each.

Each criterion prints its verdict so a transcript shows the gate at a
glance; the assert carries the same condition so pytest fails the run
when a criterion does not hold.
"""

import itertools
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from conftest import FIXTURES
from genlib import (
    brute_counts,
    brute_hints,
    random_catalog,
    random_corpus,
    random_selections,
    random_sign,
)
from malformed_swt import MALFORMED
from swiftsign.hints import CooccurrenceTable, hints, rebuild, record_sign
from swiftsign.notation import parse_text, serialize_text
from swiftsign.search import execute, new_query, set_facet
from swiftsign.server import ServerConfig, create_app
from swiftsign.sign import Sign, add_glyph, delete, mirror, move, rotate
from swiftsign.store import SignStore
from swiftsign.svg import export_svg

A = "hands:h-1-L-0"
X = "head:brow-a"
Y = "head:mouth-a"


def verdict(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail and not ok:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_c1_search_oracle_equivalence():
    """1,000 randomized (catalog, query) cases vs a naive full scan, <60s."""
    rng = random.Random(20260819)
    start = time.perf_counter()
    mismatches = 0
    for _ in range(250):
        catalog = random_catalog(rng, max_glyphs=1000)
        for _ in range(4):
            category = rng.choice(catalog.category_tokens)
            selections = random_selections(rng, catalog, category)
            q = new_query(catalog, category)
            for name, value in selections.items():
                q = set_facet(catalog, q, name, value)
            got = [g.id for g in execute(catalog, q)]
            want = sorted(
                g.id
                for g in catalog.glyphs_in_category(category)
                if all(g.facets.get(n) == v for n, v in selections.items())
            )
            if got != want:
                mismatches += 1
    elapsed = time.perf_counter() - start
    verdict(
        "search oracle equivalence: 1000/1000 randomized queries match the "
        f"naive scan in {elapsed:.1f}s",
        mismatches == 0 and elapsed < 60.0,
        f"{mismatches} mismatches, {elapsed:.1f}s",
    )


def test_c2_order_independence():
    """All permutations of 200 random facet-selection sets agree."""
    rng = random.Random(20260820)
    disagreements = 0
    for _ in range(200):
        catalog = random_catalog(rng, max_glyphs=150)
        category = rng.choice(catalog.category_tokens)
        selections = list(random_selections(rng, catalog, category).items())[:4]
        baseline = None
        for perm in itertools.permutations(selections):
            q = new_query(catalog, category)
            for name, value in perm:
                q = set_facet(catalog, q, name, value)
            ids = [g.id for g in execute(catalog, q)]
            if baseline is None:
                baseline = ids
            elif ids != baseline:
                disagreements += 1
    verdict(
        "order independence: every permutation of 200 facet-selection sets "
        "yields the identical result list",
        disagreements == 0,
        f"{disagreements} permutation disagreements",
    )


def test_c3_swt1_round_trip(fixture_cat):
    """1,000 random signs round-trip; 50 malformed strings raise as annotated."""
    rng = random.Random(20260821)
    failures = 0
    for i in range(1000):
        if i % 2 == 0:
            catalog = fixture_cat
        else:
            catalog = random_catalog(rng, max_glyphs=60)
        sign = random_sign(rng, catalog)
        if parse_text(serialize_text(sign), catalog) != sign:
            failures += 1

    wrong_class = 0
    for text, expected in MALFORMED:
        try:
            parse_text(text, fixture_cat)
            wrong_class += 1
        except expected:
            pass
        except Exception:
            wrong_class += 1
    verdict(
        "SWT1 round-trip: 1000/1000 random signs re-parse structurally equal; "
        "all 50 malformed strings raise their annotated error class",
        failures == 0 and wrong_class == 0 and len(MALFORMED) == 50,
        f"{failures} round-trip failures, {wrong_class} wrong error classes",
    )


def test_c4_cooccurrence_correctness():
    """200 random corpora: rebuild vs brute force, prefix-incremental
    equality, hints vs recount, tau monotonicity."""
    rng = random.Random(20260822)
    faults = []
    for case in range(200):
        catalog = random_catalog(rng, max_glyphs=50)  # <= 50 base ids
        corpus = random_corpus(rng, catalog, max_signs=200)

        table = rebuild(corpus, catalog)
        pair, unary, total = brute_counts(corpus, catalog)
        if (
            table.sign_total != total
            or {k: v for k, v in table.pair_counts.items() if v} != pair
            or {k: v for k, v in table.unary_counts.items() if v} != unary
        ):
            faults.append(f"case {case}: rebuild != brute counts")

        incremental = CooccurrenceTable.empty()
        for i, sign in enumerate(corpus, start=1):
            incremental = record_sign(incremental, sign, catalog)
            if i % 25 == 0 or i == len(corpus):
                if incremental != rebuild(corpus[:i], catalog):
                    faults.append(f"case {case}: prefix {i} diverged")
                    break
        if incremental != table:
            faults.append(f"case {case}: incremental final != rebuild")

        area = rng.choice(catalog.category_tokens)
        ids = sorted(catalog.glyphs)
        placed = rng.sample(ids, rng.randint(0, min(4, len(ids))))
        previous: set[str] | None = None
        for tau in (1, 2, 3):
            got = [(g.id, s) for g, s in hints(table, catalog, area, placed, tau=tau).hints]
            if got != brute_hints(corpus, catalog, area, placed, tau):
                faults.append(f"case {case}: hints(tau={tau}) != brute force")
            got_ids = {gid for gid, _ in got}
            if placed and previous is not None and not got_ids <= previous:
                faults.append(f"case {case}: tau monotonicity broken")
            previous = got_ids
    verdict(
        "co-occurrence correctness: 200 corpora match the brute-force oracle "
        "(rebuild, incremental prefixes, hint scores/order, tau monotonicity)",
        not faults,
        "; ".join(faults[:3]),
    )


def test_c5_transform_algebra(fixture_cat):
    """rotate x8, mirror^2, cw.ccw identities; multi-select = composition."""
    rng = random.Random(20260823)
    faults = 0
    for _ in range(300):
        sign = random_sign(rng, fixture_cat, max_placements=6)
        if not sign.placements:
            continue
        sel = set(rng.sample(range(len(sign.placements)), rng.randint(1, len(sign.placements))))

        r = sign
        for _ in range(8):
            r = rotate(r, sel, "ccw")
        if r != sign:
            faults += 1
        if mirror(mirror(sign, sel), sel) != sign:
            faults += 1
        if rotate(rotate(sign, sel, "ccw"), sel, "cw") != sign:
            faults += 1

        ordered = sorted(sel)
        stepwise = sign
        for i in ordered:
            stepwise = rotate(stepwise, {i}, "cw")
        if rotate(sign, sel, "cw") != stepwise:
            faults += 1
        stepwise = sign
        for i in ordered:
            stepwise = mirror(stepwise, {i})
        if mirror(sign, sel) != stepwise:
            faults += 1
        try:
            batched = move(sign, sel, 3, -2)
        except Exception:
            batched = None
        if batched is not None:
            stepwise = sign
            for i in ordered:
                stepwise = move(stepwise, {i}, 3, -2)
            if batched != stepwise:
                faults += 1
        stepwise = sign
        for shift, i in enumerate(ordered):
            stepwise = delete(stepwise, {i - shift})
        if delete(sign, sel) != stepwise:
            faults += 1
    verdict(
        "transform algebra: rotation/mirror identities and multi-select "
        "composition hold on 300 random signs",
        faults == 0,
        f"{faults} identity violations",
    )


_EXPORT_SCRIPT = """\
import hashlib, sys
from swiftsign.catalog import load_catalog_path
from swiftsign.notation import serialize_text
from swiftsign.store import SignStore
from swiftsign.svg import export_svg

catalog = load_catalog_path(sys.argv[1])
store = SignStore(sys.argv[2], catalog)
digest = hashlib.sha256()
for record in (store.load(f"{i:08d}") for i in range(1, store.sign_total + 1)):
    digest.update(serialize_text(record.sign).encode())
    digest.update(export_svg(record.sign, catalog, crop=False).encode())
    digest.update(export_svg(record.sign, catalog, crop=True).encode())
print(digest.hexdigest())
"""


def test_c6_deterministic_exports(fixture_cat):
    """Byte-identical notation and SVG output across two process runs."""
    args = [
        sys.executable,
        "-c",
        _EXPORT_SCRIPT,
        str(FIXTURES / "fixture_cat.swc"),
        str(FIXTURES / "export_corpus.swstore"),
    ]
    first = subprocess.run(args, capture_output=True, text=True, check=True).stdout.strip()
    second = subprocess.run(args, capture_output=True, text=True, check=True).stdout.strip()

    store = SignStore(FIXTURES / "export_corpus.swstore", fixture_cat)
    in_process = __import__("hashlib").sha256()
    for i in range(1, store.sign_total + 1):
        record = store.load(f"{i:08d}")
        in_process.update(serialize_text(record.sign).encode())
        in_process.update(export_svg(record.sign, fixture_cat, crop=False).encode())
        in_process.update(export_svg(record.sign, fixture_cat, crop=True).encode())
    verdict(
        "deterministic exports: notation and SVG of the 20-sign corpus hash "
        "identically across two separate processes",
        first == second == in_process.hexdigest() and store.sign_total == 20,
        f"{first} vs {second}",
    )


def test_c7_fixture_hint_scenario(corpus_store, fixture_cat):
    """Exact hand-derived ranking on the authored 4-sign corpus."""
    table = corpus_store.table
    tau1 = [(g.id, s) for g, s in hints(table, fixture_cat, "head", [A], tau=1).hints]
    tau2 = [(g.id, s) for g, s in hints(table, fixture_cat, "head", [A], tau=2).hints]
    counts_ok = (
        table.pair(A, X) == 2
        and table.pair(A, Y) == 1
        and table.pair("hands:h-2-R-0", Y) == 1
        and table.unary(A) == 3
        and table.sign_total == 4
    )
    verdict(
        "fixture hint scenario: placed base A ranks X(2) above Y(1) at tau=1 "
        "and only X survives tau=2, matching the hand counts",
        counts_ok and tau1 == [(X, 2), (Y, 1)] and tau2 == [(X, 2)],
        f"tau1={tau1} tau2={tau2}",
    )


def test_c8_api_parity_and_durability(tmp_path, fixture_cat):
    """Scripted session -> save -> server restart -> identical sign and table."""
    config = ServerConfig(
        catalog_path=str(FIXTURES / "fixture_cat.swc"),
        store_path=str(tmp_path / "store.swstore"),
    )
    expected = Sign()
    expected = add_glyph(expected, fixture_cat, A, 120, 140)
    expected = add_glyph(expected, fixture_cat, "hands:h-2-R-4", 300, 260)
    expected = add_glyph(expected, fixture_cat, X, 250, 60)
    expected = rotate(expected, {0, 2}, "ccw")

    app = create_app(config)
    with TestClient(app) as client:
        sid = client.post("/api/sessions").json()["session_id"]
        ops = f"/api/sessions/{sid}/ops"
        for p in [(A, 120, 140), ("hands:h-2-R-4", 300, 260), (X, 250, 60)]:
            client.post(ops, json={"op": "add", "glyph_id": p[0], "x": p[1], "y": p[2]})
        client.post(ops, json={"op": "select", "indices": [0, 2]})
        client.post(ops, json={"op": "rotate", "direction": "ccw"})
        record_id = client.post(f"/api/sessions/{sid}/save", json={"label": "scripted"}).json()["id"]

    app2 = create_app(config)
    with TestClient(app2) as client2:
        body = client2.get(f"/api/signs/{record_id}").json()
        reloaded_ok = body["notation"] == serialize_text(expected)
        table_ok = app2.state.store.table == rebuild(app2.state.store.all_signs(), fixture_cat)
        count_ok = client2.get("/api/health").json()["sign_total"] == 1
    verdict(
        "API parity & durability: the scripted session's sign survives a "
        "server restart byte-for-byte and the hint table equals a rebuild",
        reloaded_ok and table_ok and count_ok,
        f"notation={body['notation']!r}",
    )


def test_c9_search_guidance_sample_catalog(sample_cat):
    """On the shipped catalog, any 3 hands facet selections leave <=50 glyphs."""
    schema = sample_cat.facet_schema("hands")
    full = len(execute(sample_cat, new_query(sample_cat, "hands")))
    worst = 0
    combos = 0
    for facets in itertools.combinations(schema.facet_names, 3):
        domains = [schema.domain(f) for f in facets]
        for values in itertools.product(*domains):
            q = new_query(sample_cat, "hands")
            for facet, value in zip(facets, values):
                q = set_facet(sample_cat, q, facet, value)
            worst = max(worst, len(execute(sample_cat, q)))
            combos += 1
    verdict(
        f"search guidance: all {combos} three-facet selections over the "
        f"{full}-glyph hands set leave at most {worst} results (<=50)",
        full >= 400 and worst <= 50,
        f"worst={worst} full={full}",
    )
