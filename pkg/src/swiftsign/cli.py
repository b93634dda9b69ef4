"""Operational command line: serve, validate-catalog, export, stats.

Every option can also be supplied through an environment variable with the
SWIFT_ prefix (for example SWIFT_CATALOG for --catalog).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .catalog import Catalog, load_catalog_path, missing_standard_areas
from .errors import SwiftSignError
from .server import ServerConfig, create_app
from .store import SignStore
from .svg import export_svg


def _load_catalog_or_fail(path: str) -> Catalog:
    if not Path(path).is_file():
        raise click.ClickException(f"catalog file not found: {path}")
    try:
        return load_catalog_path(path)
    except SwiftSignError as exc:
        raise click.ClickException(f"{path}: {exc}") from exc


def _open_store_or_fail(path: str, catalog: Catalog) -> SignStore:
    try:
        return SignStore(path, catalog)
    except SwiftSignError as exc:
        raise click.ClickException(f"{path}: {exc}") from exc


_catalog_option = click.option(
    "--catalog",
    "catalog_path",
    envvar="SWIFT_CATALOG",
    required=True,
    help="Path to the glyph catalog document.",
)
_store_option = click.option(
    "--store",
    "store_path",
    envvar="SWIFT_STORE",
    required=True,
    help="Path to the sign store file (created on first save).",
)


@click.group()
@click.version_option(version=__version__, prog_name="swiftsign")
def cli() -> None:
    """Sign composition service tools."""


@cli.command()
@_catalog_option
@_store_option
@click.option("--host", envvar="SWIFT_HOST", default="127.0.0.1", show_default=True)
@click.option("--port", envvar="SWIFT_PORT", default=8000, show_default=True, type=int)
@click.option("--tau", envvar="SWIFT_TAU", default=1, show_default=True, type=int,
              help="Minimum co-occurrence count for a hint.")
@click.option("--hint-limit", envvar="SWIFT_HINT_LIMIT", default=20, show_default=True,
              type=int, help="Maximum hints returned per query.")
@click.option("--session-ttl", envvar="SWIFT_SESSION_TTL", default=3600.0,
              show_default=True, type=float, help="Idle session expiry in seconds.")
@click.option("--cors-origin", "cors_origins", envvar="SWIFT_CORS_ORIGIN",
              multiple=True, help="Allowed CORS origin (repeatable; default any).")
@click.option("--static-dir", envvar="SWIFT_STATIC_DIR", default=None,
              help="Optional directory of editor UI files to serve at /.")
def serve(
    catalog_path: str,
    store_path: str,
    host: str,
    port: int,
    tau: int,
    hint_limit: int,
    session_ttl: float,
    cors_origins: tuple[str, ...],
    static_dir: str | None,
) -> None:
    """Run the HTTP service."""
    import uvicorn

    catalog = _load_catalog_or_fail(catalog_path)
    missing = missing_standard_areas(catalog)
    if missing:
        click.echo(f"warning: catalog lacks standard categories: {', '.join(missing)}", err=True)
    config = ServerConfig(
        catalog_path=catalog_path,
        store_path=store_path,
        tau=tau,
        hint_limit=hint_limit,
        session_ttl=session_ttl,
        cors_origins=cors_origins or ("*",),
        static_dir=static_dir,
    )
    store = _open_store_or_fail(store_path, catalog)
    app = create_app(config, catalog=catalog, store=store)
    click.echo(f"serving {catalog.name} on http://{host}:{port} ({store.sign_total} signs)")
    uvicorn.run(app, host=host, port=port, log_level="warning")


@cli.command("validate-catalog")
@click.argument("path")
def validate_catalog(path: str) -> None:
    """Parse and validate a catalog document; exit non-zero on any fault."""
    catalog = _load_catalog_or_fail(path)
    click.echo(f"{catalog.name} v{catalog.version}: "
               f"{len(catalog.categories)} categories, {len(catalog)} glyphs")
    for cat in catalog.categories:
        schema = catalog.facet_schema(cat.token)
        click.echo(f"  {cat.token} ({cat.kind}): "
                   f"{len(catalog.glyphs_in_category(cat.token))} glyphs, "
                   f"{len(schema.facets)} facets")
    missing = missing_standard_areas(catalog)
    if missing:
        click.echo(f"warning: missing standard categories: {', '.join(missing)}", err=True)


@cli.command()
@_catalog_option
@_store_option
@click.argument("record_id")
@click.option("--fmt", type=click.Choice(["swt", "svg"]), default="swt", show_default=True)
@click.option("--crop", is_flag=True, help="Tighten the SVG viewBox to the drawn content.")
@click.option("--out", "out_path", default=None, help="Write to a file instead of stdout.")
def export(
    catalog_path: str,
    store_path: str,
    record_id: str,
    fmt: str,
    crop: bool,
    out_path: str | None,
) -> None:
    """Export a stored sign as notation text or SVG."""
    catalog = _load_catalog_or_fail(catalog_path)
    store = _open_store_or_fail(store_path, catalog)
    try:
        record = store.load(record_id)
    except SwiftSignError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "swt":
        from .notation import serialize_text

        body = serialize_text(record.sign) + "\n"
    else:
        body = export_svg(record.sign, catalog, crop=crop)
    if out_path is None:
        sys.stdout.write(body)
    else:
        Path(out_path).write_text(body, encoding="utf-8")
        click.echo(f"wrote {out_path}")


@cli.command()
@_catalog_option
@_store_option
@click.option("--top", default=10, show_default=True, type=int,
              help="How many co-occurring pairs to list.")
def stats(catalog_path: str, store_path: str, top: int) -> None:
    """Print corpus size and the most frequent glyph-family pairs."""
    catalog = _load_catalog_or_fail(catalog_path)
    store = _open_store_or_fail(store_path, catalog)
    click.echo(f"signs: {store.sign_total}")
    pairs = sorted(store.table.pair_counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if not pairs:
        click.echo("no co-occurring pairs yet")
        return
    click.echo("top pairs:")
    for (a, b), count in pairs[:top]:
        click.echo(f"  {a} + {b}: {count}")


def main() -> None:
    cli(auto_envvar_prefix="SWIFT")


if __name__ == "__main__":
    main()
