import shutil
from pathlib import Path

import pytest

from swiftsign.catalog import Catalog, load_catalog_path
from swiftsign.store import SignStore

FIXTURES = Path(__file__).parent / "fixtures"
SAMPLE_CATALOG = Path(__file__).parents[1] / "src" / "swiftsign" / "data" / "sample_catalog.swc"


@pytest.fixture(scope="session")
def fixture_cat() -> Catalog:
    return load_catalog_path(FIXTURES / "fixture_cat.swc")


@pytest.fixture(scope="session")
def sample_cat() -> Catalog:
    return load_catalog_path(SAMPLE_CATALOG)


@pytest.fixture
def corpus_store(fixture_cat, tmp_path) -> SignStore:
    """FIXTURE-CORPUS opened from a scratch copy so tests may append."""
    path = tmp_path / "corpus.swstore"
    shutil.copy(FIXTURES / "fixture_corpus.swstore", path)
    return SignStore(path, fixture_cat)
