import json
import pathlib

import pytest

SCHEMA_DIR = pathlib.Path(__file__).resolve().parents[1] / "docs" / "schemas"


@pytest.fixture(scope="session")
def schemas():
    """Map schema stem -> parsed JSON Schema document from docs/schemas."""
    docs = {}
    for path in SCHEMA_DIR.glob("*.schema.json"):
        docs[path.name.removesuffix(".schema.json")] = json.loads(path.read_text())
    assert docs, "no schemas found in %s" % SCHEMA_DIR
    return docs
