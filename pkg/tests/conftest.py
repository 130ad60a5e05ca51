from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def proof_files() -> list[Path]:
    return sorted((CORPUS / "proofs").glob("*.json"))


@pytest.fixture(scope="session")
def mistake_manifest() -> list[dict]:
    import json

    return json.loads((CORPUS / "mistakes" / "manifest.json").read_text("utf-8"))
