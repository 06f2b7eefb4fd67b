from pathlib import Path

import pytest

from comptext.workspace import WorkspaceStore

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def workspace_dir() -> Path:
    return FIXTURES / "workspace"


@pytest.fixture(scope="session")
def tiny_workspace_dir() -> Path:
    return FIXTURES / "tiny"


@pytest.fixture(scope="session")
def lexicon_path() -> Path:
    return FIXTURES / "lexicon.tsv"


@pytest.fixture(scope="session")
def stopwords_path() -> Path:
    return FIXTURES / "stopwords.txt"


@pytest.fixture(scope="session")
def store(workspace_dir, lexicon_path, stopwords_path) -> WorkspaceStore:
    return WorkspaceStore.load(workspace_dir, lexicon_path, stopwords_path)


@pytest.fixture(scope="session")
def raw_store(workspace_dir, lexicon_path) -> WorkspaceStore:
    """Same workspace without stopword removal."""
    return WorkspaceStore.load(workspace_dir, lexicon_path)
