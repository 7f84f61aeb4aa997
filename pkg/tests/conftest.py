import time

import pytest

from nilspec.corpus import CorpusConfig
from nilspec.verify import run_suite


@pytest.fixture(scope="session")
def full_suite():
    """The default-corpus verification run, shared by the acceptance tests."""
    t0 = time.time()
    report = run_suite(CorpusConfig())
    elapsed = time.time() - t0
    return report, elapsed
