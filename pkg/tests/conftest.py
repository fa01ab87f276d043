"""Shared fixtures: small reference point sets reused across test modules."""

import pytest

from evnets import corpus


@pytest.fixture(scope="session")
def ham23():
    """Base-2, 8-point two-dimensional reference set (digit-reversal pairing)."""
    return corpus.hammersley(2, 3)


@pytest.fixture(scope="session")
def ham32():
    return corpus.hammersley(3, 2)


@pytest.fixture(scope="session")
def faure333():
    return corpus.faure(3, 3, 3)
