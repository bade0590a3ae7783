from __future__ import annotations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from canbasis.decomp import canonical_basis
from canbasis.hecke import hecke_dimensions
from canbasis.laurent import IntLaurent

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


def laurent_polys(max_terms: int = 6, exp_range: int = 8, coeff_range: int = 5):
    return st.dictionaries(
        st.integers(-exp_range, exp_range),
        st.integers(-coeff_range, coeff_range),
        max_size=max_terms,
    ).map(IntLaurent)


def nonzero_laurent_polys(**kw):
    return laurent_polys(**kw).filter(bool)


@pytest.fixture(scope="session")
def sys22():
    return canonical_basis((2, 2))


@pytest.fixture(scope="session")
def sys121():
    return canonical_basis((1, 2, 1))


@pytest.fixture(scope="session")
def hecke121():
    return hecke_dimensions((1, 2, 1))
