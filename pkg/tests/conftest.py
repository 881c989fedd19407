import pytest

from contracta import enumerate_family, regular_elements, subsemigroup

_families: dict = {}
_regs: dict = {}


@pytest.fixture(scope="session")
def family():
    """Cached family enumeration shared across the whole run."""

    def get(fam, n):
        key = (fam, n)
        if key not in _families:
            _families[key] = enumerate_family(fam, n)
        return _families[key]

    return get


@pytest.fixture(scope="session")
def regular_base(family):
    """Cached Reg(family_n) wrapped as a semigroup."""

    def get(fam, n):
        key = (fam, n)
        if key not in _regs:
            s = family(fam, n)
            _regs[key] = subsemigroup(s, regular_elements(s))
        return _regs[key]

    return get
