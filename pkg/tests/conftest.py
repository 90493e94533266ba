import pathlib

import pytest

from rlat import enumerate_up_to_iso
from rlat.fileformat import load_algebra

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixdir():
    return FIXTURES


@pytest.fixture(scope="session")
def a1():
    return load_algebra(str(FIXTURES / "a1.rlat"))


@pytest.fixture(scope="session")
def corpus6():
    return enumerate_up_to_iso(6)


@pytest.fixture(scope="session")
def sample_spec():
    from rlat.fileformat import build_spec, parse_gluing
    text = (FIXTURES / "sample.gspec").read_text(encoding="utf-8")
    sf = parse_gluing(text)
    lower = load_algebra(str(FIXTURES / sf.lower_ref))
    upper = load_algebra(str(FIXTURES / sf.upper_ref))
    return build_spec(sf, lower, upper)


@pytest.fixture(scope="session")
def naive4():
    from oracles import naive_enumerate
    return naive_enumerate(4)
