import pytest

from ringlab import default_catalog, parse_ring_spec


@pytest.fixture(scope="session")
def z6():
    return parse_ring_spec("Zn:6")


@pytest.fixture(scope="session")
def z4():
    return parse_ring_spec("Zn:4")


@pytest.fixture(scope="session")
def m2z2():
    return parse_ring_spec("M2:Zn:2")


@pytest.fixture(scope="session")
def m2z3():
    return parse_ring_spec("M2:Zn:3")


@pytest.fixture(scope="session")
def t2z3():
    return parse_ring_spec("T2:Zn:3")


@pytest.fixture(scope="session")
def catalog_rings():
    return {entry.spec: parse_ring_spec(entry.spec) for entry in default_catalog()}
