import pytest

from quasi_hopf.instances import (
    build_instance,
    group_algebra_z2,
    h2_quasi,
    r_h4,
    r_trivial,
    r_z2,
    sweedler_h4,
    trivial_field_algebra,
)


@pytest.fixture
def k():
    return trivial_field_algebra()


@pytest.fixture
def kz2():
    return group_algebra_z2()


@pytest.fixture
def h2():
    return h2_quasi()


@pytest.fixture
def h4():
    return sweedler_h4()


@pytest.fixture
def kz2_trivial_r(kz2):
    return r_trivial(kz2)


@pytest.fixture
def kz2_rg(kz2):
    return r_z2(kz2)


@pytest.fixture
def h4_r0(h4):
    return r_h4(h4, 0)


@pytest.fixture
def h4_r1(h4):
    return r_h4(h4, 1)


@pytest.fixture
def kz2_instance():
    return build_instance("kz2", validate=False)


@pytest.fixture
def kz2_rg_instance():
    return build_instance("kz2_rg", validate=False)
