import pytest

from monoidlab import build_finite, load_system, make_hom, parse_word


@pytest.fixture(scope="session")
def jinf():
    return load_system("j-inf")


@pytest.fixture(scope="session")
def dinf():
    return load_system("d-inf")


@pytest.fixture(scope="session")
def kinf():
    return load_system("k-inf")


@pytest.fixture(scope="session")
def tsys():
    return load_system("t")


@pytest.fixture(scope="session")
def i2c3():
    return load_system("i2c3")


@pytest.fixture(scope="session")
def c2sys():
    return load_system("c2")


@pytest.fixture(scope="session")
def t_monoid(tsys):
    return build_finite(tsys)


@pytest.fixture(scope="session")
def c2_monoid(c2sys):
    return build_finite(c2sys)


@pytest.fixture(scope="session")
def k_to_t(kinf, t_monoid):
    gens = t_monoid.source.generators
    gmap = {"e": parse_word(gens, "f"), "b": parse_word(gens, "g")}
    return make_hom(kinf, gmap, t_monoid)


@pytest.fixture(scope="session")
def d_to_c2(dinf, c2_monoid):
    gens = c2_monoid.source.generators
    c = parse_word(gens, "c")
    return make_hom(dinf, {"a": c, "b": c}, c2_monoid)
