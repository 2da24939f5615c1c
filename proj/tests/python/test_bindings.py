import pytest

import tiltglue


@pytest.fixture(scope="module")
def lam():
    return tiltglue.load_universe("example5/lambda.uni")


@pytest.fixture(scope="module")
def lam2():
    return tiltglue.load_universe("example5/lambda2.uni")


def test_universe_shape(lam):
    assert len(lam) == 15
    assert lam.algebra.dimension == 11
    assert lam.algebra.relation_count == 2
    # Total dimension of Λ = sum over the indecomposable projectives.
    proj = ["(P(1)|0)", "(S(2)|0)", "(P(1)|P(3))", "(S(2)|P(4))", "(0|P(5))"]
    assert sum(lam.member(p).dimension for p in proj) == 11


@pytest.mark.parametrize("id_, expected", [
    ("5-2", {"(S(2)|0)", "(S(2)|P(4))", "(P(1)|0)", "(P(1)|P(3))", "(S(1)|S(3))"}),
    ("5-1", {"(0|P(5))", "(S(1)|0)", "(P(1)|P(3))", "(P(1)|P(4))", "(P(1)|0)"}),
])
def test_reproduce(id_, expected):
    rp = tiltglue.reproduce(id_)
    assert rp["match"]
    assert rp["error"] is None
    assert set(rp["members"]) == expected
    assert len(rp["members"]) == 5
    assert rp["n2"] == 2


def test_reproduce_other_prime_and_seed():
    a = tiltglue.reproduce("5-2")
    b = tiltglue.reproduce("5-2", seed=2, prime=32003)
    assert a["summary"] == b["summary"]


def test_functor_images():
    images = tiltglue.functor_images("example5/lambda.uni", "example5/lambda2.uni", ["1", "2"])
    assert images["j_!P(3)"] == ["(P(1)|P(3))"]
    assert images["j_!P(4)"] == ["(S(2)|P(4))"]
    assert images["j_!S(3)"] == ["(S(1)|S(3))"]


def test_tilting_checks(lam2):
    t3 = lam2.sum(["P(3)", "P(4)", "S(3)"])
    assert tiltglue.verify_tilting(t3, 2)["accepted"]
    low = tiltglue.verify_tilting(t3, 1)
    assert not low["accepted"]
    assert low["failed_axiom"] == "P1"
    assert tiltglue.verify_cotilting(lam2.sum(["P(3)", "P(4)", "P(5)"]), 2)["accepted"]


def test_ext_and_dimensions(lam2):
    s3 = lam2.member("S(3)")
    s4 = lam2.member("S(4)")
    assert tiltglue.ext_dim(s3, s4) == 1
    assert tiltglue.ext_dim_sigma(s3, s4) == 1
    assert tiltglue.projective_dimension(s3) == 2
    assert tiltglue.injective_dimension(lam2.member("P(5)")) == 2


def test_decompose_round_trip(lam):
    m = lam.sum(["(P(1)|P(3))", "(S(1)|S(3))", "(P(1)|P(3))"])
    parts = tiltglue.decompose(m, seed=1)
    assert sorted(p.dimension for p in parts) == [2, 4, 4]
    assert sorted(lam.identify_summands(m)) == sorted(["(P(1)|P(3))", "(P(1)|P(3))", "(S(1)|S(3))"])
    d = tiltglue.dualize(lam.member("(P(1)|P(3))"))
    assert d.dims == [1, 1, 1, 1, 0]


def test_parse_round_trip(lam):
    text = lam.member("(S(2)|P(4))").to_text("x")
    back = tiltglue.parse_module(text, lam.algebra)
    assert tiltglue.is_isomorphic(back, lam.member("(S(2)|P(4))"))


def test_errors_carry_codes():
    bad = "algebra x\nfield 101\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation 1*ab = 0\n"
    with pytest.raises(tiltglue.Error, match="PARSE_ERROR"):
        tiltglue.parse_algebra(bad)
    with pytest.raises(tiltglue.Error):
        tiltglue.load_universe("example5/nope.uni")
