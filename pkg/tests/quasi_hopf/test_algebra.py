import numpy as np

from quasi_hopf.algebra import is_sparse, terms
from quasi_hopf.tensor import Tensor, kron, map_equal, unit_vector, zeros


def _pair(A):
    return kron(A.universal("i", "a"), A.universal("j", "b"))


class TestWord:
    """Words mixing legs and constant elements."""

    def test_leading_constant_multiplies_from_the_left(self, h4):
        t = _pair(h4)
        x = unit_vector(4, 2)
        expected = h4.mul(h4.attach(t, x, "c"), "c", "a", out="a")
        assert map_equal(h4.word(t, [x, "a"], "a"), expected)

    def test_trailing_constant_multiplies_from_the_right(self, h4):
        t = _pair(h4)
        g = unit_vector(4, 1)
        expected = h4.mul(h4.attach(t, g, "c"), "a", "c")
        assert map_equal(h4.word(t, ["a", g], "a"), expected)

    def test_constants_only_attach_a_new_leg(self, h2):
        t = h2.universal("i", "a")
        word = h2.word(t, [h2.alpha, h2.beta], "c")
        assert map_equal(word, h2.attach(t, h2.times(h2.alpha, h2.beta), "c"))


class TestExpand:
    """Sums over the nonzero terms of constant elements."""

    def test_sparse_matches_dense(self, h4_r1):
        A = h4_r1.algebra
        R = h4_r1.el("r1", "r2")
        assert is_sparse(R)

        def build(t, z):
            t = A.word(t, [z["r1"], "a"], "a")
            return A.word(t, ["b", z["r2"]], "b")

        dense = A.word(A.word(kron(_pair(A), R), ["r1", "a"], "a"), ["b", "r2"], "b")
        assert map_equal(A.expand(_pair(A), [R], build), dense)

    def test_dense_constant_keeps_its_legs(self, h2):
        assert not is_sparse(h2.Phi("X1", "X2", "X3"))

        def build(t, z):
            assert z["X1"] == "X1"
            t = h2.word(t, [z["X1"], "a", z["X2"]], "a")
            return h2.word(t, ["b", z["X3"]], "b")

        dense = kron(_pair(h2), h2.Phi("X1", "X2", "X3"))
        dense = h2.word(h2.word(dense, ["X1", "a", "X2"], "a"), ["b", "X3"], "b")
        assert map_equal(h2.expand(_pair(h2), [h2.Phi("X1", "X2", "X3")], build), dense)

    def test_zero_constant_gives_zero(self, h4):
        vanishing = Tensor(("r1", "r2"), zeros((4, 4)))
        assert list(terms([vanishing])) == []

        def build(t, z):
            return h4.word(h4.word(t, [z["r1"], "a"], "a"), ["b", z["r2"]], "b")

        result = h4.expand(_pair(h4), [vanishing], build)
        assert map_equal(result, _pair(h4).scale(0))

    def test_terms_carry_coefficients(self, h4_r1):
        R = h4_r1.el("r1", "r2")
        total = sum(
            (Tensor(("r1", "r2"), np.multiply.outer(v["r1"], v["r2"])).scale(c) for c, v in terms([R])),
            start=R.scale(0),
        )
        assert map_equal(total, R)


def test_product_with_constant_matches_kron(h4_r1):
    A = h4_r1.algebra
    t = _pair(A).relabel({"a": "1", "b": "2"})
    R = h4_r1.el("1", "2")
    expected = kron(t, h4_r1.el("r1", "r2"))
    expected = A.mul(A.mul(expected, "1", "r1"), "2", "r2")
    assert map_equal(A.product(("1", "2"), t, R), expected)
    flipped = A.mul(A.mul(kron(h4_r1.el("r1", "r2"), t), "r1", "1", out="1"), "r2", "2", out="2")
    assert map_equal(A.product(("1", "2"), R, t), flipped)
