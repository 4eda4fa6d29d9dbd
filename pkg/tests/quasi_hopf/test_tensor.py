from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasi_hopf.exceptions import ShapeError
from quasi_hopf.tensor import (
    LinearMap,
    Tensor,
    as_exact,
    contract,
    element,
    embed,
    first_difference,
    identity,
    identity_matrix,
    kron,
    map_equal,
    permute,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def vectors(n):
    return st.lists(fractions, min_size=n, max_size=n)


class TestTensor:
    """Labeled tensors."""

    def test_entries_are_fractions(self):
        t = element([1, "1/2", 3], "a")
        assert all(isinstance(x, Fraction) for x in t.flat())
        assert t.flat()[1] == Fraction(1, 2)

    def test_data_is_read_only(self):
        t = element([1, 2], "a")
        with pytest.raises(ValueError):
            t.data[0] = 5

    def test_duplicate_legs_rejected(self):
        with pytest.raises(ShapeError, match="duplicate"):
            Tensor(("a", "a"), as_exact(np.zeros((2, 2))))

    def test_axis_count_must_match_legs(self):
        with pytest.raises(ShapeError):
            Tensor(("a",), as_exact(np.zeros((2, 2))))

    def test_order_transposes(self):
        t = Tensor(("a", "b"), as_exact([[1, 2], [3, 4]]))
        u = t.order(("b", "a"))
        assert u.legs == ("b", "a")
        assert u.data[0, 1] == 3

    def test_addition_aligns_legs(self):
        t = Tensor(("a", "b"), as_exact([[1, 2], [3, 4]]))
        s = t + t.order(("b", "a"))
        assert map_equal(s, t.scale(2))

    def test_addition_with_other_legs_fails(self):
        with pytest.raises(ShapeError, match="leg signatures"):
            element([1, 2], "a") + element([1, 2], "b")

    def test_relabel_unknown_leg(self):
        with pytest.raises(ShapeError, match="unknown leg"):
            element([1, 2], "a").relabel(z="y")

    def test_item_requires_scalar(self):
        with pytest.raises(ShapeError):
            element([1], "a").item()
        assert contract(element([1, 2], "a"), element([3, 4], "b"), [("a", "b")]).item() == 11

    def test_nonzero_and_is_zero(self):
        t = element([0, "2/3", 0], "a")
        assert list(t.nonzero()) == [((1,), Fraction(2, 3))]
        assert not t.is_zero()
        assert (t - t).is_zero()


class TestContractions:
    """contract, kron, permute and embed."""

    def test_contract_is_matrix_product(self):
        a = Tensor(("i", "j"), as_exact([[1, 2], [0, 1]]))
        b = Tensor(("j", "k"), as_exact([[1, 0], [3, 1]]))
        c = contract(a, b, [("j", "j")])
        assert c.legs == ("i", "k")
        assert c.data.tolist() == [[7, 2], [3, 1]]

    def test_contract_dimension_mismatch(self):
        with pytest.raises(ShapeError, match="cannot contract"):
            contract(element([1, 2], "a"), element([1, 2, 3], "b"), [("a", "b")])

    def test_kron_concatenates_legs(self):
        t = kron(element([1, 2], "a"), element([1, 0, 1], "b"))
        assert t.legs == ("a", "b")
        assert t.shape == (2, 3)
        assert t.data[1, 2] == 2

    def test_kron_of_nothing_is_one(self):
        assert kron().item() == 1

    def test_permute_moves_factors(self):
        x = element([1, 0], "1")
        y = element([0, 1], "2")
        z = element([1, 1], "3")
        t = permute(kron(x, y, z), (3, 1, 2))
        assert map_equal(t, kron(z.relabel({"3": "1"}), x.relabel({"1": "2"}), y.relabel({"2": "3"})))

    def test_permute_rejects_non_permutation(self):
        with pytest.raises(ShapeError):
            permute(kron(element([1], "1"), element([1], "2")), (1, 1))

    def test_embed_places_unit(self):
        unit = as_exact([1, 0])
        R = Tensor(("a", "b"), as_exact([[1, 2], [3, 4]]))
        R13 = embed(R, (1, 3), ("1", "2", "3"), unit)
        assert R13.shape == (2, 2, 2)
        assert R13.data[1, 0, 0] == 3
        assert R13.data[1, 1, 0] == 0

    @given(vectors(2), vectors(3))
    def test_kron_is_bilinear(self, u, v):
        left = kron(element(u, "a"), element(v, "b")).scale(3)
        right = kron(element(u, "a").scale(3), element(v, "b"))
        assert map_equal(left, right)


class TestLinearMap:
    """Positional maps and composition."""

    def test_matrix_rows_are_outputs(self):
        f = LinearMap(as_exact([[1, 2, 3], [4, 5, 6]]), 1)
        assert f.in_dims == (2,)
        assert f.out_dims == (3,)
        assert f.matrix().shape == (3, 2)
        assert f.matrix()[2, 1] == 6

    def test_from_matrix_inverts_matrix(self):
        m = as_exact([[1, 2], [3, 4]])
        f = LinearMap.from_matrix(m, (2,), (2,))
        assert map_equal(f.matrix(), m)

    def test_compose_applies_right_first(self):
        f = LinearMap.from_matrix(as_exact([[0, 1], [1, 0]]), (2,), (2,))
        g = LinearMap.from_matrix(as_exact([[2, 0], [0, 3]]), (2,), (2,))
        v = as_exact([1, 0])
        assert (f @ g).apply(v).tolist() == f.apply(g.apply(v)).tolist()

    def test_compose_dimension_mismatch(self):
        f = LinearMap.identity((2,))
        g = LinearMap.identity((3,))
        with pytest.raises(ShapeError, match="cannot compose"):
            f @ g

    def test_tensor_of_identities(self):
        assert map_equal(LinearMap.identity((2,)).tensor(LinearMap.identity((3,))), LinearMap.identity((2, 3)))

    def test_permute_outputs_swaps(self):
        swap = LinearMap.identity((2, 2)).permute_outputs((2, 1))
        v = np.multiply.outer(as_exact([1, 0]), as_exact([0, 1]))
        assert swap.apply(v)[1, 0] == 1

    def test_transpose_twice(self):
        f = LinearMap(as_exact([[1, 2, 3], [4, 5, 6]]), 1)
        assert map_equal(f.transpose().transpose(), f)

    def test_reshape_rejects_size_change(self):
        with pytest.raises(ShapeError):
            LinearMap.identity((2, 2)).reshape((3,), (4,))


class TestMapEqual:
    """Exact comparison with witnesses."""

    def test_equal(self):
        assert map_equal(element([1, 2], "a"), element([1, 2], "a"))

    def test_first_difference_is_lexicographic(self):
        lhs = as_exact([[0, 1], [1, 0]])
        rhs = as_exact([[0, 0], [0, 0]])
        assert first_difference(lhs, rhs) == (0, 1)

    def test_witness(self):
        c = map_equal(identity("i", "o", 2), Tensor(("i", "o"), as_exact([[1, 0], [0, 2]])))
        assert not c
        assert c.index == (1, 1)
        assert (c.lhs, c.rhs) == (1, 2)
        assert c.legs == ("i", "o")

    def test_signature_mismatch(self):
        with pytest.raises(ShapeError):
            map_equal(LinearMap.identity((2,)), LinearMap.identity((3,)))

    def test_tiny_perturbation_is_caught(self):
        bumped = identity_matrix(2)
        bumped[0, 0] += Fraction(1, 10**9)
        c = map_equal(LinearMap.identity((2,)), LinearMap(bumped, 1))
        assert not c
        assert c.index == (0, 0)
        assert c.rhs == 1 + Fraction(1, 10**9)


class TestProperties:
    """Algebraic laws of the exact layer."""

    @given(fractions, fractions, fractions)
    def test_scalars_form_a_field(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a * (1 / a) == 1

    @given(vectors(2), vectors(3), vectors(3))
    def test_contract_commutes_with_kron(self, a, b, c):
        ta, tb, tc = element(a, "a"), element(b, "b"), element(c, "c")
        left = contract(kron(ta, tb), tc, [("b", "c")])
        right = kron(ta, contract(tb, tc, [("b", "c")]))
        assert map_equal(left, right)

    @pytest.mark.parametrize("sigma", [(1, 2, 3), (2, 1, 3), (3, 1, 2), (2, 3, 1), (3, 2, 1)])
    def test_permute_inverse(self, sigma):
        t = Tensor(("1", "2", "3"), as_exact(np.arange(24).reshape(2, 3, 4)))
        inverse = tuple(sigma.index(k) + 1 for k in range(1, 4))
        assert map_equal(permute(permute(t, sigma), inverse), t)


def test_comultiplication_of_group_like(kz2):
    delta = Tensor(("i", "a", "b"), kz2.comult)
    t = contract(delta, element([0, 1], "x"), [("i", "x")])
    assert map_equal(t, kron(element([0, 1], "a"), element([0, 1], "b")))


def test_reassociator_reversal_symmetry(h2):
    phi = element(h2.phi, "1", "2", "3")
    assert map_equal(permute(phi, (3, 2, 1)), phi)


def test_kron_of_alpha_and_beta(h2):
    t = kron(element(h2.alpha, "1"), element(h2.beta, "2"))
    assert t.data.tolist() == [[0, 0], [1, 0]]


def test_dot_product():
    t = element([Fraction(1, 2), Fraction(1, 3)], "a")
    assert contract(t, t.relabel(a="b"), [("a", "b")]).item() == Fraction(13, 36)
