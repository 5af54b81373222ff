"""Module oracle: explicit modules, relations, exact tensor products."""

import itertools
from fractions import Fraction

import pytest

from quiverdias.families import interval_support, n_support, regular_support, s_support
from quiverdias.k0 import K0Vector
from quiverdias.oracle import (
    FieldConfig,
    check_relations,
    dimension_vector,
    indicator_module,
    is_prime,
    iso_to_standard,
    oracle_associativity_check,
    oracle_commutativity_check,
    oracle_nakayama_gamma_check,
    oracle_nakayama_mu_check,
    oracle_unit_check,
    standard_module,
    tensor_over,
)
from quiverdias.supports import (
    OP,
    SUCCESSOR,
    Axis,
    Shape,
    contract,
    fiber_reversal,
    make_support,
    validate_standard,
)

PRIME_CFG = FieldConfig()
RAT_CFG = FieldConfig("rational")


# --- field configuration -----------------------------------------------------


def test_default_modulus_is_prime():
    assert is_prime(32003)
    assert FieldConfig().q == 32003


def test_composite_modulus_rejected():
    with pytest.raises(ValueError, match="not prime"):
        FieldConfig("prime", 32004)


def test_bad_kind_rejected():
    with pytest.raises(ValueError, match="kind"):
        FieldConfig("complex")


# --- standard_module ---------------------------------------------------------


def test_standard_module_of_triangle():
    mod = standard_module(n_support(2), PRIME_CFG)
    assert [mod.dim(p) for p in mod.shape.iter_points()] == [1, 0, 1, 1]
    # exactly the two arrows inside the support, both identity
    assert sorted(mod.maps) == [((1, 1), 0), ((2, 1), 1)]
    assert all(mat == [[1]] for mat in mod.maps.values())


def test_standard_module_of_simple():
    mod = standard_module(interval_support(4, "simple", 2), PRIME_CFG)
    assert mod.total_dim() == 1
    assert mod.maps == {}


def test_standard_module_rejects_broken_square():
    bad = make_support(Shape((Axis(2), Axis(2))), [(1, 1), (2, 1), (2, 2)])
    with pytest.raises(ValueError, match="not standard"):
        standard_module(bad, PRIME_CFG)


# --- check_relations ----------------------------------------------------------


def test_standard_modules_satisfy_relations():
    for s in [n_support(3), s_support(3, 2, 2), regular_support(4)]:
        assert check_relations(standard_module(s, PRIME_CFG)) == []


def test_scaled_square_violates_relations():
    full = make_support(Shape((Axis(2), Axis(2))), list(itertools.product((1, 2), (1, 2))))
    mod = indicator_module(full, PRIME_CFG)
    mod.maps[((1, 1), 0)] = [[2]]
    violations = check_relations(mod)
    assert len(violations) == 1
    assert violations[0].base == (1, 1)


def test_validate_standard_agrees_with_relations_exhaustively():
    # every subset of every small box, over every polarity combination
    shapes = [
        Shape((Axis(2), Axis(2))),
        Shape((Axis(2, OP), Axis(2))),
        Shape((Axis(2), Axis(2, OP))),
        Shape((Axis(2, OP), Axis(2, OP))),
        Shape((Axis(3, OP), Axis(2))),
        Shape((Axis(2), Axis(2), Axis(2))),
        Shape((Axis(2, OP), Axis(2), Axis(2))),
    ]
    for shape in shapes:
        box = list(shape.iter_points())
        for r in range(len(box) + 1):
            for sub in itertools.combinations(box, r):
                s = make_support(shape, sub)
                combinatorial = not validate_standard(s)
                linear = not check_relations(indicator_module(s, PRIME_CFG))
                assert combinatorial == linear, (shape, sub)


# --- tensor_over ---------------------------------------------------------------


def test_tensor_unit_law():
    s = s_support(2, 1, 2)
    tens = tensor_over(
        standard_module(regular_support(3), PRIME_CFG), 1, standard_module(s, PRIME_CFG), 0
    )
    assert dimension_vector(tens) == dimension_vector(standard_module(s, PRIME_CFG))
    assert iso_to_standard(tens, s)
    assert check_relations(tens) == []


def test_tensor_projectives_match_contract():
    s = s_support(2, 1, 2)
    mod_s = standard_module(s, PRIME_CFG)
    for j in (1, 2, 3):
        pj = interval_support(3, "projective", j)
        tens = tensor_over(standard_module(pj, PRIME_CFG), 0, mod_s, 0)
        predicted = contract(pj, 0, s, 0)
        assert iso_to_standard(tens, predicted)
        assert check_relations(tens) == []


def test_tensor_with_nakayama_triangle_is_reversal():
    s = s_support(2, 1, 2)
    tens = tensor_over(
        standard_module(n_support(3), PRIME_CFG), 1, standard_module(s, PRIME_CFG), 0
    )
    predicted = fiber_reversal(s, 0, SUCCESSOR)
    assert iso_to_standard(tens, predicted)
    assert predicted.size == 7


def test_tensor_with_interior_contraction_axes():
    # the op axis of the right factor sits in the middle, not in front
    from quiverdias.supports import permute_axes

    right = permute_axes(s_support(2, 1, 2), (1, 0, 2))  # shape [2, 3-op, 2]
    for j in (1, 2, 3):
        pj = interval_support(3, "projective", j)
        tens = tensor_over(
            standard_module(pj, PRIME_CFG), 0, standard_module(right, PRIME_CFG), 1
        )
        predicted = contract(pj, 0, right, 1)
        assert iso_to_standard(tens, predicted)
        assert check_relations(tens) == []


def test_tensor_length_mismatch():
    with pytest.raises(ValueError, match="length"):
        tensor_over(
            standard_module(regular_support(2), PRIME_CFG),
            1,
            standard_module(s_support(2, 1, 2), PRIME_CFG),
            0,
        )


def test_tensor_field_mismatch():
    with pytest.raises(ValueError, match="field"):
        tensor_over(
            standard_module(regular_support(3), PRIME_CFG),
            1,
            standard_module(s_support(2, 1, 2), RAT_CFG),
            0,
        )


def test_tensor_polarity_checks():
    with pytest.raises(ValueError, match="plain"):
        tensor_over(
            standard_module(n_support(3), PRIME_CFG),
            0,
            standard_module(s_support(2, 1, 2), PRIME_CFG),
            0,
        )


# --- dimension_vector -----------------------------------------------------------


def test_dimension_vector_of_projective():
    mod = standard_module(interval_support(5, "projective", 2), PRIME_CFG)
    assert dimension_vector(mod) == K0Vector((5,), [0, 1, 1, 1, 1])


def test_dimension_vector_is_indicator():
    s = s_support(2, 2, 2)
    vec = dimension_vector(standard_module(s, PRIME_CFG))
    points = list(s.shape.iter_points())
    assert [int(v) for v in vec.values] == [1 if p in s.point_set else 0 for p in points]


# --- iso_to_standard -------------------------------------------------------------


def test_iso_accepts_standard_module():
    s = s_support(2, 1, 2)
    assert iso_to_standard(standard_module(s, PRIME_CFG), s)


def test_iso_rejects_zeroed_arrow():
    s = interval_support(3, "projective", 1)
    mod = standard_module(s, PRIME_CFG)
    del mod.maps[((2,), 0)]
    assert not iso_to_standard(mod, s)


def test_iso_accepts_rescalable_scalars():
    s = interval_support(3, "projective", 1)
    mod = standard_module(s, RAT_CFG)
    mod.maps[((1,), 0)] = [[Fraction(2)]]
    mod.maps[((2,), 0)] = [[Fraction(3, 7)]]
    assert iso_to_standard(mod, s)


def test_iso_rejects_inconsistent_square():
    full = make_support(Shape((Axis(2), Axis(2))), list(itertools.product((1, 2), (1, 2))))
    mod = indicator_module(full, PRIME_CFG)
    mod.maps[((1, 1), 0)] = [[2]]  # one scaled edge in a commuting square
    assert not iso_to_standard(mod, full)


def test_iso_rejects_wrong_dimensions():
    s = s_support(2, 1, 2)
    mod = standard_module(s, PRIME_CFG)
    assert not iso_to_standard(mod, n_support(3))
    assert not iso_to_standard(mod, s_support(2, 2, 2))


# --- packaged oracle cross-checks -------------------------------------------------


@pytest.mark.parametrize("cfg", [PRIME_CFG, RAT_CFG], ids=["prime", "rational"])
def test_oracle_check_functions(cfg):
    assert oracle_commutativity_check(2, 2, 2, 1, 2, cfg).passed
    assert oracle_associativity_check(2, 2, 2, 1, 1, cfg).passed
    assert oracle_nakayama_gamma_check(2, 2, 1, cfg).passed
    assert oracle_nakayama_mu_check(2, 2, 2, cfg).passed
    assert oracle_unit_check(3, 2, 2, cfg).passed


def test_oracle_results_field_independent():
    for m, n, i in [(2, 2, 1), (3, 1, 2), (2, 3, 2)]:
        a = oracle_nakayama_gamma_check(m, n, i, PRIME_CFG)
        b = oracle_nakayama_gamma_check(m, n, i, RAT_CFG)
        assert a.passed and b.passed
        assert (a.left_size, a.right_size) == (b.left_size, b.right_size)


def test_oracle_nakayama_mu_needs_inner_slot():
    with pytest.raises(ValueError, match="i >= 2"):
        oracle_nakayama_mu_check(2, 2, 1, PRIME_CFG)
