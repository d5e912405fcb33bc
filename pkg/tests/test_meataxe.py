from __future__ import annotations

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import cached_group, gens_of
from modsimple.errors import DomainError, MalformedInputError, PreconditionError
from modsimple.gflinalg.field import GF
from modsimple.meataxe.chop import chop, endo_field_degree
from modsimple.meataxe.module import (
    GModule,
    direct_sum,
    dual,
    perm_module,
    regular_module,
    tensor,
    trivial_module,
)
from modsimple.meataxe.simples import (
    absolutely_irreducible_count,
    all_absolutely_simple_dims,
    has_defect_zero_simple,
    m_s,
    simple_census,
    splitting_degree,
)
from modsimple.permgrp import p_regular_class_count, quotient
from modsimple.permgrp.structure import core_p


def _abs_dims(records):
    out = []
    for r in records:
        out.extend([r.abs_dim] * (r.e * r.multiplicity_in_source))
    return sorted(out)


def _oracle_mats(M):
    return [a.tolist() for a in M.action]


# -- module construction --------------------------------------------------------------------


def test_perm_module_dimensions_and_validity():
    G = cached_group("sym:4")
    F = GF(3)
    assert perm_module(G, F).dim == 4
    assert trivial_module(G, F).dim == 1
    assert regular_module(cached_group("sym:3"), F).dim == 6
    M = perm_module(G, F)
    assert M.validate()
    assert tensor(M, M).dim == 16 and direct_sum(M, M).dim == 8 and dual(M).dim == 4


def test_module_shape_checked():
    with pytest.raises(MalformedInputError):
        GModule(GF(2), [np.eye(2, dtype=np.int64), np.eye(3, dtype=np.int64)])


def test_regular_module_matches_oracle_matrices():
    G = cached_group("sym:3")
    M = regular_module(G, GF(2))
    assert [a.tolist() for a in M.action] == oracles.regular_matrices(gens_of(G), G.degree)


# -- chopping -------------------------------------------------------------------------------


def test_chop_cyclic_two_regular():
    recs = chop(regular_module(cached_group("cyclic:2"), GF(2)))
    assert [(r.d, r.multiplicity_in_source) for r in recs] == [(1, 2)]


def test_chop_s3_natural_mod_2():
    recs = chop(perm_module(cached_group("sym:3"), GF(2)))
    assert sorted(r.d for r in recs) == [1, 2]


def test_chop_s3_regular_mod_3():
    recs = chop(regular_module(cached_group("sym:3"), GF(3)))
    assert sorted((r.d, r.multiplicity_in_source) for r in recs) == [(1, 3), (1, 3)]


@pytest.mark.parametrize("spec,p,kind", [("sym:3", 2, "perm"), ("sym:3", 3, "regular"), ("sym:4", 2, "perm"),
                                         ("sym:4", 3, "perm"), ("alt:4", 2, "perm"), ("alt:5", 2, "perm"),
                                         ("dihedral:4", 2, "regular"), ("cyclic:6", 2, "regular"),
                                         ("frobenius:7,3", 3, "perm"), ("sym:3", 2, "regular")])
def test_chop_against_oracle_composition_factors(spec, p, kind):
    G = cached_group(spec)
    F = GF(p)
    M = perm_module(G, F) if kind == "perm" else regular_module(G, F)
    assert _abs_dims(chop(M)) == oracles.absolute_dims(_oracle_mats(M), M.dim, p)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([("sym:4", 2), ("sym:4", 3), ("alt:5", 3), ("alt:5", 5), ("frobenius:11,5", 5)]),
       st.integers(0, 2 ** 32))
def test_chop_dimension_bookkeeping(case, seed):
    spec, p = case
    G = cached_group(spec)
    M = perm_module(G, GF(p))
    M2 = tensor(M, dual(M))
    recs = chop(M2, seed=seed)
    assert sum(r.d * r.multiplicity_in_source for r in recs) == M2.dim
    assert all(r.d == r.e * r.abs_dim for r in recs)


# -- endomorphism degree --------------------------------------------------------------------


def test_endo_degree_trivial():
    assert endo_field_degree(trivial_module(cached_group("sym:3"), GF(5))) == 1


def test_endo_degree_c3_on_gf2_squared():
    M = GModule(GF(2), [np.array([[0, 1], [1, 1]])])
    assert endo_field_degree(M) == 2
    assert oracles.commutant_dim(_oracle_mats(M), 2) == 2


def test_endo_degree_a5_four_dim_over_gf2():
    census = simple_census(cached_group("alt:5"), 2)
    four = [S for S in census.simples if S.dim == 4]
    assert sorted(S.e for S in four) == [1, 2]
    for S in four:
        assert endo_field_degree(S.module) == oracles.commutant_dim(_oracle_mats(S.module), 2)


def test_endo_degree_rejects_reducible():
    with pytest.raises(PreconditionError):
        endo_field_degree(perm_module(cached_group("sym:3"), GF(3)))


# -- simple-module census -------------------------------------------------------------------


@pytest.mark.parametrize("spec,p,dims", [("alt:5", 2, [1, 2, 2, 4]), ("sym:3", 3, [1, 1]), ("cyclic:5", 5, [1]),
                                         ("alt:5", 3, [1, 3, 3, 4]), ("alt:5", 5, [1, 3, 5]),
                                         ("sym:5", 2, [1, 4, 4]), ("sym:4", 3, [1, 1, 3, 3]),
                                         ("quaternion", 2, [1]), ("alt:4", 2, [1, 1, 1]),
                                         ("alt:4", 3, [1, 3])])
def test_absolutely_simple_dims(spec, p, dims):
    assert all_absolutely_simple_dims(cached_group(spec), p) == dims


@pytest.mark.parametrize("spec,p", [("sym:3", 2), ("sym:3", 3), ("cyclic:6", 2), ("dihedral:4", 2),
                                    ("cyclic:6", 3)])
def test_census_dimension_set_against_regular_module_oracle(spec, p):
    G = cached_group(spec)
    R = regular_module(G, GF(p))
    assert set(all_absolutely_simple_dims(G, p)) == set(oracles.absolute_dims(_oracle_mats(R), R.dim, p))


@pytest.mark.parametrize("spec,p", [("sym:4", 2), ("sym:4", 3), ("alt:5", 2), ("alt:5", 3), ("sym:5", 3),
                                    ("sl2:8", 2), ("sl2:8", 7), ("fermat_example:3", 3),
                                    ("frobenius:11,5", 11), ("direct:[sym:3],[alt:5]", 2)])
def test_count_equals_p_regular_classes(spec, p):
    G = cached_group(spec)
    assert absolutely_irreducible_count(G, p) == p_regular_class_count(G, p)
    assert simple_census(G, p).complete


@pytest.mark.parametrize("p,r", [(11, 5), (7, 3), (13, 3)])
def test_frobenius_group_dims_from_orbits(p, r):
    G = cached_group(f"frobenius:{p},{r}")
    assert all_absolutely_simple_dims(G, r) == oracles.frobenius_dims(p, r)


def test_frobenius_55_m_s():
    assert m_s(cached_group("frobenius:11,5"), 5) == 5


@pytest.mark.parametrize("q", [3, 5])
def test_fermat_example_dims_from_orbits(q):
    G = cached_group(f"fermat_example:{q}")
    got = Counter(all_absolutely_simple_dims(G, 2))
    want = Counter(oracles.fermat_dims(q))
    # each orbit of the monomial group on characters gives one simple of that size
    assert got == want


@pytest.mark.slow
def test_mersenne_example_dims_from_orbits():
    G = cached_group("mersenne_example:3")
    assert set(all_absolutely_simple_dims(G, 3)) == set(oracles.mersenne_dims(3))
    assert m_s(G, 3) == 27


def test_sl2_even_dims_binomial():
    assert all_absolutely_simple_dims(cached_group("sl2:8"), 2) == oracles.sl2_even_dims(3)
    assert all_absolutely_simple_dims(cached_group("sl2:4"), 2) == oracles.sl2_even_dims(2)


def test_splitting_degree():
    assert splitting_degree(cached_group("alt:5"), 2) == 2
    assert splitting_degree(cached_group("sym:4"), 3) == 1
    assert splitting_degree(cached_group("sl2:8"), 2) == 3


def test_defect_zero():
    assert has_defect_zero_simple(cached_group("alt:5"), 2)      # Steinberg module of dim 4
    assert has_defect_zero_simple(cached_group("alt:5"), 5)
    assert not has_defect_zero_simple(cached_group("sym:4"), 2)  # O_2 is nontrivial
    assert not has_defect_zero_simple(cached_group("alt:4"), 2)


def test_census_rejects_non_prime():
    with pytest.raises(DomainError):
        simple_census(cached_group("sym:3"), 4)


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 2 ** 64 - 1))
def test_census_independent_of_seed(seed):
    G = cached_group("sym:5")
    assert all_absolutely_simple_dims(G, 3, seed) == [1, 1, 4, 4, 6]


# -- structural consequences -----------------------------------------------------------------


@pytest.mark.parametrize("a,b,p", [("sym:3", "alt:5", 2), ("sym:3", "alt:4", 3), ("cyclic:5", "alt:5", 2),
                                   ("sym:3", "sym:3", 3)])
def test_m_s_multiplicative_on_direct_products(a, b, p):
    G = cached_group(f"direct:[{a}],[{b}]")
    assert m_s(G, p) == m_s(cached_group(a), p) * m_s(cached_group(b), p)


@pytest.mark.parametrize("big,small,p", [("sym:5", "alt:5", 2), ("sym:5", "alt:5", 3), ("sym:4", "alt:4", 3),
                                         ("sym:4", "alt:4", 2)])
def test_normal_subgroup_bounds(big, small, p):
    # restriction to a normal subgroup of index 2: every constituent has at least
    # half the dimension, and no simple of the subgroup exceeds m_s of the group
    mg, mn = m_s(cached_group(big), p), m_s(cached_group(small), p)
    assert mn <= mg <= 2 * mn


@pytest.mark.parametrize("spec,p", [("sym:4", 3), ("sym:4", 2), ("alt:4", 2), ("dihedral:4", 2)])
def test_m_s_unchanged_by_factoring_o_p(spec, p):
    G = cached_group(spec)
    Q = quotient(G, core_p(G, p))
    assert m_s(G, p) == m_s(Q, p)
