from __future__ import annotations

import csv
import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import cached_group, elements_of
from modsimple.errors import CapabilityError, DomainError
from modsimple.pcomplex import (
    KINDS,
    chain_census_csv,
    chain_orbits,
    p_subgroup_classes,
    reduced_euler_characteristic,
    steinberg_character,
    steinberg_nonzero,
)
from modsimple.permgrp.structure import core_p

ORACLE_CASES = [("sym:3", 2), ("sym:3", 3), ("sym:4", 2), ("sym:4", 3), ("alt:4", 2), ("alt:4", 3),
                ("dihedral:4", 2), ("quaternion", 2), ("cyclic:6", 2), ("frobenius:7,3", 3),
                ("frobenius:7,3", 7), ("alt:5", 2), ("alt:5", 5)]


def _oracle_members(G, p, kind):
    subs = oracles.p_subgroups(elements_of(G), p)
    if kind == "poset":
        return subs
    if kind == "elementary_abelian":
        return [H for H in subs if oracles.is_abelian(H)
                and all(oracles.element_order(h) in (1, p) for h in H)]
    # radical p-subgroups: H = O_p(N_G(H))
    els = elements_of(G)
    out = []
    for H in subs:
        N = oracles.normalizer(H, els)
        if oracles.core_p(N, p) == len(H):
            out.append(H)
    return out


def test_p_subgroup_class_examples():
    assert [H.order for H in p_subgroup_classes(cached_group("sym:3"), 2)] == [2]
    assert [H.order for H in p_subgroup_classes(cached_group("sym:3"), 3)] == [3]
    assert sorted(H.order for H in p_subgroup_classes(cached_group("quaternion"), 2)) == [2, 4, 4, 4, 8]
    assert sorted(H.order for H in p_subgroup_classes(cached_group("alt:5"), 2)) == [2, 4]


def test_chain_orbit_examples():
    S3 = cached_group("sym:3")
    orbits = chain_orbits(S3, 2)
    assert [(o.m, o.orbit_size, o.stabilizer_order) for o in orbits] == [(0, 1, 6), (1, 3, 2)]
    C5 = cached_group("cyclic:5")
    assert [(o.m, o.orbit_size) for o in chain_orbits(C5, 5)] == [(0, 1), (1, 1)]


@pytest.mark.parametrize("spec,p", ORACLE_CASES)
@pytest.mark.parametrize("kind", KINDS)
def test_chain_count_against_brute_force(spec, p, kind):
    G = cached_group(spec)
    total = sum(o.orbit_size for o in chain_orbits(G, p, kind))
    assert total == len(oracles.chains(_oracle_members(G, p, kind)))


@pytest.mark.parametrize("spec,p", ORACLE_CASES)
@pytest.mark.parametrize("kind", KINDS)
def test_reduced_euler_against_brute_force(spec, p, kind):
    G = cached_group(spec)
    want = oracles.reduced_euler(elements_of(G), p, _oracle_members(G, p, kind))
    assert reduced_euler_characteristic(G, p, kind) == want


@pytest.mark.parametrize("spec,p,value", [("sym:3", 2, 2), ("cyclic:5", 5, 0), ("sym:3", 3, 0),
                                          ("alt:5", 2, 4), ("alt:5", 5, 5), ("sl2:8", 2, 8)])
def test_reduced_euler_examples(spec, p, value):
    assert reduced_euler_characteristic(cached_group(spec), p) == value


def test_steinberg_s3_mod_2():
    st_ = steinberg_character(cached_group("sym:3"), 2)
    assert st_.values == (-2, 0, 1)


@pytest.mark.parametrize("spec,p", ORACLE_CASES)
def test_steinberg_against_fixed_chain_counts(spec, p):
    G = cached_group(spec)
    want = oracles.steinberg_values(elements_of(G), p)
    ch = steinberg_character(G, p)
    got = {c.representative.images: v for c, v in zip(ch.class_reps, ch.values)}
    assert got == want


@pytest.mark.parametrize("spec,p", ORACLE_CASES + [("sl2:8", 3), ("fermat_example:3", 2)])
def test_three_complexes_give_same_character(spec, p):
    G = cached_group(spec)
    vals = {steinberg_character(G, p, k).values for k in KINDS}
    assert len(vals) == 1


@pytest.mark.parametrize("spec,p", ORACLE_CASES + [("sl2:8", 7), ("fermat_example:3", 3)])
def test_identity_value_is_minus_reduced_euler(spec, p):
    G = cached_group(spec)
    assert steinberg_character(G, p).identity_value == -reduced_euler_characteristic(G, p)


@pytest.mark.parametrize("spec,p", [("sym:4", 2), ("alt:4", 2), ("dihedral:4", 2), ("cyclic:6", 3),
                                    ("sym:3", 3), ("fermat_example:3", 3)])
def test_vanishes_when_o_p_nontrivial(spec, p):
    G = cached_group(spec)
    assert core_p(G, p).order > 1
    assert steinberg_character(G, p).is_zero()


@pytest.mark.parametrize("spec,p", [("sym:3", 2), ("alt:5", 2), ("alt:5", 3), ("alt:5", 5), ("sym:5", 2),
                                    ("sl2:8", 3), ("frobenius:7,3", 3), ("sym:4", 3)])
def test_projective_when_nonzero(spec, p):
    G = cached_group(spec)
    ch = steinberg_character(G, p)
    assert not ch.is_zero()
    assert ch.vanishes_on_p_singular(p)
    assert ch.identity_value % oracles.p_part(G.order, p) == 0


@pytest.mark.parametrize("spec,p,expected", [("sym:3", 2, True), ("sym:4", 2, False), ("alt:5", 2, True),
                                             ("cyclic:5", 5, False), ("frobenius:11,5", 5, True)])
def test_steinberg_nonzero_examples(spec, p, expected):
    assert steinberg_nonzero(cached_group(spec), p) is expected


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(ORACLE_CASES + [("sl2:8", 2), ("fermat_example:3", 2)]), st.sampled_from(KINDS))
def test_orbit_stabilizer(case, kind):
    spec, p = case
    G = cached_group(spec)
    for o in chain_orbits(G, p, kind):
        assert o.orbit_size * o.stabilizer_order == G.order
        assert o.sign == (-1) ** o.m
        assert list(o.orders) == sorted(set(o.orders))


def test_census_csv_format():
    text = chain_census_csv(chain_orbits(cached_group("sym:3"), 2), "elab")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["kind", "m", "orders", "stabilizer_order", "orbit_size", "sign"]
    assert rows[1:] == [["elementary_abelian", "0", "", "6", "1", "1"],
                        ["elementary_abelian", "1", "2", "2", "3", "-1"]]


def test_unknown_kind_and_bad_prime():
    with pytest.raises(DomainError):
        chain_orbits(cached_group("sym:3"), 2, "nope")
    with pytest.raises(DomainError):
        chain_orbits(cached_group("sym:3"), 6)


def test_sylow_bound_enforced():
    with pytest.raises(CapabilityError):
        chain_orbits(cached_group("sym:5"), 2, bound=4)
