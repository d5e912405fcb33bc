from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import cached_group, elements_of
from modsimple.corpus import bundled_corpus_path, load_corpus
from modsimple.errors import CapabilityError, DomainError, PreconditionError
from modsimple.gflinalg.field import GF
from modsimple.meataxe.simples import m_s
from modsimple.permgrp import core_p, minimal_normal_subgroups, normalizer, o_p_residual, quotient, sylow
from modsimple.theorem1 import (
    FAIL,
    PASS,
    UNVERIFIED,
    bound_part_i,
    bound_part_ii,
    check_hypotheses,
    count_regular_orbits,
    gl_order,
    is_mersenne,
    layer_data,
    matrix_group_order,
    orbit_counts,
    out_p_part,
    prime_class,
    sylow_glnq,
    verify_theorem1,
)

CORPUS = [(e.builder, p) for e in load_corpus(bundled_corpus_path()) for p in e.primes]


# -- prime classes --------------------------------------------------------------------------


def test_mersenne_primes():
    assert [p for p in (3, 5, 7, 11, 13, 31, 127, 8191) if is_mersenne(p)] == [3, 7, 31, 127, 8191]
    assert not is_mersenne(2)
    with pytest.raises(DomainError):
        is_mersenne(15)
    assert [prime_class(p) for p in (2, 3, 5)] == ["two", "mersenne", "generic"]


# -- bounds ---------------------------------------------------------------------------------


@pytest.mark.parametrize("spec,p,value", [("frobenius:11,5", 5, 5), ("alt:5", 5, 5),
                                          ("direct:[alt:5],[frobenius:11,5]", 5, 25), ("sym:5", 5, 5),
                                          ("sl2:8", 3, 9), ("sl2:8", 7, 7)])
def test_first_bound_examples(spec, p, value):
    assert bound_part_i(cached_group(spec), p) == value


def test_out_part_and_layer():
    # SL(2,8) without its field automorphism: no outer 3-part
    assert out_p_part(cached_group("sl2:8"), 3) == 1
    # X = 1 forces C_G(X) = G, so the bound is the full Sylow order
    d = layer_data(cached_group("frobenius:11,5"), 5)
    assert d.X.size == 1 and d.C.size == 55
    assert out_p_part(cached_group("frobenius:11,5"), 5) == 1
    # S_5 at 2: X = A_5 is self-centralizing of index 2
    assert out_p_part(cached_group("sym:5"), 2) == 2
    assert bound_part_i(cached_group("sym:5"), 2) == 4


@pytest.mark.parametrize("spec,p,value", [("fermat_example:3", 2, 4), ("alt:5", 2, 4), ("sym:3", 2, 2),
                                          ("alt:5", 3, 3), ("sym:5", 2, 4), ("sl2:8", 2, 8)])
def test_second_bound_examples(spec, p, value):
    assert bound_part_ii(cached_group(spec), p) == value


def test_second_bound_rejects_generic_prime():
    with pytest.raises(PreconditionError) as info:
        bound_part_ii(cached_group("alt:5"), 5)
    assert info.value.failing == ("p = 2 or Mersenne",)


@pytest.mark.parametrize("spec,p,failing", [("sym:4", 2, ("O_p(G) = 1",)), ("cyclic:4", 3, ("Phi(G) = 1",)),
                                            ("quaternion", 2, ("O_p(G) = 1", "Phi(G) = 1"))])
def test_hypothesis_failures(spec, p, failing):
    with pytest.raises(PreconditionError) as info:
        check_hypotheses(cached_group(spec), p)
    assert info.value.failing == failing


@pytest.mark.parametrize("spec,p", [(s, p) for s, p in CORPUS])
def test_bounds_divide_sylow_order(spec, p):
    G = cached_group(spec)
    try:
        check_hypotheses(G, p)
    except PreconditionError:
        pytest.skip("hypotheses fail")
    pp = oracles.p_part(G.order, p)
    b = bound_part_i(G, p)
    assert pp % b == 0
    if prime_class(p) != "generic":
        b2 = bound_part_ii(G, p)
        assert pp % b2 == 0
        if G.order <= 120:
            assert b2 <= oracles.max_abelian_p_order(elements_of(G), p)


# -- full verification ----------------------------------------------------------------------


@pytest.mark.parametrize("spec,p", CORPUS)
def test_every_corpus_pair_passes(spec, p):
    rep = verify_theorem1(cached_group(spec), p)
    assert rep.outcome == PASS, {k: v.status for k, v in rep.verdicts.items()}
    assert rep.verdicts["counting"].status == PASS


def test_report_contents_for_sym4_at_3():
    rep = verify_theorem1(cached_group("sym:4"), 3).to_dict()
    assert rep["m_s"] == 3 and rep["simple_dims"] == [1, 1, 3, 3]
    assert rep["flags"]["o_p_trivial"] and rep["flags"]["frattini_trivial"]
    assert rep["bound_ii"] == 3 and rep["verdicts"]["abelian_bound"]["status"] == PASS
    assert rep["euler"] == {"poset": 3, "elementary_abelian": 3, "bouc": 3}
    assert rep["outcome"] == PASS


def test_unverified_when_lattice_bound_exceeded():
    rep = verify_theorem1(cached_group("mersenne_example:3"), 3)
    assert rep.verdicts["abelian_bound"].status == UNVERIFIED
    assert rep.outcome == UNVERIFIED
    assert rep.frattini_trivial is None


def test_failed_claim_is_reported_as_fail(monkeypatch):
    import modsimple.theorem1.report as report

    monkeypatch.setattr(report, "bound_part_i", lambda G, p, bound: 10 ** 6)
    rep = report.verify_theorem1(cached_group("frobenius:11,5"), 5)
    assert rep.verdicts["out_bound"].status == FAIL and rep.outcome == FAIL


def test_non_prime_rejected():
    with pytest.raises(DomainError):
        verify_theorem1(cached_group("sym:3"), 9)


def test_trivial_group():
    rep = verify_theorem1(cached_group("cyclic:1"), 5)
    assert rep.m_s == 1 and rep.defect_zero and rep.outcome == PASS


# -- invariants of the largest simple dimension ------------------------------------------------


@pytest.mark.parametrize("spec,p", [(s, p) for s, p in CORPUS
                                    if core_p(cached_group(s), p).order > 1])
def test_reduction_by_o_p_on_corpus(spec, p):
    G = cached_group(spec)
    assert m_s(G, p) == m_s(quotient(G, core_p(G, p)), p)


@pytest.mark.parametrize("spec,p", [("sym:4", 3), ("sym:4", 2), ("alt:5", 2), ("alt:5", 3), ("sym:5", 2),
                                    ("sl2:8", 3), ("fermat_example:3", 2), ("frobenius:11,5", 5)])
def test_section_monotonicity(spec, p):
    G = cached_group(spec)
    mg = m_s(G, p)
    sections = [sylow(G, q) for q in (2, 3, 5) if G.order % q == 0]
    sections += [normalizer(G, sylow(G, p)), o_p_residual(G, p)]
    sections += [quotient(G, N) for N in minimal_normal_subgroups(G) if N.order < G.order]
    for H in sections:
        assert m_s(H, p) <= mg, H


@pytest.mark.parametrize("spec", ["sym:3", "sym:4", "cyclic:6", "alt:4", "dihedral:4", "sym:5",
                                  "fermat_example:3"])
def test_clifford_bounds(spec):
    G = cached_group(spec)
    H = o_p_residual(G, 2)
    mh, mg = m_s(H, 2), m_s(G, 2)
    assert mh <= mg <= (G.order // H.order) * mh


# -- Sylow subgroups of GL(n, q) and regular orbits ------------------------------------------


@pytest.mark.parametrize("n,q,p,order", [(2, 3, 2, 16), (3, 3, 2, 32), (4, 3, 5, 5), (3, 5, 2, 128),
                                         (6, 2, 3, 81), (4, 2, 3, 9), (4, 2, 5, 5), (2, 2, 3, 3),
                                         (2, 5, 3, 3), (3, 2, 7, 7), (1, 7, 3, 3)])
def test_sylow_of_gl_orders(n, q, p, order):
    gens = sylow_glnq(n, q, p)
    assert oracles.p_part(gl_order(n, q), p) == order
    assert matrix_group_order(gens[0].field, [g.entries for g in gens]) == order


def test_trivial_sylow_is_identity():
    gens = sylow_glnq(2, 2, 5)
    assert len(gens) == 1 and matrix_group_order(gens[0].field, [gens[0].entries]) == 1


@pytest.mark.parametrize("n,q,p,regular", [(4, 2, 5, 3), (2, 2, 3, 1), (1, 2, 3, 2), (4, 3, 5, 16)])
def test_regular_orbit_counts(n, q, p, regular):
    assert count_regular_orbits(sylow_glnq(n, q, p)) == regular


def test_regular_orbit_counts_against_brute_force():
    gens = sylow_glnq(2, 3, 2)
    mats = [g.entries.tolist() for g in gens]
    pts = [(a, b) for a in range(3) for b in range(3)]
    maps = [lambda v, M=M: tuple(int(x) for x in oracles.vecmat(v, M, 3)) for M in mats]
    sizes = oracles.orbit_sizes(pts, maps)
    order, regular, got = orbit_counts(GF(3), [g.entries for g in gens], 2)
    assert got == sizes and regular == sizes.count(order)


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([(2, 5), (2, 7), (3, 5), (4, 5), (2, 11), (3, 7), (4, 7), (2, 13)]),
       st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
def test_non_mersenne_odd_prime_has_two_regular_orbits(nq, q):
    n, _ = nq
    p = nq[1]
    if q % p == 0 or q ** n > 2 ** 16 or is_mersenne(p):
        return
    gens = sylow_glnq(n, q, p)
    order, regular, sizes = orbit_counts(gens[0].field, [g.entries for g in gens], n)
    assert sum(sizes) == q ** n and all(order % s == 0 for s in sizes)
    if order > 1:
        assert regular >= 2


def test_regular_orbit_domain_and_capability_errors():
    with pytest.raises(DomainError):
        sylow_glnq(2, 4, 2)
    with pytest.raises(DomainError):
        sylow_glnq(2, 3, 4)
    with pytest.raises(CapabilityError):
        sylow_glnq(30, 2, 3)
