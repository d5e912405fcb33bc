"""Acceptance suite: one or more tests per criterion, tagged with ``criterion(n)``.

The terminal summary prints one PASS/FAIL line per criterion.  Timed criteria
build their groups afresh so the clock includes every computation.
"""

from __future__ import annotations

import time

import pytest

import oracles
from conftest import cached_group
from modsimple.builders import build
from modsimple.corpus import bundled_corpus_path, load_corpus
from modsimple.meataxe.simples import all_absolutely_simple_dims, m_s
from modsimple.pcomplex import KINDS, reduced_euler_characteristic, steinberg_character
from modsimple.permgrp import core_p, o_p_residual, p_regular_class_count, quotient, sylow
from modsimple.permgrp.structure import is_p_solvable
from modsimple.permgrp.subgroups import p_part
from modsimple.theorem1 import PASS, bound_part_i, count_regular_orbits, layer_data, sylow_glnq, verify_theorem1

CORPUS = [(e.name, e.builder, p) for e in load_corpus(bundled_corpus_path()) for p in e.primes]
IDS = [f"{n}@{p}" for n, _, p in CORPUS]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


@pytest.mark.criterion(1)
def test_c01_sl2_4_at_2():
    def work():
        G = build("sl2:4")
        return G, all_absolutely_simple_dims(G, 2)

    (G, dims), secs = _timed(work)
    assert G.order == 60
    assert dims == [1, 2, 2, 4]
    assert max(dims) == 4 == p_part(G.order, 2)
    assert secs < 5, secs


@pytest.mark.criterion(1)
@pytest.mark.slow
def test_c01_sl2_8_at_2():
    G = build("sl2:8")
    dims = all_absolutely_simple_dims(G, 2)
    assert dims == [1, 2, 2, 2, 4, 4, 4, 8]
    assert m_s(G, 2) == 8


@pytest.mark.criterion(2)
def test_c02_fermat_3_at_2():
    def work():
        G = build("fermat_example:3")
        return G, verify_theorem1(G, 2)

    (G, rep), secs = _timed(work)
    assert G.order == 72
    assert rep.m_s == 4
    assert sylow(G, 2).order == 8
    assert core_p(G, 3).order == 9
    assert rep.verdicts["abelian_bound"].status == PASS and rep.bound_ii == 4
    assert secs < 30, secs


@pytest.mark.criterion(3)
def test_c03_fermat_5_at_2():
    def work():
        G = build("fermat_example:5")
        return G, m_s(G, 2)

    (G, value), secs = _timed(work)
    assert G.order == 800
    P = sylow(G, 2).order
    assert value == 16 == P // 2
    assert secs < 180, secs


@pytest.mark.criterion(3)
@pytest.mark.slow
def test_c03_mersenne_3_at_3():
    G = build("mersenne_example:3")
    assert G.order == 5184
    assert m_s(G, 3) == 27
    rep = verify_theorem1(G, 3, bound=6000)
    assert rep.outcome == PASS and rep.bound_ii == 27


VANISHING = [c for c in CORPUS if core_p(cached_group(c[1]), c[2]).order > 1]


def test_vanishing_list_covers_required_pairs():
    got = {(b, p) for _, b, p in VANISHING}
    assert {("sym:3", 3), ("sym:4", 2), ("cyclic:5", 5), ("dihedral:4", 2)} <= got


@pytest.mark.criterion(4)
@pytest.mark.parametrize("name,builder,p", VANISHING, ids=[f"{n}@{p}" for n, _, p in VANISHING])
def test_c04_steinberg_vanishing(name, builder, p):
    assert steinberg_character(cached_group(builder), p).is_zero()


@pytest.mark.criterion(4)
def test_c04_timing():
    def work():
        for _, b, p in VANISHING:
            assert steinberg_character(build(b), p).is_zero()

    _, secs = _timed(work)
    assert secs < 10, secs


@pytest.mark.criterion(5)
def test_c05_complex_agreement():
    def work():
        out = []
        for spec, p in [("sym:4", 2), ("sym:4", 3), ("alt:5", 2), ("alt:5", 3), ("alt:5", 5), ("sym:5", 2)]:
            G = build(spec)
            out.append([steinberg_character(G, p, k).values for k in KINDS])
        return out

    values, secs = _timed(work)
    for row in values:
        assert row[0] == row[1] == row[2]
    assert secs < 120, secs


NONZERO = [c for c in CORPUS if not steinberg_character(cached_group(c[1]), c[2]).is_zero()]


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name,builder,p", NONZERO, ids=[f"{n}@{p}" for n, _, p in NONZERO])
def test_c06_projectivity(name, builder, p):
    G = cached_group(builder)
    ch = steinberg_character(G, p)
    assert ch.vanishes_on_p_singular(p)
    assert ch.identity_value % p_part(G.order, p) == 0


SOLVABLE = [c for c in CORPUS if is_p_solvable(cached_group(c[1]), c[2])
            and core_p(cached_group(c[1]), c[2]).order == 1]


@pytest.mark.criterion(7)
@pytest.mark.parametrize("name,builder,p", SOLVABLE, ids=[f"{n}@{p}" for n, _, p in SOLVABLE])
def test_c07_euler_nonzero(name, builder, p):
    assert reduced_euler_characteristic(cached_group(builder), p) != 0


@pytest.mark.criterion(8)
@pytest.mark.parametrize("spec,expected", [("frobenius:11,5", 5), ("alt:5", 5),
                                           ("direct:[alt:5],[frobenius:11,5]", 25)])
def test_c08_first_bound(spec, expected):
    G = cached_group(spec)
    b = bound_part_i(G, 5)
    assert b == expected
    if layer_data(G, 5).X.size == 1:
        assert b == p_part(G.order, 5)
    rep = verify_theorem1(G, 5)
    assert rep.m_s >= b
    assert rep.verdicts["out_bound"].status == PASS


@pytest.mark.criterion(9)
@pytest.mark.parametrize("name,builder,p", CORPUS, ids=IDS)
def test_c09_counting(name, builder, p):
    G = cached_group(builder)
    count = len(all_absolutely_simple_dims(G, p))
    assert count == p_regular_class_count(G, p)
    if G.order <= 200:
        assert count == oracles.p_regular_class_count({tuple(int(x) for x in r) for r in G.elements}, p)


@pytest.mark.criterion(10)
def test_c10_reduction_as_stated():
    # m_s(S_4, 3) = m_s(S_4/V_4, 3) = m_s(S_3, 3)
    S4 = cached_group("sym:4")
    V4 = core_p(S4, 2)
    assert V4.order == 4
    values = (m_s(S4, 3), m_s(quotient(S4, V4), 3), m_s(cached_group("sym:3"), 3))
    assert values[0] == values[1] == values[2], values


@pytest.mark.criterion(10)
def test_c10_multiplicativity():
    assert m_s(cached_group("direct:[sym:3],[alt:5]"), 2) == \
        m_s(cached_group("sym:3"), 2) * m_s(cached_group("alt:5"), 2) == 8


@pytest.mark.criterion(10)
@pytest.mark.parametrize("spec", ["sym:3", "sym:4", "cyclic:6"])
def test_c10_clifford_bounds(spec):
    G = cached_group(spec)
    H = o_p_residual(G, 2)
    assert m_s(H, 2) <= m_s(G, 2) <= (G.order // H.order) * m_s(H, 2)


@pytest.mark.criterion(11)
def test_c11_regular_orbits():
    def work():
        return count_regular_orbits(sylow_glnq(4, 2, 5)), count_regular_orbits(sylow_glnq(2, 2, 3))

    (five, three), secs = _timed(work)
    assert five == 3 and five >= 2
    assert three == 1
    assert secs < 5, secs
