"""Full verification report for one (group, prime) pair.

Every claim is checked only when its hypotheses are known to hold.  A claim
whose inputs could not be computed (capability bound, incomplete simple-module
search) gets the verdict ``unverified``, never ``pass``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CapabilityError, DomainError, IncompleteError, PreconditionError
from ..gflinalg.field import is_prime
from ..meataxe.simples import simple_census
from ..pcomplex import KINDS, reduced_euler_characteristic, steinberg_character
from ..permgrp.group import PermGroup
from ..permgrp.structure import core_p_idx, fstar_is_p_prime, is_p_solvable, minimal_normal_idx
from ..permgrp.subgroups import (
    DEFAULT_LATTICE_BOUND,
    frattini_idx,
    max_abelian_p_order,
    maximal_abelian_p_orders,
    p_part,
)
from .bounds import bound_part_i, bound_part_ii, layer_data, out_p_part, prime_class

PASS, FAIL, UNVERIFIED = "pass", "fail", "unverified"


@dataclass
class Verdict:
    status: str
    claim: str
    lhs: int | None = None
    rhs: int | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {"status": self.status, "claim": self.claim, "lhs": self.lhs, "rhs": self.rhs,
                "detail": self.detail}


@dataclass
class AnalysisReport:
    name: str
    order: int
    p: int
    p_part: int
    seed: int
    o_p_trivial: bool
    frattini_trivial: bool | None
    p_class: str
    p_solvable: bool
    simple: bool
    fstar_p_prime: bool | None = None
    x_order: int | None = None
    xc_order: int | None = None
    out_p_part: int | None = None
    bound_i: int | None = None
    bound_ii: int | None = None
    m_s: int | None = None
    simple_dims: list = field(default_factory=list)
    fingerprints: list = field(default_factory=list)
    defect_zero: bool | None = None
    euler: dict = field(default_factory=dict)
    steinberg: list = field(default_factory=list)
    steinberg_nonzero: bool | None = None
    verdicts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def statuses(self) -> list[str]:
        return [v.status for v in self.verdicts.values()]

    @property
    def outcome(self) -> str:
        s = self.statuses()
        if FAIL in s:
            return FAIL
        if UNVERIFIED in s:
            return UNVERIFIED
        return PASS

    def to_dict(self) -> dict:
        return {
            "group": {"name": self.name, "order": self.order},
            "p": self.p,
            "p_part": self.p_part,
            "seed": self.seed,
            "flags": {"o_p_trivial": self.o_p_trivial, "frattini_trivial": self.frattini_trivial,
                      "p_class": self.p_class, "p_solvable": self.p_solvable, "simple": self.simple,
                      "fstar_p_prime": self.fstar_p_prime},
            "x_order": self.x_order,
            "xc_order": self.xc_order,
            "out_p_part": self.out_p_part,
            "bound_i": self.bound_i,
            "bound_ii": self.bound_ii,
            "m_s": self.m_s,
            "simple_dims": list(self.simple_dims),
            "fingerprints": [list(f) for f in self.fingerprints],
            "defect_zero": self.defect_zero,
            "euler": dict(self.euler),
            "steinberg": list(self.steinberg),
            "steinberg_nonzero": self.steinberg_nonzero,
            "verdicts": {k: v.to_dict() for k, v in sorted(self.verdicts.items())},
            "notes": list(self.notes),
            "outcome": self.outcome,
        }


def _ge(claim: str, lhs, rhs, detail: str = "") -> Verdict:
    if lhs is None or rhs is None:
        return Verdict(UNVERIFIED, claim, lhs, rhs, detail or "inputs unavailable")
    return Verdict(PASS if lhs >= rhs else FAIL, claim, lhs, rhs, detail)


def _is_simple_group(G: PermGroup) -> bool:
    if G.order == 1 or G.is_abelian():
        return False
    mins = minimal_normal_idx(G)
    return len(mins) == 1 and mins[0].size == G.order


def verify_theorem1(G: PermGroup, p: int, seed: int = 0, bound: int = DEFAULT_LATTICE_BOUND) -> AnalysisReport:
    """Compute every invariant for ``(G, p)`` and check each applicable claim.

    Claims and their keys in ``verdicts``:

    * ``out_bound``: O_p = Phi = 1, p odd and not Mersenne: m_s >= |G|_p / |Out_G(X)|_p.
    * ``abelian_bound``: O_p = Phi = 1, p = 2 or Mersenne: m_s >= the largest qualifying |A|.
    * ``sylow_bound``: F*(G) a p'-group, p odd and not Mersenne: m_s >= |G|_p.
    * ``max_abelian_bound``: F*(G) a p'-group: m_s >= order of an abelian p-subgroup of maximal order.
    * ``simple_abelian_bound``: G nonabelian simple: m_s >= the smallest maximal abelian p-subgroup order.
    * ``steinberg_abelian_bound``: Steinberg character nonzero: m_s >= the smallest maximal abelian p-subgroup order.
    * ``steinberg_vanishing``: O_p != 1 implies a zero Steinberg character.
    * ``steinberg_projective``: the character vanishes off p-regular classes and its degree
      is divisible by |G|_p.
    * ``euler_nonzero``: p-solvable with O_p = 1 implies a nonzero reduced Euler characteristic.
    * ``complex_agreement``: the three complexes give the same character.
    * ``counting``: absolutely simple modules found = number of p-regular classes.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    o_p_trivial = core_p_idx(G, p).size == 1
    try:
        frattini_trivial = bool(frattini_idx(G, bound).size == 1)
    except CapabilityError as exc:
        frattini_trivial = None
        capability_note = str(exc)
    else:
        capability_note = ""
    pc = prime_class(p)
    rep = AnalysisReport(
        name=G.name or "", order=G.order, p=p, p_part=p_part(G.order, p), seed=seed,
        o_p_trivial=bool(o_p_trivial), frattini_trivial=frattini_trivial, p_class=pc,
        p_solvable=is_p_solvable(G, p), simple=_is_simple_group(G),
    )
    if capability_note:
        rep.notes.append(f"frattini: {capability_note}")
    V = rep.verdicts

    # simple modules
    try:
        census = simple_census(G, p, seed)
        rep.simple_dims = census.dims
        rep.m_s = max(census.dims)
        rep.fingerprints = census.fingerprints()
        rep.defect_zero = any(d % rep.p_part == 0 for d in census.dims)
        V["counting"] = Verdict(PASS if census.complete else FAIL, "absolutely simple count",
                                census.found, census.target)
    except IncompleteError as exc:
        rep.notes.append(f"simple modules: {exc}")
        V["counting"] = Verdict(UNVERIFIED, "absolutely simple count", detail=str(exc))
    m = rep.m_s

    # p-subgroup complexes
    chars = {}
    try:
        for kind in KINDS:
            rep.euler[kind] = reduced_euler_characteristic(G, p, kind, bound)
            chars[kind] = steinberg_character(G, p, kind, bound)
    except CapabilityError as exc:
        rep.notes.append(f"complexes: {exc}")
    st = chars.get("poset")
    if st is not None:
        rep.steinberg = [{"representative": str(c.representative), "order": c.element_order,
                          "size": c.size, "value": v}
                         for c, v in zip(st.class_reps, st.values)]
        rep.steinberg_nonzero = not st.is_zero()
    if len(chars) == len(KINDS):
        same = len({chars[k].values for k in KINDS}) == 1
        V["complex_agreement"] = Verdict(PASS if same else FAIL, "poset, elementary abelian and Bouc agree")
    else:
        V["complex_agreement"] = Verdict(UNVERIFIED, "poset, elementary abelian and Bouc agree",
                                         detail="complex enumeration exceeded its bound")
    if not o_p_trivial:
        V["steinberg_vanishing"] = (
            Verdict(PASS if st.is_zero() else FAIL, "O_p != 1 gives zero Steinberg character")
            if st is not None else Verdict(UNVERIFIED, "O_p != 1 gives zero Steinberg character"))
    if st is not None and not st.is_zero():
        ok = st.vanishes_on_p_singular(p) and st.identity_value % rep.p_part == 0
        V["steinberg_projective"] = Verdict(PASS if ok else FAIL, "virtual projective character",
                                            st.identity_value, rep.p_part)
    if rep.p_solvable and o_p_trivial:
        chi = rep.euler.get("poset")
        if chi is None:
            V["euler_nonzero"] = Verdict(UNVERIFIED, "nonzero reduced Euler characteristic")
        else:
            V["euler_nonzero"] = Verdict(PASS if chi != 0 else FAIL,
                                         "nonzero reduced Euler characteristic", chi, 0)

    # structural bounds
    if o_p_trivial and frattini_trivial:
        try:
            d = layer_data(G, p, bound)
            rep.x_order, rep.xc_order = int(d.X.size), int(d.XC.size)
            rep.out_p_part = out_p_part(G, p, bound)
            rep.bound_i = bound_part_i(G, p, bound)
            if pc != "generic":
                rep.bound_ii = bound_part_ii(G, p, bound)
                rep.notes.append("bound_ii maximizes |A| over every qualifying maximal abelian subgroup")
        except (CapabilityError, PreconditionError) as exc:
            rep.notes.append(f"bounds: {exc}")
        if pc == "generic":
            V["out_bound"] = _ge("m_s >= |G|_p / |Out_G(X)|_p", m, rep.bound_i)
        else:
            V["abelian_bound"] = _ge("m_s >= |A|", m, rep.bound_ii)
    elif o_p_trivial and frattini_trivial is None:
        key = "out_bound" if pc == "generic" else "abelian_bound"
        V[key] = Verdict(UNVERIFIED, "structural bound", detail="Frattini subgroup not computed")

    try:
        fstar = fstar_is_p_prime(G, p, bound)
    except CapabilityError:
        fstar = None
    rep.fstar_p_prime = fstar
    if fstar is None and o_p_trivial:
        rep.notes.append("could not decide whether F*(G) is a p'-group")
        V["max_abelian_bound"] = Verdict(UNVERIFIED, "m_s >= max abelian p-subgroup order",
                                  detail="F*(G) undecided")
    elif fstar:
        if pc == "generic":
            V["sylow_bound"] = _ge("m_s >= |G|_p", m, rep.p_part)
        try:
            a = max_abelian_p_order(G, p)
        except CapabilityError:
            a = None
        V["max_abelian_bound"] = _ge("m_s >= max abelian p-subgroup order", m, a)

    if rep.simple or rep.steinberg_nonzero:
        try:
            least = min(maximal_abelian_p_orders(G, p))
        except CapabilityError:
            least = None
        if rep.simple:
            V["simple_abelian_bound"] = _ge("m_s >= some maximal abelian p-subgroup order", m, least)
        if rep.steinberg_nonzero:
            V["steinberg_abelian_bound"] = _ge("m_s >= some maximal abelian p-subgroup order", m, least)
    return rep
