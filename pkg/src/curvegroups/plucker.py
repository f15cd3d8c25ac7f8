"""Plücker invariants of plane curves with ordinary nodes and cusps.

For a curve of degree d with delta nodes and kappa cusps:

    d_dual = d(d-1) - 2 delta - 3 kappa
    iota   = 3d(d-2) - 6 delta - 8 kappa        (flexes)
    d      = d_dual(d_dual-1) - 2 tau - 3 iota   (solved for the bitangents tau)

The fourth relation, kappa = 3 d_dual(d_dual-2) - 6 tau - 8 iota, is checked
as a consistency condition.  The variant with (d_dual-1) in place of
(d_dual-2) can be evaluated too, for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class PluckerError(ValueError):
    pass


@dataclass(frozen=True)
class PluckerInvariants:
    d: int
    delta: int
    kappa: int
    d_dual: int
    iota: int
    tau: int

    def dual(self):
        """The record of the dual curve (nodes <-> bitangents, cusps <-> flexes)."""
        return PluckerInvariants(self.d_dual, self.tau, self.iota, self.d, self.kappa, self.delta)

    def to_dict(self):
        return {
            "d": self.d, "delta": self.delta, "kappa": self.kappa,
            "d_dual": self.d_dual, "iota": self.iota, "tau": self.tau,
        }


def kappa_relation(p: PluckerInvariants, as_printed=False) -> int:
    """Right-hand side of the cusp relation; equals ``p.kappa`` when it holds."""
    k = p.d_dual - 1 if as_printed else p.d_dual - 2
    return 3 * p.d_dual * k - 6 * p.tau - 8 * p.iota


def dual_invariants(d, delta, kappa) -> PluckerInvariants:
    if d < 1 or delta < 0 or kappa < 0:
        raise PluckerError("need d >= 1 and nonnegative node/cusp counts")
    d_dual = d * (d - 1) - 2 * delta - 3 * kappa
    iota = 3 * d * (d - 2) - 6 * delta - 8 * kappa
    twice_tau = d_dual * (d_dual - 1) - d - 3 * iota
    if d_dual < 1:
        raise PluckerError(f"dual degree {d_dual} < 1: not realisable with these formulas")
    if iota < 0:
        raise PluckerError(f"negative flex count {iota}")
    if twice_tau < 0 or twice_tau % 2:
        raise PluckerError(f"bitangent count {twice_tau}/2 is not a nonnegative integer")
    return PluckerInvariants(d, delta, kappa, d_dual, iota, twice_tau // 2)


def consistency(p: PluckerInvariants) -> dict:
    return {
        "bitangent_relation": p.d == p.d_dual * (p.d_dual - 1) - 2 * p.tau - 3 * p.iota,
        "cusp_relation": kappa_relation(p) == p.kappa,
        "cusp_relation_as_printed": kappa_relation(p, as_printed=True) == p.kappa,
        "cusp_relation_value": kappa_relation(p),
        "cusp_relation_as_printed_value": kappa_relation(p, as_printed=True),
    }


def duality_roundtrip(p: PluckerInvariants) -> dict:
    """Dualise twice and compare; per-field results plus ``ok``."""
    try:
        back = dual_invariants(p.d_dual, p.tau, p.iota)
    except PluckerError as exc:
        return {"ok": False, "error": str(exc)}
    fields = {
        "d": back.d_dual == p.d,
        "delta": back.tau == p.delta,
        "kappa": back.iota == p.kappa,
        "d_dual": back.d == p.d_dual,
        "iota": back.kappa == p.iota,
        "tau": back.delta == p.tau,
    }
    return {"ok": all(fields.values()), "fields": fields, "dual": back.to_dict()}


def rational_nodal_family(d) -> dict:
    """A rational nodal curve of degree d and the closed forms for its dual."""
    if d < 3:
        raise PluckerError("the family starts at d = 3")
    primal = dual_invariants(d, comb(d - 1, 2), 0)
    expected = {"d": 2 * d - 2, "kappa": 3 * d - 6, "delta": 2 * (d - 2) * (d - 3)}
    got = {"d": primal.d_dual, "kappa": primal.iota, "delta": primal.tau}
    return {"primal": primal, "dual_expected": expected, "agrees": got == expected}


def sextic_six_cusps_check() -> dict:
    p = dual_invariants(6, 0, 6)
    return {"record": p.to_dict(), "consistency": consistency(p), "roundtrip": duality_roundtrip(p)["ok"]}
