"""Simple (ADE) plane curve singularities.

Milnor algebra bases come from a small Buchberger completion in two
variables over the rationals, with degree-lexicographic order, x1 > x2.
Homological monodromy is modelled by Picard-Lefschetz transvections on the
lattice spanned by the vanishing cycles, one per Dynkin node.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .artin import dynkin_edges, parse_type


class SingularityError(ValueError):
    pass


# --- polynomials in x1, x2 ------------------------------------------------------


def _key(m):
    return (m[0] + m[1], m[0], m[1])


class Polynomial2:
    """Sparse polynomial in x1, x2 with rational coefficients; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(m): Fraction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def __add__(self, o):
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial2(out)

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, c):
        return Polynomial2({m: c * v for m, v in self.terms.items()})

    def shift(self, i, j, c=1):
        return Polynomial2({(a + i, b + j): c * v for (a, b), v in self.terms.items()})

    def __mul__(self, o):
        out = {}
        for (a, b), c in self.terms.items():
            for (p, q), d in o.terms.items():
                m = (a + p, b + q)
                out[m] = out.get(m, 0) + c * d
        return Polynomial2(out)

    def __eq__(self, o):
        return isinstance(o, Polynomial2) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def leading(self):
        m = max(self.terms, key=_key)
        return m, self.terms[m]

    def diff(self, var):
        out = {}
        for (a, b), c in self.terms.items():
            e = a if var == 0 else b
            if e:
                out[(a - 1, b) if var == 0 else (a, b - 1)] = c * e
        return Polynomial2(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_key, reverse=True):
            c = self.terms[m]
            mono = format_monomial(m)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c} {mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def format_monomial(m):
    out = []
    for name, e in (("x1", m[0]), ("x2", m[1])):
        if e == 1:
            out.append(name)
        elif e > 1:
            out.append(f"{name}^{e}")
    return " ".join(out) or "1"


def _divides(m, n):
    return m[0] <= n[0] and m[1] <= n[1]


def _reduce(p: Polynomial2, basis):
    """Full reduction of p modulo basis (a list of monic polynomials)."""
    rem = Polynomial2()
    p = Polynomial2(p.terms)
    leads = [(g.leading()[0], g) for g in basis]
    while not p.is_zero():
        m, c = p.leading()
        for lm, g in leads:
            if _divides(lm, m):
                p = p - g.shift(m[0] - lm[0], m[1] - lm[1], c)
                break
        else:
            rem = rem + Polynomial2.monomial(*m, c)
            p = p - Polynomial2.monomial(*m, c)
    return rem


def _monic(p):
    return p.scale(1 / p.leading()[1])


def groebner_basis(polys):
    """Reduced Groebner basis (deglex, x1 > x2) by Buchberger's algorithm."""
    basis = [_monic(p) for p in polys if not p.is_zero()]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        (a, b), (c, d) = basis[i].leading()[0], basis[j].leading()[0]
        lcm = (max(a, c), max(b, d))
        s = basis[i].shift(lcm[0] - a, lcm[1] - b) - basis[j].shift(lcm[0] - c, lcm[1] - d)
        r = _reduce(s, basis)
        if not r.is_zero():
            basis.append(_monic(r))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    minimal = []
    for g in sorted(basis, key=lambda g: _key(g.leading()[0])):
        if not any(_divides(h.leading()[0], g.leading()[0]) for h in minimal):
            minimal.append(g)
    out = []
    for g in minimal:
        lm = Polynomial2.monomial(*g.leading()[0])
        others = [h for h in minimal if h is not g]
        out.append(lm + _reduce(g - lm, others))
    return out


def _basis_sort_key(m):
    # fewest variables, then degree, then x1 before x2
    return (sum(1 for e in m if e), m[0] + m[1], -m[0])


def milnor_basis(f: Polynomial2):
    """Standard monomials of ``<f, df/dx1, df/dx2>``."""
    gb = groebner_basis([f, f.diff(0), f.diff(1)])
    leads = [g.leading()[0] for g in gb]
    px = [m[0] for m in leads if m[1] == 0]
    py = [m[1] for m in leads if m[0] == 0]
    if not px or not py:
        raise SingularityError("quotient is infinite dimensional: the singularity is not isolated")
    mons = [(i, j) for i in range(min(px)) for j in range(min(py))
            if not any(_divides(lm, (i, j)) for lm in leads)]
    return sorted(mons, key=_basis_sort_key)


# --- singularity types ----------------------------------------------------------


def _poly(*monos):
    return Polynomial2({m: 1 for m in monos})


@dataclass(frozen=True)
class SingularityType:
    family: str
    rank: int

    @classmethod
    def parse(cls, name):
        family, n = parse_type(name)
        dynkin_edges(family, n)  # validates the rank
        return cls(family, n)

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @property
    def polynomial(self) -> Polynomial2:
        n = self.rank
        if self.family == "A":
            return _poly((2, 0), (0, n + 1))
        if self.family == "D":
            return _poly((2, 1), (0, n - 1))
        return {6: _poly((3, 0), (0, 4)), 7: _poly((3, 0), (1, 3)), 8: _poly((3, 0), (0, 5))}[n]

    @property
    def weights(self):
        """``(w1, w2)`` with ``a/w1 + b/w2 = 1`` on every monomial ``x1^a x2^b``."""
        (a, b), (c, d) = sorted(self.polynomial.terms)
        det = a * d - b * c
        u = Fraction(d - b, det)  # 1/w1
        v = Fraction(a - c, det)  # 1/w2
        return (1 / u, 1 / v)

    @property
    def branches(self):
        n = self.rank
        if self.family == "A":
            return gcd(2, n + 1)
        if self.family == "D":
            return 1 + gcd(2, n - 2)
        return {6: 1, 7: 2, 8: 1}[n]

    @property
    def edges(self):
        return dynkin_edges(self.family, self.rank)


def milnor_number(t: SingularityType) -> int:
    w1, w2 = t.weights
    mu = (w1 - 1) * (w2 - 1)
    if mu.denominator != 1:
        raise SingularityError(f"non-integral weight formula value {mu}")
    return int(mu)


def fiber_rank(t: SingularityType) -> int:
    return milnor_number(t) + t.branches - 1


def deformation_polynomial(t: SingularityType):
    """``f + sum t_j g_j`` over the Milnor basis, as text and as data."""
    basis = milnor_basis(t.polynomial)
    f = t.polynomial
    head = " + ".join(format_monomial(m) for m in sorted(f.terms, reverse=True))
    tail = []
    for k, m in enumerate(basis, 1):
        mono = format_monomial(m)
        tail.append(f"t{k}" if mono == "1" else f"t{k} {mono}")
    return {"text": " + ".join([head] + tail), "f": f, "parameters": basis}


def specialize_deformation(t: SingularityType, values) -> Polynomial2:
    d = deformation_polynomial(t)
    out = d["f"]
    for c, m in zip(values, d["parameters"]):
        out = out + Polynomial2.monomial(*m, c)
    return out


# --- lattice and transvections --------------------------------------------------


@dataclass(frozen=True)
class IntersectionLattice:
    rank: int
    skew_form: tuple
    labels: tuple


def intersection_lattice(t: SingularityType) -> IntersectionLattice:
    n = t.rank
    J = [[0] * n for _ in range(n)]
    for i, j in t.edges:
        a, b = min(i, j) - 1, max(i, j) - 1
        J[a][b], J[b][a] = 1, -1
    return IntersectionLattice(n, tuple(map(tuple, J)), tuple(f"a{i}" for i in range(1, n + 1)))


def matmul(X, Y):
    return tuple(
        tuple(sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(len(Y[0])))
        for i in range(len(X))
    )


def transpose(X):
    return tuple(zip(*X))


def identity_matrix(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transvection_rep(t: SingularityType):
    """Matrices of ``x -> x + <x, e_i> e_i`` with ``<x, y> = x^T J y``."""
    L = intersection_lattice(t)
    J, n = L.skew_form, L.rank
    out = []
    for i in range(n):
        M = [list(r) for r in identity_matrix(n)]
        for k in range(n):
            M[i][k] += J[k][i]
        out.append(tuple(map(tuple, M)))
    return out


def preserves_form(M, J):
    return matmul(matmul(transpose(M), J), M) == tuple(map(tuple, J))


def diagram_relations(t: SingularityType):
    """``{(i, j): holds}`` over all node pairs: braid relation on edges, commuting otherwise."""
    mats = transvection_rep(t)
    edges = {frozenset(e) for e in t.edges}
    out = {}
    for i in range(t.rank):
        for j in range(i + 1, t.rank):
            A, B = mats[i], mats[j]
            if frozenset((i + 1, j + 1)) in edges:
                ok = matmul(matmul(A, B), A) == matmul(matmul(B, A), B)
            else:
                ok = matmul(A, B) == matmul(B, A)
            out[(i + 1, j + 1)] = ok
    return out


def bipartite_order(t: SingularityType):
    """Nodes split by parity, the class not containing node 1 first (E6: 2 4 6 1 3 5)."""
    n = t.rank
    colour = {1: 1}
    frontier = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for a, b in t.edges:
                for x, y in ((a, b), (b, a)):
                    if x == v and y not in colour:
                        colour[y] = 1 - colour[v]
                        nxt.append(y)
        frontier = nxt
    return [v for v in range(1, n + 1) if colour[v] == 0] + [v for v in range(1, n + 1) if colour[v] == 1]


def classical_monodromy_order(t: SingularityType, bound=10_000):
    mats = transvection_rep(t)
    M = identity_matrix(t.rank)
    for v in bipartite_order(t):
        M = matmul(M, mats[v - 1])
    I = identity_matrix(t.rank)
    P = M
    for k in range(1, bound + 1):
        if P == I:
            return k
        P = matmul(P, M)
    return None
