"""Finite presentations, Tietze eliminations and Todd-Coxeter coset enumeration."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .freegroup import AlphabetError, FreeEndomorphism, FreeGroup, FreeWord

DEFAULT_COSET_LIMIT = 10**6


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePresentation:
    generators: tuple
    relators: tuple
    labels: tuple = field(default=(), compare=False)

    @classmethod
    def build(cls, generators, relators, labels=None):
        """Normalise relators (parse strings, cyclically reduce, drop trivial ones)."""
        group = FreeGroup(generators)
        labels = list(labels) if labels is not None else [None] * len(relators)
        if len(labels) != len(relators):
            raise PresentationError("one label per relator")
        rels, labs = [], []
        for r, lab in zip(relators, labels):
            w = group.parse(r) if isinstance(r, str) else group.word(r.letters)
            w = w.cyclically_reduced()
            if not w.is_identity():
                rels.append(w)
                labs.append(lab)
        return cls(tuple(generators), tuple(rels), tuple(labs))

    @property
    def group(self) -> FreeGroup:
        return FreeGroup(self.generators)

    def word(self, text) -> FreeWord:
        return self.group.parse(text) if isinstance(text, str) else self.group.word(text.letters)

    def __str__(self):
        return format_presentation(self)

    def total_length(self):
        return sum(len(r) for r in self.relators)

    def with_relators(self, extra, labels=None):
        labels = list(labels) if labels is not None else [None] * len(extra)
        return FinitePresentation.build(
            self.generators,
            list(self.relators) + list(extra),
            list(self.labels or [None] * len(self.relators)) + labels,
        )

    def killing(self, names):
        """Quotient by setting the named generators to 1 (they stay as generators)."""
        return self.with_relators([self.word(n) for n in names], [f"{n} = 1" for n in names])


def format_presentation(p: FinitePresentation) -> str:
    return f"< {', '.join(p.generators)} | {', '.join(str(r) for r in p.relators)} >"


def parse_presentation(text: str) -> FinitePresentation:
    text = text.strip()
    if not (text.startswith("<") and text.endswith(">")) or text.count("|") != 1:
        raise PresentationError(f"expected '< gens | rels >', got {text!r}")
    gens_part, rels_part = text[1:-1].split("|")
    gens = [g.strip() for g in gens_part.split(",") if g.strip()]
    rels = [r.strip() for r in rels_part.split(",") if r.strip()]
    return FinitePresentation.build(gens, rels)


def abelian_invariants(p: FinitePresentation) -> list:
    """Invariant factors of the abelianisation; ``0`` stands for a copy of Z."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    n = len(p.generators)
    rows = [[r.exponent_sum(g) for g in p.generators] for r in p.relators]
    rows = [row for row in rows if any(row)]
    if not rows:
        return [0] * n
    factors = [abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [f for f in factors if f != 0]
    torsion = [f for f in nonzero if f != 1]
    return torsion + [0] * (n - len(nonzero))


# --- Tietze transformations -------------------------------------------------


def _solve_for(r: FreeWord, g: str) -> FreeWord:
    lets = r.letters
    k = next(i for i, (n, _) in enumerate(lets) if n == g)
    sign = lets[k][1]
    u = r.group.word(lets[:k])
    v = r.group.word(lets[k + 1:])
    return (u.inverse() * v.inverse()) if sign == 1 else (v * u)


def tietze_eliminate(p: FinitePresentation, g: str, r: int) -> FinitePresentation:
    """Remove generator ``g`` using relator number ``r``, in which it occurs once."""
    if g not in p.generators:
        raise PresentationError(f"{g!r} is not a generator")
    rel = p.relators[r]
    if rel.occurrences(g) != 1:
        raise PresentationError(f"{g!r} occurs {rel.occurrences(g)} times in relator {r}, need exactly 1")
    value = _solve_for(rel, g)
    old = p.group
    new_gens = [n for n in p.generators if n != g]
    new = FreeGroup(new_gens)
    images = {n: new.gen(n) for n in new_gens}
    images[g] = new.word(value.letters)
    sub = FreeEndomorphism(old, images, new)
    rels, labs = [], []
    labels = p.labels or (None,) * len(p.relators)
    for i, (w, lab) in enumerate(zip(p.relators, labels)):
        if i != r:
            rels.append(sub(w))
            labs.append(lab)
    return FinitePresentation.build(new_gens, rels, labs)


def _canonical(w: FreeWord):
    rots = w.cyclic_conjugates() + w.inverse().cyclic_conjugates()
    return min(rots)


def dedupe(p: FinitePresentation) -> FinitePresentation:
    seen = set()
    rels, labs = [], []
    labels = p.labels or (None,) * len(p.relators)
    for w, lab in zip(p.relators, labels):
        key = _canonical(w)
        if key in seen:
            continue
        seen.add(key)
        rels.append(w)
        labs.append(lab)
    return FinitePresentation.build(p.generators, rels, labs)


class SimplifyResult(NamedTuple):
    presentation: FinitePresentation
    steps: int
    exhausted: bool


def simplify(p: FinitePresentation, budget=1000) -> SimplifyResult:
    """Greedy Tietze eliminations until no generator occurs exactly once in a relator.

    Among all candidate eliminations the one giving the shortest total
    relator length is taken; ties go to the earlier relator and then to the
    earlier generator.  No generators are ever added.
    """
    cur = dedupe(FinitePresentation.build(p.generators, p.relators, p.labels or None))
    steps = 0
    while True:
        best = None
        for ri, rel in enumerate(cur.relators):
            for gi, g in enumerate(cur.generators):
                if rel.occurrences(g) != 1:
                    continue
                cand = dedupe(tietze_eliminate(cur, g, ri))
                key = (cand.total_length(), ri, gi)
                if best is None or key < best[0]:
                    best = (key, cand)
        if best is None:
            return SimplifyResult(cur, steps, False)
        if steps >= budget:
            return SimplifyResult(cur, steps, True)
        cur = best[1]
        steps += 1


# --- Todd-Coxeter -------------------------------------------------------------


class Verdict(enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CosetTable:
    """Result of an enumeration.

    ``rows[c][2*k]`` is the coset ``c . g_k`` and ``rows[c][2*k+1]`` is
    ``c . g_k^-1``; cosets are numbered from 0, coset 0 being the subgroup.
    Incomplete tables carry no rows.
    """

    generators: tuple
    rows: tuple
    complete: bool
    limit: int
    defined: int

    @property
    def index(self):
        return len(self.rows) if self.complete else None

    def act(self, coset, word: FreeWord):
        col = {n: 2 * k for k, n in enumerate(self.generators)}
        for n, e in word.letters:
            coset = self.rows[coset][col[n] + (0 if e == 1 else 1)]
        return coset

    def permutation(self, generator):
        k = 2 * self.generators.index(generator)
        return tuple(row[k] for row in self.rows)


class _Full(Exception):
    pass


class _Enumeration:
    def __init__(self, ncols, relators, subgroup, limit):
        self.ncols = ncols
        self.rels = relators
        self.subgroup = subgroup
        self.limit = limit
        self.table = [[-1] * ncols]
        self.p = [0]
        self.live = 1
        self.defined = 1

    def rep(self, c):
        p = self.p
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def define(self, c, x):
        if self.live >= self.limit:
            raise _Full
        n = len(self.table)
        self.table.append([-1] * self.ncols)
        self.p.append(n)
        self.table[c][x] = n
        self.table[n][x ^ 1] = c
        self.live += 1
        self.defined += 1

    def _merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        self.p[l] = k
        self.live -= 1
        queue.append(l)

    def coincidence(self, a, b):
        queue = []
        self._merge(a, b, queue)
        i = 0
        t = self.table
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = t[e][x]
                if f < 0:
                    continue
                t[f][x ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if t[e1][x] >= 0:
                    self._merge(f1, t[e1][x], queue)
                elif t[f1][x ^ 1] >= 0:
                    self._merge(e1, t[f1][x ^ 1], queue)
                else:
                    t[e1][x] = f1
                    t[f1][x ^ 1] = e1

    def scan(self, a, w, fill):
        t = self.table
        f, i, b, j = a, 0, a, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] >= 0:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][w[j] ^ 1] >= 0:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def alive(self, c):
        return self.p[c] == c

    def lookahead(self):
        for c in range(len(self.table)):
            for r in self.rels:
                if not self.alive(c):
                    break
                self.scan(c, r, fill=False)

    def run(self):
        for h in self.subgroup:
            try:
                self.scan(0, h, fill=True)
            except _Full:
                self.lookahead()
                if self.live >= self.limit:
                    return False
                self.scan(0, h, fill=True)
        c = 0
        while c < len(self.table):
            try:
                for r in self.rels:
                    if not self.alive(c):
                        break
                    self.scan(c, r, fill=True)
                if self.alive(c):
                    for x in range(self.ncols):
                        if self.table[c][x] < 0:
                            self.define(c, x)
            except _Full:
                self.lookahead()
                if self.live >= self.limit:
                    return False
                continue  # redo coset c
            c += 1
        return True

    def compact(self):
        keep = [c for c in range(len(self.table)) if self.alive(c)]
        new = {c: k for k, c in enumerate(keep)}
        return tuple(tuple(new[self.rep(x)] for x in self.table[c]) for c in keep)


def _columns(p: FinitePresentation, w: FreeWord):
    idx = {n: k for k, n in enumerate(p.generators)}
    out = []
    for n, e in w.letters:
        if n not in idx:
            raise AlphabetError(f"{n!r} is not a generator of the presentation")
        out.append(2 * idx[n] + (0 if e == 1 else 1))
    return out


def todd_coxeter(p: FinitePresentation, subgroup=(), limit=DEFAULT_COSET_LIMIT) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup`` (words or strings).

    HLT strategy; when the live coset count reaches ``limit`` a lookahead pass
    runs, and if nothing is freed the table is returned incomplete.  An
    incomplete table says nothing about finiteness.
    """
    if limit < 1:
        raise ValueError("coset limit must be positive")
    subs = [p.word(h) for h in subgroup]
    en = _Enumeration(
        2 * len(p.generators),
        [_columns(p, r) for r in p.relators],
        [_columns(p, h) for h in subs],
        limit,
    )
    done = en.run()
    if not done:
        return CosetTable(tuple(p.generators), (), False, limit, en.defined)
    table = CosetTable(tuple(p.generators), en.compact(), True, limit, en.defined)
    if not verify_table(p, table, subs):
        raise RuntimeError("coset enumeration produced an inconsistent table")
    return table


def verify_table(p: FinitePresentation, table: CosetTable, subgroup=()) -> bool:
    """Every relator fixes every coset, subgroup words fix coset 0, and
    generator columns are mutually inverse permutations."""
    n = len(table.rows)
    for row in table.rows:
        if any(not 0 <= x < n for x in row):
            return False
    for c in range(n):
        for k in range(len(p.generators)):
            if table.rows[table.rows[c][2 * k]][2 * k + 1] != c:
                return False
        for r in p.relators:
            if table.act(c, r) != c:
                return False
    return all(table.act(0, p.word(h)) == 0 for h in subgroup)


def group_order(p: FinitePresentation, limit=DEFAULT_COSET_LIMIT):
    """Order of the group, or None if the enumeration did not finish."""
    return todd_coxeter(p, (), limit).index


def equal_in_quotient(p: FinitePresentation, u, v, limit=DEFAULT_COSET_LIMIT) -> Verdict:
    u, v = p.word(u), p.word(v)
    if u == v:
        return Verdict.EQUAL
    table = todd_coxeter(p, (), limit)
    if not table.complete:
        return Verdict.UNKNOWN
    return Verdict.EQUAL if table.act(0, u * v.inverse()) == 0 else Verdict.DISTINCT


def character_is_defined(p: FinitePresentation, weights) -> bool:
    """Does ``g -> weights[g]`` (missing names weigh 0) kill every relator?"""
    return all(sum(weights.get(n, 0) * e for n, e in r.letters) == 0 for r in p.relators)


def equal_modulo_cyclic(p: FinitePresentation, u, v, h, weights, limit=DEFAULT_COSET_LIMIT) -> Verdict:
    """Word problem in a group that may be infinite, using a cyclic subgroup of finite index.

    ``weights`` must define a homomorphism to Z that does not vanish on
    ``h``.  Then ``u v^-1`` is trivial iff it lies in ``<h>`` (read off the
    coset table of ``<h>``) and has weight 0, since the weight pins down the
    power of ``h``.
    """
    u, v, h = p.word(u), p.word(v), p.word(h)
    if not character_is_defined(p, weights):
        raise PresentationError("weights do not define a homomorphism to Z")
    if sum(weights.get(n, 0) * e for n, e in h.letters) == 0:
        raise PresentationError("the subgroup generator has weight 0")
    if u == v:
        return Verdict.EQUAL
    table = todd_coxeter(p, [h], limit)
    if not table.complete:
        return Verdict.UNKNOWN
    w = u * v.inverse()
    if table.act(0, w) != 0:
        return Verdict.DISTINCT
    weight = sum(weights.get(n, 0) * e for n, e in w.letters)
    return Verdict.EQUAL if weight == 0 else Verdict.DISTINCT
