"""Finite-type (simply laced) Artin groups and their Garside normal form.

Coxeter group elements are permutations of the root system.  A word in the
Artin generators is put in left-greedy form ``Delta^k s_1 ... s_m`` where the
``s_i`` are simple elements (positive lifts of Coxeter elements), none equal
to 1 or Delta, and each adjacent pair is left-weighted.

Node labels follow the usual pictures: ``A_n`` and ``D_n`` are chains
``1 - 2 - ... `` (``D_n`` with node ``n`` attached to ``n-2``); ``E_6, E_7,
E_8`` are the chain ``2 - 3 - ... - n`` with node ``1`` attached to node 4.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from functools import lru_cache

from .syntax import format_letters, parse_letters


class ArtinError(ValueError):
    pass


def dynkin_edges(family, n):
    if family == "A":
        if n < 1:
            raise ArtinError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(1, n)]
    if family == "D":
        if n < 4:
            raise ArtinError("D_n needs n >= 4")
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if family == "E":
        if n not in (6, 7, 8):
            raise ArtinError(f"E_{n} is not a finite type")
        return [(i, i + 1) for i in range(2, n)] + [(1, 4)]
    raise ArtinError(f"unknown family {family!r}")


def parse_type(name):
    m = re.fullmatch(r"\s*([ADE])_?(\d+)\s*", str(name))
    if not m:
        raise ArtinError(f"cannot parse type {name!r}; expected e.g. A3, D5, E6")
    return m.group(1), int(m.group(2))


class CoxeterSystem:
    """Roots, simple reflections and Garside machinery for one type."""

    def __init__(self, family, n):
        self.family, self.rank = family, n
        self.edges = tuple(dynkin_edges(family, n))
        adj = [[0] * n for _ in range(n)]
        for i, j in self.edges:
            adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1
        self.adjacent = adj
        self._build_roots()
        self._intern = {}
        self._lock = threading.Lock()
        self.identity = tuple(range(len(self.roots)))
        self.n_positive = len(self.roots) // 2
        self.longest = self._longest()

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    def _reflect(self, root, i):
        # simply laced: s_i(b) = b - (b, a_i) a_i with (a_i, a_i) = 2, (a_i, a_j) = -1 on edges
        pairing = 2 * root[i] - sum(root[j] for j in range(self.rank) if self.adjacent[i][j])
        r = list(root)
        r[i] -= pairing
        return tuple(r)

    def _build_roots(self):
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        found = {r: None for r in simple}
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    s = self._reflect(r, i)
                    if s not in found and all(c >= 0 for c in s):
                        found[s] = None
                        nxt.append(s)
            frontier = nxt
        pos = sorted(found, key=lambda r: (sum(r), r))
        self.roots = tuple(pos + [tuple(-c for c in r) for r in pos])
        self.index = {r: k for k, r in enumerate(self.roots)}
        self.simple_index = tuple(self.index[r] for r in simple)
        self.reflections = tuple(
            tuple(self.index[self._reflect(r, i)] for r in self.roots) for i in range(n)
        )

    # permutations compose as (u * v)(r) = u(v(r))
    @staticmethod
    def mul(u, v):
        return tuple(u[x] for x in v)

    @staticmethod
    def inv(u):
        out = [0] * len(u)
        for k, x in enumerate(u):
            out[x] = k
        return tuple(out)

    def is_negative(self, k):
        return k >= self.n_positive

    def right_descents(self, w):
        """``{i : l(w s_i) < l(w)}``, i.e. w sends a_i negative (0-based)."""
        return frozenset(i for i in range(self.rank) if self.is_negative(w[self.simple_index[i]]))

    def left_descents(self, w):
        return self.right_descents(self.inv(w))

    def length(self, w):
        return sum(1 for k in range(self.n_positive) if self.is_negative(w[k]))

    def element(self, word):
        """Coxeter element of a sequence of 0-based generator indices."""
        w = self.identity
        for i in word:
            w = self.mul(w, self.reflections[i])
        return w

    def reduced_word(self, w):
        out = []
        while True:
            d = self.left_descents(w)
            if not d:
                return out
            i = min(d)
            out.append(i)
            w = self.mul(self.reflections[i], w)

    def _longest(self):
        w = self.identity
        while True:
            d = set(range(self.rank)) - self.right_descents(w)
            if not d:
                return w
            w = self.mul(w, self.reflections[min(d)])

    def group_order(self):
        """Order of W by breadth-first enumeration of elements (keyed by simple-root images)."""
        def key(w):
            return tuple(w[k] for k in self.simple_index)

        seen = {key(self.identity)}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.reflections:
                    u = self.mul(w, s)
                    k = key(u)
                    if k not in seen:
                        seen.add(k)
                        nxt.append(u)
            frontier = nxt
        return len(seen)

    def diagram_automorphism(self):
        """Permutation ``i -> j`` with ``w0 s_i w0 = s_j`` (0-based)."""
        w0 = self.longest
        out = []
        for i in range(self.rank):
            c = self.mul(self.mul(w0, self.reflections[i]), w0)
            out.append(self.reflections.index(c))
        return tuple(out)

    def intern(self, w):
        with self._lock:
            return self._intern.setdefault(w, w)


@lru_cache(maxsize=None)
def build_coxeter(type_name) -> CoxeterSystem:
    family, n = parse_type(type_name)
    return CoxeterSystem(family, n)


# --- words ------------------------------------------------------------------


def parse_artin_word(system: CoxeterSystem, word):
    """Accepts ``"a2 a4^-1"`` text or a sequence of ``(index, +-1)`` (1-based)."""
    if isinstance(word, str):
        letters = []
        for name, e in parse_letters(word):
            m = re.fullmatch(r"[as]?(\d+)", name)
            if not m:
                raise ArtinError(f"not an Artin generator: {name!r}")
            letters.append((int(m.group(1)), e))
    else:
        letters = [(int(i), int(e)) for i, e in word]
    for i, e in letters:
        if not 1 <= i <= system.rank:
            raise ArtinError(f"generator a{i} is not in type {system.name}")
        if e not in (1, -1):
            raise ArtinError("letter exponents must be +-1")
    return letters


def format_artin_word(letters):
    return format_letters((f"a{i}", e) for i, e in letters)


@dataclass(frozen=True)
class GarsideNormalForm:
    type_name: str
    delta_power: int
    simples: tuple  # root permutations

    def simple_words(self):
        sysm = build_coxeter(self.type_name)
        return [[i + 1 for i in sysm.reduced_word(s)] for s in self.simples]

    def to_word(self):
        """A word (1-based signed letters) representing the same element."""
        sysm = build_coxeter(self.type_name)
        d = [i + 1 for i in sysm.reduced_word(sysm.longest)]
        if self.delta_power >= 0:
            out = [(i, 1) for i in d] * self.delta_power
        else:
            out = [(i, -1) for i in reversed(d)] * (-self.delta_power)
        for w in self.simple_words():
            out.extend((i, 1) for i in w)
        return out

    def __str__(self):
        parts = [f"D^{self.delta_power}"] if self.delta_power else []
        parts += ["(" + " ".join(f"a{i}" for i in w) + ")" for w in self.simple_words()]
        return " ".join(parts) or "1"

    def to_dict(self):
        return {
            "type": self.type_name,
            "delta_power": self.delta_power,
            "simples": [" ".join(f"a{i}" for i in w) for w in self.simple_words()],
        }


def _slide(sysm, a, b):
    """Left-weight the pair ``(a, b)``: move generators from the front of b onto a."""
    changed = False
    while True:
        movable = sysm.left_descents(b) - sysm.right_descents(a)
        if not movable:
            return a, b, changed
        i = min(movable)
        s = sysm.reflections[i]
        a = sysm.mul(a, s)
        b = sysm.mul(s, b)
        changed = True


def normal_form(type_name, word) -> GarsideNormalForm:
    sysm = build_coxeter(type_name)
    letters = parse_artin_word(sysm, word)
    w0 = sysm.longest
    # x^-1 = Delta^-1 (w0 s_x); then y Delta^-1 = Delta^-1 tau(y), tau(y) = w0 y w0
    factors = []
    delta = 0
    for i, e in letters:
        s = sysm.reflections[i - 1]
        if e == 1:
            factors.append(s)
        else:
            factors = [sysm.mul(sysm.mul(w0, f), w0) for f in factors]
            factors.append(sysm.mul(w0, s))
            delta -= 1
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            a, b, c = _slide(sysm, factors[k], factors[k + 1])
            if c:
                factors[k], factors[k + 1] = a, b
                changed = True
    out = []
    for f in factors:
        if f == w0 and not out:
            delta += 1
        elif f != sysm.identity:
            out.append(sysm.intern(f))
    return GarsideNormalForm(sysm.name, delta, tuple(out))


def words_equal(type_name, u, v) -> bool:
    return normal_form(type_name, u) == normal_form(type_name, v)


def delta_word(type_name):
    sysm = build_coxeter(type_name)
    return [(i + 1, 1) for i in sysm.reduced_word(sysm.longest)]


def is_central(type_name, word) -> bool:
    sysm = build_coxeter(type_name)
    w = parse_artin_word(sysm, word)
    return all(words_equal(type_name, w + [(i, 1)], [(i, 1)] + w) for i in range(1, sysm.rank + 1))


def abelianization(type_name, word) -> int:
    sysm = build_coxeter(type_name)
    return sum(e for _, e in parse_artin_word(sysm, word))


def delta_conjugation(type_name):
    """``i -> j`` with ``Delta a_i Delta^-1 = a_j`` (1-based), found by normal forms."""
    sysm = build_coxeter(type_name)
    d = delta_word(type_name)
    d_inv = [(i, -e) for i, e in reversed(d)]
    out = {}
    for i in range(1, sysm.rank + 1):
        nf = normal_form(type_name, d + [(i, 1)] + d_inv)
        hits = [j for j in range(1, sysm.rank + 1) if nf == normal_form(type_name, [(j, 1)])]
        out[i] = hits[0] if hits else None
    return out
