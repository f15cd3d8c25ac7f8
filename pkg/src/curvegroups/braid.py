"""Artin braid groups, their action on free groups, and Robb's quotient data.

Artin action convention
-----------------------
The generator ``s_i`` acts on ``F_n = <x_1..x_n>`` by::

    x_i     -> x_i x_{i+1} x_i^-1
    x_{i+1} -> x_i

and a braid word acts letter by letter from left to right, so that
``artin_action(u * v) == artin_action(v).compose(artin_action(u))`` (a right
action).  This fixes ``x_1 x_2 ... x_n``.  It is the one combination of
generator formula and composition order that reproduces the monodromy tables
of the real three-cuspidal quartic; see :mod:`curvegroups.quartic`.

Fibre bases that are not in linear position are handled with ``loops``: the
loop around the puncture in strand position ``k`` is given as a word in the
fibre names, and the action is transported along that change of basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .freegroup import FreeEndomorphism, FreeGroup, FreeWord, commutator
from .syntax import format_letters, parse_letters


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators ``s_1 .. s_{n-1}`` of ``B_n``."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("a braid needs at least one strand")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.strands - 1:
                raise BraidError(f"generator s{i} is not in B_{self.strands}")
            if e not in (1, -1):
                raise BraidError(f"letter exponent must be +-1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text, strands):
        letters = []
        for name, e in parse_letters(text):
            if not (name.startswith("s") and name[1:].isdigit()):
                raise BraidError(f"not a braid generator: {name!r}")
            letters.append((int(name[1:]), e))
        return cls(strands, tuple(letters))

    def __str__(self):
        return format_letters((f"s{i}", e) for i, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise BraidError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def exponent_sum(self):
        return sum(e for _, e in self.letters)

    def to_free_word(self, group: FreeGroup | None = None, prefix="x") -> FreeWord:
        """The same letters read in a free group on ``x1 .. x_{n-1}``."""
        if group is None:
            group = FreeGroup([f"{prefix}{i}" for i in range(1, self.strands)])
        return group.word((group.names[i - 1], e) for i, e in self.letters)

    @classmethod
    def from_free_word(cls, w: FreeWord, strands):
        idx = {n: k + 1 for k, n in enumerate(w.group.names)}
        return cls(strands, tuple((idx[n], e) for n, e in w.letters))


def sigma(i, strands, power=1):
    return BraidWord(strands, ((i, 1 if power > 0 else -1),) * abs(power))


def identity_braid(strands):
    return BraidWord(strands, ())


def exponent_sum(b: BraidWord) -> int:
    return b.exponent_sum()


def half_twist(strands) -> BraidWord:
    """Positive lift of the longest permutation, ``s1 (s2 s1) (s3 s2 s1) ...``."""
    letters = []
    for k in range(1, strands):
        letters.extend((i, 1) for i in range(k, 0, -1))
    return BraidWord(strands, tuple(letters))


def full_twist(strands) -> BraidWord:
    return half_twist(strands) ** 2


def permutation(b: BraidWord) -> tuple:
    """Strand permutation as a tuple ``p`` with ``p[k-1]`` the end position of
    the strand starting at position ``k`` (1-based)."""
    pos = list(range(b.strands))  # pos[strand] = current position
    at = list(range(b.strands))  # at[position] = strand
    for i, _ in b.letters:
        a, c = at[i - 1], at[i]
        at[i - 1], at[i] = c, a
        pos[a], pos[c] = i, i - 1
    return tuple(p + 1 for p in pos)


def _generator_maps(group: FreeGroup, i):
    x = group.gens
    a, b = x[i - 1], x[i]
    fwd = {n: g for n, g in zip(group.names, x)}
    bwd = dict(fwd)
    fwd[group.names[i - 1]] = a * b * a.inverse()
    fwd[group.names[i]] = a
    bwd[group.names[i - 1]] = b
    bwd[group.names[i]] = b.inverse() * a * b
    return FreeEndomorphism(group, fwd), FreeEndomorphism(group, bwd)


@lru_cache(maxsize=None)
def _gen_action(group: FreeGroup, i, sign):
    fwd, bwd = _generator_maps(group, i)
    return fwd if sign == 1 else bwd


def _raw_action(b: BraidWord, group: FreeGroup) -> FreeEndomorphism:
    e = FreeEndomorphism.identity(group)
    for i, s in b.letters:
        e = _gen_action(group, i, s).compose(e)
    return e


def artin_action(b: BraidWord, names=None, loops=None) -> FreeEndomorphism:
    """Automorphism of the free group induced by ``b``.

    ``names`` labels the punctures in strand order (default ``x1 .. xn``).
    ``loops`` optionally maps a strand's name to the word, in the same names,
    of the standard loop around that strand's puncture; strands not listed
    use their own generator.
    """
    names = tuple(names) if names is not None else tuple(f"x{k}" for k in range(1, b.strands + 1))
    if len(names) != b.strands:
        raise BraidError(f"{len(names)} fibre names for a braid on {b.strands} strands")
    group = FreeGroup(names)
    fwd = _raw_action(b, group)
    bwd = _raw_action(b.inverse(), group)
    if loops:
        images = {}
        for n in names:
            w = loops.get(n, group.gen(n))
            images[n] = group.parse(w) if isinstance(w, str) else w
        basis = FreeEndomorphism(group, images)
        basis_inv = basis.inverse()
        fwd = basis.compose(fwd).compose(basis_inv)
        bwd = basis.compose(bwd).compose(basis_inv)
    return fwd.set_inverse(bwd)


def spherical_relator(d) -> BraidWord:
    """``s1 ... s_{d-2} s_{d-1}^2 s_{d-2} ... s1``."""
    if d < 2:
        raise BraidError("spherical relator needs d >= 2")
    up = [(i, 1) for i in range(1, d - 1)]
    return BraidWord(d, tuple(up + [(d - 1, 1), (d - 1, 1)] + up[::-1]))


def robb_relator(d) -> BraidWord:
    """The extra relator ``[x2, (x3 x1)^-1 x2 (x3 x1)]`` defining Robb's quotient of ``B_d``."""
    if d < 4:
        raise BraidError("Robb's relator is defined for d >= 4")
    F = FreeGroup([f"x{i}" for i in range(1, d)])
    x1, x2, x3 = F.gen("x1"), F.gen("x2"), F.gen("x3")
    c = x3 * x1
    return BraidWord.from_free_word(commutator(x2, c.inverse() * x2 * c), d)


# --- Robb's pure quotient, in normal form mu^eps v_1^k_1 ... v_{d-1}^k_{d-1} ---


@dataclass(frozen=True)
class RobbCentralElement:
    mu: int
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu", self.mu % 2)
        object.__setattr__(self, "exponents", tuple(int(k) for k in self.exponents))


def robb_identity(d):
    return RobbCentralElement(0, (0,) * (d - 1))


def robb_v(i, d, power=1):
    ks = [0] * (d - 1)
    ks[i - 1] = power
    return RobbCentralElement(0, tuple(ks))


def robb_mu(d):
    return RobbCentralElement(1, (0,) * (d - 1))


def _cocycle(ka, kb):
    # moving v_i^b past v_{i+1}^a costs mu^(a*b)
    return sum(ka[i + 1] * kb[i] for i in range(len(ka) - 1)) % 2


def robb_multiply(a: RobbCentralElement, b: RobbCentralElement, d=None) -> RobbCentralElement:
    if len(a.exponents) != len(b.exponents) or (d is not None and len(a.exponents) != d - 1):
        raise BraidError("Robb elements of different lengths")
    ks = tuple(x + y for x, y in zip(a.exponents, b.exponents))
    return RobbCentralElement(a.mu + b.mu + _cocycle(a.exponents, b.exponents), ks)


def robb_inverse(a: RobbCentralElement) -> RobbCentralElement:
    neg = tuple(-k for k in a.exponents)
    return RobbCentralElement(a.mu + _cocycle(a.exponents, neg), neg)


def robb_commutator(a, b):
    return robb_multiply(robb_multiply(a, b), robb_multiply(robb_inverse(a), robb_inverse(b)))


def robb_relations(d):
    """Evaluate every defining relation; returns ``{label: holds}``."""
    one, mu = robb_identity(d), robb_mu(d)
    out = {"mu^2 = 1": robb_multiply(mu, mu) == one}
    for i in range(1, d):
        vi = robb_v(i, d)
        out[f"[mu, v{i}] = 1"] = robb_commutator(mu, vi) == one
        for j in range(1, d):
            if i == j:
                continue
            want = mu if abs(i - j) == 1 else one
            out[f"[v{i}, v{j}] = {'mu' if abs(i - j) == 1 else '1'}"] = (
                robb_commutator(vi, robb_v(j, d)) == want
            )
    return out


def robb_even_subgroup_index(d, box=1):
    """Index of ``{all exponents even}``, counted by sorting a box of elements
    into cosets (two elements share a coset iff ``a^-1 b`` is in the subgroup)."""
    reps = []
    rng = range(-box, box + 1)
    for mu in (0, 1):
        for ks in itertools.product(rng, repeat=d - 1):
            g = RobbCentralElement(mu, ks)
            for r in reps:
                q = robb_multiply(robb_inverse(r), g)
                if all(k % 2 == 0 for k in q.exponents):
                    break
            else:
                reps.append(g)
    return len(reps)
