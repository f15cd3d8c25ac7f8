"""Reduced words in free groups and homomorphisms given by generator images.

Conventions used throughout the package:

* ``conjugate(h, g)`` is ``g h g^-1``.
* ``commutator(a, b)`` is ``a b a^-1 b^-1``.
* ``e.compose(f)`` is ``e o f``, i.e. apply ``f`` first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import WordSyntaxError, format_letters, parse_letters


class AlphabetError(ValueError):
    """A letter is not a generator of the group, or two groups differ."""


class FreeGroup:
    """Free group on an ordered list of named generators."""

    def __init__(self, names):
        names = tuple(names)
        for name in names:
            if not name or any(ch.isspace() or ch in "^()" for ch in name):
                raise AlphabetError(f"bad generator name {name!r}")
        if len(set(names)) != len(names):
            raise AlphabetError(f"duplicate generator names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __repr__(self):
        return f"FreeGroup({list(self.names)})"

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __contains__(self, name):
        return name in self._index

    @property
    def rank(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise AlphabetError(f"{name!r} is not a generator of {self!r}") from None

    def word(self, letters=()) -> FreeWord:
        """Freely reduce a raw letter sequence into a word of this group."""
        out = []
        for name, sign in letters:
            if name not in self._index:
                raise AlphabetError(f"{name!r} is not a generator of {self!r}")
            if sign not in (1, -1):
                raise ValueError(f"letter exponent must be +1 or -1, got {sign}")
            if out and out[-1][0] == name and out[-1][1] == -sign:
                out.pop()
            else:
                out.append((name, sign))
        return FreeWord(self, tuple(out))

    def parse(self, text) -> FreeWord:
        return self.word(parse_letters(text))

    def __call__(self, text):
        return self.parse(text)

    def gen(self, name) -> FreeWord:
        return self.word([(name, 1)])

    @property
    def gens(self):
        return [self.gen(n) for n in self.names]

    @property
    def identity(self) -> FreeWord:
        return FreeWord(self, ())


def reduce(group: FreeGroup, letters) -> FreeWord:
    return group.word(letters)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word.  Build these through :class:`FreeGroup`."""

    group: FreeGroup
    letters: tuple

    def _check(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        if other.group != self.group:
            raise AlphabetError(f"words from different groups: {self.group!r} vs {other.group!r}")
        return None

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.group.word(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.group, tuple((n, -e) for n, e in reversed(self.letters)))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return self.group.word(self.letters * k)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return format_letters(self.letters)

    def __repr__(self):
        return f"FreeWord({str(self)!r})"

    def is_identity(self):
        return not self.letters

    def cyclically_reduced(self) -> FreeWord:
        lets = self.letters
        i, j = 0, len(lets)
        while j - i > 1 and lets[i][0] == lets[j - 1][0] and lets[i][1] == -lets[j - 1][1]:
            i += 1
            j -= 1
        return FreeWord(self.group, lets[i:j])

    def exponent_sum(self, name=None):
        return sum(e for n, e in self.letters if name is None or n == name)

    def occurrences(self, name):
        return sum(1 for n, _ in self.letters if n == name)

    def generators_used(self):
        return {n for n, _ in self.letters}

    def cyclic_conjugates(self):
        w = self.cyclically_reduced().letters
        return [w[i:] + w[:i] for i in range(len(w))] or [()]


def conjugate(x: FreeWord, g: FreeWord) -> FreeWord:
    """``x^g = g x g^-1``."""
    return g * x * g.inverse()


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    return a * b * a.inverse() * b.inverse()


def are_conjugate(u: FreeWord, v: FreeWord) -> bool:
    """Conjugacy in a free group: equal cyclic reductions up to rotation."""
    cu, cv = u.cyclically_reduced(), v.cyclically_reduced()
    if len(cu) != len(cv):
        return False
    return cv.letters in cu.cyclic_conjugates()


class FreeEndomorphism:
    """Homomorphism of a free group determined by the images of its generators."""

    def __init__(self, group: FreeGroup, images, codomain: FreeGroup | None = None):
        self.group = group
        self.codomain = codomain or group
        imgs = {}
        for name in group.names:
            if name not in images:
                raise AlphabetError(f"no image given for generator {name!r}")
            w = images[name]
            if isinstance(w, str):
                w = self.codomain.parse(w)
            if w.group != self.codomain:
                raise AlphabetError(f"image of {name!r} is not a word of {self.codomain!r}")
            imgs[name] = w
        extra = set(images) - set(group.names)
        if extra:
            raise AlphabetError(f"images given for unknown generators {sorted(extra)}")
        self.images = imgs
        self._inverse = None

    @classmethod
    def identity(cls, group):
        return cls(group, {n: group.gen(n) for n in group.names})

    def __call__(self, w):
        return self.apply(w)

    def apply(self, w: FreeWord) -> FreeWord:
        if w.group != self.group:
            raise AlphabetError(f"word over {w.group!r} given to map on {self.group!r}")
        out = []
        for name, e in w.letters:
            img = self.images[name]
            out.extend(img.letters if e == 1 else img.inverse().letters)
        return self.codomain.word(out)

    def compose(self, other: FreeEndomorphism) -> FreeEndomorphism:
        """``self o other``: apply ``other`` first."""
        if other.codomain != self.group:
            raise AlphabetError("cannot compose maps between different groups")
        return FreeEndomorphism(
            other.group, {n: self.apply(w) for n, w in other.images.items()}, self.codomain
        )

    def __eq__(self, other):
        return (
            isinstance(other, FreeEndomorphism)
            and self.group == other.group
            and self.codomain == other.codomain
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.group, tuple(self.images[n].letters for n in self.group.names)))

    def __repr__(self):
        body = ", ".join(f"{n} -> {self.images[n]}" for n in self.group.names)
        return f"FreeEndomorphism({body})"

    def is_identity(self):
        return self.group == self.codomain and all(
            w.letters == ((n, 1),) for n, w in self.images.items()
        )

    def inverse(self) -> FreeEndomorphism:
        """Inverse automorphism, found by Nielsen reduction and then verified.

        Raises ValueError if the images do not form a basis.
        """
        if self._inverse is None:
            inv = _nielsen_inverse(self)
            if not (inv.compose(self).is_identity() and self.compose(inv).is_identity()):
                raise ValueError("Nielsen reduction produced a map that is not a two-sided inverse")
            self._inverse = inv
            inv._inverse = self
        return self._inverse

    def set_inverse(self, inv: FreeEndomorphism):
        """Attach a known inverse after checking it both ways."""
        if not (inv.compose(self).is_identity() and self.compose(inv).is_identity()):
            raise ValueError("supplied map is not a two-sided inverse")
        self._inverse = inv
        inv._inverse = self
        return self

    def is_automorphism(self):
        if self.group.rank != self.codomain.rank:
            return False
        try:
            self.inverse()
        except ValueError:
            return False
        return True


def _nielsen_inverse(e: FreeEndomorphism, max_plateau=2000) -> FreeEndomorphism:
    # Each entry is (u, t) with e(t) = u; moves keep that invariant.
    if e.group.rank != e.codomain.rank:
        raise ValueError("ranks differ; not an automorphism")
    dom = e.group
    state = [(e.images[n], dom.gen(n)) for n in dom.names]

    def total(st):
        return sum(len(u) for u, _ in st)

    def moves(st):
        for i in range(len(st)):
            for j in range(len(st)):
                if i == j:
                    continue
                for s in (1, -1):
                    uj, tj = st[j][0] ** s, st[j][1] ** s
                    ui, ti = st[i]
                    yield i, (ui * uj, ti * tj)
                    yield i, (uj * ui, tj * ti)

    seen = set()
    plateau = 0
    while any(len(u) != 1 for u, _ in state):
        if any(u.is_identity() for u, _ in state):
            raise ValueError("images are not a basis (a Nielsen move produced the identity)")
        cur = total(state)
        best = None
        for i, pair in moves(state):
            cand = state[:i] + [pair] + state[i + 1:]
            delta = total(cand) - cur
            if best is None or delta < best[0]:
                best = (delta, cand)
                if delta < 0:
                    break
        if best[0] < 0:
            state = best[1]
            plateau = 0
            seen.clear()
            continue
        # length-preserving moves, guarded against cycling
        key = tuple(u.letters for u, _ in state)
        seen.add(key)
        advanced = False
        for i, pair in moves(state):
            cand = state[:i] + [pair] + state[i + 1:]
            if total(cand) == cur and tuple(u.letters for u, _ in cand) not in seen:
                state = cand
                advanced = True
                break
        plateau += 1
        if not advanced or plateau > max_plateau:
            raise ValueError("images are not a basis of the free group")
    inv = {}
    for u, t in state:
        (name, sign), = u.letters
        if name in inv:
            raise ValueError("images are not a basis of the free group")
        inv[name] = t if sign == 1 else t.inverse()
    if len(inv) != e.codomain.rank:
        raise ValueError("images are not a basis of the free group")
    return FreeEndomorphism(e.codomain, inv, dom)


__all__ = [
    "AlphabetError",
    "FreeEndomorphism",
    "FreeGroup",
    "FreeWord",
    "WordSyntaxError",
    "are_conjugate",
    "commutator",
    "conjugate",
    "reduce",
]
