"""SL(2,Z) arithmetic, its amalgam normal form, and the Klein-four extension.

``SL(2,Z) = <A> *_{<-I>} <B>`` with ``A^2 = B^3 = -I``.  A matrix is written
as a sign times an alternating word in ``A`` and ``B^1 | B^2``.

The group ``(Z/2 x Z/2) x| SL(2,Z)`` multiplies as
``(v1, M1)(v2, M2) = (v1 + M1 v2, M1 M2)`` with ``M`` acting on ``v`` mod 2;
braid words on four strands are sent there letter by letter with
``s1 -> (0, S)``, ``s2 -> (y, T)``, ``s3 -> (x, S)``.  That assignment
does not respect ``s1 s2 s1 = s2 s1 s2``, so it is a map on words.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

from .braid import BraidWord


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __mul__(self, o):
        if not isinstance(o, SL2Matrix):
            return NotImplemented
        return SL2Matrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self):
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self):
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(k)):
            out = out * base
        return out

    @property
    def trace(self):
        return self.a + self.d

    def is_scalar(self):
        """True for +-I."""
        return self.b == 0 and self.c == 0

    def act_mod2(self, v):
        x, y = v
        return ((self.a * x + self.b * y) % 2, (self.c * x + self.d * y) % 2)

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = SL2Matrix(1, 0, 0, 1)
MINUS_I = SL2Matrix(-1, 0, 0, -1)
S = SL2Matrix(1, 1, 0, 1)
T = SL2Matrix(1, 0, 1, 1)
A = SL2Matrix(0, 1, -1, 0)
B = SL2Matrix(0, -1, 1, 1)

_LETTER = {"A": A, "B": B}


# --- amalgam normal form ----------------------------------------------------


@dataclass(frozen=True)
class AmalgamWord:
    """``sign * syllables``; syllables alternate ``("A", 1)`` and ``("B", 1 | 2)``."""

    sign: int
    syllables: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        prev = None
        for letter, k in self.syllables:
            if letter == prev or (letter == "A" and k != 1) or (letter == "B" and k not in (1, 2)):
                raise ValueError(f"not in normal form: {self.syllables}")
            prev = letter

    def evaluate(self) -> SL2Matrix:
        m = IDENTITY if self.sign == 1 else MINUS_I
        for letter, k in self.syllables:
            m = m * _LETTER[letter] ** k
        return m

    def psl_equal(self, other):
        return self.syllables == other.syllables

    def letters(self):
        return "".join(letter if k == 1 else f"{letter}^{k}" for letter, k in self.syllables)

    def __str__(self):
        body = self.letters() or "I"
        return body if self.sign == 1 else f"-{body}"


def _collect(stream):
    """Reduce a stream of ``(letter, power)`` to normal form, tracking the sign."""
    sign = 1
    stack = []
    for letter, k in stream:
        if stack and stack[-1][0] == letter:
            k += stack.pop()[1]
        period = 2 if letter == "A" else 3
        flips, k = divmod(k, period)
        if flips % 2:
            sign = -sign
        if k:
            stack.append((letter, k))
    return AmalgamWord(sign, tuple(stack))


def st_word(M: SL2Matrix):
    """Write ``M = sign * prod S^k / T^k`` by column Euclid.  Returns (sign, [(name, k)])."""
    word = []
    a, b, c, d = M.a, M.b, M.c, M.d
    while c != 0:
        if a == 0:
            # left-multiply by S: a += c
            a, b = a + c, b + d
            word.append(("S", -1))
        elif abs(a) > abs(c):
            q = a // c
            a, b = a - q * c, b - q * d
            word.append(("S", q))
        else:
            q = c // a
            c, d = c - q * a, d - q * b
            word.append(("T", q))
    eps = a  # a = d = +-1 now
    word.append(("S", eps * b))
    return eps, [(n, k) for n, k in word if k]


# S = AB, T = AB^2, S^-1 = B^2 A, T^-1 = B A, exactly
_SUBST = {
    ("S", 1): (("A", 1), ("B", 1)),
    ("T", 1): (("A", 1), ("B", 2)),
    ("S", -1): (("B", 2), ("A", 1)),
    ("T", -1): (("B", 1), ("A", 1)),
}


def amalgam_normal_form(M: SL2Matrix) -> AmalgamWord:
    eps, word = st_word(M)
    stream = [] if eps == 1 else [("A", 2)]  # -I = A^2
    for name, k in word:
        unit = _SUBST[(name, 1 if k > 0 else -1)]
        for _ in range(abs(k)):
            stream.extend(unit)
    nf = _collect(stream)
    assert nf.evaluate() == M
    return nf


def parse_amalgam(text) -> SL2Matrix:
    """Evaluate ``"A B^2 A"``, ``"(B A)^3 B"`` or the compact ``"-ABAB^2A"``.

    Letters are A, B, S, T; a leading minus multiplies by -I.
    """
    from .syntax import parse_letters

    text = text.strip()
    m = IDENTITY
    if text.startswith("-"):
        m, text = MINUS_I, text[1:]
    # split compact words into single-letter tokens
    text = re.sub(r"(?<=[\w)])(?=[ABST(])", " ", text)
    for name, e in parse_letters(text):
        g = {"A": A, "B": B, "S": S, "T": T}.get(name)
        if g is None:
            raise ValueError(f"unknown SL(2,Z) letter {name!r}")
        m = m * (g if e == 1 else g.inverse())
    return m


# --- order classification ---------------------------------------------------


@dataclass(frozen=True)
class OrderClass:
    order: int | None  # None = infinite

    @property
    def finite(self):
        return self.order is not None

    def __str__(self):
        return f"finite({self.order})" if self.finite else "infinite"


def order_class(M: SL2Matrix) -> OrderClass:
    tr = M.trace
    if abs(tr) >= 3:
        return OrderClass(None)
    if abs(tr) == 2 and not M.is_scalar():
        return OrderClass(None)
    p = M
    for k in range(1, 13):
        if p == IDENTITY:
            return OrderClass(k)
        p = p * M
    raise AssertionError("elliptic element of order > 12")  # impossible in SL(2,Z)


# --- the Klein-four extension -------------------------------------------------


@dataclass(frozen=True)
class KleinSL2Element:
    v: tuple
    M: SL2Matrix

    def __post_init__(self):
        object.__setattr__(self, "v", (self.v[0] % 2, self.v[1] % 2))

    def __mul__(self, o):
        return klein_multiply(self, o)

    def inverse(self):
        inv = self.M.inverse()
        return KleinSL2Element(inv.act_mod2(self.v), inv)

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = KLEIN_IDENTITY
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self):
        return self.v == (0, 0) and self.M == IDENTITY

    def __str__(self):
        return f"({vector_name(self.v)}, {self.M})"


def vector_name(v):
    return {(0, 0): "0", (1, 0): "x", (0, 1): "y", (1, 1): "x+y"}[tuple(v)]


X = (1, 0)
Y = (0, 1)
KLEIN_IDENTITY = KleinSL2Element((0, 0), IDENTITY)


def klein_multiply(p: KleinSL2Element, q: KleinSL2Element) -> KleinSL2Element:
    w = p.M.act_mod2(q.v)
    return KleinSL2Element((p.v[0] + w[0], p.v[1] + w[1]), p.M * q.M)


def commutes(p, q) -> bool:
    return p * q == q * p


SIGMA_IMAGES = {
    1: KleinSL2Element((0, 0), S),
    2: KleinSL2Element(Y, T),
    3: KleinSL2Element(X, S),
}


def braid_to_klein(b: BraidWord) -> KleinSL2Element:
    if b.strands != 4:
        raise ValueError(f"the Klein model is for 4 strands, got {b.strands}")
    out = KLEIN_IDENTITY
    for i, e in b.letters:
        g = SIGMA_IMAGES[i]
        out = out * (g if e == 1 else g.inverse())
    return out


# --- bounded freeness check ---------------------------------------------------


def free_pair_certificate(g: KleinSL2Element, h: KleinSL2Element, depth=10) -> dict:
    """Bounded evidence that ``<g, h>`` is free of rank 2.

    (a) The no-cancellation condition on the PSL(2,Z) images: each of g, h
    starts and ends in the same amalgam letter, the two letters differ,
    and both have infinite order.
    (b) Every nonempty reduced word of length <= depth in g, h is checked
    not to be ``(0, +-I)``; words whose matrix is ``+-I`` with a nonzero
    translation part are counted separately.

    ``passed`` refers to (b) only.  This is verification to a finite
    depth, not a proof.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    gens = [(("g", 1), g), (("g", -1), g.inverse()), (("h", 1), h), (("h", -1), h.inverse())]
    checked = 0
    scalar_only = 0
    relation = None
    queue = deque([(KLEIN_IDENTITY, None, ())])
    while queue and relation is None:
        val, last, word = queue.popleft()
        for letter, x in gens:
            if last is not None and letter[0] == last[0] and letter[1] == -last[1]:
                continue
            nv = val * x
            nw = word + (letter,)
            checked += 1
            if nv.M.is_scalar():
                if nv.v == (0, 0):
                    relation = nw
                    break
                scalar_only += 1
            if len(nw) < depth:
                queue.append((nv, letter, nw))

    ng, nh = amalgam_normal_form(g.M), amalgam_normal_form(h.M)

    def ends(nf):
        s = nf.syllables
        return (s[0][0], s[-1][0]) if s else (None, None)

    eg, eh = ends(ng), ends(nh)
    syllable_ok = (
        eg[0] is not None and eh[0] is not None
        and eg[0] == eg[1] and eh[0] == eh[1] and eg[0] != eh[0]
        and len(ng.syllables) > 1 and len(nh.syllables) > 1
    )
    infinite = not order_class(g.M).finite and not order_class(h.M).finite
    return {
        "bounded": True,
        "depth": depth,
        "words_checked": checked,
        "relation": None if relation is None else " ".join(n if e == 1 else f"{n}^-1" for n, e in relation),
        "words_scalar_with_translation": scalar_only,
        "no_relation_to_depth": relation is None,
        "g_normal_form": str(ng),
        "h_normal_form": str(nh),
        "syllable_condition": syllable_ok,
        "infinite_order": infinite,
        "passed": relation is None,
    }
