"""Zariski-van Kampen presentations from braid monodromy.

Relators are written ``g^t * image^-1`` where ``g^t = t g t^-1`` and the
image is the Artin action of the braid attached to ``t``.  Ordering is
fibre-generator major, base-generator minor, closures last.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .braid import BraidError, BraidWord, artin_action, permutation
from .freegroup import FreeEndomorphism, FreeGroup, FreeWord
from .presentation import FinitePresentation


class MonodromyError(ValueError):
    pass


@dataclass(frozen=True)
class MonodromyData:
    degree: int
    base: tuple
    braids: dict
    fiber: tuple = ()
    loops: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise MonodromyError("degree must be positive")
        if not self.base:
            raise MonodromyError("need at least one base generator")
        fiber = tuple(self.fiber) or tuple(f"g{i}" for i in range(1, self.degree + 1))
        if len(fiber) != self.degree:
            raise MonodromyError(f"{len(fiber)} fibre names for degree {self.degree}")
        if set(fiber) & set(self.base):
            raise MonodromyError("fibre and base names overlap")
        braids = {}
        for t in self.base:
            if t not in self.braids:
                raise MonodromyError(f"no braid given for {t!r}")
            b = self.braids[t]
            if isinstance(b, str):
                b = BraidWord.parse(b, self.degree)
            if b.strands != self.degree:
                raise MonodromyError(f"braid for {t!r} has {b.strands} strands, expected {self.degree}")
            braids[t] = b
        extra = set(self.braids) - set(self.base)
        if extra:
            raise MonodromyError(f"braids given for unknown base generators {sorted(extra)}")
        unknown = set(self.loops) - set(fiber)
        if unknown:
            raise MonodromyError(f"loops given for unknown fibre names {sorted(unknown)}")
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "fiber", fiber)
        object.__setattr__(self, "braids", braids)
        object.__setattr__(self, "loops", dict(self.loops))

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(
                degree=int(data["degree"]),
                base=tuple(data["base"]),
                braids=dict(data["braids"]),
                fiber=tuple(data.get("fiber", ())),
                loops=dict(data.get("loops", {})),
            )
        except KeyError as exc:
            raise MonodromyError(f"missing field {exc.args[0]!r}") from None
        except BraidError as exc:
            raise MonodromyError(str(exc)) from None

    @classmethod
    def loads(cls, text):
        # json.JSONDecodeError carries line and column already
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read())

    def to_dict(self):
        out = {
            "degree": self.degree,
            "base": list(self.base),
            "braids": {t: str(self.braids[t]) for t in self.base},
            "fiber": list(self.fiber),
        }
        if self.loops:
            out["loops"] = {k: str(v) for k, v in self.loops.items()}
        return out

    @property
    def fiber_group(self) -> FreeGroup:
        return FreeGroup(self.fiber)

    def action(self, t) -> FreeEndomorphism:
        return artin_action(self.braids[t], self.fiber, self.loops or None)

    def boundary_word(self) -> FreeWord:
        """Product of the standard loops in strand order; fixed by every braid."""
        F = self.fiber_group
        w = F.identity
        for n in self.fiber:
            loop = self.loops.get(n)
            w = w * (F.parse(loop) if isinstance(loop, str) else loop if loop is not None else F.gen(n))
        return w

    def permutations(self):
        return {t: permutation(self.braids[t]) for t in self.base}


def _all_names(m: MonodromyData, filled=()):
    return list(m.fiber) + [t for t in m.base if t not in filled]


def _action_relators(m: MonodromyData, group: FreeGroup, filled):
    rels, labels = [], []
    acts = {t: m.action(t) for t in m.base}
    for g in m.fiber:
        x = group.gen(g)
        for t in m.base:
            img = group.word(acts[t].images[g].letters)
            if t in filled:
                lhs, lab = x, f"{g} = {img}"
            else:
                tw = group.gen(t)
                lhs, lab = tw * x * tw.inverse(), f"{g}^{t} = {img}"
            rels.append(lhs * img.inverse())
            labels.append(lab)
    return rels, labels


def _closures(m, group, fiber_closure, base_closure, filled):
    rels, labels = [], []
    if fiber_closure:
        w = group.word(m.boundary_word().letters)
        rels.append(w)
        labels.append(f"{w} = 1")
    if base_closure:
        ts = [t for t in m.base if t not in filled]
        w = group.word((t, 1) for t in ts)
        rels.append(w)
        labels.append(f"{' '.join(m.base)} = 1")
    return rels, labels


def total_space_presentation(m: MonodromyData, fiber_closure=False, base_closure=False) -> FinitePresentation:
    return fill_fibers(m, (), fiber_closure=fiber_closure, base_closure=base_closure)


def fill_fibers(m: MonodromyData, filled=(), extra_relations=(), fiber_closure=True, base_closure=False):
    """Total-space presentation with ``t = 1`` substituted for each filled ``t``.

    Filled base generators disappear and their action relators become
    ``g = beta(g)``.  ``extra_relations`` are words (or strings) over the
    remaining generators, appended last.
    """
    filled = tuple(filled)
    unknown = [t for t in filled if t not in m.base]
    if unknown:
        raise MonodromyError(f"unknown base generators {unknown}")
    names = _all_names(m, filled)
    group = FreeGroup(names)
    rels, labels = _action_relators(m, group, set(filled))
    r2, l2 = _closures(m, group, fiber_closure, base_closure, set(filled))
    rels += r2
    labels += l2
    for w in extra_relations:
        w = group.parse(w) if isinstance(w, str) else group.word(w.letters)
        rels.append(w)
        labels.append(f"{w} = 1")
    return FinitePresentation.build(names, rels, labels)


def projective_presentation(m: MonodromyData) -> FinitePresentation:
    return fill_fibers(m, m.base, fiber_closure=True)


def affine_presentation(m: MonodromyData) -> FinitePresentation:
    return fill_fibers(m, m.base, fiber_closure=False)


def all_presentations(m: MonodromyData):
    """The four variants emitted by the CLI, in a fixed order."""
    return {
        "total": total_space_presentation(m),
        "total_closed": total_space_presentation(m, fiber_closure=True, base_closure=True),
        "affine": affine_presentation(m),
        "projective": projective_presentation(m),
    }
