"""3D partitions, i.e. finite-colength monomial ideals in three variables."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .algebra import LinearForm, VirtualCharacter

Box = tuple[int, int, int]


@dataclass(frozen=True)
class Partition3D:
    """Downward-closed finite set of boxes ``(i, j, k)``; box ``(i,j,k)`` is the monomial x^i y^j z^k."""

    boxes: frozenset

    def __post_init__(self):
        boxes = frozenset(tuple(int(c) for c in b) for b in self.boxes)
        object.__setattr__(self, "boxes", boxes)
        for b in boxes:
            if len(b) != 3 or min(b) < 0:
                raise ValueError(f"bad box {b}")
            for axis in range(3):
                if b[axis] > 0 and _step(b, axis, -1) not in boxes:
                    raise ValueError(f"not downward closed: {b} present, {_step(b, axis, -1)} missing")

    @classmethod
    def of(cls, boxes: Iterable[Box]) -> Partition3D:
        return cls(frozenset(boxes))

    @classmethod
    def column(cls, axis: int, length: int) -> Partition3D:
        return cls(frozenset(tuple(i if ax == axis else 0 for ax in range(3)) for i in range(length)))

    @classmethod
    def box(cls, p: int, q: int, r: int) -> Partition3D:
        """The complete intersection ``[0,p) x [0,q) x [0,r)``."""
        return cls(frozenset((i, j, k) for i in range(p) for j in range(q) for k in range(r)))

    @property
    def size(self) -> int:
        return len(self.boxes)

    def __len__(self):
        return len(self.boxes)

    def sorted_boxes(self) -> list[Box]:
        return sorted(self.boxes)

    def sort_key(self):
        return tuple(self.sorted_boxes())

    def addable(self) -> list[Box]:
        """Boxes whose addition keeps the set downward closed."""
        if not self.boxes:
            return [(0, 0, 0)]
        cands = {_step(b, ax, 1) for b in self.boxes for ax in range(3)}
        return sorted(c for c in cands - self.boxes
                      if all(c[ax] == 0 or _step(c, ax, -1) in self.boxes for ax in range(3)))

    def generators(self) -> list[Box]:
        """Exponents of the minimal monomial generators, in decreasing lex order (x > y > z)."""
        if not self.boxes:
            return [(0, 0, 0)]
        return sorted(self.addable(), reverse=True)

    def ideal_str(self, variables=("x", "y", "z")) -> str:
        gens = []
        for g in self.generators():
            mon = "".join(v + (f"^{e}" if e > 1 else "") for v, e in zip(variables, g) if e)
            gens.append(mon or "1")
        return "(" + ",".join(gens) + ")"

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.sorted_boxes()]

    def __repr__(self):
        return f"Partition3D({self.sorted_boxes()})"


def _step(b: Box, axis: int, d: int) -> Box:
    return tuple(c + d if i == axis else c for i, c in enumerate(b))


@lru_cache(maxsize=None)
def _enumerate(m: int) -> tuple[Partition3D, ...]:
    if m == 0:
        return (Partition3D(frozenset()),)
    seen = set()
    for pi in _enumerate(m - 1):
        for b in pi.addable():
            seen.add(pi.boxes | {b})
    return tuple(sorted((Partition3D(s) for s in seen), key=Partition3D.sort_key))


def enumerate_partitions(m: int) -> list[Partition3D]:
    """All 3D partitions of size ``m``, ordered lexicographically by sorted box list."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return list(_enumerate(m))


# Box permutations realising the sigma action between the two charts of a couple.
# Couple A (U0 <-> U1): x -> -u, y -> w, z -> -v, i.e. (i,j,k) -> (i,k,j).
# Couple B (U2 <-> U3): x' -> v', y' -> -u', z' -> -w', i.e. (i,j,k) -> (j,i,k).
SIGMA_AXES = {"A": (0, 2, 1), "B": (1, 0, 2)}


def sigma_transpose(pi: Partition3D, couple: str = "A") -> Partition3D:
    perm = SIGMA_AXES[couple]
    return Partition3D(frozenset(tuple(b[perm[i]] for i in range(3)) for b in pi.boxes))


def permute_axes(pi: Partition3D, perm) -> Partition3D:
    """Box ``b`` goes to the box whose coordinate ``perm[i]`` is ``b[i]``."""
    out = []
    for b in pi.boxes:
        nb = [0, 0, 0]
        for i in range(3):
            nb[perm[i]] = b[i]
        out.append(tuple(nb))
    return Partition3D(frozenset(out))


def q_poly(pi: Partition3D, s) -> VirtualCharacter:
    """Character of the quotient ring: one term ``t^(i s1 + j s2 + k s3)`` per box."""
    s1, s2, s3 = s
    terms = [((i * s1) + (j * s2) + (k * s3), 1) for i, j, k in pi.boxes]
    if not terms:
        return VirtualCharacter({}, arity=s1.arity)
    return VirtualCharacter(terms, arity=s1.arity)
