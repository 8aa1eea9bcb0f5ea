"""Permutations, signed permutations, and deterministic stabilizer chains.

Composition convention
----------------------
Products read left to right: ``a * b`` means "apply ``a`` first, then
``b``", so ``(a * b)(x) == b(a(x))``.  Transport along a path written
source-to-target is then a plain left-to-right product of the step
bijections.  ``compose(a, b)`` is the same operation as ``a * b``.

Group orders are exact Python integers; nothing here overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    """Permutations of different degrees were combined."""


class ClosureTooLarge(RuntimeError):
    """Brute-force closure exceeded its element budget."""


# Raw tuple helpers used in hot loops.  images[i] is the image of point i.

def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # apply a first, then b
    return tuple(b[x] for x in a)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


@dataclass(frozen=True)
class Perm:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images!r}")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(tuple(range(n)))

    @staticmethod
    def from_cycles(n: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Perm(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        # left-to-right: self acts first
        if len(self.images) != len(other.images):
            raise DegreeMismatch(f"{len(self.images)} vs {len(other.images)}")
        return Perm(_mul(self.images, other.images))

    def inverse(self) -> "Perm":
        return Perm(_inv(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2


def compose(a: Perm, b: Perm) -> Perm:
    """Left-to-right product: apply ``a``, then ``b``."""
    return a * b


def closure_small(gens: Iterable[Perm], degree: int | None = None,
                  limit: int = 10 ** 6) -> frozenset[Perm]:
    """All elements of <gens> by breadth-first multiplication.

    Intended as an oracle for small groups; raises ClosureTooLarge past
    ``limit`` elements.
    """
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise DegreeMismatch("mixed degrees in generating set")
    raw = [g.images for g in gens]
    ident = tuple(range(degree))
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in raw:
                c = _mul(a, g)
                if c not in elements:
                    elements.add(c)
                    nxt.append(c)
                    if len(elements) > limit:
                        raise ClosureTooLarge(f"more than {limit} elements")
        frontier = nxt
    return frozenset(Perm(t) for t in elements)


class _Level:
    """One level of a stabilizer chain: a base point, the generators of
    the stabilizer of all earlier base points, and a transversal mapping
    each orbit point gamma to an element u with u(beta) == gamma."""

    __slots__ = ("beta", "gens", "transversal")

    def __init__(self, beta: int, degree: int):
        self.beta = beta
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {beta: tuple(range(degree))}

    def rebuild(self, degree: int) -> None:
        tr = {self.beta: tuple(range(degree))}
        queue = [self.beta]
        while queue:
            gamma = queue.pop(0)
            u = tr[gamma]
            for s in self.gens:
                delta = s[gamma]
                if delta not in tr:
                    tr[delta] = _mul(u, s)
                    queue.append(delta)
        self.transversal = tr


def _is_identity(p: tuple[int, ...]) -> bool:
    return all(i == x for i, x in enumerate(p))


def _sift(chain: list[_Level] | tuple[_Level, ...], p: tuple[int, ...], start: int = 0):
    """Strip p through the chain; returns (residue, level reached)."""
    lvl = start
    while lvl < len(chain):
        level = chain[lvl]
        gamma = p[level.beta]
        u = level.transversal.get(gamma)
        if u is None:
            return p, lvl
        p = _mul(p, _inv(u))
        lvl += 1
    return p, len(chain)


def _verify_level(chain: list[_Level], i: int, degree: int) -> int | None:
    """Sift every Schreier generator of level i through the deeper chain.

    On the first failure the residue joins the generator lists of levels
    i+1 .. j (creating level j when needed) and j is returned so the
    caller can re-verify from there.  Returns None when the level is
    clean, which by Schreier's lemma pins the stabilizer exactly.
    """
    level = chain[i]
    level.rebuild(degree)
    for gamma in sorted(level.transversal):
        u = level.transversal[gamma]
        for s in level.gens:
            v = level.transversal[s[gamma]]
            schreier = _mul(_mul(u, s), _inv(v))
            residue, j = _sift(chain, schreier, i + 1)
            if _is_identity(residue):
                continue
            if j == len(chain):
                beta = next(p for p, x in enumerate(residue) if x != p)
                chain.append(_Level(beta, degree))
            for m in range(i + 1, j + 1):
                chain[m].gens.append(residue)
            return j
    return None


@dataclass(frozen=True)
class PermGroup:
    """Permutation group carried by a base and strong generating set.

    Built once by :func:`schreier_sims`; afterwards every query is
    read-only, so instances are safe to share between threads.
    """

    degree: int
    generators: tuple[Perm, ...]
    chain: tuple[_Level, ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        n = 1
        for level in self.chain:
            n *= len(level.transversal)
        return n

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.beta for level in self.chain)

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"{p.degree} vs {self.degree}")
        residue, _ = _sift(list(self.chain), p.images)
        return all(i == x for i, x in enumerate(residue))


def schreier_sims(gens: Iterable[Perm], degree: int | None = None) -> PermGroup:
    """Deterministic Schreier-Sims: exact order and membership tests.

    No randomization; identical input always yields the identical chain.
    """
    gens = tuple(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise DegreeMismatch("mixed degrees in generating set")
    raw = [g.images for g in gens if not g.is_identity()]
    chain: list[_Level] = []
    if raw:
        beta0 = next(p for p in range(degree) if any(g[p] != p for g in raw))
        first = _Level(beta0, degree)
        first.gens = list(raw)
        chain.append(first)
        i = 0
        while i >= 0:
            failed_at = _verify_level(chain, i, degree)
            if failed_at is None:
                i -= 1
            else:
                i = failed_at
    return PermGroup(degree=degree, generators=gens, chain=tuple(chain))


def contains(group: PermGroup, p: Perm) -> bool:
    return group.contains(p)


def recognize(group: PermGroup) -> str:
    """Name a group when the evidence is conclusive.

    Returns one of "trivial", "cyclic(k)", "alternating", "symmetric",
    or "other".  Cyclicity is decided exactly (abelian generators whose
    order lcm equals the group order); symmetric/alternating by order
    comparison against the full degree, with a generator-parity check.
    Ambiguous cases come back "other" rather than a guess.
    """
    if group.order == 1:
        return "trivial"
    gens = [g for g in group.generators if not g.is_identity()]
    if all(a * b == b * a for a, b in combinations(gens, 2)):
        exponent = math.lcm(*(g.order() for g in gens))
        if exponent == group.order:
            return f"cyclic({group.order})"
    n = group.degree
    if group.order == math.factorial(n):
        return "symmetric"
    if n >= 3 and group.order * 2 == math.factorial(n) \
            and all(g.parity() == 0 for g in gens):
        return "alternating"
    return "other"


@dataclass(frozen=True)
class SignedPerm:
    """A signed permutation: coordinate i maps to coordinate perm(i)
    carrying orientation signs[i].

    As a matrix, column i holds signs[i] in row perm(i); the group of
    these matrices is the symmetry group of the k-cube.  Products follow
    the same left-to-right convention as Perm.
    """

    perm: Perm
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.signs) != self.perm.degree:
            raise ValueError("signs length must match degree")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @staticmethod
    def identity(k: int) -> "SignedPerm":
        return SignedPerm(Perm.identity(k), (1,) * k)

    @property
    def degree(self) -> int:
        return self.perm.degree

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        # left-to-right: self acts first
        perm = self.perm * other.perm
        signs = tuple(self.signs[i] * other.signs[self.perm(i)]
                      for i in range(self.degree))
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        inv = self.perm.inverse()
        signs = tuple(self.signs[inv(i)] for i in range(self.degree))
        return SignedPerm(inv, signs)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and all(s == 1 for s in self.signs)

    def apply_address(self, bits: tuple[int, ...]) -> tuple[int, ...]:
        """Act on a cube corner address in {0,1}^k."""
        out = [0] * self.degree
        for i, b in enumerate(bits):
            out[self.perm(i)] = b if self.signs[i] == 1 else 1 - b
        return tuple(out)


def signed_parity(s: SignedPerm) -> int:
    """0 when the count of -1 signs is even, 1 otherwise."""
    return sum(1 for x in s.signs if x == -1) % 2


def all_in_even_subgroup(gens: Iterable[SignedPerm]) -> bool:
    """True when every generator has even sign count.

    Sign parity is a homomorphism onto Z_2, so even generators suffice
    for the whole generated group to be even.
    """
    return all(signed_parity(g) == 0 for g in gens)
