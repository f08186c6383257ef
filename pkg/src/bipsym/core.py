"""Vertices, automorphisms and cycle signatures of complete bipartite graphs.

A K_{n,m} has vertex parts V = {v1..vn} and W = {w1..wm}.  Internally an
automorphism is stored as a permutation of global indices 0..n+m-1 where
0..n-1 are v1..vn and n..n+m-1 are w1..wm.  Every value here is immutable;
all operations are pure functions.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, NamedTuple

from .errors import (
    DuplicateVertex,
    MixedParts,
    NotBijective,
    ParseError,
    ShapeMismatch,
    SwapOnUnequalParts,
    TooLarge,
)

DEFAULT_ENUMERATION_CAP = 10_000_000


class Part(Enum):
    V = "v"
    W = "w"

    def __lt__(self, other: "Part") -> bool:  # V sorts before W
        return self.value < other.value


class SideAction(Enum):
    PRESERVING = "preserving"
    SWAPPING = "swapping"


class VertexId(NamedTuple):
    part: Part
    index: int  # 1-based within its part

    @property
    def label(self) -> str:
        return f"{self.part.value}{self.index}"

    @staticmethod
    def from_label(label: str) -> "VertexId":
        m = re.fullmatch(r"([vwVW])(\d+)", label.strip())
        if m is None:
            raise ParseError(f"not a vertex token: {label!r}")
        return VertexId(Part(m.group(1).lower()), int(m.group(2)))


@dataclass(frozen=True)
class BipartiteShape:
    """Sizes (n, m) of the two vertex parts of K_{n,m}."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError(f"part sizes must be at least 1, got ({self.n}, {self.m})")

    @property
    def size(self) -> int:
        return self.n + self.m

    def vertices(self) -> Iterator[VertexId]:
        for i in range(1, self.n + 1):
            yield VertexId(Part.V, i)
        for j in range(1, self.m + 1):
            yield VertexId(Part.W, j)

    def contains(self, v: VertexId) -> bool:
        bound = self.n if v.part is Part.V else self.m
        return 1 <= v.index <= bound

    def global_index(self, v: VertexId) -> int:
        if not self.contains(v):
            raise ValueError(f"vertex {v.label} out of range for K_{{{self.n},{self.m}}}")
        return v.index - 1 if v.part is Part.V else self.n + v.index - 1

    def vertex_at(self, g: int) -> VertexId:
        if not 0 <= g < self.size:
            raise ValueError(f"global index {g} out of range")
        if g < self.n:
            return VertexId(Part.V, g + 1)
        return VertexId(Part.W, g - self.n + 1)


@dataclass(frozen=True)
class BipartiteAutomorphism:
    """A validated automorphism of K_{n,m}: it fixes the parts setwise or swaps them."""

    shape: BipartiteShape
    perm: tuple[int, ...]  # perm[g] = global index of the image of vertex g

    def __call__(self, v: VertexId) -> VertexId:
        return self.shape.vertex_at(self.perm[self.shape.global_index(v)])

    @property
    def side_action(self) -> SideAction:
        if self.perm[0] < self.shape.n:
            return SideAction.PRESERVING
        return SideAction.SWAPPING

    def is_identity(self) -> bool:
        return all(p == g for g, p in enumerate(self.perm))

    def cycles(self) -> tuple[tuple[VertexId, ...], ...]:
        """Non-trivial cycles as vertex tuples, each starting at its smallest
        global index, sorted by that index.  Fixed vertices are omitted."""
        out = []
        seen = [False] * len(self.perm)
        for start in range(len(self.perm)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            g = self.perm[start]
            while g != start:
                seen[g] = True
                cyc.append(g)
                g = self.perm[g]
            if len(cyc) > 1:
                out.append(tuple(self.shape.vertex_at(g) for g in cyc))
        return tuple(out)

    def fixed_vertices(self) -> tuple[VertexId, ...]:
        return tuple(
            self.shape.vertex_at(g) for g, p in enumerate(self.perm) if p == g
        )

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()), 1)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(v.label for v in c) + ")" for c in cycs)

    def __str__(self) -> str:
        return self.cycle_string()


def identity_automorphism(shape: BipartiteShape) -> BipartiteAutomorphism:
    return BipartiteAutomorphism(shape, tuple(range(shape.size)))


def make_automorphism(
    shape: BipartiteShape, image: Mapping[VertexId, VertexId]
) -> BipartiteAutomorphism:
    """Validate a vertex mapping and return the automorphism it defines.

    Raises NotBijective, MixedParts, or SwapOnUnequalParts when the mapping
    is not an automorphism of K_{n,m}.
    """
    perm = [-1] * shape.size
    for v in shape.vertices():
        img = image.get(v)
        if img is None:
            raise NotBijective(f"image not defined for vertex {v.label}")
        if not shape.contains(img):
            raise NotBijective(f"image {img.label} of {v.label} is out of range")
        perm[shape.global_index(v)] = shape.global_index(img)

    v_parts = {image[VertexId(Part.V, i)].part for i in range(1, shape.n + 1)}
    w_parts = {image[VertexId(Part.W, j)].part for j in range(1, shape.m + 1)}
    if len(v_parts) > 1:
        raise MixedParts("mapping sends V to both parts")
    if v_parts == {Part.W}:
        if shape.n != shape.m:
            raise SwapOnUnequalParts(
                f"mapping swaps parts but n={shape.n} != m={shape.m}"
            )
        if w_parts != {Part.V}:
            raise MixedParts("V maps to W but W does not map back to V")
    elif w_parts != {Part.W}:
        raise MixedParts("W maps to V but V does not map to W")

    if len(set(perm)) != shape.size:
        raise NotBijective("mapping is not injective on the vertex set")
    return BipartiteAutomorphism(shape, tuple(perm))


_TOKEN_RE = re.compile(r"[vwVW]\d+")


def parse_cycles(shape: BipartiteShape, text: str) -> BipartiteAutomorphism:
    """Parse cycle notation like ``(v1 v2 v3)(w1 w2)``.

    Tokens are v1..vn / w1..wm, whitespace separated inside parentheses;
    vertices not listed are fixed.
    """
    rest = text
    groups: list[list[str]] = []
    pos = 0
    while pos < len(rest):
        ch = rest[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"unexpected character {ch!r} at position {pos}")
        end = rest.find(")", pos)
        if end < 0:
            raise ParseError("unbalanced parenthesis")
        body = rest[pos + 1 : end]
        if "(" in body:
            raise ParseError("nested parenthesis")
        tokens = body.replace(",", " ").split()
        for t in tokens:
            if not _TOKEN_RE.fullmatch(t):
                raise ParseError(f"not a vertex token: {t!r}")
        groups.append(tokens)
        pos = end + 1

    mapping: dict[VertexId, VertexId] = {}
    seen: set[VertexId] = set()
    for tokens in groups:
        ids = [VertexId.from_label(t) for t in tokens]
        for v in ids:
            if not shape.contains(v):
                raise ParseError(
                    f"vertex {v.label} out of range for K_{{{shape.n},{shape.m}}}"
                )
            if v in seen:
                raise DuplicateVertex(f"vertex {v.label} listed twice")
            seen.add(v)
        for a, b in zip(ids, ids[1:] + ids[:1]):
            mapping[a] = b
    for v in shape.vertices():
        mapping.setdefault(v, v)
    return make_automorphism(shape, mapping)


def compose(
    a: BipartiteAutomorphism, b: BipartiteAutomorphism
) -> BipartiteAutomorphism:
    """Composition a after b: (compose(a, b))(x) = a(b(x))."""
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot compose shapes {a.shape} and {b.shape}")
    return BipartiteAutomorphism(a.shape, tuple(a.perm[p] for p in b.perm))


def inverse(a: BipartiteAutomorphism) -> BipartiteAutomorphism:
    inv = [0] * len(a.perm)
    for g, p in enumerate(a.perm):
        inv[p] = g
    return BipartiteAutomorphism(a.shape, tuple(inv))


def power(a: BipartiteAutomorphism, k: int) -> BipartiteAutomorphism:
    if k < 0:
        return power(inverse(a), -k)
    k %= a.order()
    result = identity_automorphism(a.shape)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class SubdividedGraph:
    """K_{n,m} with degree-2 vertices added at the midpoints of some edges.

    Each subdivision vertex is a record (edge, id) where the edge is the
    (V-endpoint, W-endpoint) pair; at most one subdivision vertex per edge.
    """

    shape: BipartiteShape
    subdivision_vertices: tuple[tuple[tuple[VertexId, VertexId], str], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for (a, b), _ in self.subdivision_vertices:
            if a.part is not Part.V or b.part is not Part.W:
                raise ValueError(f"subdivision edge ({a.label}, {b.label}) is not V-W")
            if not (self.shape.contains(a) and self.shape.contains(b)):
                raise ValueError(f"subdivision edge ({a.label}, {b.label}) out of range")
            if (a, b) in seen:
                raise ValueError(f"edge ({a.label}, {b.label}) subdivided twice")
            seen.add((a, b))

    def edges(self) -> Iterator[tuple[VertexId | str, VertexId | str]]:
        """Edges of the subdivided graph; subdivision vertices appear as
        their string ids."""
        by_edge = {edge: zid for edge, zid in self.subdivision_vertices}
        for i in range(1, self.shape.n + 1):
            for j in range(1, self.shape.m + 1):
                v, w = VertexId(Part.V, i), VertexId(Part.W, j)
                z = by_edge.get((v, w))
                if z is None:
                    yield v, w
                else:
                    yield v, z
                    yield z, w


@dataclass(frozen=True)
class CycleSignature:
    """Cycle structure of an automorphism; the classifier's sole input.

    Cycle-length multisets are stored as sorted tuples, split by which parts
    the cycle visits.  Fixed vertices are counted separately, and r is the
    lcm of all cycle lengths (fixed vertices counting as 1-cycles).
    """

    shape: BipartiteShape
    side_action: SideAction
    r: int
    fixed_v: int
    fixed_w: int
    pure_v_cycles: tuple[int, ...]
    pure_w_cycles: tuple[int, ...]
    mixed_cycles: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("pure_v_cycles", "pure_w_cycles", "mixed_cycles"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))
        if self.side_action is SideAction.SWAPPING and (
            self.fixed_v or self.fixed_w or self.pure_v_cycles or self.pure_w_cycles
        ):
            raise ValueError("a part-swapping automorphism has only mixed cycles")


def signature(aut: BipartiteAutomorphism) -> CycleSignature:
    """Decompose into cycles and classify each as pure-V, pure-W, or mixed."""
    n = aut.shape.n
    pure_v: list[int] = []
    pure_w: list[int] = []
    mixed: list[int] = []
    for cyc in aut.cycles():
        parts = {v.part for v in cyc}
        if parts == {Part.V}:
            pure_v.append(len(cyc))
        elif parts == {Part.W}:
            pure_w.append(len(cyc))
        else:
            mixed.append(len(cyc))
    fixed = aut.fixed_vertices()
    fixed_v = sum(1 for v in fixed if v.part is Part.V)
    fixed_w = len(fixed) - fixed_v
    return CycleSignature(
        shape=aut.shape,
        side_action=aut.side_action,
        r=math.lcm(*pure_v, *pure_w, *mixed, 1),
        fixed_v=fixed_v,
        fixed_w=fixed_w,
        pure_v_cycles=tuple(pure_v),
        pure_w_cycles=tuple(pure_w),
        mixed_cycles=tuple(mixed),
    )


def interchange_parts(sig: CycleSignature) -> CycleSignature:
    """The same signature with the roles of V and W exchanged."""
    return CycleSignature(
        shape=BipartiteShape(sig.shape.m, sig.shape.n),
        side_action=sig.side_action,
        r=sig.r,
        fixed_v=sig.fixed_w,
        fixed_w=sig.fixed_v,
        pure_v_cycles=sig.pure_w_cycles,
        pure_w_cycles=sig.pure_v_cycles,
        mixed_cycles=sig.mixed_cycles,
    )


def automorphism_count(shape: BipartiteShape) -> int:
    base = math.factorial(shape.n) * math.factorial(shape.m)
    return 2 * base if shape.n == shape.m else base


def enumerate_automorphisms(
    shape: BipartiteShape, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[BipartiteAutomorphism]:
    """Stream every automorphism of K_{n,m} exactly once.

    Order is lexicographic over (V-permutation, W-permutation, swap-flag),
    the swap flag varying fastest.  Raises TooLarge when n!*m! exceeds cap.
    """
    pairs = math.factorial(shape.n) * math.factorial(shape.m)
    if pairs > cap:
        raise TooLarge(f"n!*m! = {pairs} exceeds cap {cap}")
    return _enumerate(shape)


def _enumerate(shape: BipartiteShape) -> Iterator[BipartiteAutomorphism]:
    n, m = shape.n, shape.m
    swap = n == m
    for vp in itertools.permutations(range(n)):
        for wp in itertools.permutations(range(m)):
            yield BipartiteAutomorphism(shape, vp + tuple(n + j for j in wp))
            if swap:
                yield BipartiteAutomorphism(
                    shape, tuple(n + i for i in vp) + tuple(wp)
                )
