"""
Twisted Bruhat graphs on lower weight intervals.

For a dominant weight lam' the interval I(lam') holds all weights below
it in the Bruhat order on the weight lattice.  Each pair of interval
weights on a common root line {mu, mu - k*beta} (k > 0) is joined by a
single directed edge labeled by a positive affine coroot:

    arrow (mu - k*beta) -> mu, label (<mu,b^v> - k) delta + beta^v,
        when <mu,b^v> >= k;
    arrow mu -> (mu - k*beta), label (k - <mu,b^v>) delta - beta^v,
        otherwise.

Arrows point from Bruhat-smaller to Bruhat-larger, so at stage 0 the
in-degree of every vertex equals its Bruhat length.  At stage m the
edges whose labels are the first m coroots in the order

    delta - a_{1,n}^v < delta - a_{2,n}^v < ... < delta - a_n^v
        < 2 delta - a_{1,n}^v < ...

are reversed; stage infinity reverses every edge of that shape.  Labels
with sign +1 or with finite part inside the a_1..a_{n-1} subsystem are
never reversed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .root_data import (
    Root,
    Weight,
    bruhat_leq_dominant,
    in_parabolic,
    is_dominant,
    length,
    length_along,
    pairing,
    positive_roots,
    root_vector,
)

Stage = Union[int, float]

STAGE_INFINITY: Stage = math.inf


@dataclass(frozen=True)
class AffineCoroot:
    """A positive real affine coroot `level * delta + sign * root^v`."""

    level: int
    root: Root
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.level < 0 or (self.level == 0 and self.sign != 1):
            raise ValueError(f"{self} is not a positive affine coroot")

    def reversal_index(self, rank: int) -> int | None:
        """Position in the reversal order, or None if never reversed."""
        if self.sign != -1 or in_parabolic(self.root, rank):
            return None
        return (self.level - 1) * rank + self.root[0]

    def render(self) -> str:
        j, k = self.root
        root_text = f"α[{j},{k}]∨"
        sign_text = "+" if self.sign == 1 else "-"
        if self.level == 0:
            return root_text
        level_text = "δ" if self.level == 1 else f"{self.level}δ"
        return f"{level_text}{sign_text}{root_text}"

    def to_json_dict(self) -> dict:
        return {"level": self.level, "root": list(self.root), "sign": self.sign}


@dataclass(frozen=True)
class TwistedGraph:
    """The stage-m twisted Bruhat graph on I(base); immutable."""

    base: Weight
    stage: Stage
    vertices: tuple[Weight, ...]
    edges: tuple[tuple[Weight, Weight, AffineCoroot], ...]
    indegree: dict[Weight, int] = field(repr=False)

    def arr(self, mu: Weight) -> int:
        """Number of arrows directed to mu."""
        mu = tuple(mu)
        if mu not in self.indegree:
            raise ValueError(f"{mu} is not a vertex of the graph over {self.base}")
        return self.indegree[mu]


def build_interval(lambda_prime: Weight, rank: int) -> tuple[Weight, ...]:
    """All weights below lambda_prime, in lexicographic order.

    Enumerates integer vectors with the same coordinate sum and entries
    in [0, max part]; for nonnegative dominant weights this bounding box
    is exact.
    """
    lam = tuple(lambda_prime)
    if len(lam) != rank + 1:
        raise ValueError(f"weight {lam} has wrong length for rank {rank}")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if lam and lam[-1] < 0:
        raise ValueError(f"{lam} has negative coordinates")
    total = sum(lam)
    top = lam[0] if lam else 0

    out: list[Weight] = []

    def extend(prefix: list[int], remaining: int) -> None:
        slots = rank + 1 - len(prefix)
        if slots == 0:
            if remaining == 0:
                candidate = tuple(prefix)
                if bruhat_leq_dominant(candidate, lam):
                    out.append(candidate)
            return
        lo = max(0, remaining - top * (slots - 1))
        hi = min(top, remaining)
        for value in range(lo, hi + 1):
            prefix.append(value)
            extend(prefix, remaining - value)
            prefix.pop()

    extend([], total)
    return tuple(out)


def build_graph(lambda_prime: Weight, stage: Stage, rank: int | None = None) -> TwistedGraph:
    """The twisted Bruhat graph on I(lambda_prime) at the given stage."""
    lam = tuple(lambda_prime)
    n = rank if rank is not None else len(lam) - 1
    if stage != STAGE_INFINITY and (not isinstance(stage, int) or stage < 0):
        raise ValueError(f"stage must be a nonnegative integer or infinity, got {stage}")
    vertices = build_interval(lam, n)
    vertex_set = set(vertices)
    edges: list[tuple[Weight, Weight, AffineCoroot]] = []
    indegree = {mu: 0 for mu in vertices}

    for mu in vertices:
        for beta in positive_roots(n):
            vec = root_vector(beta, n)
            p = pairing(mu, beta)
            k = 1
            while True:
                nu = tuple(a - k * b for a, b in zip(mu, vec))
                if nu not in vertex_set:
                    break
                if p >= k:
                    src, dst = nu, mu
                    label = AffineCoroot(p - k, beta, 1)
                else:
                    src, dst = mu, nu
                    label = AffineCoroot(k - p, beta, -1)
                idx = label.reversal_index(n)
                if idx is not None and idx <= stage:
                    src, dst = dst, src
                edges.append((src, dst, label))
                indegree[dst] += 1
                k += 1

    return TwistedGraph(lam, stage, vertices, tuple(edges), indegree)


def arr(mu: Weight, graph: TwistedGraph) -> int:
    """In-degree of mu in the graph."""
    return graph.arr(mu)


def stage_reflection(m_plus_1: int, rank: int) -> AffineCoroot:
    """The (m+1)-th coroot in the reversal order: c*delta - a_{j,n}^v.

    >>> stage_reflection(3, 2)
    AffineCoroot(level=2, root=(1, 2), sign=-1)
    """
    if m_plus_1 < 1:
        raise ValueError(f"stage index must be >= 1, got {m_plus_1}")
    c = -(-m_plus_1 // rank)
    j = m_plus_1 - (c - 1) * rank
    return AffineCoroot(c, (j, rank), -1)


def apply_affine_reflection(a: AffineCoroot, mu: Weight) -> Weight:
    """The affine reflection attached to a coroot, acting on weights.

    For c*delta - b^v the weight moves by -(c + <mu,b^v>) b; for
    c*delta + b^v by -(<mu,b^v> - c) b.  Consistent with edge labels:
    reflecting an edge's head yields its tail.
    """
    n = len(mu) - 1
    vec = root_vector(a.root, n)
    p = pairing(mu, a.root)
    shift = (a.level + p) if a.sign == -1 else (p - a.level)
    return tuple(x - shift * v for x, v in zip(mu, vec))


def arr_infinity_formula(mu: Weight, lambda_prime: Weight) -> int:
    """Closed form for the stage-infinity in-degree of mu in I(lambda_prime).

    Sums, over roots outside the a_1..a_{n-1} subsystem, the largest k
    with mu - k*beta still below lambda_prime, plus the lengths along
    the remaining roots.
    """
    lam = tuple(lambda_prime)
    n = len(lam) - 1
    if not bruhat_leq_dominant(mu, lam):
        raise ValueError(f"{mu} is not below {lam}")
    total = 0
    for beta in positive_roots(n):
        if in_parabolic(beta, n):
            total += length_along(mu, beta)
        else:
            vec = root_vector(beta, n)
            k = 0
            while True:
                nu = tuple(a - (k + 1) * b for a, b in zip(mu, vec))
                if not bruhat_leq_dominant(nu, lam):
                    break
                k += 1
            total += k
    return total


def stabilization_stage(lambda_prime: Weight, rank: int | None = None) -> int:
    """Smallest M with the stage-M graph equal to the stage-infinity graph.

    Computed as the largest reversal index over the edge labels of the
    untwisted graph (0 when no edge is reversible).
    """
    graph = build_graph(lambda_prime, 0, rank)
    n = rank if rank is not None else len(tuple(lambda_prime)) - 1
    best = 0
    for _, _, label in graph.edges:
        idx = label.reversal_index(n)
        if idx is not None and idx > best:
            best = idx
    return best


def untwisted_length_check(lambda_prime: Weight) -> bool:
    """Whether stage-0 in-degrees equal Bruhat lengths (pins conventions)."""
    graph = build_graph(lambda_prime, 0)
    return all(graph.arr(mu) == length(mu) for mu in graph.vertices)
