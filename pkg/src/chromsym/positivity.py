"""Positivity verdicts and combinatorial obstructions to e-positivity.

A connected graph whose chromatic symmetric function is e-positive has a
connected partition of every type: for each partition lambda of |V| the vertex
set splits into blocks of sizes lambda_i each inducing a connected subgraph.
``missing_partition_scan`` inventories the types without such a partition, and
the ``*_missing_type`` helpers give the predicted obstruction types for sun
graphs together with the coefficient values they force.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .csf import compute_csf
from .graphs import Graph, GraphSpec, parse_graph_spec, sun_graph
from .partitions import Partition, partitions_of
from .symfunc import Basis, SymFunc, e_to_s

#: default ceiling on |V| for full missing-type scans
DEFAULT_SCAN_VERTEX_CAP = 14


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of a positivity check in one basis, recording the engine used."""

    positive: bool
    basis: Basis
    witness: tuple | None  # (Partition, Fraction) for the smallest negative term
    engine: str

    def to_json_obj(self) -> dict:
        wit = None
        if self.witness is not None:
            lam, c = self.witness
            wit = {"partition": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
        return {
            "positive": self.positive,
            "basis": self.basis.value,
            "witness": wit,
            "engine": self.engine,
        }


@dataclass(frozen=True)
class ConnectedPartitionWitness:
    """Blocks of a connected partition, each a sorted vertex tuple."""

    blocks: tuple

    def type(self) -> Partition:
        return Partition(len(b) for b in self.blocks)


def e_positivity(target, engine: str = "auto", max_subset_edges=None) -> PositivityReport:
    """Is X_G e-positive?  Witness is the smallest partition with a negative coefficient."""
    f, used = compute_csf(target, engine=engine, max_subset_edges=max_subset_edges)
    ok, witness = f.is_nonnegative()
    return PositivityReport(ok, Basis.E, witness, used)


def s_positivity(target, engine: str = "auto", max_subset_edges=None) -> PositivityReport:
    """Is X_G s-positive (Schur-positive)?"""
    f, used = compute_csf(target, engine=engine, max_subset_edges=max_subset_edges)
    ok, witness = e_to_s(f).is_nonnegative()
    return PositivityReport(ok, Basis.S, witness, used)


# ----------------------------------------------------- connected partitions


def _connected_blocks(adj, start, size, allowed):
    """Yield the connected ``size``-subsets of ``allowed`` containing ``start``.

    Each subset is produced exactly once: candidates are tried in increasing
    order and banned for the remainder of their branch after exploration.
    """
    if size == 1:
        yield frozenset((start,))
        return

    def grow(current, frontier, banned):
        if len(current) == size:
            yield frozenset(current)
            return
        local_ban = set()
        for i, u in enumerate(frontier):
            ext = [
                w
                for w in adj[u]
                if w in allowed
                and w not in current
                and w not in banned
                and w not in local_ban
                and w not in frontier[i + 1:]
            ]
            yield from grow(current | {u}, frontier[i + 1:] + ext, banned | local_ban)
            local_ban.add(u)

    first = [w for w in adj[start] if w in allowed]
    yield from grow({start}, first, set())


def has_connected_partition(g: Graph, lam) -> ConnectedPartitionWitness | None:
    """A vertex partition with connected blocks of sizes ``lam``, or None.

    Searches by always placing the smallest unassigned vertex, trying each
    distinct remaining part size once per level.
    """
    lam = Partition(lam)
    if lam.weight != g.n:
        raise ValueError(f"partition weighs {lam.weight}, graph has {g.n} vertices")
    adj = g.adjacency()

    def search(parts, remaining):
        if not parts:
            return []
        v = min(remaining)
        tried = set()
        for idx, size in enumerate(parts):
            if size in tried:
                continue
            tried.add(size)
            rest_parts = parts[:idx] + parts[idx + 1:]
            for block in _connected_blocks(adj, v, size, remaining):
                sub = search(rest_parts, remaining - block)
                if sub is not None:
                    return [tuple(sorted(block))] + sub
        return None

    found = search(tuple(lam), frozenset(range(g.n)))
    if found is None:
        return None
    return ConnectedPartitionWitness(tuple(found))


def missing_partition_scan(g: Graph, max_vertices=None) -> list:
    """All types lambda of |V| with no connected partition, in canonical order.

    Nonempty output certifies that X_G is not e-positive (for connected G);
    empty output is necessary but not sufficient for e-positivity.
    """
    cap = DEFAULT_SCAN_VERTEX_CAP if max_vertices is None else max_vertices
    if g.n > cap:
        raise ValueError(f"full scans guarded at {cap} vertices, graph has {g.n}")
    return [lam for lam in partitions_of(g.n) if has_connected_partition(g, lam) is None]


# ------------------------------------------------------------ sun obstructions


def uniform_sun_missing_type(n: int, k: int) -> Partition:
    """The two-part type that suns with n equal rays of length k cannot realize.

    Both the ordinary and the complete sun on parameters (n, k) lack a
    connected partition of this type, so neither is e-positive.
    """
    if n < 3 or k < 1:
        raise ValueError("need n >= 3 and k >= 1")
    d = n * (k + 1)
    if k == 1:
        if n % 2 == 0:
            return Partition((n + 1, n - 1))
        return Partition((n, n))
    if d % 2 == 0:
        return Partition((d // 2 + 1, d // 2 - 1))
    return Partition(((d + 1) // 2, (d - 1) // 2))


def uniform_sun_coefficient(n: int, k: int) -> int:
    """The e-coefficient of ``uniform_sun_missing_type(n, k)`` in X of the ordinary sun."""
    if n < 3 or k < 1:
        raise ValueError("need n >= 3 and k >= 1")
    if k == 1:
        return 2 * n * (1 - n) if n % 2 == 0 else n * (1 - n)
    return n * (k + 1) * (1 - n)


def gcd_missing_type(rays) -> Partition | None:
    """A two-part type missing from any sun whose ray lengths share a common factor.

    With the rays sorted so r_1 is longest: if gcd(r_i + 1) > 1 over all rays
    and r_1 + 2 <= (sum of the other rays) + n - 2, the type
    ((sum of others) + n - 2, r_1 + 2) has no connected partition in either
    body kind.  Returns None when either condition fails.
    """
    rays = sorted((int(r) for r in rays), reverse=True)
    n = len(rays)
    if n < 3 or any(r < 1 for r in rays):
        raise ValueError("need at least three positive rays")
    g = 0
    for r in rays:
        g = gcd(g, r + 1)
    if g <= 1:
        return None
    big = rays[0] + 2
    other = sum(rays[1:]) + n - 2
    if big > other:
        return None
    return Partition((other, big))


def triangle_sun_missing_type(a: int, b: int, c: int) -> Partition | None:
    """The two-part type missing from the three-ray sun S(3; a, b, c).

    Inputs are sorted internally so a is the longest ray.  When a < b + c the
    sun has no connected partition of type (b + c + 1, a + 2); otherwise the
    obstruction does not apply and None is returned.
    """
    a, b, c = sorted((a, b, c), reverse=True)
    if c < 1:
        raise ValueError("rays must be positive")
    if a >= b + c:
        return None
    return Partition((b + c + 1, a + 2))


# ------------------------------------------------------------------ matchings


def _max_matching_covers(g: Graph, allow_unmatched: int) -> bool:
    """True if some matching leaves at most ``allow_unmatched`` vertices uncovered."""
    adj = g.adjacency()

    def rec(uncovered, budget):
        if not uncovered:
            return True
        v = min(uncovered)
        rest = uncovered - {v}
        for w in adj[v]:
            if w in rest and rec(rest - {w}, budget):
                return True
        return budget > 0 and rec(rest, budget - 1)

    return rec(frozenset(range(g.n)), allow_unmatched)


def sun_matching_criterion(spec) -> bool:
    """Whether a sun has a perfect (even order) or near-perfect (odd order) matching.

    Decided on the induced body subgraph over the attachment vertices of the
    even-length rays: odd rays saturate themselves, and each even ray forces
    its attachment vertex to pair inside that induced subgraph.
    """
    if isinstance(spec, str):
        spec = parse_graph_spec(spec)
    if spec.family not in ("sun", "csun"):
        raise ValueError("matching criterion applies to sun and csun specs")
    n, rays = spec.args
    sun_graph(n, rays, body="cycle" if spec.family == "sun" else "complete")  # validate params
    even_idx = [i for i, r in enumerate(rays) if r % 2 == 0]
    if spec.family == "csun":
        sub_edges = [
            (a, b)
            for ii, a in enumerate(even_idx)
            for b in even_idx[ii + 1:]
        ]
    else:
        present = set(even_idx)
        sub_edges = [
            (i, j)
            for i in even_idx
            for j in [(i + 1) % n]
            if j in present and i != j
        ]
    local = {v: i for i, v in enumerate(even_idx)}
    induced = Graph(len(even_idx), [(local[a], local[b]) for a, b in sub_edges])
    return _max_matching_covers(induced, len(even_idx) % 2)


def sun_has_near_perfect_matching(spec) -> bool:
    """Direct matching search on the full sun graph (the slow cross-check)."""
    if isinstance(spec, str):
        spec = parse_graph_spec(spec)
    g = spec.build()
    return _max_matching_covers(g, g.n % 2)


# ------------------------------------------------------------------- spiders


def spider_nonpositivity_criterion(legs, i: int) -> bool:
    """Floor-quotient test certifying a spider is not e-positive.

    Legs are taken in the given order (not resorted).  With n = 1 + sum(legs),
    q = n // (legs[i-1] + 1) and t = sum of the legs after position i
    (positions counted from 1), the spider is not e-positive whenever
    q >= (legs[i-1] + 1) / (t - 1); the comparison is done exactly as
    q * (t - 1) >= legs[i-1] + 1.  Requires 2 <= i < number of legs and
    t >= 2.  A False verdict is inconclusive.
    """
    legs = tuple(int(x) for x in legs)
    if any(x < 1 for x in legs):
        raise ValueError("leg lengths must be positive")
    d = len(legs)
    if not (2 <= i < d):
        raise ValueError("position must satisfy 2 <= i < number of legs")
    t = sum(legs[i:])
    if t <= 1:
        raise ValueError("trailing legs must sum to at least 2")
    n = 1 + sum(legs)
    q = n // (legs[i - 1] + 1)
    return q * (t - 1) >= legs[i - 1] + 1
