"""Exact verification of the recursion and expansion identities.

Every ``verify_*`` operation computes both sides of one identity with
independent engines — the left side by an oracle (edge-subset expansion or
deletion-contraction), the right side from closed family forms — and returns
an :class:`IdentityReport` carrying the exact difference.  ``run_grid``
sweeps an identity over its whole in-guard parameter grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .csf import (
    ChromPoly,
    DEFAULT_CHROMPOLY_EDGE_CAP,
    DEFAULT_SUBSET_EDGE_CAP,
    chromatic_poly_closed,
    chromatic_poly_dc,
    compute_csf,
    csf_complete_closed,
    csf_complete_dumbbell_closed,
    csf_cycle_closed,
    csf_dumbbell_closed,
    csf_lollipop_closed,
    csf_path_closed,
    csf_tadpole_closed,
)
from .graphs import Graph, GraphSpec, parse_graph_spec, spider_graph, sun_graph
from .partitions import Partition
from .positivity import triangle_sun_missing_type, uniform_sun_missing_type
from .symfunc import Basis, SymFunc

#: default ceiling on |V| for identity parameter grids
DEFAULT_GRID_VERTEX_CAP = 14


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, Graph):
        return {"vertices": value.n, "edges": [list(e) for e in value.edge_list]}
    if isinstance(value, GraphSpec):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class IdentityReport:
    """Two sides of one identity and their exact difference.

    For the grid-level distinguishability claim there is no equation;
    ``lhs``/``rhs``/``difference`` stay None and ``params`` carries any
    counterexample found.
    """

    name: str
    params: dict
    lhs: object
    rhs: object
    equal: bool
    difference: object

    def to_json_obj(self) -> dict:
        def side(x):
            return None if x is None else x.to_json_obj()

        return {
            "name": self.name,
            "params": _jsonable(self.params),
            "equal": self.equal,
            "lhs": side(self.lhs),
            "rhs": side(self.rhs),
            "difference": side(self.difference),
        }


def _report(name: str, params: dict, lhs, rhs) -> IdentityReport:
    return IdentityReport(name, params, lhs, rhs, lhs == rhs, lhs - rhs)


@lru_cache(maxsize=1024)
def _oracle_by_spec(spec_text: str) -> SymFunc:
    f, _ = compute_csf(spec_text, engine="oracle")
    return f


def _oracle(target) -> SymFunc:
    """Oracle CSF (never a closed form), cached per spec string."""
    if isinstance(target, GraphSpec):
        target = str(target)
    if isinstance(target, str):
        return _oracle_by_spec(target)
    f, _ = compute_csf(target, engine="oracle")
    return f


def _subsets(g: Graph) -> SymFunc:
    f, _ = compute_csf(g, engine="subsets")
    return f


def first_triangle(g: Graph):
    """The lexicographically first triangle of g as three edges, or None."""
    adj = g.adjacency()
    for u in range(g.n):
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[u]:
                if w > v and w in adj[v]:
                    return ((u, v), (u, w), (v, w))
    return None


def verify_triple_deletion(target, e1=None, e2=None, e3=None) -> IdentityReport:
    """X_G = X_{G minus e1} + X_{G minus e2} - X_{G minus e1,e2} for a triangle e1,e2,e3.

    All four functions come from the edge-subset oracle.  When no edges are
    given, the lexicographically first triangle of the graph is used.
    """
    spec = None
    if isinstance(target, str):
        spec = parse_graph_spec(target)
    elif isinstance(target, GraphSpec):
        spec = target
    g = spec.build() if spec is not None else target
    if e1 is None:
        tri = first_triangle(g)
        if tri is None:
            raise ValueError("graph has no triangle")
        e1, e2, e3 = tri
    edges = tuple(tuple(sorted(e)) for e in (e1, e2, e3))
    if len(set(edges)) != 3 or any(e not in g.edges for e in edges):
        raise ValueError("edges must be three distinct edges of the graph")
    if len({v for e in edges for v in e}) != 3:
        raise ValueError("edges do not form a triangle")
    e1, e2, _ = edges

    def minus(*gone):
        return Graph(g.n, [e for e in g.edge_list if e not in gone])

    lhs = _subsets(g)
    rhs = _subsets(minus(e1)) + _subsets(minus(e2)) - _subsets(minus(e1, e2))
    params = {"target": spec if spec is not None else g, "triangle": list(edges)}
    return _report("triple_deletion", params, lhs, rhs)


def verify_sun_coefficient(n: int, k: int) -> IdentityReport:
    """The predicted negative e-coefficient of the sun with n equal rays of length k.

    Compares the oracle coefficient at ``uniform_sun_missing_type(n, k)``
    against the case value: 2n(1-n) for k = 1 with n even, n(1-n) for k = 1
    with n odd, and n(k+1)(1-n) for k >= 2.
    """
    lam = uniform_sun_missing_type(n, k)
    if k == 1:
        expected = 2 * n * (1 - n) if n % 2 == 0 else n * (1 - n)
    else:
        expected = n * (k + 1) * (1 - n)
    spec = f"sun({n};{','.join([str(k)] * n)})"
    got = _oracle(spec).coefficient(lam)
    lhs = SymFunc.single(Basis.E, lam, got)
    rhs = SymFunc.single(Basis.E, lam, expected)
    return _report("sun_coefficient", {"n": n, "k": k, "type": lam}, lhs, rhs)


def verify_small_sun_coefficient(a: int, b: int, c: int) -> IdentityReport:
    """The predicted coefficient at (b+c+1, a+2) for the three-ray sun S(3; a, b, c).

    Requires a = max and a < b + c (the inputs are sorted internally).  The
    expected value is -(a+b+c+3) when b + c = a + 1 (the two parts of the
    type coincide) and -2(a+b+c+3) otherwise.
    """
    a, b, c = sorted((a, b, c), reverse=True)
    lam = triangle_sun_missing_type(a, b, c)
    if lam is None:
        raise ValueError("need the longest ray shorter than the other two combined")
    total = a + b + c + 3
    expected = -total if b + c == a + 1 else -2 * total
    got = _oracle(f"sun(3;{a},{b},{c})").coefficient(lam)
    lhs = SymFunc.single(Basis.E, lam, got)
    rhs = SymFunc.single(Basis.E, lam, expected)
    return _report("small_sun_coefficient", {"a": a, "b": b, "c": c, "type": lam}, lhs, rhs)


def verify_sun_spider_reduction(a: int, b: int) -> IdentityReport:
    """X_{S(3;a,b,b)} = 2 X_{spider(a+1,b+1,b)} - X_{P_{2b+2}} X_{P_{a+1}}.

    Both graph functions come from the subset oracle; the path product from
    the closed path form.
    """
    if a < 1 or b < 1:
        raise ValueError("ray parameters must be positive")
    lhs = _subsets(sun_graph(3, (a, b, b)))
    rhs = 2 * _subsets(spider_graph((a + 1, b + 1, b))) - csf_path_closed(2 * b + 2) * csf_path_closed(a + 1)
    return _report("sun_spider_reduction", {"a": a, "b": b}, lhs, rhs)


def _check_dumbbell_args(m: int, l: int, n: int) -> None:
    if m < 3 or n < 3:
        raise ValueError("cycle/clique sizes must be at least 3")
    if l < -1:
        raise ValueError("connection length must be at least -1")


def verify_dumbbell_recursion(m: int, l: int, n: int) -> IdentityReport:
    """One-step recursion shrinking the m-cycle of the two-cycle dumbbell.

    For m > 3:  X_{D(m,l,n)} = X_{D(m-1,l+1,n)} + X_{T(n,m+l)} - X_{T(n,l+1)} X_{C(m-1)}.
    For m = 3:  X_{D(3,l,n)} = 2 X_{T(n,l+3)} - X_{T(n,l+1)} X_{C(2)}.
    The left side is the oracle; every right-side term is a closed form.
    """
    _check_dumbbell_args(m, l, n)
    lhs = _oracle(f"dumbbell({m},{l},{n})")
    if m > 3:
        rhs = (
            csf_dumbbell_closed(m - 1, l + 1, n)
            + csf_tadpole_closed(n, m + l)
            - csf_tadpole_closed(n, l + 1) * csf_cycle_closed(m - 1)
        )
    else:
        rhs = 2 * csf_tadpole_closed(n, l + 3) - csf_tadpole_closed(n, l + 1) * csf_cycle_closed(2)
    return _report("dumbbell_recursion", {"m": m, "l": l, "n": n}, lhs, rhs)


def verify_dumbbell_tadpole_expansion(m: int, l: int, n: int) -> IdentityReport:
    """X_{D(m,l,n)} = (m-1) X_{T(n,m+l)} - sum_{k=1}^{m-2} X_{T(n,l+k)} X_{C(m-k)}."""
    _check_dumbbell_args(m, l, n)
    lhs = _oracle(f"dumbbell({m},{l},{n})")
    rhs = (m - 1) * csf_tadpole_closed(n, m + l)
    for k in range(1, m - 1):
        rhs = rhs - csf_tadpole_closed(n, l + k) * csf_cycle_closed(m - k)
    return _report("dumbbell_tadpole_expansion", {"m": m, "l": l, "n": n}, lhs, rhs)


def verify_dumbbell_full_expansion(m: int, l: int, n: int) -> IdentityReport:
    """Oracle CSF of D(m,l,n) against its closed path/cycle expansion."""
    _check_dumbbell_args(m, l, n)
    lhs = _oracle(f"dumbbell({m},{l},{n})")
    rhs = csf_dumbbell_closed(m, l, n)
    return _report("dumbbell_full_expansion", {"m": m, "l": l, "n": n}, lhs, rhs)


def verify_cdumbbell_recursion(m: int, l: int, n: int) -> IdentityReport:
    """X_{D̄(m,l,n)} = (m-1) X_{D̄(m-1,l+1,n)} - (m-2) X_{K(m-1)} X_{L(n,l+1)}.

    The degenerate D̄(2,l,n) on the right of the m = 3 case is the lollipop
    L(n, l+2).
    """
    _check_dumbbell_args(m, l, n)
    lhs = _oracle(f"cdumbbell({m},{l},{n})")
    if m - 1 >= 3:
        shrunk = csf_complete_dumbbell_closed(m - 1, l + 1, n)
    else:
        shrunk = csf_lollipop_closed(n, (l + 1) + 2)
    rhs = (m - 1) * shrunk - (m - 2) * csf_complete_closed(m - 1) * csf_lollipop_closed(n, l + 1)
    return _report("cdumbbell_recursion", {"m": m, "l": l, "n": n}, lhs, rhs)


def verify_cdumbbell_lollipop_expansion(m: int, l: int, n: int) -> IdentityReport:
    """X_{D̄(m,l,n)} = (m-1)! X_{L(n,m+l)} - sum_k c_k X_{K(m-k)} X_{L(n,l+k)}.

    The integer weight is c_k = (m-1)(m-2)...(m-k-1) / (m-k); the factor
    m-k always occurs in the numerator product, so the quotient is exact.
    """
    _check_dumbbell_args(m, l, n)
    lhs = _oracle(f"cdumbbell({m},{l},{n})")
    rhs = factorial(m - 1) * csf_lollipop_closed(n, m + l)
    for k in range(1, m - 1):
        num = prod(m - i for i in range(1, k + 2))
        c_k, rem = divmod(num, m - k)
        assert rem == 0
        rhs = rhs - c_k * csf_complete_closed(m - k) * csf_lollipop_closed(n, l + k)
    return _report("cdumbbell_lollipop_expansion", {"m": m, "l": l, "n": n}, lhs, rhs)


def verify_cdumbbell_full_expansion(m: int, l: int, n: int) -> IdentityReport:
    """Oracle CSF of D̄(m,l,n) against its closed path/complete expansion."""
    _check_dumbbell_args(m, l, n)
    lhs = _oracle(f"cdumbbell({m},{l},{n})")
    rhs = csf_complete_dumbbell_closed(m, l, n)
    return _report("cdumbbell_full_expansion", {"m": m, "l": l, "n": n}, lhs, rhs)


def verify_chromatic_closed_forms(target, x_max=None) -> IdentityReport:
    """Closed chromatic polynomial of a family spec against deletion-contraction.

    Polynomials are compared coefficientwise; ``x_max`` additionally spot
    checks evaluations at x = 0..x_max (redundant given coefficient equality,
    kept as an independent read of the same data).
    """
    spec = parse_graph_spec(target) if isinstance(target, str) else target
    lhs = chromatic_poly_dc(spec.build())
    rhs = chromatic_poly_closed(spec)
    report = _report("chromatic_closed_forms", {"spec": spec}, lhs, rhs)
    if x_max is not None and report.equal:
        for x in range(x_max + 1):
            if lhs(x) != rhs(x):  # pragma: no cover - unreachable given coefficient equality
                return IdentityReport(report.name, report.params, lhs, rhs, False, lhs - rhs)
    return report


def _csf_key(f: SymFunc):
    """Hashable canonical form of a SymFunc, for collision maps."""
    return f.basis, f.degree, tuple(sorted(f.terms.items()))


def _canonical_dumbbell_triples(size_cap: int):
    for m in range(3, size_cap + 1):
        for n in range(m, size_cap + 1):
            for l in range(-1, size_cap - m - n + 1):
                yield m, l, n


def _sun_ray_tuples(n: int, total: int):
    """All ray-length tuples of length n with the given sum, each ray >= 1."""
    if n == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - n + 2):
        for rest in _sun_ray_tuples(n - 1, total - first):
            yield (first,) + rest


def verify_distinguishability(family: str, size_cap: int) -> IdentityReport:
    """Grid claim that the family's CSF separates its parameters.

    For "dumbbell" and "cdumbbell": CSFs of canonical triples (m <= n,
    l >= -1) with at most ``size_cap`` vertices are pairwise distinct.  For
    "sun": suns with equal CSF have equal body size and equal ray sum.
    ``equal`` records whether the claim holds; any counterexample pair is
    placed in ``params``.
    """
    seen: dict = {}
    collision = None
    count = 0
    if family in ("dumbbell", "cdumbbell"):
        for m, l, n in _canonical_dumbbell_triples(size_cap):
            spec = f"{family}({m},{l},{n})"
            f, _ = compute_csf(spec)
            fk = _csf_key(f)
            count += 1
            if fk in seen and collision is None:
                collision = [seen[fk], spec]
            seen.setdefault(fk, spec)
        claim = collision is None
    elif family == "sun":
        for n in range(3, size_cap + 1):
            for total in range(n, size_cap - n + 1):
                for rays in _sun_ray_tuples(n, total):
                    spec = f"sun({n};{','.join(map(str, rays))})"
                    f, _ = compute_csf(spec, engine="oracle")
                    fk = _csf_key(f)
                    count += 1
                    key = (n, total)
                    if fk in seen and seen[fk][0] != key and collision is None:
                        collision = [seen[fk][1], spec]
                    seen.setdefault(fk, (key, spec))
        claim = collision is None
    else:
        raise ValueError(f"unknown family {family!r}")
    params = {"family": family, "size_cap": size_cap, "instances": count, "collision": collision}
    return IdentityReport("distinguishability", params, None, None, claim, None)


# ------------------------------------------------------------------- grids


def _in_oracle_guard(spec_text: str) -> bool:
    g = parse_graph_spec(spec_text).build()
    return len(g.edges) <= DEFAULT_SUBSET_EDGE_CAP


_TRIANGLE_GRID_SPECS = (
    "complete(3)",
    "complete(4)",
    "complete(5)",
    "sun(3;1,1,1)",
    "sun(3;2,1,1)",
    "sun(3;2,2,2)",
    "csun(4;1,1,1,1)",
    "csun(3;3,2,1)",
    "tadpole(3,3)",
    "lollipop(4,2)",
    "lollipop(5,0)",
    "dumbbell(3,1,3)",
    "dumbbell(3,0,4)",
    "dumbbell(3,-1,3)",
    "cdumbbell(3,1,3)",
    "cdumbbell(4,0,4)",
    "cdumbbell(3,-1,4)",
    "sdumbbell(4,1,3)",
    "sdumbbell(5,-1,4)",
)


def _grid_triple_deletion(cap):
    for spec in _TRIANGLE_GRID_SPECS:
        if parse_graph_spec(spec).build().n <= cap:
            yield {"target": spec}


def _grid_sun_coefficient(cap):
    for n in range(3, cap // 2 + 1):
        for k in range(1, cap // n):
            if n * (k + 1) <= cap:
                yield {"n": n, "k": k}


def _grid_small_sun_coefficient(cap):
    for a in range(1, cap):
        for b in range(1, a + 1):
            for c in range(1, b + 1):
                if a < b + c and 3 + a + b + c <= cap:
                    yield {"a": a, "b": b, "c": c}


def _grid_sun_spider_reduction(cap):
    for a in range(1, cap):
        for b in range(1, cap):
            if 3 + a + 2 * b <= cap:
                yield {"a": a, "b": b}


def _grid_dumbbell(cap):
    for m in range(3, cap + 1):
        for n in range(3, cap + 1):
            for l in range(-1, cap - m - n + 1):
                yield {"m": m, "l": l, "n": n}


def _grid_cdumbbell(cap):
    for kw in _grid_dumbbell(cap):
        if _in_oracle_guard("cdumbbell({m},{l},{n})".format(**kw)):
            yield kw


def _grid_chromatic(cap):
    for n in range(3, cap + 1):
        for total in range(n, cap - n + 1):
            for rays in _sun_ray_tuples(n, total):
                yield {"target": f"sun({n};{','.join(map(str, rays))})"}
    for family in ("dumbbell", "cdumbbell", "sdumbbell"):
        for m, l, n in _canonical_dumbbell_triples(cap):
            spec = f"{family}({m},{l},{n})"
            if len(parse_graph_spec(spec).build().edges) <= DEFAULT_CHROMPOLY_EDGE_CAP:
                yield {"target": spec}


def _grid_distinguishability(cap):
    yield {"family": "dumbbell", "size_cap": min(cap, 11)}
    yield {"family": "cdumbbell", "size_cap": min(cap, 10)}
    yield {"family": "sun", "size_cap": min(cap, 10)}


VERIFIERS = {
    "triple_deletion": verify_triple_deletion,
    "sun_coefficient": verify_sun_coefficient,
    "small_sun_coefficient": verify_small_sun_coefficient,
    "sun_spider_reduction": verify_sun_spider_reduction,
    "dumbbell_recursion": verify_dumbbell_recursion,
    "dumbbell_tadpole_expansion": verify_dumbbell_tadpole_expansion,
    "dumbbell_full_expansion": verify_dumbbell_full_expansion,
    "cdumbbell_recursion": verify_cdumbbell_recursion,
    "cdumbbell_lollipop_expansion": verify_cdumbbell_lollipop_expansion,
    "cdumbbell_full_expansion": verify_cdumbbell_full_expansion,
    "chromatic_closed_forms": verify_chromatic_closed_forms,
    "distinguishability": verify_distinguishability,
}

_GRIDS = {
    "triple_deletion": _grid_triple_deletion,
    "sun_coefficient": _grid_sun_coefficient,
    "small_sun_coefficient": _grid_small_sun_coefficient,
    "sun_spider_reduction": _grid_sun_spider_reduction,
    "dumbbell_recursion": _grid_dumbbell,
    "dumbbell_tadpole_expansion": _grid_dumbbell,
    "dumbbell_full_expansion": _grid_dumbbell,
    "cdumbbell_recursion": _grid_cdumbbell,
    "cdumbbell_lollipop_expansion": _grid_cdumbbell,
    "cdumbbell_full_expansion": _grid_cdumbbell,
    "chromatic_closed_forms": _grid_chromatic,
    "distinguishability": _grid_distinguishability,
}


def iter_grid(name: str, vertex_cap: int = DEFAULT_GRID_VERTEX_CAP):
    """Parameter dictionaries of the identity's in-guard grid."""
    if name not in _GRIDS:
        raise ValueError(f"unknown identity {name!r}")
    yield from _GRIDS[name](vertex_cap)


def run_grid(name: str, vertex_cap: int = DEFAULT_GRID_VERTEX_CAP) -> list:
    """Run one identity over its whole grid; returns the reports in grid order."""
    if name not in VERIFIERS:
        raise ValueError(f"unknown identity {name!r}")
    verifier = VERIFIERS[name]
    return [verifier(**kw) for kw in iter_grid(name, vertex_cap)]
