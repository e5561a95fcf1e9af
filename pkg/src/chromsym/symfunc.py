"""Exact symmetric-function arithmetic in the power-sum, elementary and Schur bases.

Every value is homogeneous of a fixed degree, stored sparsely as a map from
partitions (the basis indices) to ``fractions.Fraction`` coefficients.  Basis
changes are exact:

* ``p -> e`` expands each power sum through the signed multinomial formula
  :math:`p_i = \\sum_{\\mu \\vdash i} (-1)^{i-\\ell(\\mu)}
  \\frac{i\\,(\\ell(\\mu)-1)!}{\\prod_j m_j(\\mu)!}\\, e_\\mu`
  and multiplies out products by index concatenation.
* ``e -> p`` and ``e -> s`` solve the per-degree transition system by exact
  Gaussian elimination over the rationals; ``s -> e`` expands the dual
  Jacobi-Trudi determinant :math:`s_\\lambda = \\det(e_{\\lambda^t_i - i + j})`.

Transition matrices are cached per degree behind a lock, so concurrent readers
are safe once a degree has been built.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .partitions import Partition, partitions_of

#: refuse to build transition matrices above this degree by default
DEFAULT_TRANSITION_CAP = 22


class Basis(str, Enum):
    P = "p"
    E = "e"
    S = "s"


class SymFunc:
    """A homogeneous symmetric function with exact rational coefficients."""

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis, degree: int, terms=None):
        basis = Basis(basis)
        clean = {}
        for lam, c in (terms or {}).items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            c = Fraction(c)
            if c == 0:
                continue
            if lam.weight != degree:
                raise ValueError(
                    f"term {lam} has weight {lam.weight}, expected degree {degree}"
                )
            clean[lam] = c
        self.basis = basis
        self.degree = degree
        self.terms = clean

    # ---------------------------------------------------------------- helpers

    @classmethod
    def zero(cls, basis, degree: int) -> "SymFunc":
        return cls(basis, degree, {})

    @classmethod
    def single(cls, basis, parts, coeff=1) -> "SymFunc":
        lam = Partition(parts)
        return cls(basis, lam.weight, {lam: Fraction(coeff)})

    @classmethod
    def one(cls, basis) -> "SymFunc":
        """The multiplicative unit: the empty-partition term in degree 0."""
        return cls(basis, 0, {Partition(): Fraction(1)})

    def coefficient(self, parts) -> Fraction:
        lam = Partition(parts)
        if lam.weight != self.degree:
            raise ValueError(
                f"partition {lam} has weight {lam.weight}, function has degree {self.degree}"
            )
        return self.terms.get(lam, Fraction(0))

    def support(self) -> list:
        """Basis partitions with nonzero coefficient, in canonical (desc-lex) order."""
        return sorted(self.terms, reverse=True)

    # ------------------------------------------------------------- arithmetic

    def _check_compatible(self, other):
        if self.basis is not other.basis:
            raise ValueError(f"basis mismatch: {self.basis.value} vs {other.basis.value}")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return SymFunc(self.basis, self.degree, terms)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SymFunc(self.basis, self.degree, {lam: -c for lam, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            self._check_compatible_product(other)
            terms = {}
            for lam, a in self.terms.items():
                for mu, b in other.terms.items():
                    key = Partition(tuple(lam) + tuple(mu))
                    terms[key] = terms.get(key, Fraction(0)) + a * b
            return SymFunc(self.basis, self.degree + other.degree, terms)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SymFunc(self.basis, self.degree, {lam: v * c for lam, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def _check_compatible_product(self, other):
        if self.basis is not other.basis:
            raise ValueError(f"basis mismatch: {self.basis.value} vs {other.basis.value}")
        if self.basis is Basis.S:
            # Schur indices do not multiply by concatenation
            raise ValueError("products are supported in the p and e bases only")

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.basis is other.basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -------------------------------------------------------------- analysis

    def is_nonnegative(self):
        """(True, None) if every coefficient is >= 0, else (False, witness).

        The witness is the lexicographically smallest partition carrying a
        negative coefficient, paired with that coefficient.
        """
        negatives = [lam for lam, c in self.terms.items() if c < 0]
        if not negatives:
            return True, None
        lam = min(negatives)
        return False, (lam, self.terms[lam])

    def evaluate_ones(self, n: int) -> Fraction:
        """Specialize to n variables all equal to 1 (principal specialization at 1^n)."""
        if n < 0:
            raise ValueError("number of variables must be nonnegative")
        if self.basis is Basis.P:
            total = Fraction(0)
            for lam, c in self.terms.items():
                total += c * (n ** len(lam))
            return total
        if self.basis is Basis.E:
            total = Fraction(0)
            for lam, c in self.terms.items():
                val = 1
                for part in lam:
                    val *= comb(n, part)
                    if val == 0:
                        break
                total += c * val
            return total
        return s_to_e(self).evaluate_ones(n)

    # ---------------------------------------------------------- serialization

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [
                {
                    "partition": list(lam),
                    "num": str(self.terms[lam].numerator),
                    "den": str(self.terms[lam].denominator),
                }
                for lam in self.support()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SymFunc":
        terms = {}
        for t in obj["terms"]:
            lam = Partition(t["partition"])
            terms[lam] = Fraction(int(t["num"]), int(t["den"]))
        return cls(obj["basis"], obj["degree"], terms)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for lam in self.support():
            c = self.terms[lam]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = f"{self.basis.value}{lam}" if mag == 1 else f"{mag}*{self.basis.value}{lam}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"SymFunc({self.basis.value!r}, {self.degree}, {self})"


# ------------------------------------------------------------------ p <-> e


@lru_cache(maxsize=None)
def _power_in_e(i: int) -> tuple:
    """e-expansion of the degree-i power sum, as ((partition, Fraction), ...)."""
    out = []
    for mu in partitions_of(i):
        denom = 1
        for m in mu.multiplicities().values():
            denom *= factorial(m)
        coeff = Fraction((-1) ** (i - len(mu)) * i * factorial(len(mu) - 1), denom)
        out.append((mu, coeff))
    return tuple(out)


@lru_cache(maxsize=None)
def _p_basis_in_e(lam: Partition) -> tuple:
    """e-expansion of p_lambda = prod_i p_{lambda_i}, as ((partition, Fraction), ...)."""
    acc = {Partition(): Fraction(1)}
    for part in lam:
        nxt = {}
        for mu, a in acc.items():
            for nu, b in _power_in_e(part):
                key = Partition(tuple(mu) + tuple(nu))
                nxt[key] = nxt.get(key, Fraction(0)) + a * b
        acc = nxt
    return tuple(sorted(acc.items(), reverse=True))


def p_to_e(f: SymFunc) -> SymFunc:
    """Convert from the power-sum basis to the elementary basis (exact)."""
    if f.basis is not Basis.P:
        raise ValueError(f"expected a p-basis function, got basis {f.basis.value}")
    terms = {}
    for lam, c in f.terms.items():
        for mu, w in _p_basis_in_e(lam):
            terms[mu] = terms.get(mu, Fraction(0)) + c * w
    return SymFunc(Basis.E, f.degree, terms)


# --------------------------------------------------------------- Schur forms


@lru_cache(maxsize=None)
def _jacobi_trudi_dual(lam: Partition) -> tuple:
    """e-expansion of s_lambda via det(e_{lambda^t_i - i + j}), memoized cofactors.

    The determinant is expanded along rows with a bitmask of surviving columns;
    entries e_0 contribute 1 and negative subscripts vanish, so the recursion
    only touches structurally nonzero permutations.
    """
    conj = lam.transpose()
    r = lam[0]  # matrix size; conj has exactly r parts

    def entry(i, j):  # 0-based
        return conj[i] - (i + 1) + (j + 1)

    from functools import lru_cache as _lc

    @_lc(maxsize=None)
    def minor(i: int, mask: int) -> tuple:
        if i == r:
            return ((Partition(), 1),)
        acc = {}
        pos = 0
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            v = entry(i, j)
            if v >= 0:
                sign = -1 if (pos & 1) else 1
                for mu, c in minor(i + 1, mask & ~(1 << j)):
                    key = Partition(tuple(mu) + ((v,) if v > 0 else ()))
                    acc[key] = acc.get(key, 0) + sign * c
            pos += 1
            m &= m - 1
        return tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True))

    return minor(0, (1 << r) - 1)


def schur_in_e(parts) -> SymFunc:
    """The Schur function s_lambda written in the elementary basis."""
    lam = Partition(parts)
    if not lam:
        raise ValueError("schur_in_e expects a nonempty partition")
    return SymFunc(Basis.E, lam.weight, dict(_jacobi_trudi_dual(lam)))


def s_to_e(f: SymFunc) -> SymFunc:
    """Convert from the Schur basis to the elementary basis (exact)."""
    if f.basis is not Basis.S:
        raise ValueError(f"expected an s-basis function, got basis {f.basis.value}")
    out = SymFunc.zero(Basis.E, f.degree)
    for lam, c in f.terms.items():
        out = out + c * schur_in_e(lam)
    return out


# ------------------------------------------------- per-degree transition solves

_cache_lock = threading.Lock()
_e_to_p_cache: dict = {}  # degree -> (basis list, row index, column expansions)
_e_to_s_cache: dict = {}


class _ExactLU:
    """LU factorization with row pivoting over the rationals, built once per degree.

    ``columns[j]`` maps row index -> Fraction.  Factoring costs O(n^3) Fraction
    operations; each subsequent solve is O(n^2).
    """

    def __init__(self, columns, size):
        a = [[Fraction(0)] * size for _ in range(size)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                a[i][j] = v
        perm = list(range(size))
        for col in range(size):
            piv = next((r for r in range(col, size) if a[r][col] != 0), None)
            if piv is None:
                raise ArithmeticError("singular transition system")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                perm[col], perm[piv] = perm[piv], perm[col]
            inv = 1 / a[col][col]
            arow = a[col]
            for r in range(col + 1, size):
                if a[r][col] != 0:
                    m = a[r][col] * inv
                    row = a[r]
                    row[col] = m  # store the multiplier in the eliminated slot
                    for k in range(col + 1, size):
                        if arow[k]:
                            row[k] -= m * arow[k]
        self.a = a
        self.perm = perm
        self.size = size

    def solve(self, rhs):
        """Solve A x = rhs for a dict rhs (row index -> Fraction); returns a list."""
        a, n = self.a, self.size
        y = [rhs.get(i, Fraction(0)) for i in self.perm]
        for i in range(1, n):
            row = a[i]
            s = y[i]
            for k in range(i):
                if row[k] and y[k]:
                    s -= row[k] * y[k]
            y[i] = s
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            row = a[i]
            s = y[i]
            for k in range(i + 1, n):
                if row[k] and x[k]:
                    s -= row[k] * x[k]
            x[i] = s / row[i]
        return x


def _degree_guard(degree: int, max_degree) -> None:
    cap = DEFAULT_TRANSITION_CAP if max_degree is None else max_degree
    if degree > cap:
        raise ValueError(f"transition matrices guarded at degree {cap}, got {degree}")


def _e_to_p_system(degree: int):
    with _cache_lock:
        hit = _e_to_p_cache.get(degree)
    if hit is not None:
        return hit
    basis = partitions_of(degree)
    index = {lam: i for i, lam in enumerate(basis)}
    columns = []
    for lam in basis:
        col = {index[mu]: c for mu, c in _p_basis_in_e(lam)}
        columns.append(col)
    built = (basis, index, _ExactLU(columns, len(basis)))
    with _cache_lock:
        _e_to_p_cache.setdefault(degree, built)
        return _e_to_p_cache[degree]


def _e_to_s_system(degree: int):
    with _cache_lock:
        hit = _e_to_s_cache.get(degree)
    if hit is not None:
        return hit
    basis = partitions_of(degree)
    index = {lam: i for i, lam in enumerate(basis)}
    columns = []
    for lam in basis:
        col = {index[mu]: Fraction(c) for mu, c in _jacobi_trudi_dual(lam)}
        columns.append(col)
    built = (basis, index, _ExactLU(columns, len(basis)))
    with _cache_lock:
        _e_to_s_cache.setdefault(degree, built)
        return _e_to_s_cache[degree]


def e_to_p(f: SymFunc, max_degree=None) -> SymFunc:
    """Convert from the elementary basis to the power-sum basis (exact)."""
    if f.basis is not Basis.E:
        raise ValueError(f"expected an e-basis function, got basis {f.basis.value}")
    if f.degree == 0:
        return SymFunc(Basis.P, 0, dict(f.terms))
    _degree_guard(f.degree, max_degree)
    basis, index, lu = _e_to_p_system(f.degree)
    rhs = {index[lam]: c for lam, c in f.terms.items()}
    x = lu.solve(rhs)
    return SymFunc(Basis.P, f.degree, {basis[j]: x[j] for j in range(len(basis))})


def e_to_s(f: SymFunc, max_degree=None) -> SymFunc:
    """Convert from the elementary basis to the Schur basis (exact).

    Builds the degree matrix expressing every Schur function in the e basis via
    the dual Jacobi-Trudi determinant, then solves that system; Schur-expansion
    coefficients therefore come out of exact elimination rather than any
    combinatorial counting.
    """
    if f.basis is not Basis.E:
        raise ValueError(f"expected an e-basis function, got basis {f.basis.value}")
    if f.degree == 0:
        return SymFunc(Basis.S, 0, dict(f.terms))
    _degree_guard(f.degree, max_degree)
    basis, index, lu = _e_to_s_system(f.degree)
    rhs = {index[lam]: c for lam, c in f.terms.items()}
    x = lu.solve(rhs)
    return SymFunc(Basis.S, f.degree, {basis[j]: x[j] for j in range(len(basis))})


def convert(f: SymFunc, basis, max_degree=None) -> SymFunc:
    """Convert ``f`` to the requested basis (identity when already there)."""
    target = Basis(basis)
    if f.basis is target:
        return f
    routes = {
        (Basis.P, Basis.E): lambda g: p_to_e(g),
        (Basis.E, Basis.P): lambda g: e_to_p(g, max_degree),
        (Basis.E, Basis.S): lambda g: e_to_s(g, max_degree),
        (Basis.S, Basis.E): lambda g: s_to_e(g),
        (Basis.P, Basis.S): lambda g: e_to_s(p_to_e(g), max_degree),
        (Basis.S, Basis.P): lambda g: e_to_p(s_to_e(g), max_degree),
    }
    return routes[(f.basis, target)](f)
