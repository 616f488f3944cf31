"""Exact enumeration of growing binary trees.

The central quantities are the big-integer counts

    t_{n,2k}    active growing trees with n internal nodes and 2k anchors,
                over all heights,
    t_{n,2k,h}  the same restricted to height exactly h.

Both satisfy the one-step transfer: a tree with 2m anchors in which k of the
anchors branch (1 <= k <= 2m) gains k internal nodes and ends up with 2k
anchors, in binom(2m, k) ways. Hence

    t_{n,2k} = sum_m binom(2m, k) * t_{n-k,2m},     t_{1,2} = 1,

and the height-indexed recurrence is identical with h stepping to h+1 from
the base t_{1,2,1} = 1. Tables are built by propagating that transfer
forward, which visits exactly the nonzero cells.

Column sums over k recover the Catalan numbers: freezing gives a bijection
between active trees at step h and binary trees of height h (in an active
tree every deepest node is an anchor, and the branching choices are forced
by the frozen shape), so summing over the anchor count and height counts
every binary tree with n internal nodes exactly once.

Generating-function layer: with the anchor-marking series T(x,z) the growth
step is the substitution x -> 1 + z*x^2, so the height iterates satisfy
p_0(x,z) = x and p_{h+1}(x,z) = p_h(1 + z*x^2, z). Evaluated at x = 1 these
are computed here as truncated integer power series, along with

    M_h(z) = z * p_h(1,z),

which are the shifted iterates of the quadratic map w -> w^2 + z: M_0 = z and
M_{h+1} = M_h^2 + z (the Mandelbrot polynomials). The cumulative anchor
series 1 + sum_{i>=1} 2^i * prod_{j<i} M_j(z) has z^n coefficient equal to
the 2k-weighted column sum sum_k 2k * t_{n,2k}. On the real axis the map's
fixed-point iteration x -> 1 + z*x^2 converges below the critical parameter
z = 1/4 and escapes beyond it; fixed_point_probe measures that numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


# ---------------------------------------------------------------------------
# Count tables
# ---------------------------------------------------------------------------

@dataclass
class CountTable:
    """Exact counts t_{n,2k} for 1 <= n <= n_max, keyed by (n, k), zeros omitted.

    Treat instances as read-only after construction.
    """

    n_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def value(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def column_sum(self, n: int) -> int:
        return sum(v for (cn, _), v in self.entries.items() if cn == n)

    def max_k(self, n: int) -> int:
        """Largest k with t_{n,2k} > 0 (0 if the column is empty)."""
        return max((k for (cn, k) in self.entries if cn == n), default=0)

    def to_csv(self) -> str:
        """Grid layout: header row "n,1..n_max", one row per anchor-pair count.

        Row labels are the anchor counts 2k; zero cells are blank.
        """
        k_top = max((k for (_, k) in self.entries), default=1)
        lines = ["n," + ",".join(str(n) for n in range(1, self.n_max + 1))]
        for k in range(1, k_top + 1):
            cells = [str(self.value(n, k)) if (n, k) in self.entries else ""
                     for n in range(1, self.n_max + 1)]
            lines.append(f"{2 * k}," + ",".join(cells))
        return "\n".join(lines) + "\n"


@dataclass
class HeightTable:
    """Exact counts t_{n,2k,h} at a fixed height h, keyed by (n, k), zeros omitted."""

    h: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def value(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def support(self) -> set[tuple[int, int]]:
        return set(self.entries)

    def total(self) -> int:
        """Number of active trees of height h (sum over all cells)."""
        return sum(self.entries.values())

    def to_csv(self) -> str:
        """Grid layout like CountTable.to_csv, columns spanning the support."""
        if not self.entries:
            return "n\n"
        n_lo = min(n for (n, _) in self.entries)
        n_hi = max(n for (n, _) in self.entries)
        k_top = max(k for (_, k) in self.entries)
        lines = ["n," + ",".join(str(n) for n in range(n_lo, n_hi + 1))]
        for k in range(1, k_top + 1):
            cells = [str(self.value(n, k)) if (n, k) in self.entries else ""
                     for n in range(n_lo, n_hi + 1)]
            lines.append(f"{2 * k}," + ",".join(cells))
        return "\n".join(lines) + "\n"


def t_table(n_max: int) -> CountTable:
    """Build the table of t_{n,2k} for all 1 <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    entries: dict[tuple[int, int], int] = {(1, 1): 1}
    for n in range(1, n_max):
        # States at n only ever receive mass from strictly smaller n.
        column = [(k, v) for (cn, k), v in entries.items() if cn == n]
        for k, v in column:
            for j in range(1, 2 * k + 1):
                if n + j > n_max:
                    break
                cell = (n + j, j)
                entries[cell] = entries.get(cell, 0) + comb(2 * k, j) * v
    return CountTable(n_max=n_max, entries=entries)


def t_height_table(h: int, n_cap: int | None = None) -> HeightTable:
    """Build the table of t_{n,2k,h} at height exactly h.

    n_cap, when given, prunes cells with n > n_cap during the iteration; the
    transfer only ever increases n, so retained cells keep their exact
    values. Useful for marginal checks at heights whose full tables are
    astronomically large.
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    current: dict[tuple[int, int], int] = {(1, 1): 1}
    for _ in range(h - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (n, k), v in current.items():
            for j in range(1, 2 * k + 1):
                n2 = n + j
                if n_cap is not None and n2 > n_cap:
                    break
                cell = (n2, j)
                nxt[cell] = nxt.get(cell, 0) + comb(2 * k, j) * v
        current = nxt
    return HeightTable(h=h, entries=current)


# ---------------------------------------------------------------------------
# Catalan numbers
# ---------------------------------------------------------------------------

_catalan_cache = [1]


def catalan(n: int) -> int:
    """Catalan number C_n by the convolution recurrence, exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_catalan_cache) <= n:
        m = len(_catalan_cache) - 1
        _catalan_cache.append(sum(_catalan_cache[i] * _catalan_cache[m - i] for i in range(m + 1)))
    return _catalan_cache[n]


def catalan_column_check(table: CountTable) -> bool:
    """Check the per-column Catalan identity on a count table.

    For each n the active column sum plus the count of trees not in the
    table must equal C_n; the latter is obtained as C_n minus the column sum
    and must be nonnegative. For tables built by t_table that remainder is 0
    in every column, because the column sums are exactly Catalan (see the
    module docstring); the check guards arbitrary tables handed in.
    """
    for n in range(1, table.n_max + 1):
        if catalan(n) - table.column_sum(n) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Truncated integer power series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolySeries:
    """Dense truncated power series with exact integer coefficients.

    coeffs[i] is the coefficient of z^i; len(coeffs) == trunc + 1 always.
    Arithmetic is exact modulo z^{trunc+1}; operands must share the same
    truncation order.
    """

    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient list must have length trunc + 1")

    @classmethod
    def of(cls, values: list[int] | tuple[int, ...], trunc: int) -> "PolySeries":
        values = tuple(values)[: trunc + 1]
        return cls(values + (0,) * (trunc + 1 - len(values)), trunc)

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.trunc else 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: "PolySeries") -> None:
        if self.trunc != other.trunc:
            raise ValueError("truncation orders differ")

    def __add__(self, other: "PolySeries") -> "PolySeries":
        self._check(other)
        return PolySeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.trunc)

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        self._check(other)
        return PolySeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.trunc)

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        self._check(other)
        out = [0] * (self.trunc + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: self.trunc + 1 - i]):
                if b:
                    out[i + j] += a * b
        return PolySeries(tuple(out), self.trunc)

    def scaled(self, factor: int) -> "PolySeries":
        return PolySeries(tuple(factor * c for c in self.coeffs), self.trunc)

    def shifted(self, k: int) -> "PolySeries":
        """Multiply by z^k, dropping coefficients past the truncation order."""
        return PolySeries((0,) * k + self.coeffs[: self.trunc + 1 - k], self.trunc)


DEFAULT_TRUNC = 64


def iterate_p(h: int, trunc: int = DEFAULT_TRUNC) -> PolySeries:
    """The height iterate p_h(1,z): apply x -> 1 + z*x^2 h times, then x = 1.

    Equivalently u_0 = 1 and u_{j+1} = 1 + z*u_j^2 as series in z.
    """
    if h < 0:
        raise ValueError("h must be nonnegative")
    one = PolySeries.of([1], trunc)
    u = one
    for _ in range(h):
        u = one + (u * u).shifted(1)
    return u


def mandelbrot(h: int, trunc: int = DEFAULT_TRUNC) -> PolySeries:
    """The polynomial M_h(z) = z * p_h(1,z), truncated.

    Computed from the height iterate; the quadratic-map characterization
    M_0 = z, M_{h+1} = M_h^2 + z is an independent identity that the test
    suite verifies coefficient by coefficient.
    """
    return iterate_p(h, trunc).shifted(1)


def cumulative_anchor_series(trunc: int = DEFAULT_TRUNC) -> PolySeries:
    """The series 1 + sum_{i>=1} 2^i * prod_{j=0}^{i-1} M_j(z), truncated.

    Each M_j has valuation 1, so the i-th term has valuation at least i and
    the sum needs only the terms with i <= trunc. The z^n coefficient equals
    sum_k 2k * t_{n,2k} for n >= 1, and 1 at n = 0.
    """
    if trunc < 1:
        raise ValueError("trunc must be at least 1")
    one = PolySeries.of([1], trunc)
    total = one
    product = one
    p_iter = one
    for i in range(1, trunc + 1):
        product = product * p_iter.shifted(1)  # append the factor M_{i-1}
        if product.is_zero():
            break
        total = total + product.scaled(1 << i)
        p_iter = one + (p_iter * p_iter).shifted(1)
    return total


# ---------------------------------------------------------------------------
# Real-axis probe of the quadratic map
# ---------------------------------------------------------------------------

CONVERGENCE_TOL = 1e-12
DEFAULT_BLOW_UP = 1e6
DEFAULT_MAX_ITERS = 100_000


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of the fixed-point iteration: converged, diverged, or undecided."""

    status: str                 # "converged" | "diverged" | "undecided"
    limit: float | None = None  # fixed point when converged
    iterations: int = 0

    @property
    def converged(self) -> bool:
        return self.status == "converged"

    @property
    def diverged(self) -> bool:
        return self.status == "diverged"


def fixed_point_probe(z: float, max_iters: int = DEFAULT_MAX_ITERS,
                      blow_up: float = DEFAULT_BLOW_UP) -> ProbeResult:
    """Iterate x <- 1 + z*x^2 from x = 1 and classify the orbit.

    Converged when successive iterates differ by less than 1e-12 (for real
    0 <= z < 1/4 the limit is the smaller fixed point (1 - sqrt(1-4z)) / (2z));
    diverged when |x| exceeds blow_up; undecided when the iteration budget
    runs out, which happens in a slow-passage window around the critical
    parameter z = 1/4.
    """
    if max_iters < 1 or blow_up <= 0:
        raise ValueError("thresholds must be positive")
    x = 1.0
    for iteration in range(1, max_iters + 1):
        x_next = 1.0 + z * x * x
        if abs(x_next) > blow_up:
            return ProbeResult(status="diverged", iterations=iteration)
        if abs(x_next - x) < CONVERGENCE_TOL:
            return ProbeResult(status="converged", limit=x_next, iterations=iteration)
        x = x_next
    return ProbeResult(status="undecided", iterations=max_iters)
