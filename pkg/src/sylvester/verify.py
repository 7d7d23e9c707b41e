"""Machine checks of Sylvester's determinant identity

    det A * det A[i,j|k,l] = det A[i|k] * det A[j|l] - det A[i|l] * det A[j|k]

symbolically (as polynomials over a generic matrix) and numerically, plus a
term-by-term replay of the bordering induction step and Dodgson
condensation, which is the identity applied to contiguous minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .bareiss import exact_div
from .det import DOperator, apply_D, border_expansion, det
from .errors import (
    DimensionTooLarge,
    DimensionTooSmall,
    IndexOutOfRange,
    InvalidDimension,
    InvalidIndexPair,
    NotSquare,
    ZeroInteriorMinor,
)
from .matrix import IntMatrix, MinorSpec, SymMatrix, extend, generic_matrix, minor
from .ring import EntryVar, Monomial, MultiPoly

MAX_REPLAY_N = 4


@dataclass
class IdentityReport:
    """Outcome of one identity check; ``holds`` iff the residual is zero."""

    identity: str
    n: int
    indices: tuple[int, int, int, int]
    lhs: MultiPoly | int
    rhs: MultiPoly | int
    residual: MultiPoly | int
    context: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.residual

    @property
    def residual_terms(self) -> int:
        if isinstance(self.residual, MultiPoly):
            return len(self.residual)
        return 1 if self.residual else 0

    @property
    def symbolic(self) -> bool:
        return isinstance(self.residual, MultiPoly)

    def to_json(self, include_sides: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "indices": list(self.indices),
            "holds": self.holds,
            "residual_terms": self.residual_terms,
        }
        if include_sides:
            out["lhs"] = str(self.lhs)
            out["rhs"] = str(self.rhs)
        return out


def sorted_index_tuples(n: int):
    """All (i, j, k, l) with i < j and k < l, in lexicographic order."""
    pairs = list(combinations(range(1, n + 1), 2))
    return [(i, j, k, l) for i, j in pairs for k, l in pairs]


def _validate_tuple(n, i, j, k, l):
    for idx in (i, j, k, l):
        if not 1 <= idx <= n:
            raise IndexOutOfRange(f"index {idx} outside 1..{n}")
    if i == j or k == l:
        raise InvalidIndexPair(f"repeated index in ({i},{j}|{k},{l})")
    if i > j or k > l:
        raise InvalidIndexPair(f"indices must be sorted ascending, got ({i},{j}|{k},{l})")


def check_general(m, i: int, j: int, k: int, l: int, *, cache: dict | None = None) -> IdentityReport:
    """Evaluate both sides for rows i < j and columns k < l.

    ``m`` may be a :class:`SymMatrix` (polynomial sides) or an
    :class:`IntMatrix` (integer sides).  ``cache`` maps MinorSpec to
    determinant and may be shared across calls on the same matrix.
    """
    if not m.is_square:
        raise NotSquare(f"{m.n_rows}x{m.n_cols}")
    n = m.n_rows
    if n < 2:
        raise DimensionTooSmall(f"the identity needs n >= 2, got {n}")
    _validate_tuple(n, i, j, k, l)
    if cache is None:
        cache = {}

    def d(spec):
        if spec not in cache:
            cache[spec] = det(m) if spec is None else det(minor(m, spec))
        return cache[spec]

    lhs = d(None) * d(MinorSpec.double(i, j, k, l))
    rhs = (d(MinorSpec.single(i, k)) * d(MinorSpec.single(j, l))
           - d(MinorSpec.single(i, l)) * d(MinorSpec.single(j, k)))
    return IdentityReport("sylvester", n, (i, j, k, l), lhs, rhs, lhs - rhs)


def check_canonical(m) -> IdentityReport:
    """The (1,2|1,2) instance; for n = 2 the double minor is 0x0."""
    report = check_general(m, 1, 2, 1, 2)
    report.identity = "sylvester-canonical"
    return report


def check_all(m, *, cache: dict | None = None) -> list[IdentityReport]:
    if not m.is_square:
        raise NotSquare(f"{m.n_rows}x{m.n_cols}")
    cache = {} if cache is None else cache
    return [check_general(m, *t, cache=cache) for t in sorted_index_tuples(m.n_rows)]


# -- induction replay ---------------------------------------------------------

# the six determinants of the canonical identity, by the minor they take
_BASE_SPECS = {
    "A": None,
    "A_12|12": MinorSpec.double(1, 2, 1, 2),
    "A_1|1": MinorSpec.single(1, 1),
    "A_2|2": MinorSpec.single(2, 2),
    "A_1|2": MinorSpec.single(1, 2),
    "A_2|1": MinorSpec.single(2, 1),
}


def _canonical_residual(d):
    return d["A"] * d["A_12|12"] - (d["A_1|1"] * d["A_2|2"] - d["A_1|2"] * d["A_2|1"])


def _pairs():
    # (X, Y, sign) with residual = sum sign * X * Y
    return (("A", "A_12|12", 1), ("A_1|1", "A_2|2", -1), ("A_1|2", "A_2|1", 1))


@dataclass
class TermGroup:
    """Coefficient of one border-variable pattern in the bordered residual.

    ``expected`` is the operator form the proof predicts for that
    coefficient, computed independently through the product rule.
    """

    kind: str
    rows: tuple[int, ...]
    pattern: str
    coefficient: MultiPoly
    expected: MultiPoly | None = None

    @property
    def name(self) -> str:
        return f"{self.kind}({','.join(map(str, self.rows))})" if self.rows else self.kind

    @property
    def vanishes(self) -> bool:
        return self.coefficient.is_zero()

    @property
    def matches_expected(self) -> bool | None:
        if self.expected is None:
            return None
        return self.coefficient == self.expected

    def to_json(self) -> dict:
        return {
            "group": self.name,
            "pattern": self.pattern,
            "terms": len(self.coefficient),
            "vanishes": self.vanishes,
            "matches_operator_form": self.matches_expected,
        }


@dataclass
class ReplayReport:
    n: int
    residual: MultiPoly
    corner_sq: TermGroup
    cross: dict[tuple[int, int], TermGroup]
    mixed: dict[int, TermGroup]
    other: list[TermGroup]
    border_matches_direct: dict[str, bool]

    def groups(self) -> list[TermGroup]:
        return [self.corner_sq, *self.cross.values(), *self.mixed.values(), *self.other]

    @property
    def holds(self) -> bool:
        return (
            self.residual.is_zero()
            and not self.other
            and all(g.vanishes and g.matches_expected is not False for g in self.groups())
            and all(self.border_matches_direct.values())
        )

    def to_json(self) -> dict:
        return {
            "identity": "sylvester-induction-step",
            "n": self.n,
            "holds": self.holds,
            "residual_terms": len(self.residual),
            "border_matches_direct": dict(sorted(self.border_matches_direct.items())),
            "corner_sq": self.corner_sq.to_json(),
            "cross": [g.to_json() for g in self.cross.values()],
            "mixed": [g.to_json() for g in self.mixed.values()],
            "other": [g.to_json() for g in self.other],
        }


def _operator_forms(n, base):
    """Predicted group coefficients, from D^(i) applied factor by factor."""
    D = {i: DOperator(i, n) for i in range(1, n + 1)}
    once = {(i, name): apply_D(D[i], p) for i in D for name, p in base.items()}
    twice = {(i, j, name): apply_D(D[i], once[j, name])
             for i in D for j in D if i <= j for name in base}

    def mixed(i):
        # -D^(i) of the residual, product rule once
        total = MultiPoly()
        for x, y, s in _pairs():
            total = total + (once[i, x] * base[y] + base[x] * once[i, y]).scale(s)
        return -total

    def cross(i, j):
        # D^(i) D^(j) of the residual, product rule twice
        total = MultiPoly()
        for x, y, s in _pairs():
            term = (twice[i, j, x] * base[y] + once[i, x] * once[j, y]
                    + once[j, x] * once[i, y] + base[x] * twice[i, j, y])
            total = total + term.scale(s)
        # the coefficient of a[i,n+1]^2 picks up each pairing once, not twice
        return total if i < j else total.exact_div(2)

    return mixed, cross


def replay_induction_step(n: int) -> ReplayReport:
    """Expand the bordered identity and split its residual by border pattern.

    The bordered (n+1) x (n+1) identity is built from border_expansion of
    the six base determinants over generic_matrix(n).  Its residual is
    collected by monomials in the last-column variables a[1,n+1] ..
    a[n+1,n+1]; every coefficient must vanish and equal the operator form
    predicted for it.  For n = 1 the base minors that delete row 2 do not
    exist inside A, so the bordered determinants are taken directly.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidDimension(f"n must be a positive integer, got {n!r}")
    if n > MAX_REPLAY_N:
        raise DimensionTooLarge(f"replay supports n <= {MAX_REPLAY_N}, got {n}")

    a = generic_matrix(n)
    a_plus = extend(a)
    direct = {name: det(a_plus) if spec is None else det(minor(a_plus, spec))
              for name, spec in _BASE_SPECS.items()}
    if n >= 2:
        base = {name: det(a) if spec is None else det(minor(a, spec))
                for name, spec in _BASE_SPECS.items()}
        bordered = {name: border_expansion(n, p) for name, p in base.items()}
        border_ok = {name: bordered[name] == direct[name] for name in bordered}
        mixed_form, cross_form = _operator_forms(n, base)
    else:
        base, bordered, border_ok = None, direct, {}

    residual = _canonical_residual(bordered)

    corner = EntryVar(n + 1, n + 1)
    column = {i: EntryVar(i, n + 1) for i in range(1, n + 1)}
    collected = residual.collect([corner, *column.values()])
    zero = MultiPoly()

    def take(factors):
        return collected.pop(Monomial(factors), zero)

    corner_sq = TermGroup("corner_sq", (), str(Monomial([(corner, 2)])), take([(corner, 2)]),
                          _canonical_residual(base) if base else None)
    cross = {}
    for i, j in combinations_with_replacement(range(1, n + 1), 2):
        mono = Monomial([(column[i], 1), (column[j], 1)])
        cross[i, j] = TermGroup("cross", (i, j), str(mono), take(mono),
                                cross_form(i, j) if base else None)
    mixed = {}
    for i in range(1, n + 1):
        mono = Monomial([(corner, 1), (column[i], 1)])
        mixed[i] = TermGroup("mixed", (i,), str(mono), take(mono),
                             mixed_form(i) if base else None)
    other = [TermGroup("other", (), str(p), c) for p, c in collected.items()]
    return ReplayReport(n, residual, corner_sq, cross, mixed, other, border_ok)


# -- numeric campaign ---------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014); portable and bit-reproducible.

    Bounded draws use rejection sampling on the raw 64-bit output so the
    sequence does not depend on any library's range reduction.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def matrix(self, n: int, bound: int) -> IntMatrix:
        """n x n matrix, entries drawn row-major from [-bound, bound]."""
        return IntMatrix([[self.uniform(-bound, bound) for _ in range(n)] for _ in range(n)], n, n)


@dataclass
class CampaignSummary:
    seed: int
    entry_bound: int
    trials_per_n: int
    n_values: list[int]
    trials_run: int = 0
    checks_run: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "identity": "sylvester",
            "mode": "random",
            "seed": self.seed,
            "bound": self.entry_bound,
            "trials": self.trials_per_n,
            "n": self.n_values,
            "trials_run": self.trials_run,
            "checks_run": self.checks_run,
            "violations": len(self.violations),
            "violation_details": self.violations,
            "holds": self.ok,
        }


def random_numeric_campaign(n_range, trials: int, seed: int, entry_bound: int,
                            indices=None) -> CampaignSummary:
    """Check the identity on seeded random integer matrices.

    One SplitMix64 stream seeded with ``seed`` feeds all matrices, in
    increasing n and then trial order, entries row-major.  Every sorted
    index tuple is checked unless ``indices`` names a single one.
    """
    n_values = sorted(set(n_range))
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not n_values or n_values[0] < 2:
        raise DimensionTooSmall("campaign dimensions must be >= 2")
    rng = SplitMix64(seed)
    summary = CampaignSummary(seed, entry_bound, trials, n_values)
    for n in n_values:
        for t in range(trials):
            m = rng.matrix(n, entry_bound)
            reports = check_all(m) if indices is None else [check_general(m, *indices)]
            for report in reports:
                summary.checks_run += 1
                if not report.holds:
                    summary.violations.append({
                        "n": n, "trial": t, "indices": list(report.indices),
                        "lhs": str(report.lhs), "rhs": str(report.rhs),
                        "matrix": [[str(x) for x in row] for row in m.rows],
                    })
            summary.trials_run += 1
    return summary


# -- Dodgson condensation -----------------------------------------------------


def dodgson_trace(m: IntMatrix) -> tuple[int, int]:
    """Determinant by condensation, plus the number of exact divisions done.

    Layer k holds the k x k contiguous minors; each new entry is a 2x2
    determinant of the current layer divided by the interior entry of the
    layer before it.
    """
    if not m.is_square:
        raise NotSquare(f"{m.n_rows}x{m.n_cols}")
    n = m.n_rows
    if n == 0:
        return 1, 0
    prev = None  # layer of size k + 1; all ones before the first step
    cur = m.tolist()
    divisions = 0
    while len(cur) > 1:
        k = len(cur)
        nxt = []
        for r in range(k - 1):
            row = []
            for c in range(k - 1):
                num = cur[r][c] * cur[r + 1][c + 1] - cur[r][c + 1] * cur[r + 1][c]
                if prev is None:
                    row.append(num)
                    continue
                divisor = prev[r + 1][c + 1]
                if divisor == 0:
                    order = n - k
                    raise ZeroInteriorMinor(
                        f"contiguous {order}x{order} minor at ({r + 2},{c + 2}) is zero")
                row.append(exact_div(num, divisor))
                divisions += 1
            nxt.append(row)
        prev, cur = cur, nxt
    return cur[0][0], divisions


def dodgson_condensation(m: IntMatrix) -> int:
    return dodgson_trace(m)[0]

