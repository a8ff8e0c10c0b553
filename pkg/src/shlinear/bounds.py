"""Quantitative layer: best-known-code snapshots and the derived bounds.

vbar(q, h, n) is the minimum redundancy r = n-k in [2h, n) for which an
[n, n-r, d >= 2h+1] code over F_q exists; it equals the minimum dimension
of an ambient space containing an S_h-linear set with n+1 elements, and
log_q B_q(n, 2h+1) = n - vbar(q, h, n).

Existence evidence comes from ingested table entries (d_low); nonexistence
comes either from table entries (d_up) or from exhaustive enumeration of
all [n, k] codes via reduced-row-echelon-form generator matrices, which
turns a table citation into an independently checkable certificate at desk
scale. Every result carries its provenance chain and can be re-validated.

sh_lower(q, r, h) is the table-generation rule for lower bounds on the
maximum S_h-linear set size in F_q^r: max{n+1 : [n, n-r, d >= 2h+1] known}.
Cells with no qualifying entry get the sentinel X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    BudgetExceededError,
    NoWitnessError,
    ParseError,
    SingletonViolationError,
)

DEFAULT_SEARCH_BUDGET = 500_000
RECHECK_CAP = 250_000


@dataclass(frozen=True)
class CodeTableEntry:
    """One (q, n, k) row of a best-known-codes snapshot.

    d_low: largest d for which an [n, k, d] code is known to exist.
    d_up:  best known upper bound on the achievable minimum distance.
    """

    q: int
    n: int
    k: int
    d_low: int
    d_up: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise SingletonViolationError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.d_low <= self.d_up:
            raise SingletonViolationError(
                f"need 1 <= d_low <= d_up, got d_low={self.d_low}, d_up={self.d_up}"
            )
        if self.k + self.d_up > self.n + 1:
            raise SingletonViolationError(
                f"[{self.n},{self.k}] with d_up={self.d_up} violates k + d <= n + 1"
            )

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def __str__(self) -> str:
        return f"{self.q},{self.n},{self.k},{self.d_low},{self.d_up}"


@dataclass(frozen=True)
class ExhaustiveCertificate:
    """Outcome of enumerating every [n, k] code over F_q against a distance
    target: either no code reaches d (nonexistence) or a witness generator
    matrix is recorded."""

    q: int
    n: int
    k: int
    d: int
    exists: bool
    candidates: int
    witness_rows: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __str__(self) -> str:
        verdict = "exists" if self.exists else "none"
        return (
            f"exhaustive[{self.n},{self.k}]q{self.q} d>={self.d}: {verdict} "
            f"({self.candidates} candidates)"
        )


Provenance = Union[CodeTableEntry, ExhaustiveCertificate]


@dataclass(frozen=True)
class BoundResult:
    """A derived bound with its provenance chain.

    value is the bound when settled; for sh_lower a None value is the X
    sentinel (no qualifying entry). interval is set instead of an exact
    value when nonexistence below the upper bound could not be certified.
    """

    kind: str
    value: Optional[int]
    provenance: Tuple[Provenance, ...]
    interval: Optional[Tuple[int, int]] = None
    note: str = ""

    @property
    def exact(self) -> bool:
        return self.value is not None and self.interval is None

    @property
    def is_sentinel(self) -> bool:
        return self.value is None and self.interval is None

    def display(self) -> str:
        if self.is_sentinel:
            return "X"
        if self.interval is not None:
            lo, hi = self.interval
            return f"[{lo},{hi}]"
        return str(self.value)


# ---------------------------------------------------------------------------
# snapshot ingestion
# ---------------------------------------------------------------------------

def parse_table(lines: Iterable[str], source: str = "<snapshot>") -> List[CodeTableEntry]:
    """Parse `q,n,k,d_low,d_up` lines; `#` starts a comment, blanks ignored."""
    entries: List[CodeTableEntry] = []
    seen = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 5:
            raise ParseError(f"{source}: expected 5 comma-separated fields, got {len(parts)}", lineno)
        try:
            q, n, k, d_low, d_up = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"{source}: non-integer field in {line!r}", lineno) from None
        try:
            entry = CodeTableEntry(q, n, k, d_low, d_up)
        except SingletonViolationError as exc:
            raise SingletonViolationError(f"{source} line {lineno}: {exc}") from None
        key = (q, n, k)
        if key in seen:
            raise ParseError(f"{source}: duplicate entry for (q,n,k)={key}", lineno)
        seen[key] = entry
        entries.append(entry)
    return entries


def ingest_table(path) -> List[CodeTableEntry]:
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        return parse_table(fh, source=str(path))


def _lookup(entries: Sequence[CodeTableEntry], q: int, n: int, k: int) -> Optional[CodeTableEntry]:
    for e in entries:
        if e.q == q and e.n == n and e.k == k:
            return e
    return None


# ---------------------------------------------------------------------------
# exhaustive nonexistence / existence certificates
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _rref_generators_f2(n: int, k: int):
    """All full-rank k x n RREF matrices over F_2 as row bitmask tuples."""
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, c)
            for i, p in enumerate(pivots)
            for c in range(p + 1, n)
            if c not in pivot_set
        ]
        base = [1 << (n - 1 - p) for p in pivots]
        for bits in range(1 << len(free)):
            rows = list(base)
            for t, (i, c) in enumerate(free):
                if (bits >> t) & 1:
                    rows[i] |= 1 << (n - 1 - c)
            yield rows


def _rref_generators_fq(n: int, k: int, q: int):
    """All full-rank k x n RREF matrices over F_q as coordinate rows."""
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, c)
            for i, p in enumerate(pivots)
            for c in range(p + 1, n)
            if c not in pivot_set
        ]
        for assignment in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), val in zip(free, assignment):
                rows[i][c] = val
            yield rows


def exists_code_with_distance(
    q: int, n: int, k: int, d: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> ExhaustiveCertificate:
    """Enumerate every [n, k] code over F_q and decide whether one reaches
    minimum distance >= d. Raises BudgetExceededError when the number of
    candidate codes (the Gaussian binomial) exceeds the budget."""
    count = gaussian_binomial(n, k, q)
    if count > budget:
        raise BudgetExceededError(
            f"{count} candidate [{n},{k}] codes over F_{q} exceed budget {budget}"
        )
    if k == 0:
        return ExhaustiveCertificate(q, n, k, d, True, 1, witness_rows=())
    checked = 0
    if q == 2:
        for rows in _rref_generators_f2(n, k):
            checked += 1
            good = True
            word = 0
            for msg in range(1, 1 << k):
                word ^= rows[(msg & -msg).bit_length() - 1]
                if word.bit_count() < d:
                    good = False
                    break
            if good:
                witness = tuple(
                    tuple((r >> (n - 1 - j)) & 1 for j in range(n)) for r in rows
                )
                return ExhaustiveCertificate(q, n, k, d, True, checked, witness)
        return ExhaustiveCertificate(q, n, k, d, False, checked)
    from .gf import field_of_order

    ctx = field_of_order(q)
    add, mul = ctx._add, ctx._mul
    for rows in _rref_generators_fq(n, k, q):
        checked += 1
        good = True
        for msg in itertools.product(range(q), repeat=k):
            if not any(msg):
                continue
            weight = 0
            for j in range(n):
                acc = 0
                for i in range(k):
                    if msg[i] and rows[i][j]:
                        acc = add[acc][mul[msg[i]][rows[i][j]]]
                if acc:
                    weight += 1
            if weight < d:
                good = False
                break
        if good:
            return ExhaustiveCertificate(q, n, k, d, True, checked, tuple(tuple(r) for r in rows))
    return ExhaustiveCertificate(q, n, k, d, False, checked)


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def vbar_upper(entries: Sequence[CodeTableEntry], q: int, h: int, n: int) -> BoundResult:
    """Upper bound on vbar: min n-k over entries with d_low >= 2h+1 and
    2h <= n-k < n."""
    if n <= 2 * h:
        raise ValueError(f"need n > 2h, got n={n}, h={h}")
    target = 2 * h + 1
    best: Optional[CodeTableEntry] = None
    for e in entries:
        if e.q != q or e.n != n or e.d_low < target:
            continue
        if not 2 * h <= e.redundancy < n:
            continue
        if best is None or e.redundancy < best.redundancy:
            best = e
    if best is None:
        raise NoWitnessError(f"no [{n},k,>={target}] entry over F_{q} in the snapshot")
    return BoundResult("vbar_upper", best.redundancy, (best,))


def vbar_exact(
    entries: Sequence[CodeTableEntry],
    q: int,
    h: int,
    n: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> BoundResult:
    """Exact vbar when every redundancy below the first existence witness can
    be excluded (by a table d_up entry or an exhaustive certificate); else an
    interval result explaining the first undecided redundancy."""
    if n <= 2 * h:
        raise ValueError(f"need n > 2h, got n={n}, h={h}")
    target = 2 * h + 1
    try:
        upper = vbar_upper(entries, q, h, n)
    except NoWitnessError:
        upper = None
    exclusions: List[Provenance] = []
    for r in range(2 * h, n):
        if upper is not None and r > upper.value:
            break
        k = n - r
        entry = _lookup(entries, q, n, k)
        if entry is not None and entry.d_low >= target:
            return BoundResult("vbar_exact", r, (entry, *exclusions))
        if entry is not None and entry.d_up < target:
            exclusions.append(entry)
            continue
        try:
            cert = exists_code_with_distance(q, n, k, target, budget)
        except BudgetExceededError:
            if upper is None:
                raise NoWitnessError(
                    f"no existence witness for vbar(q={q}, h={h}, n={n}) and "
                    f"[{n},{k}] is too large to enumerate"
                ) from None
            return BoundResult(
                "vbar_exact",
                None,
                tuple(upper.provenance) + tuple(exclusions),
                interval=(r, upper.value),
                note=(
                    f"undecided at redundancy {r}: no table entry for [{n},{k}] "
                    f"and enumeration exceeds budget {budget}"
                ),
            )
        if cert.exists:
            return BoundResult("vbar_exact", r, (cert, *exclusions))
        exclusions.append(cert)
    raise NoWitnessError(
        f"every redundancy in [{2 * h}, {n}) is excluded for q={q}, h={h}, n={n}"
    )


def bmax_log(
    entries: Sequence[CodeTableEntry],
    q: int,
    n: int,
    h: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    exact: bool = True,
) -> BoundResult:
    """log_q of the maximum size of a length-n code with d >= 2h+1, as
    n - vbar, carrying vbar's exactness status."""
    base = vbar_exact(entries, q, h, n, budget) if exact else vbar_upper(entries, q, h, n)
    if base.value is not None and base.interval is None:
        return BoundResult("bmax_log", n - base.value, base.provenance, note=base.note)
    lo, hi = base.interval
    return BoundResult(
        "bmax_log",
        None,
        base.provenance,
        interval=(n - hi, n - lo),
        note=base.note,
    )


def sh_lower(entries: Sequence[CodeTableEntry], q: int, r: int, h: int) -> BoundResult:
    """Lower bound on the maximum S_h-linear set size in F_q^r: the largest
    n+1 over entries with n-k = r and d_low >= 2h+1. A missing cell is the
    X sentinel, not an error."""
    if r < 2 * h:
        return BoundResult("sh_lower", None, (), note=f"r={r} < 2h={2 * h}")
    target = 2 * h + 1
    best: Optional[CodeTableEntry] = None
    for e in entries:
        if e.q != q or e.redundancy != r or e.d_low < target:
            continue
        if best is None or e.n > best.n:
            best = e
    if best is None:
        return BoundResult("sh_lower", None, ())
    return BoundResult("sh_lower", best.n + 1, (best,))


# ---------------------------------------------------------------------------
# table / series emission
# ---------------------------------------------------------------------------

def emit_sh_table(
    entries: Sequence[CodeTableEntry],
    q: int,
    h_range: Sequence[int],
    r_range: Sequence[int],
) -> str:
    """CSV grid of sh_lower values; rows are r, columns are h, X for cells
    with no qualifying snapshot entry."""
    lines = ["r," + ",".join(f"h={h}" for h in h_range)]
    for r in r_range:
        cells = [sh_lower(entries, q, r, h).display() for h in h_range]
        lines.append(f"{r}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def emit_vbar_series(
    entries: Sequence[CodeTableEntry],
    q: int,
    h: int,
    n_range: Sequence[int],
) -> str:
    """CSV series n,vbar of snapshot-backed upper bounds on vbar; X where the
    snapshot has no witness."""
    lines = ["n,vbar"]
    for n in n_range:
        try:
            result = vbar_upper(entries, q, h, n)
            lines.append(f"{n},{result.value}")
        except (NoWitnessError, ValueError):
            lines.append(f"{n},X")
    return "\n".join(lines) + "\n"


def series_step_violations(values: Sequence[Optional[int]]) -> List[str]:
    """Soft check: along consecutive defined values, a vbar series should be
    non-decreasing with steps of 0 or 1. Returns human-readable violations
    (reported, never asserted)."""
    issues = []
    prev = None
    prev_i = None
    for i, v in enumerate(values):
        if v is None:
            continue
        if prev is not None and i == prev_i + 1:
            if v < prev:
                issues.append(f"decrease at position {i}: {prev} -> {v}")
            elif v - prev > 1:
                issues.append(f"step {v - prev} > 1 at position {i}: {prev} -> {v}")
        prev, prev_i = v, i
    return issues


def column_monotone_violations(values: Sequence[Optional[int]]) -> List[str]:
    """Soft check for sh_lower columns: non-decreasing along growing r over
    defined cells."""
    issues = []
    prev = None
    for i, v in enumerate(values):
        if v is None:
            continue
        if prev is not None and v < prev:
            issues.append(f"decrease at position {i}: {prev} -> {v}")
        prev = v
    return issues


# ---------------------------------------------------------------------------
# provenance re-validation
# ---------------------------------------------------------------------------

def revalidate(result: BoundResult, recheck_cap: int = RECHECK_CAP) -> List[str]:
    """Re-check a result's provenance chain: table entries re-validate their
    Singleton constraint, exhaustive certificates re-run when small enough.
    Returns a list of problems (empty = everything re-validated)."""
    problems: List[str] = []
    if not result.provenance and not result.is_sentinel:
        problems.append("non-sentinel result carries no provenance")
    for item in result.provenance:
        if isinstance(item, CodeTableEntry):
            try:
                CodeTableEntry(item.q, item.n, item.k, item.d_low, item.d_up)
            except SingletonViolationError as exc:
                problems.append(str(exc))
        elif isinstance(item, ExhaustiveCertificate):
            if gaussian_binomial(item.n, item.k, item.q) > recheck_cap:
                continue
            rerun = exists_code_with_distance(item.q, item.n, item.k, item.d, recheck_cap)
            if rerun.exists != item.exists or rerun.candidates != item.candidates:
                problems.append(f"certificate did not reproduce: {item} vs {rerun}")
        else:
            problems.append(f"unknown provenance item {item!r}")
    return problems
