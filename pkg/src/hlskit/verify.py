"""Identity checking: zeta/Moebius matrices, reciprocity, order-complex sums.

All checks are exact Laurent-polynomial identities after clearing the
universal denominator; no rational normal form is ever computed.  The sign
and monomial bookkeeping of the cleared forms comes from

    1 - 1/X = -(1 - X)/X,

so inverting every variable of a numerator over m denominator factors
multiplies the value by (-1)^m * prod X_c relative to the uninverted
denominator.  The (1),(2) instance of the half-open series pins these
conventions; the test suite locks them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactalg import LaurentPoly, VarTable
from .poset import (
    DegenerateSpecError,
    Element,
    PosetSpec,
    chains_in,
    delta,
    enumerate_elements,
    leq_t,
    lt_t,
    render_element,
)
from .series import HlsRational, hls, hls_modified, make_context
from .weight import chain_weight, pair_weight

DEFAULT_MAX_SUBSETS = 1 << 12


@dataclass
class PolyMatrix:
    """Square matrix of polynomials indexed by an ordered element list."""

    labels: tuple[Element, ...]
    entries: list[list[LaurentPoly]]
    table: VarTable

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __getitem__(self, pair: tuple[int, int]) -> LaurentPoly:
        i, j = pair
        return self.entries[i][j]

    def entry_of(self, a: Element, b: Element) -> LaurentPoly:
        return self.entries[self.labels.index(a)][self.labels.index(b)]


def _context_vars(
    spec: PosetSpec,
    table: VarTable | None,
    yvars: Sequence[Sequence[int]] | None,
) -> tuple[VarTable, tuple[tuple[int, ...], ...]]:
    if table is None or yvars is None:
        ctx = make_context(spec)
        return ctx.table, ctx.yvars
    return table, tuple(tuple(v) for v in yvars)


def zeta_matrix(
    spec: PosetSpec,
    table: VarTable | None = None,
    yvars: Sequence[Sequence[int]] | None = None,
    max_elements: int | None = None,
) -> PolyMatrix:
    """Entries are the pair weights; zero off the order, one on the diagonal."""
    table, yvars = _context_vars(spec, table, yvars)
    elements = tuple(enumerate_elements(spec, max_elements))
    entries = [[pair_weight(a, b, yvars, table) for b in elements] for a in elements]
    return PolyMatrix(elements, entries, table)


def mobius_matrix(
    spec: PosetSpec,
    table: VarTable | None = None,
    yvars: Sequence[Sequence[int]] | None = None,
    max_elements: int | None = None,
) -> PolyMatrix:
    """Closed-form inverse of the zeta matrix.

    Entry (a, b) is the pair weight at inverted variables, times the sign
    (-1)^(cardinality difference) and the monomial of per-position deltas,
    which clears every negative exponent; the result is asserted to be a
    plain polynomial.
    """
    table, yvars = _context_vars(spec, table, yvars)
    elements = tuple(enumerate_elements(spec, max_elements))
    all_y = [v for comp in yvars for v in comp]
    zero = LaurentPoly.zero(table)
    entries = []
    for a in elements:
        row = []
        for b in elements:
            if not leq_t(a, b):
                row.append(zero)
                continue
            sign = 1
            exps: dict[int, int] = {}
            for i in range(spec.g):
                ni = spec.n[i]
                if delta(a[i], b[i], ni + 1) % 2:
                    sign = -sign
                for j in range(ni + 1):
                    d = delta(a[i], b[i], j)
                    if d:
                        exps[yvars[i][j]] = d
            w_inv = pair_weight(a, b, yvars, table).invert_vars(all_y)
            entry = LaurentPoly.monomial(table, exps, sign) * w_inv
            assert not entry.has_negative_exponent(), "Moebius entry failed to clear"
            row.append(entry)
        entries.append(row)
    return PolyMatrix(elements, entries, table)


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.labels != b.labels:
        raise ValueError("matrix index mismatch")
    n = a.dim
    zero = LaurentPoly.zero(a.table)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                x = a.entries[i][k]
                y = b.entries[k][j]
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        entries.append(row)
    return PolyMatrix(a.labels, entries, a.table)


def is_identity(a: PolyMatrix) -> bool:
    for i in range(a.dim):
        for j in range(a.dim):
            e = a.entries[i][j]
            if i == j:
                if not e.is_one():
                    return False
            elif not e.is_zero():
                return False
    return True


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product; combined labels concatenate the component tuples."""
    if a.table != b.table:
        raise ValueError("operands use different variable tables")
    labels = tuple(la + lb for la in a.labels for lb in b.labels)
    entries = []
    for i in range(a.dim):
        for k in range(b.dim):
            row = []
            for j in range(a.dim):
                for l in range(b.dim):
                    row.append(a.entries[i][j] * b.entries[k][l])
            entries.append(row)
    return PolyMatrix(labels, entries, a.table)


def mobius_via_chains(
    spec: PosetSpec,
    a: Element,
    b: Element,
    table: VarTable | None = None,
    yvars: Sequence[Sequence[int]] | None = None,
) -> LaurentPoly:
    """Alternating chain sum over the open interval (a, b)."""
    table, yvars = _context_vars(spec, table, yvars)
    if a == b:
        return LaurentPoly.const(table, 1)
    if not leq_t(a, b):
        raise ValueError("a must lie below b in the tableau order")
    between = [c for c in enumerate_elements(spec) if lt_t(a, c) and lt_t(c, b)]
    total = LaurentPoly.zero(table)
    for chain in chains_in(between):
        sign = -1 if len(chain) % 2 == 0 else 1
        product = LaurentPoly.const(table, sign)
        prev = a
        for c in chain:
            product = product * pair_weight(prev, c, yvars, table)
            prev = c
        product = product * pair_weight(prev, b, yvars, table)
        total = total + product
    return total


def K_and_N(
    spec: PosetSpec,
    table: VarTable | None = None,
    yvars: Sequence[Sequence[int]] | None = None,
) -> tuple[LaurentPoly, int]:
    """The reciprocity monomial and exponent sum for a spec."""
    table, yvars = _context_vars(spec, table, yvars)
    exps: dict[int, int] = {}
    n_value = 0
    for i in range(spec.g):
        ri = spec.r[i]
        n_value += spec.n[i] + ri
        e0 = ri * (ri - 1) // 2
        if e0:
            exps[yvars[i][0]] = e0
        for j in range(1, spec.n[i] + 1):
            exps[yvars[i][j]] = ri + j - 1
    return LaurentPoly.monomial(table, exps, 1), n_value


@dataclass
class ReciprocityCertificate:
    """Cleared-denominator reciprocity instance; equal iff lhs == rhs."""

    spec: PosetSpec
    kind: str
    n_value: int
    k: LaurentPoly
    lhs: LaurentPoly
    rhs: LaurentPoly
    equal: bool


def cleared_reciprocity(
    value: HlsRational,
    k: LaurentPoly,
    n_value: int,
    top_var: int | None,
) -> tuple[LaurentPoly, LaurentPoly]:
    """Both cleared sides of the functional equation for a series value.

    lhs = (-1)^m * K * prod X_c * Num(inverted), with m denominator factors;
    rhs = (-1)^N * X_top * Num for the half-open series (top_var given), and
    rhs = (-1)^(N-1) * Num for the open one (top_var None).
    """
    table = value.table
    m = len(value.denominator_vars)
    all_vars = range(len(table))
    inverted = value.numerator.invert_vars(all_vars)
    x_product = LaurentPoly.monomial(table, {v: 1 for v in value.denominator_vars}, 1)
    lhs = k * x_product * inverted
    if m % 2:
        lhs = -lhs
    if top_var is not None:
        rhs = LaurentPoly.variable(table, top_var) * value.numerator
        if n_value % 2:
            rhs = -rhs
    else:
        rhs = value.numerator
        if (n_value - 1) % 2:
            rhs = -rhs
    return lhs, rhs


def verify_reciprocity(
    spec: PosetSpec,
    kind: str = "hls",
    max_chains: int | None = None,
    max_elements: int | None = None,
) -> ReciprocityCertificate:
    """Check the functional equation exactly for one spec and series kind."""
    if spec.is_degenerate():
        raise DegenerateSpecError(
            "bottom equals top; the reciprocity statement is vacuous here"
        )
    if kind not in ("hls", "hls_modified"):
        raise ValueError(f"unknown series kind {kind!r}")
    ctx = make_context(spec, max_elements)
    k, n_value = K_and_N(spec, ctx.table, ctx.yvars)
    if kind == "hls":
        value = hls(spec, max_chains, max_elements)
        top_var = ctx.top_var()
    else:
        value = hls_modified(spec, max_chains, max_elements)
        top_var = None
    lhs, rhs = cleared_reciprocity(value, k, n_value, top_var)
    return ReciprocityCertificate(spec, kind, n_value, k, lhs, rhs, lhs == rhs)


@dataclass
class OrderComplexReport:
    spec: PosetSpec
    subsets_checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_order_complex(
    spec: PosetSpec,
    max_subsets: int | None = None,
) -> OrderComplexReport:
    """Check the alternating chain-sum identity for every subset of (0,1).

    For each subset S of the open interval, the signed chain weights of the
    order complex of S must equal (-1)^(N-1) K times the signed inverted
    chain weights over the complement of S.
    """
    if spec.is_degenerate():
        raise DegenerateSpecError(
            "bottom equals top; the order-complex identity is vacuous here"
        )
    cap = DEFAULT_MAX_SUBSETS if max_subsets is None else max_subsets
    ctx = make_context(spec)
    open_interval = ctx.x_elements[:-1]
    m = len(open_interval)
    if 1 << m > cap:
        raise ValueError(f"2^{m} subsets exceed the cap {cap}")
    k, n_value = K_and_N(spec, ctx.table, ctx.yvars)
    all_y = ctx.all_y_ids()
    rhs_scale = k if (n_value - 1) % 2 == 0 else -k

    # Precompute every chain of the full open interval with its bitmask.
    index = {e: pos for pos, e in enumerate(open_interval)}
    prepared = []
    for chain in chains_in(list(open_interval)):
        mask = 0
        for e in chain:
            mask |= 1 << index[e]
        sign = -1 if len(chain) % 2 else 1
        w = chain_weight(chain, spec, ctx.yvars, ctx.table)
        lhs_term = w if sign == 1 else -w
        rhs_term = rhs_scale * w.invert_vars(all_y)
        if sign == -1:
            rhs_term = -rhs_term
        prepared.append((mask, lhs_term, rhs_term))

    failures = []
    full = (1 << m) - 1
    zero = LaurentPoly.zero(ctx.table)
    for s in range(1 << m):
        comp = full ^ s
        lhs = zero
        rhs = zero
        for mask, lhs_term, rhs_term in prepared:
            if mask & ~s == 0:
                lhs = lhs + lhs_term
            if mask & ~comp == 0:
                rhs = rhs + rhs_term
        if lhs != rhs:
            members = [render_element(open_interval[i]) for i in range(m) if s >> i & 1]
            failures.append("{" + ", ".join(members) + "}")
    return OrderComplexReport(spec, 1 << m, tuple(failures))
