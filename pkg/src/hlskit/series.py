"""Chain generating series over the universal denominator, and specializations.

A series value is stored as an exact numerator polynomial together with the
ordered list of denominator factors ``(1 - X_c)``, one per interval element;
no rational-function normalization ever happens.  The numerator of the
half-open series is

    sum over strict chains C of  W_C(Y) * prod_{c in C} X_c * prod_{c not in C} (1 - X_c),

which is the chain sum with denominators cleared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .exactalg import LaurentPoly, Monomial, VarTable, _mono_mul, y_multinomial
from .poset import (
    DegenerateSpecError,
    Element,
    PosetSpec,
    chains_in,
    enumerate_chains,
    enumerate_multichains,
    interval_elements,
    render_element,
)
from .weight import chain_weight, pair_weight, phi_tableau, project, theta_tableau


@dataclass(frozen=True)
class SeriesContext:
    """Variable bookkeeping for one poset spec.

    Y variables come first, ordered by (component, position); X variables
    follow, one per element of the half-open interval in enumeration order.
    """

    spec: PosetSpec
    table: VarTable
    yvars: tuple[tuple[int, ...], ...]
    x_elements: tuple[Element, ...]
    x_ids: dict[Element, int] = field(hash=False, compare=False)

    def all_y_ids(self) -> list[int]:
        return [v for comp in self.yvars for v in comp]

    def top_var(self) -> int | None:
        if not self.x_elements:
            return None
        return self.x_ids[self.x_elements[-1]]


def make_context(spec: PosetSpec, max_elements: int | None = None) -> SeriesContext:
    names = []
    yvars = []
    next_id = 0
    for i in range(spec.g):
        comp = []
        for j in range(spec.n[i] + 1):
            names.append(f"Y[{i + 1},{j}]")
            comp.append(next_id)
            next_id += 1
        yvars.append(tuple(comp))
    x_elements = tuple(interval_elements(spec, "half_open", max_elements))
    x_ids = {}
    for e in x_elements:
        names.append("X{" + render_element(e) + "}")
        x_ids[e] = next_id
        next_id += 1
    return SeriesContext(spec, VarTable(names), tuple(yvars), x_elements, x_ids)


@dataclass
class HlsRational:
    """A series value: exact numerator over an implicit product of (1 - X_c)."""

    kind: str
    spec: PosetSpec | None
    table: VarTable
    numerator: LaurentPoly
    denominator_vars: tuple[int, ...]
    denominator_names: tuple[str, ...]
    chain_count: int

    @property
    def term_count(self) -> int:
        return self.numerator.term_count

    def denominator_text(self) -> str:
        if not self.denominator_vars:
            return "1"
        return "*".join(f"(1 - {self.table.name(v)})" for v in self.denominator_vars)


def _numerator_sum(
    table: VarTable,
    interval_vids: Sequence[int],
    contributions: Iterable[tuple[LaurentPoly, Sequence[int]]],
) -> tuple[LaurentPoly, int]:
    """Clear denominators for a chain sum.

    Each contribution is (weight, X variable ids of the chain); the term is
    weight * prod(chain X) * prod over the rest of the interval of (1 - X).
    """
    acc: dict[Monomial, int] = {}
    count = 0
    interval = list(interval_vids)
    for weight, chain_vids in contributions:
        count += 1
        if weight.is_zero():
            continue
        member = set(chain_vids)
        xmono: Monomial = tuple(sorted((v, 1) for v in member))
        # Expand prod (1 - X_v) over the complement of the chain.
        prod: dict[Monomial, int] = {(): 1}
        for v in interval:
            if v in member:
                continue
            update: dict[Monomial, int] = dict(prod)
            for m, c in prod.items():
                m2 = _mono_mul(m, ((v, 1),))
                c2 = update.get(m2, 0) - c
                if c2:
                    update[m2] = c2
                elif m2 in update:
                    del update[m2]
            prod = update
        for mw, cw in weight.terms.items():
            base = _mono_mul(mw, xmono)
            for mp, cp in prod.items():
                m = _mono_mul(base, mp)
                c = acc.get(m, 0) + cw * cp
                if c:
                    acc[m] = c
                elif m in acc:
                    del acc[m]
    return LaurentPoly(table, acc), count


def _series(
    spec: PosetSpec,
    interval: str,
    kind: str,
    max_chains: int | None,
    max_elements: int | None,
) -> HlsRational:
    ctx = make_context(spec, max_elements)
    denom_elements = (
        ctx.x_elements if interval == "half_open" else ctx.x_elements[:-1]
    )
    denom_vids = tuple(ctx.x_ids[e] for e in denom_elements)
    weights: dict[tuple[Element, Element], LaurentPoly] = {}

    def w(a: Element, b: Element) -> LaurentPoly:
        key = (a, b)
        if key not in weights:
            weights[key] = pair_weight(a, b, ctx.yvars, ctx.table)
        return weights[key]

    bottom = spec.bottom()
    top = spec.top()

    def contributions():
        for chain in enumerate_chains(spec, interval, max_chains, max_elements):
            weight = LaurentPoly.const(ctx.table, 1)
            prev = bottom
            for e in chain:
                weight = weight * w(prev, e)
                prev = e
            weight = weight * w(prev, top)
            yield weight, [ctx.x_ids[e] for e in chain]

    numerator, count = _numerator_sum(ctx.table, denom_vids, contributions())
    return HlsRational(
        kind,
        spec,
        ctx.table,
        numerator,
        denom_vids,
        tuple(render_element(e) for e in denom_elements),
        count,
    )


def hls(
    spec: PosetSpec,
    max_chains: int | None = None,
    max_elements: int | None = None,
) -> HlsRational:
    """The series over strict chains of the half-open interval."""
    return _series(spec, "half_open", "hls", max_chains, max_elements)


def hls_modified(
    spec: PosetSpec,
    max_chains: int | None = None,
    max_elements: int | None = None,
) -> HlsRational:
    """The series over strict chains of the open interval."""
    return _series(spec, "open", "hls_modified", max_chains, max_elements)


def relation_check(spec: PosetSpec) -> bool:
    """Exact check that the half-open series is the open one over 1 - X_top.

    With the shared universal denominator this reduces to equality of the
    two numerators, since the denominators differ by exactly the top factor.
    """
    if spec.is_degenerate():
        raise DegenerateSpecError("bottom equals top; the relation presupposes otherwise")
    h = hls(spec)
    hm = hls_modified(spec)
    if h.denominator_vars[:-1] != hm.denominator_vars:
        return False
    return h.numerator == hm.numerator


# -- truncated expansions ----------------------------------------------------------


@dataclass
class TruncatedSeries:
    """Coefficients of X multidegrees up to a total-degree bound."""

    bound: int
    table: VarTable
    x_vars: tuple[int, ...]
    coefficients: dict[tuple[int, ...], LaurentPoly]

    def coefficient(self, key: tuple[int, ...]) -> LaurentPoly:
        return self.coefficients.get(key, LaurentPoly.zero(self.table))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.bound == other.bound
            and self.table == other.table
            and self.x_vars == other.x_vars
            and self.coefficients == other.coefficients
        )

    def sorted_items(self) -> list[tuple[tuple[int, ...], LaurentPoly]]:
        return sorted(self.coefficients.items(), key=lambda kv: (sum(kv[0]), kv[0]))


def expand_multichain(
    spec: PosetSpec,
    bound: int,
    max_chains: int | None = None,
    max_elements: int | None = None,
) -> TruncatedSeries:
    """Direct multichain expansion: one weight per multiplicity vector."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    ctx = make_context(spec, max_elements)
    index = {e: k for k, e in enumerate(ctx.x_elements)}
    m = len(ctx.x_elements)
    coeffs: dict[tuple[int, ...], LaurentPoly] = {}
    for mchain in enumerate_multichains(spec, "half_open", bound, max_chains, max_elements):
        key = [0] * m
        for e in mchain:
            key[index[e]] += 1
        weight = chain_weight(mchain, spec, ctx.yvars, ctx.table)
        k = tuple(key)
        prev = coeffs.get(k)
        coeffs[k] = weight if prev is None else prev + weight
    coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
    return TruncatedSeries(bound, ctx.table, tuple(ctx.x_ids[e] for e in ctx.x_elements), coeffs)


def expand_rational(h: HlsRational, bound: int) -> TruncatedSeries:
    """Geometric expansion of the stored numerator/denominator, truncated."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    xset = {v: k for k, v in enumerate(h.denominator_vars)}
    m = len(h.denominator_vars)
    coeffs: dict[tuple[int, ...], dict[Monomial, int]] = {}
    for mono, c in h.numerator.terms.items():
        key = [0] * m
        rest = []
        for v, e in mono:
            if v in xset:
                key[xset[v]] = e
            else:
                rest.append((v, e))
        if sum(key) > bound:
            continue
        bucket = coeffs.setdefault(tuple(key), {})
        rm = tuple(rest)
        c2 = bucket.get(rm, 0) + c
        if c2:
            bucket[rm] = c2
        elif rm in bucket:
            del bucket[rm]
    for pos in range(m):
        update: dict[tuple[int, ...], dict[Monomial, int]] = {}
        for key, bucket in coeffs.items():
            total = sum(key)
            for t in range(0, bound - total + 1):
                key2 = key[:pos] + (key[pos] + t,) + key[pos + 1 :]
                target = update.setdefault(key2, {})
                for mono, c in bucket.items():
                    c2 = target.get(mono, 0) + c
                    if c2:
                        target[mono] = c2
                    elif mono in target:
                        del target[mono]
        coeffs = update
    out = {
        key: LaurentPoly(h.table, bucket)
        for key, bucket in coeffs.items()
        if bucket
    }
    return TruncatedSeries(bound, h.table, h.denominator_vars, out)


# -- substitution ------------------------------------------------------------------


class ZeroDenominatorError(ValueError):
    """A substitution sent some denominator factor to the zero polynomial."""


@dataclass
class SubstitutedRational:
    table: VarTable
    numerator: LaurentPoly
    denominator_factors: tuple[LaurentPoly, ...]


def substitute(
    h: HlsRational,
    x_map: Mapping[Element, LaurentPoly | int] | None = None,
    y_map: Mapping[int, LaurentPoly | int] | None = None,
    table: VarTable | None = None,
) -> SubstitutedRational:
    """Substitute into numerator and denominator factors, no cancellation.

    ``x_map`` is keyed by interval elements (resolved through the spec's
    context); ``y_map`` directly by variable id.  Unmapped variables keep
    their names in the target table.
    """
    images: dict[int, LaurentPoly | int] = {}
    if x_map:
        if h.spec is None:
            raise ValueError("this value has no poset spec; map variables by id instead")
        ctx = make_context(h.spec)
        for element, image in x_map.items():
            images[ctx.x_ids[element]] = image
    if y_map:
        images.update(y_map)
    target = table if table is not None else h.table
    numerator = h.numerator.subs(images, target)
    factors = []
    for v in h.denominator_vars:
        image = images.get(v)
        if image is None:
            image = LaurentPoly.variable(target, target.id(h.table.name(v)))
        factor = 1 - (LaurentPoly.const(target, image) if isinstance(image, int) else image)
        if factor.is_zero():
            raise ZeroDenominatorError(
                f"denominator factor for {h.table.name(v)} vanished under substitution"
            )
        factors.append(factor)
    return SubstitutedRational(target, numerator, tuple(factors))


def expand_geometric(
    numerator: LaurentPoly,
    factors: Sequence[LaurentPoly],
    grading_vars: Iterable[int],
    bound: int,
) -> LaurentPoly:
    """Truncated expansion of numerator / prod(factors).

    Every factor must be 1 - M for a monomial M with positive degree in the
    grading variables; the result keeps the terms of total grading degree
    at most ``bound``.
    """
    grading = set(grading_vars)

    def gdeg(mono: Monomial) -> int:
        return sum(e for v, e in mono if v in grading)

    table = numerator.table
    result = LaurentPoly(
        table, {m: c for m, c in numerator.terms.items() if gdeg(m) <= bound}
    )
    for f in factors:
        diff = 1 - f
        if len(diff.terms) != 1:
            raise ValueError("factor is not of the form 1 - monomial")
        ((mono, coeff),) = diff.terms.items()
        step = gdeg(mono)
        if step <= 0:
            raise ValueError("factor monomial must have positive grading degree")
        acc: dict[Monomial, int] = {}
        for m, c in result.terms.items():
            power_mono: Monomial = ()
            power_coeff = 1
            total = gdeg(m)
            t = 0
            while total + t * step <= bound:
                m2 = _mono_mul(m, power_mono)
                c2 = acc.get(m2, 0) + c * power_coeff
                if c2:
                    acc[m2] = c2
                elif m2 in acc:
                    del acc[m2]
                power_mono = _mono_mul(power_mono, mono)
                power_coeff *= coeff
                t += 1
        result = LaurentPoly(table, acc)
    return result


# -- specializations ----------------------------------------------------------------


def classical_igusa(r: int, max_elements: int | None = None) -> HlsRational:
    """Subset-sum form of the one-component, n = 0 series.

    Built independently of the chain machinery: one multinomial weight per
    subset of [r].
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    spec = PosetSpec((0,), (r,))
    ctx = make_context(spec, max_elements)
    y0 = ctx.yvars[0][0]
    element_of = {j: ((j,),) for j in range(1, r + 1)}
    denom_vids = tuple(ctx.x_ids[e] for e in ctx.x_elements)

    def contributions():
        for size in range(r + 1):
            for subset in itertools.combinations(range(1, r + 1), size):
                weight = y_multinomial(ctx.table, r, subset, y0)
                yield weight, [ctx.x_ids[element_of[j]] for j in subset]

    numerator, count = _numerator_sum(ctx.table, denom_vids, contributions())
    return HlsRational(
        "classical_igusa",
        spec,
        ctx.table,
        numerator,
        denom_vids,
        tuple(render_element(e) for e in ctx.x_elements),
        count,
    )


def generalized_igusa(r_vec: Sequence[int], max_elements: int | None = None) -> HlsRational:
    """Chain-sum form over a product of chains, weighted by tableau binomials."""
    spec = PosetSpec(tuple(0 for _ in r_vec), tuple(r_vec))
    ctx = make_context(spec, max_elements)
    denom_vids = tuple(ctx.x_ids[e] for e in ctx.x_elements)

    def contributions():
        for chain in enumerate_chains(spec, "half_open", max_elements=max_elements):
            weight = LaurentPoly.const(ctx.table, 1)
            for i in range(spec.g):
                weight = weight * theta_tableau(project(chain, i, spec), ctx.yvars[i][0], ctx.table)
            yield weight, [ctx.x_ids[e] for e in chain]

    numerator, count = _numerator_sum(ctx.table, denom_vids, contributions())
    return HlsRational(
        "generalized_igusa",
        spec,
        ctx.table,
        numerator,
        denom_vids,
        tuple(render_element(e) for e in ctx.x_elements),
        count,
    )


def mv_hls(n: int, max_elements: int | None = None) -> HlsRational:
    """Reduced-tableau sum for one component with r = 0.

    Reduced tableaux are identified with strict chains of their column
    sets; the weight is read from the projected tableau, so this route is
    independent of the pairwise chain weights.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    spec = PosetSpec((n,), (0,))
    ctx = make_context(spec, max_elements)
    denom_vids = tuple(ctx.x_ids[e] for e in ctx.x_elements)

    def contributions():
        for chain in enumerate_chains(spec, "half_open", max_elements=max_elements):
            tab = project(chain, 0, spec)
            weight = theta_tableau(tab, ctx.yvars[0][0], ctx.table) * phi_tableau(
                tab, ctx.yvars[0][1:], ctx.table
            )
            yield weight, [ctx.x_ids[e] for e in chain]

    numerator, count = _numerator_sum(ctx.table, denom_vids, contributions())
    return HlsRational(
        "mv_hls",
        spec,
        ctx.table,
        numerator,
        denom_vids,
        tuple(render_element(e) for e in ctx.x_elements),
        count,
    )


def weak_order_igusa(g: int, max_elements: int | None = None) -> HlsRational:
    """Flag sum over nonempty subsets of [g], ordered by inclusion.

    X variables are named by the subsets, which coincides with the element
    naming of the one-component r = 0 poset on [g].
    """
    if g < 1:
        raise ValueError("g must be positive")
    spec = PosetSpec((g,), (0,))
    ctx = make_context(spec, max_elements)
    denom_vids = tuple(ctx.x_ids[e] for e in ctx.x_elements)

    def subset_leq(i: int, j: int) -> bool:
        a = ctx.x_elements[i][0]
        b = ctx.x_elements[j][0]
        return all(x <= y for x, y in zip(a, b))

    one = LaurentPoly.const(ctx.table, 1)

    def contributions():
        for flag in chains_in(ctx.x_elements, leq=subset_leq):
            yield one, [ctx.x_ids[e] for e in flag]

    numerator, count = _numerator_sum(ctx.table, denom_vids, contributions())
    return HlsRational(
        "weak_order_igusa",
        None,
        ctx.table,
        numerator,
        denom_vids,
        tuple(render_element(e) for e in ctx.x_elements),
        count,
    )
