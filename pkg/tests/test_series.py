import pytest

from hlskit.exactalg import LaurentPoly, VarTable
from hlskit.poset import DegenerateSpecError, PosetSpec, parse_element, render_element
from hlskit.series import (
    ZeroDenominatorError,
    classical_igusa,
    expand_geometric,
    expand_multichain,
    expand_rational,
    generalized_igusa,
    hls,
    hls_modified,
    make_context,
    mv_hls,
    relation_check,
    substitute,
    weak_order_igusa,
)
from hlskit.weight import chain_weight, phi_tableau, project, theta_tableau

from conftest import reference_numerator_1_2

SPEC12 = PosetSpec((1,), (2,))


def test_context_variable_layout():
    ctx = make_context(PosetSpec((1, 0), (0, 2)))
    assert ctx.table.names[:3] == ("Y[1,0]", "Y[1,1]", "Y[2,0]")
    assert all(name.startswith("X{") for name in ctx.table.names[3:])
    assert len(ctx.x_elements) == 2 * 3 - 1
    assert ctx.table.name(ctx.top_var()) == "X{1|0^2}"


def test_hls_1_2_matches_the_reference_numerator():
    h = hls(SPEC12)
    assert h.term_count == 12
    assert len(h.denominator_vars) == 5
    assert h.numerator == reference_numerator_1_2(h.table)
    assert h.denominator_names == ("0", "0^2", "1", "0 1", "0^2 1")
    assert h.chain_count == 32


def test_hls_2_2_term_count():
    h = hls(PosetSpec((2,), (2,)))
    assert h.term_count == 1412
    assert len(h.denominator_vars) == 11


def test_degenerate_series_is_one():
    for build in (hls, hls_modified):
        h = build(PosetSpec((0, 0), (0, 0)))
        assert h.numerator.is_one()
        assert h.denominator_vars == ()


def test_modified_series_avoids_the_top_variable():
    h = hls_modified(SPEC12)
    ctx = make_context(SPEC12)
    assert ctx.top_var() not in h.numerator.variables()
    assert len(h.denominator_vars) == 4


def test_relation_between_series():
    assert relation_check(SPEC12)
    assert relation_check(PosetSpec((2,), (1,)))
    assert relation_check(PosetSpec((0, 0), (1, 1)))
    with pytest.raises(DegenerateSpecError):
        relation_check(PosetSpec((0,), (0,)))


def test_constant_term_in_x_is_one():
    for spec in (SPEC12, PosetSpec((1, 1), (1, 0))):
        for build in (hls, hls_modified):
            h = build(spec)
            xvars = set(h.denominator_vars)
            const = {
                m: c
                for m, c in h.numerator.terms.items()
                if all(v not in xvars for v, _ in m)
            }
            assert const == {(): 1}


# -- expansions ---------------------------------------------------------------


def test_expand_multichain_bound_zero():
    ts = expand_multichain(SPEC12, 0)
    key = (0,) * len(ts.x_vars)
    assert list(ts.coefficients) == [key]
    assert ts.coefficient(key).is_one()


def test_expand_top_power_coefficients_are_one():
    ts = expand_multichain(SPEC12, 3)
    m = len(ts.x_vars)
    for k in range(1, 4):
        key = tuple(0 if i < m - 1 else k for i in range(m))
        assert ts.coefficient(key).is_one()


def test_expand_full_table_1_1_by_brute_force():
    # Independent route: accumulate weights multichain by multichain.
    spec = PosetSpec((1,), (1,))
    ctx = make_context(spec)
    from hlskit.poset import enumerate_multichains

    table = {}
    for chain in enumerate_multichains(spec, max_total_length=3):
        key = [0] * len(ctx.x_elements)
        for e in chain:
            key[ctx.x_elements.index(e)] += 1
        key = tuple(key)
        w = chain_weight(chain, spec, ctx.yvars, ctx.table)
        table[key] = table.get(key, LaurentPoly.zero(ctx.table)) + w
    ts = expand_multichain(spec, 3)
    assert ts.coefficients == {k: v for k, v in table.items() if not v.is_zero()}


def test_dual_path_expansion():
    for spec, bound in [(SPEC12, 4), (PosetSpec((2,), (1,)), 4), (PosetSpec((1, 1), (1, 0)), 3)]:
        assert expand_multichain(spec, bound) == expand_rational(hls(spec), bound)


def test_dual_path_expansion_all_small_specs():
    # Every spec with at most 16 elements drawn from a small family.
    specs = [
        PosetSpec((0,), (1,)),
        PosetSpec((0,), (3,)),
        PosetSpec((1,), (1,)),
        PosetSpec((2,), (0,)),
        PosetSpec((3,), (0,)),
        PosetSpec((2,), (2,)),
        PosetSpec((0, 1), (1, 0)),
        PosetSpec((1, 1), (0, 0)),
        PosetSpec((0, 0), (1, 3)),
    ]
    for spec in specs:
        assert spec.element_count() <= 16
        for bound in (2, 4):
            assert expand_multichain(spec, bound) == expand_rational(hls(spec), bound)


def test_rational_expansion_degree_zero_is_one():
    for spec in (SPEC12, PosetSpec((1, 1), (1, 0))):
        ts = expand_rational(hls(spec), 0)
        key = (0,) * len(ts.x_vars)
        assert ts.coefficient(key).is_one()
        assert list(ts.coefficients) == [key]


# -- substitution ---------------------------------------------------------------


def test_identity_substitution():
    h = hls(SPEC12)
    sub = substitute(h)
    assert sub.numerator == h.numerator
    assert len(sub.denominator_factors) == 5
    for v, factor in zip(h.denominator_vars, sub.denominator_factors):
        assert factor == 1 - LaurentPoly.variable(h.table, v)


def test_substitution_rejects_vanishing_denominator():
    h = hls(SPEC12)
    first = make_context(SPEC12).x_elements[0]
    with pytest.raises(ZeroDenominatorError):
        substitute(h, x_map={first: 1})


def test_indicator_substitution_matches_direct_chain_sum():
    # Sending the positive-position variables to 1 must agree with the
    # indicator-weighted chain sum computed directly.
    spec = PosetSpec((2,), (0,))
    ctx = make_context(spec)
    h = hls(spec)
    sub = substitute(h, y_map={v: 1 for v in ctx.yvars[0][1:]})
    from hlskit.poset import enumerate_chains

    from hlskit.series import _numerator_sum

    def contributions():
        for chain in enumerate_chains(spec):
            full = (spec.bottom(),) + chain + (spec.top(),)
            ok = all(
                all(x <= y for x, y in zip(full[i][0], full[i + 1][0]))
                for i in range(len(full) - 1)
            )
            yield LaurentPoly.const(ctx.table, 1 if ok else 0), [
                ctx.x_ids[e] for e in chain
            ]

    expected, _ = _numerator_sum(ctx.table, h.denominator_vars, contributions())
    assert sub.numerator == expected


def test_monomial_substitution_counts_tableau_weights():
    # X_c -> prod of x_i over the multiset gives the cell-count generating
    # function; compare a truncated expansion against direct enumeration.
    spec = PosetSpec((1,), (1,))
    ctx = make_context(spec)
    h = hls(spec)
    names = list(ctx.table.names) + ["x0", "x1"]
    big = VarTable(names)
    x0 = LaurentPoly.variable(big, big.id("x0"))
    x1 = LaurentPoly.variable(big, big.id("x1"))

    def image(element):
        comp = element[0]
        return x0**comp[0] * (x1 if comp[1] else 1)

    x_map = {e: image(e) for e in ctx.x_elements}
    sub = substitute(h, x_map=x_map, table=big)
    bound = 3
    grading = [big.id("x0"), big.id("x1")]
    got = expand_geometric(sub.numerator, sub.denominator_factors, grading, bound)

    from hlskit.poset import enumerate_multichains

    expected = LaurentPoly.zero(big)
    for chain in enumerate_multichains(spec, max_total_length=bound):
        cells = sum(sum(e[0]) for e in chain)
        if cells > bound:
            continue
        w = chain_weight(chain, spec, ctx.yvars, ctx.table).subs({}, big)
        mono = LaurentPoly.const(big, 1)
        for e in chain:
            mono = mono * image(e)
        expected = expected + w * mono
    assert got == expected


# -- specializations ---------------------------------------------------------------


def test_classical_igusa_equals_series():
    for r in (0, 1, 2, 3):
        ci = classical_igusa(r)
        h = hls(PosetSpec((0,), (r,)))
        assert ci.numerator == h.numerator
        assert ci.denominator_vars == h.denominator_vars


def test_generalized_igusa_equals_series():
    for rv in ((2,), (1, 2), (2, 2)):
        gi = generalized_igusa(rv)
        h = hls(PosetSpec(tuple(0 for _ in rv), rv))
        assert gi.numerator == h.numerator
        assert gi.denominator_names == h.denominator_names


def test_mv_hls_univariate_specialization():
    # Tableau-route series, all leg variables sent to one Y, equals the
    # chain-route series under the same substitution.
    for n in (1, 2, 3):
        spec = PosetSpec((n,), (0,))
        ctx = make_context(spec)
        mv = mv_hls(n)
        h = hls(spec)
        assert mv.table == h.table
        if n == 1:
            assert mv.numerator == h.numerator
            continue
        ys = ctx.yvars[0][1:]
        collapse = {v: LaurentPoly.variable(ctx.table, ys[0]) for v in ys[1:]}
        assert mv.numerator.subs(collapse) == h.numerator.subs(collapse)


def test_weak_order_igusa_is_mv_hls_at_one():
    for g in (1, 2, 3):
        wo = weak_order_igusa(g)
        mv = mv_hls(g)
        y_ids = list(range(g + 1))
        assert wo.numerator == mv.numerator.eval_at_one(y_ids)
        assert wo.denominator_vars == mv.denominator_vars
        assert wo.denominator_names == mv.denominator_names


def test_weak_order_igusa_flag_count():
    # Flags of nonempty subsets of [2]: {}, {1}, {2}, {12}, {1<12}, {2<12}
    assert weak_order_igusa(2).chain_count == 6


def test_specialization_chain_counts():
    assert classical_igusa(2).chain_count == 4  # subsets of [2]
    assert mv_hls(2).chain_count == hls(PosetSpec((2,), (0,))).chain_count
