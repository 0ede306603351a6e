import itertools
import random

import pytest

from hlskit.poset import (
    CapExceededError,
    PosetSpec,
    complement,
    cover_relations,
    delta,
    elements_json,
    enumerate_chains,
    enumerate_component_elements,
    enumerate_elements,
    enumerate_multichains,
    hasse_dot,
    interval_elements,
    iso_n1_to_np1,
    is_strict_chain,
    leq_component,
    leq_t,
    lt_t,
    multiplicity_vector,
    parse_chain,
    parse_component,
    parse_element,
    render_component,
    render_element,
    s_vector,
    support,
)

from conftest import SEED

P22 = PosetSpec((2,), (2,))
P11 = PosetSpec((1,), (1,))
G2 = PosetSpec((1, 1), (1, 0))


def two_column_semistandard(a, b):
    """Independent order oracle: b as the left column, a as the right one.

    The pair is ordered iff the two-column filling (zeros first, positives
    increasing down each column) has weakly increasing rows.
    """

    def multiset(c):
        return [0] * c[0] + [i for i in range(1, len(c)) if c[i]]

    right = multiset(a)
    left = multiset(b)
    if len(right) > len(left):
        return False
    return all(left[i] <= right[i] for i in range(len(right)))


def test_spec_validation():
    with pytest.raises(ValueError):
        PosetSpec((1,), (1, 2))
    with pytest.raises(ValueError):
        PosetSpec((), ())
    with pytest.raises(ValueError):
        PosetSpec((-1,), (0,))


def test_element_counts():
    assert len(enumerate_elements(P22)) == 12  # the twelve elements
    assert len(enumerate_elements(PosetSpec((0,), (0,)))) == 1
    assert len(enumerate_elements(G2)) == 8  # (1+1)*2 * (0+1)*2


def test_reverse_lex_component_order():
    got = [render_component(a) for a in enumerate_component_elements(2, 2)]
    assert got == ["-", "0", "0^2", "1", "0 1", "0^2 1", "2", "0 2", "0^2 2", "1 2", "0 1 2", "0^2 1 2"]


def test_element_cap():
    with pytest.raises(CapExceededError):
        enumerate_elements(PosetSpec((3, 3), (3, 3)), max_elements=100)


def test_known_incomparable_pairs():
    a = ((1, 0, 0),)
    b = ((0, 1, 1),)
    assert not leq_t(a, b) and not leq_t(b, a)
    c = ((2, 0, 0),)
    d = ((1, 1, 1),)
    assert not leq_t(c, d) and not leq_t(d, c)


def test_leq_reflexive():
    for e in enumerate_elements(P22):
        assert leq_t(e, e)


def test_worked_seven_chain_is_strict():
    spec = PosetSpec((5,), (2,))
    chain = parse_chain("2 < 2 5 < 0 3 < 0 1 < 0^2 < 0^2 5 < 0^2 2 3", spec)
    assert len(chain) == 7
    assert is_strict_chain(chain)


def test_partial_order_axioms_exhaustive():
    for spec in (P22, G2):
        els = enumerate_elements(spec)
        for a in els:
            assert leq_t(a, a)
            for b in els:
                if leq_t(a, b) and leq_t(b, a):
                    assert a == b
                for c in els:
                    if leq_t(a, b) and leq_t(b, c):
                        assert leq_t(a, c)


def test_bounds_bottom_top():
    for spec in (P22, G2, PosetSpec((0,), (3,))):
        bottom = spec.bottom()
        top = spec.top()
        for e in enumerate_elements(spec):
            assert leq_t(bottom, e)
            assert leq_t(e, top)


def test_leq_matches_two_column_oracle():
    spec = PosetSpec((3,), (2,))
    els = [e[0] for e in enumerate_elements(spec)]
    assert len(els) == 24
    for a in els:
        for b in els:
            assert leq_component(a, b) == two_column_semistandard(a, b)


def test_s_vector():
    assert s_vector((3,))[0] == 3  # C(3, 2)
    assert s_vector((0, 0, 0)) == (0, 0, 0, 0)
    a = parse_component("2 4 7", 7, 3)
    s = s_vector(a)
    assert s[2] == 0 and s[7] == 2 and s[8] == 3


def test_delta_examples():
    a = parse_component("2 4 7", 7, 3)
    b = parse_component("1 4 5 6", 7, 3)
    assert delta(a, b, 2) == 1
    assert delta(a, b, 7) == 2
    assert all(delta(a, a, i) == 0 for i in range(9))
    bottom = (0,) * 8
    top = (3,) + (1,) * 7
    assert delta(bottom, top, 0) == 3  # C(3, 2)
    for j in range(1, 9):
        assert delta(bottom, top, j) == 3 + j - 1
    with pytest.raises(ValueError):
        delta(a, b, 9)


def test_cover_relations_of_p22():
    covers = cover_relations(P22)
    assert len(covers) == 13
    names = {(render_element(a), render_element(b)) for a, b in covers}
    expected = {
        ("-", "2"), ("2", "1"), ("1", "0"), ("1", "1 2"), ("0", "0 2"),
        ("1 2", "0 2"), ("0 2", "0 1"), ("0 1", "0^2"), ("0 1", "0 1 2"),
        ("0^2", "0^2 2"), ("0 1 2", "0^2 2"), ("0^2 2", "0^2 1"),
        ("0^2 1", "0^2 1 2"),
    }
    assert names == expected


def test_cover_relations_path_for_chain_poset():
    covers = cover_relations(PosetSpec((0,), (4,)))
    assert len(covers) == 4
    assert all(b[0][0] == a[0][0] + 1 for a, b in covers)


def test_cover_relations_p11_is_a_path():
    covers = {(render_element(a), render_element(b)) for a, b in cover_relations(P11)}
    assert covers == {("-", "1"), ("1", "0"), ("0", "0 1")}


def test_transitive_closure_of_covers_matches_leq():
    for spec in (P22, G2, P11):
        els = enumerate_elements(spec)
        idx = {e: i for i, e in enumerate(els)}
        m = len(els)
        reach = [[False] * m for _ in range(m)]
        for i in range(m):
            reach[i][i] = True
        for a, b in cover_relations(spec):
            reach[idx[a]][idx[b]] = True
        for k in range(m):
            for i in range(m):
                if reach[i][k]:
                    for j in range(m):
                        if reach[k][j]:
                            reach[i][j] = True
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                assert reach[i][j] == leq_t(a, b)


def test_complement_involution_and_order_reversal():
    els = enumerate_elements(P22)
    assert complement(P22, P22.bottom()) == P22.top()
    for a in els:
        assert complement(P22, complement(P22, a)) == a
        for b in els:
            assert leq_t(a, b) == leq_t(complement(P22, b), complement(P22, a))


def test_complement_order_reversal_g2():
    els = enumerate_elements(G2)
    for a in els:
        for b in els:
            assert leq_t(a, b) == leq_t(complement(G2, b), complement(G2, a))


def test_chain_enumeration_counts_by_brute_force():
    # Chains = subsets that are pairwise comparable.
    for spec, interval in [(P11, "half_open"), (PosetSpec((2,), (1,)), "half_open"), (P22, "open")]:
        els = interval_elements(spec, interval)
        expected = 0
        for size in range(len(els) + 1):
            for combo in itertools.combinations(els, size):
                if all(
                    leq_t(x, y) or leq_t(y, x)
                    for x, y in itertools.combinations(combo, 2)
                ):
                    expected += 1
        assert sum(1 for _ in enumerate_chains(spec, interval)) == expected


def test_degenerate_interval_has_only_the_empty_chain():
    spec = PosetSpec((0,), (0,))
    assert interval_elements(spec, "half_open") == []
    assert list(enumerate_chains(spec, "half_open")) == [()]
    assert list(enumerate_chains(spec, "open")) == [()]


def test_open_interval_of_two_chain_is_empty():
    spec = PosetSpec((0,), (1,))
    assert list(enumerate_chains(spec, "open")) == [()]


def test_chain_enumeration_deterministic():
    a = list(enumerate_chains(P22))
    b = list(enumerate_chains(P22))
    assert a == b
    lengths = [len(c) for c in a]
    assert lengths == sorted(lengths)


def test_chain_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_chains(P22, max_chains=10))


def test_multichains_bound_zero():
    assert list(enumerate_multichains(P22, max_total_length=0)) == [()]


def test_strict_chains_appear_among_multichains():
    strict = {c for c in enumerate_chains(P11) if len(c) <= 3}
    multi = set(enumerate_multichains(P11, max_total_length=3))
    assert strict <= multi


def test_single_support_multichain_is_unique_per_length():
    bound = 4
    for e in interval_elements(P11, "half_open"):
        for k in range(1, bound + 1):
            found = [
                c
                for c in enumerate_multichains(P11, max_total_length=bound)
                if len(c) == k and support(c) == (e,)
            ]
            assert len(found) == 1
            assert multiplicity_vector(found[0]) == {e: k}


def test_iso_n1_to_np1():
    assert iso_n1_to_np1((0, 0, 0), 1) == (0, 0, 0, 0)
    assert iso_n1_to_np1((1, 0, 0), 1) == (0, 1, 0, 0)
    assert iso_n1_to_np1((1, 0, 1), 1) == (0, 1, 0, 1)
    with pytest.raises(ValueError):
        iso_n1_to_np1((2, 0), 2)


def test_iso_is_order_isomorphism():
    for n in range(4):
        src = enumerate_component_elements(n, 1)
        images = [iso_n1_to_np1(a, 1) for a in src]
        assert sorted(images) == sorted(set(images))
        tgt = set(enumerate_component_elements(n + 1, 0))
        assert set(images) <= tgt and len(images) == len(tgt)
        for a in src:
            for b in src:
                assert leq_component(a, b) == leq_component(
                    iso_n1_to_np1(a, 1), iso_n1_to_np1(b, 1)
                )


def test_render_parse_roundtrip():
    rng = random.Random(SEED)
    for spec in (P22, G2, PosetSpec((5,), (2,))):
        els = enumerate_elements(spec)
        for e in rng.sample(els, min(10, len(els))):
            assert parse_element(render_element(e), spec) == e


def test_parse_rejects_bad_literals():
    with pytest.raises(ValueError):
        parse_component("0^3", 2, 2)
    with pytest.raises(ValueError):
        parse_component("3", 2, 2)
    with pytest.raises(ValueError):
        parse_component("1 1", 2, 2)
    with pytest.raises(ValueError):
        parse_chain("0 1 < 1", P22)


def test_hasse_dot_stable_and_shaped():
    dot = hasse_dot(P22)
    assert dot == hasse_dot(P22)
    assert dot.count("->") == 13
    assert dot.count(";") == 12 + 13 + 1  # nodes + edges + rankdir
    assert '"0^2 1 2"' in dot


def test_elements_json():
    data = elements_json(P11)
    assert data == [[[0, 0]], [[1, 0]], [[0, 1]], [[1, 1]]]
