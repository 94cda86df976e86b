import itertools

import pytest

from cellprofile import agreement_check, parse, profile, truncate
from cellprofile.errors import CapacityError, ConsistencyError, InputError
from cellprofile.oracle import structures as st
from cellprofile.oracle.groups import (
    PermGroup,
    automorphisms,
    burnside_subset_orbits,
    canonical_subset_orbits,
    symmetric_group,
    trivial_group,
)

from conftest import brute_compositions
from fixtures import AGREEMENT_FIXTURES


def naive_orbits(group: PermGroup, n: int) -> int:
    """Distinct minimum images over every n-subset and every element."""
    seen = set()
    for s in itertools.combinations(range(group.degree), n):
        seen.add(min(tuple(sorted(g[x] for x in s)) for g in group.elements))
    return len(seen)


def test_automorphism_orders():
    assert automorphisms(st.kset(3)).order == 6
    assert automorphisms(st.edge()).order == 2
    assert automorphisms(st.path3()).order == 2


def test_automorphism_capacity():
    with pytest.raises(CapacityError):
        automorphisms(st.kset(11))


def test_burnside_examples():
    assert burnside_subset_orbits(trivial_group(4), 2) == 6
    assert burnside_subset_orbits(symmetric_group(4), 2) == 1
    assert burnside_subset_orbits(automorphisms(st.path3()), 1) == 2


@pytest.mark.parametrize(
    "group, n",
    [
        (trivial_group(4), 2),
        (symmetric_group(4), 2),
        (automorphisms(st.path3()), 1),
        (automorphisms(st.path3()), 2),
    ],
)
def test_method_equivalence_small(group, n):
    b = burnside_subset_orbits(group, n)
    assert canonical_subset_orbits(group, n) == b == naive_orbits(group, n)


def test_wreath_truncation_examples():
    g = truncate(parse("mset_inf(edge)"), 3).group
    assert g.order == 48
    assert burnside_subset_orbits(g, 3) == canonical_subset_orbits(g, 3) == 2
    g = truncate(parse("mset_inf(set)"), 4).group
    assert burnside_subset_orbits(g, 4) == canonical_subset_orbits(g, 4) == 5


def test_truncated_structures():
    t = truncate(parse("mset_inf(point)"), 5)
    assert t.universe == 5 and t.group.order == 120
    assert automorphisms(t.structure).order == 120
    t = truncate(parse("mset_inf(edge)"), 3)
    assert t.universe == 6
    edges = [r for r in t.structure.relations if r.name.endswith(":E")]
    assert len(edges) == 1 and len(edges[0].tuples) == 6  # 3 symmetric edges
    t = truncate(parse("seq_dlo(kset(2))"), 3)
    assert t.universe == 6
    assert automorphisms(t.structure).order == 8


@pytest.mark.parametrize(
    "expr, width",
    [
        ("mset_inf(edge)", 3),
        ("mset_inf(set)", 3),
        ("union(set,set)", 3),
        ("mset(2,edge)", 2),
        ("mset_inf(path3)", 2),
        ("union(path3,mset_inf(point))", 4),
    ],
)
def test_structural_group_matches_emitted_structure(expr, width):
    t = truncate(parse(expr), width)
    aut = automorphisms(t.structure)
    assert aut.order == t.group.order
    n = t.universe
    assert aut.orbit_counts(n) == t.group.orbit_counts(n)
    assert [naive_orbits(aut, i) for i in range(n + 1)] == aut.orbit_counts(n)


def test_ordered_blocks_count_dlo_orbits_not_chain_automorphisms():
    # a finite chain is rigid, so only block-internal symmetry survives; the
    # dense order makes all blocks alike, which the structural count reflects
    t = truncate(parse("seq_dlo(kset(2))"), 3)
    aut = automorphisms(t.structure)
    assert aut.order == 8
    assert aut.orbit_counts(1)[1] == 3
    assert t.group.orbit_counts(1)[1] == 1
    assert any(r.name.endswith(":lt") for r in t.structure.relations)


def test_universe_overflow():
    t = truncate(parse("mset_inf(path3)"), 5)
    with pytest.raises(CapacityError):
        t.structure
    assert t.group.orbit_counts(5)  # the structural group has no such bound


def test_canonical_budget():
    g = truncate(parse("mset_inf(set)"), 8).group
    with pytest.raises(CapacityError):
        canonical_subset_orbits(g, 8, budget=50)


def test_inexact_burnside_is_loud():
    bogus = PermGroup(3, [(0, 1, 2), (1, 0, 2)])
    bogus.order = 3  # lie about the order
    with pytest.raises(ConsistencyError):
        bogus.orbit_counts(2)


def test_perm_group_verify_catches_non_group():
    with pytest.raises(ConsistencyError):
        PermGroup(3, [(0, 1, 2), (1, 2, 0)], verify=True)


@pytest.mark.parametrize("expr", AGREEMENT_FIXTURES[:6])
def test_agreement_fixtures(expr):
    rep = agreement_check(parse(expr), 6, 6)
    assert rep.agree, rep.to_json()


def test_agreement_reference_cases(partitions):
    rep = agreement_check(parse("mset_inf(set)"), 8, 8)
    assert rep.agree and [r.canonical for r in rep.rows] == partitions[:9]
    rep = agreement_check(parse("union(set,set)"), 6, 6)
    assert rep.agree and [r.burnside for r in rep.rows] == [n + 1 for n in range(7)]
    rep = agreement_check(parse("mset(2,edge)"), 2, 4)
    assert rep.agree


@pytest.mark.parametrize("expr", ["mset_inf(edge)", "mset_inf(set)", "seq_dlo(kset(2))", "union(set,mset_inf(edge))"])
@pytest.mark.parametrize("n", [3, 5])
def test_stabilization(expr, n):
    tree = parse(expr)
    at_n = truncate(tree, n).group.orbit_counts(n)[n]
    at_n2 = truncate(tree, n + 2).group.orbit_counts(n)[n]
    assert at_n == at_n2 == profile(tree, n)[n]


def test_closed_forms():
    g = truncate(parse("seq_dlo(kset(2))"), 7).group
    assert g.orbit_counts(7) == [brute_compositions((1, 2), n) for n in range(8)]
    g = truncate(parse("union(set,set,set)"), 6).group
    assert g.orbit_counts(6) == [(n + 1) * (n + 2) // 2 for n in range(7)]


def test_agreement_precondition():
    with pytest.raises(InputError):
        agreement_check(parse("mset_inf(set)"), 4, 5)


def test_report_json_uses_decimal_strings():
    js = agreement_check(parse("mset_inf(set)"), 4, 4).to_json()
    assert js["agree"] is True and js["failing"] == []
    assert js["rows"][4]["calculus"] == "5"
