import pytest

from multilattice.reports import all_passed
from multilattice.suites import (
    SUITES,
    closure_suite,
    complements_by_patterns,
    distributivity_by_patterns,
    ideal_examples,
    lattice_suite,
    poset_suite,
    run_suite,
)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_structural_suites_pass(k):
    for reports in (poset_suite(k), closure_suite(k), lattice_suite(k)):
        assert all_passed(reports), [r.to_dict() for r in reports if not r.passed]


def test_poset_suite_counts_k3():
    by = {r.law: r for r in poset_suite(3)}
    assert by["transitive"].pairs_tested == 169
    assert by["minimal_count_factorial"].witnesses == []
    # 18 covering arrows, each one effective f_j application
    assert by["level_shift"].defined_pairs == 18


def test_lattice_suite_k3_sizes():
    by = {r.law: r for r in lattice_suite(3)}
    # 6 sectors, 4 operator vectors each
    assert by["distributive_meet_over_join"].pairs_tested == 6 * 4 ** 3
    assert by["complement_involution"].pairs_tested == 24


def test_pattern_based_checks_agree_with_tables_k4():
    tab = {r.law: r for r in lattice_suite(4)}
    pat = {r.law: r for r in distributivity_by_patterns(4) + complements_by_patterns(4)}
    for law in ("complement_join_is_top", "complement_meet_is_sector_minimal", "complement_involution"):
        assert pat[law].pairs_tested == tab[law].pairs_tested
        assert pat[law].violations == tab[law].violations == 0
    assert pat["distributive_meet_over_join"].violations == 0


def test_ideal_examples_report():
    by = {r["name"]: r for r in ideal_examples()}
    for name in ("whole_poset_k3", "three_element_example"):
        assert by[name]["joinClosed"] and by[name]["downDirected"]
    big = by["five_element_example"]
    assert not big["joinClosed"] and not big["downDirected"]
    pairs = {frozenset(w["pair"]): w["commonUpperBounds"] for w in big["unboundedWitnesses"]}
    assert pairs[frozenset({"3*1.2", "2.3*1"})] == ["1.2.3"]


def test_run_suite_dispatch():
    assert set(SUITES) == {"poset", "lattice", "monoid", "drl", "band", "props3", "all"}
    for name in ("poset", "lattice", "monoid", "drl", "band"):
        assert all_passed(run_suite(name, 3))
    with pytest.raises(ValueError):
        run_suite("nope", 3)


def test_band_suite_has_informational_order_entry():
    reports = run_suite("band", 3)
    assert any(r.law == "induced_order_matches_leq" and r.informational for r in reports)
