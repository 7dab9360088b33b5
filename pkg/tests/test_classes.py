import pytest

from trapnets import (
    BooleanNetwork,
    DIAGRAMS,
    NetworkProfile,
    check_alternate_definitions,
    classify_network,
    is_commutative,
    load_fixture,
    min_trapspace_equivalent,
    min_trapping_extension,
    random_network,
    trapping_closure,
    trapspace_equivalent,
    verify_diagram,
)
from trapnets.classes import DiagramSpec, Counterexample
from trapnets.generators import long_transient_trapping, random_commutative

from helpers import f_ex3, net_from_arcs


# --- classify_network


def test_negation_is_marseille():
    report = classify_network(BooleanNetwork.negation(3))
    assert report.marseille and report.trapping and report.globally_involutive
    assert report.commutative and report.bijective and report.involutive
    assert not report.lille and not report.fixable


def test_identity_is_lille():
    report = classify_network(BooleanNetwork.identity(3))
    assert report.lille and report.globally_idempotent and report.fixable
    assert report.trapspace_fp and report.interval_fp and report.interval_ufp
    assert report.min_trapping and report.dpt


def test_worked_example_is_not_trapping():
    report = classify_network(f_ex3())
    assert not report.trapping and not report.commutative
    assert report.fixable and report.trapspace_fp


def test_long_transient_is_trapping_not_commutative():
    report = classify_network(long_transient_trapping(4))
    assert report.trapping and not report.commutative


def test_globally_idempotent_flag_matches_class():
    for seed in range(20):
        report = classify_network(random_network(3, seed))
        assert report.globally_idempotent == report.globally_idempotent_flag


def test_globally_sweep_dimension_cap():
    with pytest.raises(ValueError):
        classify_network(BooleanNetwork.identity(17))


# --- alternate definitions


def test_negation_trapping7_all_true():
    assert check_alternate_definitions(BooleanNetwork.negation(3), "trapping7") == (True,) * 7


def test_worked_example_trapping7_all_false():
    assert check_alternate_definitions(f_ex3(), "trapping7") == (False,) * 7


def test_identity_lille4_all_true():
    assert check_alternate_definitions(BooleanNetwork.identity(3), "lille4") == (True,) * 4


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError):
        check_alternate_definitions(f_ex3(), "trapping8")


def test_sweep_dimension_cap():
    with pytest.raises(ValueError):
        check_alternate_definitions(BooleanNetwork.identity(9), "trapping7")


@pytest.mark.parametrize(
    "theorem",
    ["trapping7", "commutative3", "marseille4", "lille4", "globally_idempotent3", "sink_terminal5"],
)
def test_vectors_constant_on_samples(theorem):
    for seed in range(40):
        f = random_network(3, seed)
        vector = check_alternate_definitions(f, theorem)
        assert len(set(vector)) == 1, (f.image, theorem, vector)
    for seed in range(10):
        f = random_commutative(3, seed)
        vector = check_alternate_definitions(f, theorem)
        assert len(set(vector)) == 1, (f.image, theorem, vector)


# --- equivalence vectors


def test_network_equivalent_to_its_closure():
    f = f_ex3()
    assert trapspace_equivalent(f, trapping_closure(f)) == (True,) * 5


def test_identity_negation_not_equivalent():
    assert trapspace_equivalent(BooleanNetwork.identity(2), BooleanNetwork.negation(2)) \
        == (False,) * 5
    assert min_trapspace_equivalent(BooleanNetwork.identity(2), BooleanNetwork.negation(2)) \
        == (False,) * 4


def test_network_equivalent_to_itself():
    f = f_ex3()
    assert trapspace_equivalent(f, f) == (True,) * 5


def test_min_pair_is_min_equivalent_only():
    a = net_from_arcs(2, ["00>10", "10>11"])
    b = net_from_arcs(2, ["00<>10", "10>11"])
    assert min_trapspace_equivalent(a, b) == (True,) * 4
    assert trapspace_equivalent(a, b) == (False,) * 5


def test_network_min_equivalent_to_extension():
    f = f_ex3()
    assert min_trapspace_equivalent(f, min_trapping_extension(f)) == (True,) * 4


def test_equivalence_requires_same_dimension():
    with pytest.raises(ValueError):
        trapspace_equivalent(BooleanNetwork.identity(2), BooleanNetwork.identity(3))


# --- diagrams


def test_all_fixtures_load_and_refute():
    for diagram in DIAGRAMS.values():
        for ce in diagram.counterexamples:
            net = load_fixture(diagram.id, ce.label)
            p = NetworkProfile(net)
            assert p.prop(ce.guard), (diagram.id, ce.label)
            assert p.prop(ce.source), (diagram.id, ce.label)
            assert not p.prop(ce.target), (diagram.id, ce.label)


def test_verify_diagram_counts_nothing_on_conforming_population():
    population = [random_network(3, seed) for seed in range(25)]
    population += [random_commutative(3, seed) for seed in range(10)]
    for diagram in DIAGRAMS.values():
        assert verify_diagram(diagram, population) == []


def test_verify_diagram_reports_implication_violation():
    # a doctored diagram with a false implication must flag the witness
    from trapnets.classes import DiagramEdge

    bogus = DiagramSpec(
        "symmetric",
        ("bijective", "involutive"),
        (DiagramEdge("bijective", "involutive", "all"),),
        tuple(),
    )
    four_cycle = net_from_arcs(2, ["00>10", "10>11", "11>01", "01>00"])
    violations = verify_diagram(bogus, [four_cycle], check_counterexamples=False)
    assert len(violations) == 1
    assert violations[0].kind == "implication"


def test_missing_fixture_raises():
    bogus = DiagramSpec(
        "symmetric",
        ("bijective",),
        tuple(),
        (Counterexample("zz", "bijective", "all", "involutive"),),
    )
    with pytest.raises(FileNotFoundError, match="missing fixture"):
        verify_diagram(bogus, [])


def test_fixture_headers_name_the_implication():
    import importlib.resources

    root = importlib.resources.files("trapnets") / "fixtures"
    for diagram in DIAGRAMS.values():
        for ce in diagram.counterexamples:
            text = (root / diagram.id / f"{ce.label}.tt").read_text()
            first = text.splitlines()[0]
            assert first.startswith("#") and ce.source in first and ce.target in first


# --- commutativity helper


def test_is_commutative_matches_update_composition():
    from trapnets import UpdateWord, compose_word

    for seed in range(15):
        f = random_network(3, seed)
        direct = all(
            compose_word(f, UpdateWord.from_coord_sets(3, [[i], [j]]))
            == compose_word(f, UpdateWord.from_coord_sets(3, [[j], [i]]))
            for i in range(1, 4)
            for j in range(1, 4)
        )
        assert is_commutative(f) == direct
