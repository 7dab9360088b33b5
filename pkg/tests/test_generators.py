import itertools

import pytest

from trapnets import (
    Arrangement,
    BooleanNetwork,
    FreeDimBehavior,
    Subcube,
    ValidationFailed,
    arrangement_network,
    build_graph,
    classify_network,
    constant_on_arrangements,
    graph_property,
    is_commutative,
    negation_on_subcubes,
    random_commutative,
    random_network,
    transient_and_period,
    union_disjoint,
)
from trapnets.dynamics import arc_union
from trapnets.generators import (
    long_transient_trapping,
    random_constant_on_arrangements,
    random_negation_on_subcubes,
)

from helpers import cfg, cube, net_from_rows


# --- random networks


def test_random_network_deterministic():
    assert random_network(2, 123) == random_network(2, 123)
    assert random_network(2, 123) != random_network(2, 124)


def test_random_network_covers_all_one_bit_networks():
    seen = {random_network(1, s).image for s in range(80)}
    assert seen == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_random_network_shape():
    f = random_network(3, 9)
    assert f.n == 3 and len(f.image) == 8


# --- arrangements


def crossed_faces() -> Arrangement:
    # two faces of the 3-cube crossing in an edge
    return Arrangement((cube("**0"), cube("1**")))


def test_arrangement_core_and_content():
    arr = crossed_faces()
    assert arr.core() == cube("1*0")
    assert arr.content_bitset().bit_count() == 6
    assert arr.free_dimensions() == 0b010  # only the second coordinate


def test_arrangement_requires_common_point():
    with pytest.raises(ValueError):
        Arrangement((cube("0*"), cube("1*")))


def test_single_subcube_negate_is_local_negation():
    arr = Arrangement((cube("**0"),))
    net = arrangement_network(
        arr, {1: FreeDimBehavior.NEGATE, 2: FreeDimBehavior.NEGATE}
    )
    assert net == negation_on_subcubes([cube("**0")])


def test_crossed_faces_has_three_arrangement_networks():
    # const0 / negate / const1 on the single free dimension
    arr = crossed_faces()
    const0 = arrangement_network(arr, {2: FreeDimBehavior.CONST0})
    neg = arrangement_network(arr, {2: FreeDimBehavior.NEGATE})
    const1 = arrangement_network(arr, {2: FreeDimBehavior.CONST1})
    assert const0 == net_from_rows({
        "000": "100", "010": "100", "100": "100", "110": "100",
        "101": "100", "111": "100", "001": "001", "011": "011",
    })
    assert neg == net_from_rows({
        "000": "110", "010": "100", "100": "110", "110": "100",
        "101": "110", "111": "100", "001": "001", "011": "011",
    })
    assert const1 == net_from_rows({
        "000": "110", "010": "110", "100": "110", "110": "110",
        "101": "110", "111": "110", "001": "001", "011": "011",
    })
    assert all(is_commutative(f) for f in (const0, neg, const1))


def test_full_cube_negate_is_negation():
    arr = Arrangement((Subcube.full_cube(1),))
    assert arrangement_network(arr, {1: FreeDimBehavior.NEGATE}) == BooleanNetwork.negation(1)


def test_behavior_coverage_is_checked():
    arr = crossed_faces()
    with pytest.raises(ValueError, match="free dimensions"):
        arrangement_network(arr, {})
    with pytest.raises(ValueError, match="free dimensions"):
        arrangement_network(arr, {1: FreeDimBehavior.NEGATE, 2: FreeDimBehavior.NEGATE})


def test_negating_a_core_fixed_dimension_fails_validation():
    # content of {edge, point} is closed under flipping the first coordinate
    # but the core pins it, so only the matching constant is valid
    arr = Arrangement((cube("*00"), cube("000")))
    assert arr.free_dimensions() == 0b001
    assert arr.core() == cube("000")
    with pytest.raises(ValidationFailed):
        arrangement_network(arr, {1: FreeDimBehavior.NEGATE})
    ok = arrangement_network(arr, {1: FreeDimBehavior.CONST0})
    assert ok(cfg("100")) == cfg("000")


# --- negation on subcubes


def test_negation_on_full_cube():
    assert negation_on_subcubes([Subcube.full_cube(3)]) == BooleanNetwork.negation(3)


def test_negation_on_no_cubes_is_identity():
    assert negation_on_subcubes([], n=3) == BooleanNetwork.identity(3)


def test_negation_on_face_and_edge_is_symmetric():
    # the two-part example: a 4-cycle on a face plus a flipped edge
    net = negation_on_subcubes([cube("**0"), cube("*11")])
    assert graph_property(build_graph(net, "asynchronous"), "symmetric")
    report = classify_network(net)
    assert report.marseille


def test_negation_rejects_overlap():
    with pytest.raises(ValueError, match="overlap"):
        negation_on_subcubes([cube("**0"), cube("1*0")])


# --- constant on arrangements


def test_constant_on_full_cube():
    net = constant_on_arrangements([(Arrangement((Subcube.full_cube(2),)), cfg("10"))])
    assert all(v == cfg("10").bits for v in net.image)


def test_constant_on_nothing_is_identity():
    assert constant_on_arrangements([], n=2) == BooleanNetwork.identity(2)


def test_constant_pair_example_is_lille():
    # all arcs into 010 on one side and into 101 on the other
    left = Arrangement((cube("0*0"), cube("*10"), cube("01*")))
    right = Arrangement((cube("1*1"), cube("*01"), cube("10*")))
    net = constant_on_arrangements([(left, cfg("010")), (right, cfg("101"))])
    report = classify_network(net)
    assert report.lille and report.idempotent
    assert graph_property(build_graph(net, "asynchronous"), "oriented")


def test_constant_target_must_lie_in_core():
    arr = Arrangement((cube("**0"),))
    with pytest.raises(ValueError, match="core"):
        constant_on_arrangements([(arr, cfg("001"))])


def test_constant_rejects_content_overlap():
    a = Arrangement((cube("**0"),))
    b = Arrangement((cube("1**"),))
    with pytest.raises(ValueError, match="overlap"):
        constant_on_arrangements([(a, cfg("000")), (b, cfg("100"))])


# --- unions


def test_union_of_negation_parts_is_marseille():
    parts = [
        negation_on_subcubes([cube("0*0")], n=3),
        negation_on_subcubes([cube("1*1")], n=3),
    ]
    net = union_disjoint(parts)
    assert classify_network(net).marseille


def test_union_of_single_part_is_that_part():
    part = negation_on_subcubes([cube("**0")])
    assert union_disjoint([part]) == part


def test_union_asynchronous_graph_is_arc_union():
    parts = [
        negation_on_subcubes([cube("0*0")], n=3),
        constant_on_arrangements([(Arrangement((cube("1*1"),)), cfg("101"))]),
    ]
    net = union_disjoint(parts)
    assert is_commutative(net)
    expected = arc_union(
        build_graph(parts[0], "asynchronous"), build_graph(parts[1], "asynchronous")
    )
    assert build_graph(net, "asynchronous") == expected


def test_union_rejects_overlapping_supports():
    a = negation_on_subcubes([cube("**0")])
    with pytest.raises(ValueError, match="overlap"):
        union_disjoint([a, a])


# --- long transient construction


def test_long_transient_chain_values():
    f = long_transient_trapping(4)
    chain = ["0101", "1010", "1101", "1110", "1111"]
    for a, b in zip(chain, chain[1:]):
        assert f(cfg(a)) == cfg(b)
    assert f(cfg("1111")) == cfg("1111")
    assert f(cfg("0000")) == cfg("0001")
    assert f(cfg("0001")) == cfg("0000")


def test_long_transient_measurements():
    for n in range(3, 7):
        f = long_transient_trapping(n)
        assert transient_and_period(f) == (n, 2)


def test_long_transient_is_trapping():
    for n in range(3, 9):
        assert classify_network(long_transient_trapping(n)).trapping


def test_long_transient_requires_three_coordinates():
    with pytest.raises(ValueError):
        long_transient_trapping(2)


# --- random structured generators


def test_random_commutative_always_commutative():
    for seed in range(30):
        f = random_commutative(3, seed, parts=2)
        assert is_commutative(f)
    for seed in range(10):
        assert is_commutative(random_commutative(4, seed, parts=3))


def test_random_commutative_deterministic():
    assert random_commutative(3, 5, parts=2) == random_commutative(3, 5, parts=2)


def test_random_negation_and_constant_generators():
    for seed in range(12):
        neg = random_negation_on_subcubes(3, seed)
        report = classify_network(neg)
        assert report.marseille
        assert graph_property(build_graph(neg, "asynchronous"), "symmetric")
        con = random_constant_on_arrangements(3, seed)
        report = classify_network(con)
        assert report.lille
        assert graph_property(build_graph(con, "asynchronous"), "oriented")


def test_random_commutative_outputs_lie_in_commutative_census():
    census = set()
    for code in range(256):
        table = (code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3)
        f = BooleanNetwork(2, table)
        if is_commutative(f):
            census.add(table)
    for seed in range(60):
        assert random_commutative(2, seed, parts=2).image in census


# --- exhaustive converse at n = 2


def enumerate_arrangement_parts(n=2):
    """Every arrangement network over every arrangement of B^2 subcubes."""
    cubes = [Subcube.from_string("".join(p)) for p in itertools.product("01*", repeat=n)]
    parts = {}
    for r in range(1, len(cubes) + 1):
        for family in itertools.combinations(cubes, r):
            first = family[0]
            meet = first
            for c in family[1:]:
                meet = meet.intersection(c) if meet is not None else None
                if meet is None:
                    break
            if meet is None:
                continue
            arr = Arrangement(tuple(family))
            free = arr.free_dimensions()
            dims = [i + 1 for i in range(n) if free >> i & 1]
            options = [
                (FreeDimBehavior.CONST0, FreeDimBehavior.CONST1, FreeDimBehavior.NEGATE)
            ] * len(dims)
            for combo in itertools.product(*options):
                try:
                    net = arrangement_network(arr, dict(zip(dims, combo)))
                except ValidationFailed:
                    continue
                parts.setdefault(net.image, arr.content_bitset())
    return parts


def test_every_commutative_two_bit_network_is_a_union_of_arrangement_networks():
    parts = enumerate_arrangement_parts()
    identity = BooleanNetwork.identity(2).image

    reachable = {identity}
    frontier = [(identity, 0)]
    part_list = [(img, content) for img, content in parts.items()]
    seen = {(identity, 0)}
    while frontier:
        image, used = frontier.pop()
        for img, content in part_list:
            if content & used:
                continue
            merged = tuple(img[x] if content >> x & 1 else image[x] for x in range(4))
            key = (merged, used | content)
            if key not in seen:
                seen.add(key)
                reachable.add(merged)
                frontier.append(key)

    census = set()
    for code in range(256):
        table = (code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3)
        if is_commutative(BooleanNetwork(2, table)):
            census.add(table)
    assert reachable == census
