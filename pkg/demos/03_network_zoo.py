"""A zoo of structured networks and where they sit in the taxonomy.

Negations on subcubes give the bijective commutative (Marseille)
networks; constants on arrangements give the idempotent commutative
(Lille) networks; their unions cover all commutative networks; and one
hand-made chain shows trapping networks can take n steps to settle.
"""

from trapnets import (
    Arrangement,
    Configuration,
    FreeDimBehavior,
    Subcube,
    arrangement_network,
    check_alternate_definitions,
    classify_network,
    constant_on_arrangements,
    negation_on_subcubes,
    random_commutative,
    transient_and_period,
    union_disjoint,
)


def show(name, f):
    r = classify_network(f)
    t, p = transient_and_period(f)
    tags = [k for k in ("trapping", "commutative", "marseille", "lille",
                        "globally_idempotent", "fixable") if getattr(r, k)]
    print(f"{name:26s} transient={t} period={p}  {' '.join(tags) or '(none)'}")


# Flip both free coordinates of a face, and one coordinate of an edge.
marseille = negation_on_subcubes([Subcube.from_string("**0"),
                                  Subcube.from_string("*11")])
show("negation on subcubes", marseille)

# Funnel two arrangements into fixed targets.
lille = constant_on_arrangements([
    (Arrangement((Subcube.from_string("0*0"), Subcube.from_string("01*"))),
     Configuration.from_string("010")),
    (Arrangement((Subcube.from_string("1*1"),)), Configuration.from_string("101")),
])
show("constant on arrangements", lille)

# An arrangement of two crossing faces leaves one free dimension; each of
# the three behaviours on it gives a different commutative network.
crossed = Arrangement((Subcube.from_string("**0"), Subcube.from_string("1**")))
for mode in FreeDimBehavior:
    show(f"crossed faces, {mode.value}", arrangement_network(crossed, {2: mode}))

# Support-disjoint unions stay commutative (a flipped edge on one face, a
# funnel on the opposite one).
mixed = union_disjoint([
    negation_on_subcubes([Subcube.from_string("0*0")], n=3),
    constant_on_arrangements([(Arrangement((Subcube.from_string("1*1"),)),
                               Configuration.from_string("111"))]),
])
show("union of mixed parts", mixed)

# Random commutative networks are unions of random arrangement networks.
for seed in (0, 1, 2):
    show(f"random commutative #{seed}", random_commutative(4, seed, parts=3))

# The long-transient chain: trapping, yet it needs n steps to stabilise.
from trapnets.generators import long_transient_trapping

chain = long_transient_trapping(6)
show("long-transient chain n=6", chain)

# Every class has several equivalent definitions; the checker evaluates
# them independently, and the vector must be constant.
print("\nalternate-definition vectors for the Marseille example:")
for theorem in ("trapping7", "commutative3", "marseille4", "lille4"):
    print(f"  {theorem:22s} {check_alternate_definitions(marseille, theorem)}")
