"""The algebra of subcube collections.

A collection of subcubes realises a network (each configuration moves to
its opposite in the intersection of the members containing it).  The
union-closure operator turns principal-trapspace collections into full
trapspace collections; the pointwise reduction goes back.  Recognisers
decide which collections arise from networks at all.
"""

from trapnets import (
    BooleanNetwork,
    classify_collection,
    enumerate_trapspaces,
    lambda_closure,
    minimal_trapspaces,
    mu_reduction,
    NetworkProfile,
    parse_collection,
    random_network,
    realize,
    trapping_closure,
)
from trapnets.netio import network_to_text

# Start from a hand-written collection in star notation.
collection = parse_collection("""
100
101
110
11*
**0
***
""")
print("collection members:", " ".join(str(c) for c in collection.sorted_members()))
flags = classify_collection(collection)
print(f"pre-principal={flags.pre_principal} pre-ideal={flags.pre_ideal} "
      f"min-ideal={flags.min_ideal} convex={flags.convex}")

# Realise it: the result is always a trapping network, and a pre-principal
# collection is recovered exactly as its principal trapspaces.
g = realize(collection)
print("\nrealised network:")
print(network_to_text(g))
profile = NetworkProfile(g)
assert profile.trapping
assert profile.pt_collection == collection

# Union closure and pointwise reduction invert each other between
# principal collections and trapspace collections.
trapspaces = lambda_closure(collection)
print("union closure:", " ".join(str(c) for c in trapspaces.sorted_members()))
assert trapspaces == enumerate_trapspaces(g)
assert mu_reduction(trapspaces) == collection

# The same story for a random network: its principal trapspaces are
# pre-principal, their union closure is its trapspace collection, and
# realising either gives back the trapping closure.
f = random_network(4, seed=16)
p = NetworkProfile(f)
assert realize(p.pt_collection) == trapping_closure(f)
assert realize(p.trapspace_collection) == trapping_closure(f)
assert lambda_closure(p.pt_collection) == p.trapspace_collection
print("\nrandom n=4 network round-trips hold;",
      f"{len(p.pt_collection)} principal and {len(p.trapspace_collection)} total trapspaces")

# Minimal trapspaces are pairwise disjoint, and disjoint collections are in
# bijection with the networks fixed by the min-trapping extension.
minimal, _ = minimal_trapspaces(f)
print("minimal trapspaces:", " ".join(str(c) for c in minimal.sorted_members()))
assert classify_collection(minimal).min_ideal
assert NetworkProfile(realize(minimal)).minimal[0] == minimal
print("min-ideal bijection holds")
