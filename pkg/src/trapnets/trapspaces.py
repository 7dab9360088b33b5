"""Principal, minimal and full trapspace computation; trapping closure and graph.

A trapspace is a subcube mapped into itself by the network.  The principal
trapspace of a configuration is the least trapspace containing it, computed
by growing the spanned subcube with the images of a frontier of
newly-added members, so each member is evaluated exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import BooleanNetwork, Configuration, Subcube, _check_same_dimension
from .cubesets import SubcubeCollection
from .dynamics import HypercubeGraph

ENUMERATION_MAX_N = 13


def _nonzero_submasks(mask: int) -> list[int]:
    subs = [0]
    m = mask
    while m:
        bit = m & -m
        subs += [s | bit for s in subs]
        m ^= bit
    return subs[1:]


def principal_pair(f: BooleanNetwork, x_bits: int) -> tuple[int, int]:
    """(free, base) of the principal trapspace of a raw configuration."""
    tab = f.np_image
    free = 0
    members = np.array([x_bits], dtype=np.int64)
    frontier = members
    while True:
        deltas = frontier ^ tab[frontier]
        grow = int(np.bitwise_or.reduce(deltas)) & ~free
        if not grow:
            return free, x_bits & ~free
        combos = np.array(_nonzero_submasks(grow), dtype=np.int64)
        frontier = (members[:, None] ^ combos[None, :]).ravel()
        members = np.concatenate([members, frontier])
        free |= grow


def principal_trapspace(f: BooleanNetwork, x: Configuration) -> Subcube:
    """Least trapspace of f containing x."""
    _check_same_dimension(f, x)
    free, base = principal_pair(f, x.bits)
    return Subcube(f.n, free, base)


def is_trapspace(f: BooleanNetwork, cube: Subcube) -> bool:
    """True when f maps every member of the subcube back into it."""
    _check_same_dimension(f, cube)
    members = cube.member_array()
    return bool(np.all((f.np_image[members] & ~cube.free) == cube.base))


def enumerate_trapspaces(f: BooleanNetwork) -> SubcubeCollection:
    """All trapspaces of f (a 3^n sweep; capped at n <= 13)."""
    if f.n > ENUMERATION_MAX_N:
        raise ValueError(f"trapspace enumeration is capped at n={ENUMERATION_MAX_N}")
    n = f.n
    size = 1 << n
    xs = np.arange(size, dtype=np.int64)
    deltas = xs ^ f.np_image
    found = []
    for free in range(size):
        keep = ~free & (size - 1)
        # A base is a trapspace for this free mask iff no member moves a
        # fixed coordinate; group violations by the fixed-coordinate key.
        bad = np.zeros(size, dtype=bool)
        keys = xs & keep
        bad[keys[(deltas & keep) != 0]] = True
        base = 0
        while True:
            if not bad[base]:
                found.append(Subcube(n, free, base))
            if base == keep:
                break
            base = (base - keep) & keep
    return SubcubeCollection(n, frozenset(found))


def _cycle_representatives(image: tuple[int, ...]) -> list[int]:
    # One configuration per cycle of the functional graph of f.
    size = len(image)
    state = bytearray(size)  # 0 unvisited, 1 on current walk, 2 finished
    reps = []
    for start in range(size):
        if state[start]:
            continue
        path = []
        x = start
        while state[x] == 0:
            state[x] = 1
            path.append(x)
            x = image[x]
        if state[x] == 1:
            reps.append(x)
        for y in path:
            state[y] = 2
    return reps


def minimal_trapspaces(
    f: BooleanNetwork,
) -> tuple[SubcubeCollection, frozenset[Configuration]]:
    """Minimal trapspaces of f and the set of configurations they cover.

    Every trapspace traps orbits, so each minimal trapspace contains a whole
    cycle of f, and all configurations on one cycle share one principal
    trapspace.  The minimal trapspaces are therefore the inclusion-minimal
    principal trapspaces of cycle representatives, which avoids both the
    3^n enumeration and a sweep over all configurations.
    """
    n = f.n
    candidates = {principal_pair(f, rep) for rep in _cycle_representatives(f.image)}

    def strictly_inside(small, big):
        sf, sb = small
        bf, bb = big
        return small != big and sf | bf == bf and (sb ^ bb) & ~bf == 0

    minimal = [
        c for c in candidates if not any(strictly_inside(o, c) for o in candidates)
    ]
    cubes = frozenset(Subcube(n, fr, ba) for fr, ba in minimal)
    configs = frozenset(
        Configuration(n, b) for cube in cubes for b in cube.member_bits()
    )
    return SubcubeCollection(n, cubes), configs


@dataclass(frozen=True)
class TrapspaceReport:
    """Everything trapspace-related about one network."""

    principal: dict[Configuration, Subcube]
    all: SubcubeCollection
    minimal: SubcubeCollection
    min_configs: frozenset[Configuration]


def trapspace_report(f: BooleanNetwork) -> TrapspaceReport:
    principal = {
        Configuration(f.n, x): Subcube(f.n, *principal_pair(f, x))
        for x in range(1 << f.n)
    }
    minimal, min_configs = minimal_trapspaces(f)
    return TrapspaceReport(principal, enumerate_trapspaces(f), minimal, min_configs)


def trapping_closure(f: BooleanNetwork) -> BooleanNetwork:
    """The network sending each x to its opposite in its principal trapspace.

    The result is the largest network (most transitions) with the same
    trapspaces as f, and is a fixed point of this operator.
    """
    image = tuple(x ^ principal_pair(f, x)[0] for x in range(1 << f.n))
    return BooleanNetwork(f.n, image)


def trapping_graph(f: BooleanNetwork) -> HypercubeGraph:
    """Graph with an arc x -> y whenever y lies in the principal trapspace of x."""
    rows = []
    for x in range(1 << f.n):
        free, base = principal_pair(f, x)
        rows.append(Subcube(f.n, free, base).point_bitset())
    return HypercubeGraph(f.n, tuple(rows))


def min_trapping_extension(f: BooleanNetwork) -> BooleanNetwork:
    """Realisation of the minimal-trapspace collection.

    Inside a minimal trapspace each configuration moves to its opposite in
    that trapspace; every other configuration maps to its full negation.
    """
    full = (1 << f.n) - 1
    image = [x ^ full for x in range(1 << f.n)]
    cubes, _ = minimal_trapspaces(f)
    for cube in cubes.members:
        for b in cube.member_bits():
            image[b] = b ^ cube.free
    return BooleanNetwork(f.n, tuple(image))
