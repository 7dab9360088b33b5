"""Structured and random network constructions used as test populations.

An arrangement is a family of subcubes with a non-empty common
intersection; an arrangement network is the identity outside the family's
content, funnels the content into the common intersection, and treats each
coordinate uniformly.  Unions of such networks over disjoint contents are
exactly the commutative networks, so these constructors provide a rich,
always-commutative population; the long-transient construction provides a
trapping network with the extremal transient length.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .core import BooleanNetwork, Configuration, Subcube, _check_dimension


class ValidationFailed(ValueError):
    """The requested behaviours do not yield a valid arrangement network."""


class FreeDimBehavior(Enum):
    CONST0 = "const0"
    CONST1 = "const1"
    NEGATE = "negate"


@dataclass(frozen=True)
class Arrangement:
    """A non-empty family of subcubes whose common intersection is non-empty."""

    members: tuple[Subcube, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("an arrangement needs at least one subcube")
        n = self.members[0].n
        for cube in self.members:
            if cube.n != n:
                raise ValueError("subcubes of mixed dimensions")
        if self.core() is None:
            raise ValueError("arrangement members have empty common intersection")

    @property
    def n(self) -> int:
        return self.members[0].n

    def core(self) -> Subcube | None:
        """The common intersection of the members (None when empty)."""
        cube = self.members[0]
        for other in self.members[1:]:
            cube = cube.intersection(other)
            if cube is None:
                return None
        return cube

    def content_bitset(self) -> int:
        bs = 0
        for cube in self.members:
            bs |= cube.point_bitset()
        return bs

    def free_dimensions(self) -> int:
        """Mask of coordinates whose flip leaves the content invariant."""
        content = self.content_bitset()
        out = 0
        for i in range(self.n):
            bit = 1 << i
            low_mask = _even_positions(self.n, i)
            flipped = (content & low_mask) << bit | (content & ~low_mask) >> bit
            if flipped == content:
                out |= bit
        return out


def _even_positions(n: int, i: int) -> int:
    # Bitset over B^n selecting the configurations with coordinate i+1 equal 0.
    block = (1 << (1 << i)) - 1
    out = 0
    pos = 0
    step = 1 << (i + 1)
    while pos < (1 << n):
        out |= block << pos
        pos += step
    return out


def _bitset_members(bs: int) -> list[int]:
    out = []
    while bs:
        low = bs & -bs
        out.append(low.bit_length() - 1)
        bs ^= low
    return out


def arrangement_network(
    arrangement: Arrangement, behaviors: dict[int, FreeDimBehavior]
) -> BooleanNetwork:
    """Build the arrangement network with the given per-free-dimension behaviour.

    ``behaviors`` maps each free dimension (1-based) of the arrangement to
    const0, const1 or negate.  The result is validated against the three
    arrangement-network conditions plus commutativity and the construction
    aborts with ValidationFailed when the choice is inconsistent (for
    example negating a coordinate the core fixes).
    """
    n = arrangement.n
    core = arrangement.core()
    free_dims = arrangement.free_dimensions()
    given = 0
    for i in behaviors:
        if not 1 <= i <= n:
            raise ValueError(f"coordinate {i} out of range")
        given |= 1 << (i - 1)
    if given != free_dims:
        raise ValueError("behaviors must cover exactly the free dimensions")

    content = arrangement.content_bitset()
    image = list(range(1 << n))
    for x in _bitset_members(content):
        y = 0
        for i in range(n):
            bit = 1 << i
            if free_dims & bit:
                mode = behaviors[i + 1]
                if mode is FreeDimBehavior.CONST1:
                    y |= bit
                elif mode is FreeDimBehavior.NEGATE:
                    y |= ~x & bit
            else:
                y |= core.base & bit
        image[x] = y
    net = BooleanNetwork(n, tuple(image))
    _validate_arrangement_network(net, arrangement, content)
    return net


def _validate_arrangement_network(
    net: BooleanNetwork, arrangement: Arrangement, content: int
) -> None:
    n = net.n
    core = arrangement.core()
    for x in range(1 << n):
        inside = bool(content >> x & 1)
        if not inside and net.image[x] != x:
            raise ValidationFailed("network moves a configuration outside the content")
        if inside and not core.contains_bits(net.image[x]):
            raise ValidationFailed("image of a content member falls outside the core")
    members = _bitset_members(content)
    for i in range(n):
        bit = 1 << i
        for value in (0, bit):
            outs = {net.image[x] & bit for x in members if x & bit == value}
            if len(outs) > 1:
                raise ValidationFailed(
                    f"coordinate {i + 1} is not uniform over the content"
                )
    if not is_commutative(net):
        raise ValidationFailed("constructed network is not commutative")


def is_commutative(f: BooleanNetwork) -> bool:
    """Pairwise single-coordinate commutation over all coordinate pairs."""
    xs = np.arange(1 << f.n, dtype=np.int64)
    img = f.np_image
    singles = []
    for i in range(f.n):
        bit = 1 << i
        singles.append((img & bit) | (xs & ~bit))
    for i in range(f.n):
        for j in range(i + 1, f.n):
            if not np.array_equal(singles[j][singles[i]], singles[i][singles[j]]):
                return False
    return True


def negation_on_subcubes(cubes: Sequence[Subcube], n: int | None = None) -> BooleanNetwork:
    """Flip the free coordinates of each (pairwise disjoint) subcube.

    Every member of a cube moves to its opposite in that cube; everything
    else is fixed.  An empty sequence yields the identity (pass ``n``).
    """
    if not cubes:
        if n is None:
            raise ValueError("dimension required for an empty cube list")
        return BooleanNetwork.identity(n)
    n = cubes[0].n
    _check_dimension(n)
    image = list(range(1 << n))
    used = 0
    for cube in cubes:
        if cube.n != n:
            raise ValueError("subcubes of mixed dimensions")
        pb = cube.point_bitset()
        if pb & used:
            raise ValueError("subcubes overlap")
        used |= pb
        for x in cube.member_bits():
            image[x] = x ^ cube.free
    return BooleanNetwork(n, tuple(image))


def constant_on_arrangements(
    parts: Sequence[tuple[Arrangement, Configuration]], n: int | None = None
) -> BooleanNetwork:
    """Send each arrangement's whole content to one target inside its core.

    Contents must be pairwise disjoint and each target must lie in its
    arrangement's common intersection; everything else is fixed.  An empty
    sequence yields the identity (pass ``n``).
    """
    if not parts:
        if n is None:
            raise ValueError("dimension required for an empty arrangement list")
        return BooleanNetwork.identity(n)
    n = parts[0][0].n
    image = list(range(1 << n))
    used = 0
    for arrangement, target in parts:
        if arrangement.n != n or target.n != n:
            raise ValueError("parts of mixed dimensions")
        core = arrangement.core()
        if not core.contains(target):
            raise ValueError(f"target {target} is outside the arrangement core")
        content = arrangement.content_bitset()
        if content & used:
            raise ValueError("arrangement contents overlap")
        used |= content
        for x in _bitset_members(content):
            image[x] = target.bits
    return BooleanNetwork(n, tuple(image))


def union_disjoint(parts: Sequence[BooleanNetwork]) -> BooleanNetwork:
    """Combine networks whose supports (moved configurations) are disjoint."""
    if not parts:
        raise ValueError("need at least one network")
    n = parts[0].n
    image = list(range(1 << n))
    used = 0
    for part in parts:
        if part.n != n:
            raise ValueError("parts of mixed dimensions")
        for x, y in enumerate(part.image):
            if x == y:
                continue
            if used >> x & 1:
                raise ValueError(f"supports overlap at configuration {x}")
            used |= 1 << x
            image[x] = y
    return BooleanNetwork(n, tuple(image))


def long_transient_trapping(n: int) -> BooleanNetwork:
    """A trapping network with transient length n and eventual period 2.

    A chain of n+1 configurations climbs to the all-ones point while two
    low corner configurations swap forever; everything else is fixed.
    Requires n >= 3 so the chain avoids the swapped corners.
    """
    if n < 3:
        raise ValueError("construction requires n >= 3")
    _check_dimension(n)

    def chain_point(i: int) -> int:
        bits = 0
        for j in range(1, n + 1):
            if j < i or (i + j) % 2:
                bits |= 1 << (j - 1)
        return bits

    image = list(range(1 << n))
    points = [chain_point(i) for i in range(1, n + 2)]
    for a, b in zip(points, points[1:]):
        image[a] = b
    c1, c2 = 0, 1 << (n - 1)
    image[c1], image[c2] = c2, c1
    return BooleanNetwork(n, tuple(image))


def random_network(n: int, seed: int) -> BooleanNetwork:
    """Uniformly random network of dimension n, deterministic per seed."""
    _check_dimension(n)
    rng = np.random.default_rng(seed)
    table = rng.integers(0, 1 << n, size=1 << n, dtype=np.int64)
    return BooleanNetwork(n, tuple(int(v) for v in table))


def _random_subcube_through(rng, n: int, anchor: int) -> Subcube:
    free = 0
    for i in range(n):
        if rng.random() < 0.4:
            free |= 1 << i
    return Subcube(n, free, anchor & ~free)


def random_negation_on_subcubes(n: int, seed: int, parts: int = 2) -> BooleanNetwork:
    """Negation on randomly placed pairwise-disjoint subcubes."""
    _check_dimension(n)
    rng = np.random.default_rng(seed)
    used = 0
    cubes: list[Subcube] = []
    for _ in range(parts):
        for _attempt in range(100):
            anchor = int(rng.integers(0, 1 << n))
            cube = _random_subcube_through(rng, n, anchor)
            pb = cube.point_bitset()
            if pb & used:
                continue
            cubes.append(cube)
            used |= pb
            break
    return negation_on_subcubes(cubes, n)


def random_constant_on_arrangements(n: int, seed: int, parts: int = 2) -> BooleanNetwork:
    """Constant maps on randomly placed disjoint arrangement contents."""
    _check_dimension(n)
    rng = np.random.default_rng(seed)
    used = 0
    chosen: list[tuple[Arrangement, Configuration]] = []
    for _ in range(parts):
        for _attempt in range(100):
            anchor = int(rng.integers(0, 1 << n))
            cubes = tuple(
                _random_subcube_through(rng, n, anchor)
                for _ in range(int(rng.integers(1, 3)))
            )
            arrangement = Arrangement(cubes)
            content = arrangement.content_bitset()
            if content & used:
                continue
            core = arrangement.core()
            pick = core.base
            free = core.free
            while free:
                bit = free & -free
                if rng.random() < 0.5:
                    pick |= bit
                free ^= bit
            chosen.append((arrangement, Configuration(n, pick)))
            used |= content
            break
    return constant_on_arrangements(chosen, n)


def random_commutative(n: int, seed: int, parts: int = 2) -> BooleanNetwork:
    """Union of randomly sampled arrangement networks (always commutative).

    Arrangements are placed greedily on disjoint contents with up to 100
    retries per part; parts that cannot be placed are skipped, so the
    result may use fewer than ``parts`` pieces (down to the identity).
    """
    _check_dimension(n)
    if parts < 1:
        raise ValueError("parts must be at least 1")
    rng = np.random.default_rng(seed)
    used = 0
    nets: list[BooleanNetwork] = []
    for _ in range(parts):
        for _attempt in range(100):
            anchor = int(rng.integers(0, 1 << n))
            cubes = tuple(
                _random_subcube_through(rng, n, anchor)
                for _ in range(int(rng.integers(1, 3)))
            )
            arrangement = Arrangement(cubes)
            content = arrangement.content_bitset()
            if content & used:
                continue
            core = arrangement.core()
            options = (FreeDimBehavior.CONST0, FreeDimBehavior.CONST1, FreeDimBehavior.NEGATE)
            behaviors = {}
            for i in _bitset_members(arrangement.free_dimensions()):
                bit = 1 << i
                if core.free & bit:
                    behaviors[i + 1] = options[int(rng.integers(0, 3))]
                else:
                    # The core pins this coordinate, so only the matching
                    # constant can keep images inside it.
                    behaviors[i + 1] = (
                        FreeDimBehavior.CONST1 if core.base & bit else FreeDimBehavior.CONST0
                    )
            try:
                net = arrangement_network(arrangement, behaviors)
            except ValidationFailed:
                continue
            nets.append(net)
            used |= content
            break
    if not nets:
        return BooleanNetwork.identity(n)
    return union_disjoint(nets)
