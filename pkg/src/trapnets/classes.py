"""Network classes, alternate-definition cross-checkers and implication diagrams.

Every class predicate is computed from its own primary definition; the
``check_alternate_definitions`` entry point evaluates each of a class's
equivalent defining conditions independently so their agreement can be
verified over whole populations.  The implication diagrams encode which
class memberships force which others (unconditionally, for trapping
networks, or for commutative networks) together with the counterexample
fixtures witnessing the absent arrows.
"""

from __future__ import annotations

import functools
import importlib.resources
from dataclasses import dataclass, fields
from functools import cached_property

import numpy as np

from .core import BooleanNetwork, Configuration, Subcube, _check_same_dimension
from .cubesets import SubcubeCollection
from .dynamics import HypercubeGraph, graph_property
from .trapspaces import (
    enumerate_trapspaces,
    minimal_trapspaces,
    principal_pair,
    trapping_closure,
    min_trapping_extension,
)

ST_SWEEP_MAX_N = 8
GLOBAL_SWEEP_MAX_N = 16

THEOREM_SIZES = {
    "trapping7": 7,
    "commutative3": 3,
    "marseille4": 4,
    "lille4": 4,
    "globally_idempotent3": 3,
    "sink_terminal5": 5,
}


# ---------------------------------------------------------------------------
# vectorised update-table machinery


def update_tables(f: BooleanNetwork) -> np.ndarray:
    """U[s, x] = image of x under the update of subset s (s as a bit pattern)."""
    if f.n > ST_SWEEP_MAX_N:
        raise ValueError(f"subset-pair sweeps are capped at n={ST_SWEEP_MAX_N}")
    size = 1 << f.n
    xs = np.arange(size, dtype=np.int64)
    subsets = xs[:, None]
    return (f.np_image[None, :] & subsets) | (xs[None, :] & ~subsets)


def _leq_rows(xs: np.ndarray, a: np.ndarray, b: np.ndarray) -> bool:
    """Transition order, broadcast over rows of update tables."""
    return bool(np.all(((xs ^ a) & ~(xs ^ b)) == 0))


def _pairwise_sweep(f: BooleanNetwork, check) -> bool:
    """Run ``check(comp, s, U, xs, ts)`` for every subset s, where
    comp[t, x] is the table of updating s then t."""
    U = update_tables(f)
    size = U.shape[0]
    xs = np.arange(size, dtype=np.int64)
    ts = xs
    for s in range(size):
        comp = U[:, U[s]]
        if not check(comp, s, U, xs, ts):
            return False
    return True


def _sweep_trapping(f: BooleanNetwork) -> bool:
    # update(s) then update(t) never moves more than update(s | t)
    return _pairwise_sweep(
        f, lambda comp, s, U, xs, ts: _leq_rows(xs, comp, U[ts | s])
    )


def _sweep_commutative_sandwich(f: BooleanNetwork) -> bool:
    return _pairwise_sweep(
        f,
        lambda comp, s, U, xs, ts: _leq_rows(xs, U[ts ^ s], comp)
        and _leq_rows(xs, comp, U[ts | s]),
    )


def _sweep_marseille(f: BooleanNetwork) -> bool:
    return _pairwise_sweep(
        f, lambda comp, s, U, xs, ts: bool(np.all(comp == U[ts ^ s]))
    )


def _sweep_lille(f: BooleanNetwork) -> bool:
    return _pairwise_sweep(
        f, lambda comp, s, U, xs, ts: bool(np.all(comp == U[ts | s]))
    )


def _sweep_intersection_bound(f: BooleanNetwork) -> bool:
    # Both bounds are needed: the lower bound alone is strictly weaker than
    # global idempotence (26 of the 256 two-coordinate networks satisfy it
    # without being globally idempotent).
    return _pairwise_sweep(
        f,
        lambda comp, s, U, xs, ts: _leq_rows(xs, U[ts & s], comp)
        and _leq_rows(xs, comp, U[ts | s]),
    )


# ---------------------------------------------------------------------------
# interval-quantified conditions ("for all x and y in the interval of x")


def _forall_interval(f: BooleanNetwork, cond) -> bool:
    """cond(x, fx, y, fy) for every x and every y in the interval of x."""
    img = f.image
    for x, fx in enumerate(img):
        d = x ^ fx
        s = 0
        while True:
            y = x ^ s
            if not cond(x, fx, y, img[y]):
                return False
            if s == d:
                break
            s = (s - d) & d
    return True


def _span_subset(y: int, fy: int, x: int, fx: int) -> bool:
    # span{y, fy} subseteq span{x, fx}
    free_small, free_big = y ^ fy, x ^ fx
    if free_small & ~free_big:
        return False
    return (y ^ x) & ~free_big == 0


def is_negation_on_subcubes(f: BooleanNetwork) -> bool:
    """True when the moved configurations split into disjoint subcubes on
    which f is the opposite map (flip all free coordinates)."""
    img = f.image
    for x, fx in enumerate(img):
        if fx == x:
            continue
        d = x ^ fx
        s = 0
        while True:
            y = x ^ s
            if img[y] != y ^ d:
                return False
            if s == d:
                break
            s = (s - d) & d
    return True


def is_constant_on_arrangements(f: BooleanNetwork) -> bool:
    """True when each moved configuration belongs to a fiber that targets a
    fixed point and is closed under the intervals toward that target."""
    img = f.image
    for x, fx in enumerate(img):
        if fx == x:
            continue
        if img[fx] != fx:
            return False
        # The fiber of fx must contain the whole span of {x, fx}.
        d = x ^ fx
        s = 0
        while True:
            y = x ^ s
            if img[y] != fx:
                return False
            if s == d:
                break
            s = (s - d) & d
    return True


# ---------------------------------------------------------------------------
# simple whole-network predicates


def _is_permutation(table) -> bool:
    return len(set(table)) == len(table)


def _compose(table, other):
    return tuple(other[v] for v in table)


def _single_update_tables(f: BooleanNetwork) -> list[tuple[int, ...]]:
    out = []
    for i in range(f.n):
        bit = 1 << i
        out.append(tuple((fx & bit) | (x & ~bit) for x, fx in enumerate(f.image)))
    return out


def is_commutative(f: BooleanNetwork) -> bool:
    """Single-coordinate updates commute pairwise."""
    singles = _single_update_tables(f)
    for i in range(f.n):
        for j in range(i + 1, f.n):
            if _compose(singles[i], singles[j]) != _compose(singles[j], singles[i]):
                return False
    return True


def _globally_sweep(f: BooleanNetwork) -> tuple[bool, bool, bool]:
    """(bijective, involutive, idempotent) of every subset update.

    Walks the subsets in Gray-code order, rewriting one coordinate of the
    running table per step; capped at n = 16.
    """
    n = f.n
    if n > GLOBAL_SWEEP_MAX_N:
        raise ValueError(f"global subset sweeps are capped at n={GLOBAL_SWEEP_MAX_N}")
    size = 1 << n
    xs = np.arange(size, dtype=np.int64)
    img = f.np_image
    tab = xs.copy()
    bij = inv = idem = True
    for k in range(size):
        if k:
            gray_prev = (k - 1) ^ ((k - 1) >> 1)
            gray = k ^ (k >> 1)
            bit = gray ^ gray_prev
            src = img if gray & bit else xs
            tab = (tab & ~bit) | (src & bit)
        if bij and np.bincount(tab, minlength=size).max() > 1:
            bij = False
        twice = tab[tab]
        if inv and not np.array_equal(twice, xs):
            inv = False
        if idem and not np.array_equal(twice, tab):
            idem = False
        if not (bij or inv or idem):
            break
    return bij, inv, idem


# ---------------------------------------------------------------------------
# the per-network profile: everything computed once, lazily


class NetworkProfile:
    """Lazily computed facts about one network, shared across checks."""

    def __init__(self, f: BooleanNetwork):
        self.f = f
        self.n = f.n

    @cached_property
    def graph_a(self) -> HypercubeGraph:
        from .dynamics import build_graph

        return build_graph(self.f, "asynchronous")

    @cached_property
    def graph_ga(self) -> HypercubeGraph:
        from .dynamics import build_graph

        return build_graph(self.f, "general")

    @cached_property
    def pt_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(principal_pair(self.f, x) for x in range(1 << self.n))

    @cached_property
    def closure(self) -> BooleanNetwork:
        return BooleanNetwork(
            self.n, tuple(x ^ free for x, (free, _) in enumerate(self.pt_pairs))
        )

    @cached_property
    def graph_tg(self) -> HypercubeGraph:
        rows = tuple(
            Subcube(self.n, free, base).point_bitset() for free, base in self.pt_pairs
        )
        return HypercubeGraph(self.n, rows)

    @cached_property
    def pt_collection(self) -> SubcubeCollection:
        return SubcubeCollection(
            self.n, frozenset(Subcube(self.n, fr, ba) for fr, ba in self.pt_pairs)
        )

    @cached_property
    def trapspace_collection(self) -> SubcubeCollection:
        return enumerate_trapspaces(self.f)

    @cached_property
    def minimal(self) -> tuple[SubcubeCollection, frozenset[Configuration]]:
        return minimal_trapspaces(self.f)

    @cached_property
    def min_extension(self) -> BooleanNetwork:
        return min_trapping_extension(self.f)

    @cached_property
    def pt_flags(self):
        from .cubesets import classify_collection

        return classify_collection(self.pt_collection)

    @cached_property
    def fixed_bitset(self) -> int:
        bs = 0
        for x, fx in enumerate(self.f.image):
            if x == fx:
                bs |= 1 << x
        return bs

    @cached_property
    def singles(self) -> list[tuple[int, ...]]:
        return _single_update_tables(self.f)

    @cached_property
    def globally_flags(self) -> tuple[bool, bool, bool]:
        return _globally_sweep(self.f)

    # -- individual class predicates, each from its primary definition

    @cached_property
    def trapping(self) -> bool:
        return graph_property(self.graph_ga, "transitive")

    @cached_property
    def commutative(self) -> bool:
        return is_commutative(self.f)

    @cached_property
    def bijective(self) -> bool:
        return _is_permutation(self.f.image)

    @cached_property
    def locally_bijective(self) -> bool:
        return all(_is_permutation(t) for t in self.singles)

    @cached_property
    def involutive(self) -> bool:
        return _compose(self.f.image, self.f.image) == tuple(range(1 << self.n))

    @cached_property
    def locally_involutive(self) -> bool:
        identity = tuple(range(1 << self.n))
        return all(_compose(t, t) == identity for t in self.singles)

    @cached_property
    def idempotent(self) -> bool:
        return _compose(self.f.image, self.f.image) == self.f.image

    @cached_property
    def locally_idempotent(self) -> bool:
        return all(_compose(t, t) == t for t in self.singles)

    @cached_property
    def marseille(self) -> bool:
        return self.commutative and self.bijective

    @cached_property
    def lille(self) -> bool:
        return self.commutative and self.idempotent

    @cached_property
    def globally_idempotent(self) -> bool:
        return self.globally_flags[2]

    @cached_property
    def dynamically_local(self) -> bool:
        img = self.f.image
        return _compose(_compose(img, img), img) == img

    @cached_property
    def dpt(self) -> bool:
        return len(set(self.pt_pairs)) == 1 << self.n

    @cached_property
    def fixable(self) -> bool:
        return graph_property(self.graph_a, "sink-terminal")

    @cached_property
    def trapspace_fp(self) -> bool:
        return all(
            cube.point_bitset() & self.fixed_bitset
            for cube in self.trapspace_collection.members
        )

    def _interval_fixed_counts(self):
        from .dynamics import _interval_bitset

        for x, fx in enumerate(self.f.image):
            yield (_interval_bitset(x, fx) & self.fixed_bitset).bit_count()

    @cached_property
    def interval_fp(self) -> bool:
        return all(c >= 1 for c in self._interval_fixed_counts())

    @cached_property
    def interval_ufp(self) -> bool:
        return all(c == 1 for c in self._interval_fixed_counts())

    @cached_property
    def min_trapping(self) -> bool:
        return self.f == self.min_extension

    PROPERTY_NAMES = (
        "trapping",
        "commutative",
        "marseille",
        "lille",
        "globally_idempotent",
        "bijective",
        "locally_bijective",
        "globally_bijective",
        "involutive",
        "locally_involutive",
        "globally_involutive",
        "idempotent",
        "locally_idempotent",
        "dynamically_local",
        "dpt",
        "fixable",
        "trapspace_fp",
        "interval_fp",
        "interval_ufp",
        "min_trapping",
        "interval_ufp_idempotent",
        "symmetric_a",
        "symmetric_ga",
        "symmetric_tg",
        "oriented_a",
        "oriented_ga",
        "oriented_tg",
        "triangular_a",
        "triangular_ga",
        "triangular_tg",
        "sink_terminal_a",
        "sink_terminal_ga",
        "sink_terminal_tg",
    )

    def prop(self, name: str) -> bool:
        if name == "all":
            return True
        if name == "globally_bijective":
            return self.globally_flags[0]
        if name == "globally_involutive":
            return self.globally_flags[1]
        if name == "interval_ufp_idempotent":
            return self.interval_ufp and self.idempotent
        head, _, tail = name.rpartition("_")
        if tail in ("a", "ga", "tg") and head in (
            "symmetric",
            "oriented",
            "triangular",
            "sink_terminal",
        ):
            g = {"a": self.graph_a, "ga": self.graph_ga, "tg": self.graph_tg}[tail]
            return graph_property(g, head.replace("_", "-"))
        return bool(getattr(self, name))


@dataclass(frozen=True)
class ClassReport:
    trapping: bool
    commutative: bool
    marseille: bool
    lille: bool
    globally_idempotent: bool
    bijective: bool
    locally_bijective: bool
    globally_bijective: bool
    involutive: bool
    locally_involutive: bool
    globally_involutive: bool
    idempotent: bool
    locally_idempotent: bool
    globally_idempotent_flag: bool
    dynamically_local: bool
    dpt: bool
    fixable: bool
    trapspace_fp: bool
    interval_fp: bool
    interval_ufp: bool
    min_trapping: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def classify_network(f: BooleanNetwork, profile: NetworkProfile | None = None) -> ClassReport:
    """Evaluate every class flag from its own primary definition."""
    p = profile if profile is not None else NetworkProfile(f)
    g_bij, g_inv, g_idem = p.globally_flags
    return ClassReport(
        trapping=p.trapping,
        commutative=p.commutative,
        marseille=p.marseille,
        lille=p.lille,
        globally_idempotent=p.globally_idempotent,
        bijective=p.bijective,
        locally_bijective=p.locally_bijective,
        globally_bijective=g_bij,
        involutive=p.involutive,
        locally_involutive=p.locally_involutive,
        globally_involutive=g_inv,
        idempotent=p.idempotent,
        locally_idempotent=p.locally_idempotent,
        globally_idempotent_flag=g_idem,
        dynamically_local=p.dynamically_local,
        dpt=p.dpt,
        fixable=p.fixable,
        trapspace_fp=p.trapspace_fp,
        interval_fp=p.interval_fp,
        interval_ufp=p.interval_ufp,
        min_trapping=p.min_trapping,
    )


# ---------------------------------------------------------------------------
# alternate-definition cross-checkers


@functools.lru_cache(maxsize=None)
def _all_closure_tables(n: int) -> frozenset[tuple[int, ...]]:
    # Exhaustive image of the trapping-closure operator; only sane for n <= 2.
    size = 1 << n
    out = set()
    for code in range(size ** size):
        table = []
        c = code
        for _ in range(size):
            table.append(c % size)
            c //= size
        out.add(trapping_closure(BooleanNetwork(n, tuple(table))).image)
    return frozenset(out)


def _is_some_trapping_closure(f: BooleanNetwork, profile: NetworkProfile) -> bool:
    if f.n <= 2:
        return f.image in _all_closure_tables(f.n)
    # The closure operator is idempotent (tested separately), so its image
    # is exactly its fixed-point set.
    return profile.closure == f


def check_alternate_definitions(
    f: BooleanNetwork, theorem: str, profile: NetworkProfile | None = None
) -> tuple[bool, ...]:
    """Evaluate each equivalent defining condition of a class independently.

    Returns one boolean per condition; a mixed vector on any network
    contradicts the corresponding equivalence and is a build-breaking
    finding.  Subset-pair sweeps cap the dimension at n = 8.
    """
    p = profile if profile is not None else NetworkProfile(f)
    if theorem == "trapping7":
        interval_is_principal = all(
            (x ^ fx) == p.pt_pairs[x][0] for x, fx in enumerate(f.image)
        )
        return (
            graph_property(p.graph_ga, "transitive"),
            _forall_interval(f, lambda x, fx, y, fy: _span_subset(y, fy, x, fx)),
            interval_is_principal,
            f == p.closure,
            _is_some_trapping_closure(f, p),
            p.graph_tg == p.graph_ga,
            _sweep_trapping(f),
        )
    if theorem == "commutative3":
        return (
            is_commutative(f),
            _forall_interval(
                f,
                lambda x, fx, y, fy: _span_subset(y, fx, y, fy)
                and _span_subset(y, fy, x, fx),
            ),
            _sweep_commutative_sandwich(f),
        )
    if theorem == "marseille4":
        # For y inside the interval of x, interval equality reduces to equal
        # difference masks.
        return (
            is_commutative(f) and _is_permutation(f.image),
            is_negation_on_subcubes(f),
            _forall_interval(f, lambda x, fx, y, fy: (y ^ fy) == (x ^ fx)),
            _sweep_marseille(f),
        )
    if theorem == "lille4":
        return (
            is_commutative(f) and _compose(f.image, f.image) == f.image,
            is_constant_on_arrangements(f),
            _forall_interval(f, lambda x, fx, y, fy: (y ^ fy) == (y ^ fx)),
            _sweep_lille(f),
        )
    if theorem == "globally_idempotent3":
        singles_ok = True
        size = 1 << f.n
        xs = np.arange(size, dtype=np.int64)
        img = f.np_image
        for s in range(size):
            tab = (img & s) | (xs & ~s)
            if not np.array_equal(tab[tab], tab):
                singles_ok = False
                break
        return (
            singles_ok,
            _forall_interval(f, lambda x, fx, y, fy: _span_subset(y, fy, y, fx)),
            _sweep_intersection_bound(f),
        )
    if theorem == "sink_terminal5":
        fix = p.fixed_bitset
        descend_ok = True
        for x in range(1 << f.n):
            if fix >> x & 1:
                continue
            free, base = p.pt_pairs[x]
            if all(p.pt_pairs[base | s] == (free, base) for s in _submasks(free)):
                descend_ok = False
                break
        m_configs_bits = 0
        for c in p.minimal[1]:
            m_configs_bits |= 1 << c.bits
        principal_fp = all(
            Subcube(f.n, fr, ba).point_bitset() & fix for fr, ba in set(p.pt_pairs)
        )
        return (
            graph_property(p.graph_tg, "sink-terminal"),
            descend_ok,
            m_configs_bits == fix,
            principal_fp,
            p.trapspace_fp,
        )
    raise ValueError(f"unknown theorem {theorem!r}")


def _submasks(mask: int):
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


def trapspace_equivalent(
    f: BooleanNetwork, g: BooleanNetwork,
    pf: NetworkProfile | None = None, pg: NetworkProfile | None = None,
) -> tuple[bool, bool, bool, bool, bool]:
    """The five equal-trapspace-structure conditions, evaluated independently."""
    _check_same_dimension(f, g)
    pf = pf if pf is not None else NetworkProfile(f)
    pg = pg if pg is not None else NetworkProfile(g)
    return (
        pf.pt_collection == pg.pt_collection,
        pf.trapspace_collection == pg.trapspace_collection,
        pf.pt_pairs == pg.pt_pairs,
        pf.graph_tg == pg.graph_tg,
        pf.closure == pg.closure,
    )


def min_trapspace_equivalent(
    f: BooleanNetwork, g: BooleanNetwork,
    pf: NetworkProfile | None = None, pg: NetworkProfile | None = None,
) -> tuple[bool, bool, bool, bool]:
    """The four equal-minimal-trapspace conditions, evaluated independently."""
    _check_same_dimension(f, g)
    pf = pf if pf is not None else NetworkProfile(f)
    pg = pg if pg is not None else NetworkProfile(g)
    mf, mf_configs = pf.minimal
    mg, mg_configs = pg.minimal
    same_m = mf_configs == mg_configs
    cond2 = same_m and all(
        pf.pt_pairs[c.bits] == pg.pt_pairs[c.bits] for c in mf_configs
    )
    cond3 = all(
        pf.pt_pairs[c.bits] == pg.pt_pairs[c.bits] for c in mf_configs | mg_configs
    )
    return (
        mf == mg,
        cond2,
        cond3,
        pf.min_extension == pg.min_extension,
    )


# ---------------------------------------------------------------------------
# implication diagrams


@dataclass(frozen=True)
class DiagramEdge:
    source: str
    target: str
    guard: str  # "all" | "trapping" | "commutative"


@dataclass(frozen=True)
class Counterexample:
    label: str
    source: str
    guard: str
    target: str


@dataclass(frozen=True)
class DiagramSpec:
    id: str
    nodes: tuple[str, ...]
    edges: tuple[DiagramEdge, ...]
    counterexamples: tuple[Counterexample, ...]


def _edges(*triples) -> tuple[DiagramEdge, ...]:
    return tuple(DiagramEdge(s, t, g) for s, t, g in triples)


def _noedges(*quads) -> tuple[Counterexample, ...]:
    return tuple(Counterexample(l, s, g, t) for l, s, g, t in quads)


SYMMETRIC_DIAGRAM = DiagramSpec(
    "symmetric",
    (
        "marseille",
        "globally_involutive",
        "symmetric_ga",
        "symmetric_tg",
        "symmetric_a",
        "locally_involutive",
        "locally_bijective",
    ),
    _edges(
        ("symmetric_ga", "marseille", "all"),
        ("marseille", "symmetric_ga", "all"),
        ("symmetric_ga", "globally_involutive", "all"),
        ("globally_involutive", "symmetric_ga", "all"),
        ("symmetric_ga", "symmetric_tg", "all"),
        ("symmetric_tg", "symmetric_ga", "trapping"),
        ("symmetric_ga", "symmetric_a", "all"),
        ("symmetric_a", "symmetric_ga", "trapping"),
        ("symmetric_a", "locally_bijective", "all"),
        ("locally_bijective", "symmetric_a", "all"),
        ("symmetric_a", "locally_involutive", "all"),
        ("locally_involutive", "symmetric_a", "all"),
    ),
    _noedges(
        ("a", "symmetric_tg", "all", "symmetric_a"),
        ("b", "symmetric_a", "all", "symmetric_tg"),
    ),
)

MARSEILLE_DIAGRAM = DiagramSpec(
    "marseille",
    ("marseille", "involutive", "globally_bijective", "locally_bijective", "bijective"),
    _edges(
        ("marseille", "globally_bijective", "all"),
        ("globally_bijective", "locally_bijective", "all"),
        ("globally_bijective", "bijective", "all"),
        ("marseille", "involutive", "all"),
        ("involutive", "bijective", "all"),
        ("globally_bijective", "marseille", "trapping"),
        ("locally_bijective", "globally_bijective", "trapping"),
        ("bijective", "involutive", "trapping"),
        ("bijective", "globally_bijective", "commutative"),
        ("involutive", "marseille", "commutative"),
    ),
    _noedges(
        ("c", "involutive", "trapping", "locally_bijective"),
        ("d", "bijective", "all", "involutive"),
    ),
)

TRIANGULAR_DIAGRAM = DiagramSpec(
    "triangular",
    (
        "triangular_tg",
        "oriented_tg",
        "dpt",
        "triangular_ga",
        "oriented_ga",
        "triangular_a",
        "oriented_a",
        "locally_idempotent",
        "sink_terminal_a",
        "fixable",
        "sink_terminal_ga",
        "sink_terminal_tg",
        "trapspace_fp",
    ),
    _edges(
        ("triangular_tg", "oriented_tg", "all"),
        ("oriented_tg", "triangular_tg", "all"),
        ("triangular_ga", "oriented_ga", "all"),
        ("oriented_ga", "triangular_ga", "trapping"),
        ("triangular_a", "oriented_a", "all"),
        ("oriented_a", "triangular_a", "trapping"),
        ("triangular_tg", "triangular_ga", "all"),
        ("triangular_ga", "triangular_tg", "trapping"),
        ("triangular_ga", "triangular_a", "all"),
        ("triangular_a", "triangular_ga", "commutative"),
        ("oriented_ga", "oriented_a", "all"),
        ("oriented_a", "oriented_ga", "commutative"),
        ("triangular_a", "sink_terminal_a", "all"),
        ("sink_terminal_a", "triangular_a", "commutative"),
        ("sink_terminal_a", "sink_terminal_ga", "all"),
        ("sink_terminal_ga", "sink_terminal_a", "trapping"),
        ("sink_terminal_ga", "sink_terminal_tg", "all"),
        ("sink_terminal_tg", "sink_terminal_ga", "trapping"),
        ("triangular_tg", "dpt", "all"),
        ("dpt", "triangular_tg", "all"),
        ("oriented_a", "locally_idempotent", "all"),
        ("locally_idempotent", "oriented_a", "all"),
        ("sink_terminal_a", "fixable", "all"),
        ("fixable", "sink_terminal_a", "all"),
        ("sink_terminal_tg", "trapspace_fp", "all"),
        ("trapspace_fp", "sink_terminal_tg", "all"),
    ),
    _noedges(
        ("e", "triangular_ga", "all", "triangular_tg"),
        ("f", "triangular_a", "trapping", "oriented_ga"),
        ("g", "oriented_ga", "all", "sink_terminal_tg"),
        ("h", "sink_terminal_tg", "all", "sink_terminal_ga"),
        ("i", "sink_terminal_ga", "all", "sink_terminal_a"),
        ("j", "sink_terminal_a", "trapping", "oriented_a"),
    ),
)

LILLE_DIAGRAM = DiagramSpec(
    "lille",
    (
        "lille",
        "interval_ufp_idempotent",
        "globally_idempotent",
        "interval_ufp",
        "idempotent",
        "dpt",
        "triangular_ga",
        "triangular_a",
        "oriented_ga",
        "locally_idempotent",
        "fixable",
        "interval_fp",
        "trapspace_fp",
    ),
    _edges(
        ("lille", "interval_ufp_idempotent", "all"),
        ("interval_ufp_idempotent", "lille", "trapping"),
        ("interval_ufp_idempotent", "interval_ufp", "all"),
        ("interval_ufp", "interval_ufp_idempotent", "commutative"),
        ("interval_ufp", "interval_fp", "all"),
        ("interval_fp", "interval_ufp", "commutative"),
        ("lille", "globally_idempotent", "all"),
        ("globally_idempotent", "lille", "commutative"),
        ("dpt", "triangular_ga", "all"),
        ("triangular_ga", "dpt", "trapping"),
        ("globally_idempotent", "idempotent", "all"),
        ("idempotent", "globally_idempotent", "commutative"),
        ("globally_idempotent", "dpt", "all"),
        ("dpt", "globally_idempotent", "commutative"),
        ("triangular_ga", "triangular_a", "all"),
        ("triangular_a", "triangular_ga", "commutative"),
        ("triangular_ga", "oriented_ga", "all"),
        ("oriented_ga", "triangular_ga", "trapping"),
        ("triangular_a", "locally_idempotent", "all"),
        ("locally_idempotent", "triangular_a", "trapping"),
        ("oriented_ga", "locally_idempotent", "all"),
        ("locally_idempotent", "oriented_ga", "commutative"),
        ("triangular_a", "fixable", "all"),
        ("fixable", "triangular_a", "commutative"),
        ("fixable", "trapspace_fp", "all"),
        ("trapspace_fp", "fixable", "trapping"),
        ("interval_ufp_idempotent", "idempotent", "all"),
        ("idempotent", "interval_ufp_idempotent", "commutative"),
        ("idempotent", "interval_fp", "all"),
        ("interval_fp", "idempotent", "commutative"),
        ("interval_fp", "trapspace_fp", "all"),
        ("trapspace_fp", "interval_fp", "trapping"),
    ),
    _noedges(
        ("k", "interval_ufp_idempotent", "all", "fixable"),
        ("l", "interval_ufp_idempotent", "all", "locally_idempotent"),
        ("m", "interval_ufp", "trapping", "idempotent"),
        ("n", "globally_idempotent", "all", "interval_ufp"),
        ("o", "dpt", "trapping", "idempotent"),
        ("p", "idempotent", "trapping", "locally_idempotent"),
        ("q", "interval_ufp", "trapping", "locally_idempotent"),
    ),
)

DIAGRAMS = {
    d.id: d
    for d in (SYMMETRIC_DIAGRAM, MARSEILLE_DIAGRAM, TRIANGULAR_DIAGRAM, LILLE_DIAGRAM)
}


@dataclass(frozen=True)
class DiagramViolation:
    diagram: str
    kind: str  # "implication" | "counterexample"
    detail: str
    network: BooleanNetwork


def load_fixture(diagram: str, label: str) -> BooleanNetwork:
    """Load a counterexample fixture shipped with the package."""
    from .netio import parse_truth_table

    root = importlib.resources.files(__package__) / "fixtures" / diagram
    path = root / f"{label}.tt"
    try:
        text = path.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as exc:
        raise FileNotFoundError(f"missing fixture {diagram}/{label}.tt") from exc
    return parse_truth_table(text).network


def verify_diagram(
    diagram: DiagramSpec,
    population,
    check_counterexamples: bool = True,
) -> list[DiagramViolation]:
    """Check correctness over a population and completeness over fixtures.

    ``population`` holds networks or NetworkProfile objects.  Correctness:
    every population member satisfying an edge's source and guard must
    satisfy its target.  Completeness: every registered counterexample
    fixture must satisfy its non-edge's source and guard while violating
    the target.
    """
    violations = []
    for item in population:
        p = item if isinstance(item, NetworkProfile) else NetworkProfile(item)
        for edge in diagram.edges:
            if not p.prop(edge.guard):
                continue
            if p.prop(edge.source) and not p.prop(edge.target):
                violations.append(
                    DiagramViolation(
                        diagram.id,
                        "implication",
                        f"{edge.source} [{edge.guard}] -> {edge.target}",
                        p.f,
                    )
                )
    if check_counterexamples:
        for ce in diagram.counterexamples:
            net = load_fixture(diagram.id, ce.label)
            p = NetworkProfile(net)
            ok = p.prop(ce.guard) and p.prop(ce.source) and not p.prop(ce.target)
            if not ok:
                violations.append(
                    DiagramViolation(
                        diagram.id,
                        "counterexample",
                        f"fixture {ce.label} fails to refute "
                        f"{ce.source} [{ce.guard}] -> {ce.target}",
                        net,
                    )
                )
    return violations
