"""Shared builders for the test suite."""

from trapnets import BooleanNetwork, Configuration, Subcube


def cfg(s: str) -> Configuration:
    return Configuration.from_string(s)


def cube(s: str) -> Subcube:
    return Subcube.from_string(s)


def net_from_rows(rows: dict[str, str]) -> BooleanNetwork:
    """Build a network from {config string: image string} over all rows."""
    n = len(next(iter(rows)))
    image = [None] * (1 << n)
    for k, v in rows.items():
        image[cfg(k).bits] = cfg(v).bits
    assert None not in image, "incomplete row set"
    return BooleanNetwork(n, tuple(image))


def net_from_arcs(n: int, arcs: list[str]) -> BooleanNetwork:
    """Build a network from asynchronous arcs 'src>dst' / 'src<>dst'."""
    delta = [0] * (1 << n)
    for arc in arcs:
        if "<>" in arc:
            a, b = (cfg(p).bits for p in arc.split("<>"))
            delta[a] |= a ^ b
            delta[b] |= a ^ b
        else:
            a, b = (cfg(p).bits for p in arc.split(">"))
            delta[a] |= a ^ b
    return BooleanNetwork(n, tuple(x ^ d for x, d in enumerate(delta)))


F_EX3_ROWS = {
    "000": "110",
    "001": "100",
    "010": "000",
    "011": "110",
    "100": "100",
    "101": "101",
    "110": "110",
    "111": "110",
}


def f_ex3() -> BooleanNetwork:
    return net_from_rows(F_EX3_ROWS)


def all_subcubes(n: int):
    """Every subcube of B^n, via the 3^n star patterns."""
    import itertools

    for pattern in itertools.product("01*", repeat=n):
        yield Subcube.from_string("".join(pattern))


def brute_force_trapspaces(f: BooleanNetwork) -> set[Subcube]:
    """Independent oracle: membership loop over all 3^n subcubes."""
    out = set()
    for c in all_subcubes(f.n):
        if all(f.image[m] & ~c.free == c.base for m in c.member_bits()):
            out.add(c)
    return out


def brute_force_principal(f: BooleanNetwork, x: int) -> Subcube:
    """Independent oracle: smallest enumerated trapspace containing x."""
    best = None
    for c in brute_force_trapspaces(f):
        if c.contains_bits(x) and (best is None or c.size() < best.size()):
            best = c
    return best
