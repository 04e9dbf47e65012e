"""Degree sequences, the ``a^k`` shorthand, and the scalar parameters that
drive every cactus-family decision.

All bound arithmetic is integer floor division; there is no float anywhere
on the decision path.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

MAX_ENTRIES = 10**7

_SPLIT = re.compile(r"[,\s]+")
_TOKEN = re.compile(r"^(-?\d+)(?:\^(-?\d+))?$")


class SequenceError(ValueError):
    """Raised for text that cannot be turned into a degree sequence.

    ``position`` is the 1-based token index when the failure is tied to a
    single token.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)
        self.position = position


class OddVolumeError(ValueError):
    """The entries sum to an odd number, so no graph can realize them."""


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing positive entries plus the way back to input order.

    ``perm[i]`` is the 0-based input position of canonical entry ``i``.
    Sorting is stable, so equal entries keep their input order.
    """

    entries: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.perm):
            raise ValueError("entries and perm differ in length")
        if any(e < 1 for e in self.entries):
            raise ValueError("degree entries must be positive")
        if any(a < b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError("entries must be non-increasing")

    @classmethod
    def from_degrees(cls, degrees) -> DegreeSequence:
        """Canonicalize an arbitrary-order iterable of positive integers."""
        degrees = list(degrees)
        for pos, value in enumerate(degrees, 1):
            if value < 1:
                raise SequenceError(f"entry {value} is not positive", pos)
        order = sorted(range(len(degrees)), key=lambda i: -degrees[i])
        return cls(tuple(degrees[i] for i in order), tuple(order))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def volume(self) -> int:
        return sum(self.entries)

    def original_order(self) -> list[int]:
        """Entries laid back out in input order."""
        out = [0] * self.n
        for value, pos in zip(self.entries, self.perm):
            out[pos] = value
        return out

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_sequence(self.entries)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"9,5^5,4^2,3^4,2,1^8"`` style text.

    Tokens are separated by commas and/or whitespace; ``a^k`` stands for
    ``k`` copies of ``a``.
    """
    tokens = [t for t in _SPLIT.split(text.strip()) if t]
    if not tokens:
        raise SequenceError("empty sequence")
    degrees: list[int] = []
    for pos, token in enumerate(tokens, 1):
        match = _TOKEN.match(token)
        if match is None:
            raise SequenceError(f"cannot parse {token!r}", pos)
        base = int(match.group(1))
        count = 1 if match.group(2) is None else int(match.group(2))
        if base < 1:
            raise SequenceError(f"entry {base} is not positive", pos)
        if count < 1:
            raise SequenceError(f"exponent {count} is not positive", pos)
        if len(degrees) + count > MAX_ENTRIES:
            raise SequenceError(f"expansion exceeds {MAX_ENTRIES} entries", pos)
        degrees.extend([base] * count)
    return DegreeSequence.from_degrees(degrees)


def format_sequence(entries) -> str:
    """Compact exponent notation, e.g. ``(4,3,2,2,1)`` -> ``"4,3,2^2,1"``."""
    parts = []
    entries = list(entries)
    i = 0
    while i < len(entries):
        j = i
        while j < len(entries) and entries[j] == entries[i]:
            j += 1
        parts.append(str(entries[i]) if j - i == 1 else f"{entries[i]}^{j - i}")
        i = j
    return ",".join(parts)


@dataclass(frozen=True)
class SequenceParams:
    n: int
    volume: int
    m: int
    mult1: int
    mult_odd: int
    beta: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "volume": self.volume,
            "m": self.m,
            "mult1": self.mult1,
            "mult_odd": self.mult_odd,
            "beta": self.beta,
        }


def bridge_parameter(mult1: int, mult_odd: int) -> int:
    """Lower bound on the bridge count of any cactus with these multiplicities."""
    return max(mult1, (mult1 + mult_odd) // 2)


def params(d: DegreeSequence) -> SequenceParams:
    tally = Counter(d.entries)
    volume = sum(k * c for k, c in tally.items())
    mult1 = tally[1]
    mult_odd = sum(c for k, c in tally.items() if k > 1 and k & 1)
    if volume & 1:
        raise OddVolumeError(f"volume {volume} is odd: not a degree sequence")
    # handshake: with an even volume the odd entries pair up
    assert (mult1 + mult_odd) % 2 == 0
    return SequenceParams(
        n=d.n,
        volume=volume,
        m=volume // 2,
        mult1=mult1,
        mult_odd=mult_odd,
        beta=bridge_parameter(mult1, mult_odd),
    )


def cactus_edge_bound(n: int, beta: int) -> int:
    """Most edges a cactus on ``n`` vertices with bridge parameter ``beta`` can have."""
    return (3 * (n - 1) - beta) // 2


def bicactus_edge_bound(n: int, beta: int) -> int:
    """Most edges a bipartite cactus on ``n`` vertices can have."""
    return (4 * (n - 1) - beta) // 3


def bicactus_bridge_bound(n: int, bridges: int) -> int:
    """Edge bound for a bipartite cactus in terms of its actual bridge count."""
    return 2 * ((2 * (n - 1 - bridges)) // 3) + bridges


def technical_identities_hold(n: int, beta: int) -> bool:
    """Check the three floor identities the bipartite bounds rest on.

    Only used as a property-test target; the decision path never calls it.
    """
    at = bicactus_bridge_bound
    identity = bicactus_edge_bound(n, beta) == max(at(n, beta), at(n, beta + 1))
    monotone = at(n, beta) >= at(n, beta + 2)
    halving = ((4 * (n - 1) + 1) // 3) // 2 == (2 * (n - 1)) // 3
    return identity and monotone and halving
