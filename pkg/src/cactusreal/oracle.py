"""Brute-force ground truth over every labeled simple graph on ``n`` vertices.

One pass over the ``2^(n(n-1)/2)`` edge bitmasks classifies each graph with
:func:`graphcheck.profile` and records which positive degree multisets each
family realizes. The pass is split into bitmask chunks that can run in
separate processes and are merged afterwards.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .decide import decide
from .graphcheck import GRAPH_FAMILIES, Family, Graph, profile, verify_realization
from .realize import realize
from .seqcore import (
    DegreeSequence,
    bicactus_edge_bound,
    bridge_parameter,
    cactus_edge_bound,
)

MAX_N = 7
LONG_N = 8
CHUNK_BITS = 12

Multiset = tuple[int, ...]


class OracleRangeError(ValueError):
    pass


def _check_n(n: int, allow_n8: bool = False) -> None:
    top = LONG_N if allow_n8 else MAX_N
    if not 1 <= n <= top:
        hint = " (n = 8 needs allow_n8)" if n == LONG_N else ""
        raise OracleRangeError(f"n = {n} is outside the enumeration range 1..{top}{hint}")


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def decode(n: int, mask: int, pairs=None) -> Graph:
    pairs = pairs or vertex_pairs(n)
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    return Graph(n, edges, check=False)


def enumerate_graphs(n: int, allow_n8: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on ``1..n``, each exactly once."""
    _check_n(n, allow_n8)
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield decode(n, mask, pairs)


def bounded_sequences(n: int, top: int | None = None) -> Iterator[Multiset]:
    """Non-increasing length-``n`` tuples with entries in ``1..top``."""
    top = n - 1 if top is None else top
    if n == 0:
        yield ()
        return

    def rec(prefix, k, cap):
        if k == 0:
            yield tuple(prefix)
            return
        for v in range(cap, 0, -1):
            prefix.append(v)
            yield from rec(prefix, k - 1, v)
            prefix.pop()

    yield from rec([], n, top)


def candidate_sequences(n: int) -> Iterator[Multiset]:
    """Even-volume positive multisets of length ``n`` with entries <= n-1."""
    for seq in bounded_sequences(n):
        if sum(seq) % 2 == 0:
            yield seq


@dataclass
class Census:
    """Merged per-``n`` enumeration results."""

    n: int
    realizable: dict[Family, set[Multiset]] = field(default_factory=dict)
    max_edges: dict[Family, dict[int, int]] = field(default_factory=dict)
    graphic: set[Multiset] = field(default_factory=set)
    # multisets having some realization outside the named family
    escapes: dict[Family, set[Multiset]] = field(default_factory=dict)

    def __post_init__(self):
        for fam in GRAPH_FAMILIES:
            self.realizable.setdefault(fam, set())
            self.max_edges.setdefault(fam, {})
        for fam in (Family.BICACTUS, Family.BI_UNICYCLIC):
            self.escapes.setdefault(fam, set())

    def merge(self, other: Census) -> None:
        for fam in GRAPH_FAMILIES:
            self.realizable[fam] |= other.realizable[fam]
            mine = self.max_edges[fam]
            for beta, m in other.max_edges[fam].items():
                if m > mine.get(beta, -1):
                    mine[beta] = m
        self.graphic |= other.graphic
        for fam in self.escapes:
            self.escapes[fam] |= other.escapes[fam]

    def truth(self, family: Family, seq: Multiset) -> bool:
        if family is Family.FORCIBLY_BICACTUS:
            return seq in self.graphic and seq not in self.escapes[Family.BICACTUS]
        if family is Family.FORCIBLY_BI_UNICYCLIC:
            return seq in self.graphic and seq not in self.escapes[Family.BI_UNICYCLIC]
        return seq in self.realizable[family]


def _scan(args) -> Census:
    n, lo, hi = args
    out = Census(n)
    pairs = vertex_pairs(n)
    npairs = len(pairs)
    # vertex v is covered by the mask iff it touches one of these pair bits
    touch = [0] * (n + 1)
    for i, (u, v) in enumerate(pairs):
        touch[u] |= 1 << i
        touch[v] |= 1 << i
    realizable = out.realizable
    max_edges = out.max_edges
    graphic = out.graphic
    esc_bi = out.escapes[Family.BICACTUS]
    esc_uni = out.escapes[Family.BI_UNICYCLIC]
    families = GRAPH_FAMILIES
    for mask in range(lo, hi):
        if any(not mask & touch[v] for v in range(1, n + 1)):
            continue
        edges = [pairs[i] for i in range(npairs) if mask >> i & 1]
        g = Graph(n, edges, check=False)
        deg = g.degrees()
        key = tuple(sorted(deg, reverse=True))
        graphic.add(key)
        prof = profile(g)
        ones = deg.count(1)
        odd = sum(1 for x in deg if x > 1 and x & 1)
        beta = bridge_parameter(ones, odd)
        m = len(edges)
        member = {}
        for fam in families:
            ok = prof.member(fam)
            member[fam] = ok
            if ok:
                realizable[fam].add(key)
                row = max_edges[fam]
                if m > row.get(beta, -1):
                    row[beta] = m
        if not member[Family.BICACTUS]:
            esc_bi.add(key)
        if not member[Family.BI_UNICYCLIC]:
            esc_uni.add(key)
    return out


_CACHE: dict[int, Census] = {}


def census(n: int, jobs: int | None = None, allow_n8: bool = False) -> Census:
    """Enumerate and classify every graph on ``n`` vertices (memoized per ``n``)."""
    _check_n(n, allow_n8)
    if n in _CACHE:
        return _CACHE[n]
    total = 1 << (n * (n - 1) // 2)
    step = min(total, 1 << CHUNK_BITS)
    chunks = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    jobs = jobs or int(os.environ.get("CACTUSREAL_JOBS", "1"))
    result = Census(n)
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan, chunks):
                result.merge(part)
    else:
        for chunk in chunks:
            result.merge(_scan(chunk))
    _CACHE[n] = result
    return result


def realizable_set(family: Family, n: int, jobs: int | None = None) -> set[Multiset]:
    if family.is_forcibly:
        raise ValueError("forcibly families are sequence properties; use crosscheck")
    return set(census(n, jobs).realizable[family])


@dataclass
class CensusReport:
    family: Family
    n: int
    candidates: int
    realizable_multisets: set[Multiset]
    mismatches: list[tuple[Multiset, bool, bool]]
    witness_failures: list[Multiset]
    max_edges_seen: dict[int, int]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.witness_failures

    def as_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "candidates": self.candidates,
            "realizable": len(self.realizable_multisets),
            "realizable_multisets": [list(s) for s in sorted(self.realizable_multisets, reverse=True)],
            "mismatches": [
                {"sequence": list(s), "decide": dv, "oracle": ov}
                for s, dv, ov in self.mismatches
            ],
            "witness_failures": [list(s) for s in self.witness_failures],
            "max_edges_seen": {str(b): m for b, m in sorted(self.max_edges_seen.items())},
        }


def crosscheck(
    family: Family,
    n: int,
    jobs: int | None = None,
    allow_n8: bool = False,
    witnesses: bool = True,
) -> CensusReport:
    """Compare :func:`decide` with enumeration on every candidate multiset.

    With ``witnesses`` every accepted multiset is also realized and the
    construction is run through :func:`verify_realization`.
    """
    cen = census(n, jobs, allow_n8)
    mismatches = []
    failures = []
    found = set()
    count = 0
    for seq in candidate_sequences(n):
        count += 1
        d = DegreeSequence(seq, tuple(range(n)))
        said = decide(family, d).realizable
        truth = cen.truth(family, seq)
        if truth:
            found.add(seq)
        if said != truth:
            mismatches.append((seq, said, truth))
        if said and witnesses:
            try:
                g = realize(family, d)
                good = verify_realization(family, d, g)
            except Exception:
                good = False
            if not good:
                failures.append(seq)
    edges = {} if family.is_forcibly else dict(cen.max_edges[family])
    return CensusReport(family, n, count, found, mismatches, failures, edges)


def bound_tightness(family: Family, n: int, jobs: int | None = None) -> list[tuple[int, int, int]]:
    """``(beta, most edges seen, bound)`` for each ``beta`` among family members."""
    if family.is_forcibly:
        raise ValueError("bound tables are defined for graph families only")
    cen = census(n, jobs)
    bound = bicactus_edge_bound if family.bipartite else cactus_edge_bound
    return [(b, m, bound(n, b)) for b, m in sorted(cen.max_edges[family].items())]
