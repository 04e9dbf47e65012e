"""Constant-arithmetic realizability predicates, one rule row per family.

Every family is decided from ``n``, the volume, the multiplicities of 1s and
of odd entries, and (for the pseudo-tree families) a couple of order
statistics. The feasibility guard R13 runs first for every family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphcheck import Family
from .seqcore import (
    DegreeSequence,
    SequenceParams,
    bicactus_edge_bound,
    cactus_edge_bound,
    params,
)

RULES = {
    "R1": "forest/tree volume",
    "R2": "unicyclic",
    "R3": "bipartite unicyclic",
    "R4": "bridgeless cactus",
    "R5": "triangulated cactus",
    "R6": "bridgeless bipartite cactus",
    "R7": "core cactus",
    "R8": "core bipartite cactus",
    "R9": "cactus edge bound",
    "R10": "bipartite cactus edge bound",
    "R11": "forcibly bipartite cactus shape",
    "R12": "forcibly bipartite unicyclic shape",
    "R13": "feasibility guard",
}


@dataclass(frozen=True)
class Verdict:
    family: Family
    realizable: bool
    rule: str
    reason: str
    params: SequenceParams | None = None
    bound: int | None = None

    def as_dict(self) -> dict:
        p = self.params
        out = {
            "realizable": self.realizable,
            "rule": self.rule,
            "m": p.m if p else None,
            "beta": p.beta if p else None,
            "bound": self.bound,
        }
        if not self.realizable:
            out["reason"] = self.reason
        return out

    def __bool__(self) -> bool:
        return self.realizable


def _all_even(d: DegreeSequence) -> bool:
    return all(e % 2 == 0 for e in d.entries)


def _at_least_two(d: DegreeSequence, k: int) -> bool:
    """Is the ``k``-th largest entry (1-based) at least 2?"""
    return d.n >= k and d.entries[k - 1] >= 2


def decide(family: Family, d: DegreeSequence) -> Verdict:
    family = Family(family)
    if d.n == 0:
        return Verdict(family, False, "R13", "empty sequence")
    volume = d.volume
    if volume % 2:
        return Verdict(family, False, "R13", f"parity: volume {volume} is odd, so no graph has these degrees")
    p = params(d)
    if d.entries[0] > d.n - 1:
        return Verdict(
            family, False, "R13",
            f"largest entry {d.entries[0]} exceeds n-1 = {d.n - 1}", p,
        )
    return _RULES[family](d, p)


def _verdict(family, ok, rule, why_not, p, bound=None, why=None):
    reason = (why or RULES[rule]) if ok else why_not
    return Verdict(family, ok, rule, reason, p, bound)


def _forest(d, p):
    bound = p.n - 1
    return _verdict(
        Family.FOREST, p.m <= bound, "R1",
        f"m = {p.m} exceeds n-1 = {bound}", p, bound,
    )


def _tree(d, p):
    return _verdict(
        Family.TREE, p.m == p.n - 1, "R1",
        f"a tree needs m = n-1 = {p.n - 1}, got m = {p.m}", p, p.n - 1,
    )


def _unicyclic_reason(d, p):
    if p.m != p.n:
        return f"a unicyclic graph needs m = n = {p.n}, got m = {p.m}"
    if not _at_least_two(d, 3):
        return "fewer than three entries are at least 2, so no cycle fits"
    return None


def _unicyclic(d, p):
    why = _unicyclic_reason(d, p)
    return _verdict(Family.UNICYCLIC, why is None, "R2", why, p)


def _bi_unicyclic_reason(d, p):
    if p.m != p.n:
        return f"a unicyclic graph needs m = n = {p.n}, got m = {p.m}"
    if not _at_least_two(d, 4):
        return "fewer than four entries are at least 2, so no even cycle fits"
    if d.entries[-1] == 2 and p.n % 2:
        return f"all entries are 2 and n = {p.n} is odd: the only realization is an odd cycle"
    return None


def _bi_unicyclic(d, p):
    why = _bi_unicyclic_reason(d, p)
    return _verdict(Family.BI_UNICYCLIC, why is None, "R3", why, p)


def _bridgeless_reason(d, p):
    bound = 3 * (p.n - 1) // 2
    if p.n < 3:
        return f"n = {p.n} is too small for a cycle", bound
    if not _all_even(d):
        return "an odd entry forces a bridge", bound
    if p.m > bound:
        return f"m = {p.m} exceeds floor(3(n-1)/2) = {bound}", bound
    return None, bound


def _bridgeless(d, p):
    why, bound = _bridgeless_reason(d, p)
    return _verdict(Family.BRIDGELESS_CACTUS, why is None, "R4", why, p, bound)


def _triangulated(d, p):
    target = 3 * (p.n - 1)
    if p.n < 3 or p.n % 2 == 0:
        why = f"n = {p.n} is not an odd number >= 3"
    elif not _all_even(d):
        why = "an odd entry forces a bridge"
    elif 2 * p.m != target:
        why = f"2m = {2 * p.m} differs from 3(n-1) = {target}"
    else:
        why = None
    return _verdict(Family.TRIANGULATED_CACTUS, why is None, "R5", why, p, target // 2)


def _bridgeless_bi_reason(d, p):
    bound = 2 * (2 * (p.n - 1) // 3)
    if p.n < 4:
        return f"n = {p.n} is too small for an even cycle", bound
    if not _all_even(d):
        return "an odd entry forces a bridge", bound
    if p.m % 2:
        return f"m = {p.m} is odd, but a union of even cycles has an even edge count", bound
    if p.m > bound:
        return f"m = {p.m} exceeds 2*floor(2(n-1)/3) = {bound}", bound
    return None, bound


def _bridgeless_bi(d, p):
    why, bound = _bridgeless_bi_reason(d, p)
    return _verdict(Family.BRIDGELESS_BICACTUS, why is None, "R6", why, p, bound)


def _disconnected(p):
    return f"m = {p.m} < n-1 = {p.n - 1}, so every realization is disconnected"


def _core(d, p):
    fam = Family.CORE_CACTUS
    if p.m < p.n - 1:
        return _verdict(fam, False, "R7", _disconnected(p), p)
    if p.m == p.n - 1:
        return _verdict(fam, True, "R7", None, p, why="a tree is a core cactus")
    if p.m == p.n:
        why = _unicyclic_reason(d, p)
        return _verdict(fam, why is None, "R7", why, p)
    bound = (3 * (p.n - 1) - p.mult1) // 2
    if p.mult_odd > p.mult1:
        why = f"{p.mult_odd} odd entries > 1 outnumber the {p.mult1} leaves"
    elif p.m > bound:
        why = f"m = {p.m} exceeds floor((3(n-1) - mult1)/2) = {bound}"
    else:
        why = None
    return _verdict(fam, why is None, "R7", why, p, bound)


def _core_bi(d, p):
    fam = Family.CORE_BICACTUS
    if p.m < p.n - 1:
        return _verdict(fam, False, "R8", _disconnected(p), p)
    if p.m == p.n - 1:
        return _verdict(fam, True, "R8", None, p, why="a tree is a core bipartite cactus")
    if p.m == p.n:
        why = _bi_unicyclic_reason(d, p)
        return _verdict(fam, why is None, "R8", why, p)
    if p.mult1 == 0:
        why, bound = _bridgeless_bi_reason(d, p)
        return _verdict(fam, why is None, "R8", why, p, bound)
    bound = (4 * (p.n - 1) - p.mult1) // 3
    if p.mult_odd > p.mult1:
        why = f"{p.mult_odd} odd entries > 1 outnumber the {p.mult1} leaves"
    elif p.m > bound:
        why = f"m = {p.m} exceeds floor((4(n-1) - mult1)/3) = {bound}"
    else:
        why = None
    return _verdict(fam, why is None, "R8", why, p, bound)


def _cactus(d, p):
    fam = Family.CACTUS
    if p.n == 2:
        return _verdict(fam, True, "R9", None, p, why="a single edge")
    bound = cactus_edge_bound(p.n, p.beta)
    if p.m < p.n - 1:
        why = _disconnected(p)
    elif p.m > bound:
        why = f"m = {p.m} exceeds floor((3(n-1) - beta)/2) = {bound}"
    else:
        why = None
    return _verdict(fam, why is None, "R9", why, p, bound)


def _bicactus(d, p):
    fam = Family.BICACTUS
    if p.n == 2:
        return _verdict(fam, True, "R10", None, p, why="a single edge")
    bound = bicactus_edge_bound(p.n, p.beta)
    if p.m < p.n - 1:
        why = _disconnected(p)
    elif p.m > bound:
        why = f"m = {p.m} exceeds floor((4(n-1) - beta)/3) = {bound}"
    elif p.beta == 0 and p.m % 2:
        why = f"all entries are even and m = {p.m} is odd, but even cycles need an even edge count"
    else:
        why = None
    return _verdict(fam, why is None, "R10", why, p, bound)


def is_forcibly_bicactus_shape(entries) -> bool:
    """``(2,2,2,2)``, or two adjacent star centres ``(k, h, 1^(n-2))``, ``h + k = n``."""
    entries = tuple(entries)
    n = len(entries)
    if entries == (2, 2, 2, 2):
        return True
    if n < 2 or any(e != 1 for e in entries[2:]):
        return False
    k, h = entries[0], entries[1]
    return 1 <= h <= k and h + k == n


def _forcibly_bicactus(d, p):
    ok = is_forcibly_bicactus_shape(d.entries)
    return _verdict(
        Family.FORCIBLY_BICACTUS, ok, "R11",
        "some realization is not a bipartite cactus", p,
        why="the only realizations are C4 or two adjacent star centres",
    )


def _forcibly_bi_unicyclic(d, p):
    ok = d.entries == (2, 2, 2, 2)
    return _verdict(
        Family.FORCIBLY_BI_UNICYCLIC, ok, "R12",
        "only (2,2,2,2) forces a bipartite unicyclic realization", p,
        why="C4 is the only realization",
    )


_RULES = {
    Family.FOREST: _forest,
    Family.TREE: _tree,
    Family.UNICYCLIC: _unicyclic,
    Family.BI_UNICYCLIC: _bi_unicyclic,
    Family.BRIDGELESS_CACTUS: _bridgeless,
    Family.TRIANGULATED_CACTUS: _triangulated,
    Family.BRIDGELESS_BICACTUS: _bridgeless_bi,
    Family.CORE_CACTUS: _core,
    Family.CORE_BICACTUS: _core_bi,
    Family.CACTUS: _cactus,
    Family.BICACTUS: _bicactus,
    Family.FORCIBLY_BICACTUS: _forcibly_bicactus,
    Family.FORCIBLY_BI_UNICYCLIC: _forcibly_bi_unicyclic,
}


def explain(v: Verdict) -> str:
    """One line: family, outcome, rule, and the numbers behind it."""
    verb = "realizable" if v.realizable else "not realizable"
    parts = [f"{v.family.value}: {verb} [{v.rule} {RULES[v.rule]}]"]
    if v.params is not None and v.bound is not None and v.rule not in ("R13",):
        p = v.params
        rel = "≤" if p.m <= v.bound else ">"
        parts.append(f"m = {p.m} {rel} {v.bound}")
        parts.append(f"beta = {p.beta}")
    if v.reason != RULES[v.rule]:
        parts.append(v.reason)
    return "; ".join(parts)
