"""Linear-time witness construction for every family.

Each constructive induction is run forwards: a primitive step emits a few
edges, removes the vertices it finishes, and lowers one target's residual
degree, leaving a smaller residual sequence that still satisfies the
family's condition. Every emitted edge has at least one endpoint that leaves
the residual at that moment, so no edge can be emitted twice.
"""

from __future__ import annotations

from array import array
from collections import Counter

import numpy as np

from .decide import Verdict, decide
from .graphcheck import Family, Graph
from .seqcore import DegreeSequence


class NotRealizableError(ValueError):
    def __init__(self, verdict: Verdict):
        super().__init__(f"{verdict.family.value}: {verdict.reason}")
        self.verdict = verdict


class RealizationError(RuntimeError):
    """A construction step found the residual in a state the proofs exclude."""


class RealizationState:
    """Residual degrees plus bucket selectors; vertices are canonical indices.

    Buckets are stacks indexed by residual degree with lazy deletion: an
    entry ``v`` in bucket ``k`` is live only while ``residual[v] == k``.
    Residual degrees only go down, so a vertex enters each bucket at most
    once and all selector scans are amortized linear.

    Repeated primitive steps onto one target run as a batch; ``steps``
    still counts each primitive separately.
    """

    def __init__(self, degrees):
        res = list(degrees)
        n = len(res)
        tally = Counter(res)
        top = max(tally, default=0)
        self.residual = res
        self.n = n
        self.alive = n - tally[0]
        self.volume = sum(res)
        self.count = [tally[k] for k in range(top + 2)]
        buckets: list[list[int]] = [[] for _ in range(top + 2)]
        # smallest index on top of every stack
        if res == sorted(res, reverse=True):
            lo = 0
            for k in range(top, -1, -1):
                hi = lo + tally[k]
                buckets[k] = list(range(hi - 1, lo - 1, -1))
                lo = hi
        else:
            for v in range(n - 1, -1, -1):
                buckets[res[v]].append(v)
        self.buckets = buckets
        self.mult_odd = sum(c for k, c in tally.items() if k > 1 and k & 1)
        self._max = top
        self._odd = 3
        self.us: list[int] = []
        self.vs: list[int] = []
        self.steps = 0
        self.corrections = 0

    # -- bookkeeping -----------------------------------------------------

    @property
    def mult1(self) -> int:
        return self.count[1]

    @property
    def m(self) -> int:
        return self.volume // 2

    def _lower(self, v: int, by: int) -> None:
        r = self.residual[v]
        k = r - by
        if k < 0:
            raise RealizationError(f"vertex {v} would go below zero")
        self.residual[v] = k
        self.volume -= by
        self.count[r] -= 1
        if r > 1 and r & 1:
            self.mult_odd -= 1
        if k == 0:
            self.alive -= 1
            return
        self.count[k] += 1
        self.buckets[k].append(v)
        if k > 1 and k & 1:
            self.mult_odd += 1
            if k < self._odd:
                self._odd = k

    def _finish(self, vs: list[int], k: int) -> None:
        """Saturate ``vs``, all of which have residual ``k``."""
        res = self.residual
        for v in vs:
            res[v] = 0
        c = len(vs)
        self.count[k] -= c
        self.alive -= c
        self.volume -= k * c
        if k > 1 and k & 1:
            self.mult_odd -= c

    def _take(self, k: int, avoid: int, how_many: int) -> list[int]:
        """Pop ``how_many`` live vertices of residual ``k``, skipping ``avoid``.

        Smallest index first among a fresh bucket.
        """
        bucket = self.buckets[k]
        res = self.residual
        held = res[avoid] == k if 0 <= avoid < self.n else False
        out: list[int] = []
        while len(out) < how_many:
            need = how_many - len(out)
            if not bucket:
                if held:
                    bucket.append(avoid)
                raise RealizationError(f"need {how_many} vertices of residual degree {k}")
            chunk = bucket[-need:]
            del bucket[-need:]
            chunk.reverse()
            out += [v for v in chunk if res[v] == k and v != avoid]
        if held and res[avoid] == k:
            bucket.append(avoid)
        return out

    def _peek(self, k: int) -> int | None:
        bucket = self.buckets[k]
        res = self.residual
        while bucket and res[bucket[-1]] != k:
            bucket.pop()
        return bucket[-1] if bucket else None

    def max_vertex(self) -> int:
        while self._max > 0:
            v = self._peek(self._max)
            if v is not None:
                return v
            self._max -= 1
        raise RealizationError("residual is empty")

    def smallest_odd(self) -> int:
        if self.mult_odd == 0:
            raise RealizationError("no odd residual degree above 1")
        k = self._odd
        top = len(self.buckets) - 1
        while k <= top:
            v = self._peek(k)
            if v is not None:
                self._odd = k
                return v
            k += 2
        raise RealizationError("odd-degree bookkeeping out of sync")

    def live(self) -> list[int]:
        return [v for v, r in enumerate(self.residual) if r > 0]

    # -- primitive steps -------------------------------------------------

    def attach_leaf(self, target: int, times: int = 1) -> None:
        """Hang ``times`` residual-1 vertices off ``target``."""
        if self.residual[target] < times:
            raise RealizationError(f"target {target} has residual below {times}")
        leaves = self._take(1, target, times)
        self.us += [target] * times
        self.vs += leaves
        self._finish(leaves, 1)
        self._lower(target, times)
        self.steps += times

    def _attach_cycles(self, target: int, size: int, times: int) -> None:
        r = self.residual[target]
        if r < 2 * times + 1:
            # a residual-2 target would leave with the cycle: that is close_cycle
            raise RealizationError(f"target {target} has residual {r}, needs {2 * times + 1}")
        k = size - 1
        inner = self._take(2, target, k * times)
        hub = [target] * times
        paths = [inner[i::k] for i in range(k)]
        us, vs = self.us, self.vs
        us += hub
        vs += paths[0]
        for a, b in zip(paths, paths[1:]):
            us += a
            vs += b
        us += paths[-1]
        vs += hub
        self._finish(inner, 2)
        self._lower(target, 2 * times)
        self.steps += times

    def attach_triangle(self, target: int, times: int = 1) -> None:
        """Close ``times`` triangles through ``target``, two residual-2 vertices each."""
        self._attach_cycles(target, 3, times)

    def attach_c4(self, target: int, times: int = 1) -> None:
        """Close ``times`` 4-cycles through ``target``, three residual-2 vertices each."""
        self._attach_cycles(target, 4, times)

    def attach_correction_path(self, target: int) -> None:
        """Hang a leaf off ``target`` through a residual-2 vertex (two bridges)."""
        if self.residual[target] < 1:
            raise RealizationError(f"target {target} is already saturated")
        if self.count[1] == 0:
            raise RealizationError("no residual-1 vertex for the correction path")
        (w,) = self._take(2, target, 1)
        (leaf,) = self._take(1, target, 1)
        self.us += (target, w)
        self.vs += (w, leaf)
        self._lower(w, 2)
        self._lower(leaf, 1)
        self._lower(target, 1)
        self.steps += 1
        self.corrections += 1

    def leaves_to_smallest_odd(self, q: int) -> None:
        """``q`` leaf steps, each onto the current smallest odd residual."""
        if q <= 0:
            return
        if self.mult_odd < q or self.count[1] < q:
            raise RealizationError(f"cannot run {q} odd-target leaf steps")
        res, buckets, count = self.residual, self.buckets, self.count
        targets: list[int] = []
        k = self._odd
        while len(targets) < q:
            bucket = buckets[k]
            if not bucket:
                k += 2
                continue
            want = q - len(targets)
            chunk = bucket[-want:]
            del bucket[-want:]
            chunk.reverse()
            chunk = [v for v in chunk if res[v] == k]
            low = k - 1
            for v in chunk:
                res[v] = low
            buckets[low] += chunk
            count[k] -= len(chunk)
            count[low] += len(chunk)
            targets += chunk
        self._odd = k
        self.mult_odd -= q
        self.volume -= q
        leaves = self._take(1, -1, q)
        self.us += targets
        self.vs += leaves
        self._finish(leaves, 1)
        self.steps += q

    def close_cycle(self, vs) -> None:
        """Join residual-2 vertices ``vs`` into one cycle in the given order."""
        vs = list(vs)
        if len(vs) < 3:
            raise RealizationError(f"a cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise RealizationError("cycle vertices repeat")
        res = self.residual
        if any(res[v] != 2 for v in vs):
            raise RealizationError("cycle vertex without residual 2")
        self.us += vs[-1:] + vs[:-1]
        self.vs += vs
        self._finish(vs, 2)
        self.steps += 1

    def link(self, u: int, v: int) -> None:
        """Plain edge between two live vertices (spine edges of a caterpillar)."""
        if u == v or self.residual[u] < 1 or self.residual[v] < 1:
            raise RealizationError(f"cannot link {u} and {v}")
        self.us.append(u)
        self.vs.append(v)
        self._lower(u, 1)
        self._lower(v, 1)

    def remaining_twos(self) -> list[int]:
        """Drain every live vertex, which must all have residual 2."""
        if self.count[2] != self.alive:
            raise RealizationError("residual is not all 2s")
        res = self.residual
        bucket = self.buckets[2]
        out = [v for v in reversed(bucket) if res[v] == 2]
        # a vertex can sit in the bucket twice only if it left and came back,
        # which never happens since residuals only decrease
        bucket.clear()
        return out


# -- schedules --------------------------------------------------------------


def _caterpillar(s: RealizationState) -> None:
    """Forest: spine of all entries >= 2 in order, original leaves hung on
    it, leftover leaves paired into single edges."""
    res = s.residual
    spine = [v for v in range(s.n) if res[v] >= 2]
    # spine links keep both ends live, so leaves come from this fixed list
    # rather than the residual-1 bucket
    leaves = [v for v in range(s.n) if res[v] == 1]
    last = len(spine) - 1
    need = [res[v] - (i > 0) - (i < last) for i, v in enumerate(spine)]
    used = sum(need)
    if used > len(leaves) or (len(leaves) - used) % 2:
        raise RealizationError("leaf count does not fit the caterpillar")
    hubs: list[int] = []
    for v, k in zip(spine, need):
        hubs += [v] * k
    s.us += hubs
    s.vs += leaves[:used]
    s.us += spine[:-1]
    s.vs += spine[1:]
    rest = leaves[used:]
    s.us += rest[0::2]
    s.vs += rest[1::2]
    for v in spine:
        s.count[res[v]] -= 1
        if res[v] > 1 and res[v] & 1:
            s.mult_odd -= 1
        res[v] = 0
    s.alive -= len(spine)
    s._finish(leaves, 1)
    s.volume = 0
    s.steps += len(spine) + len(rest) // 2


def _unicyclic(s: RealizationState) -> None:
    """Closed caterpillar: leaves onto the largest residual, then one cycle."""
    while s.count[1]:
        t = s.max_vertex()
        # the target stays on the cycle, so it keeps residual 2
        s.attach_leaf(t, max(1, min(s.count[1], s.residual[t] - 2)))
    s.close_cycle(s.remaining_twos())


def _bi_unicyclic(s: RealizationState) -> None:
    while True:
        if s.count[2] == s.alive:
            if s.alive % 2:
                raise RealizationError("odd all-2 residual in a bipartite schedule")
            break
        if (s.alive % 2 == 0 and s.count[1] == 1 and s.count[3] == 1
                and s.count[2] == s.alive - 2):
            # (3, 2^(k-2), 1): put a 2 between the leaf and the 3
            s.attach_correction_path(s.smallest_odd())
            break
        t = s.max_vertex()
        # the last leaf is placed singly so the base case above can see it
        s.attach_leaf(t, max(1, min(s.count[1] - 1, s.residual[t] - 3)))
    s.close_cycle(s.remaining_twos())


def _bridgeless(s: RealizationState, size: int) -> int:
    """Triangles (or 4-cycles) onto every residual >= 4 vertex, then one cycle.

    Any target with residual >= 4 keeps the bridgeless condition, so the
    whole phase runs as one batch: targets in descending residual order,
    inner vertices drawn from the residual-2 pool, and each finished target
    joining the back of that pool. Returns the length of the last cycle.
    """
    if s.count[1] or s.mult_odd:
        raise RealizationError("bridgeless phase needs an all-even residual")
    res, buckets = s.residual, s.buckets
    targets: list[int] = []
    cycles: list[int] = []
    for k in range(len(buckets) - 1, 3, -1):
        if not s.count[k]:
            continue
        live = [v for v in reversed(buckets[k]) if res[v] == k]
        buckets[k].clear()
        targets += live
        cycles += [(k - 2) // 2] * len(live)
    pool = [v for v in reversed(buckets[2]) if res[v] == 2]
    buckets[2].clear()
    total = sum(cycles)
    step = size - 1
    need = step * total
    order = pool + targets
    # Target i may be an inner vertex only after its own cycles. The slack
    # len(pool) + i - (inner vertices used so far) drops by at least one per
    # target, so checking the final cycle size covers every prefix.
    if len(order) - need < 3:
        raise RealizationError("final cycle would have fewer than 3 vertices")
    if len(order) != s.alive:
        raise RealizationError("bridgeless phase left vertices out")
    inner, twos = order[:need], order[need:]
    hubs: list[int] = []
    for t, c in zip(targets, cycles):
        if c == 1:
            hubs.append(t)
        else:
            hubs += [t] * c
    paths = [inner[i::step] for i in range(step)]
    us, vs = s.us, s.vs
    us += hubs
    vs += paths[0]
    for x, y in zip(paths, paths[1:]):
        us += x
        vs += y
    us += paths[-1]
    vs += hubs
    # every live vertex is in order, so the residual empties
    res[:] = [0] * len(res)
    s.count = [0] * len(s.count)
    s.alive = 0
    s.volume = 0
    s.steps += total
    if size == 4 and len(twos) % 2:
        raise RealizationError("odd final cycle in a bipartite schedule")
    us += twos[-1:] + twos[:-1]
    vs += twos
    s.steps += 1
    return len(twos)


def _pairs_onto_max(s: RealizationState, spare: int) -> bool:
    """Hang leaf pairs on residual >= 4 vertices, largest first, keeping
    each target at residual >= 2, until only ``spare`` leaves remain.

    Returns False when no pair fits and the caller should step singly.
    """
    left = (s.count[1] - spare) // 2
    res, buckets = s.residual, s.buckets
    plan: list[tuple[int, int]] = []
    k = min(s._max, len(buckets) - 1)
    while left > 0 and k >= 4:
        if s.count[k]:
            for v in reversed(buckets[k]):
                if res[v] != k:
                    continue
                p = min(left, (k - 2) // 2)
                plan.append((v, p))
                left -= p
                if not left:
                    break
        k -= 1
    if not plan:
        return False
    total = sum(p for _, p in plan)
    leaves = s._take(1, -1, 2 * total)
    hubs: list[int] = []
    for t, p in plan:
        hubs += [t] * (2 * p)
    s.us += hubs
    s.vs += leaves
    s._finish(leaves, 1)
    for t, p in plan:
        s._lower(t, 2 * p)
    s.steps += 2 * total
    return True


def _core_cactus(s: RealizationState) -> None:
    s.leaves_to_smallest_odd(s.mult_odd)
    while s.count[1]:
        if not _pairs_onto_max(s, 0):
            t = s.max_vertex()
            s.attach_leaf(t)
            s.attach_leaf(t)
    _bridgeless(s, 3)


def _core_bicactus(s: RealizationState) -> None:
    while s.count[1] or s.mult_odd:
        if s.mult_odd:
            s.leaves_to_smallest_odd(min(s.mult_odd, s.count[1] - 1))
            if not s.mult_odd:
                continue
            j = s.smallest_odd()
            if s.count[1] == 1 and s.m % 2 == 0:
                s.attach_correction_path(j)
            else:
                s.attach_leaf(j)
        elif not _pairs_onto_max(s, 2):
            t = s.max_vertex()
            if s.count[1] == 2 and s.m % 2 == 1:
                s.attach_correction_path(t)
            else:
                s.attach_leaf(t)
            s.attach_leaf(t)
    _bridgeless(s, 4)


def _odd_cycles(s: RealizationState, attach) -> None:
    """Cycles onto the smallest odd residual until it drops to 1."""
    j = s.smallest_odd()
    attach(j, (s.residual[j] - 1) // 2)


def _cactus(s: RealizationState) -> None:
    while True:
        if s.volume == 2 * s.alive:
            _unicyclic(s)
            return
        if s.count[1] == 0 and s.mult_odd == 0:
            _bridgeless(s, 3)
            return
        if s.mult_odd <= s.count[1]:
            _core_cactus(s)
            return
        if s.count[1]:
            # leaf steps keep mult_odd - mult1 fixed, so they all run at once
            s.leaves_to_smallest_odd(s.count[1])
        else:
            _odd_cycles(s, s.attach_triangle)


def _bicactus(s: RealizationState) -> None:
    while True:
        if s.volume == 2 * s.alive:
            _bi_unicyclic(s)
            return
        if s.count[1] == 0 and s.mult_odd == 0:
            _bridgeless(s, 4)
            return
        if s.mult_odd < s.count[1]:
            _core_bicactus(s)
            return
        if s.count[1] > 1:
            s.leaves_to_smallest_odd(s.count[1] - 1)
        elif s.count[1]:
            j = s.smallest_odd()
            # a plain leaf would leave an all-even residual with an odd edge count
            if s.mult_odd == 1 and s.m % 2 == 0:
                s.attach_correction_path(j)
            else:
                s.attach_leaf(j)
        else:
            _odd_cycles(s, s.attach_c4)


def _tree_or(schedule):
    def run(s: RealizationState) -> None:
        if s.volume == 2 * s.n - 2:
            _caterpillar(s)
        else:
            schedule(s)
    return run


def _core_cactus_top(s: RealizationState) -> None:
    if s.volume == 2 * s.n:
        _unicyclic(s)
    else:
        _core_cactus(s)


def _core_bicactus_top(s: RealizationState) -> None:
    if s.volume == 2 * s.n:
        _bi_unicyclic(s)
    else:
        _core_bicactus(s)


def _triangulated(s: RealizationState) -> None:
    if _bridgeless(s, 3) != 3:
        raise RealizationError("triangulated schedule left a non-triangle cycle")


_SCHEDULES = {
    Family.FOREST: _caterpillar,
    Family.TREE: _caterpillar,
    Family.UNICYCLIC: _unicyclic,
    Family.BI_UNICYCLIC: _bi_unicyclic,
    Family.BRIDGELESS_CACTUS: lambda s: _bridgeless(s, 3),
    Family.TRIANGULATED_CACTUS: _triangulated,
    Family.BRIDGELESS_BICACTUS: lambda s: _bridgeless(s, 4),
    Family.CORE_CACTUS: _tree_or(_core_cactus_top),
    Family.CORE_BICACTUS: _tree_or(_core_bicactus_top),
    Family.CACTUS: _tree_or(_cactus),
    Family.BICACTUS: _tree_or(_bicactus),
    Family.FORCIBLY_BICACTUS: _tree_or(_bicactus),
    Family.FORCIBLY_BI_UNICYCLIC: _bi_unicyclic,
}


def construct(family: Family, d: DegreeSequence, check: bool = True) -> RealizationState:
    """Run the family's schedule and return the finished state.

    Edges in the state use canonical (sorted) positions; :func:`realize`
    maps them back to input positions.
    """
    family = Family(family)
    if check:
        verdict = decide(family, d)
        if not verdict.realizable:
            raise NotRealizableError(verdict)
    s = RealizationState(d.entries)
    _SCHEDULES[family](s)
    if s.alive or s.volume:
        raise RealizationError(f"{s.alive} vertices left unsaturated")
    return s


def _int_array(values) -> np.ndarray:
    # going through array('q') is noticeably faster than np.asarray on a list
    return np.frombuffer(array("q", values), dtype=np.int64)


def realize(family: Family, d: DegreeSequence) -> Graph:
    """A graph in ``family`` whose vertex ``i`` has the ``i``-th input degree."""
    s = construct(family, d)
    perm = _int_array(d.perm)
    a = perm[_int_array(s.us)]
    b = perm[_int_array(s.vs)]
    # input positions are 0-based, vertex labels 1-based
    lo = np.minimum(a, b) + 1
    hi = np.maximum(a, b) + 1
    return Graph.from_columns(d.n, lo, hi)
