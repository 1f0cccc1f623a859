"""Energy-game semantics: progress measures and the lifting fixpoint.

Energy values live in {0, ..., K} plus a top element.  Internally a value
is a plain int, with K+1 standing for top; this keeps the lifting loop in
cheap integer comparisons while staying exact.  K is the arena's cap
(|V|-1)*W: no finite least progress-measure entry can exceed it, so any
lift past K saturates.

A small energy-progress measure (SEPM) f must, at every Player-0 vertex,
dominate f(v) (-) w(u,v) for SOME successor v, and at every Player-1
vertex for ALL successors, where (-) is truncated subtraction saturating
at 0 below and at top above the cap.  The pointwise-least SEPM is computed
by worklist value iteration: repeatedly lift a violating vertex to the
smallest conforming value.  Its finite region is Player 0's winning region
in the energy game.
"""

from __future__ import annotations

from collections import deque

from .errors import InternalError


def arena_cap(arena):
    """Cap K = (|V|-1)*W for finite energy levels of this arena."""
    return (arena.n - 1) * arena.W


def top_value(cap):
    return cap + 1


def ominus(value, weight, cap):
    """Saturated subtraction: value (-) weight, clamped to [0, cap] + top."""
    if value > cap:
        return cap + 1
    lifted = value - weight
    if lifted <= 0:
        return 0
    if lifted > cap:
        return cap + 1
    return lifted


class EnergyFunction:
    """Total map vertex -> energy value, with its cap and reporting scale.

    Values are ints; ``cap + 1`` encodes top.  Instances are immutable and
    safe to share.
    """

    __slots__ = ("values", "cap", "scale")

    def __init__(self, values, cap, scale=1):
        values = tuple(values)
        for x in values:
            if not (0 <= x <= cap + 1):
                raise InternalError("energy value %r outside [0, cap+1]" % (x,))
        self.values = values
        self.cap = cap
        self.scale = scale

    def value(self, u):
        return self.values[u]

    def is_top(self, u):
        return self.values[u] > self.cap

    def all_finite(self):
        return all(x <= self.cap for x in self.values)

    def finite_vertices(self):
        """V_f, the vertices mapped below top."""
        return tuple(u for u, x in enumerate(self.values) if x <= self.cap)

    def pointwise_le(self, other):
        if self.cap != other.cap:
            raise InternalError("comparing energy functions with unequal caps")
        return all(a <= b for a, b in zip(self.values, other.values))

    def to_json(self, arena):
        return {
            "cap": self.cap,
            "scale": self.scale,
            "values": {arena.names[u]: ("top" if x > self.cap else x)
                       for u, x in enumerate(self.values)},
        }

    def __eq__(self, other):
        if not isinstance(other, EnergyFunction):
            return NotImplemented
        return self.values == other.values and self.cap == other.cap

    def __hash__(self):
        return hash((self.values, self.cap))

    def __repr__(self):
        body = ", ".join("top" if x > self.cap else str(x) for x in self.values)
        return "EnergyFunction([%s], cap=%d)" % (body, self.cap)


def _lift_target(arena, f, cap, u):
    """Smallest value at u satisfying its progress condition under f."""
    reqs = (ominus(f[v], w, cap) for v, w in arena.out[u])
    return min(reqs) if arena.owner[u] == 0 else max(reqs)


def is_sepm(arena, f):
    """Check the progress condition at every vertex."""
    cap = f.cap
    vals = f.values
    for u in range(arena.n):
        if vals[u] < _lift_target(arena, vals, cap, u):
            return False
    return True


def least_sepm(arena, seed=None, cap=None, lift_counter=None):
    """Pointwise-least SEPM by worklist value iteration.

    ``seed`` must lie pointwise below the true least SEPM (a parent
    subgame's least SEPM qualifies, since dropping Player-0 arcs can only
    raise the fixpoint); by default iteration starts from all-zero.  The
    FIFO worklist is seeded and served in vertex declaration order, so the
    run is deterministic.  ``lift_counter``, if given, is a one-element
    list accumulating the number of lift operations (diagnostic only).
    """
    if cap is None:
        cap = arena_cap(arena)
    top = cap + 1
    n = arena.n
    if seed is None:
        f = [0] * n
    else:
        if seed.cap != cap:
            raise InternalError("seed cap %d != cap %d" % (seed.cap, cap))
        f = list(seed.values)
    out = arena.out
    owner = arena.owner
    # For Player-0 vertices, count successors currently satisfying the
    # condition; the vertex is violated exactly when the count is zero.
    count = [0] * n
    queued = [False] * n
    queue = deque()

    def requirement(u, v, w):
        return ominus(f[v], w, cap)

    for u in range(n):
        if owner[u] == 0:
            count[u] = sum(1 for v, w in out[u] if f[u] >= requirement(u, v, w))
            violated = count[u] == 0
        else:
            violated = any(f[u] < requirement(u, v, w) for v, w in out[u])
        if violated:
            queue.append(u)
            queued[u] = True

    lifts = 0
    while queue:
        u = queue.popleft()
        queued[u] = False
        target = _lift_target(arena, f, cap, u)
        if target <= f[u]:
            continue
        old = f[u]
        f[u] = min(target, top)
        lifts += 1
        # u's own condition, evaluated with the new value; a self-loop can
        # leave u violated again immediately.
        if owner[u] == 0:
            count[u] = sum(1 for v, w in out[u] if f[u] >= requirement(u, v, w))
            if count[u] == 0:
                queue.append(u)
                queued[u] = True
        elif any(f[u] < requirement(u, v, w) for v, w in out[u]):
            queue.append(u)
            queued[u] = True
        for p, w in arena.ins[u]:
            if p == u:
                continue  # self-loop already accounted for above
            req_new = ominus(f[u], w, cap)
            if owner[p] == 0:
                req_old = ominus(old, w, cap)
                if req_old <= f[p] < req_new:
                    count[p] -= 1
                    if count[p] == 0 and not queued[p]:
                        queue.append(p)
                        queued[p] = True
            else:
                if f[p] < req_new and not queued[p]:
                    queue.append(p)
                    queued[p] = True
    if lift_counter is not None:
        lift_counter[0] += lifts
    return EnergyFunction(f, cap, arena.scale)


def winning_regions(arena):
    """(W0, W1): vertices where Player 0 does / does not win the energy game.

    W0 is the finite region of the least SEPM, W1 its complement.
    """
    f = least_sepm(arena)
    w0 = frozenset(f.finite_vertices())
    w1 = frozenset(range(arena.n)) - w0
    return w0, w1


def compatible_arcs(arena, f, u):
    """Arcs (u, v) compatible with f at the Player-0 vertex u."""
    cap = f.cap
    return [(u, v) for v, w in arena.out[u]
            if f.values[u] >= ominus(f.values[v], w, cap)]
