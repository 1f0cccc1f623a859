"""Weighted bipartitioned game arenas and their on-disk text format.

An arena is a finite directed graph with integer arc weights whose vertices
are split between Player 0 (maximizer) and Player 1 (minimizer).  Every
vertex must have at least one outgoing arc, so plays never get stuck.

Text format (UTF-8, LF, one statement per line):

    # comment
    v <id> <0|1>          vertex declaration, owner 0 or 1
    e <src> <dst> <int>   arc declaration

Ids match ``[A-Za-z0-9_]+``.  Canonical serialization writes one header
comment, all ``v`` lines in declaration order, then ``e`` lines sorted by
(src, dst) declaration index; parse/serialize round-trips bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ArenaFormatError, MaskError

# Exact rational used for game values and reweightings.
Rational = Fraction

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class Arena:
    """Immutable game graph.

    Vertices are indexed 0..n-1 in declaration order.  ``out[u]`` holds
    ``(dst, weight)`` pairs sorted by destination index; all iteration in
    the package follows this canonical order, making runs reproducible.

    ``scale`` records the denominator accumulated by reweightings, so that
    energy levels computed on this arena are expressed in scaled units.
    """

    __slots__ = ("names", "owner", "out", "scale", "index", "ins", "W")

    def __init__(self, names, owners, arcs, scale=1):
        names = tuple(names)
        owners = tuple(owners)
        if not names:
            raise ArenaFormatError("arena declares no vertices")
        if len(set(names)) != len(names):
            raise ArenaFormatError("duplicate vertex id")
        for name in names:
            if not _ID_RE.match(name):
                raise ArenaFormatError("invalid vertex id %r" % (name,))
        if len(owners) != len(names) or any(o not in (0, 1) for o in owners):
            raise ArenaFormatError("owner must be 0 or 1 for every vertex")
        n = len(names)
        out = [[] for _ in range(n)]
        seen = set()
        for src, dst, w in arcs:
            if not (0 <= src < n and 0 <= dst < n):
                raise ArenaFormatError("arc endpoint out of range")
            if not isinstance(w, int):
                raise ArenaFormatError("arc weight must be an exact integer")
            if (src, dst) in seen:
                raise ArenaFormatError(
                    "duplicate arc %s -> %s" % (names[src], names[dst]))
            seen.add((src, dst))
            out[src].append((dst, w))
        for u in range(n):
            if not out[u]:
                raise ArenaFormatError("vertex %s has no outgoing arc" % names[u])
            out[u].sort()
        ins = [[] for _ in range(n)]
        for u in range(n):
            for v, w in out[u]:
                ins[v].append((u, w))
        self.names = names
        self.owner = owners
        self.out = tuple(tuple(row) for row in out)
        self.ins = tuple(tuple(row) for row in ins)
        self.index = {name: i for i, name in enumerate(names)}
        self.W = max(abs(w) for row in out for _, w in row)
        self.scale = scale

    @property
    def n(self):
        return len(self.names)

    def arcs(self):
        """All arcs as (src, dst, weight) in canonical order."""
        for u in range(self.n):
            for v, w in self.out[u]:
                yield u, v, w

    def arc_count(self):
        return sum(len(row) for row in self.out)

    def vertices_of(self, player):
        return tuple(u for u in range(self.n) if self.owner[u] == player)

    def weight(self, src, dst):
        for v, w in self.out[src]:
            if v == dst:
                return w
        raise KeyError("no arc %s -> %s" % (self.names[src], self.names[dst]))

    def has_arc(self, src, dst):
        return any(v == dst for v, _ in self.out[src])

    def __eq__(self, other):
        if not isinstance(other, Arena):
            return NotImplemented
        return (self.names == other.names and self.owner == other.owner
                and self.out == other.out and self.scale == other.scale)

    def __hash__(self):
        return hash((self.names, self.owner, self.out, self.scale))

    def __repr__(self):
        return "Arena(|V|=%d, |E|=%d, W=%d, scale=%d)" % (
            self.n, self.arc_count(), self.W, self.scale)


class SubgameMask:
    """Restriction of a Player-0 vertex's outgoing arcs.

    Player-1 arcs are always retained.  ``retained`` maps each Player-0
    vertex index to the sorted tuple of destination indices it keeps.
    """

    __slots__ = ("retained",)

    def __init__(self, retained):
        self.retained = dict(retained)

    @classmethod
    def full(cls, arena):
        return cls({u: tuple(v for v, _ in arena.out[u])
                    for u in range(arena.n) if arena.owner[u] == 0})

    def with_restriction(self, u, dsts):
        """New mask keeping only ``dsts`` at Player-0 vertex ``u``."""
        retained = dict(self.retained)
        retained[u] = tuple(sorted(dsts))
        return SubgameMask(retained)

    def key(self):
        """Canonical hashable form, the store index of the subgame."""
        return tuple(sorted((u, tuple(d)) for u, d in self.retained.items()))

    def validate(self, arena):
        p0 = set(arena.vertices_of(0))
        if set(self.retained) != p0:
            raise MaskError("mask must cover exactly the Player-0 vertices")
        for u, dsts in self.retained.items():
            if not dsts:
                raise MaskError(
                    "mask empties out-arcs of %s" % arena.names[u])
            have = {v for v, _ in arena.out[u]}
            for v in dsts:
                if v not in have:
                    raise MaskError("mask keeps missing arc %s -> %s"
                                    % (arena.names[u], arena.names[v]))

    def __eq__(self, other):
        if not isinstance(other, SubgameMask):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "SubgameMask(%r)" % (self.retained,)


def parse_arena(text):
    """Parse the line-based arena format; accepts str or UTF-8 bytes.

    Raises ArenaFormatError with a 1-based line/column for syntax problems,
    unknown endpoints, duplicate arcs and dead-end vertices.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    names, owners = [], []
    index = {}
    arcs = []
    arc_lines = {}
    vertex_line = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "v":
            if len(fields) != 3:
                raise ArenaFormatError("expected 'v <id> <0|1>'", lineno, 1)
            _, name, owner = fields
            if not _ID_RE.match(name):
                raise ArenaFormatError("invalid id %r" % name, lineno,
                                       raw.find(name) + 1)
            if name in index:
                raise ArenaFormatError("vertex %r declared twice" % name,
                                       lineno, raw.find(name) + 1)
            if owner not in ("0", "1"):
                raise ArenaFormatError("owner must be 0 or 1", lineno,
                                       raw.find(owner, raw.find(name)) + 1)
            index[name] = len(names)
            vertex_line[name] = lineno
            names.append(name)
            owners.append(int(owner))
        elif kind == "e":
            if len(fields) != 4:
                raise ArenaFormatError("expected 'e <src> <dst> <int>'",
                                       lineno, 1)
            _, src, dst, weight = fields
            for endpoint in (src, dst):
                if endpoint not in index:
                    raise ArenaFormatError("unknown vertex %r" % endpoint,
                                           lineno, raw.find(endpoint) + 1)
            try:
                w = int(weight)
            except ValueError:
                raise ArenaFormatError("weight %r is not an integer" % weight,
                                       lineno, raw.rfind(weight) + 1) from None
            pair = (index[src], index[dst])
            if pair in arc_lines:
                raise ArenaFormatError("duplicate arc %s -> %s" % (src, dst),
                                       lineno, 1)
            arc_lines[pair] = lineno
            arcs.append((pair[0], pair[1], w))
        else:
            raise ArenaFormatError("unknown statement %r" % kind, lineno, 1)
    if not names:
        raise ArenaFormatError("arena declares no vertices")
    has_out = {src for src, _, _ in arcs}
    for name in names:
        if index[name] not in has_out:
            raise ArenaFormatError("vertex %r has no outgoing arc" % name,
                                   vertex_line[name], 1)
    return Arena(names, owners, arcs)


def serialize_arena(arena):
    """Canonical text for an arena; parse(serialize(a)) == a."""
    lines = ["# mpg arena"]
    for name, owner in zip(arena.names, arena.owner):
        lines.append("v %s %d" % (name, owner))
    for u, v, w in arena.arcs():
        lines.append("e %s %s %d" % (arena.names[u], arena.names[v], w))
    return "\n".join(lines) + "\n"


def reweight(arena, nu):
    """Shift every weight by -nu, scaling to keep weights integral.

    Weight w becomes w*den - num where nu = num/den; the arena's scale is
    multiplied by den so energy levels downstream stay interpretable.
    Python integers are arbitrary precision, so no overflow is possible.
    """
    nu = Fraction(nu)
    den, num = nu.denominator, nu.numerator
    arcs = [(u, v, w * den - num) for u, v, w in arena.arcs()]
    return Arena(arena.names, arena.owner, arcs, scale=arena.scale * den)


def apply_mask(arena, mask):
    """Subgame with Player-0 out-arcs restricted to the mask's choice."""
    mask.validate(arena)
    arcs = []
    for u in range(arena.n):
        if arena.owner[u] == 0:
            keep = set(mask.retained[u])
            arcs.extend((u, v, w) for v, w in arena.out[u] if v in keep)
        else:
            arcs.extend((u, v, w) for v, w in arena.out[u])
    return Arena(arena.names, arena.owner, arcs, scale=arena.scale)


def to_dot(arena):
    """GraphViz export for visualization only; not parsed back."""
    lines = ["digraph arena {"]
    for u, name in enumerate(arena.names):
        shape = "box" if arena.owner[u] == 0 else "circle"
        lines.append('  %s [shape=%s];' % (name, shape))
    for u, v, w in arena.arcs():
        lines.append('  %s -> %s [label="%d"];' % (
            arena.names[u], arena.names[v], w))
    lines.append("}")
    return "\n".join(lines) + "\n"
