"""Enumeration of extremal progress measures and basic subgames.

For a nu-valued arena, the optimal positional strategies split into
disjoint blocks, one per *extremal* progress measure: the least feasible
potentials of optimal strategy graphs in the reweighted energy game.  The
recursive enumeration visits subgames obtained by keeping, at one
Player-0 vertex at a time, exactly the arcs that are strictly
incompatible with the current subgame's least progress measure:

  1. compute the least progress measure f of the current subgame and emit
     it if unseen;
  2. for each Player-0 vertex u with a nonempty incompatible arc set E_u,
     form the child keeping only E_u at u; skip children already in the
     store; compute the child's least measure seeded from f; keep the
     child only if that measure is finite everywhere;
  3. recurse into the kept children, last discovered first.

An exact-membership store over canonical arc sets (and value vectors)
guarantees each subgame and each measure is emitted exactly once.  The
visited subgames, root included, form the basic-subgame lattice; taking
least measures is the onto, antitone map to the energy lattice, and it can
identify distinct subgames (degenerate games).
"""

from __future__ import annotations

from . import energy
from .arena import SubgameMask, apply_mask, reweight
from .errors import InternalError, NotNuValuedError
from .potentials import delta_membership, PositionalStrategy

import itertools


def incompatible_arcs(arena, f, u):
    """Arcs (u, v) strictly incompatible with f at the Player-0 vertex u.

    ``arena`` must already carry the reweighting; the test is
    f(u) < f(v) (-) w(u, v) in the saturated algebra.
    """
    cap = f.cap
    return [(u, v) for v, w in arena.out[u]
            if f.values[u] < energy.ominus(f.values[v], w, cap)]


class SubgameStore:
    """Exact-membership index of visited subgames and emitted measures.

    Keys are canonical per-vertex retained-arc tuples for subgames and
    exact value vectors for measures.  Double insertion indicates a broken
    enumeration and raises.
    """

    def __init__(self):
        self._subgames = set()
        self._sepms = set()

    def contains_subgame(self, mask):
        return mask.key() in self._subgames

    def insert_subgame(self, mask):
        key = mask.key()
        if key in self._subgames:
            raise InternalError("subgame inserted twice")
        self._subgames.add(key)

    def contains_sepm(self, f):
        return f.values in self._sepms

    def insert_sepm(self, f):
        if f.values in self._sepms:
            raise InternalError("progress measure inserted twice")
        self._sepms.add(f.values)

    def __len__(self):
        return len(self._subgames)


class SubgameNode:
    """One basic subgame: its mask, its measure, and its discoverers."""

    __slots__ = ("id", "mask", "sepm_id", "parent_ids")

    def __init__(self, node_id, mask, sepm_id, parent_ids):
        self.id = node_id
        self.mask = mask
        self.sepm_id = sepm_id
        self.parent_ids = list(parent_ids)

    def removed_arcs(self, arena):
        """Arcs of the root arena this subgame drops, canonical order."""
        removed = []
        for u in sorted(self.mask.retained):
            kept = set(self.mask.retained[u])
            removed.extend((u, v) for v, _ in arena.out[u] if v not in kept)
        return removed


class EnergyLattice:
    """Extremal progress measures in emission order (root's first)."""

    __slots__ = ("sepms",)

    def __init__(self, sepms):
        self.sepms = list(sepms)

    @property
    def root_sepm(self):
        return self.sepms[0]

    def pointwise_minimum(self):
        mins = list(self.sepms[0].values)
        for f in self.sepms[1:]:
            mins = [min(a, b) for a, b in zip(mins, f.values)]
        return tuple(mins)

    def __len__(self):
        return len(self.sepms)

    def __iter__(self):
        return iter(self.sepms)


class SubgameLattice:
    """Basic subgames with recursion edges and the map to their measures."""

    __slots__ = ("nodes",)

    def __init__(self, nodes):
        self.nodes = list(nodes)

    def phi(self, node_id):
        return self.nodes[node_id].sepm_id

    def edges(self):
        for node in self.nodes:
            for parent in node.parent_ids:
                yield parent, node.id

    def __len__(self):
        return len(self.nodes)


def enumerate_lattice(arena, nu, on_sepm=None, on_subgame=None,
                      seed_children=True):
    """Enumerate the energy lattice and basic subgames of a nu-valued arena.

    Returns (EnergyLattice, SubgameLattice).  ``on_sepm(sepm_id, f)`` and
    ``on_subgame(node)`` stream each element exactly once, at discovery.
    Children's measure computations are seeded with the parent's energy
    levels unless ``seed_children`` is false (the unseeded mode exists for
    differential testing).  Raises NotNuValuedError when the root's least
    measure is not finite everywhere, the detectable symptom of a caller
    breaking the nu-valued precondition.
    """
    scaled = reweight(arena, nu)
    cap = energy.arena_cap(scaled)
    root_f = energy.least_sepm(scaled, cap=cap)
    if not root_f.all_finite():
        raise NotNuValuedError("reweighted arena is not everywhere winning; "
                               "input is not %s-valued" % (nu,))
    p0 = scaled.vertices_of(0)
    store = SubgameStore()
    sepms = []
    sepm_ids = {}
    nodes = []

    def emit_sepm(f):
        sepm_id = sepm_ids.get(f.values)
        if sepm_id is None:
            sepm_id = len(sepms)
            sepm_ids[f.values] = sepm_id
            store.insert_sepm(f)
            sepms.append(f)
            if on_sepm is not None:
                on_sepm(sepm_id, f)
        return sepm_id

    def emit_node(mask, f, parent_ids):
        node = SubgameNode(len(nodes), mask, emit_sepm(f), parent_ids)
        store.insert_subgame(mask)
        nodes.append(node)
        if on_subgame is not None:
            on_subgame(node)
        return node

    node_index = {}  # mask key -> node id, for parent links on re-discovery
    root_mask = SubgameMask.full(scaled)
    root = emit_node(root_mask, root_f, [])
    node_index[root_mask.key()] = root.id

    # Explicit stack mirroring the recursion: children are pushed in
    # declaration order and expanded last-first.
    pending = [(root.id, root_f)]
    while pending:
        node_id, f = pending.pop()
        mask = nodes[node_id].mask
        subgame = apply_mask(scaled, mask)
        for u in p0:
            cut = incompatible_arcs(subgame, f, u)
            if not cut:
                continue
            child_mask = mask.with_restriction(u, [v for _, v in cut])
            key = child_mask.key()
            if store.contains_subgame(child_mask):
                known = nodes[node_index[key]]
                if node_id not in known.parent_ids:
                    known.parent_ids.append(node_id)
                continue
            child = apply_mask(scaled, child_mask)
            child_f = energy.least_sepm(
                child, seed=f if seed_children else None, cap=cap)
            if not child_f.all_finite():
                continue  # Player 0 no longer wins everywhere: pruned
            node = emit_node(child_mask, child_f, [node_id])
            node_index[key] = node.id
            pending.append((node.id, child_f))
    return EnergyLattice(sepms), SubgameLattice(nodes)


class DeltaBlock:
    """One block of the optimal-strategy decomposition."""

    __slots__ = ("sepm_id", "count", "strategies")

    def __init__(self, sepm_id, count, strategies):
        self.sepm_id = sepm_id
        self.count = count
        self.strategies = list(strategies)

    @property
    def truncated(self):
        return self.count > len(self.strategies)


def decompose(arena, nu, lattice, max_listed=None):
    """Split the optimal strategies into one block per extremal measure.

    Candidates for a measure f are the Cartesian product of f-compatible
    arcs per Player-0 vertex.  For the root's least measure every candidate
    belongs to the block, so its count is the plain product; other blocks
    filter candidates by comparing the candidate's least feasible potential
    with f.  Counts are always exact; listed strategies are truncated at
    ``max_listed`` (None lists everything).
    """
    scaled = reweight(arena, nu)
    p0 = scaled.vertices_of(0)
    blocks = []
    for sepm_id, f in enumerate(lattice.sepms):
        pools = []
        for u in p0:
            arcs = energy.compatible_arcs(scaled, f, u)
            pools.append([v for _, v in arcs])
        if sepm_id == 0:
            count = 1
            for pool in pools:
                count *= len(pool)
            listed = []
            for picks in itertools.product(*pools):
                if max_listed is not None and len(listed) >= max_listed:
                    break
                choice = [None] * scaled.n
                for u, v in zip(p0, picks):
                    choice[u] = v
                listed.append(PositionalStrategy(choice))
            blocks.append(DeltaBlock(sepm_id, count, listed))
            continue
        count = 0
        listed = []
        for picks in itertools.product(*pools):
            choice = [None] * scaled.n
            for u, v in zip(p0, picks):
                choice[u] = v
            strategy = PositionalStrategy(choice)
            if delta_membership(scaled, f, strategy):
                count += 1
                if max_listed is None or len(listed) < max_listed:
                    listed.append(strategy)
        blocks.append(DeltaBlock(sepm_id, count, listed))
    return blocks
