"""Labeled graphs, identifier assignments and radius-t views.

A :class:`View` is what a local verifier sees: the distance-t ball around a
root with per-node labels, IDs and (optionally) certificates, stored in a
canonical node order so that two views compare equal exactly when they are
indistinguishable to any verifier.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

from .errors import (
    BadEdge,
    BadLabel,
    DuplicateId,
    EmptyLabels,
    IdOutOfRange,
    UniverseTooLarge,
)

# canonical-encoding field widths
ID_LEN_BITS = 16
INT_LEN_BITS = 16
ARITY_BITS = 8
WORD_LEN_BITS = 16
CERT_LEN_BITS = 16
FLAG_BITS = 1

GLOBAL = "global"
LOCAL = "local"


def default_label_bound(n: int) -> int:
    """Maximum bit length of an integer label field on an n-node graph."""
    return 64 * ((n + 1).bit_length() + 1)


def _is_binary(s: str) -> bool:
    return all(ch in "01" for ch in s)


def int_bits(x: int) -> int:
    """Length of the minimal binary payload of a nonnegative integer."""
    return max(1, x.bit_length())


@dataclass(frozen=True)
class Label:
    """Tuple of nonnegative integers plus an optional binary word."""

    ints: tuple[int, ...] = ()
    word: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "ints", tuple(int(v) for v in self.ints))
        if any(v < 0 for v in self.ints):
            raise BadLabel(f"negative label field in {self.ints}")
        if len(self.ints) >= 1 << ARITY_BITS:
            raise BadLabel("label arity does not fit the 8-bit arity field")
        if self.word is not None:
            if not _is_binary(self.word):
                raise BadLabel(f"label word must be binary, got {self.word!r}")
            if len(self.word) >= 1 << WORD_LEN_BITS:
                raise BadLabel("label word too long for its 16-bit length prefix")

    def __str__(self):
        body = ",".join(map(str, self.ints))
        return f"({body})" if self.word is None else f"({body};{self.word})"


LabelLike = Union[Label, int, Sequence[int]]


def as_label(x: LabelLike) -> Label:
    if isinstance(x, Label):
        return x
    if isinstance(x, int):
        return Label((x,))
    return Label(tuple(x))


@dataclass(frozen=True)
class Configuration:
    """A simple undirected labeled graph on nodes ``0..n-1``."""

    n: int
    edges: frozenset
    labels: tuple[Label, ...]
    _adj: tuple = field(init=False, repr=False, compare=False)
    _dist_cache: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("a configuration needs at least one node")
        if len(self.labels) != n:
            raise BadLabel(f"expected {n} labels, got {len(self.labels)}")
        bound = default_label_bound(n)
        for v, lab in enumerate(self.labels):
            if any(int_bits(x) > bound for x in lab.ints):
                raise BadLabel(f"label of node {v} exceeds {bound} bits")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_dist_cache", {})

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def distances(self, v: int) -> dict[int, int]:
        """BFS distances from ``v`` to every reachable node."""
        d = self._dist_cache.get(v)
        if d is None:
            d = {v: 0}
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in d:
                        d[w] = d[u] + 1
                        queue.append(w)
            self._dist_cache[v] = d
        return d

    def ball(self, v: int, t: int) -> dict[int, int]:
        return {u: d for u, d in self.distances(v).items() if d <= t}

    def is_connected(self) -> bool:
        return len(self.distances(0)) == self.n

    def is_path(self) -> bool:
        if len(self.edges) != self.n - 1 or not self.is_connected():
            return False
        return all(self.degree(v) <= 2 for v in range(self.n))

    def path_order(self) -> list[int]:
        """Nodes of a path listed from its smaller-index endpoint."""
        if not self.is_path():
            raise ValueError("configuration is not a path")
        if self.n == 1:
            return [0]
        start = min(v for v in range(self.n) if self.degree(v) == 1)
        order, prev = [start], None
        while len(order) < self.n:
            cur = order[-1]
            nxt = [w for w in self._adj[cur] if w != prev]
            prev = cur
            order.append(nxt[0])
        return order

    def with_labels(self, labels: Iterable[LabelLike]) -> "Configuration":
        return Configuration(self.n, self.edges, tuple(as_label(x) for x in labels))


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    labels: Sequence[LabelLike],
    words: Mapping[int, str] | None = None,
) -> Configuration:
    seen = set()
    for e in edges:
        u, w = (int(e[0]), int(e[1]))
        if not (0 <= u < n and 0 <= w < n):
            raise BadEdge(f"edge {(u, w)} has an endpoint outside 0..{n - 1}")
        if u == w:
            raise BadEdge(f"self-loop at node {u}")
        key = (min(u, w), max(u, w))
        if key in seen:
            raise BadEdge(f"parallel edge {key}")
        seen.add(key)
    labs = [as_label(x) for x in labels]
    for v, word in (words or {}).items():
        labs[int(v)] = Label(labs[int(v)].ints, word)
    return Configuration(n, frozenset(seen), tuple(labs))


def build_path(labels: Sequence[LabelLike]) -> Configuration:
    """Path ``0 - 1 - ... - (k-1)`` with node i labeled ``labels[i]``."""
    if not labels:
        raise EmptyLabels("a path needs at least one label")
    k = len(labels)
    return build_graph(k, [(i, i + 1) for i in range(k - 1)], labels)


# ---------------------------------------------------------------- identifiers


@dataclass(frozen=True)
class IdAssignment:
    ids: tuple[int, ...]
    mode: str = GLOBAL
    t: int = 0
    universe_bound: int = 0

    def __getitem__(self, v: int) -> int:
        return self.ids[v]

    def __len__(self):
        return len(self.ids)

    @property
    def id_bit_bound(self) -> int:
        return self.universe_bound.bit_length()


def assign_ids(
    cfg: Configuration,
    ids: Sequence[int],
    mode: str = GLOBAL,
    universe_bound: int | None = None,
    t: int = 0,
) -> IdAssignment:
    """Validate ``ids`` under the global- or t-local-uniqueness convention."""
    ids = tuple(int(i) for i in ids)
    if len(ids) != cfg.n:
        raise ValueError(f"expected {cfg.n} ids, got {len(ids)}")
    if universe_bound is None:
        universe_bound = max(ids)
    for v, i in enumerate(ids):
        if not 1 <= i <= universe_bound:
            raise IdOutOfRange(f"id {i} of node {v} outside [1, {universe_bound}]")
    if mode == GLOBAL:
        if len(set(ids)) != len(ids):
            raise DuplicateId(f"ids {ids} are not globally unique")
    elif mode == LOCAL:
        for v in range(cfg.n):
            ball = sorted(cfg.ball(v, t))
            seen = [ids[u] for u in ball]
            if len(set(seen)) != len(seen):
                raise DuplicateId(
                    f"ids repeat inside the radius-{t} ball of node {v}", ball=(v, tuple(ball))
                )
    else:
        raise ValueError(f"unknown id mode {mode!r}")
    return IdAssignment(ids, mode, t, universe_bound)


def consecutive_ids(cfg: Configuration, start: int = 1) -> IdAssignment:
    """IDs growing by one along node index (left to right on built paths)."""
    ids = tuple(range(start, start + cfg.n))
    return IdAssignment(ids, GLOBAL, 0, ids[-1])


class IdUniverse:
    """Restartable stream of ID assignments into ``{1, ..., n + slack}``.

    Global mode yields every injective map in lexicographic order; local mode
    yields every map that is injective on each radius-t ball, also in
    lexicographic order.
    """

    def __init__(self, cfg: Configuration, slack: int = 1, cap: int | None = None,
                 mode: str = GLOBAL, t: int = 0):
        if slack < 0:
            raise ValueError("slack must be nonnegative")
        self.cfg, self.slack, self.mode, self.t = cfg, slack, mode, t
        self.universe_bound = cfg.n + slack
        if mode == GLOBAL:
            self.count = factorial(cfg.n + slack) // factorial(slack)
        else:
            self.count = _count_local(cfg, self.universe_bound, t)
        if cap is not None and self.count > cap:
            raise UniverseTooLarge(f"{self.count} id assignments exceed cap {cap}")

    def __len__(self):
        return self.count

    def __iter__(self) -> Iterator[IdAssignment]:
        U = self.universe_bound
        if self.mode == GLOBAL:
            for perm in itertools.permutations(range(1, U + 1), self.cfg.n):
                yield IdAssignment(perm, GLOBAL, 0, U)
        else:
            for ids in _local_maps(self.cfg, U, self.t):
                yield IdAssignment(ids, LOCAL, self.t, U)


def id_universe(cfg: Configuration, slack: int = 1, cap: int | None = None,
                mode: str = GLOBAL, t: int = 0) -> IdUniverse:
    return IdUniverse(cfg, slack, cap, mode, t)


def _conflicts(cfg: Configuration, t: int) -> list[list[int]]:
    # u, w may not share an id iff some radius-t ball holds both
    out = []
    for u in range(cfg.n):
        out.append([w for w in range(u) if any(
            w in cfg.ball(c, t) for c in cfg.ball(u, t))])
    return out


def _local_maps(cfg: Configuration, U: int, t: int) -> Iterator[tuple[int, ...]]:
    conflicts = _conflicts(cfg, t)
    cur: list[int] = []

    def rec(u):
        if u == cfg.n:
            yield tuple(cur)
            return
        banned = {cur[w] for w in conflicts[u]}
        for i in range(1, U + 1):
            if i not in banned:
                cur.append(i)
                yield from rec(u + 1)
                cur.pop()

    yield from rec(0)


def _count_local(cfg: Configuration, U: int, t: int) -> int:
    return sum(1 for _ in _local_maps(cfg, U, t))


# --------------------------------------------------------------- certificates


@dataclass(frozen=True)
class CertificateAssignment:
    certs: tuple[str, ...]
    bounds: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "certs", tuple(self.certs))
        for c in self.certs:
            if not _is_binary(c):
                raise ValueError(f"certificate {c!r} is not a binary string")
            if len(c) >= 1 << CERT_LEN_BITS:
                raise ValueError("certificate too long for its 16-bit length prefix")
        if self.bounds is not None:
            object.__setattr__(self, "bounds", tuple(self.bounds))
            if len(self.bounds) != len(self.certs):
                raise ValueError("bounds and certificates differ in length")
            for v, (c, b) in enumerate(zip(self.certs, self.bounds)):
                if len(c) > b:
                    raise ValueError(f"certificate of node {v} exceeds its bound {b}")

    def __getitem__(self, v: int) -> str:
        return self.certs[v]

    def __len__(self):
        return len(self.certs)


def _cert_tuple(certs) -> tuple | None:
    if certs is None:
        return None
    if isinstance(certs, CertificateAssignment):
        return certs.certs
    return tuple(certs)


# ---------------------------------------------------------------------- views


class ViewNode(NamedTuple):
    dist: int
    id: int
    label: Label
    cert: str | None


@dataclass(frozen=True)
class View:
    """Radius-t ball around a root in canonical (distance, ID) order.

    Local index 0 is always the root.  ``graph_nodes`` maps local indices back
    to configuration nodes; it is bookkeeping for the engine and takes no part
    in equality, so verifiers cannot tell where in the graph a view came from.
    """

    radius: int
    nodes: tuple[ViewNode, ...]
    adj: tuple[tuple[int, ...], ...]
    graph_nodes: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def root(self) -> ViewNode:
        return self.nodes[0]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def neighbors(self, i: int = 0) -> tuple[int, ...]:
        return self.adj[i]

    @cached_property
    def bits(self) -> int:
        return view_bits(self)

    @cached_property
    def label_bits(self) -> int:
        total = 0
        for node in self.nodes:
            total += int_bits(node.id)
            total += sum(int_bits(x) for x in node.label.ints)
            if node.label.word is not None:
                total += len(node.label.word)
        return total

    @cached_property
    def ids_unique(self) -> bool:
        return len({nd.id for nd in self.nodes}) == len(self.nodes)

    def encode(self) -> str:
        return encode_view(self)

    def with_local_certs(self, certs: Sequence[str | None]) -> "View":
        nodes = tuple(nd._replace(cert=c) for nd, c in zip(self.nodes, certs))
        return View(self.radius, nodes, self.adj, self.graph_nodes)

    def with_certs(self, certs) -> "View":
        """Attach certificates given per configuration node."""
        cs = _cert_tuple(certs)
        if cs is None:
            return self.with_local_certs([None] * len(self.nodes))
        return self.with_local_certs([cs[u] for u in self.graph_nodes])

    def strip_certs(self) -> "View":
        return self.with_local_certs([None] * len(self.nodes))

    def subview(self, i: int, t: int) -> "View":
        """The radius-t view of local node ``i``, computed inside this view.

        Exact whenever ``dist(i) + t <= radius``: every path of length <= t
        from ``i`` stays inside the ball.
        """
        return self.subview_indexed(i, t)[0]

    def subview_indexed(self, i: int, t: int) -> tuple["View", tuple[int, ...]]:
        """Like :meth:`subview`, plus the local index in ``self`` of each node."""
        if self.nodes[i].dist + t > self.radius:
            raise ValueError(
                f"radius-{t} view of a node at distance {self.nodes[i].dist} "
                f"does not fit inside a radius-{self.radius} view")
        dist = {i: 0}
        queue = deque([i])
        while queue:
            u = queue.popleft()
            if dist[u] == t:
                continue
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        gn = self.graph_nodes or tuple(range(len(self.nodes)))
        sub = _make_view(
            t,
            [(dist[u], self.nodes[u].id, self.nodes[u].label, self.nodes[u].cert, u, u)
             for u in dist],
            lambda u: self.adj[u],
        )
        outer = sub.graph_nodes
        return View(t, sub.nodes, sub.adj, tuple(gn[u] for u in outer)), outer


def _make_view(radius, entries, neighbors_of) -> View:
    # entries: (dist, id, label, cert, graph_node, key for neighbors_of)
    entries = sorted(entries, key=lambda e: (e[0], e[1], e[2].ints, e[2].word or "", e[4]))
    pos = {e[5]: k for k, e in enumerate(entries)}
    adj = []
    for e in entries:
        adj.append(tuple(sorted(pos[w] for w in neighbors_of(e[5]) if w in pos)))
    nodes = tuple(ViewNode(e[0], e[1], e[2], e[3]) for e in entries)
    return View(radius, nodes, tuple(adj), tuple(e[4] for e in entries))


def extract_view(
    cfg: Configuration,
    ids: IdAssignment | Sequence[int],
    certs,
    v: int,
    t: int,
) -> View:
    """The canonical radius-t view of node ``v``."""
    if not 0 <= v < cfg.n:
        raise IndexError(f"node {v} not in 0..{cfg.n - 1}")
    if t < 0:
        raise ValueError("radius must be nonnegative")
    id_seq = ids.ids if isinstance(ids, IdAssignment) else tuple(ids)
    cs = _cert_tuple(certs)
    ball = cfg.ball(v, t)
    return _make_view(
        t,
        [(d, id_seq[u], cfg.labels[u], None if cs is None else cs[u], u, u)
         for u, d in ball.items()],
        cfg.neighbors,
    )


def view_bits(view: View) -> int:
    """Length of :func:`encode_view` without building the string."""
    total = 0
    for nd in view.nodes:
        total += ID_LEN_BITS + int_bits(nd.id)
        total += ARITY_BITS + sum(INT_LEN_BITS + int_bits(x) for x in nd.label.ints)
        total += FLAG_BITS
        if nd.label.word is not None:
            total += WORD_LEN_BITS + len(nd.label.word)
        total += FLAG_BITS
        if nd.cert is not None:
            total += CERT_LEN_BITS + len(nd.cert)
    k = len(view.nodes)
    return total + k * (k - 1) // 2


def _fixed(x: int, width: int) -> str:
    if x >= 1 << width:
        raise ValueError(f"{x} does not fit in {width} bits")
    return format(x, f"0{width}b")


def _payload(x: int) -> str:
    return format(x, "b")


def encode_view(view: View) -> str:
    """Canonical bit encoding of a view.

    Per node, in view order: ID with a 16-bit length prefix; 8-bit arity then
    each label integer with a 16-bit length prefix; presence flag plus
    length-prefixed label word; presence flag plus length-prefixed
    certificate.  Then the lower-triangular adjacency matrix, row by row.
    """
    out = []
    for nd in view.nodes:
        p = _payload(nd.id)
        out += [_fixed(len(p), ID_LEN_BITS), p, _fixed(len(nd.label.ints), ARITY_BITS)]
        for x in nd.label.ints:
            p = _payload(x)
            out += [_fixed(len(p), INT_LEN_BITS), p]
        if nd.label.word is None:
            out.append("0")
        else:
            out += ["1", _fixed(len(nd.label.word), WORD_LEN_BITS), nd.label.word]
        if nd.cert is None:
            out.append("0")
        else:
            out += ["1", _fixed(len(nd.cert), CERT_LEN_BITS), nd.cert]
    adjsets = [set(a) for a in view.adj]
    for i in range(len(view.nodes)):
        out.append("".join("1" if j in adjsets[i] else "0" for j in range(i)))
    return "".join(out)


def views_identical(a: View, b: View) -> bool:
    """True iff a root-preserving isomorphism matches every visible field."""
    if a.radius != b.radius or len(a.nodes) != len(b.nodes):
        return False
    if a.ids_unique and b.ids_unique:
        return a.nodes == b.nodes and a.adj == b.adj
    return _isomorphic(a, b)


def _isomorphic(a: View, b: View) -> bool:
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    def to_nx(view):
        g = nx.Graph()
        for i, nd in enumerate(view.nodes):
            g.add_node(i, key=tuple(nd))
        for i, nbrs in enumerate(view.adj):
            g.add_edges_from((i, j) for j in nbrs if j < i)
        return g

    gm = GraphMatcher(to_nx(a), to_nx(b), node_match=lambda x, y: x["key"] == y["key"])
    return gm.is_isomorphic()


# ---------------------------------------------------------------- JSON format


def graph_to_json(cfg: Configuration) -> dict:
    doc = {
        "n": cfg.n,
        "edges": [list(e) for e in sorted(cfg.edges)],
        "labels": [list(lab.ints) for lab in cfg.labels],
    }
    words = {str(v): lab.word for v, lab in enumerate(cfg.labels) if lab.word is not None}
    if words:
        doc["words"] = words
    return doc


def graph_from_json(doc: Mapping) -> Configuration:
    words = {int(k): v for k, v in (doc.get("words") or {}).items()}
    return build_graph(int(doc["n"]), doc.get("edges", []), doc["labels"], words)


def load_graph(path) -> Configuration:
    with open(path) as fh:
        return graph_from_json(json.load(fh))


def dump_graph(cfg: Configuration, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_json(cfg), fh, indent=2, sort_keys=True)
