"""Immutable finite posets: construction, order queries, products, isomorphism."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence


class PosetError(Exception):
    pass


class CycleError(PosetError):
    """The input cover relation contains a directed cycle."""


class NotGradedError(PosetError):
    """A rank-based operation was applied to an ungraded poset."""


def _bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class Poset:
    """A finite poset over elements 0..n-1 with string labels.

    The order is stored two ways: `covers` is the transitive reduction
    (pairs (a, b) with b covering a) and `leq_rows[i]` is a bitmask of
    every j with i <= j (reflexive closure). `ranks`/`max_rank` are set
    iff the poset is graded, meaning all maximal chains have the same
    number of elements; ranks start at 0 on minimal elements and rise
    by 1 along covers. `multichains` is populated by chain_poset with
    the tuple of base elements behind each element, None otherwise.
    """

    __slots__ = (
        "labels",
        "n",
        "covers",
        "up",
        "down",
        "leq_rows",
        "ranks",
        "max_rank",
        "multichains",
        "_label_index",
    )

    def __init__(
        self,
        labels: tuple[str, ...],
        covers: frozenset[tuple[int, int]],
        leq_rows: tuple[int, ...],
        ranks: tuple[int, ...] | None,
        max_rank: int | None,
        multichains: tuple[tuple[int, ...], ...] | None = None,
    ):
        self.labels = labels
        self.n = len(labels)
        self.covers = covers
        up: list[list[int]] = [[] for _ in labels]
        down: list[list[int]] = [[] for _ in labels]
        for a, b in covers:
            up[a].append(b)
            down[b].append(a)
        self.up = tuple(tuple(sorted(s)) for s in up)
        self.down = tuple(tuple(sorted(s)) for s in down)
        self.leq_rows = leq_rows
        self.ranks = ranks
        self.max_rank = max_rank
        self.multichains = multichains
        self._label_index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Poset({self.n} elements, {len(self.covers)} covers)"

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise ValueError(f"unknown label {label!r}") from None

    def label(self, x: int) -> str:
        self._check(x)
        return self.labels[x]

    def _check(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.n:
            raise IndexError(f"invalid element id {x!r}")

    def leq(self, x: int, y: int) -> bool:
        self._check(x)
        self._check(y)
        return bool(self.leq_rows[x] >> y & 1)

    @property
    def graded(self) -> bool:
        return self.ranks is not None

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self.down[x])

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self.up[x])


def _rank_data(
    n: int, up: Sequence[Sequence[int]], down: Sequence[Sequence[int]], topo: Sequence[int]
) -> tuple[tuple[int, ...], int] | None:
    """Rank data if all maximal chains have equal cardinality, else None."""
    if n == 0:
        return (), -1
    # Shortest/longest saturated chain from below must agree pointwise,
    # and all maximal elements must close chains of one common length.
    short = [0] * n
    long = [0] * n
    for v in topo:
        if down[v]:
            short[v] = 1 + min(short[u] for u in down[v])
            long[v] = 1 + max(long[u] for u in down[v])
        if short[v] != long[v]:
            return None
    tops = {long[v] for v in range(n) if not up[v]}
    if len(tops) > 1:
        return None
    return tuple(long), tops.pop()


def _toposort(n: int, pairs: Iterable[tuple[int, int]], labels: Sequence[str]) -> list[int]:
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in pairs:
        succ[a].append(b)
        indeg[b] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        stuck = next(v for v in range(n) if indeg[v] > 0)
        raise CycleError(f"cycle detected through element {labels[stuck]!r}")
    return order


def _closure_rows(n: int, pairs: Iterable[tuple[int, int]], topo: Sequence[int]) -> list[int]:
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        succ[a].append(b)
    rows = [0] * n
    for v in reversed(topo):
        row = 1 << v
        for w in succ[v]:
            row |= rows[w]
        rows[v] = row
    return rows


def _reduction(n: int, rows: Sequence[int]) -> frozenset[tuple[int, int]]:
    covers = set()
    for a in range(n):
        strict = rows[a] & ~(1 << a)
        reduced = strict
        for z in _bits(strict):
            reduced &= ~(rows[z] & ~(1 << z))
        for b in _bits(reduced):
            covers.add((a, b))
    return frozenset(covers)


def _finalize(
    labels: tuple[str, ...],
    covers: frozenset[tuple[int, int]],
    rows: tuple[int, ...],
    multichains: tuple[tuple[int, ...], ...] | None = None,
) -> Poset:
    n = len(labels)
    up: list[list[int]] = [[] for _ in range(n)]
    down: list[list[int]] = [[] for _ in range(n)]
    for a, b in covers:
        up[a].append(b)
        down[b].append(a)
    topo = _toposort(n, covers, labels)
    rd = _rank_data(n, up, down, topo)
    ranks, max_rank = rd if rd is not None else (None, None)
    return Poset(labels, covers, rows, ranks, max_rank, multichains)


def from_covers(labels: Sequence[str], cover_pairs: Iterable[tuple[str, str] | Sequence[str]]) -> Poset:
    """Build a poset from labels and covering pairs (a, b), b covering a.

    Redundant pairs (already implied transitively) are absorbed: the stored
    cover set is the transitive reduction of whatever order the input spans.
    Raises ValueError on duplicate or unknown labels, CycleError on cycles.
    """
    labels = tuple(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise ValueError(f"duplicate label {lab!r}")
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    pairs = []
    for pair in cover_pairs:
        a, b = pair
        if a not in index:
            raise ValueError(f"unknown label {a!r} in cover pair")
        if b not in index:
            raise ValueError(f"unknown label {b!r} in cover pair")
        pairs.append((index[a], index[b]))
    n = len(labels)
    topo = _toposort(n, pairs, labels)
    rows = _closure_rows(n, pairs, topo)
    covers = _reduction(n, rows)
    return _finalize(labels, covers, tuple(rows))


def _from_exact_covers(
    labels: tuple[str, ...],
    covers: Iterable[tuple[int, int]],
    multichains: tuple[tuple[int, ...], ...] | None = None,
) -> Poset:
    """Internal constructor for callers that supply the exact cover relation."""
    n = len(labels)
    if len(set(labels)) != n:
        raise ValueError("duplicate label in constructed poset")
    covers = frozenset(covers)
    topo = _toposort(n, covers, labels)
    rows = _closure_rows(n, covers, topo)
    return _finalize(labels, covers, tuple(rows), multichains)


def leq(p: Poset, x: int, y: int) -> bool:
    return p.leq(x, y)


def nabla(p: Poset, a: Iterable[int]) -> set[int]:
    """Upper shadow: every element covering some member of `a`."""
    out: set[int] = set()
    for x in a:
        p._check(x)
        out.update(p.up[x])
    return out


def is_graded(p: Poset) -> bool:
    return p.graded


def whitney(p: Poset) -> tuple[int, ...]:
    """Level counts (W_0, ..., W_N) of a graded poset."""
    if p.ranks is None:
        raise NotGradedError("whitney profile requires a graded poset")
    counts = [0] * (p.max_rank + 1)
    for r in p.ranks:
        counts[r] += 1
    return tuple(counts)


def is_connected(p: Poset) -> bool:
    """Connectivity of the undirected Hasse diagram. Empty posets count as connected."""
    if p.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in p.up[v] + p.down[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == p.n


def product(p: Poset, q: Poset) -> Poset:
    """Direct product: (a, b) <= (c, d) iff a <= c and b <= d.

    Covers of the product change exactly one coordinate by a cover,
    so they are assembled directly from the factor covers.
    """
    labels = tuple(f"({la},{lb})" for la in p.labels for lb in q.labels)
    nq = q.n
    covers = []
    for a, b in p.covers:
        for j in range(nq):
            covers.append((a * nq + j, b * nq + j))
    for i in range(p.n):
        for a, b in q.covers:
            covers.append((i * nq + a, i * nq + b))
    return _from_exact_covers(labels, covers)


def _refine_colors(posets: Sequence[Poset]) -> list[list[int]]:
    """Iterated neighborhood refinement over the cover digraphs, shared interning."""
    colorings = [[0] * p.n for p in posets]
    palette: dict[object, int] = {}

    def intern(key: object) -> int:
        if key not in palette:
            palette[key] = len(palette)
        return palette[key]

    for p, colors in zip(posets, colorings):
        for v in range(p.n):
            colors[v] = intern((len(p.down[v]), len(p.up[v])))
    total = 1
    while True:
        palette.clear()
        new_colorings = []
        for p, colors in zip(posets, colorings):
            new = [0] * p.n
            for v in range(p.n):
                key = (
                    colors[v],
                    tuple(sorted(colors[u] for u in p.down[v])),
                    tuple(sorted(colors[u] for u in p.up[v])),
                )
                new[v] = intern(key)
            new_colorings.append(new)
        colorings = new_colorings
        if len(palette) == total:
            return colorings
        total = len(palette)


def find_isomorphism(p: Poset, q: Poset) -> tuple[int, ...] | None:
    """A poset isomorphism p -> q as a tuple of q-ids, or None.

    Correct yes/no decision only: the refinement (degrees, then iterated
    neighborhood colors) prunes the backtracking but no canonical form is
    produced.
    """
    if p.n != q.n:
        return None
    if len(p.covers) != len(q.covers):
        return None
    if p.graded != q.graded:
        return None
    if p.graded and sorted(p.ranks) != sorted(q.ranks):
        return None
    colors_p, colors_q = _refine_colors([p, q])
    if sorted(colors_p) != sorted(colors_q):
        return None
    by_color: dict[int, list[int]] = {}
    for w in range(q.n):
        by_color.setdefault(colors_q[w], []).append(w)

    # Masks let the consistency check compare whole mapped neighborhoods.
    up_p = [0] * p.n
    down_p = [0] * p.n
    up_q = [0] * q.n
    down_q = [0] * q.n
    for a, b in p.covers:
        up_p[a] |= 1 << b
        down_p[b] |= 1 << a
    for a, b in q.covers:
        up_q[a] |= 1 << b
        down_q[b] |= 1 << a

    # Smallest color classes first; within a class follow cover adjacency.
    class_size: dict[int, int] = {}
    for c in colors_p:
        class_size[c] = class_size.get(c, 0) + 1
    order = sorted(range(p.n), key=lambda v: (class_size[colors_p[v]], colors_p[v], v))

    mapping = [-1] * p.n
    used = [False] * q.n
    mapped_mask = 0
    image_mask = 0
    chosen = [-1] * p.n

    def candidates(v: int) -> Iterator[int]:
        down_image = 0
        for u in _bits(down_p[v] & mapped_mask):
            down_image |= 1 << mapping[u]
        up_image = 0
        for u in _bits(up_p[v] & mapped_mask):
            up_image |= 1 << mapping[u]
        for w in by_color[colors_p[v]]:
            if used[w]:
                continue
            if down_q[w] & image_mask != down_image:
                continue
            if up_q[w] & image_mask != up_image:
                continue
            yield w

    # Iterative depth-first search; deep posets overflow the recursion limit.
    iters: list[Iterator[int]] = []
    idx = 0
    while idx >= 0:
        if idx == p.n:
            return tuple(mapping)
        v = order[idx]
        if len(iters) == idx:
            iters.append(candidates(v))
        if chosen[idx] != -1:
            w = chosen[idx]
            used[w] = False
            mapping[v] = -1
            mapped_mask &= ~(1 << v)
            image_mask &= ~(1 << w)
            chosen[idx] = -1
        w = next(iters[idx], None)
        if w is None:
            iters.pop()
            idx -= 1
            continue
        mapping[v] = w
        used[w] = True
        mapped_mask |= 1 << v
        image_mask |= 1 << w
        chosen[idx] = w
        idx += 1
    return None


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return find_isomorphism(p, q) is not None


def to_dict(p: Poset) -> dict:
    """JSON-ready form: {"labels": [...], "covers": [[a, b], ...]}, b covering a."""
    pairs = sorted((p.labels[a], p.labels[b]) for a, b in p.covers)
    return {"labels": list(p.labels), "covers": [list(pair) for pair in pairs]}


def from_dict(d: dict) -> Poset:
    if not isinstance(d, dict) or "labels" not in d or "covers" not in d:
        raise ValueError('poset JSON needs "labels" and "covers" keys')
    return from_covers(d["labels"], [tuple(pair) for pair in d["covers"]])


def dump(p: Poset, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_dict(p), fh, indent=1)
        fh.write("\n")


def load(path: str) -> Poset:
    with open(path) as fh:
        return from_dict(json.load(fh))
