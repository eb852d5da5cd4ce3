"""The chain-poset operator: P[k] is the poset of nondecreasing k-tuples of P."""

from __future__ import annotations

from .core import NotGradedError, Poset, _bits, _from_exact_covers


def _composite_label(p: Poset, chain: tuple[int, ...]) -> str:
    # Single-character base labels concatenate ("011", "CA"); otherwise join
    # with commas so distinct tuples stay distinct.
    parts = [p.labels[x] for x in chain]
    if all(len(s) == 1 for s in p.labels):
        return "".join(parts)
    return ",".join(parts)


def chain_poset(p: Poset, k: int) -> Poset:
    """The poset of k-element multichains x_1 <= ... <= x_k of p, ordered
    coordinatewise.

    Covers change exactly one coordinate by a cover of p; each candidate is
    rechecked to still be a multichain. The result's `multichains` field maps
    every element back to its tuple of base ids.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"chain length must be a positive integer, got {k!r}")
    rows = p.leq_rows
    chains: list[tuple[int, ...]] = []
    # Depth-first extension in ascending id order enumerates tuples in
    # lexicographic order.
    stack: list[tuple[tuple[int, ...], int]] = [
        ((x,), x) for x in range(p.n - 1, -1, -1)
    ]
    while stack:
        prefix, last = stack.pop()
        if len(prefix) == k:
            chains.append(prefix)
            continue
        for nxt in reversed(list(_bits(rows[last]))):
            stack.append((prefix + (nxt,), nxt))
    index = {c: i for i, c in enumerate(chains)}
    covers = []
    for c, cid in index.items():
        for j in range(k):
            xj = c[j]
            for z in p.down[xj]:
                if j > 0 and not rows[c[j - 1]] >> z & 1:
                    continue
                lower = c[:j] + (z,) + c[j + 1 :]
                covers.append((index[lower], cid))
    labels = tuple(_composite_label(p, c) for c in chains)
    return _from_exact_covers(labels, covers, multichains=tuple(chains))


def multichain_rank(p: Poset, chain: tuple[int, ...]) -> int:
    """Rank of a multichain of a graded poset: the sum of coordinate ranks."""
    if p.ranks is None:
        raise NotGradedError("multichain rank requires a graded base poset")
    if len(chain) == 0:
        raise ValueError("empty multichain")
    for x in chain:
        p._check(x)
    for a, b in zip(chain, chain[1:]):
        if not p.leq(a, b):
            raise ValueError(
                f"not a multichain: {p.labels[a]!r} is not below {p.labels[b]!r}"
            )
    return sum(p.ranks[x] for x in chain)
