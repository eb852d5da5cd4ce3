"""Rank-profile predicates, normality, Greene-Kleitman antichain families,
and the exhaustive oracles that cross-check the flow-based routes.

All arithmetic is exact integer arithmetic; ratio comparisons are done by
cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .core import NotGradedError, Poset, _bits, _toposort, nabla, whitney


def rank_polynomial(p: Poset) -> tuple[int, ...]:
    """Coefficients of sum_x q^rank(x); identical to the Whitney profile."""
    return whitney(p)


def _levels(p: Poset) -> list[list[int]]:
    if p.ranks is None:
        raise NotGradedError("rank levels require a graded poset")
    out: list[list[int]] = [[] for _ in range(p.max_rank + 1)]
    for v, r in enumerate(p.ranks):
        out[r].append(v)
    return out


# ---------------------------------------------------------------- rank profile

def is_rank_symmetric(p: Poset) -> bool:
    counts = whitney(p)
    return counts == counts[::-1]


def rank_symmetry_violation(p: Poset) -> dict | None:
    counts = whitney(p)
    top = len(counts) - 1
    for i, c in enumerate(counts):
        if c != counts[top - i]:
            return {"indices": [i, top - i], "counts": [c, counts[top - i]]}
    return None


def is_rank_unimodal(p: Poset) -> bool:
    return rank_unimodality_violation(p) is None


def rank_unimodality_violation(p: Poset) -> dict | None:
    """First valley: indices a < b < c with counts[a] > counts[b] < counts[c]."""
    counts = whitney(p)
    for b in range(1, len(counts) - 1):
        if counts[b - 1] > counts[b]:
            for c in range(b + 1, len(counts)):
                if counts[c] > counts[b]:
                    a = next(i for i in range(b) if counts[i] > counts[b])
                    return {
                        "indices": [a, b, c],
                        "counts": [counts[a], counts[b], counts[c]],
                    }
    return None


def is_rank_log_concave(p: Poset) -> bool:
    return rank_log_concavity_violation(p) is None


def rank_log_concavity_violation(p: Poset) -> dict | None:
    counts = whitney(p)
    for i in range(1, len(counts) - 1):
        if counts[i] * counts[i] < counts[i - 1] * counts[i + 1]:
            return {
                "indices": [i - 1, i, i + 1],
                "counts": [counts[i - 1], counts[i], counts[i + 1]],
            }
    return None


# ------------------------------------------------------------------- normality

def _normal_pair(p: Poset, low: list[int], high: list[int]):
    """One consecutive level pair as a bipartite flow problem.

    The pair satisfies the normalized matching condition iff the max flow
    saturates every source arc; otherwise the min cut's source side meets
    the low level in a violating subset A with |A| * |high| > |nabla(A)| * |low|.
    """
    na, nb = len(low), len(high)
    big = na * nb + 1
    s = na + nb
    t = s + 1
    us, vs, caps = [], [], []
    high_index = {b: k for k, b in enumerate(high)}
    for ai in range(na):
        us.append(s)
        vs.append(ai)
        caps.append(nb)
    for bi in range(nb):
        us.append(na + bi)
        vs.append(t)
        caps.append(na)
    for ai, a in enumerate(low):
        for b in p.up[a]:
            us.append(ai)
            vs.append(na + high_index[b])
            caps.append(big)
    value, side = kernels.dinic(t + 1, us, vs, caps, s, t)
    if value == na * nb:
        return None
    return frozenset(low[x] for x in side if x < na)


def normality_violation(p: Poset) -> dict | None:
    """None when normal, else the first failing level pair:
    {"level": i, "subset": ids, "shadow": ids}."""
    levels = _levels(p)
    for i in range(len(levels) - 1):
        witness = _normal_pair(p, levels[i], levels[i + 1])
        if witness is not None:
            return {
                "level": i,
                "subset": witness,
                "shadow": frozenset(nabla(p, witness)),
            }
    return None


def is_normal(p: Poset) -> bool:
    """Normalized matching: |A| / |P_i| <= |nabla(A)| / |P_{i+1}| for every
    subset A of every non-top level."""
    return normality_violation(p) is None


def is_normal_exhaustive(p: Poset) -> bool:
    """Subset-enumeration oracle for is_normal; levels capped at 20 elements."""
    levels = _levels(p)
    for i in range(len(levels) - 1):
        low, high = levels[i], levels[i + 1]
        na, nb = len(low), len(high)
        if na > 20:
            raise ValueError("exhaustive normality check capped at 20-element levels")
        high_index = {b: k for k, b in enumerate(high)}
        up_masks = [
            sum(1 << high_index[b] for b in p.up[a]) for a in low
        ]
        for mask in range(1, 1 << na):
            shadow = 0
            mm = mask
            while mm:
                bit = mm & -mm
                shadow |= up_masks[bit.bit_length() - 1]
                mm ^= bit
            if mask.bit_count() * nb > shadow.bit_count() * na:
                return False
    return True


# ------------------------------------------------- Greene-Kleitman j-families

def _chain_network(p: Poset, alive: list[bool] | None = None):
    """Min-cost-flow network whose unit augmentations are disjoint chains.

    Vertex split: element v becomes in-node 2i / out-node 2i+1 joined by a
    capacity-1 cost=-1 arc; strict comparabilities link out to in at cost 0;
    the source feeds every in-node and every out-node drains to the sink.
    Each unit of flow is one chain, its cost being -(chain length).
    """
    ids = [v for v in range(p.n) if alive is None or alive[v]]
    local = {v: i for i, v in enumerate(ids)}
    k = len(ids)
    s = 2 * k
    t = s + 1
    us, vs, caps, costs = [], [], [], []
    for i in range(k):
        us.extend((s, 2 * i, 2 * i + 1))
        vs.extend((2 * i, 2 * i + 1, t))
        caps.extend((1, 1, 1))
        costs.extend((0, -1, 0))
    for v in ids:
        i = local[v]
        strict = p.leq_rows[v] & ~(1 << v)
        for w in _bits(strict):
            j = local.get(w)
            if j is not None:
                us.append(2 * i + 1)
                vs.append(2 * j)
                caps.append(1)
                costs.append(0)
    return t + 1, us, vs, caps, costs, s, t, k


def _marginals_for(p: Poset, alive: list[bool] | None = None):
    """Chain-cover marginal cost curve, stopped once the marginal hits -1.

    The f-th marginal is cost(f) - cost(f-1) of the optimal f-chain flow;
    the curve is nondecreasing and every marginal is <= -1, so the cut tail
    is implicitly -1 per remaining unit.
    """
    n2, us, vs, caps, costs, s, t, k = _chain_network(p, alive)
    marginals, _ = kernels.ssp(n2, us, vs, caps, costs, s, t, -1, -1, 1)
    return marginals, k


@lru_cache(maxsize=512)
def _chain_marginals(p: Poset):
    return _marginals_for(p)


def _d_value(n_alive: int, marginals, j: int) -> int:
    # d_j = n + min over f of (chain cost at f + j * f); only marginals
    # strictly below -j contribute negatively.
    return n_alive + sum(
        units * (m + j) for m, units in marginals if m < -j
    )


def max_j_family(p: Poset, j: int) -> int:
    """Largest union of j antichains (Greene-Kleitman d_j); any finite poset."""
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"antichain count must be a positive integer, got {j!r}")
    marginals, _ = _chain_marginals(p)
    return _d_value(p.n, marginals, j)


def _longest_chain_within(p: Poset, alive: list[bool], topo: list[int]) -> int:
    height = {}
    best = 0
    for v in topo:
        if not alive[v]:
            continue
        h = height.get(v, 1)
        if h > best:
            best = h
        for w in _bits(p.leq_rows[v] & ~(1 << v)):
            if alive[w] and h + 1 > height.get(w, 1):
                height[w] = h + 1
    return best


def max_j_family_with_family(p: Poset, j: int) -> tuple[int, tuple[frozenset[int], ...]]:
    """(d_j, witness family): at most j pairwise-disjoint antichains whose
    union attains d_j.

    Retention peel: dropping x whenever the optimum survives leaves, after one
    pass, a maximum support without chains of j + 1 elements, which a Mirsky
    split by within-support chain height partitions into <= j antichains.
    """
    target = max_j_family(p, j)
    topo = _toposort(p.n, p.covers, p.labels)
    alive = [True] * p.n
    count = p.n
    for x in range(p.n):
        if _longest_chain_within(p, alive, topo) <= j:
            break
        alive[x] = False
        marginals, k = _marginals_for(p, alive)
        if _d_value(k, marginals, j) == target:
            count -= 1
        else:
            alive[x] = True
    height = {}
    for v in topo:
        if not alive[v]:
            continue
        h = height.setdefault(v, 1)
        for w in _bits(p.leq_rows[v] & ~(1 << v)):
            if alive[w] and h + 1 > height.get(w, 1):
                height[w] = h + 1
    family = []
    for lvl in range(1, j + 1):
        members = frozenset(v for v, h in height.items() if h == lvl)
        if members:
            family.append(members)
    assert sum(len(a) for a in family) == target
    return target, tuple(family)


def max_j_family_bruteforce(p: Poset, j: int) -> int:
    """Subset-enumeration oracle for max_j_family; capped at 16 elements.

    Longest chains per subset come from iterated minimal-element removal,
    an independent route from the flow-based computation.
    """
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"antichain count must be a positive integer, got {j!r}")
    if p.n > 16:
        raise ValueError("bruteforce oracle capped at 16 elements")
    heights = _bruteforce_heights(p)
    best = 0
    for mask, h in enumerate(heights):
        if h <= j:
            c = mask.bit_count()
            if c > best:
                best = c
    return best


@lru_cache(maxsize=512)
def _bruteforce_heights(p: Poset) -> list[int]:
    """heights[mask] = longest chain inside the subset mask."""
    down_masks = [0] * p.n
    for u in range(p.n):
        for w in _bits(p.leq_rows[u] & ~(1 << u)):
            down_masks[w] |= 1 << u
    heights = [0] * (1 << p.n)
    for mask in range(1, 1 << p.n):
        minimals = 0
        mm = mask
        while mm:
            bit = mm & -mm
            if down_masks[bit.bit_length() - 1] & mask == 0:
                minimals |= bit
            mm ^= bit
        heights[mask] = heights[mask & ~minimals] + 1
    return heights


# -------------------------------------------------------------- strong Sperner

def is_strongly_sperner(p: Poset) -> bool:
    """For every j, some j levels form a maximum union of j antichains."""
    return sperner_violation(p) is None


def sperner_violation(p: Poset) -> dict | None:
    """None when strongly Sperner, else the smallest failing j with a witness
    family whose union exceeds the top-j level sum."""
    counts = sorted(whitney(p), reverse=True)
    marginals, _ = _chain_marginals(p)
    top = 0
    for j in range(1, len(counts) + 1):
        top += counts[j - 1]
        if _d_value(p.n, marginals, j) != top:
            _, family = max_j_family_with_family(p, j)
            return {"j": j, "antichains": family, "top_level_sum": top}
    return None


# ------------------------------------------------------------------- reporting

PROPERTY_NAMES = (
    "rank_symmetric",
    "rank_unimodal",
    "rank_log_concave",
    "normal",
    "strongly_sperner",
)


@dataclass
class PropertyReport:
    """Per-property verdicts with label-level witnesses for false verdicts.

    Verdicts are None when the poset is not graded (the properties are then
    undefined); witnesses hold JSON-ready dicts keyed by property name.
    """

    graded: bool
    verdicts: dict[str, bool | None]
    witnesses: dict[str, dict]


def property_violation(p: Poset, name: str) -> dict | None:
    """Label-level, JSON-ready witness for one named property; None if it holds."""
    if name not in PROPERTY_NAMES:
        raise ValueError(f"unknown property {name!r}; expected one of {PROPERTY_NAMES}")
    if name == "rank_symmetric":
        return rank_symmetry_violation(p)
    if name == "rank_unimodal":
        return rank_unimodality_violation(p)
    if name == "rank_log_concave":
        return rank_log_concavity_violation(p)
    if name == "normal":
        violation = normality_violation(p)
        if violation is None:
            return None
        return {
            "level": violation["level"],
            "subset": sorted(p.labels[x] for x in violation["subset"]),
            "shadow": sorted(p.labels[x] for x in violation["shadow"]),
        }
    violation = sperner_violation(p)
    if violation is None:
        return None
    return {
        "j": violation["j"],
        "antichains": [
            sorted(p.labels[x] for x in antichain)
            for antichain in violation["antichains"]
        ],
        "top_level_sum": violation["top_level_sum"],
    }


def property_report(p: Poset) -> PropertyReport:
    if not p.graded:
        return PropertyReport(False, {name: None for name in PROPERTY_NAMES}, {})
    verdicts: dict[str, bool | None] = {}
    witnesses: dict[str, dict] = {}
    for name in PROPERTY_NAMES:
        violation = property_violation(p, name)
        verdicts[name] = violation is None
        if violation is not None:
            witnesses[name] = violation
    return PropertyReport(True, verdicts, witnesses)
