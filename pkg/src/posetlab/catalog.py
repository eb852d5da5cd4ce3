"""Named poset families: total orders, subset algebras, marked-subset algebras,
and the two counterexample posets used throughout the test corpus."""

from __future__ import annotations

from .core import Poset, _from_exact_covers, from_covers


def total(k: int) -> Poset:
    """The total order 0 < 1 < ... < k (k + 1 elements)."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"total order size must be a nonnegative integer, got {k!r}")
    labels = tuple(str(i) for i in range(k + 1))
    covers = [(i, i + 1) for i in range(k)]
    return _from_exact_covers(labels, covers)


def _mark_label(i: int, c: int) -> str:
    # Mark classes render as primes up to three, then an explicit exponent.
    if c <= 3:
        return str(i) + "'" * c
    return f"{i}^({c})"


def _set_label(members: tuple[tuple[int, int], ...]) -> str:
    return "{" + ",".join(_mark_label(i, c) for i, c in sorted(members)) + "}"


def isotropic_general(n: int, m: int) -> Poset:
    """Subsets of n indices where each index carries at most one of m marks,
    ordered by inclusion: (m + 1)^n elements. m = 1 gives the subset algebra,
    m = 2 the two-mark (primed/unprimed) family.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index count must be a nonnegative integer, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"mark class count must be a positive integer, got {m!r}")
    base = m + 1
    size = base**n
    elements: list[tuple[tuple[int, int], ...]] = []
    for code in range(size):
        members = []
        rest = code
        for i in range(1, n + 1):
            choice = rest % base
            rest //= base
            if choice:
                members.append((i, choice - 1))
        elements.append(tuple(members))
    index = {e: i for i, e in enumerate(elements)}
    covers = []
    for e, eid in index.items():
        taken = {i for i, _ in e}
        for i in range(1, n + 1):
            if i in taken:
                continue
            for c in range(m):
                bigger = tuple(sorted(e + ((i, c),)))
                covers.append((eid, index[bigger]))
    labels = tuple(_set_label(e) for e in elements)
    return _from_exact_covers(labels, covers)


def boolean(n: int) -> Poset:
    """The subset algebra of {1..n}: 2^n subsets ordered by inclusion."""
    return isotropic_general(n, 1)


def isotropic(n: int) -> Poset:
    """Subsets of {1..n, 1'..n'} containing no pair {i, i'}, ordered by
    inclusion: 3^n elements."""
    return isotropic_general(n, 2)


def example_sym() -> Poset:
    """Seven-element graded poset with Whitney profile (2, 3, 2) whose
    2-chain poset fails rank symmetry."""
    return from_covers(
        "ABCDEFG",
        [
            ("C", "A"),
            ("D", "A"),
            ("D", "B"),
            ("E", "B"),
            ("F", "C"),
            ("F", "D"),
            ("G", "E"),
        ],
    )


def example_uni() -> Poset:
    """Six-element graded poset with Whitney profile (1, 2, 2, 1) whose
    2-chain poset fails rank unimodality and rank log concavity."""
    return from_covers(
        "ABCDEF",
        [
            ("B", "A"),
            ("C", "A"),
            ("D", "B"),
            ("E", "C"),
            ("F", "D"),
            ("F", "E"),
        ],
    )
