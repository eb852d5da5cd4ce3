"""The fixed verification suite behind `posetlab verify-paper`.

Nine numbered checks, each exercising one documented guarantee of the library
at desk scale with exact integer comparisons. The list is fixed and versioned
(not discovery-based) so the command's exit status is reproducible; the test
suite asserts every check individually and the CLI prints one row per check
in suite order.
"""

from __future__ import annotations

import io
import json
import random
import re
from contextlib import redirect_stdout
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product as iproduct

from . import analysis, catalog, chains, core


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    detail: str


# ------------------------------------------------------------------ the corpus

@lru_cache(maxsize=None)
def _families() -> tuple[tuple[str, core.Poset], ...]:
    """The named catalog instances every structural check runs over."""
    out = [(f"T({m})", catalog.total(m)) for m in range(5)]
    out += [(f"B({n})", catalog.boolean(n)) for n in range(5)]
    out += [(f"I({n})", catalog.isotropic(n)) for n in range(4)]
    out += [(f"I({n},3)", catalog.isotropic_general(n, 3)) for n in range(3)]
    out.append(("ex1", catalog.example_sym()))
    out.append(("ex2", catalog.example_uni()))
    return tuple(out)


@lru_cache(maxsize=None)
def _family(name: str) -> core.Poset:
    return dict(_families())[name]


@lru_cache(maxsize=None)
def _chain_of(name: str, k: int) -> core.Poset:
    return chains.chain_poset(_family(name), k)


@lru_cache(maxsize=None)
def _general_chain(n: int, m: int, k: int) -> core.Poset:
    return chains.chain_poset(catalog.isotropic_general(n, m), k)


def random_poset(rng: random.Random, max_n: int) -> core.Poset:
    """A poset on 1..max_n elements: random relation pairs over a shuffled
    index order, closed and reduced by the constructor."""
    n = rng.randint(1, max_n)
    labels = [f"x{i}" for i in range(n)]
    perm = rng.sample(range(n), n)
    density = rng.uniform(0.1, 0.5)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((labels[perm[i]], labels[perm[j]]))
    return core.from_covers(labels, pairs)


def random_graded_poset(rng: random.Random, max_n: int) -> core.Poset:
    """A graded-by-construction poset: leveled elements, covers only between
    consecutive levels, every non-minimal element covering something and every
    non-maximal element covered by something."""
    while True:
        depth = rng.randint(1, 4)
        sizes = [rng.randint(1, 4) for _ in range(depth)]
        if sum(sizes) <= max_n:
            break
    n = sum(sizes)
    labels = [f"x{i}" for i in range(n)]
    perm = rng.sample(range(n), n)
    levels: list[list[str]] = []
    next_id = 0
    for size in sizes:
        levels.append([labels[perm[next_id + i]] for i in range(size)])
        next_id += size
    pairs = []
    covered_from_above = set()
    for lvl in range(1, depth):
        below = levels[lvl - 1]
        for v in levels[lvl]:
            count = min(len(below), 1 + (1 if rng.random() < 0.35 else 0))
            for u in rng.sample(below, count):
                pairs.append((u, v))
                covered_from_above.add(u)
    for lvl in range(depth - 1):
        for u in levels[lvl]:
            if u not in covered_from_above:
                pairs.append((u, rng.choice(levels[lvl + 1])))
    return core.from_covers(labels, pairs)


@lru_cache(maxsize=None)
def _random_graded_corpus() -> tuple[core.Poset, ...]:
    rng = random.Random(60601)
    return tuple(random_graded_poset(rng, 12) for _ in range(200))


def _power(p: core.Poset, n: int) -> core.Poset:
    out = catalog.total(0)
    for _ in range(n):
        out = core.product(out, p)
    return out


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_power(base, n: int) -> tuple[int, ...]:
    out = [1]
    for _ in range(n):
        out = _convolve(out, base)
    return tuple(out)


def _result(number: int, title: str, problems: list[str], success: str) -> CheckResult:
    if not problems:
        return CheckResult(number, title, True, success)
    detail = problems[0]
    if len(problems) > 1:
        detail += f" (+{len(problems) - 1} more)"
    return CheckResult(number, title, False, detail)


# ------------------------------------------------------------------ the checks

def check_gradedness() -> CheckResult:
    """Chain posets of every catalog member are graded; element ranks are the
    coordinate rank sums and the max rank scales by the chain length."""
    problems: list[str] = []
    posets = 0
    elements = 0
    for name, base in _families():
        for k in (1, 2, 3):
            cp = _chain_of(name, k)
            posets += 1
            if not cp.graded:
                problems.append(f"{name}[{k}] is not graded")
                continue
            if cp.max_rank != k * base.max_rank:
                problems.append(
                    f"{name}[{k}] max rank {cp.max_rank} != {k} * {base.max_rank}"
                )
            for idx in range(cp.n):
                elements += 1
                expected = sum(base.ranks[x] for x in cp.multichains[idx])
                if cp.ranks[idx] != expected:
                    problems.append(
                        f"{name}[{k}] element {cp.labels[idx]} has rank "
                        f"{cp.ranks[idx]}, coordinate sum {expected}"
                    )
                    break
    return _result(
        1,
        "catalog chain posets graded with coordinate-sum ranks",
        problems,
        f"{posets} chain posets, {elements} element ranks",
    )


def check_counterexamples() -> CheckResult:
    """The two catalog counterexamples have their frozen rank profiles, and
    taking 2-chains breaks symmetry / unimodality / log-concavity exactly as
    recorded."""
    problems: list[str] = []

    def expect(condition: bool, message: str) -> None:
        if not condition:
            problems.append(message)

    ex1 = _family("ex1")
    ex1c = _chain_of("ex1", 2)
    expect(core.whitney(ex1) == (2, 3, 2), f"ex1 profile {core.whitney(ex1)}")
    expect(analysis.is_rank_symmetric(ex1), "ex1 should be rank-symmetric")
    expect(ex1c.n == 17, f"ex1[2] has {ex1c.n} elements, expected 17")
    expect(
        core.whitney(ex1c) == (2, 3, 6, 4, 2), f"ex1[2] profile {core.whitney(ex1c)}"
    )
    expect(not analysis.is_rank_symmetric(ex1c), "ex1[2] should break rank symmetry")

    ex2 = _family("ex2")
    ex2c = _chain_of("ex2", 2)
    expect(core.whitney(ex2) == (1, 2, 2, 1), f"ex2 profile {core.whitney(ex2)}")
    expect(analysis.is_rank_unimodal(ex2), "ex2 should be rank-unimodal")
    expect(ex2c.n == 17, f"ex2[2] has {ex2c.n} elements, expected 17")
    expect(
        core.whitney(ex2c) == (1, 2, 4, 3, 4, 2, 1),
        f"ex2[2] profile {core.whitney(ex2c)}",
    )
    expect(not analysis.is_rank_unimodal(ex2c), "ex2[2] should break unimodality")
    expect(
        not analysis.is_rank_log_concave(ex2c), "ex2[2] should break log-concavity"
    )
    return _result(
        2,
        "counterexample rank profiles reproduced exactly",
        problems,
        "ex1/ex2 and their 2-chain profiles all match",
    )


def check_isomorphisms() -> CheckResult:
    """Structural identities: subset algebras as powers of the 2-chain,
    chains of chains, marked-subset powers, and chain/product commutation
    on random pairs."""
    problems: list[str] = []
    checks = 0

    def expect_iso(a: core.Poset, b: core.Poset, what: str) -> None:
        nonlocal checks
        checks += 1
        if not core.is_isomorphic(a, b):
            problems.append(f"{what} failed")

    for n in range(5):
        expect_iso(_family(f"B({n})"), _power(catalog.total(1), n), f"B({n}) ~ T(1)^{n}")
    for k in range(1, 7):
        expect_iso(
            chains.chain_poset(catalog.total(1), k),
            catalog.total(k),
            f"T(1)[{k}] ~ T({k})",
        )
    for n in range(4):
        expect_iso(_family(f"I({n})"), _power(catalog.isotropic(1), n), f"I({n}) ~ I(1)^{n}")
    for n in range(4):
        for k in (1, 2, 3):
            expect_iso(
                _chain_of(f"B({n})", k),
                _power(catalog.total(k), n),
                f"B({n})[{k}] ~ T({k})^{n}",
            )
    rng = random.Random(30303)
    for _ in range(50):
        a = random_poset(rng, 5)
        b = random_poset(rng, 5)
        for k in (1, 2, 3):
            expect_iso(
                chains.chain_poset(core.product(a, b), k),
                core.product(chains.chain_poset(a, k), chains.chain_poset(b, k)),
                f"(P*Q)[{k}] ~ P[{k}]*Q[{k}] on a random pair",
            )
    return _result(
        3,
        "isomorphism identities hold",
        problems,
        f"{checks} isomorphism checks",
    )


def check_main_families() -> CheckResult:
    """Chain posets of the subset and two-mark families have the predicted
    sizes and rank profiles and are normal, rank-log concave, and strongly
    Sperner."""
    problems: list[str] = []
    posets = 0

    def run(name: str, k: int, size: int, profile: tuple[int, ...]) -> None:
        nonlocal posets
        posets += 1
        cp = _chain_of(name, k)
        if cp.n != size:
            problems.append(f"{name}[{k}] has {cp.n} elements, expected {size}")
            return
        actual = core.whitney(cp)
        if actual != profile:
            problems.append(f"{name}[{k}] profile {actual}, expected {profile}")
            return
        if not analysis.is_normal(cp):
            problems.append(f"{name}[{k}] is not normal")
        if not analysis.is_rank_log_concave(cp):
            problems.append(f"{name}[{k}] is not rank-log concave")
        if not analysis.is_strongly_sperner(cp):
            problems.append(f"{name}[{k}] is not strongly Sperner")

    for n in range(5):
        for k in (1, 2, 3):
            run(f"B({n})", k, (k + 1) ** n, _poly_power([1] * (k + 1), n))
    for n in range(4):
        for k in (1, 2, 3):
            run(f"I({n})", k, (2 * k + 1) ** n, _poly_power([1] + [2] * k, n))
    return _result(
        4,
        "subset/two-mark chain posets: size, profile, normal, log-concave, Sperner",
        problems,
        f"{posets} chain posets",
    )


def check_generalized_families() -> CheckResult:
    """The m-mark generalization keeps normality and rank-log concavity for
    every chain length at desk scale."""
    problems: list[str] = []
    posets = 0
    for n in range(3):
        for m in (1, 2, 3):
            for k in (1, 2, 3):
                cp = _general_chain(n, m, k)
                posets += 1
                if not analysis.is_normal(cp):
                    problems.append(f"I({n},{m})[{k}] is not normal")
                if not analysis.is_rank_log_concave(cp):
                    problems.append(f"I({n},{m})[{k}] is not rank-log concave")
    return _result(
        5,
        "m-mark chain posets normal and rank-log concave",
        problems,
        f"{posets} chain posets",
    )


def check_oracles() -> CheckResult:
    """The flow-based normality test and antichain-family sizes agree with
    exhaustive subset-enumeration oracles on every small catalog member and
    200 random graded posets."""
    problems: list[str] = []
    posets = [p for _, p in _families() if p.n <= 14]
    posets += list(_random_graded_corpus())
    comparisons = 0
    for i, p in enumerate(posets):
        comparisons += 1
        if analysis.is_normal(p) != analysis.is_normal_exhaustive(p):
            problems.append(f"normality disagreement on corpus poset {i}")
        for j in range(1, 5):
            comparisons += 1
            flow = analysis.max_j_family(p, j)
            brute = analysis.max_j_family_bruteforce(p, j)
            if flow != brute:
                problems.append(
                    f"family size disagreement on corpus poset {i}, j={j}: "
                    f"{flow} vs {brute}"
                )
    return _result(
        6,
        "flow-based checkers match exhaustive oracles",
        problems,
        f"{comparisons} oracle comparisons on {len(posets)} posets",
    )


def _oracle_chain_covers(p: core.Poset, k: int) -> set[tuple[tuple, tuple]]:
    """Covers of the k-chain poset derived straight from the coordinatewise
    order definition: build the full order on nondecreasing tuples, then strip
    every relation with an intermediate element."""
    tuples = [
        t
        for t in iproduct(range(p.n), repeat=k)
        if all(p.leq(a, b) for a, b in zip(t, t[1:]))
    ]
    m = len(tuples)
    rows = [0] * m
    for i, a in enumerate(tuples):
        for j, b in enumerate(tuples):
            if all(p.leq(x, y) for x, y in zip(a, b)):
                rows[i] |= 1 << j
    covers: set[tuple[tuple, tuple]] = set()
    for i in range(m):
        strict = rows[i] & ~(1 << i)
        reduced = strict
        mm = strict
        while mm:
            bit = mm & -mm
            z = bit.bit_length() - 1
            reduced &= ~(rows[z] & ~(1 << z))
            mm ^= bit
        mm = reduced
        while mm:
            bit = mm & -mm
            covers.add((tuples[i], tuples[bit.bit_length() - 1]))
            mm ^= bit
    return covers


def check_cover_rule() -> CheckResult:
    """The one-coordinate cover rule produces exactly the covers of the
    coordinatewise order on random posets, graded or not."""
    problems: list[str] = []
    rng = random.Random(70007)
    comparisons = 0
    for i in range(100):
        p = random_poset(rng, 6)
        for k in (1, 2, 3):
            comparisons += 1
            cp = chains.chain_poset(p, k)
            got = {
                (cp.multichains[a], cp.multichains[b]) for a, b in cp.covers
            }
            expected = _oracle_chain_covers(p, k)
            if got != expected:
                problems.append(
                    f"cover mismatch on random poset {i}, k={k}: "
                    f"{len(got)} vs {len(expected)} covers"
                )
    return _result(
        7,
        "one-coordinate cover rule matches the order-derived covers",
        problems,
        f"{comparisons} cover-set comparisons",
    )


def check_consistency() -> CheckResult:
    """Cross-property consistency over the whole corpus: normality forces the
    strong Sperner property (connected posets), log-concavity forces
    unimodality, and products preserve normal + log-concave."""
    problems: list[str] = []
    corpus: list[core.Poset] = []
    for name, p in _families():
        corpus.append(p)
        for k in (1, 2, 3):
            corpus.append(_chain_of(name, k))
    for n in range(3):
        for m in (1, 2, 3):
            for k in (1, 2, 3):
                corpus.append(_general_chain(n, m, k))
    corpus.extend(_random_graded_corpus())

    implications = 0
    for i, p in enumerate(corpus):
        if not p.graded:
            problems.append(f"corpus poset {i} is unexpectedly not graded")
            continue
        implications += 1
        if analysis.is_rank_log_concave(p) and not analysis.is_rank_unimodal(p):
            problems.append(f"corpus poset {i} is log-concave but not unimodal")
        if (
            core.is_connected(p)
            and analysis.is_normal(p)
            and not analysis.is_strongly_sperner(p)
        ):
            problems.append(f"corpus poset {i} is normal but not strongly Sperner")

    small = [(name, p) for name, p in _families() if p.n <= 30]
    good = {
        name: analysis.is_normal(p) and analysis.is_rank_log_concave(p)
        for name, p in small
    }
    products = 0
    for (na, a), (nb, b) in combinations_with_replacement(small, 2):
        if not (good[na] and good[nb]):
            continue
        products += 1
        prod = core.product(a, b)
        if not analysis.is_normal(prod):
            problems.append(f"{na} x {nb} is not normal")
        if not analysis.is_rank_log_concave(prod):
            problems.append(f"{na} x {nb} is not rank-log concave")
    return _result(
        8,
        "implications and product closure hold across the corpus",
        problems,
        f"{implications} corpus posets, {products} products",
    )


def check_cli() -> CheckResult:
    """The command-line surface: diagram node/edge counts, failing property
    checks exit 1 with a witness, and the JSON report carries the profile."""
    from . import cli

    problems: list[str] = []

    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = cli.main(["dot", "T(1)[3]"])
    out = buf.getvalue()
    edges = sum(1 for line in out.splitlines() if "->" in line)
    nodes = len(re.findall(r'"[^"]*";', out)) - edges
    if rc != 0:
        problems.append(f"dot exited {rc}")
    if (nodes, edges) != (4, 3):
        problems.append(f"dot emitted {nodes} nodes / {edges} edges, expected 4 / 3")

    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = cli.main(["check", "ex2[2]", "--property", "unimodal"])
    out = buf.getvalue()
    if rc != 1:
        problems.append(f"failing check exited {rc}, expected 1")
    if '"indices": [2, 3, 4]' not in out or '"counts": [4, 3, 4]' not in out:
        problems.append("unimodality witness triple missing from check output")

    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = cli.main(["report", "ex1[2]", "--json"])
    try:
        body = json.loads(buf.getvalue())
    except ValueError:
        body = None
    if rc != 0 or body is None:
        problems.append(f"JSON report failed (exit {rc})")
    else:
        if body.get("whitney") != [2, 3, 6, 4, 2]:
            problems.append(f"report profile {body.get('whitney')}")
        if body.get("properties", {}).get("rank_symmetric", {}).get("holds") is not False:
            problems.append("report should flag broken rank symmetry")
    return _result(
        9,
        "command-line diagram, witness, and report behaviors",
        problems,
        "dot/check/report behave as documented",
    )


CHECKS = (
    check_gradedness,
    check_counterexamples,
    check_isomorphisms,
    check_main_families,
    check_generalized_families,
    check_oracles,
    check_cover_rule,
    check_consistency,
    check_cli,
)


def run_all() -> list[CheckResult]:
    return [check() for check in CHECKS]
