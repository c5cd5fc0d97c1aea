"""Exhaustive checks of the class counts, the two lemmas and the map into C."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable

import numpy as np

from .canon import canonical_form, canonize
from .classify import classify, map_to_c
from .enumerate import (
    MAX_BRUTE_FORCE_ORDER,
    _children,
    _rows,
    brute_force_count,
    enumerate_graphs,
    enumerate_regular,
    graph_codes,
)
from .graph import Graph, GraphError, add_edge, complement, complete_graph, delete_edge, is_regular
from .graph6 import encode, graph_from_code
from .zagreb import (
    basis,
    complement_cross_closed,
    complement_zagreb,
    complete_minus_edge_values,
    degree_bound_gap,
    lemma2_margin,
    lemma2_margin_closed,
    regular_minus_edge_values,
    regular_plus_edge_values,
    zagreb_values,
)

log = logging.getLogger(__name__)

MAX_LISTED = 100
CACHED_ORDER = 9
SAMPLE_BLOCK = 1024


@dataclass
class Violations:
    """Offending graphs of one suite, listed up to ``MAX_LISTED``."""

    suite: str
    n: int
    checked: int = 0
    total: int = 0
    items: list[tuple[str, str]] = field(default_factory=list)

    def add(self, g: Graph, reason: str) -> None:
        self.total += 1
        if len(self.items) < MAX_LISTED:
            self.items.append((encode(g), reason))

    @property
    def ok(self) -> bool:
        return self.total == 0

    def __len__(self) -> int:
        return self.total

    def lines(self) -> list[str]:
        return [f"{g6} {reason}" for g6, reason in self.items]


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    count_a: int
    count_b: int
    count_c: int
    undefined_m0: int
    theorem_ok: bool
    majority_ok: bool
    conjecture_observed: bool

    FIELDS = (
        "n",
        "total",
        "count_a",
        "count_b",
        "count_c",
        "undefined_m0",
        "theorem_ok",
        "majority_ok",
        "conjecture_observed",
    )

    @property
    def in_hypothesis(self) -> bool:
        return self.n > 3

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.FIELDS}


def _tally_codes(args: tuple[int, list[int]]) -> Counter:
    n, codes = args
    out: Counter = Counter()
    for code in codes:
        label = classify(graph_from_code(n, code))
        out[label.value] += 1
        out["m0"] += label.undefined
    return out


def _tally_parents(args: tuple[int, list[int]]) -> Counter:
    n, parents = args
    out: Counter = Counter()
    for code in parents:
        out += _tally_codes((n, sorted(_children(_rows(n - 1, code)))))
    return out


def _tally(n: int, jobs: int) -> Counter:
    if n <= CACHED_ORDER:
        codes = list(graph_codes(n, jobs))
        work, args = _tally_codes, [(n, codes[s::jobs]) for s in range(jobs)]
    else:
        parents = list(graph_codes(n - 1, jobs))
        work, args = _tally_parents, [(n, parents[s::jobs]) for s in range(jobs)]
    if jobs == 1:
        parts = [work(a) for a in args]
    else:
        with Pool(jobs) as pool:
            parts = pool.map(work, args)
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


def run_census(n: int, jobs: int = 1, strict_m0: bool = False) -> CensusRow:
    """Class sizes of all graphs of order ``n`` and the verdicts on them.

    With ``strict_m0`` the edgeless graph, whose M2/m is undefined, is left
    out of ``total`` and ``count_b``.
    """
    jobs = max(1, jobs)
    log.info("census n=%d", n)
    tally = _tally(n, jobs)
    a, b, c, m0 = tally["A"], tally["B"], tally["C"], tally["m0"]
    if strict_m0:
        b -= m0
    total = a + b + c
    return CensusRow(n, total, a, b, c, m0, a + b < c, 2 * c > total, a < b)


def _graphs(n: int) -> Iterable[Graph]:
    return enumerate_graphs(n)


def verify_identities(n: int) -> Violations:
    """Complement identities for M1 and M2 against direct computation."""
    out = Violations("identities", n)
    for g in _graphs(n):
        out.checked += 1
        predicted = complement_zagreb(zagreb_values(g))
        actual = zagreb_values(complement(g))
        if predicted.m1 != actual.m1:
            out.add(g, f"M1(complement) identity gives {predicted.m1}, direct {actual.m1}")
        if predicted.m2 != actual.m2:
            out.add(g, f"M2(complement) identity gives {predicted.m2}, direct {actual.m2}")
    return out


def verify_bounds(n: int) -> Violations:
    """``n*M1 >= 4m^2`` and the complement cross inequality, tight exactly on regular graphs."""
    out = Violations("bounds", n)
    for g in _graphs(n):
        out.checked += 1
        v = zagreb_values(g)
        regular = is_regular(g)
        gap = degree_bound_gap(v)
        if gap < 0 or (gap == 0) != regular:
            out.add(g, f"n*M1 - 4m^2 = {gap} on a {'regular' if regular else 'irregular'} graph")
        co = zagreb_values(complement(g))
        cross = n * co.m2 - co.m * co.m1
        if cross != complement_cross_closed(v):
            out.add(g, f"complement cross {cross} != closed form {complement_cross_closed(v)}")
        slack = cross - basis(v)
        if slack < 0 or (slack == 0) != regular:
            out.add(g, f"complement cross minus (m*M1 - n*M2) = {slack} on a {'regular' if regular else 'irregular'} graph")
    return out


def verify_lemma1(n: int) -> Violations:
    """G in A, or G irregular in B, must have its complement in C."""
    if not 2 <= n <= CACHED_ORDER:
        raise GraphError(f"lemma 1 suite supports 2 <= n <= {CACHED_ORDER}")
    out = Violations("lemma1", n)
    for g in _graphs(n):
        out.checked += 1
        value = classify(g).value
        if value == "A" or (value == "B" and not is_regular(g)):
            co = classify(complement(g))
            if co.value != "C":
                out.add(g, f"in {value} but complement in {co.value} (basis {co.basis})")
    return out


def _check_mutation(out: Violations, g: Graph, h: Graph, r: int, variant: str) -> None:
    n = g.n
    v = zagreb_values(h)
    closed = regular_minus_edge_values(n, r) if variant == "minus" else regular_plus_edge_values(n, r)
    if v != closed:
        out.add(g, f"{variant}: direct {v} != closed form {closed}")
    direct_margin = n * v.m2 - v.m * v.m1
    if not (direct_margin == lemma2_margin(n, r, variant) == lemma2_margin_closed(n, r, variant)):
        out.add(g, f"{variant}: margin {direct_margin}, expected {lemma2_margin_closed(n, r, variant)}")
    if classify(h).value != "C":
        out.add(g, f"{variant}: G{'-' if variant == 'minus' else '+'}e not in C")


def verify_lemma2(n: int) -> Violations:
    """Every regular class with every edge removed and every non-edge added."""
    if not 4 <= n <= 10:
        raise GraphError("lemma 2 suite supports 4 <= n <= 10")
    out = Violations("lemma2", n)
    for r in range(n):
        for g in enumerate_regular(n, r):
            out.checked += 1
            for j in range(1, n):
                for i in range(j):
                    if g.has_edge(i, j):
                        _check_mutation(out, g, delete_edge(g, i, j), r, "minus")
                    else:
                        _check_mutation(out, g, add_edge(g, i, j), r, "plus")
    return out


@dataclass
class InjectionReport:
    """Outcome of applying the map into C to every class of A and B.

    ``witness_preimages`` lists, for each witness class, the domain graphs
    that map onto it; ``unmatched_witness`` holds when both witnesses are in
    C and that list is empty.  ``free_in_c`` counts classes of C outside the
    image, which is what strictness needs.
    """

    n: int
    domain_size: int
    image_codes: set[bytes]
    collisions: list[tuple[str, str]]
    off_target: list[str]
    unmatched_witness: bool
    witness_in_c: bool
    witness_preimages: dict[str, list[str]]
    c_size: int
    free_in_c: int

    @property
    def injective(self) -> bool:
        return not self.collisions

    @property
    def ok(self) -> bool:
        return self.injective and not self.off_target and self.unmatched_witness

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "domain_size": self.domain_size,
            "image_size": len(self.image_codes),
            "image_codes": sorted(c.decode("ascii") for c in self.image_codes),
            "collisions": [list(p) for p in self.collisions],
            "off_target": list(self.off_target),
            "unmatched_witness": self.unmatched_witness,
            "witness_in_c": self.witness_in_c,
            "witness_preimages": self.witness_preimages,
            "c_size": self.c_size,
            "free_in_c": self.free_in_c,
        }


def witness_graphs(n: int) -> tuple[Graph, Graph]:
    """``K_n - e`` and its complement ``K_2 + (n-2) K_1``."""
    h = delete_edge(complete_graph(n), 0, 1)
    return h, complement(h)


def _key(g: Graph) -> bytes:
    return canonical_form(g).code


def verify_injection(n: int) -> InjectionReport:
    if not 4 <= n <= 8:
        raise GraphError("injection suite supports 4 <= n <= 8")
    image: dict[bytes, str] = {}
    collisions: list[tuple[str, str]] = []
    off_target: list[str] = []
    domain = 0
    c_size = 0
    for g in _graphs(n):
        if classify(g).value == "C":
            c_size += 1
            continue
        domain += 1
        h = map_to_c(g)
        if classify(h).value != "C":
            off_target.append(encode(g))
        key = _key(h)
        if key in image:
            collisions.append((image[key], encode(g)))
        else:
            image[key] = encode(g)
    witnesses = witness_graphs(n)
    preimages = {}
    for w in witnesses:
        key = _key(w)
        preimages[encode(w)] = [image[key]] if key in image else []
    # a collision may hide further preimages of the same image
    for first, second in collisions:
        for w in witnesses:
            if image.get(_key(w)) == first:
                preimages[encode(w)].append(second)
    in_c = all(classify(w).value == "C" for w in witnesses)
    unmatched = in_c and not any(preimages.values())
    return InjectionReport(
        n=n,
        domain_size=domain,
        image_codes=set(image),
        collisions=collisions,
        off_target=off_target,
        unmatched_witness=unmatched,
        witness_in_c=in_c,
        witness_preimages=preimages,
        c_size=c_size,
        free_in_c=c_size - len(image),
    )


def verify_counts(n: int) -> Violations:
    """Generator against the labeled oracle (n <= 7) and its own invariants."""
    out = Violations("counts", n)
    codes = graph_codes(n)
    out.checked = len(codes)
    if list(codes) != sorted(set(codes)):
        out.total += 1
        out.items.append(("-", "emitted codes are not strictly ascending"))
    for code in codes:
        g = graph_from_code(n, code)
        if canonize(n, g.adj)[0] != code:
            out.add(g, "emitted graph is not its own canonical representative")
    if n <= MAX_BRUTE_FORCE_ORDER:
        expected = brute_force_count(n)
        if expected != len(codes):
            out.total += 1
            out.items.append(("-", f"generator found {len(codes)} classes, labeled oracle {expected}"))
    return out


@dataclass(frozen=True)
class SampleReport:
    """Class frequencies among labeled graphs drawn edge by edge."""

    n: int
    p: float
    trials: int
    seed: int
    count_a: int
    count_b: int
    count_c: int
    undefined_m0: int

    FIELDS = ("n", "p", "trials", "seed", "count_a", "count_b", "count_c", "undefined_m0", "frac_a", "frac_b", "frac_c")
    MODEL = "labeled G(n, p), independent edges"

    @property
    def fractions(self) -> tuple[float, float, float]:
        t = self.trials
        return self.count_a / t, self.count_b / t, self.count_c / t

    def as_dict(self) -> dict:
        fa, fb, fc = self.fractions
        d = {k: getattr(self, k) for k in self.FIELDS[:8]}
        d.update(frac_a=fa, frac_b=fb, frac_c=fc)
        return d


def classify_batch(adj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Bases ``m*M1 - n*M2`` and edge counts of a stack of 0/1 adjacency matrices."""
    a = adj.astype(np.int64)
    n = a.shape[1]
    deg = a.sum(axis=2)
    m = deg.sum(axis=1) // 2
    m1 = (deg * deg).sum(axis=1)
    m2 = np.einsum("bi,bi->b", deg, np.einsum("bij,bj->bi", a, deg)) // 2
    return m * m1 - n * m2, m


def _sample_block(args: tuple[int, float, int, int, int]) -> tuple[int, int, int, int]:
    n, p, seed, block, size = args
    rng = np.random.default_rng([seed, block])
    iu = np.triu_indices(n, 1)
    draws = rng.random((size, iu[0].size)) < p
    adj = np.zeros((size, n, n), dtype=np.uint8)
    adj[:, iu[0], iu[1]] = draws
    adj |= adj.transpose(0, 2, 1)
    b, m = classify_batch(adj)
    return int((b > 0).sum()), int((b == 0).sum()), int((b < 0).sum()), int((m == 0).sum())


def sample_classes(n: int, p: float, trials: int, seed: int, jobs: int = 1) -> SampleReport:
    """Classify ``trials`` random labeled graphs exactly.

    Trials are drawn in fixed blocks, each from a generator seeded by
    ``(seed, block index)``, so the result does not depend on ``jobs``.
    """
    if not 1 <= n <= 64:
        raise GraphError(f"order must be in 1..64, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    if trials < 1:
        raise ValueError("trials must be positive")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    args = [
        (n, p, seed, k, min(SAMPLE_BLOCK, trials - k * SAMPLE_BLOCK))
        for k in range((trials + SAMPLE_BLOCK - 1) // SAMPLE_BLOCK)
    ]
    if jobs <= 1:
        parts = [_sample_block(a) for a in args]
    else:
        with Pool(jobs) as pool:
            parts = pool.map(_sample_block, args)
    a, b, c, m0 = (sum(col) for col in zip(*parts))
    return SampleReport(n, p, trials, seed, a, b, c, m0)


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    count_a: int
    count_b: int
    count_c: int
    total: int
    a_less_than_b: bool

    FIELDS = ("n", "count_a", "count_b", "count_c", "total", "a_less_than_b")

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.FIELDS}


def conjecture_report(max_n: int, min_n: int = 4, jobs: int = 1, strict_m0: bool = False) -> list[ConjectureRow]:
    """Exact |A| and |B| for each order; records what is observed, nothing more."""
    if not 4 <= max_n <= 10:
        raise GraphError("conjecture report supports 4 <= max_n <= 10")
    rows = []
    for n in range(min_n, max_n + 1):
        row = run_census(n, jobs, strict_m0)
        rows.append(ConjectureRow(n, row.count_a, row.count_b, row.count_c, row.total, row.count_a < row.count_b))
    return rows


def k_n_minus_edge_check(n: int) -> list[str]:
    """Direct indices of ``K_n - e`` and its complement against the closed forms."""
    h, co = witness_graphs(n)
    problems = []
    if zagreb_values(h) != complete_minus_edge_values(n):
        problems.append(f"K_{n}-e: direct {zagreb_values(h)} != closed {complete_minus_edge_values(n)}")
    cv = zagreb_values(co)
    if (cv.m1, cv.m2) != (2, 1):
        problems.append(f"complement of K_{n}-e: M1={cv.m1}, M2={cv.m2}, expected 2 and 1")
    return problems
