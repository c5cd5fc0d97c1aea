"""Exit criteria, one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they happen;
they are also repeated in the terminal summary.
"""

import io
import subprocess
import sys
import time
from contextlib import redirect_stdout

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from zagreb_census.census import (
    conjecture_report,
    run_census,
    verify_bounds,
    verify_identities,
    verify_injection,
    verify_lemma1,
    verify_lemma2,
)
from zagreb_census.classify import classify
from zagreb_census.cli import main
from zagreb_census.enumerate import brute_force_classes, brute_force_count, count_graphs
from zagreb_census.graph import _trusted, complement, complete_graph, delete_edge, from_edges
from zagreb_census.graph6 import decode, encode, n_bits
from zagreb_census.zagreb import zagreb_values

KNOWN_TOTALS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}

# (|A|, |B|, |C|) recorded from the first verified run; n <= 7 are re-derived
# below from the labeled oracle's class representatives.
RECORDED_COUNTS = {
    4: (0, 5, 6),
    5: (0, 5, 29),
    6: (0, 11, 145),
    7: (0, 9, 1035),
    8: (0, 27, 12319),
    9: (1, 33, 274634),
}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _oracle_class_counts(n: int) -> tuple[int, int, int]:
    labels = brute_force_classes(n)
    length = n_bits(n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    counts = [0, 0, 0]
    for rep in np.unique(labels):
        edges = [pairs[length - 1 - b] for b in range(length) if int(rep) >> b & 1]
        counts["ABC".index(classify(from_edges(n, edges)).value)] += 1
    return tuple(counts)


def test_criterion_1_identities():
    start = time.perf_counter()
    problems = []
    for n in range(1, 8):
        if count_graphs(n) != KNOWN_TOTALS[n] or brute_force_count(n) != KNOWN_TOTALS[n]:
            problems.append(f"count mismatch at n={n}")
        out = verify_identities(n)
        if not out.ok or out.checked != KNOWN_TOTALS[n]:
            problems.append(f"n={n}: {out.total} violations over {out.checked}")
    elapsed = time.perf_counter() - start
    record(1, "complement identities for M1, M2 exact on all classes n <= 7", not problems and elapsed < 60,
           f"{elapsed:.1f}s {'; '.join(problems)}")


def test_criterion_2_bounds():
    start = time.perf_counter()
    bad = {n: verify_bounds(n).total for n in range(1, 8)}
    elapsed = time.perf_counter() - start
    record(2, "n*M1 >= 4m^2 and complement cross inequality, tight iff regular, n <= 7",
           not any(bad.values()) and elapsed < 60, f"{elapsed:.1f}s violations {bad}")


def test_criterion_3_lemma1():
    start = time.perf_counter()
    results = {n: verify_lemma1(n) for n in range(2, 9)}
    elapsed = time.perf_counter() - start
    ok = all(r.ok for r in results.values()) and results[8].checked == 12346 and elapsed < 120
    record(3, "lemma 1 has zero violations for n <= 8", ok,
           f"{elapsed:.1f}s, {results[8].checked} classes at n=8")


def test_criterion_4_lemma2():
    start = time.perf_counter()
    results = {n: verify_lemma2(n) for n in range(4, 9)}
    elapsed = time.perf_counter() - start
    ok = all(r.ok for r in results.values()) and elapsed < 120
    record(4, "lemma 2 closed forms and margins exact for regular classes n <= 8", ok,
           f"{elapsed:.1f}s, {sum(r.checked for r in results.values())} regular classes")


@pytest.mark.slow
def test_criterion_5_theorem():
    start = time.perf_counter()
    rows = {n: run_census(n) for n in range(4, 10)}
    elapsed = time.perf_counter() - start
    problems = []
    for n, row in rows.items():
        if row.total != KNOWN_TOTALS[n]:
            problems.append(f"n={n} total {row.total}")
        if (row.count_a, row.count_b, row.count_c) != RECORDED_COUNTS[n]:
            problems.append(f"n={n} counts {(row.count_a, row.count_b, row.count_c)}")
        if not (row.theorem_ok and row.majority_ok):
            problems.append(f"n={n} verdicts {row.theorem_ok}/{row.majority_ok}")
    for n in range(4, 8):
        if _oracle_class_counts(n) != RECORDED_COUNTS[n]:
            problems.append(f"n={n} labeled oracle disagrees")
    record(5, "|A|+|B| < |C| and 2|C| > |G_n| for n = 4..9", not problems and elapsed < 600,
           f"{elapsed:.1f}s {'; '.join(problems) or 'n=9: ' + str(RECORDED_COUNTS[9])}")


def test_criterion_6_injection():
    problems = []
    for n in range(4, 9):
        rep = verify_injection(n)
        if rep.off_target:
            problems.append(f"n={n}: {len(rep.off_target)} images outside C")
        if rep.collisions:
            problems.append(f"n={n}: collisions {rep.collisions}")
        if not rep.unmatched_witness:
            pre = {w: p for w, p in rep.witness_preimages.items() if p}
            problems.append(f"n={n}: witnesses have preimages {pre}")
    record(6, "map into C collision-free, on target, witnesses K_n-e and K2+(n-2)K1 without preimage, n = 4..8",
           not problems, "; ".join(problems))


def _random_graphs(n: int, count: int, rng: np.random.Generator):
    iu = np.triu_indices(n, 1)
    probs = rng.random(count)
    for k in range(count):
        mat = np.zeros((n, n), dtype=np.uint8)
        mat[iu] = rng.random(iu[0].size) < probs[k]
        mat |= mat.T
        packed = np.packbits(mat, axis=1, bitorder="little")
        yield _trusted(n, [int.from_bytes(row.tobytes(), "little") for row in packed])


def test_criterion_7_generator_and_graph6():
    problems = [f"n={n}" for n in range(1, 8) if count_graphs(n) != brute_force_count(n)]
    rng = np.random.default_rng(20240607)
    checked = 0
    for n in (5, 10, 32, 64):
        for g in _random_graphs(n, 100_000, rng):
            checked += 1
            if decode(encode(g)) != g:
                problems.append(f"round trip failed for {encode(g)}")
                break
    record(7, "generator equals labeled oracle for n <= 7; graph6 round trip on 4 x 10^5 random graphs",
           not problems and checked == 400_000, "; ".join(problems))


def test_criterion_8_worked_example():
    problems = []
    for n in range(4, 9):
        h = delete_edge(complete_graph(n), 0, 1)
        v = zagreb_values(h)
        m1 = (n - 2) * (n - 1) ** 2 + 2 * (n - 2) ** 2
        m2 = n * (n - 1) ** 3 // 2 - (n - 1) * (3 * n - 5)
        co = zagreb_values(complement(h))
        if (v.m1, v.m2) != (m1, m2) or (co.m1, co.m2) != (2, 1):
            problems.append(f"n={n}: {(v.m1, v.m2)} vs {(m1, m2)}, complement {(co.m1, co.m2)}")
    record(8, "K_n - e matches its closed forms and its complement has M1=2, M2=1, n = 4..8", not problems,
           "; ".join(problems))


def _cli_stdout(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


@pytest.mark.slow
def test_criterion_9_conjecture_report():
    first = _cli_stdout("conjecture", "--max-n", "9", "--format", "csv")
    second = _cli_stdout("conjecture", "--max-n", "9", "--format", "csv")
    rows = conjecture_report(9)
    problems = []
    if first != second or first[0] != 0:
        problems.append("output not byte-identical")
    if [r.n for r in rows] != list(range(4, 10)):
        problems.append("missing rows")
    for r in rows:
        census_row = run_census(r.n)
        if r.count_a + r.count_b + r.count_c != r.total or (r.count_a, r.count_b, r.total) != (
            census_row.count_a,
            census_row.count_b,
            census_row.total,
        ):
            problems.append(f"n={r.n} inconsistent")
    observed = ", ".join(f"n={r.n}: |A|={r.count_a} |B|={r.count_b}" for r in rows)
    record(9, "conjecture report for n = 4..9 produced, consistent and reproducible", not problems,
           "; ".join(problems) or observed)


def _subprocess(*argv: str) -> bytes:
    proc = subprocess.run([sys.executable, "-m", "zagreb_census", *argv], capture_output=True, check=True)
    return proc.stdout


def test_criterion_10_determinism():
    census_args = ("census", "--n-min", "4", "--n-max", "8", "--format", "csv")
    sample_args = ("sample", "--n", "20", "--p", "0.5", "--trials", "100000", "--seed", "12345", "--format", "csv")
    outputs = {
        "census": [_subprocess(*census_args, "--jobs", j) for j in ("1", "1", "2")],
        "sample": [_subprocess(*sample_args, "--jobs", j) for j in ("1", "1", "3")],
    }
    problems = [k for k, outs in outputs.items() if len(set(outs)) != 1]
    record(10, "census and sampler byte-identical across runs and --jobs", not problems,
           f"differs: {problems}" if problems else "")
