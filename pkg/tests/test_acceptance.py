"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line."""

import os

from wordrep import sweeps

JOBS = max(1, min(8, os.cpu_count() or 1))
LIMITS = {1: 600, 2: 900, 3: 300, 6: 300, 8: 1800}


def emit(capsys, text: str) -> None:
    with capsys.disabled():
        print(text, flush=True)


def report(capsys, number: int, rep: sweeps.SweepReport) -> None:
    limit = LIMITS.get(number)
    within = limit is None or rep.elapsed <= limit
    ok = rep.passed and within
    budget = "" if limit is None else f" limit={limit}s"
    body = rep.line().split(" ", 1)[1]
    lines = [f"\n{'PASS' if ok else 'FAIL'} criterion {number} {body}{budget}"]
    lines += [f"    {d}" for d in rep.discrepancies[:10]]
    emit(capsys, "\n".join(lines))
    assert rep.passed, rep.discrepancies[:10]
    assert within, f"took {rep.elapsed:.1f}s, limit {limit}s"


def test_criterion_01_recognition_vs_oracle(capsys):
    report(capsys, 1, sweeps.sweep_recognition(JOBS))


def test_criterion_02_cco_equivalences(capsys):
    report(capsys, 2, sweeps.sweep_cco(JOBS, random_count=1000))


def test_criterion_03_tucker_reduction(capsys):
    report(capsys, 3, sweeps.sweep_tucker(JOBS))


def test_criterion_04_dcircular_vs_monotone_circular(capsys):
    report(capsys, 4, sweeps.sweep_mco(JOBS))


def test_criterion_05_forbidden_family_minimality(capsys):
    report(capsys, 5, sweeps.sweep_minimality())


def test_criterion_06_word_fixture(capsys):
    report(capsys, 6, sweeps.sweep_word_fixture())


def test_criterion_07_local_complementation(capsys):
    report(capsys, 7, sweeps.sweep_local_complement())


def test_criterion_08_circle_equals_permutation(capsys):
    report(capsys, 8, sweeps.sweep_circle(JOBS))


def test_criterion_09_witness_validity(capsys):
    # sweeps 1 and 5 validate every witness and certificate they emit; this
    # adds every co-bipartition of the same graphs
    reps = [sweeps.sweep_witnesses(JOBS), sweeps.sweep_recognition(JOBS), sweeps.sweep_minimality()]
    merged = sweeps.SweepReport("witness-validity",
                                checked=sum(r.checked for r in reps),
                                discrepancies=[d for r in reps for d in r.discrepancies],
                                elapsed=sum(r.elapsed for r in reps))
    report(capsys, 9, merged)


def test_criterion_10_near_linear_decision(capsys):
    rows = sweeps.bench(sweeps.BENCH_SIZES)
    slope = sweeps.fit_exponent(rows)
    decisions = all(r.decision for r in rows)
    ok = slope <= 1.5 and decisions
    lines = [f"\n{'PASS' if ok else 'FAIL'} criterion 10: exponent={slope:.3f} threshold=1.5 "
             f"all_yes={decisions}"]
    lines += [f"    size={r.size} rows={r.rows} cols={r.cols} ones={r.ones} time={r.ns / 1e9:.3f}s"
              for r in rows]
    emit(capsys, "\n".join(lines))
    assert decisions
    assert slope <= 1.5
