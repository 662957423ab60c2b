"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line and the collected
lines are repeated in the terminal summary. Criteria 6, 7, 9, 10 and 11 are
checked exactly as stated; where the stated identity is false the test
fails, and an extra ``[INFO]`` line shows the corrected identity passing.
"""

import io
import itertools
import json
import time
from contextlib import redirect_stdout
from fractions import Fraction

from mmeixner import fock, genfun, meixner, moments
from mmeixner.cli import DEFAULT_PARAMS, run
from mmeixner.meixner import Params, indices
from mmeixner.testing import corrupt_recurrence

P1, P2, P3 = DEFAULT_PARAMS
XS = (Fraction(0), Fraction(2), Fraction(7, 2))
BETAS = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3))

RESULTS = []


def verdict(k, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {k:>2}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def info(k, ok, detail):
    line = f"[INFO] criterion {k:>2}: {detail} -> {'holds' if ok else 'fails'}"
    RESULTS.append(line)
    print(line)


def first_bad(reports):
    return next((r.to_json() for r in reports if not r), None)


def test_c01_generating_function_oracle():
    t0 = time.perf_counter()
    reps = [genfun.oracle_compare(P1, 6), genfun.oracle_compare(P2, 6), genfun.oracle_compare(P3, 4)]
    dt = time.perf_counter() - t0
    verdict(1, all(reps) and dt < 30,
            f"recurrence == n! x generating-function coefficient, orders 6/6/4 ({dt:.1f}s)")


def test_c02_first_degree_closed_form():
    reps = [r for p in DEFAULT_PARAMS for r in meixner.closed_form_sweep(p)]
    verdict(2, all(reps) and len(reps) == 6, "M_{e_i} = x - c_i beta/(1-c_i) for all i, 3 sets")


def test_c03_pairwise_and_paths():
    reps, weak = [], []
    for p in (P2, P3):
        reps += meixner.pairwise_sweep(p, 6)
        for r in meixner.path_sweep(p, 5):
            reps.append(r)
            if r.notes["distinct_paths"] < min(3, r.notes["lattice_paths"]):
                weak.append(r.instance["n"])
    verdict(3, all(reps) and not weak,
            f"pairwise relation for |n| <= 5 and path independence ({len(reps)} instances, "
            f">= min(3, #lattice paths) distinct paths each)")


def test_c04_orthogonality():
    t0 = time.perf_counter()
    reps = moments.orthogonality_sweep(P2, 5) + moments.orthogonality_sweep(P3, 3)
    nonzero = moments.contraction(P2, (1, 1), 0, 1)
    dt = time.perf_counter() - t0
    verdict(4, all(reps) and nonzero != 0 and dt < 60,
            f"exact zero contractions ({len(reps)} (n,i) pairs), j = n_i gives {nonzero} ({dt:.1f}s)")


def test_c05_step_and_contiguity():
    reps = meixner.relation_sweep(P2, 5)
    bad = first_bad(reps)
    verdict(5, bad is None, f"six step/contiguity relations at beta, beta+-1, |n| <= 4, "
                            f"{len(reps)} instances" + (f", first failure {bad['instance']}" if bad else ""))


def _orderings_passing(check, params, ns, **kw):
    out = []
    for o in itertools.permutations(range(params.r)):
        if all(check(params, n, ordering=o, **kw) for n in ns):
            out.append(tuple(v + 1 for v in o))
    return out


def test_c06_difference_equation_in_x():
    r1 = all(meixner.check_diffeq_x(P1, (n,), graded=False) for n in range(5))
    r2_ns = list(indices(2, 3))
    passing = _orderings_passing(meixner.check_diffeq_x, P2, r2_ns, graded=False)
    graded = _orderings_passing(meixner.check_diffeq_x, P2, r2_ns, graded=True)
    info(6, len(graded) == 2, f"graded-beta factors, r=2, orderings passing {graded}")
    verdict(6, r1 and bool(passing),
            f"x-difference equation as stated: r=1 {'ok' if r1 else 'fails'}, "
            f"r=2 orderings passing {passing}")


def test_c07_difference_equation_in_beta():
    r1 = all(meixner.check_diffeq_beta(P1, (n,), BETAS, graded=False) for n in range(5))
    r2_ns = list(indices(2, 3))
    passing = _orderings_passing(meixner.check_diffeq_beta, P2, r2_ns, beta_samples=BETAS, graded=False)
    graded = _orderings_passing(meixner.check_diffeq_beta, P2, r2_ns, beta_samples=BETAS, graded=True)
    info(7, len(graded) == 2, f"graded factors, r=2, orderings passing {graded}")
    verdict(7, r1 and bool(passing),
            f"beta-difference equation as stated at 5 beta samples: r=1 {'ok' if r1 else 'fails'}, "
            f"r=2 orderings passing {passing}")


def test_c08_fock_eigen_relation():
    reps = [fock.check_eigen(p, x, 8, i, fam)
            for p in (P1, P2) for x in XS for i in range(p.r) for fam in ("H", "Hbar")]
    verdict(8, all(reps), f"(H_i - x)v and (Hbar_i - x)v vanish for |n| <= 7, N=8 ({len(reps)} cases)")


def test_c09_commutator_and_weak_commutativity():
    cases = [(P2, 8, 0, 1), (P2, 8, 1, 0)] + [(P3, 6, i, j) for i, j in itertools.permutations(range(3), 2)]
    printed = [fock.check_commutator(p, N, i, j, form="on-shell") for p, N, i, j in cases]
    weak = [fock.check_weak_commute(p, x, N, i, j) for p, N, i, j in cases for x in XS]
    full = [fock.check_commutator(p, N, i, j, form="full") for p, N, i, j in cases]
    info(9, all(weak), "weak commutativity [H_i,H_j]v = 0 on eigenvectors, margin 2")
    info(9, all(full), "full normal-ordered commutator as a margin-2 matrix identity")
    bad = first_bad(printed)
    verdict(9, all(printed) and all(weak),
            "stated commutator as a margin-2 matrix identity"
            + (f"; first failure {bad['instance']}" if bad else ""))


def test_c10_ladder_and_intertwiners():
    printed = [fock.check_shift_relations(p, 8, XS, mixed="operator") for p in (P1, P2)]
    on_shell = [fock.check_shift_relations(p, 8, XS, mixed="on-shell") for p in (P1, P2)]
    info(10, all(on_shell), "mixed-index X/Xhat relations on eigenvectors, all else as matrices")
    bad = first_bad(printed)
    verdict(10, all(printed), "ladder/intertwiner operator identities and vector actions, N=8"
            + (f"; first failure {bad['instance']}" if bad else ""))


def test_c11_conjugation():
    printed = [fock.check_conjugation(p, 8, i, sign=1) for p in (P1, P2) for i in range(p.r)]
    true_sign = [fock.check_conjugation(p, 8, i, sign=-1) for p in (P1, P2) for i in range(p.r)]
    info(11, all(true_sign), "[R_i,H_0] = -R_i and Hbar_i = exp(L_i)(H_0 + R_i)exp(-L_i)")
    bad = first_bad(printed)
    verdict(11, all(printed), "[R_i,H_0] = R_i and Hbar_i = exp(L_i)(H_0 - R_i)exp(-L_i), N=8"
            + (f"; first failure {bad['instance']}" if bad else ""))


def test_c12_su11():
    reps = [fock.su11_checks(Params(1, b, (Fraction(1, 2),)), 8) for b in (1, 3)]
    verdict(12, all(reps), "su(1,1) brackets, Casimirs beta/2(beta/2-1) and -3/16, H = Hbar, "
                           "H + beta/2 in the algebra, N=8")


def test_c13_tight_margins():
    # a truncated product P A P B differs from P A B only where B leaves the
    # space and A comes back, so both identities below first break on the top degree
    N = 6
    basis = fock.FockBasis(2, N)
    lhs = fock.commutator(fock.hamiltonian(P2, 0).matrix(basis), fock.hamiltonian(P2, 1).matrix(basis))
    rhs = fock.commutator_closed_form(P2, 0, 1).matrix(basis)
    inside, outside = lhs.first_difference(rhs, 1), lhs.first_difference(rhs, 0)
    v = fock.eigvec(P2, 2, N)
    Hv = fock.op_matrix("H_1", P2, N) @ v
    e_inside, e_outside = Hv.first_difference(v * 2, 1), Hv.first_difference(v * 2, 0)
    ok = inside is None and outside is not None and e_inside is None and e_outside is not None
    where = basis.multi_index(outside) if outside is not None else None
    e_where = basis.multi_index(e_outside) if e_outside is not None else None
    verdict(13, ok, f"commutator exact for |n| <= N-1, violated at column {where}; "
                    f"eigen relation exact for |n| <= N-1, violated at component {e_where} (N={N})")


def _run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


def test_c14_cli_contract():
    code, out = _run_cli(["check", "all"])
    with corrupt_recurrence():
        bad_code, bad_out = _run_cli(["check", "all"])
    failure = None
    for run_ in json.loads(bad_out)["runs"]:
        failure = next((c["first_failure"] for c in run_["checks"] if not c["pass"]), None)
        if failure:
            break
    named = failure is not None and "instance" in failure
    verdict(14, code == 0 and json.loads(out)["pass"] and bad_code == 1 and named,
            f"mm check all exits {code}; with a corrupted recurrence it exits {bad_code}, "
            f"first failure {failure['relation'] if failure else None} {failure['instance'] if failure else ''}")
