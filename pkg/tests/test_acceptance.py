"""Acceptance criteria, one test each.  Every test appends a line
``criterion N: PASS|FAIL <detail>`` to the shared log printed at the end of the
run.  Also runnable directly: ``python3 tests/test_acceptance.py``."""

import time
from functools import lru_cache

import pytest

from babytkk import conformal as cf
from babytkk import tkk, toroidal, twist
from babytkk.evaluate import sigma_t_table
from babytkk.modules import sl2, vacuum
from babytkk.scalars import I
from babytkk.suites import REQUIRED_SUBCASES, SUITES, SuiteSpec, run_suite

HALF = twist.HALF
TIMES: dict = {}


@lru_cache(maxsize=None)
def default_report(suite):
    t0 = time.perf_counter()
    rep = run_suite(SuiteSpec.make(suite))
    TIMES[suite] = time.perf_counter() - t0
    return rep


def checks(rep, name, group_prefix=""):
    recs = [r for r in rep.records if r["type"] == "check" and r["check"] == name and r["group"].startswith(group_prefix)]
    return sum(r["attempted"] for r in recs), sum(r["passed"] for r in recs)


def record(log, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    log.append(line)
    print(line)
    assert ok, line


def test_criterion_01_tkk_jacobi(acceptance_log):
    rep = default_report("tkk-jacobi")
    ex = checks(rep, "jacobi", "exhaustive[-1,1]")
    rnd = checks(rep, "jacobi", "random[-4,4]")
    n_win = len(tkk.basis_window(1))
    ok = (rep.status == "pass" and ex == (n_win ** 3,) * 2 and rnd == (10000, 10000)
          and TIMES["tkk-jacobi"] < 120)
    record(acceptance_log, 1, ok,
           f"tkk Jacobi exhaustive {ex[1]}/{ex[0]}, random {rnd[1]}/{rnd[0]} in {TIMES['tkk-jacobi']:.1f}s")


def test_criterion_02_ig_isomorphism(acceptance_log):
    rep = default_report("ig-iso")
    hom = checks(rep, "ig-hom")
    inv = checks(rep, "ig-inverse")
    n_aff = len(cf.affine_basis_window(2))
    ok = rep.status == "pass" and hom[0] == n_aff ** 2 and hom[0] == hom[1] and inv[0] == inv[1] > 0
    record(acceptance_log, 2, ok, f"i_g hom {hom[1]}/{hom[0]}, inverses {inv[1]}/{inv[0]} on [-2,2]")


def test_criterion_03_sigma(acceptance_log):
    reps = [default_report("sigma-involution"), default_report("sigma-on-t")]
    parts = {name: checks(reps[0], name) for name in ("sigma-involution", "sigma-partial", "sigma-graded", "sigma-products")}
    parts["sigma-t-hom"] = checks(reps[1], "sigma-t-hom")
    # the table itself, independently of the suite, for |m|,|n| <= 3
    syms = toroidal.basis_window(3)
    table_ok = sum(1 for s in syms if twist.sigma_t(toroidal.ToroidalElement({s: 1})) == sigma_t_table(s))
    ok = all(r.status == "pass" for r in reps) and all(a == p > 0 for a, p in parts.values()) and table_ok == len(syms)
    detail = ", ".join(f"{k} {p}/{a}" for k, (a, p) in parts.items())
    record(acceptance_log, 3, ok, f"{detail}, table {table_ok}/{len(syms)}")


def test_criterion_04_phi(acceptance_log):
    rep = default_report("phi-iso")
    hom = checks(rep, "phi-hom")
    hits = rep.extra["subcase_hits"]
    ok = (rep.status == "pass" and hom[0] == hom[1] == len(tkk.basis_window(2)) ** 2
          and all(hits[s] > 0 for s in REQUIRED_SUBCASES) and TIMES["phi-iso"] < 600)
    record(acceptance_log, 4, ok,
           f"phi hom {hom[1]}/{hom[0]} on [-2,2], {sum(1 for s in REQUIRED_SUBCASES if hits[s])}/"
           f"{len(REQUIRED_SUBCASES)} subcases hit, {TIMES['phi-iso']:.1f}s")


def test_criterion_05_grading(acceptance_log):
    rep = default_report("grading-compat")
    a, p = checks(rep, "grading")
    ok = rep.status == "pass" and a == p == len(tkk.basis_window(3))
    record(acceptance_log, 5, ok, f"grading compatible on {p}/{a} window symbols")


def test_criterion_06_field_coeff(acceptance_log):
    n = bad = 0
    for m in range(-3, 4):
        for k in range(-3, 4):
            want = {}
            for j in (0, 1):
                want[("E13", j)] = tkk.xp(2 * m + j, 2 * k) * HALF
                want[("E31", j)] = tkk.xm(2 * m + j, 2 * k) * HALF
                want[("E11-E33", j)] = tkk.h(2 * m + j, 2 * k) * HALF
                want[("E14+E23", j)] = tkk.h(2 * m + j, 2 * k + 1) * (-I * HALF)
            want[("E12-E43", 0)] = tkk.xp(2 * m, 2 * k - 1) * -I
            want[("E12-E43", 1)] = tkk.TkkElement()
            for (fam, j), w in want.items():
                n += 1
                bad += twist.field_coeff(fam, k, j, m) != w
    record(acceptance_log, 6, bad == 0, f"field coefficients {n - bad}/{n} for |m|,|n| <= 3")


def test_criterion_07_embeddings(acceptance_log):
    embs = sl2.all_embeddings((-3, -2, -1, 0, 1, 2, 3))
    fails, scales = [], {}
    for kind, params in embs:
        emb = sl2.sl2_embedding(kind, *params, check=False)
        if emb.relation_failures(3):
            fails.append(emb.describe())
        scales[emb.describe()] = emb.level_scale
    want_scale = {"A": 2, "B": 4, "a0": 2, "a1": 4}
    scale_ok = all(
        v == (sl2.c_beta(d[2:].split(",")[0]) if d.startswith("I(") else want_scale[d.split("(")[0]])
        for d, v in scales.items()
    )
    ok = not fails and scale_ok
    record(acceptance_log, 7, ok, f"{len(embs) - len(fails)}/{len(embs)} embeddings satisfy the sl2-hat relations, "
                                  f"level scales {'match' if scale_ok else 'differ'}")


def test_criterion_08_vacuum_windows(acceptance_log):
    N = 4
    detail, ok = [], True
    for level in (0, 1, 2):
        res = sl2.sl2_vacuum_windows(level, N)
        same = all(res["closure_quotient"][d] == res["gram_rank"][d] for d in range(N + 1))
        ok &= same
        detail.append(f"level {level}: {[res['gram_rank'][d] for d in range(N + 1)]}")
        if level == 0:
            ok &= all(res["gram_rank"][d] == 0 for d in range(1, N + 1))
    record(acceptance_log, 8, ok, "closure = Gram rank; " + "; ".join(detail))


def test_criterion_09_integrability(acceptance_log):
    rep = default_report("integrability")
    fp = checks(rep, "field-power-in-radical")
    nil = checks(rep, "local-nilpotency")
    ok = rep.status == "pass" and fp[0] == fp[1] > 0 and nil[0] == nil[1] > 0
    record(acceptance_log, 9, ok, f"field powers {fp[1]}/{fp[0]}, nilpotency {nil[1]}/{nil[0]} at N=2, band 2")


def test_criterion_10_highest_weight_action(acceptance_log):
    rep = default_report("hw-module")
    act = checks(rep, "highest-weight-action")
    lev = checks(rep, "level-and-C2")
    om = checks(rep, "omega-anti-automorphism")
    ok = rep.status == "pass" and act[0] == act[1] > 0 and lev[0] == lev[1] > 0 and om[0] == om[1]
    record(acceptance_log, 10, ok, f"Cartan action {act[1]}/{act[0]}, level and C2 {lev[1]}/{lev[0]}")


def test_criterion_11_ideal(acceptance_log):
    rows = vacuum.sigma_invariance(1, 2)
    inv = sum(1 for r in rows if r["image"] is not None)
    exps = vacuum.exponent_table(1)
    exp_ok = all(exps[b] == 2 for b in ("2e1", "-2e1", "2e2", "-2e2")) and all(exps[b] == 3 for b in ("e1-e2", "-e1+e2"))
    ok = rows and inv == len(rows) and exp_ok and default_report("ideal-window").status == "pass"
    record(acceptance_log, 11, bool(ok), f"sigma maps {inv}/{len(rows)} generators into the ideal at level 1, "
                                         f"exponents {sorted(set(exps.values()))}")


def test_criterion_12_determinism(acceptance_log):
    same = [s for s in SUITES if run_suite(SuiteSpec.make(s)).text() == default_report(s).text()]
    record(acceptance_log, 12, len(same) == len(SUITES), f"{len(same)}/{len(SUITES)} suites byte-identical on rerun")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
