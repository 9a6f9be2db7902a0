"""Named verification suites and their line-delimited reports.

Report format (UTF-8, one JSON object per line, keys sorted):

1. header: ``{"type": "header", "schema": SCHEMA, "suite": ..., "params": {...}}``
2. records, sorted by their serialization: ``{"type": "check", "check": ...,
   "group": ..., "attempted": int, "passed": int, ...}`` or
   ``{"type": "data", ...}`` for computed tables
3. one record ``{"type": "counterexample", ...}`` per failure (capped)
4. summary: ``{"type": "summary", "attempted": ..., "passed": ...,
   "failed": ..., "status": "pass" | "fail" | "inconclusive", ...}``

Wall time is never written into the report, so reruns are byte-identical.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field

from babytkk import conformal as cf
from babytkk import tkk, toroidal, twist
from babytkk.evaluate import CHECKS, counterexample
from babytkk.lattice import Stratum, in_S, stratum
from babytkk.modules import hw, sl2, vacuum
from babytkk.modules.forms import in_radical
from babytkk.scalars import as_scalar

SCHEMA = "babytkk-report/1"
MAX_COUNTEREXAMPLES = 50

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3

SUITES = (
    "tkk-jacobi",
    "toroidal-jacobi",
    "conformal-axioms",
    "ig-iso",
    "sigma-involution",
    "sigma-on-t",
    "phi-iso",
    "grading-compat",
    "twisted-jacobi",
    "sl2-embeddings",
    "vacuum-windows",
    "hw-module",
    "integrability",
    "ideal-window",
)

DEFAULTS = {
    "tkk-jacobi": dict(bound=1, samples=10000, degree=0, band=0),
    "toroidal-jacobi": dict(bound=1, samples=2000, degree=0, band=0),
    "conformal-axioms": dict(bound=1, samples=2000, degree=1, band=0),
    "ig-iso": dict(bound=2, samples=0, degree=0, band=0),
    "sigma-involution": dict(bound=2, samples=0, degree=2, band=0),
    "sigma-on-t": dict(bound=3, samples=0, degree=0, band=0),
    "phi-iso": dict(bound=2, samples=0, degree=0, band=0),
    "grading-compat": dict(bound=3, samples=0, degree=0, band=0),
    "twisted-jacobi": dict(bound=2, samples=10000, degree=0, band=0),
    "sl2-embeddings": dict(bound=3, samples=0, degree=0, band=0),
    "vacuum-windows": dict(bound=2, samples=0, degree=4, band=0),
    "hw-module": dict(bound=3, samples=0, degree=3, band=2),
    "integrability": dict(bound=0, samples=0, degree=2, band=2),
    "ideal-window": dict(bound=2, samples=0, degree=1, band=1),
}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteSpec:
    suite: str
    bound: int
    degree: int
    band: int
    samples: int
    seed: int = 0

    @classmethod
    def make(cls, suite: str, bound=None, degree=None, band=None, samples=None, seed=0) -> "SuiteSpec":
        if suite not in DEFAULTS:
            raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
        d = DEFAULTS[suite]
        spec = cls(
            suite,
            d["bound"] if bound is None else int(bound),
            d["degree"] if degree is None else int(degree),
            d["band"] if band is None else int(band),
            d["samples"] if samples is None else int(samples),
            int(seed),
        )
        for k in ("bound", "degree", "band", "samples"):
            if getattr(spec, k) < 0:
                raise UsageError(f"{k} must be nonnegative")
        return spec


@dataclass
class Report:
    spec: SuiteSpec
    records: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    # bookkeeping ----------------------------------------------------------------
    def tally(self, check: str, group: str, attempted: int, passed: int, **info) -> None:
        rec = {"type": "check", "check": check, "group": group, "attempted": attempted, "passed": passed}
        rec.update(info)
        self.records.append(rec)

    def data(self, **info) -> None:
        rec = {"type": "data"}
        rec.update(info)
        self.records.append(rec)

    def fail(self, ce: dict) -> None:
        self.counterexamples.append(ce)

    @property
    def attempted(self) -> int:
        return sum(r["attempted"] for r in self.records if r["type"] == "check")

    @property
    def passed(self) -> int:
        return sum(r["passed"] for r in self.records if r["type"] == "check")

    @property
    def status(self) -> str:
        if self.counterexamples or self.passed != self.attempted:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[self.status]

    def lines(self) -> list:
        def dump(obj):
            return json.dumps(obj, sort_keys=True, ensure_ascii=False, default=str)

        out = [dump({"type": "header", "schema": SCHEMA, "suite": self.spec.suite, "params": asdict(self.spec)})]
        out += sorted(dump(r) for r in self.records)
        ces = sorted(dump(c) for c in self.counterexamples)
        out += [dump({"type": "counterexample", **json.loads(c)}) for c in ces[:MAX_COUNTEREXAMPLES]]
        summary = {
            "type": "summary",
            "suite": self.spec.suite,
            "attempted": self.attempted,
            "passed": self.passed,
            "failed": self.attempted - self.passed,
            "counterexamples": len(self.counterexamples),
            "inconclusive": sorted(self.inconclusive),
            "status": self.status,
        }
        summary.update(self.extra)
        out.append(dump(summary))
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def _run(report: Report, check: str, group: str, algebra: str, cases) -> None:
    """Run a named check over argument tuples of elements."""
    fn = CHECKS[check]
    n = ok = 0
    for args in cases:
        n += 1
        if fn(algebra, *args):
            ok += 1
        else:
            report.fail(counterexample(check, algebra, args))
    report.tally(check, group, n, ok, algebra=algebra)


def _elems(cls, syms):
    return [cls._wrap({s: as_scalar(1)}) for s in syms]


def _sample_triples(rng: random.Random, pool: list, k: int):
    for _ in range(k):
        yield (rng.choice(pool), rng.choice(pool), rng.choice(pool))


# --- suites ---------------------------------------------------------------------------

def suite_tkk_jacobi(spec: SuiteSpec, report: Report) -> None:
    win = _elems(tkk.TkkElement, tkk.basis_window(spec.bound))
    _run(report, "antisymmetry", f"exhaustive[-{spec.bound},{spec.bound}]", "tkk", ((a, b) for a in win for b in win))
    _run(report, "jacobi", f"exhaustive[-{spec.bound},{spec.bound}]", "tkk",
         ((a, b, c) for a in win for b in win for c in win))
    if spec.samples:
        rng = random.Random(spec.seed)
        pool = _elems(tkk.TkkElement, tkk.basis_window(4))
        triples = list(_sample_triples(rng, pool, spec.samples))
        _run(report, "antisymmetry", "random[-4,4]", "tkk", ((a, b) for a, b, _ in triples))
        _run(report, "jacobi", "random[-4,4]", "tkk", triples)


def suite_toroidal_jacobi(spec: SuiteSpec, report: Report) -> None:
    win = _elems(toroidal.ToroidalElement, toroidal.basis_window(spec.bound))
    _run(report, "antisymmetry", f"exhaustive[-{spec.bound},{spec.bound}]", "toroidal",
         ((a, b) for a in win for b in win))
    rng = random.Random(spec.seed)
    _run(report, "jacobi", f"random[-{spec.bound},{spec.bound}]", "toroidal",
         list(_sample_triples(rng, win, spec.samples)))
    # the center really is central
    centers = [e for e in win if next(iter(e.terms))[0] != "x"]
    n = sum(1 for z in centers for a in win)
    ok = sum(1 for z in centers for a in win if not toroidal.toroidal_bracket(z, a))
    report.tally("central", f"exhaustive[-{spec.bound},{spec.bound}]", n, ok, algebra="toroidal")


def _conformal_window(bound: int, dmax: int) -> list:
    syms = []
    for g in cf.generator_window(bound):
        for j in range(dmax + 1):
            if g == cf.K1 and j:
                continue
            syms.append((j, g))
    return _elems(cf.ConformalElement, syms)


def suite_conformal_axioms(spec: SuiteSpec, report: Report) -> None:
    win = _conformal_window(spec.bound, spec.degree)
    group = f"gens[-{spec.bound},{spec.bound}],D<={spec.degree}"
    pairs = [(a, b) for a in win for b in win]
    _run(report, "conformal-skew", group, "conformal", pairs)
    _run(report, "conformal-partial", group, "conformal", pairs)
    base = _conformal_window(spec.bound, 0)
    rng = random.Random(spec.seed)
    _run(report, "conformal-jacobi", f"random gens[-{spec.bound},{spec.bound}]", "conformal",
         list(_sample_triples(rng, base, spec.samples)))


def suite_ig_iso(spec: SuiteSpec, report: Report) -> None:
    aff = _elems(cf.AffineElement, cf.affine_basis_window(spec.bound))
    group = f"exhaustive[-{spec.bound},{spec.bound}]"
    _run(report, "ig-inverse", group, "affine", ((a,) for a in aff))
    tor = _elems(toroidal.ToroidalElement, toroidal.basis_window(spec.bound))
    _run(report, "ig-inverse", group, "toroidal", ((t,) for t in tor))
    _run(report, "ig-hom", group, "affine", ((a, b) for a in aff for b in aff))


def suite_sigma_involution(spec: SuiteSpec, report: Report) -> None:
    win = _conformal_window(spec.bound, spec.degree)
    group = f"gens[-{spec.bound},{spec.bound}],D<={spec.degree}"
    _run(report, "sigma-involution", group, "conformal", ((a,) for a in win))
    _run(report, "sigma-partial", group, "conformal", ((a,) for a in win))
    _run(report, "sigma-graded", group, "conformal", ((a,) for a in win))
    gens = _conformal_window(spec.bound, min(spec.degree, 1))
    _run(report, "sigma-products", f"gens[-{spec.bound},{spec.bound}],D<=1", "conformal",
         ((a, b) for a in gens for b in gens))


def suite_sigma_on_t(spec: SuiteSpec, report: Report) -> None:
    syms = toroidal.basis_window(spec.bound)
    n = ok = 0
    for s in syms:
        e = toroidal.ToroidalElement({s: 1})
        n += 1
        if CHECKS["sigma-t-table"]("toroidal", e):
            ok += 1
        else:
            report.fail(counterexample("sigma-t-table", "toroidal", (e,)))
    report.tally("sigma-t-table", f"exhaustive[-{spec.bound},{spec.bound}]", n, ok, algebra="toroidal")
    small = _elems(toroidal.ToroidalElement, toroidal.basis_window(1))
    _run(report, "sigma-t-hom", "exhaustive[-1,1]", "toroidal", ((a, b) for a in small for b in small))


# subcases of the homomorphism proof ---------------------------------------------------

REQUIRED_SUBCASES = (
    "R1-i-sub1", "R1-i-sub2", "R1-ii", "R1-iii", "R1-iv",
    "R2-i", "R2-ii-sub1", "R2-ii-sub2",
    "R3-i-sub1", "R3-i-sub2", "R3-ii",
    "R4",
)


def subcase(a, b) -> str:
    """Label of the proof case an ordered pair of TKK symbols falls in."""
    ka, kb = a[0], b[0]
    rho, tau = (a[1], a[2]), (b[1], b[2])
    if ka in tkk.CENTRAL or kb in tkk.CENTRAL:
        return "R4"
    if ka == "h" and kb == "h":
        if not in_S(rho) and in_S(tau):
            return "R1-i-sub2" if stratum(tau) is Stratum.S2 else "R1-i-sub1"
        if in_S(rho) and not in_S(tau):
            return "R1-i-mirror"
        if not in_S(rho):
            return "R1-ii"
        s = (rho[0] + tau[0], rho[1] + tau[1])
        return "R1-iii" if in_S(s) else "R1-iv"
    if ka == "h" or kb == "h":
        hr, xt = (rho, tau) if ka == "h" else (tau, rho)
        mirror = "" if ka == "h" else "-mirror"
        if in_S(hr):
            return "R2-i" + mirror
        return ("R2-ii-sub2" if stratum(xt) is Stratum.S2 else "R2-ii-sub1") + mirror
    if ka == kb:
        return "R3-same"
    p, m = (rho, tau) if ka == "x+" else (tau, rho)
    mirror = "" if ka == "x+" else "-mirror"
    s = (p[0] + m[0], p[1] + m[1])
    if in_S(s):
        return "R3-ii" + mirror
    if stratum(p) is Stratum.S1:
        return "R3-i-sub1" + mirror
    return "R3-i-sub2" + mirror


def suite_phi_iso(spec: SuiteSpec, report: Report) -> None:
    syms = tkk.basis_window(spec.bound)
    group = f"exhaustive[-{spec.bound},{spec.bound}]"
    tk = _elems(tkk.TkkElement, syms)
    _run(report, "phi-inverse", group, "tkk", ((a,) for a in tk))
    tw = _elems(twist.TwistedElement, twist.basis_window(spec.bound))
    _run(report, "phi-inverse", group, "twisted", ((b,) for b in tw))
    hits: dict = {}
    fails: dict = {}
    fn = CHECKS["phi-hom"]
    for a, ea in zip(syms, tk):
        for b, eb in zip(syms, tk):
            label = subcase(a, b)
            hits[label] = hits.get(label, 0) + 1
            if not fn("tkk", ea, eb):
                fails[label] = fails.get(label, 0) + 1
                report.fail(counterexample("phi-hom", "tkk", (ea, eb)))
    for label in sorted(hits):
        report.tally("phi-hom", label, hits[label], hits[label] - fails.get(label, 0), algebra="tkk")
    missing = [s for s in REQUIRED_SUBCASES if not hits.get(s)]
    report.inconclusive += [f"subcase {s} not hit" for s in missing]
    report.extra["subcase_hits"] = {s: hits.get(s, 0) for s in REQUIRED_SUBCASES}


def suite_grading_compat(spec: SuiteSpec, report: Report) -> None:
    tk = _elems(tkk.TkkElement, tkk.basis_window(spec.bound))
    _run(report, "grading", f"exhaustive[-{spec.bound},{spec.bound}]", "tkk", ((a,) for a in tk))


def suite_twisted_jacobi(spec: SuiteSpec, report: Report) -> None:
    pool = _elems(twist.TwistedElement, twist.basis_window(spec.bound))
    rng = random.Random(spec.seed)
    triples = list(_sample_triples(rng, pool, spec.samples))
    group = f"random[-{spec.bound},{spec.bound}]"
    _run(report, "antisymmetry", group, "twisted", ((a, b) for a, b, _ in triples))
    _run(report, "jacobi", group, "twisted", triples)


def suite_sl2_embeddings(spec: SuiteSpec, report: Report) -> None:
    for kind, params in sl2.all_embeddings():
        emb = sl2.sl2_embedding(kind, *params, check=False)
        bad = emb.relation_failures(spec.bound)
        k = 6 * spec.bound + 4
        report.tally("sl2-relations", emb.describe(), k * k, k * k - len(bad),
                     ambient=emb.ambient, level_scale=str(emb.level_scale))
        for a, b in bad:
            report.fail({"check": "sl2-relations", "embedding": emb.describe(), "pair": [list(a), list(b)]})


def suite_vacuum_windows(spec: SuiteSpec, report: Report) -> None:
    N = spec.degree
    for level in range(spec.bound + 1):
        res = sl2.sl2_vacuum_windows(level, N)
        report.data(table="sl2-vacuum", level=level,
                    **{k: {str(d): v for d, v in res[k].items()} for k in ("verma", "closure_quotient", "gram_rank")})
        report.tally("closure-vs-gram", f"level={level}", N + 1,
                     sum(1 for d in range(N + 1) if res["closure_quotient"][d] == res["gram_rank"][d]))
        if level == 0:
            report.tally("trivial-at-level-0", "level=0", N, sum(1 for d in range(1, N + 1) if res["gram_rank"][d] == 0))


DEFAULT_TRIPLES = (
    (("1",), ("0",), ("1",)),
    (("1",), ("1",), ("2",)),
)


def _triple(t) -> hw.WeightData:
    return hw.WeightData.make(*t)


def _triple_label(w: hw.WeightData) -> str:
    return "((" + ",".join(map(str, w.lam)) + "),(" + ",".join(map(str, w.mu)) + "),(" + ",".join(map(str, w.c)) + "))"


def hw_action_checks(w: hw.WeightData, bound: int) -> tuple:
    """(attempted, passed, failures) for the Cartan action on v, read off the
    module itself (acting on the generating vector) against the defining sums."""
    mod = hw.tkk_verma(w)
    v = {(): as_scalar(1)}

    def act(elem):
        out: dict = {}
        for s, c in elem.terms.items():
            for k, x in mod.act(s, v).items():
                out[k] = out.get(k, 0) + x * c
        return {k: x for k, x in out.items() if x}

    def scalar(elem):
        r = act(elem)
        if set(r) - {()}:
            return None
        return r.get((), as_scalar(0))

    cases = []
    for m in range(-bound, bound + 1):
        cases.append((f"h(0,{m})", tkk.h(0, m), w.power_sum(w.lam, m)))
        cases.append((f"2*C1(0,{2 * m}) - h(0,{2 * m})", tkk.C1(0, 2 * m) * 2 - tkk.h(0, 2 * m), w.power_sum(w.mu, m)))
    cases.append(("C2(0,0)", tkk.C2(0, 0), as_scalar(0)))
    cases.append(("2*C1(0,0)", tkk.C1(0, 0) * 2, as_scalar(w.level)))
    bad = [(label, str(want)) for label, elem, want in cases if scalar(elem) != want]
    # C2(2m, 0) off the Cartan part: zero in the irreducible quotient, i.e. the
    # image of v lies in the radical (m < 0) or vanishes (m > 0)
    n_extra = 0
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        n_extra += 1
        sym = ("C2", 2 * m, 0)
        img = mod.act(sym, v)
        if img and not in_radical(mod, img, hw.plus_generators(hw.pdeg(sym), 0)):
            bad.append((f"C2({2 * m},0)", "0 in the quotient"))
    return len(cases) + n_extra, len(cases) + n_extra - len(bad), bad


def suite_hw_module(spec: SuiteSpec, report: Report) -> None:
    N, band = spec.degree, spec.band
    n_om = len(tkk.basis_window(2)) ** 2
    bad_om = hw.omega_failures(2)
    report.tally("omega-anti-automorphism", "window[-2,2]", n_om, n_om - len(bad_om))
    for t in DEFAULT_TRIPLES:
        w = _triple(t)
        label = _triple_label(w)
        ok, diags = hw.validate_triple(w, w.level)
        report.tally("valid-triple", label, 1, int(ok))
        n, p, bad = hw_action_checks(w, spec.bound)
        report.tally("highest-weight-action", label, n, p)
        for b in bad:
            report.fail({"check": "highest-weight-action", "triple": label, "element": b[0], "expected": b[1]})
        gens = [s for syms in hw.minus_generators(1, 1).values() for s in syms]
        gens += [hw.tkk_omega(s)[0] for s in gens]
        cbad = hw.contravariance_failures(w, min(N, 2), 1, gens)
        win = hw.build_verma_window(w, min(N, 2), 1)
        attempted = sum(1 for _ in gens) * sum(len(b) for b in win.basis.values())
        report.tally("contravariance", f"{label},N={min(N, 2)},W=1", attempted, attempted - len(cbad))
        # level and C2 on every window vector
        lw = hw.build_verma_window(w, N, 1)
        n = ok = 0
        for monos in lw.basis.values():
            for u in monos:
                vec = {u: as_scalar(1)}
                n += 1
                lv = lw.module.act(("C1", 0, 0), vec)
                c2 = lw.module.act(("C2", 0, 0), vec)
                if {k: x * 2 for k, x in lv.items()} == {u: as_scalar(w.level)} and not c2:
                    ok += 1
        report.tally("level-and-C2", f"{label},N={N},W=1", n, ok)
        rows = hw.gram_rank_stabilized(w, N, range(1, band + 1))
        for r in rows:
            report.data(table="gram-rank", triple=label, **r)
            if r["band"] > 1:
                prev = next(x for x in rows if x["degree"] == r["degree"] and x["band"] == r["band"] - 1)
                report.tally("rank-monotone-in-band", f"{label},d={r['degree']},W={r['band']}", 1,
                             int(r["gram_rank"] >= prev["gram_rank"]))
        last = [r for r in rows if r["band"] == band]
        unstable = [r["degree"] for r in last if r["stabilized"] is False]
        if band < 2 or unstable:
            report.inconclusive.append(f"{label}: ranks not stabilized at band {band} in degrees {unstable}")


def suite_integrability(spec: SuiteSpec, report: Report) -> None:
    for t in DEFAULT_TRIPLES:
        w = _triple(t)
        label = _triple_label(w)
        win = hw.build_verma_window(w, spec.degree, spec.band)
        res = hw.integrability_check(win, w.level)
        report.tally("field-power-in-radical", f"{label},N={spec.degree},W={spec.band}", res["checks"],
                     res["checks"] - len(res["violations"]), zero_in_verma=res["zero_in_verma"])
        nil = res["nilpotency"]
        report.tally("local-nilpotency", f"{label},N={spec.degree},W={spec.band}", nil["checks"],
                     nil["checks"] - len(nil["violations"]))
        for v in res["violations"] + nil["violations"]:
            report.fail({"check": "integrability", "triple": label, **v})


def suite_ideal_window(spec: SuiteSpec, report: Report) -> None:
    for level in (0, 1, 2):
        exps = vacuum.exponent_table(level)
        want = {b: int(sl2.c_beta(b)) * level + 1 for b in sl2.ROOTS}
        long_ok = all(exps[b] == level + 1 for b in ("2e1", "-2e1", "2e2", "-2e2"))
        short_ok = all(exps[b] == 2 * level + 1 for b in ("e1-e2", "-e1+e2"))
        report.tally("exponents", f"level={level}", 1, int(exps == want and long_ok and short_ok),
                     exponents=exps)
        rows = vacuum.sigma_invariance(level, spec.bound)
        for r in rows:
            if r["image"] is None:
                report.fail({"check": "sigma-invariance", "level": level, "beta": r["beta"], "n": r["n"]})
        report.tally("sigma-invariance", f"level={level},|n|<={spec.bound}", len(rows),
                     sum(1 for r in rows if r["image"] is not None))
    res = vacuum.ideal_window(0, spec.degree, spec.band)
    report.data(table="ideal-window", level=0, N=spec.degree, W=spec.band,
                verma={str(d): v for d, v in res["verma"].items()},
                ideal_lower={str(d): v for d, v in res["ideal_lower"].items()},
                quotient_upper={str(d): v for d, v in res["quotient_upper"].items()})
    q = res["quotient_upper"]
    report.tally("level-0-quotient-trivial", f"N={spec.degree},W={spec.band}", 1,
                 int(q[0] == 1 and all(q[d] == 0 for d in range(1, min(spec.degree, 1) + 1))))


RUNNERS = {
    "tkk-jacobi": suite_tkk_jacobi,
    "toroidal-jacobi": suite_toroidal_jacobi,
    "conformal-axioms": suite_conformal_axioms,
    "ig-iso": suite_ig_iso,
    "sigma-involution": suite_sigma_involution,
    "sigma-on-t": suite_sigma_on_t,
    "phi-iso": suite_phi_iso,
    "grading-compat": suite_grading_compat,
    "twisted-jacobi": suite_twisted_jacobi,
    "sl2-embeddings": suite_sl2_embeddings,
    "vacuum-windows": suite_vacuum_windows,
    "hw-module": suite_hw_module,
    "integrability": suite_integrability,
    "ideal-window": suite_ideal_window,
}


def run_suite(spec: SuiteSpec) -> Report:
    report = Report(spec)
    RUNNERS[spec.suite](spec, report)
    return report


def parse_report(text: str) -> list:
    return [json.loads(line) for line in text.splitlines() if line.strip()]
