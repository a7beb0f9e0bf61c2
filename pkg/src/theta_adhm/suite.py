"""The full verification suite behind ``theta-adhm suite``.

Each check is a function of the seed returning a :class:`CheckResult`.  Checks
run on a thread pool capped by ``THETA_ADHM_THREADS``; the report is sorted
by check name, so it does not depend on completion order.  Wall times are kept
out of the machine-readable report to keep it byte-identical across runs.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra import folded_word_phase, untwist_phase_oracle
from .fuzz import random_element, random_homogeneous, random_word
from .gauge import (
    CrossedElement,
    commutation_exponent_landstad,
    box_pairs,
    convolve,
    dual_gauge,
    gauge_monad_family,
    relation_phases,
    verify_theorem_final,
)
from .monad import (
    bpst,
    check_monad_condition,
    check_nondegeneracy,
    check_self_conjugacy,
    classical_adhm_relations,
    conjugate_monad,
    deformed_family_relations,
    evaluate_family,
    find_equivalence,
    group_act,
    random_group_triple,
    random_monad,
    specialize_at_one,
)
from .numrep import check_rep
from .phase import Degree
from .twistor import C4, make_context, printed_x2_variant, verify_j, verify_projection_relations, verify_sphere_relation

__all__ = ["CheckResult", "SuiteReport", "CHECKS", "run_suite", "thread_count"]


@dataclass
class CheckResult:
    name: str
    claim: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "ok": self.ok, "detail": self.detail}


@dataclass
class SuiteReport:
    seed: int
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {"seed": self.seed, "ok": self.ok, "checks": [r.to_json() for r in self.results]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"seed {self.seed}"]
        for r in self.results:
            lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<24} {r.seconds:7.2f}s  {r.claim}")
        lines.append("all checks passed" if self.ok else "some checks FAILED")
        return "\n".join(lines)


def _pt(d) -> list:
    return list(Degree.of(d))


def theorem_sweep(seed: int, radius: int = 4, box: int = 3) -> CheckResult:
    wrong = []
    for m1 in range(-box, box + 1):
        for m2 in range(-box, box + 1):
            rep = verify_theorem_final((m1, m2), radius)
            if rep.ok != (m1 + m2 == 1):
                wrong.append(rep.to_json())
    return CheckResult(
        "theorem_final_sweep",
        "winding-number Landstad algebra is commutative exactly when m1 + m2 = 1",
        not wrong,
        {"radius": radius, "m_box": box, "mismatches": wrong[:5]},
    )


def sphere(seed: int) -> CheckResult:
    ctx = make_context()
    ok = verify_sphere_relation(ctx)
    printed = verify_sphere_relation(ctx, x2=printed_x2_variant(ctx))
    return CheckResult(
        "sphere_relation",
        "x1* x1 + x2* x2 + x0^2 = (r^2)^2 with formal lam; printed x2 expansion rejected",
        ok and not printed,
        {"relation": ok, "printed_variant": printed},
    )


def projection(seed: int) -> CheckResult:
    ok = verify_projection_relations(make_context())
    return CheckResult("projection_relations", "q^2 = r^2 q, trace q = r^2, q* = q", ok, {})


def j_structure(seed: int) -> CheckResult:
    res = verify_j(make_context(), pairs=500, seed=seed)
    return CheckResult(
        "j_structure",
        "quaternionic J: product law, q-table, fixes the sphere, J^2 = id on q",
        all(res.values()),
        res,
    )


def bpst_monad(seed: int) -> CheckResult:
    d = bpst()
    nd = check_nondegeneracy(d, samples=100, seed=seed)
    res = {
        "classical": check_monad_condition(d),
        "deformed": check_monad_condition(d, deformed=True),
        "self_conjugate": check_self_conjugacy(d),
        "nondegenerate": nd.ok,
    }
    return CheckResult("bpst_monad", "basic instanton datum is a nondegenerate self-conjugate monad", all(res.values()), res)


def family_reduction(seed: int, gauges: int = 10) -> CheckResult:
    p = deformed_family_relations(1, 2)
    reduces = specialize_at_one(p) == classical_adhm_relations(1, 2)
    d = bpst()
    before = not any(evaluate_family(p, d).values())
    rng = random.Random(seed)
    after = True
    units = True
    for _ in range(gauges):
        xi = Degree(rng.randint(-5, 5), rng.randint(-5, 5))
        q = gauge_monad_family(p, xi)
        after = after and not any(evaluate_family(q, d).values())
        units = units and all(t is not None for t in relation_phases(p, q).values())
    res = {"relations": len(p.relations), "reduces_at_lam_1": reduces, "bpst_annihilates": before,
           "gauged_bpst_annihilates": after, "gauge_unit_phases": units}
    return CheckResult(
        "family_reduction",
        "deformed family relations reduce to the ADHM equations and vanish at the basic datum",
        reduces and before and after and units,
        res,
    )


def oracle_words(seed: int, samples: int = 1000) -> CheckResult:
    rng = random.Random(seed)
    for _ in range(samples):
        w = random_word(C4, rng, 12)
        a, b = folded_word_phase(C4, w), untwist_phase_oracle(C4, w)
        if a != b:
            return CheckResult("oracle_words", "folded product phase equals bubble-sort oracle", False,
                               {"word": w, "folded": a, "oracle": b})
    return CheckResult("oracle_words", "folded product phase equals bubble-sort oracle", True, {"samples": samples})


def matrix_rep(seed: int) -> CheckResult:
    reports = [check_rep(q, pairs=200, seed=seed) for q in (3, 5, 7)]
    return CheckResult(
        "matrix_representation",
        "clock-and-shift matrices satisfy every relation of the symbolic engine",
        all(r["ok"] for r in reports),
        {"reports": reports},
    )


def gauge_laws(seed: int, samples: int = 50, radius: int = 4, box: int = 3) -> CheckResult:
    rng = random.Random(seed)
    group_law = True
    for _ in range(samples):
        a = random_element(C4, rng)
        xi = Degree(rng.randint(-3, 3), rng.randint(-3, 3))
        eta = Degree(rng.randint(-3, 3), rng.randint(-3, 3))
        group_law = group_law and dual_gauge(dual_gauge(a, xi), eta) == dual_gauge(a, xi + eta)
    assoc = True
    for _ in range(samples):
        f, g, h = (_random_crossed(rng) for _ in range(3))
        assoc = assoc and convolve(convolve(f, g), h) == convolve(f, convolve(g, h))
    agree = True
    first = None
    for m1 in range(-box, box + 1):
        for m2 in range(-box, box + 1):
            for zeta, xi in box_pairs(radius):
                try:
                    commutation_exponent_landstad((m1, m2), zeta, xi, "both")
                except ArithmeticError:
                    agree = False
                    first = {"m": [m1, m2], "zeta": _pt(zeta), "xi": _pt(xi)}
                    break
            if not agree:
                break
        if not agree:
            break
    res = {"group_law": group_law, "associative": assoc, "symbolic_equals_closed": agree}
    if first:
        res["first_disagreement"] = first
    return CheckResult("gauge_laws", "dual gauge action, convolution and the commutation exponent", all(
        (group_law, assoc, agree)), res)


def _random_crossed(rng: random.Random) -> CrossedElement:
    terms = []
    for _ in range(rng.randint(1, 2)):
        v = random_homogeneous(C4, rng, max_len=2)
        terms.append((Degree(rng.randint(-2, 2), rng.randint(-2, 2)), v.degree(), v))
    return CrossedElement(C4, terms)


def equivalence(seed: int, samples: int = 50) -> CheckResult:
    rng = random.Random(seed)
    recovered = 0
    failures = []
    for i in range(samples):
        k, n = ((1, 1), (1, 2), (2, 1))[i % 3]
        d = random_monad(k, n, rng, self_conjugate=i % 2 == 0)
        target = group_act(d, random_group_triple(k, n, rng))
        w = find_equivalence(d, target)
        if w is not None and group_act(d, w) == target:
            recovered += 1
        else:
            failures.append(i)
    b = bpst()
    w = find_equivalence(b, conjugate_monad(b))
    self_conj = w is not None and group_act(b, w) == conjugate_monad(b)
    res = {"recovered": recovered, "samples": samples, "failures": failures[:5], "bpst_vs_conjugate": self_conj}
    return CheckResult("equivalence_witnesses", "equivalence witnesses are found and reproduce the target",
                       not failures and self_conj, res)


CHECKS = {
    "bpst_monad": bpst_monad,
    "equivalence_witnesses": equivalence,
    "family_reduction": family_reduction,
    "gauge_laws": gauge_laws,
    "j_structure": j_structure,
    "matrix_representation": matrix_rep,
    "oracle_words": oracle_words,
    "projection_relations": projection,
    "sphere_relation": sphere,
    "theorem_final_sweep": theorem_sweep,
}


def thread_count() -> int:
    raw = os.environ.get("THETA_ADHM_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def _timed(fn, seed: int) -> CheckResult:
    start = time.perf_counter()
    res = fn(seed)
    res.seconds = time.perf_counter() - start
    return res


def run_suite(seed: int = 0, only=None) -> SuiteReport:
    names = sorted(CHECKS) if not only else sorted(only)
    with ThreadPoolExecutor(max_workers=min(thread_count(), len(names))) as pool:
        futures = {name: pool.submit(_timed, CHECKS[name], seed) for name in names}
        results = [futures[name].result() for name in names]
    return SuiteReport(seed, results)
