"""
Acceptance checks: one function per scenario kind, each returning
{"passed": bool, "details": {...}}, plus the report that collects them.
"""

import contextlib
import io
import json
import math
import os
import random
import sys
import time
from typing import Dict

import numpy as np
from sympy import igcd, totient

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import RANDOM_SEED

from cli import main as cli_main, parse_sfs
from data.generate_instances import (
    random_closed_euler_zero,
    random_periodic_bundle,
    random_sfs_text,
    random_seifert_data,
)
from fp_groups import STANDARD_AUTOMORPHISMS, Presentation, lemma21_iso, parse_presentation, presentation_sfs
from quotient_engine import (
    compare_quotient_sets,
    compare_sets,
    g_n,
    hom_count_signature,
    oracle_quotient_set,
    quotient_set,
)
from seifert import (
    Parity,
    SeifertData,
    classify,
    family_enumerate,
    find_distinguishing_k,
    is_homeomorphic,
    periodic_map_from_seifert,
    power_monodromy,
    residue_family,
    seifert_from_periodic_map,
)


def timed_check(kind: str, params: Dict, budget=None) -> tuple:
    """Run the check registered for `kind`; (outcome, wall time in ms)."""
    started = time.perf_counter()
    outcome = CHECKS[kind](params, budget)
    return outcome, 1000.0 * (time.perf_counter() - started)


def _presentation(text: str) -> Presentation:
    return parse_presentation(text) if text.lstrip().startswith("<") else presentation_sfs(parse_sfs(text))


def check_closed_power_pair(params: Dict, budget=None) -> Dict:
    M = parse_sfs(params["sfs"])
    N = power_monodromy(M, params["k"])
    comparison = compare_quotient_sets(presentation_sfs(M), presentation_sfs(N), params["max_index"], budget=budget)
    details = {
        "power": str(N),
        "power_matches": N == parse_sfs(params["expected_power"]),
        "homeomorphic": is_homeomorphic(M, N),
        "quotients": comparison.summary(),
        "classes": len(comparison.first),
    }
    passed = details["power_matches"] and not details["homeomorphic"] and comparison.equal
    return {"passed": passed, "details": details}


def check_bounded_power_pair(params: Dict, budget=None) -> Dict:
    A = parse_sfs(params["sfs"])
    B = power_monodromy(A, params["k"])
    PA, PB = presentation_sfs(A), presentation_sfs(B)
    plain = compare_quotient_sets(PA, PB, params["max_index"], budget=budget)
    pairs = compare_quotient_sets(PA, PB, params["max_index"], paired=True, budget=budget)
    details = {
        "power": str(B),
        "power_matches": B == parse_sfs(params["expected_power"]),
        "homeomorphic": is_homeomorphic(A, B),
        "quotients": plain.summary(),
        "pair_quotients": pairs.summary(),
    }
    passed = details["power_matches"] and not details["homeomorphic"] and plain.equal and pairs.equal
    return {"passed": passed, "details": details}


def check_beta_independence(params: Dict, budget=None) -> Dict:
    alpha1, alpha2 = params["alphas"]
    choices = [
        SeifertData(0, 1, None, ((alpha1, b1), (alpha2, b2)))
        for b1 in range(1, alpha1) if igcd(alpha1, b1) == 1
        for b2 in range(1, alpha2) if igcd(alpha2, b2) == 1
    ]
    sets = [quotient_set(presentation_sfs(M), params["max_index"], budget=budget) for M in choices]
    equal = all(compare_sets(sets[0], other).equal for other in sets[1:])
    return {"passed": equal, "details": {"manifolds": [str(M) for M in choices],
                                         "classes": [len(s) for s in sets]}}


def check_euler_zero_parity(params: Dict, budget=None) -> Dict:
    rng = random.Random(RANDOM_SEED)
    failures = []
    for _ in range(params["count"]):
        M = random_closed_euler_zero(rng)
        c = classify(M)
        if c.euler_number != 0 or c.parity is not Parity.EVEN:
            failures.append(str(M))
    return {"passed": not failures, "details": {"checked": params["count"], "failures": failures[:10]}}


def check_euclidean_anchors(params: Dict, budget=None) -> Dict:
    rows = []
    for text, lam in params["anchors"]:
        c = classify(parse_sfs(text))
        ok = c.euler_number == 0 and c.orbifold_chi == 0 and c.lam == lam and c.fiber_genus == 1
        rows.append({"sfs": text, "lambda": c.lam, "fiber_genus": c.fiber_genus, "ok": ok})
    return {"passed": all(r["ok"] for r in rows), "details": {"anchors": rows}}


def check_residue_rigidity(params: Dict, budget=None) -> Dict:
    rows = []
    for p in params["primes"]:
        M = residue_family(p)
        lam = M.monodromy_order
        rigid = all(
            is_homeomorphic(M, power_monodromy(M, k))
            for k in range(1, lam) if igcd(k, lam) == 1
        )
        ok = classify(M).euler_number == 0 and find_distinguishing_k(M) is None and rigid
        rows.append({"p": p, "manifold": str(M), "ok": ok})
    return {"passed": all(r["ok"] for r in rows), "details": {"families": rows}}


def check_family_counts(params: Dict, budget=None) -> Dict:
    mismatches = []
    checked = 0
    top = params["max_alpha"]
    for alpha1 in range(2, top + 1):
        for alpha2 in range(alpha1 + 1, top + 1):
            if math.gcd(alpha1, alpha2) != 1:
                continue
            checked += 1
            count = len(family_enumerate(alpha1, alpha2))
            if count != int(totient(alpha1 * alpha2)) // 2:
                mismatches.append([alpha1, alpha2, count])
    return {"passed": not mismatches, "details": {"pairs": checked, "mismatches": mismatches}}


def check_oracle_equivalence(params: Dict, budget=None) -> Dict:
    n = params["max_index"]
    rows = {}
    for name, text in params["presentations"].items():
        P = _presentation(text)
        engine = quotient_set(P, n, budget=budget)
        oracle = oracle_quotient_set(P, n)
        rows[name] = {"classes": len(engine), "equal": compare_sets(engine, oracle).equal}
    return {"passed": all(r["equal"] for r in rows.values()), "details": rows}


def check_gn_machinery(params: Dict, budget=None) -> Dict:
    Z = Presentation(("a",))
    orders = {}
    for n in range(1, params["max_n"] + 1):
        data = g_n(Z, n, budget)
        cyclic = int(np.max(data.quotient.element_orders)) == data.quotient.order
        orders[n] = data.quotient.order if cyclic else None
    expected = {n: math.lcm(*range(1, n + 1)) for n in orders}
    trefoil = g_n(_presentation(params["trefoil"]), params["trefoil_n"], budget)
    details = {"orders": orders, "expected": expected,
               "trefoil_order": trefoil.quotient.order, "trefoil_factors": len(trefoil.factors)}
    return {"passed": orders == expected, "details": details}


def check_product_isomorphism(params: Dict, budget=None) -> Dict:
    psi = STANDARD_AUTOMORPHISMS[params["automorphism"]]()
    result = lemma21_iso(psi.domain, psi, params["k"])
    b = result.basis
    first = hom_count_signature(result.source, params["catalogue_bound"])
    second = hom_count_signature(result.target, params["catalogue_bound"])
    details = result.to_dict()
    details["hom_counts_equal"] = first == second
    passed = b.u * b.n + b.v * b.k == 1 and b.determinant == 1 and first == second
    return {"passed": passed, "details": details}


def check_periodic_round_trip(params: Dict, budget=None) -> Dict:
    rng = random.Random(RANDOM_SEED)
    failures = []
    for _ in range(params["count"]):
        M = random_periodic_bundle(rng)
        if seifert_from_periodic_map(periodic_map_from_seifert(M)) != M:
            failures.append(str(M))
    return {"passed": not failures, "details": {"checked": params["count"], "failures": failures[:10]}}


def run_cli(argv) -> tuple:
    """Exit code and captured stdout of one CLI invocation."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(list(argv))
    return code, out.getvalue()


def check_grammar(params: Dict, budget=None) -> Dict:
    rng = random.Random(RANDOM_SEED)
    failures = []
    for _ in range(params["count"]):
        M = random_seifert_data(rng)
        text = random_sfs_text(rng, M)
        if parse_sfs(text) != M or parse_sfs(str(M)) != M:
            failures.append(text)

    wrong_codes = []
    for argv, expected in params["cases"]:
        code, _ = run_cli(argv)
        if code != expected:
            wrong_codes.append({"argv": argv, "expected": expected, "got": code})
    passed = not failures and not wrong_codes
    return {"passed": passed, "details": {"round_trip_failures": failures[:10], "exit_code_failures": wrong_codes}}


CHECKS = {
    "closed_power_pair": check_closed_power_pair,
    "bounded_power_pair": check_bounded_power_pair,
    "beta_independence": check_beta_independence,
    "euler_zero_parity": check_euler_zero_parity,
    "euclidean_anchors": check_euclidean_anchors,
    "residue_rigidity": check_residue_rigidity,
    "family_counts": check_family_counts,
    "oracle_equivalence": check_oracle_equivalence,
    "gn_machinery": check_gn_machinery,
    "product_isomorphism": check_product_isomorphism,
    "periodic_round_trip": check_periodic_round_trip,
    "grammar": check_grammar,
}


class AcceptanceReport:
    """Collects and summarizes scenario results."""

    def __init__(self):
        self.results = []

    def add_result(self, scenario: Dict, outcome: Dict, latency_ms: float):
        self.results.append({
            "id": scenario["id"],
            "name": scenario["name"],
            "passed": bool(outcome["passed"]),
            "latency_ms": round(latency_ms, 1),
            "details": outcome["details"],
        })

    def get_summary(self) -> Dict:
        if not self.results:
            return {}
        latencies = [r["latency_ms"] for r in self.results]
        return {
            "total_scenarios": len(self.results),
            "passed": sum(r["passed"] for r in self.results),
            "failed": [r["id"] for r in self.results if not r["passed"]],
            "total_ms": float(np.sum(latencies)),
            "max_ms": float(np.max(latencies)),
        }

    @property
    def all_passed(self) -> bool:
        return all(r["passed"] for r in self.results)

    def print_report(self):
        summary = self.get_summary()

        print("\n" + "=" * 60)
        print("ACCEPTANCE REPORT")
        print("=" * 60)
        for r in self.results:
            mark = "PASS" if r["passed"] else "FAIL"
            print(f"  [{mark}] {r['id']:>2}. {r['name']} ({r['latency_ms']:.0f} ms)")

        print(f"\nPassed {summary.get('passed', 0)} of {summary.get('total_scenarios', 0)} scenarios")
        if summary.get("failed"):
            print(f"  Failed: {summary['failed']}")
        print("=" * 60)

    def save_report(self, filepath: str):
        report_data = {"summary": self.get_summary(), "detailed_results": self.results}
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(report_data, f, indent=2, sort_keys=True, default=str)
        print(f"Report saved to {filepath}")
