"""
Run the acceptance scenarios and write a JSON report.
"""

import json
import os
import sys
from tqdm import tqdm

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import ACCEPTANCE_REPORT_FILE, ACCEPTANCE_SCENARIOS_FILE

from evaluation.checks import AcceptanceReport, timed_check
from quotient_engine import BudgetExceededError


def load_scenarios(filepath: str = None) -> list:
    """Load scenarios from JSON file."""
    with open(filepath or ACCEPTANCE_SCENARIOS_FILE, "r", encoding="utf-8") as f:
        return json.load(f)


def run_acceptance(quick: bool = False, only: list = None, verbose: bool = True,
                   report_path: str = ACCEPTANCE_REPORT_FILE) -> AcceptanceReport:
    """Run every selected scenario; `quick` skips the ones marked slow."""
    scenarios = load_scenarios()
    if only:
        scenarios = [s for s in scenarios if s["id"] in only]
    if quick:
        scenarios = [s for s in scenarios if not s.get("slow")]
    print(f"Loaded {len(scenarios)} scenarios")

    report = AcceptanceReport()
    for scenario in tqdm(scenarios, desc="Checking"):
        try:
            outcome, latency = timed_check(scenario["kind"], scenario["params"])
        except BudgetExceededError as exc:
            outcome, latency = {"passed": False, "details": {"error": f"budget exceeded: {exc}"}}, 0.0
        except (ValueError, RuntimeError) as exc:
            outcome, latency = {"passed": False, "details": {"error": f"{type(exc).__name__}: {exc}"}}, 0.0
        report.add_result(scenario, outcome, latency)

        if verbose and not outcome["passed"]:
            print(f"\n  Scenario {scenario['id']} failed: {outcome['details']}")

    report.print_report()
    report.save_report(report_path)
    return report


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Run the acceptance scenarios")
    parser.add_argument("--quick", action="store_true", help="Skip slow scenarios")
    parser.add_argument("--only", type=int, nargs="+", metavar="ID", help="Run only these scenario ids")
    parser.add_argument("--quiet", action="store_true", help="Less verbose output")
    args = parser.parse_args()

    report = run_acceptance(quick=args.quick, only=args.only, verbose=not args.quiet)
    sys.exit(0 if report.all_passed else 1)
