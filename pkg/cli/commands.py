"""
Command-line verbs: parse arguments into a Command, run it, and render a text
or JSON report with an exit code from the documented contract.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import (
    DEFAULT_MAX_INDEX,
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_UNEQUAL,
    EXIT_USAGE,
    MAX_GN_ORDER,
    MAX_SEARCH_NODES,
    SEARCH_WORKERS,
)

from cli.grammar import SfsSyntaxError, parse_sfs
from fp_groups import (
    STANDARD_AUTOMORPHISMS,
    abelian_invariants,
    format_presentation,
    lemma21_iso,
    presentation_orbifold_group,
    presentation_sfs,
)
from quotient_engine import (
    BudgetExceededError,
    SearchBudget,
    compare_quotient_sets,
    g_n,
    hom_count_signature,
    identify,
    quotient_set,
    serialize_group,
)
from seifert import (
    classify,
    distinguishing_k_guaranteed,
    family_enumerate,
    fiber_boundary_data,
    find_distinguishing_k,
    is_homeomorphic,
    lens_invariants,
    periodic_map_from_seifert,
    power_monodromy,
    residue_family,
    reverse_orientation,
)

logger = logging.getLogger(__name__)

VERBS = (
    "classify", "reverse", "power", "homeo", "distinguish", "family", "residue-family",
    "lens", "present", "quotients", "compare", "compare-pairs", "gn", "lemma21",
    "periodic", "boundary-curves",
)


class CommandUsageError(ValueError):
    """Bad verb, missing argument or malformed flag."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CommandUsageError(message)


@dataclass(frozen=True)
class Command:
    verb: str
    arguments: dict = field(default_factory=dict)


@dataclass
class Report:
    text: str
    payload: dict
    exit_code: int = EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    common.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX, help="index bound for quotient searches")
    common.add_argument("--budget", type=int, default=MAX_SEARCH_NODES, help="coset-table nodes per search")
    common.add_argument("--max-order", type=int, default=MAX_GN_ORDER, help="largest G/G(n) to realize")
    common.add_argument("--workers", type=int, default=SEARCH_WORKERS, help="processes for the low-index search")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = _ArgumentParser(prog="app.py", description="Seifert fibered spaces and their finite quotients")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def verb(name, help_text):
        return verbs.add_parser(name, parents=[common], help=help_text)

    verb("classify", "Euler number, orbifold characteristic, lambda, parity, geometry").add_argument("sfs")
    verb("reverse", "orientation reversal").add_argument("sfs")
    p = verb("power", "Seifert data of the mapping torus of phi^k")
    p.add_argument("sfs")
    p.add_argument("k", type=int)
    p = verb("homeo", "homeomorphism test for periodic surface bundles")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--oriented", action="store_true")
    verb("distinguish", "smallest k with M_phi^k not homeomorphic to M_phi").add_argument("sfs")
    p = verb("family", "unoriented classes over the disk with two exceptional fibers")
    p.add_argument("alpha1", type=int)
    p.add_argument("alpha2", type=int)
    verb("residue-family", "quadratic-residue manifold for a prime p").add_argument("p", type=int)
    p = verb("lens", "lens space containing a family member")
    p.add_argument("sfs")
    p.add_argument("b", type=int)
    p = verb("present", "fundamental group presentation")
    p.add_argument("sfs")
    p.add_argument("--orbifold", action="store_true", help="the base orbifold group instead")
    p = verb("quotients", "finite quotients up to the index bound")
    p.add_argument("sfs")
    p.add_argument("--pairs", action="store_true", help="peripheral quotient pairs")
    for name, help_text in (("compare", "compare finite quotients"),
                            ("compare-pairs", "compare peripheral quotient pairs")):
        p = verb(name, help_text)
        p.add_argument("first")
        p.add_argument("second", nargs="?")
        p.add_argument("--power", type=int, help="compare against the mapping torus of phi^k")
    verb("gn", "G/G(n) for n = --max-index").add_argument("sfs")
    p = verb("lemma21", "explicit isomorphism between products with Z")
    p.add_argument("--automorphism", choices=sorted(STANDARD_AUTOMORPHISMS), default="f2-order3")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--catalogue-bound", type=int, default=0, help="also compare homomorphism counts up to this order")
    verb("periodic", "the periodic monodromy of a surface bundle").add_argument("sfs")
    verb("boundary-curves", "how the fiber surface meets the filling tori").add_argument("sfs")
    return parser


def parse_command(argv) -> Command:
    args = vars(build_parser().parse_args(argv))
    verb = args.pop("verb")
    return Command(verb, args)


def _budget(arguments) -> SearchBudget:
    return SearchBudget(
        max_nodes=arguments["budget"],
        max_order=arguments["max_order"],
        workers=arguments["workers"],
    )


def _second_manifold(arguments):
    first = parse_sfs(arguments["first"])
    if arguments.get("second") and arguments.get("power") is not None:
        raise CommandUsageError("give either a second SFS or --power, not both")
    if arguments.get("second"):
        return first, parse_sfs(arguments["second"])
    if arguments.get("power") is not None:
        return first, power_monodromy(first, arguments["power"])
    raise CommandUsageError("compare needs a second SFS or --power k")


def _classify(a):
    M = parse_sfs(a["sfs"])
    c = classify(M)
    e = "undefined" if c.euler_number is None else str(c.euler_number)
    lines = [
        str(M),
        f"e={e} chi_orb={c.orbifold_chi} lambda={c.lam} parity={c.parity.value}",
        f"geometry={c.geometry.value.capitalize()} periodic_bundle={c.is_periodic_bundle}",
    ]
    if c.fiber_genus is not None:
        lines.append(f"fiber_genus={c.fiber_genus} fiber_boundary_circles={c.fiber_boundary_circles}")
    return lines, {"classification": c.to_dict()}, [M], EXIT_OK


def _reverse(a):
    M = parse_sfs(a["sfs"])
    R = reverse_orientation(M)
    return [str(R)], {"reversed": R.to_dict()}, [M], EXIT_OK


def _power(a):
    M = parse_sfs(a["sfs"])
    P = power_monodromy(M, a["k"])
    return [str(P)], {"power": a["k"], "result": P.to_dict()}, [M], EXIT_OK


def _homeo(a):
    M, N = parse_sfs(a["first"]), parse_sfs(a["second"])
    same = is_homeomorphic(M, N, oriented=a["oriented"])
    kind = "orientation-preservingly " if a["oriented"] else ""
    text = f"{kind}HOMEOMORPHIC" if same else f"NOT {kind}HOMEOMORPHIC"
    return [text.strip()], {"homeomorphic": same, "oriented": a["oriented"]}, [M, N], EXIT_OK


def _distinguish(a):
    M = parse_sfs(a["sfs"])
    k = find_distinguishing_k(M)
    guaranteed = distinguishing_k_guaranteed(M)
    lines = [f"k={k}" if k is not None else "k=none", f"guaranteed={guaranteed}"]
    return lines, {"k": k, "guaranteed": guaranteed}, [M], EXIT_OK


def _family(a):
    members = family_enumerate(a["alpha1"], a["alpha2"])
    lines = [str(M) for M in members] + [f"count={len(members)}"]
    return lines, {"members": [M.to_dict() for M in members], "count": len(members)}, members, EXIT_OK


def _residue_family(a):
    M = residue_family(a["p"])
    return [str(M)], {"manifold": M.to_dict()}, [M], EXIT_OK


def _lens(a):
    M = parse_sfs(a["sfs"])
    L = lens_invariants(M, a["b"])
    return [f"L({L.p}, {L.q})"], {"lens": L.to_dict()}, [M], EXIT_OK


def _present(a):
    M = parse_sfs(a["sfs"])
    P = presentation_orbifold_group(M) if a["orbifold"] else presentation_sfs(M)
    rank, torsion = abelian_invariants(P)
    text = format_presentation(P)
    return text.splitlines() + [f"H1: rank={rank} torsion={list(torsion)}"], {
        "presentation": text, "abelian_rank": rank, "torsion": list(torsion)}, [M], EXIT_OK


def _quotients(a):
    M = parse_sfs(a["sfs"])
    Q = quotient_set(presentation_sfs(M), a["max_index"], paired=a["pairs"], budget=_budget(a))
    lines = []
    for group in Q.classes:
        name = identify(group)
        lines.append(serialize_group(group) + (f" name={name}" if name else ""))
    lines.append(f"{len(Q)} classes (bound {Q.bound})")
    payload = {"bound": Q.bound, "paired": Q.paired, "classes": [serialize_group(g) for g in Q.classes]}
    return lines, payload, [M], EXIT_OK


def _compare(a, paired):
    M, N = _second_manifold(a)
    result = compare_quotient_sets(presentation_sfs(M), presentation_sfs(N), a["max_index"],
                                   paired=paired, budget=_budget(a))
    lines = [result.summary()]
    payload = {"equal": result.equal, "bound": result.bound, "paired": paired,
               "first_classes": len(result.first), "second_classes": len(result.second)}
    if not result.equal:
        lines.append("witness: " + serialize_group(result.witness))
        payload["witness"] = serialize_group(result.witness)
        payload["witness_side"] = result.witness_side
    return lines, payload, [M, N], EXIT_OK if result.equal else EXIT_UNEQUAL


def _gn(a):
    M = parse_sfs(a["sfs"])
    data = g_n(presentation_sfs(M), a["max_index"], budget=_budget(a))
    lines = [
        f"|G/G({data.n})| = {data.quotient.order}",
        f"normal subgroups of index <= {data.n}: {len(data.factors)}",
        "cofinality verified",
    ]
    return lines, data.to_dict(), [M], EXIT_OK


def _lemma21(a):
    psi = STANDARD_AUTOMORPHISMS[a["automorphism"]]()
    result = lemma21_iso(psi.domain, psi, a["k"])
    payload = result.to_dict()
    lines = [
        f"n={result.basis.n} k={result.basis.k} (u, v)=({result.basis.u}, {result.basis.v}) det={result.basis.determinant}",
    ]
    lines += [f"f({name}) = {image}" for name, image in payload["map"].items()]
    lines.append(f"{result.relators_checked} relator images reduce to the identity")

    code = EXIT_OK
    if a["catalogue_bound"]:
        first = hom_count_signature(result.source, a["catalogue_bound"])
        second = hom_count_signature(result.target, a["catalogue_bound"])
        payload["hom_counts_equal"] = first == second
        payload["hom_counts"] = first
        lines.append(("EQUAL" if first == second else "UNEQUAL")
                     + f" homomorphism counts (bound {a['catalogue_bound']})")
        code = EXIT_OK if first == second else EXIT_UNEQUAL
    return lines, payload, [], code


def _periodic(a):
    M = parse_sfs(a["sfs"])
    P = periodic_map_from_seifert(M)
    cones = ", ".join(f"{alpha}:{q}" for alpha, q in P.cone_points) or "none"
    lines = [f"order={P.order} quotient_genus={P.quotient_genus} "
             f"quotient_boundary={P.quotient_boundary_count} cones={cones}"]
    return lines, {"periodic_map": P.to_dict()}, [M], EXIT_OK


def _boundary_curves(a):
    M = parse_sfs(a["sfs"])
    curves = fiber_boundary_data(M)
    lines = [f"T{c.torus_index}: {c.curve_count} x ({c.x_coeff}[x] + {c.t_coeff}[t])" for c in curves]
    payload = {"curves": [list(c.as_tuple()) for c in curves]}
    return lines, payload, [M], EXIT_OK


HANDLERS = {
    "classify": _classify,
    "reverse": _reverse,
    "power": _power,
    "homeo": _homeo,
    "distinguish": _distinguish,
    "family": _family,
    "residue-family": _residue_family,
    "lens": _lens,
    "present": _present,
    "quotients": _quotients,
    "compare": lambda a: _compare(a, paired=False),
    "compare-pairs": lambda a: _compare(a, paired=True),
    "gn": _gn,
    "lemma21": _lemma21,
    "periodic": _periodic,
    "boundary-curves": _boundary_curves,
}


def _document(command: Command, inputs, result=None, error=None, exit_code=EXIT_OK) -> dict:
    document = {
        "command": {"verb": command.verb, "arguments": command.arguments},
        "inputs": [str(M) for M in inputs],
        "exit_code": exit_code,
    }
    if error is not None:
        document["error"] = error
    else:
        document["result"] = result
    return document


def run(command: Command) -> Report:
    """Dispatch a parsed command. User errors become exit codes, never tracebacks."""
    if command.verb not in HANDLERS:
        raise CommandUsageError(f"unknown verb {command.verb!r}")
    try:
        lines, payload, inputs, code = HANDLERS[command.verb](command.arguments)
        return Report("\n".join(lines), _document(command, inputs, payload, exit_code=code), code)
    except BudgetExceededError as e:
        error = {"type": type(e).__name__, "message": str(e)}
        return Report(f"budget exceeded: {e}", _document(command, [], error=error, exit_code=EXIT_BUDGET), EXIT_BUDGET)
    except ValueError as e:
        error = {"type": type(e).__name__, "message": str(e)}
        if isinstance(e, SfsSyntaxError):
            error["position"] = e.position
        return Report(f"error: {e}", _document(command, [], error=error, exit_code=EXIT_USAGE), EXIT_USAGE)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        command = parse_command(argv)
    except CommandUsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if command.arguments.get("verbose"):
        logging.getLogger().setLevel(logging.DEBUG)

    report = run(command)
    if command.arguments.get("json"):
        print(json.dumps(report.payload, indent=2, sort_keys=True))
    else:
        stream = sys.stdout if report.exit_code in (EXIT_OK, EXIT_UNEQUAL) else sys.stderr
        print(report.text, file=stream)
    return report.exit_code
