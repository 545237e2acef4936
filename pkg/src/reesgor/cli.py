"""Command line front end.

    reesgor np JOB            facets of the Newton polyhedron
    reesgor iclosure JOB -n N integral closure of the N-th power
    reesgor cone JOB          facet matrix and extreme rays of the cone
    reesgor gorenstein JOB    Gorenstein decision (--fast: closed form)
    reesgor qgor JOB          quasi-Gorenstein colon test
    reesgor cm JOB            Cohen-Macaulay intersection test
    reesgor core JOB --u N    core of the N-th power
    reesgor report JOB        every section at once
    reesgor --corpus N        seeded random self-check, no job needed

JOB is a JSON file; see report.load_job for the format. Output is
human-readable by default, canonical JSON with --json.

Exit codes: 0 success; 1 bad usage, unreadable input, or invalid
ideal data; 2 the requested criterion does not apply to this input;
3 an internal cross-check failed or a certified bound was exceeded
(the computation cannot be trusted and says so).
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from .analysis import quasi_gorenstein_test
from .cone import is_gorenstein_normalization, pure_power_gorenstein_test
from .errors import (
    BudgetExceededError,
    IncompleteSearchError,
    InapplicableError,
    InvariantViolationError,
    StabilizationError,
)
from .ideals import MonomialIdeal
from .oracle import oracle_colon, oracle_intersect
from .polyhedra import integral_closure, newton_polyhedron
from .report import (
    build_report,
    closure_section,
    cm_section,
    cone_section,
    core_section,
    facet_section,
    gorenstein_section,
    load_job,
    qgor_section,
    render_human,
    to_json,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INAPPLICABLE = 2
EXIT_UNTRUSTED = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; our exit table reserves 2
    for inapplicable criteria, so remap to 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="reesgor",
        description="Gorenstein and Cohen-Macaulay decisions for "
        "extended Rees algebras of monomial ideals",
    )
    parser.add_argument(
        "--json", action="store_true", help="emit canonical JSON"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for --corpus"
    )
    parser.add_argument(
        "--corpus",
        type=int,
        metavar="N",
        help="run the seeded self-check on N random ideals and exit",
    )
    sub = parser.add_subparsers(dest="command")

    def job_sub(name: str, help_text: str) -> argparse.ArgumentParser:
        s = sub.add_parser(name, help=help_text)
        s.add_argument("job", help="path to the job JSON file")
        return s

    job_sub("np", "facets of the Newton polyhedron")
    s = job_sub("iclosure", "integral closure of a power")
    s.add_argument("-n", type=int, default=1, help="power to close")
    job_sub("cone", "facet matrix and extreme rays of the cone")
    s = job_sub("gorenstein", "Gorenstein decision for the normalization")
    s.add_argument(
        "--fast",
        action="store_true",
        help="closed-form test (pure-power ideals only)",
    )
    job_sub("qgor", "quasi-Gorenstein colon test")
    job_sub("cm", "Cohen-Macaulay intersection test")
    s = job_sub("core", "core of a power")
    s.add_argument("--u", type=int, default=1, help="which power")
    job_sub("report", "all sections at once")
    return parser


def _execute(args: argparse.Namespace) -> Tuple[Dict, int]:
    job = load_job(args.job)
    ideal = job.ideal
    if args.command == "np":
        return facet_section(ideal), EXIT_OK
    if args.command == "iclosure":
        return closure_section(ideal, args.n), EXIT_OK
    if args.command == "cone":
        return cone_section(ideal), EXIT_OK
    if args.command == "gorenstein":
        return gorenstein_section(ideal, args.fast), EXIT_OK
    if args.command == "qgor":
        return qgor_section(ideal, job.reduction), EXIT_OK
    if args.command == "cm":
        return cm_section(ideal, job.reduction), EXIT_OK
    if args.command == "core":
        return core_section(ideal, job.reduction, args.u), EXIT_OK
    if args.command == "report":
        payload = build_report(job)
        code = EXIT_OK
        consistency = payload.get("consistency", {})
        if consistency.get("all_ok") is False:
            code = EXIT_UNTRUSTED
        return payload, code
    raise AssertionError(f"unhandled command {args.command}")


def classify_failure(exc: Exception) -> int:
    """Map an exception from a command run to the exit code table."""
    if isinstance(exc, InapplicableError):
        return EXIT_INAPPLICABLE
    if isinstance(
        exc,
        (
            InvariantViolationError,
            IncompleteSearchError,
            BudgetExceededError,
            StabilizationError,
        ),
    ):
        return EXIT_UNTRUSTED
    if isinstance(exc, (ValueError, OSError)):
        return EXIT_USAGE
    raise exc


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.corpus is not None:
        return _corpus_run(args.corpus, args.seed, args.json)
    if args.command is None:
        parser.print_usage(sys.stderr)
        sys.stderr.write("reesgor: error: a command or --corpus is needed\n")
        return EXIT_USAGE

    try:
        payload, code = _execute(args)
    except Exception as exc:  # noqa: BLE001 - classified right below
        try:
            code = classify_failure(exc)
        except Exception:
            raise exc
        sys.stderr.write(f"reesgor: {exc}\n")
        return code

    if args.json:
        sys.stdout.write(to_json(payload))
    else:
        sys.stdout.write("\n".join(render_human(payload)) + "\n")
    return code


# -------------------------------------------------------------------- #
# seeded self-check


def _random_m_primary(rng: random.Random, dim: int) -> MonomialIdeal:
    gens = []
    for i in range(dim):
        e = [0] * dim
        e[i] = rng.randint(1, 5)
        gens.append(tuple(e))
    for _ in range(rng.randint(0, 3)):
        extra = tuple(rng.randint(0, 5) for _ in range(dim))
        while not any(extra):
            extra = tuple(rng.randint(0, 5) for _ in range(dim))
        gens.append(extra)
    return MonomialIdeal(dim, tuple(gens))


def corpus_case(index: int, seed: int) -> Dict:
    """One self-check case: random ideals, every cheap cross-check."""
    rng = random.Random(seed * 100003 + index)
    dim = rng.choice((2, 3))
    ideal = _random_m_primary(rng, dim)
    other = _random_m_primary(rng, dim)
    failures: List[str] = []

    square = ideal * ideal
    if oracle_colon(square, ideal) != square.colon(ideal).gens:
        failures.append("colon disagrees with the oracle")
    if oracle_intersect(ideal, other) != (ideal & other).gens:
        failures.append("intersection disagrees with the oracle")

    facets = newton_polyhedron(ideal)
    closed = integral_closure(ideal)
    for g in closed.gens:
        if not facets.contains(g):
            failures.append(f"closure generator {g} outside the polyhedron")
        for j in range(dim):
            if g[j] > 0:
                down = g[:j] + (g[j] - 1,) + g[j + 1 :]
                if facets.contains(down):
                    failures.append(f"closure generator {g} not minimal")
                    break

    try:
        gorenstein, _ = is_gorenstein_normalization(ideal, facets)
        if ideal.pure_power_exponents() is not None:
            if pure_power_gorenstein_test(ideal).gorenstein != gorenstein:
                failures.append("fast and full Gorenstein tests disagree")
    except (InvariantViolationError, IncompleteSearchError) as exc:
        failures.append(str(exc))

    try:
        quasi_gorenstein_test(ideal)
    except InapplicableError:
        pass
    except (InvariantViolationError, StabilizationError) as exc:
        failures.append(f"quasi-Gorenstein cross-check: {exc}")

    return {
        "index": index,
        "ideal": ideal.to_str(),
        "dim": dim,
        "ok": not failures,
        "failures": failures,
    }


def _corpus_run(count: int, seed: int, as_json: bool) -> int:
    if count < 1:
        sys.stderr.write("reesgor: error: --corpus needs a positive count\n")
        return EXIT_USAGE
    with ThreadPoolExecutor(max_workers=4) as pool:
        futures = [
            pool.submit(corpus_case, index, seed) for index in range(count)
        ]
        results = []
        for index, fut in enumerate(futures):
            try:
                results.append(fut.result())
            except Exception as exc:  # noqa: BLE001 - recorded, run goes on
                results.append(
                    {
                        "index": index,
                        "ideal": "?",
                        "dim": 0,
                        "ok": False,
                        "failures": [f"{type(exc).__name__}: {exc}"],
                    }
                )
    if as_json:
        sys.stdout.write(
            to_json({"corpus": count, "seed": seed, "results": results})
        )
    else:
        for res in results:
            status = "ok" if res["ok"] else "FAIL " + "; ".join(res["failures"])
            sys.stdout.write(
                f"[{res['index']:03d}] d={res['dim']} {res['ideal']} {status}\n"
            )
    return EXIT_OK if all(r["ok"] for r in results) else EXIT_UNTRUSTED
