"""Command-line interface.

Numerators are given either as a low-degree-first coefficient list
(``"1,0,-1/2"``) or as a sum of terms in ``t`` (``"1 - 1/2t^2"``).  Coefficient
lists in every report are low-degree-first as well.

Exit codes: 0 all asserted checks passed, 1 a theorem check failed,
2 usage or parse error, 3 numerical root finding did not converge.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import report as rep
from .errors import (
    InvalidGenFun,
    ParseError,
    QuasiHilbError,
    RootFindingDiverged,
    TheoremViolation,
    ZeroNumerator,
)
from .exactalg import RatPoly
from .genfun import GenFun, interpolate_constituents, series_prefix, split_numerator
from .quasipoly import (
    constituents_closed_form,
    factor_constituent,
    global_trivial_roots,
    product_poly,
)
from .rootcert import (
    DEFAULT_TOL,
    RootOfUnity,
    generate_unit_circle_family,
    sample_family,
    verify_theorem_suite,
)

log = logging.getLogger("quasihilb")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_DIVERGED = 0, 1, 2, 3
COMMANDS = ("expand", "constituents", "factor", "certify", "fuzz", "generate")

_NUMBER = re.compile(r"[+-]?\d+(?:/\d+)?")
_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*"
    r"(?P<var>[tx](?:\s*\^\s*(?P<exp>\d+))?)?\s*"
)


def _frac(token: str, pos: int) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient {token!r}", pos) from None
    return value


def parse_numerator(text: str) -> RatPoly:
    """Parse ``"c0,c1,..."`` or ``"1 + 2t^3 - 1/2t^5"`` into an exact polynomial."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty numerator", 0)
    is_terms = "t" in stripped or "x" in stripped or re.search(r"\S\s*[+-]", stripped)
    if "," in stripped or not is_terms:
        out, pos = [], 0
        for token in text.split(","):
            at = pos + len(token) - len(token.lstrip())
            tok = token.strip()
            if not _NUMBER.fullmatch(tok):
                raise ParseError(f"bad coefficient {tok!r}", at)
            out.append(_frac(tok, at))
            pos += len(token) + 1
        p = RatPoly(out)
    else:
        terms: dict[int, Fraction] = {}
        pos, first = 0, True
        while pos < len(text):
            m = _TERM.match(text, pos)
            if m is None or m.end() == pos or not (m.group("coef") or m.group("var")):
                raise ParseError(f"unexpected {text[pos:pos + 8]!r}", pos)
            if not first and m.group("sign") is None:
                raise ParseError("missing + or - between terms", m.start())
            coef = _frac(m.group("coef"), m.start("coef")) if m.group("coef") else Fraction(1)
            if m.group("sign") == "-":
                coef = -coef
            if m.group("var"):
                exp = int(m.group("exp")) if m.group("exp") is not None else 1
            else:
                exp = 0
            terms[exp] = terms.get(exp, Fraction(0)) + coef
            pos, first = m.end(), False
        top = max(terms)
        p = RatPoly([terms.get(j, 0) for j in range(top + 1)])
    if p.is_zero():
        raise ZeroNumerator("numerator is the zero polynomial")
    return p


def format_numerator(p: RatPoly) -> str:
    return ",".join(rep.coeffs(p)) or "0"


@dataclass
class JobSpec:
    command: str
    U: RatPoly | None = None
    k: int | None = None
    d: int | None = None
    N: int | None = None
    tol: float = DEFAULT_TOL
    fmt: str = "json"
    seed: int = 0
    trials: int = 100
    max_k: int = 6
    max_d: int = 6
    coeff_bound: int = 9
    families: bool = False
    cls: int = 0
    alphas: list[str] = field(default_factory=list)
    scale: Fraction = Fraction(1)

    def genfun(self) -> GenFun:
        if self.U is None or self.k is None or self.d is None:
            raise InvalidGenFun(f"{self.command} needs -U, -k and -d")
        return GenFun(self.U, self.k, self.d)

    def echo(self) -> dict:
        out = {"command": self.command}
        if self.U is not None:
            out["U"] = rep.coeffs(self.U)
        for key in ("k", "d", "N"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        out["tol"] = self.tol
        out["format"] = self.fmt
        if self.command == "fuzz":
            out.update(seed=self.seed, trials=self.trials, max_k=self.max_k,
                       max_d=self.max_d, coeff_bound=self.coeff_bound,
                       families=self.families)
        if self.command == "generate":
            out.update(i=self.cls, alphas=list(self.alphas), c=rep.rat(self.scale))
        return out


class UsageError(QuasiHilbError):
    pass


# ---------------------------------------------------------------------------
# commands


def _expand(job: JobSpec):
    if job.N is None or job.N < 1:
        raise UsageError("expand needs -N >= 1")
    values = series_prefix(job.genfun(), job.N).values
    return {"values": [rep.rat(v) for v in values]}, EXIT_OK


def _constituents(job: JobSpec):
    f = job.genfun()
    qp = constituents_closed_form(f)
    oracle = interpolate_constituents(series_prefix(f, f.k * f.d + f.k), f.k, f.d)
    agree = qp == oracle
    out = {"k": f.k, "constituents": rep.quasi_dict(qp), "oracle_agrees": agree}
    return out, EXIT_OK if agree else EXIT_VIOLATION


def _factor(job: JobSpec):
    f = job.genfun()
    qp = constituents_closed_form(f)
    classes = []
    for part in split_numerator(f):
        if part.empty:
            classes.append({"class": part.i, "skipped": "EmptyClass"})
        else:
            entry = rep.factored_dict(factor_constituent(f, part.i, qp))
            entry["e"] = part.e
            classes.append(entry)
    return {"k": f.k, "classes": classes}, EXIT_OK


def _certify(job: JobSpec):
    suite = verify_theorem_suite(job.genfun(), job.tol)
    return rep.suite_dict(suite), EXIT_OK if suite.ok else EXIT_VIOLATION


def fuzz_trial(f: GenFun) -> list[str]:
    """Exact checks on one GenFun; returns failure descriptions (empty on success)."""
    failures = []
    qp = constituents_closed_form(f)
    oracle = interpolate_constituents(series_prefix(f, f.k * f.d + f.k), f.k, f.d)
    if qp != oracle:
        failures.append("closed form differs from series oracle")
    split = split_numerator(f)
    for part in split:
        if part.empty:
            continue
        for j in range(1, f.d - part.q):
            n = -(j * f.k - part.i)
            if qp[part.i](Fraction(n)) != 0:
                failures.append(f"H_{part.i}({n}) != 0")
        try:
            factor_constituent(f, part.i, qp)
        except TheoremViolation as exc:
            failures.append(str(exc))
    if all(not part.empty for part in split):
        H = product_poly(qp).poly
        for n in global_trivial_roots(f):
            if H(Fraction(n)) != 0:
                failures.append(f"H_x({n}) != 0")
    return failures


def random_genfun(rng: random.Random, max_k: int, max_d: int, bound: int) -> GenFun:
    k = rng.randint(1, max_k)
    d = rng.randint(1, max_d)
    e = rng.randint(0, k * d - 1)
    while True:
        cs = [rng.randint(-bound, bound) for _ in range(e + 1)]
        if any(cs):
            return GenFun(RatPoly(cs), k, d)


def fuzz_campaign(job: JobSpec):
    if job.trials < 1:
        raise UsageError("fuzz needs --trials >= 1")
    rng = random.Random(job.seed)
    forced = job.genfun() if job.U is not None else None
    failures = []
    checks = {"oracle": 0, "integer_roots": 0, "global_roots": 0, "critical_line": 0}
    for trial in range(job.trials):
        if job.families:
            f, _, _ = sample_family(rng, min(job.max_k, 4), job.max_d)
            suite = verify_theorem_suite(f, job.tol)
            problems = list(suite.violations)
            checks["critical_line"] += sum(
                1 for c in suite.classes
                if c.certificate is not None and c.certificate.method is not None
            )
        else:
            f = forced or random_genfun(rng, job.max_k, job.max_d, job.coeff_bound)
            problems = fuzz_trial(f)
            checks["oracle"] += 1
            checks["integer_roots"] += sum(1 for p in split_numerator(f) if not p.empty)
            checks["global_roots"] += all(not p.empty for p in split_numerator(f))
        if problems:
            log.warning("trial %d failed: %s", trial, problems)
            failures.append({"trial": trial, "genfun": rep.genfun_dict(f), "problems": problems})
    out = {
        "trials": job.trials,
        "passed": job.trials - len(failures),
        "failed": len(failures),
        "checks": checks,
        "failures": failures,
    }
    return out, EXIT_VIOLATION if failures else EXIT_OK


def _generate(job: JobSpec):
    if job.k is None or job.d is None:
        raise UsageError("generate needs -k and -d")
    steps = [RootOfUnity.parse(a) for a in job.alphas]
    f = generate_unit_circle_family(job.k, job.d, job.cls, steps, job.scale)
    text = format_numerator(f.U)
    return {
        "genfun": rep.genfun_dict(f),
        "steps": [str(s) for s in steps],
        "numerator": text,
        "certify_args": ["certify", "-U", text, "-k", str(f.k), "-d", str(f.d)],
    }, EXIT_OK


_DISPATCH = {
    "expand": _expand,
    "constituents": _constituents,
    "factor": _factor,
    "certify": _certify,
    "fuzz": fuzz_campaign,
    "generate": _generate,
}


def run(job: JobSpec) -> tuple[dict, int]:
    """Execute a job; returns the report and the process exit code."""
    report = {"schema": rep.SCHEMA, "job": job.echo()}
    try:
        results, code = _DISPATCH[job.command](job)
    except RootFindingDiverged as exc:
        results, code = {"error": {"type": "RootFindingDiverged", "message": str(exc)}}, EXIT_DIVERGED
    except TheoremViolation as exc:
        results, code = {"error": {"type": "TheoremViolation", "message": str(exc)}}, EXIT_VIOLATION
    except (UsageError, ParseError, ValueError) as exc:
        results, code = {"error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_USAGE
    report["results"] = results
    report["summary"] = {"verdict": "pass" if code == EXIT_OK else "fail", "exit_code": code}
    return report, code


# ---------------------------------------------------------------------------
# rendering


def render_text(report: dict) -> str:
    job, res = report["job"], report["results"]
    lines = [f"{job['command']}: {report['summary']['verdict']}"]
    if "error" in res:
        lines.append(f"  {res['error']['type']}: {res['error']['message']}")
    elif job["command"] == "expand":
        lines += [f"  H({n}) = {v}" for n, v in enumerate(res["values"])]
    elif job["command"] == "constituents":
        for c in res["constituents"]:
            lines.append(f"  H_{c['class']}(n) = {RatPoly([Fraction(x) for x in c['coeffs']]).pretty('n')}")
    elif job["command"] == "factor":
        for c in res["classes"]:
            if "skipped" in c:
                lines.append(f"  class {c['class']}: U_i = 0")
                continue
            triv = RatPoly([Fraction(x) for x in c["trivial"]]).pretty("n")
            cof = RatPoly([Fraction(x) for x in c["cofactor"]]).pretty("n")
            lines.append(f"  H_{c['class']}(n) = {c['scale']} * ({triv}) * ({cof})")
    elif job["command"] == "certify":
        for c in res["classes"]:
            cert = c.get("certificate")
            if cert is None:
                lines.append(f"  class {c['class']}: skipped ({c.get('skipped')})")
                continue
            st = cert["line_status"]
            lines.append(
                f"  class {c['class']}: line Re = {cert['critical_abscissa']}: {st['kind']}"
                f"; forced roots {cert['trivial_roots_verified']}"
            )
        g = res["global"]
        if g["applicable"]:
            lines.append(f"  product roots {g['verified_roots']} (expected {g['expected_roots']})")
        for v in res["violations"]:
            lines.append(f"  VIOLATION {v}")
    elif job["command"] == "fuzz":
        lines.append(f"  {res['passed']}/{res['trials']} trials passed")
    elif job["command"] == "generate":
        lines.append(f"  U = {res['numerator']}  k = {res['genfun']['k']}  d = {res['genfun']['d']}")
    return "\n".join(lines) + "\n"


def emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json(report)
    if fmt == "csv":
        if report["job"]["command"] != "expand" or "values" not in report["results"]:
            raise UsageError("csv output is only available for expand")
        return rep.expand_csv(Fraction(v) for v in report["results"]["values"])
    return render_text(report)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-U", "--numerator", help='coefficients low-degree-first "1,0,1" or terms "1 + t^2"')
    common.add_argument("-k", type=int, help="period bound k in (1 - t^k)^d")
    common.add_argument("-d", type=int, help="pole order d in (1 - t^k)^d")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numeric tolerance (default 1e-9)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", default="-", help="output path (default stdout)")

    parser = argparse.ArgumentParser(
        prog="quasihilb",
        description="Hilbert quasipolynomials of U(t)/(1 - t^k)^d and certificates on their roots. "
        "Coefficient lists are low-degree-first.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("expand", parents=[common], help="power series coefficients H(0..N-1)")
    p.add_argument("-N", type=int, required=True)
    sub.add_parser("constituents", parents=[common], help="closed-form constituents H_0..H_{k-1}")
    sub.add_parser("factor", parents=[common], help="split each constituent into forced roots and cofactor")
    sub.add_parser("certify", parents=[common], help="run every root certificate")
    p = sub.add_parser("fuzz", parents=[common], help="seeded random verification campaign")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--coeff-bound", type=int, default=9)
    p.add_argument("--families", action="store_true",
                   help="sample unit-circle families and run the full certificate suite")
    p = sub.add_parser("generate", parents=[common], help="numerator c t^i prod (t^k - alpha)")
    p.add_argument("-i", "--class", dest="cls", type=int, default=0)
    p.add_argument("--alpha", action="append", default=[],
                   help="root of unity exp(2 pi i n/m) given as n/m; repeatable")
    p.add_argument("-c", "--scale", default="1")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    job = JobSpec(command=args.command, k=args.k, d=args.d, tol=args.tol, fmt=args.format)
    if args.numerator is not None:
        job.U = parse_numerator(args.numerator)
    if args.command == "expand":
        job.N = args.N
    if args.command == "fuzz":
        job.seed, job.trials = args.seed, args.trials
        job.max_k, job.max_d, job.coeff_bound = args.max_k, args.max_d, args.coeff_bound
        job.families = args.families
    if args.command == "generate":
        job.cls, job.alphas = args.cls, list(args.alpha)
        job.scale = Fraction(args.scale)
    if args.command != "generate" and args.command != "fuzz":
        job.genfun()
    elif args.command == "fuzz" and job.U is not None:
        job.genfun()
    return job


def _setup_logging():
    level = os.environ.get("QUASIHILB_LOG", "warn").upper()
    level = {"WARN": "WARNING"}.get(level, level)
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = job_from_args(args)
    except (QuasiHilbError, ValueError) as exc:
        print(f"quasihilb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report, code = run(job)
    try:
        text = emit(report, job.fmt)
    except UsageError as exc:
        print(f"quasihilb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
