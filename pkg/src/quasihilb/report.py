"""Conversion of results into plain JSON-ready structures, and the emitters.

Every rational is written as an exact ``"p/q"`` (or ``"p"``) string.  Floats
only appear for numerical root data and deviations, always with 17
significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .exactalg import RatPoly
from .genfun import GenFun
from .quasipoly import FactoredConstituent, QuasiPoly
from .rootcert import (
    ClassResult,
    ComplexRoot,
    GlobalCheck,
    LineStatus,
    RootCertificate,
    SuiteResult,
    UnitCircleReport,
)

SCHEMA = "quasihilb/1"


def rat(x: Fraction) -> str:
    return str(Fraction(x))


def coeffs(p: RatPoly) -> list[str]:
    return [rat(c) for c in p.coeffs]


def genfun_dict(f: GenFun) -> dict:
    return {"U": coeffs(f.U), "k": f.k, "d": f.d}


def quasi_dict(qp: QuasiPoly) -> list[dict]:
    return [{"class": i, "coeffs": coeffs(H)} for i, H in enumerate(qp.constituents)]


def root_dict(r: ComplexRoot) -> dict:
    return {"re": r.re, "im": r.im, "multiplicity": r.multiplicity, "residual": r.residual}


def factored_dict(fc: FactoredConstituent) -> dict:
    return {
        "class": fc.i,
        "q": fc.q,
        "scale": rat(fc.scale),
        "trivial": coeffs(fc.trivial),
        "trivial_roots": fc.trivial_roots(),
        "cofactor": coeffs(fc.cofactor),
        "constituent": coeffs(fc.constituent),
    }


def status_dict(s: LineStatus) -> dict:
    out = {"kind": s.kind}
    if s.deviation is not None:
        out["deviation"] = s.deviation
    if s.witness is not None:
        out["witness"] = root_dict(s.witness)
    if s.reason is not None:
        out["reason"] = s.reason
    return out


def certificate_dict(c: RootCertificate) -> dict:
    out = {
        "class": c.i,
        "q": c.q,
        "critical_abscissa": rat(c.critical_abscissa),
        "trivial_roots_expected": list(c.trivial_roots_expected),
        "trivial_roots_verified": list(c.trivial_roots_verified),
        "line_status": status_dict(c.line_status),
        "method": c.method,
        "tolerance": c.tolerance,
        "cofactor_roots": [root_dict(r) for r in c.cofactor_roots],
    }
    if c.exact_failure:
        out["exact_failure"] = c.exact_failure
    return out


def unit_circle_dict(u: UnitCircleReport) -> dict:
    return {
        "class": u.i,
        "at_one_nonzero": u.at_one_nonzero,
        "stripped_power": u.stripped_power,
        "self_inversive": u.self_inversive,
        "nonzero_roots": [root_dict(r) for r in u.nonzero_roots],
        "max_modulus_deviation": u.max_modulus_deviation,
        "tolerance": u.tol,
        "hypothesis_holds": u.hypothesis_holds,
    }


def class_dict(c: ClassResult) -> dict:
    out = {"class": c.i, "U_i": coeffs(c.U), "e": c.e, "q": c.q}
    if c.skipped:
        out["skipped"] = c.skipped
    if c.unit_circle is not None:
        out["unit_circle"] = unit_circle_dict(c.unit_circle)
    if c.factored is not None:
        out["factor"] = factored_dict(c.factored)
    if c.certificate is not None:
        out["certificate"] = certificate_dict(c.certificate)
    if c.cross_check is not None:
        out["cross_check"] = certificate_dict(c.cross_check)
    return out


def global_dict(g: GlobalCheck) -> dict:
    out = {"applicable": g.applicable}
    if g.reason:
        out["reason"] = g.reason
    if g.applicable:
        out["expected_roots"] = list(g.expected_roots)
        out["verified_roots"] = list(g.verified_roots)
        if g.divisibility is not None:
            out["k1_divisibility"] = g.divisibility
        out["ok"] = g.ok
    return out


def suite_dict(s: SuiteResult) -> dict:
    return {
        "genfun": genfun_dict(s.genfun),
        "constituents": quasi_dict(s.quasi),
        "classes": [class_dict(c) for c in s.classes],
        "global": global_dict(s.global_check),
        "violations": list(s.violations),
    }


# ---------------------------------------------------------------------------
# emitters


def _float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite float {x!r} cannot be serialized")
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def _encode(obj, level: int) -> str:
    pad = "  " * (level + 1)
    end = "  " * level
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, float):
        return _float(obj)
    if isinstance(obj, Fraction):
        raise TypeError("rationals must be converted to strings before emission")
    return json.dumps(obj)


def to_json(report: dict) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    return _encode(report, 0) + "\n"


def expand_csv(values) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "H(n)"])
    for n, v in enumerate(values):
        w.writerow([n, rat(v)])
    return buf.getvalue()
