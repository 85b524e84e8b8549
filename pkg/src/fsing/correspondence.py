"""Mod-p sweep harness: compare the LP threshold prediction against the
level-1 Fedder tests over a congruence class of primes, and report.

The prime plan follows the split structure: if the optimal LP weights have
denominator lcm N and the pair has witness index r, the sweep visits primes
p = 1 mod (N r), where every weight scales to an integer exponent and the
witness twist is defined.  Primes with bad reduction (a coefficient
denominator divisible by p) are recorded in the skip list and replaced by
the next prime of the class.

A verdict of ``Supported`` means every tested prime agreed exactly; it is
evidence for the threshold correspondence at these primes, not a proof.
``Refuted`` is reserved for the unambiguous situation: the program's
uniqueness hypothesis holds, the pair has no complete-intersection part or
witness, and some tested prime falls strictly below the LP value.  Negative
outcomes for pairs with a ci part or witness are only inconclusive for the
chosen witness.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import newton
from .errors import CapExceeded, FormatError, PrimeExcluded
from .fedder import (
    MAX_TOTAL_EXPONENT,
    CompleteIntersectionPair,
    ceil_fraction,
    exponent_split_search,
    pair_nu_value,
)
from .modular import is_prime, iter_primes_in_progression, primes_in_progression
from .polynomials import poly_format

REPORT_MAGIC = "fsreport 1"


@dataclass(frozen=True)
class PrimePlan:
    """Which primes to test: the first ``count`` primes = residue (mod modulus),
    skipping a known-bad list."""

    modulus: int
    residue: int = 1
    count: int = 4
    skip: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if math.gcd(self.residue, self.modulus) != 1:
            raise ValueError("residue must be coprime to the modulus")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        object.__setattr__(self, "skip", frozenset(self.skip))


def prime_stream(plan: PrimePlan) -> list[int]:
    """The plan's primes, ascending."""
    return primes_in_progression(plan.residue, plan.modulus, plan.count, plan.skip)


def lcm_of_denominators(values: Iterable) -> int:
    result = 1
    for v in values:
        result = math.lcm(result, Fraction(v).denominator)
    return result


@dataclass(frozen=True)
class PrimeRecord:
    """Per-prime outcome at level e: the split target ceil(t(q-1)), the
    observed nu-value, the certified interval, and exact agreement."""

    p: int
    e: int
    target: int
    nu: int
    fedder: bool
    split: tuple[int, ...] | None
    lower: Fraction | None
    upper: Fraction | None
    agree: bool


@dataclass(frozen=True)
class CorrespondenceReport:
    digest: str
    lp_status: str
    lp_value: Fraction | None
    lp_unique: bool | None
    threshold: Fraction | None
    e: int
    modulus: int | None
    records: tuple[PrimeRecord, ...]
    skipped: tuple[int, ...]
    verdict: str
    notes: tuple[str, ...]


def pair_digest(pair: CompleteIntersectionPair) -> str:
    """Stable digest of the input data (used to key reports)."""
    parts = [f"n={pair.nvars}", f"c={pair.ci_count}"]
    parts += [poly_format(f) for f in pair.ci_gens]
    parts += [poly_format(f) for f in pair.aux_gens]
    parts.append(f"t={pair.t}")
    if pair.witness is not None:
        g, r = pair.witness
        parts.append(f"witness={poly_format(g)};r={r}")
    blob = "\n".join(parts).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


def run_correspondence(
    pair: CompleteIntersectionPair,
    *,
    e: int = 1,
    t_override: Fraction | None = None,
    count: int = 4,
    modulus_override: int | None = None,
    skip: Iterable[int] = (),
    primes_override: Sequence[int] | None = None,
    max_total: int = MAX_TOTAL_EXPONENT,
) -> CorrespondenceReport:
    """Solve the LP, sweep primes, and aggregate into a report.

    ``t_override`` tests a threshold other than the LP value (needed when the
    uniqueness hypothesis fails and the LP value is only an upper bound).
    ``primes_override`` bypasses the congruence plan with an explicit list.
    """
    digest = pair_digest(pair)
    notes: list[str] = []

    prog = newton.build_program(list(pair.ci_gens) + list(pair.aux_gens), pair.ci_count)
    sol = newton.solve_lct_lp(prog)
    lp_unique: bool | None = None
    if sol.status == "optimal":
        try:
            lp_unique = newton.uniqueness_check(prog, sol)
        except CapExceeded as exc:
            notes.append(f"uniqueness check skipped: {exc}")

    threshold = Fraction(t_override) if t_override is not None else sol.value
    if threshold is None:
        notes.append("LP infeasible and no threshold override given; nothing to test")
        return CorrespondenceReport(
            digest=digest,
            lp_status=sol.status,
            lp_value=sol.value,
            lp_unique=lp_unique,
            threshold=None,
            e=e,
            modulus=None,
            records=(),
            skipped=(),
            verdict="Inconclusive",
            notes=tuple(notes),
        )

    r = pair.witness[1] if pair.witness is not None else 1
    if modulus_override is not None:
        modulus = modulus_override
    else:
        weight_lcm = lcm_of_denominators(sol.primal) if sol.primal is not None else 1
        modulus = math.lcm(weight_lcm, threshold.denominator) * r

    records: list[PrimeRecord] = []
    skipped: list[int] = sorted(set(skip))
    if primes_override is not None:
        candidates: Iterable[int] = list(primes_override)
        for p in candidates:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        wanted = len(candidates)
    else:
        candidates = iter_primes_in_progression(1, modulus, skipped)
        wanted = count

    attempts = 0
    for p in candidates:
        if len(records) >= wanted or attempts > wanted + 64:
            break
        attempts += 1
        q = p**e
        target = ceil_fraction(threshold * (q - 1))
        try:
            nu = pair_nu_value(pair, p, e, max_power=max(max_total, target + 1))
        except PrimeExcluded:
            skipped.append(p)
            continue
        split = (
            exponent_split_search(pair, p, e, t=threshold, max_total=max(max_total, target))
            if nu >= target
            else None
        )
        if nu >= 0:
            lower = Fraction(nu, q)
            upper = Fraction(nu + pair.aux_count, q)
        else:
            lower = upper = None
        records.append(
            PrimeRecord(
                p=p,
                e=e,
                target=target,
                nu=nu,
                fedder=nu >= target,
                split=split,
                lower=lower,
                upper=upper,
                agree=nu == target,
            )
        )

    if records and all(rec.agree for rec in records):
        verdict = "Supported"
        notes.append(
            "agreement at finitely many primes is evidence for the correspondence, "
            "not a proof"
        )
    elif (
        lp_unique is True
        and pair.ci_count == 0
        and pair.witness is None
        and any(rec.nu < rec.target for rec in records)
    ):
        verdict = "Refuted"
        notes.append("some prime certifies a threshold strictly below the LP value")
    else:
        verdict = "Inconclusive"
        if pair.ci_count > 0 or pair.witness is not None:
            notes.append("negative outcomes are inconclusive for this witness")

    return CorrespondenceReport(
        digest=digest,
        lp_status=sol.status,
        lp_value=sol.value,
        lp_unique=lp_unique,
        threshold=threshold,
        e=e,
        modulus=modulus if primes_override is None else None,
        records=tuple(records),
        skipped=tuple(sorted(set(skipped))),
        verdict=verdict,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# serialization


def _frac_str(value) -> str:
    return "none" if value is None else str(Fraction(value))


def report_to_text(report: CorrespondenceReport) -> str:
    """Human-readable report with a stable key order (LF line endings)."""
    lines = [
        REPORT_MAGIC,
        f"digest: {report.digest}",
        f"lp_status: {report.lp_status}",
        f"lp_value: {_frac_str(report.lp_value)}",
        f"lp_unique: {'unknown' if report.lp_unique is None else str(report.lp_unique).lower()}",
        f"threshold: {_frac_str(report.threshold)}",
        f"e: {report.e}",
        f"modulus: {report.modulus if report.modulus is not None else 'none'}",
        f"primes_tested: {len(report.records)}",
    ]
    for rec in report.records:
        split = "none" if rec.split is None else ",".join(str(k) for k in rec.split)
        interval = (
            f"[{rec.lower}, {rec.upper}]" if rec.lower is not None else "undefined"
        )
        lines.append(
            f"prime: {rec.p}  e: {rec.e}  target: {rec.target}  nu: {rec.nu}  "
            f"fedder: {str(rec.fedder).lower()}  split: {split}  "
            f"interval: {interval}  agree: {str(rec.agree).lower()}"
        )
    lines.append(
        "skipped: " + (",".join(str(p) for p in report.skipped) if report.skipped else "none")
    )
    lines.append(f"verdict: {report.verdict}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def report_to_json(report: CorrespondenceReport) -> str:
    """Machine-readable variant; round-trips through report_from_json."""
    payload = {
        "format": REPORT_MAGIC,
        "digest": report.digest,
        "lp_status": report.lp_status,
        "lp_value": None if report.lp_value is None else str(report.lp_value),
        "lp_unique": report.lp_unique,
        "threshold": None if report.threshold is None else str(report.threshold),
        "e": report.e,
        "modulus": report.modulus,
        "records": [
            {
                "p": rec.p,
                "e": rec.e,
                "target": rec.target,
                "nu": rec.nu,
                "fedder": rec.fedder,
                "split": None if rec.split is None else list(rec.split),
                "lower": None if rec.lower is None else str(rec.lower),
                "upper": None if rec.upper is None else str(rec.upper),
                "agree": rec.agree,
            }
            for rec in report.records
        ],
        "skipped": list(report.skipped),
        "verdict": report.verdict,
        "notes": list(report.notes),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def report_from_json(text: str) -> CorrespondenceReport:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not a JSON report: {exc}") from exc
    if payload.get("format") != REPORT_MAGIC:
        raise FormatError("unrecognized report format")

    def frac(v):
        return None if v is None else Fraction(v)

    records = tuple(
        PrimeRecord(
            p=rec["p"],
            e=rec["e"],
            target=rec["target"],
            nu=rec["nu"],
            fedder=rec["fedder"],
            split=None if rec["split"] is None else tuple(rec["split"]),
            lower=frac(rec["lower"]),
            upper=frac(rec["upper"]),
            agree=rec["agree"],
        )
        for rec in payload["records"]
    )
    return CorrespondenceReport(
        digest=payload["digest"],
        lp_status=payload["lp_status"],
        lp_value=frac(payload["lp_value"]),
        lp_unique=payload["lp_unique"],
        threshold=frac(payload["threshold"]),
        e=payload["e"],
        modulus=payload["modulus"],
        records=records,
        skipped=tuple(payload["skipped"]),
        verdict=payload["verdict"],
        notes=tuple(payload["notes"]),
    )
