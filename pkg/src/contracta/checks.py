"""Named verification suites: oracle-versus-characterization scans.

Every suite compares a characterized predicate with its brute-force oracle on
a whole family, or scans a family for a structural property.  A failed
verdict always carries a replayable counterexample payload.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .maps import compose, is_idempotent, map_to_text
from .partitions import (
    coarsest_merely_convex_refinement,
    kernel,
    max_convex_refinement,
    partition_to_text,
)
from .relations import (
    abundance_witness,
    d_char,
    green_oracle,
    l_char,
    r_char,
    regular_char_ct,
    regular_char_oct,
    regular_char_orct,
    starred_char,
    starred_partition,
    unipotence_witness,
)
from .semigroups import (
    enumerate_family,
    generated_subsemigroup,
    idempotents,
    is_orthodox,
    regular_elements,
)

__all__ = ["VerifyReport", "CHECK_IDS", "run_check", "first_counterexample"]


@dataclass
class VerifyReport:
    """Outcome of one named check on one family and size."""

    check: str
    family: str | None
    n: int | None
    verdict: str  # "pass" or "fail"
    p: int | None = None
    counterexample: dict | None = None
    detail: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self, include_timing: bool = False) -> dict:
        obj: dict = {
            "check": self.check,
            "family": self.family,
            "n": self.n,
            "verdict": self.verdict,
        }
        if self.p is not None:
            obj["p"] = self.p
        if self.counterexample is not None:
            obj["counterexample"] = self.counterexample
        if self.detail:
            obj["detail"] = self.detail
        if include_timing:
            obj["elapsed_ms"] = round(self.elapsed_ms, 3)
        return obj


def _report(check, family, n, verdict, counterexample=None, detail=None, p=None) -> VerifyReport:
    return VerifyReport(
        check=check,
        family=family,
        n=n,
        verdict=verdict,
        p=p,
        counterexample=counterexample,
        detail=detail or {},
    )


def _require_family(check: str, family: str, allowed: tuple[str, ...]) -> None:
    if family not in allowed:
        raise ValueError(f"check {check!r} supports families {', '.join(allowed)}; got {family!r}")


# -- individual checks ---------------------------------------------------------


def check_regularity_ct(family: str, n: int) -> list[VerifyReport]:
    _require_family("regularity-ct", family, ("ct",))
    s = enumerate_family("ct", n)
    oracle = set(regular_elements(s))
    for a in s.elements:
        if (a in oracle) != regular_char_ct(a):
            return [
                _report(
                    "regularity-ct", family, n, "fail",
                    {
                        "map": map_to_text(a),
                        "oracle": a in oracle,
                        "characterized": regular_char_ct(a),
                    },
                )
            ]
    return [_report("regularity-ct", family, n, "pass", detail={"elements": s.size, "regular": len(oracle)})]


def check_regularity_orct(family: str, n: int) -> list[VerifyReport]:
    _require_family("regularity-orct", family, ("orct", "oct"))
    s = enumerate_family(family, n)
    char = regular_char_orct if family == "orct" else regular_char_oct
    oracle = set(regular_elements(s))
    for a in s.elements:
        if (a in oracle) != char(a):
            return [
                _report(
                    "regularity-orct", family, n, "fail",
                    {"map": map_to_text(a), "oracle": a in oracle, "characterized": char(a)},
                )
            ]
    return [_report("regularity-orct", family, n, "pass", detail={"elements": s.size, "regular": len(oracle)})]


def _check_green(kind: str, check_id: str, family: str, n: int) -> list[VerifyReport]:
    _require_family(check_id, family, ("ct",))
    s = enumerate_family("ct", n)
    part = green_oracle(s, kind)
    char = {"l": l_char, "r": r_char, "d": d_char}[kind]
    disagreements = 0
    witness = None
    for i, j in combinations_with_replacement(range(s.size), 2):
        o = part.same_class(i, j)
        c = char(s.elements[i], s.elements[j])
        if o != c:
            disagreements += 1
            if witness is None:
                witness = {
                    "maps": [map_to_text(s.elements[i]), map_to_text(s.elements[j])],
                    "oracle": o,
                    "characterized": c,
                }
    detail = {"elements": s.size, "classes": part.class_count, "pairs_disagreeing": disagreements}
    if witness is not None:
        return [_report(check_id, family, n, "fail", witness, detail)]
    return [_report(check_id, family, n, "pass", detail=detail)]


def check_green_l(family: str, n: int) -> list[VerifyReport]:
    return _check_green("l", "green-l", family, n)


def check_green_r(family: str, n: int) -> list[VerifyReport]:
    return _check_green("r", "green-r", family, n)


def check_green_d(family: str, n: int) -> list[VerifyReport]:
    return _check_green("d", "green-d", family, n)


def check_starred(family: str, n: int) -> list[VerifyReport]:
    _require_family("starred", family, ("ct", "oct", "orct"))
    s = enumerate_family(family, n)
    reports = []
    empirical = family == "orct"  # characterizations are only claimed for ct and oct
    for kind in ("lstar", "rstar", "hstar", "dstar"):
        part = starred_partition(s, kind)
        witness = None
        disagreements = 0
        for i, j in combinations_with_replacement(range(s.size), 2):
            o = part.same_class(i, j)
            c = starred_char(s.elements[i], s.elements[j], kind)
            if o != c:
                disagreements += 1
                if witness is None:
                    witness = {
                        "maps": [map_to_text(s.elements[i]), map_to_text(s.elements[j])],
                        "kind": kind,
                        "oracle": o,
                        "characterized": c,
                    }
        detail = {"kind": kind, "elements": s.size, "pairs_disagreeing": disagreements}
        if empirical:
            detail["note"] = "empirical comparison; no claim backs this family"
        reports.append(
            _report("starred", family, n, "pass" if witness is None else "fail", witness, detail)
        )
    return reports


def check_abundance(family: str, n: int) -> list[VerifyReport]:
    _require_family("abundance", family, ("ct", "oct", "orct"))
    s = enumerate_family(family, n)
    reports = []
    for side, check_id in (("left", "abundance-left"), ("right", "abundance-right")):
        witness = abundance_witness(s, side)
        if witness is None:
            reports.append(_report(check_id, family, n, "pass", detail={"elements": s.size}))
        else:
            reports.append(
                _report(
                    check_id, family, n, "fail",
                    {
                        "maps": [map_to_text(m) for m in witness],
                        "reason": f"this {side[0]}-starred class contains no idempotent",
                    },
                )
            )
    return reports


def check_unipotence(family: str, n: int) -> list[VerifyReport]:
    _require_family("unipotence", family, ("orct", "oct"))
    s = enumerate_family(family, n)
    reg = regular_elements(s)
    reports = []
    for side, check_id in (("l", "unipotence-l"), ("r", "unipotence-r")):
        witness = unipotence_witness(s, reg, side)
        if witness is None:
            reports.append(_report(check_id, family, n, "pass", detail={"regular_elements": len(reg)}))
        else:
            ids = [map_to_text(m) for m in witness if is_idempotent(m)]
            reports.append(
                _report(
                    check_id, family, n, "fail",
                    {
                        "maps": [map_to_text(m) for m in witness],
                        "idempotents_in_class": ids,
                        "reason": f"{side}-class of the regular elements with {len(ids)} idempotents",
                    },
                )
            )
    return reports


def check_orthodox(family: str, n: int) -> list[VerifyReport]:
    _require_family("orthodox", family, ("ct", "oct", "orct"))
    s = enumerate_family(family, n)
    reg = regular_elements(s)
    try:
        verdict = is_orthodox(s, reg)
    except ValueError as exc:
        return [_report("orthodox", family, n, "fail", {"reason": str(exc)})]
    if verdict:
        return [_report("orthodox", family, n, "pass", detail={"regular_elements": len(reg)})]
    ids = idempotents(s)
    witness = None
    for e in ids:
        for f in ids:
            ef = compose(e, f)
            if not is_idempotent(ef):
                witness = {
                    "maps": [map_to_text(e), map_to_text(f)],
                    "product": map_to_text(ef),
                    "reason": "product of idempotents is not idempotent",
                }
                break
        if witness:
            break
    if witness is None:
        inside = set(regular_elements(s, subset=reg))
        stray = next(m for m in reg if m not in inside)
        witness = {
            "maps": [map_to_text(stray)],
            "reason": "not regular within the regular elements",
        }
    return [_report("orthodox", family, n, "fail", witness)]


def check_idempotent_products(family: str, n: int) -> list[VerifyReport]:
    _require_family("idempotent-products", family, ("ct", "oct", "orct"))
    s = enumerate_family(family, n)
    ids = idempotents(s)
    reports = []
    if family == "ct":
        reg = set(regular_elements(s))
        witness = None
        for e in ids:
            for f in ids:
                if compose(e, f) not in reg:
                    witness = {"maps": [map_to_text(e), map_to_text(f)], "product": map_to_text(compose(e, f))}
                    break
            if witness:
                break
        reports.append(
            _report(
                "idempotent-products", family, n,
                "pass" if witness is None else "fail", witness,
                {"claim": "products of idempotents are regular", "idempotents": len(ids)},
            )
        )
        gen = generated_subsemigroup(s, ids)
        regular_inside = regular_elements(gen)
        ok = len(regular_inside) == gen.size
        bad = None
        if not ok:
            missing = sorted(set(gen.elements) - set(regular_inside))
            bad = {"map": map_to_text(missing[0]), "reason": "not regular inside the idempotent-generated subsemigroup"}
        reports.append(
            _report(
                "idempotent-products", family, n, "pass" if ok else "fail", bad,
                {"claim": "idempotent-generated subsemigroup is regular", "generated_size": gen.size},
            )
        )
    else:
        witness = None
        for e in ids:
            for f in ids:
                ef = compose(e, f)
                if not is_idempotent(ef):
                    witness = {"maps": [map_to_text(e), map_to_text(f)], "product": map_to_text(ef)}
                    break
            if witness:
                break
        reports.append(
            _report(
                "idempotent-products", family, n,
                "pass" if witness is None else "fail", witness,
                {"claim": "idempotents are closed under product", "idempotents": len(ids)},
            )
        )
    return reports


def check_refinement_readings(family: str, n: int) -> list[VerifyReport]:
    """Informational: compare the two readings of the coarsest convex refinement.

    The primary reading requires refinements to collapse through a contraction
    (admissible transversal); the alternative accepts any convex transversal.
    Reported, never asserted: this check always passes and carries counts.
    """
    _require_family("refinement-readings", family, ("ct",))
    s = enumerate_family("ct", n)
    seen = set()
    differing = 0
    example = None
    for a in s.elements:
        k = kernel(a).without_images()
        if k in seen:
            continue
        seen.add(k)
        primary = max_convex_refinement(a)
        alternative = coarsest_merely_convex_refinement(k)
        if primary != alternative:
            differing += 1
            if example is None:
                example = {
                    "map": map_to_text(a),
                    "admissible_reading": partition_to_text(primary),
                    "convex_only_reading": partition_to_text(alternative),
                }
    detail = {"kernels_scanned": len(seen), "readings_differ_on": differing}
    if example is not None:
        detail["example"] = example
    return [_report("refinement-readings", family, n, "pass", detail=detail)]


CHECKS = {
    "regularity-ct": (check_regularity_ct, "ct"),
    "regularity-orct": (check_regularity_orct, "orct"),
    "green-l": (check_green_l, "ct"),
    "green-r": (check_green_r, "ct"),
    "green-d": (check_green_d, "ct"),
    "starred": (check_starred, "ct"),
    "abundance": (check_abundance, "ct"),
    "unipotence": (check_unipotence, "orct"),
    "orthodox": (check_orthodox, "ct"),
    "idempotent-products": (check_idempotent_products, "ct"),
    "refinement-readings": (check_refinement_readings, "ct"),
}

CHECK_IDS = tuple(CHECKS)


def run_check(check_id: str, n: int, family: str | None = None) -> list[VerifyReport]:
    """Run one named check; ``family`` defaults per check."""
    try:
        fn, default_family = CHECKS[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}; known: {', '.join(CHECK_IDS)}") from None
    start = time.perf_counter()
    reports = fn(family or default_family, n)
    elapsed = (time.perf_counter() - start) * 1000.0
    for r in reports:
        r.elapsed_ms = elapsed / len(reports)
    return reports


def first_counterexample(check_id: str, n: int, family: str | None = None) -> dict | None:
    """The first failing report's payload for a named check, or None."""
    for report in run_check(check_id, n, family):
        if not report.passed and report.counterexample is not None:
            return report.counterexample
    return None
