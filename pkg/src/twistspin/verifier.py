"""Desk-scale machine checks of the classification facts and counting formulas.

Every check recomputes its claim exhaustively from defining conditions and
reports a structured result.  Where a fixed reference transcription exists
(the displayed classification lists, the 6x6 conjugation table, the published
dihedral count formula), the computed truth is diffed against it: transcription
or formula mismatches are reported as ``discrepancy-documented`` with exact
witnesses, never silently patched, and never promoted to ``fail`` unless the
defining conditions themselves are violated.

Ordering is canonical everywhere, so two runs of a suite produce identical
reports (timings are excluded from canonical serialization).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .catalog import CATALOG, get_knot
from .closed_forms import dihedral_count, dihedral_hom_count, sl2z3_count
from .enumerator import enumerate_backtracking
from .groups import DihedralGroup, GroupElement, OrderClass, Sl2z3Group
from .presentations import build_bts, compute_beta

PASS = "pass"
FAIL = "fail"
DOCUMENTED = "discrepancy-documented"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    details: dict
    runtime_ms: float | None = None

    def to_json_dict(self, include_runtime: bool = False) -> dict:
        return {
            "check_id": self.check_id,
            "status": self.status,
            "details": self.details,
            "runtime_ms": self.runtime_ms if include_runtime else None,
        }


def _timed(check_id: str, status: str, details: dict, start: float) -> CheckResult:
    return CheckResult(
        check_id=check_id,
        status=status,
        details=details,
        runtime_ms=(time.perf_counter() - start) * 1000.0,
    )


# Reference transcriptions of the displayed classification lists, entries in
# the symmetric residues {-1, 0, 1}, order preserved as printed.
REFERENCE_ORDER_FOUR = (
    (0, 1, -1, 1), (0, -1, 1, 1), (1, 1, 1, -1),
    (-1, -1, -1, 1), (-1, 1, 1, 1), (1, -1, -1, -1),
)
REFERENCE_ORDER_THREE = (
    (1, 0, 1, 1), (1, 0, -1, 1), (1, 1, 0, 1), (1, -1, 0, 1),
    (0, 1, -1, -1), (0, -1, 1, -1), (-1, 1, -1, 0), (-1, -1, 1, 0),
)
REFERENCE_ORDER_SIX = (
    (-1, 0, 1, -1), (-1, 0, -1, -1), (-1, 1, 0, -1), (-1, -1, 0, -1),
    (0, 1, -1, 1), (0, -1, 1, 1), (1, -1, 1, 0), (1, 1, -1, 0),
)

# Reference transcription of the 6x6 "ABA" table (rows/columns in its printed
# order, which lists the actual order-four elements).
REFERENCE_ABA_ORDER = (
    (0, 1, -1, 0), (0, -1, 1, 0), (1, 1, 1, -1),
    (-1, -1, -1, 1), (1, -1, -1, -1), (-1, 1, 1, 1),
)
REFERENCE_ABA_CELLS = (
    ((0, -1, 1, 0), (0, 1, -1, 0), (1, 1, 1, -1), (-1, -1, -1, 1), (1, -1, -1, -1), (-1, 1, 1, 1)),
    ((0, -1, 1, 0), (0, 1, -1, 0), (1, 1, 1, -1), (-1, -1, -1, 1), (1, -1, -1, -1), (-1, 1, 1, 1)),
    ((0, 1, -1, 0), (0, -1, 1, 0), (-1, -1, -1, 1), (1, 1, 1, -1), (1, -1, -1, -1), (-1, 1, 1, 1)),
    ((0, 1, -1, 0), (0, -1, 1, 0), (-1, -1, -1, 1), (1, 1, 1, -1), (1, -1, -1, -1), (-1, 1, 1, 1)),
    ((0, 1, -1, 0), (0, -1, 1, 0), (1, 1, 1, -1), (-1, -1, -1, 1), (-1, 1, 1, 1), (1, -1, -1, -1)),
    ((0, 1, -1, 0), (0, -1, 1, 0), (1, 1, 1, -1), (-1, -1, -1, 1), (-1, 1, 1, 1), (1, -1, 1, -1)),
)

_CLASS_SIZES = {
    OrderClass.IDENTITY: 1,
    OrderClass.MINUS_IDENTITY: 1,
    OrderClass.ORDER_FOUR: 6,
    OrderClass.ORDER_THREE: 8,
    OrderClass.ORDER_SIX: 8,
}

_REFERENCE_LISTS = {
    OrderClass.ORDER_FOUR: REFERENCE_ORDER_FOUR,
    OrderClass.ORDER_THREE: REFERENCE_ORDER_THREE,
    OrderClass.ORDER_SIX: REFERENCE_ORDER_SIX,
}


def _mat_label(group: Sl2z3Group, entries: Sequence[int]) -> str:
    return group.label(group.from_matrix(entries))


def check_decomposition() -> CheckResult:
    """Partition of the 24 matrices by defining power conditions, with sizes
    (1, 1, 6, 8, 8), diffed against the reference transcribed lists."""
    start = time.perf_counter()
    group = Sl2z3Group()
    classes: dict[OrderClass, list[GroupElement]] = {c: [] for c in OrderClass}
    for g in group.elements():
        classes[group.classify(g)].append(g)

    sizes = {c.value: len(v) for c, v in classes.items()}
    covered = sum(sizes.values())
    size_ok = covered == group.order and all(
        len(classes[c]) == n for c, n in _CLASS_SIZES.items()
    )

    discrepancies: list[dict] = []
    for cls, listed in _REFERENCE_LISTS.items():
        computed = {g.label for g in classes[cls]}
        for entries in listed:
            elem = group.from_matrix(entries)
            actual = group.classify(elem)
            if actual is not cls:
                discrepancies.append(
                    {
                        "entry": group.label(elem),
                        "listed_under": cls.value,
                        "classified_as": actual.value,
                    }
                )
        missing = sorted(computed - {_mat_label(group, e) for e in listed})
        for label in missing:
            discrepancies.append(
                {"entry": label, "listed_under": None, "classified_as": cls.value}
            )
    # entries printed under more than one list
    seen: dict[str, list[str]] = {}
    for cls, listed in _REFERENCE_LISTS.items():
        for entries in listed:
            seen.setdefault(_mat_label(group, entries), []).append(cls.value)
    duplicates = [
        {"entry": k, "listed_under": sorted(v)} for k, v in sorted(seen.items()) if len(v) > 1
    ]

    status = PASS if size_ok and not discrepancies and not duplicates else (
        DOCUMENTED if size_ok else FAIL
    )
    return _timed(
        "sl2z3-order-class-decomposition",
        status,
        {
            "group_order": group.order,
            "class_sizes": sizes,
            "partition_covers_group": covered == group.order,
            "reference_list_discrepancies": discrepancies,
            "reference_list_duplicates": duplicates,
        },
        start,
    )


def check_quasiconj() -> CheckResult:
    """ABA = B^-1 when B = A^{+-1} and ABA = B otherwise, over all 36 pairs of
    order-four elements; the 6x6 reference table is regenerated and diffed."""
    start = time.perf_counter()
    group = Sl2z3Group()
    order_four = [g for g in group.elements() if group.classify(g) is OrderClass.ORDER_FOUR]
    rule_violations = []
    for a in order_four:
        for b in order_four:
            aba = a * b * a
            expected = b.inverse() if b in (a, a.inverse()) else b
            if aba != expected:
                rule_violations.append(
                    {"A": a.label, "B": b.label, "ABA": aba.label, "expected": expected.label}
                )

    header = [group.from_matrix(e) for e in REFERENCE_ABA_ORDER]
    cell_diffs = []
    for i, a in enumerate(header):
        for j, b in enumerate(header):
            computed = a * b * a
            listed = REFERENCE_ABA_CELLS[i][j]
            try:
                listed_elem = group.from_matrix(listed)
                listed_label = group.label(listed_elem)
                matches = listed_elem == computed
            except Exception:
                listed_label = f"[[{listed[0]},{listed[1]}],[{listed[2]},{listed[3]}]]"
                matches = False
            if not matches:
                cell_diffs.append(
                    {
                        "row": a.label,
                        "column": b.label,
                        "computed": computed.label,
                        "listed": listed_label,
                    }
                )

    status = FAIL if rule_violations else (DOCUMENTED if cell_diffs else PASS)
    return _timed(
        "sl2z3-quasiconjugation-table",
        status,
        {
            "pairs_checked": len(order_four) ** 2,
            "rule_violations": rule_violations,
            "reference_table_cell_diffs": cell_diffs,
        },
        start,
    )


def check_keylemma(
    m_values: Iterable[int] = range(-12, 13),
    n_values: Iterable[int] = range(1, 13),
    k_values: Iterable[int] = range(1, 13),
) -> CheckResult:
    """beta has parity opposite to m, solves the congruence, lies in [0, 2|m|),
    and c^beta is trivial iff m is odd for every order-2 central c in both
    target group families."""
    start = time.perf_counter()
    sl2 = Sl2z3Group()
    centrals: list[GroupElement] = [sl2.minus_identity]
    centrals += [DihedralGroup(k).central_rotation for k in k_values]
    failures = []
    checked = 0
    for m in m_values:
        if m in (-1, 0, 1):
            continue
        eps = 1 if m > 0 else -1
        for n in n_values:
            if math.gcd(m, n) != 1:
                continue
            beta = compute_beta(m, n)
            if (n * beta - eps) % abs(m) != 0 or beta % 2 == m % 2 or not 0 <= beta < 2 * abs(m):
                failures.append({"m": m, "n": n, "beta": beta, "reason": "beta postcondition"})
                continue
            for c in centrals:
                power = c ** beta
                expected = c.group.identity if m % 2 else c
                checked += 1
                if power != expected:
                    failures.append(
                        {
                            "m": m,
                            "n": n,
                            "beta": beta,
                            "group": c.group.descriptor,
                            "power": power.label,
                            "expected": expected.label,
                        }
                    )
    return _timed(
        "central-power-parity",
        FAIL if failures else PASS,
        {"powers_checked": checked, "failures": failures[:10]},
        start,
    )


def check_sl2z3_presentation_witness() -> CheckResult:
    """Exhaustive scan for triples with a^3 = b^3 = c^2 = abc that generate the
    whole group; the common value must be the central involution."""
    start = time.perf_counter()
    group = Sl2z3Group()
    mul = group.mul_table
    cubes = [int(mul[int(mul[g, g]), g]) for g in range(group.order)]
    squares = [int(mul[g, g]) for g in range(group.order)]
    minus_i = group.minus_identity.index

    def generates(gens: tuple[int, ...]) -> bool:
        seen = {group.identity_index}
        frontier = [group.identity_index]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = int(mul[x, g])
                if y not in seen:
                    seen.add(y)
                    if len(seen) == group.order:
                        return True
                    frontier.append(y)
        return len(seen) == group.order

    generating = 0
    bad_center = []
    sample = None
    for a in range(group.order):
        za = cubes[a]
        for b in range(group.order):
            if cubes[b] != za:
                continue
            for c in range(group.order):
                if squares[c] != za:
                    continue
                if int(mul[int(mul[a, b]), c]) != za:
                    continue
                if not generates((a, b, c)):
                    continue
                generating += 1
                if za != minus_i:
                    bad_center.append(
                        [group.label(group.element(t)) for t in (a, b, c)]
                    )
                elif sample is None:
                    sample = {
                        "a": group.label(group.element(a)),
                        "b": group.label(group.element(b)),
                        "c": group.label(group.element(c)),
                        "common_value": group.label(group.element(za)),
                    }
    status = PASS if generating > 0 and not bad_center else FAIL
    return _timed(
        "sl2z3-triple-presentation-witness",
        status,
        {
            "group_order": group.order,
            "generating_witnesses": generating,
            "witness": sample,
            "witnesses_with_noncentral_value": bad_center[:5],
        },
        start,
    )


def _coprime_ns(m: int, n_max: int) -> list[int]:
    if m == 0:
        return [1]  # gcd(0, n) = n, so only n = 1 qualifies
    return [n for n in range(1, n_max + 1) if math.gcd(m, n) == 1]


def check_sl2z3_counts(
    m_range: tuple[int, int] = (-6, 6),
    knots: Sequence[str] | None = None,
    n_max: int = 6,
) -> CheckResult:
    """Enumerated counts with h -> -I against the closed form, plus the
    structural claims (trivial images for odd m coprime to 3; a single common
    order-four image for m = 2 mod 4).  Counts for odd multiples of 3, where
    no closed form is asserted, are recorded for reference."""
    start = time.perf_counter()
    group = Sl2z3Group()
    h = group.minus_identity
    names = list(knots) if knots is not None else list(CATALOG)
    mismatches = []
    structure_failures = []
    uncovered = {}
    configs = 0
    for name in names:
        pres = get_knot(name)
        for m in range(m_range[0], m_range[1] + 1):
            want = sl2z3_count(m)
            for n in _coprime_ns(m, n_max):
                bts = build_bts(pres, m, n)
                reps = enumerate_backtracking(bts, group, h)
                configs += 1
                if want is None:
                    uncovered[f"{name} m={m} n={n}"] = len(reps)
                    continue
                if len(reps) != want:
                    mismatches.append(
                        {"knot": name, "m": m, "n": n, "enumerated": len(reps), "closed_form": want}
                    )
                if m % 2 == 1 and m % 3 != 0:
                    for r in reps:
                        if any(g != group.identity for g in r.meridian_images):
                            structure_failures.append(
                                {"knot": name, "m": m, "n": n, "witness": r.labels()}
                            )
                elif m % 4 in (2, -2):
                    for r in reps:
                        imgs = set(r.meridian_images)
                        if len(imgs) != 1 or group.classify(next(iter(imgs))) is not OrderClass.ORDER_FOUR:
                            structure_failures.append(
                                {"knot": name, "m": m, "n": n, "witness": r.labels()}
                            )
    status = FAIL if mismatches or structure_failures else PASS
    return _timed(
        "sl2z3-count-formula",
        status,
        {
            "configurations": configs,
            "mismatches": mismatches[:10],
            "structure_failures": structure_failures[:10],
            "uncovered_m_counts": uncovered,
        },
        start,
    )


def check_dihedral_counts(
    m_range: tuple[int, int] = (-6, 6),
    k_range: tuple[int, int] = (1, 8),
    knots: Sequence[str] | None = None,
    n_max: int = 6,
) -> CheckResult:
    """Enumerated counts with h -> r^k against both closed forms.

    The enumeration is ground truth.  It must equal ``dihedral_hom_count``
    everywhere (anything else is a failure).  Cells where the published
    formula ``dihedral_count`` differs from the enumeration are collected as
    documented discrepancies together with the orbit-pairing explanation:
    published = (raw + 1)/2 for odd m, raw/2 for even m with |m|/d odd, and
    a spurious d/2 where no representation exists at all (|m|/d even).
    """
    start = time.perf_counter()
    names = list(knots) if knots is not None else list(CATALOG)
    configs = 0
    failures = []
    published_diffs: dict[tuple[int, int], dict] = {}
    structure_failures = []
    for k in range(k_range[0], k_range[1] + 1):
        group = DihedralGroup(k)
        h = group.central_rotation
        for name in names:
            pres = get_knot(name)
            for m in range(m_range[0], m_range[1] + 1):
                for n in _coprime_ns(m, n_max):
                    bts = build_bts(pres, m, n)
                    reps = enumerate_backtracking(bts, group, h)
                    raw = len(reps)
                    configs += 1
                    if raw != dihedral_hom_count(m, k):
                        failures.append(
                            {
                                "knot": name,
                                "m": m,
                                "n": n,
                                "k": k,
                                "enumerated": raw,
                                "hom_closed_form": dihedral_hom_count(m, k),
                            }
                        )
                    published = dihedral_count(m, k)
                    if raw != published and (m, k) not in published_diffs:
                        if m % 2 == 1:
                            explained = published == (raw + 1) // 2
                        else:
                            explained = published == raw // 2 or raw == 0
                        published_diffs[(m, k)] = {
                            "m": m,
                            "k": k,
                            "enumerated": raw,
                            "published_closed_form": published,
                            "orbit_pairing_explains": explained,
                        }
                    for r in reps:
                        pairs = {group.pair(g) for g in r.meridian_images}
                        if any(d != 0 for _, d in pairs) or len(pairs) > 1:
                            structure_failures.append(
                                {"knot": name, "m": m, "n": n, "k": k, "witness": r.labels()}
                            )
    unexplained = [d for d in published_diffs.values() if not d["orbit_pairing_explains"]]
    if failures or structure_failures or unexplained:
        status = FAIL
    elif published_diffs:
        status = DOCUMENTED
    else:
        status = PASS
    diffs_sorted = [published_diffs[key] for key in sorted(published_diffs)]
    return _timed(
        "dihedral-count-formula",
        status,
        {
            "configurations": configs,
            "enumeration_vs_hom_closed_form_failures": failures[:10],
            "structure_failures": structure_failures[:10],
            "published_formula_discrepancies": diffs_sorted[:20],
            "published_formula_discrepancy_cells": len(diffs_sorted),
        },
        start,
    )


def check_derived_power_relators(
    m_range: tuple[int, int] = (-6, 6),
    k_range: tuple[int, int] = (1, 6),
    knots: Sequence[str] | None = None,
    n_max: int = 3,
) -> CheckResult:
    """Every representation found must satisfy x_i^|m| h^beta = 1 for ALL i,
    not just the single power relator present in the presentation."""
    start = time.perf_counter()
    sl2 = Sl2z3Group()
    targets: list[tuple] = [(sl2, sl2.minus_identity)]
    targets += [
        (g, g.central_rotation)
        for g in (DihedralGroup(k) for k in range(k_range[0], k_range[1] + 1))
    ]
    names = list(knots) if knots is not None else list(CATALOG)
    violations = []
    reps_checked = 0
    for group, h in targets:
        for name in names:
            pres = get_knot(name)
            for m in range(m_range[0], m_range[1] + 1):
                for n in _coprime_ns(m, n_max):
                    bts = build_bts(pres, m, n)
                    for rep in enumerate_backtracking(bts, group, h):
                        reps_checked += 1
                        hb = rep.h_image ** bts.beta
                        for i, x in enumerate(rep.meridian_images, start=1):
                            if (x ** abs(m)) * hb != group.identity:
                                violations.append(
                                    {
                                        "knot": name,
                                        "group": group.descriptor,
                                        "m": m,
                                        "n": n,
                                        "generator": i,
                                        "witness": rep.labels(),
                                    }
                                )
    return _timed(
        "derived-power-relators",
        FAIL if violations else PASS,
        {"representations_checked": reps_checked, "violations": violations[:10]},
        start,
    )


LEMMA_CHECKS = (
    "sl2z3-order-class-decomposition",
    "sl2z3-quasiconjugation-table",
    "central-power-parity",
    "sl2z3-triple-presentation-witness",
)
THEOREM_CHECKS = (
    "sl2z3-count-formula",
    "dihedral-count-formula",
    "derived-power-relators",
)


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    parameters: dict
    results: tuple[CheckResult, ...]

    @property
    def overall_pass(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def to_json_dict(self, include_runtime: bool = False) -> dict:
        counts = {PASS: 0, DOCUMENTED: 0, FAIL: 0}
        for r in self.results:
            counts[r.status] += 1
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "results": [r.to_json_dict(include_runtime) for r in self.results],
            "summary": {
                "pass": counts[PASS],
                "discrepancy_documented": counts[DOCUMENTED],
                "fail": counts[FAIL],
                "overall": "pass" if self.overall_pass else "fail",
            },
        }


def run_suite(
    suite: str = "all",
    m_range: tuple[int, int] = (-6, 6),
    k_range: tuple[int, int] = (1, 8),
    knots: Sequence[str] | None = None,
) -> VerifyReport:
    if suite not in ("lemmas", "theorems", "all"):
        raise ValueError(f"unknown suite {suite!r}")
    wanted: list[str] = []
    if suite in ("lemmas", "all"):
        wanted += list(LEMMA_CHECKS)
    if suite in ("theorems", "all"):
        wanted += list(THEOREM_CHECKS)

    results = []
    for check_id in wanted:
        if check_id == "sl2z3-order-class-decomposition":
            results.append(check_decomposition())
        elif check_id == "sl2z3-quasiconjugation-table":
            results.append(check_quasiconj())
        elif check_id == "central-power-parity":
            results.append(check_keylemma())
        elif check_id == "sl2z3-triple-presentation-witness":
            results.append(check_sl2z3_presentation_witness())
        elif check_id == "sl2z3-count-formula":
            results.append(check_sl2z3_counts(m_range=m_range, knots=knots))
        elif check_id == "dihedral-count-formula":
            results.append(check_dihedral_counts(m_range=m_range, k_range=k_range, knots=knots))
        elif check_id == "derived-power-relators":
            results.append(
                check_derived_power_relators(
                    m_range=m_range,
                    k_range=(k_range[0], min(k_range[1], 6)),
                    knots=knots,
                )
            )
    results.sort(key=lambda r: r.check_id)
    return VerifyReport(
        suite=suite,
        parameters={
            "m_range": list(m_range),
            "k_range": list(k_range),
            "knots": sorted(knots) if knots is not None else sorted(CATALOG),
        },
        results=tuple(results),
    )
