"""The full analysis pipeline and its report record.

analyze() drives validate -> spectra -> dual -> burnside -> structure ->
galois -> criteria and collects everything into an AnalysisReport that renders
deterministically (identical inputs, seed and tolerances give byte-identical
structured output).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__ as _version
from .burnside import BurnsideReport, burnside_report
from .core import FusionData, validate
from .criteria import (
    burnside_exclusion,
    divisibility_test,
    frobenius_test,
    modular_prime_support,
    near_group_modular_test,
    squarefree_factor_test,
)
from .dual import dual_codegrees, dual_flags, dual_hypergroup, double_dual_check
from .errors import (
    InexactTensor,
    NoPositiveColumn,
    NotNearGroup,
    MultiplePositiveColumns,
)
from .galois import check_codegree_conjugation, galois_orbits, weak_integrality
from .spectra import character_table, fp_character, order
from .structure import (
    adjoint,
    central_series,
    kernel_of_character,
    universal_grading,
)
from .tolerance import DEFAULT_TOL, Tolerance

__all__ = ["AnalysisReport", "analyze", "render_text", "render_structured"]

REPORT_DIGITS = 10


@dataclass
class AnalysisReport:
    name: str
    rank: int
    scalar_kind: str
    flags: dict
    seed: int
    tolerances: dict
    version: str = _version
    fp_dims: list | None = None
    fp_dim_total: float | None = None
    character_table: list | None = None
    codegrees: list | None = None
    order: float | None = None
    dual: dict | None = None
    burnside: dict | None = None
    grading: dict | None = None
    nilpotency_class: int | None = None
    galois: dict | None = None
    kernels: list | None = None
    weak_integrality: str | None = None
    exclusions: list = field(default_factory=list)
    residuals: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _round(x: float) -> float:
    r = round(float(x), REPORT_DIGITS)
    return 0.0 if r == 0 else r


def _complex_pair(z) -> list:
    z = complex(z)
    return [_round(z.real), _round(z.imag)]


def analyze(
    data: FusionData,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 0,
    exact_only: bool = False,
    modular_candidate: bool = False,
) -> AnalysisReport:
    flags = validate(data, tol)
    if exact_only and not data.is_exact:
        raise InexactTensor(f"{data.name}: --exact-only with a floating tensor")
    report = AnalysisReport(
        name=data.name,
        rank=data.rank,
        scalar_kind=data.scalar_kind,
        flags=flags.as_dict(),
        seed=seed,
        tolerances={
            "abs": tol.abs,
            "rel": tol.rel,
            "snap_denominator_bound": tol.snap_denominator_bound,
        },
    )
    if not flags.abelian:
        report.notes.append("non-abelian data: spectral analysis skipped")
        return report

    table = character_table(data, tol=tol, seed=seed)
    report.character_table = [
        [_complex_pair(table.values[i, j]) for j in range(data.rank)]
        for i in range(data.rank)
    ]
    report.codegrees = [_round(x) for x in table.codegrees]

    try:
        fp = fp_character(table)
    except (NoPositiveColumn, MultiplePositiveColumns) as exc:
        report.notes.append(f"no FP character: {exc}")
        return report

    d = table.fp_dims()
    report.fp_dims = [_round(x) for x in d]
    n_h = order(data, table, fp)
    report.fp_dim_total = _round(n_h)
    report.order = _round(n_h)

    dd = dual_hypergroup(data, table, fp, tol)
    dfl = dual_flags(dd, tol)
    nhat = dual_codegrees(dd, data, table)
    double_dual_check(data, table, fp, tol)
    report.dual = {
        "orders_hat": [_round(x) for x in dd.orders_hat],
        "involution_hat": list(dd.involution_hat),
        "rn": dfl.rn,
        "rational": dfl.rational,
        "h_integral": dfl.h_integral,
        "codegrees_hat": [_round(x) for x in nhat],
        "double_dual_isomorphic": True,
    }

    br: BurnsideReport = burnside_report(data, table, dfl.h_integral, tol)
    report.burnside = {
        "grouplike_elements": list(br.grouplike_elements),
        "vanishing_elements": list(br.vanishing_elements),
        "nonvanishing": list(br.nonvanishing),
        "is_burnside": br.is_burnside,
        "burnside_witness": br.burnside_witness,
        "grouplike_characters": list(br.grouplike_characters),
        "is_dual_burnside": br.is_dual_burnside,
        "dual_witness": br.dual_witness,
        "sgn_elements": {str(k): v for k, v in sorted(br.sgn_elements.items())},
        "sgn_characters": {str(k): v for k, v in sorted(br.sgn_characters.items())},
        "grouplike_closure_ok": br.grouplike_closure_ok,
    }
    report.residuals.update({k: _round(v) for k, v in br.identity_checks.items()})
    report.notes.extend(br.hypothesis_notes)

    ad = adjoint(data, table, tol)
    grading = universal_grading(data, table, tol)
    report.grading = {
        "adjoint": list(ad.indices),
        "components": [list(c) for c in grading.components],
        "group_order": grading.group_order,
        "invariant_factors": list(grading.iso_class),
    }
    series = central_series(data, tol)
    report.nilpotency_class = series.nilpotency_class

    report.kernels = [
        list(kernel_of_character(data, table, j, tol).indices)
        for j in range(data.rank)
    ]

    report.weak_integrality = weak_integrality(data, table, br.is_dual_burnside, tol)

    if flags.rational:
        orbits = galois_orbits(data, table, tol)
        conj = check_codegree_conjugation(
            orbits, table.codegrees, dd.orders_hat, dfl.h_integral, tol
        )
        report.galois = {
            "orbits": [list(o) for o in orbits.orbits],
            "rational_characters": [
                j for j in range(data.rank) if orbits.rational_mask[j]
            ],
            "max_certificate_residual": _round(
                max((v for v in orbits.certificates.values()), default=0.0)
            ),
            "codegree_conjugation_ok": bool(conj is not None),
        }

    if flags.fusion_ring:
        verdicts = [burnside_exclusion(data, table, dfl.h_integral, tol)]
        verdicts.append(divisibility_test(data, table, tol))
        for alpha in (1, "1/2"):
            from fractions import Fraction

            verdicts.append(
                frobenius_test(data, table, Fraction(alpha), tol)
            )
        if modular_candidate:
            from .criteria import ExclusionVerdict
            from .errors import NotWeaklyIntegral

            for name, test in (
                ("modular_prime_support", modular_prime_support),
                ("squarefree_factor", squarefree_factor_test),
            ):
                try:
                    verdicts.append(test(data, table, tol))
                except NotWeaklyIntegral as exc:
                    verdicts.append(ExclusionVerdict(name, False, False, str(exc)))
            try:
                verdicts.append(near_group_modular_test(data, table, tol))
            except NotNearGroup:
                pass
        report.exclusions = [
            {
                "test": v.test_name,
                "applicable": v.applicable,
                "excluded": v.excluded,
                "certificate": v.certificate,
            }
            for v in verdicts
        ]
    return report


def render_structured(report: AnalysisReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=1) + "\n"


def render_text(report: AnalysisReport) -> str:
    lines = [f"ring {report.name}  rank {report.rank}  scalars {report.scalar_kind}"]
    flags_on = [k for k, v in report.flags.items() if v]
    lines.append(f"flags: {', '.join(flags_on) if flags_on else 'none'}")
    if report.fp_dims is not None:
        lines.append(f"FP dims: {report.fp_dims}")
        lines.append(f"FPdim(H) = {report.fp_dim_total}  ({report.weak_integrality})")
    if report.codegrees is not None:
        lines.append(f"formal codegrees: {report.codegrees}")
    if report.dual is not None:
        d = report.dual
        lines.append(
            f"dual: RN={d['rn']} rational={d['rational']} h-integral={d['h_integral']} "
            f"orders {d['orders_hat']}"
        )
    if report.burnside is not None:
        b = report.burnside
        w1 = "" if b["burnside_witness"] is None else f" (witness {b['burnside_witness']})"
        w2 = "" if b["dual_witness"] is None else f" (witness {b['dual_witness']})"
        lines.append(
            f"Burnside: {b['is_burnside']}{w1}   dual-Burnside: {b['is_dual_burnside']}{w2}"
        )
        lines.append(
            f"grouplikes: {b['grouplike_elements']}   vanishing: {b['vanishing_elements']}"
        )
    if report.grading is not None:
        g = report.grading
        lines.append(
            f"adjoint: {g['adjoint']}   grading group order {g['group_order']} "
            f"invariants {g['invariant_factors']}"
        )
    if report.nilpotency_class is not None:
        lines.append(f"nilpotency class: {report.nilpotency_class}")
    elif report.grading is not None:
        lines.append("nilpotency class: not nilpotent")
    if report.galois is not None:
        lines.append(f"Galois orbits: {report.galois['orbits']}")
    for v in report.exclusions:
        mark = "EXCLUDED" if v["excluded"] else ("ok" if v["applicable"] else "n/a")
        lines.append(f"criterion {v['test']}: {mark} -- {v['certificate']}")
    if report.residuals:
        worst = max(report.residuals.values())
        lines.append(f"identity residuals: max {worst:.3e}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
