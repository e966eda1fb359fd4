"""End-to-end pipeline: manifest -> instance -> checks -> report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import FAIL, PASS, SKIPPED, Check, CheckReport, entrywise, equal
from .classification import (
    NONE,
    EinsteinLikeFit,
    check_curvature_identities,
    check_eta_einstein_constants,
    check_rho_star,
    check_ricci_operator_identities,
    fit_einstein_like,
    is_para_sasaki_like,
)
from .curvature import Connection, CurvatureData, curvature, sectional
from .exact import frac, zeros
from .lie import ChartFrame, LieFrameError, StructureConstants, frame_commutators, validate_lie_algebra
from .manifest import Manifest, golden_manifest
from .report import Report, to_jsonable
from .ring import RingError, evaluate, parse
from .soliton import (
    SolitonFit,
    VectorField,
    lie_derivative_metric,
    nabla_vector_field,
    solve_soliton_constants,
    verify_ricci_form_and_sections,
    verify_ricci_lie_derivative,
    verify_soliton_potential,
)
from .structure import PiStructure, StructureError, associated_metric, verify_axioms

__all__ = ["InputError", "Instance", "build_instance", "validate", "analyze", "paper_check", "Analysis"]

NOTE_TAU_ASSOC = (
    "tau~ is the trace of rho against the inverse of g~; the full g~-contraction "
    "g~^{il} g~^{jk} R_ijkl is reported separately as tau_assoc_full"
)
NOTE_TAU_SIGN = "the Lie-derivative checks use tau = -2n (a '+2n' variant is not consistent with them)"
NOTE_RHO_STAR = (
    "rho* check uses rho*(y,z) = rho(y,phi z) - (2n-1) g(y,phi z), the contraction of the "
    "R(x,y,phi z,w) - R(x,y,z,phi w) identity; the '+(2n-1)' variant is reported under sign variants"
)
NOTE_NQXI = (
    "(D_x Q) xi check uses -Q phi x - 2n phi x, forced by Q xi = -2n xi and D xi = phi; "
    "the '+2n phi x' variant is reported under sign variants"
)
NOTE_E0 = (
    "the reference bracket table names e0; it is read as e3 (= xi) and the brackets are "
    "recomputed from the chart frame rather than copied"
)


class InputError(ValueError):
    """Manifest content that cannot be turned into an instance."""


@dataclass
class Instance:
    manifest: Manifest
    sc: StructureConstants
    cf: ChartFrame | None
    ps: PiStructure

    @property
    def parameters(self):
        return tuple(self.manifest.parameters)


def build_instance(manifest: Manifest) -> Instance:
    try:
        cf = None
        if manifest.chart_frame is not None:
            cf = ChartFrame(manifest.chart_frame, parameters=manifest.parameters)
            sc = frame_commutators(cf)
        else:
            sc = StructureConstants.from_brackets(manifest.dim, manifest.structure_constants)
        ps = PiStructure(phi=manifest.phi, xi=manifest.xi, g=manifest.g, eta=manifest.eta)
    except (LieFrameError, RingError, StructureError, ValueError) as exc:
        raise InputError(str(exc)) from None
    return Instance(manifest, sc, cf, ps)


def _structure_sections(inst: Instance):
    lie = validate_lie_algebra(inst.sc)
    lie_checks = [
        Check(
            "antisymmetry c_ij^k = -c_ji^k",
            PASS if not lie.antisymmetry_violations else FAIL,
            [f"violated at {v}" for v in lie.antisymmetry_violations[:8]],
        ),
        Check(
            "Jacobi identity",
            PASS if not lie.jacobi_violations else FAIL,
            [f"violated at {v}" for v in lie.jacobi_violations[:8]],
        ),
    ]
    axioms = verify_axioms(inst.ps)
    ax_checks = [Check(name, PASS if ok else FAIL) for name, ok in axioms.results.items()]
    ga, sig = inst.ps.g_assoc, None
    if axioms.passed:
        try:
            ga, sig = associated_metric(inst.ps)
            ax_checks.append(Check("g~ signature (n+1, n)", PASS, [f"{sig}"]))
        except StructureError as exc:
            ax_checks.append(Check("g~ signature (n+1, n)", FAIL, [str(exc)]))
    else:
        ax_checks.append(Check("g~ signature (n+1, n)", SKIPPED, ["structure axioms failed"]))
    return CheckReport("Lie algebra", lie_checks), CheckReport("structure axioms", ax_checks), ga, sig


def validate(manifest: Manifest) -> Report:
    inst = build_instance(manifest)
    report = Report("validate", manifest=manifest.name)
    lie, axioms, ga, sig = _structure_sections(inst)
    report.add(lie)
    report.add(axioms)
    report.data["structure_constants"] = inst.sc.to_triples()
    report.data["g_assoc"] = to_jsonable(ga)
    if sig:
        report.data["g_assoc_signature"] = list(sig)
    return report


@dataclass
class Analysis:
    """Everything computed for one instance (for programmatic use)."""

    instance: Instance
    report: Report
    conn: Connection | None = None
    cd: CurvatureData | None = None
    sasaki: CheckReport | None = None
    einstein: EinsteinLikeFit | None = None
    potential: VectorField | None = None
    soliton: SolitonFit | None = None
    Lvg: np.ndarray | None = None
    nabla_v: np.ndarray | None = None


def run(manifest: Manifest, seed: int = 0, debug_assignment: dict | None = None) -> Analysis:
    inst = build_instance(manifest)
    ps = inst.ps
    report = Report("analyze", manifest=manifest.name, seed=seed)
    lie, axioms, ga, sig = _structure_sections(inst)
    report.add(lie)
    report.add(axioms)
    out = Analysis(inst, report)
    report.data["structure_constants"] = inst.sc.to_triples()
    if not (lie.passed and axioms.passed):
        report.notes.append("curvature pipeline not run: structure validation failed")
        return out

    conn, cd = curvature(inst.sc, ps.g, ga, ps.phi)
    out.conn, out.cd = conn, cd
    report.add(_structural_properties(inst, conn, cd))

    sasaki = is_para_sasaki_like(ps, conn, cd)
    out.sasaki = sasaki
    report.add(sasaki)
    einstein = fit_einstein_like(cd.rho, ps.g, ga, ps.eta)
    out.einstein = einstein
    report.add(
        CheckReport(
            "Einstein-like fit",
            [Check("rho = a g + b g~ + c eta (x) eta", PASS if einstein.kind != NONE else FAIL, [f"kind: {einstein.kind}"])],
        )
    )
    if sasaki.passed:
        report.add(check_curvature_identities(ps, cd))
        report.add(check_ricci_operator_identities(ps, conn, cd, sasaki))
        report.add(check_eta_einstein_constants(einstein, cd.tau, cd.tau_assoc, ps.n))
        report.add(_sign_variants(inst, conn, cd, sasaki))
        report.notes.extend([NOTE_RHO_STAR, NOTE_NQXI])

    report.data.update(_curvature_data(inst, conn, cd, ga, sig, einstein))
    report.notes.append(NOTE_TAU_ASSOC)

    if manifest.potential is not None:
        _soliton_part(out, seed)
        report.notes.append(NOTE_TAU_SIGN)
    if manifest.expected:
        report.add(_expected_section(out))
    if debug_assignment is not None:
        report.debug = _debug_eval(out, debug_assignment)
    return out


def analyze(manifest: Manifest, seed: int = 0, debug_assignment: dict | None = None) -> Report:
    return run(manifest, seed, debug_assignment).report


def _structural_properties(inst: Instance, conn: Connection, cd: CurvatureData) -> CheckReport:
    from .properties import structural_checks

    return CheckReport("connection and curvature structure", structural_checks(inst.sc, inst.ps.g, conn, cd))


def _sign_variants(inst, conn, cd, sasaki) -> CheckReport:
    """Opposite-sign variants, reported without affecting the verdict."""
    rho_star = check_rho_star(inst.ps, cd, sign=+1)
    ricci = check_ricci_operator_identities(inst.ps, conn, cd, sasaki, sign=+1).checks[0]
    checks = []
    for c in (rho_star, ricci):
        state = "holds" if c.ok else "does not hold"
        checks.append(Check(f"variant {c.name}", SKIPPED, [f"informational: {state}"] + c.details))
    return CheckReport("sign variants (informational)", checks)


def _curvature_data(inst, conn, cd, ga, sig, einstein) -> dict:
    d = inst.ps.dim
    gamma = [
        [i + 1, j + 1, k + 1, str(conn.Gamma[i, j, k])]
        for i in range(d)
        for j in range(d)
        for k in range(d)
        if conn.Gamma[i, j, k]
    ]
    # independent components listed as R_ijlk with i < j, l > k, (i, j) <= (k, l)
    curv = [
        [i + 1, j + 1, l + 1, k + 1, str(cd.R[i, j, l, k])]
        for i, j, k, l in np.ndindex(cd.R.shape)
        if cd.R[i, j, l, k] and i < j and k < l and (i, j) <= (k, l)
    ]
    sec = [
        [i + 1, j + 1, str(sectional(cd, inst.ps.g, _unit(d, i), _unit(d, j)))]
        for i in range(d)
        for j in range(i + 1, d)
    ]
    return {
        "g_assoc": to_jsonable(ga),
        "g_assoc_signature": list(sig),
        "connection": gamma,
        "curvature": curv,
        "rho": to_jsonable(cd.rho),
        "rho_star": to_jsonable(cd.rho_star),
        "ricci_operator": to_jsonable(cd.Q),
        "tau": str(cd.tau),
        "tau_assoc": str(cd.tau_assoc),
        "tau_assoc_full": str(cd.tau_assoc_full),
        "sectional": sec,
        "einstein_like": {
            "kind": einstein.kind,
            "a": to_jsonable(einstein.a),
            "b": to_jsonable(einstein.b),
            "c": to_jsonable(einstein.c),
        },
    }


def _unit(d, i):
    v = [Fraction(0)] * d
    v[i] = Fraction(1)
    return v


def _soliton_part(out: Analysis, seed: int) -> None:
    inst, report = out.instance, out.report
    ps, conn, cd = inst.ps, out.conn, out.cd
    m = inst.manifest
    coords = inst.cf.dim if inst.cf is not None else 0
    try:
        v = VectorField(m.potential, coordinates=coords, parameters=m.parameters)
    except RingError as exc:
        raise InputError(f"field 'potential': {exc}") from None
    if inst.cf is None and not v.is_constant():
        raise InputError("field 'potential': coordinate-dependent potential needs a chart_frame")
    out.potential = v
    out.nabla_v = nabla_vector_field(conn, inst.cf, v)
    out.Lvg = lie_derivative_metric(conn, inst.cf, v, ps.g)
    fit = solve_soliton_constants(cd.rho, out.Lvg, ps.g, ps.g_assoc, ps.eta)
    out.soliton = fit
    if not fit.consistent:
        status, detail = FAIL, "no exact solution"
    elif not fit.constant:
        status, detail = FAIL, "no constant soliton: solution depends on coordinates"
    else:
        status, detail = PASS, f"(lambda, mu, nu) = ({fit.lambda_}, {fit.mu}, {fit.nu})"
    report.add(CheckReport("soliton fit", [Check("rho = -1/2 L_v g - lambda g - mu g~ - nu eta (x) eta", status, [detail])]))
    sasaki_ok = bool(out.sasaki and out.sasaki.passed)
    if sasaki_ok:
        report.add(verify_soliton_potential(fit, ps, conn, inst.cf, v))
        report.add(verify_ricci_lie_derivative(fit, ps, conn, inst.cf, v, cd))
    report.add(verify_ricci_form_and_sections(ps, cd, out.einstein, fit, sasaki_ok, seed=seed))
    report.data["potential"] = [str(c) for c in v.coeffs]
    report.data["nabla_potential"] = to_jsonable(out.nabla_v)
    report.data["lie_derivative_metric"] = to_jsonable(out.Lvg)
    report.data["soliton"] = {
        "consistent": fit.consistent,
        "constant": fit.constant,
        "lambda": str(fit.lambda_),
        "mu": str(fit.mu),
        "nu": str(fit.nu),
    }


# expected-value comparisons -------------------------------------------------


def _expr(value, inst: Instance):
    coords = inst.cf.dim if inst.cf is not None else 0
    return parse(value if not isinstance(value, (int, Fraction)) else Fraction(value), coordinates=coords, parameters=inst.parameters)


def _expected_section(out: Analysis) -> CheckReport:
    inst = out.instance
    exp = inst.manifest.expected
    d = inst.ps.dim
    checks = []
    cd, conn = out.cd, out.conn
    try:
        if "structure_constants" in exp:
            want = StructureConstants.from_brackets(d, exp["structure_constants"])
            checks.append(entrywise("brackets [e_i, e_j] = c_ij^k e_k", inst.sc.c, want.c))
        if "connection" in exp:
            want = zeros((d, d, d))
            for i, j, k, val in exp["connection"]:
                want[i - 1, j - 1, k - 1] = frac(val)
            checks.append(entrywise("connection D_{e_i} e_j = Gamma_ij^k e_k", conn.Gamma, want))
        if "curvature" in exp:
            checks.append(entrywise("curvature R_ijkl (all 81 components)", cd.R, _curvature_from_independent(d, exp["curvature"])))
        if "rho" in exp:
            checks.append(entrywise("Ricci tensor rho_ij", cd.rho, np.array([[frac(x) for x in row] for row in exp["rho"]], dtype=object)))
        if "tau" in exp:
            checks.append(equal("scalar curvature tau", cd.tau, frac(exp["tau"])))
        if "tau_assoc" in exp:
            checks.append(equal("associated scalar curvature tau~", cd.tau_assoc, frac(exp["tau_assoc"])))
        if "sectional" in exp:
            for i, j, val in exp["sectional"]:
                k = sectional(cd, inst.ps.g, _unit(d, i - 1), _unit(d, j - 1))
                checks.append(equal(f"sectional curvature k_{i}{j}", k, frac(val)))
        if "einstein_like" in exp:
            got = out.einstein.constants if out.einstein.kind != NONE else None
            checks.append(equal("Einstein-like constants (a, b, c)", got, tuple(frac(x) for x in exp["einstein_like"])))
        if "nabla_potential" in exp:
            checks.append(_expr_matrix_check("D_{e_i} v components", out.nabla_v, exp["nabla_potential"], inst))
        if "lie_derivative_metric" in exp:
            checks.append(_expr_matrix_check("(L_v g)_ij components", out.Lvg, exp["lie_derivative_metric"], inst))
        if "soliton" in exp:
            fit = out.soliton
            got = fit.constants if fit is not None else None
            want = tuple(_expr(x, inst) for x in exp["soliton"])
            checks.append(equal("soliton constants (lambda, mu, nu)", got, want))
    except (RingError, ValueError, TypeError) as exc:
        raise InputError(f"field 'expected': {exc}") from None
    return CheckReport("expected values", checks)


def _expr_matrix_check(name, got, want, inst):
    if got is None:
        return Check(name, FAIL, ["not computed (no potential)"])
    want = np.array([[_expr(x, inst) for x in row] for row in want], dtype=object)
    return entrywise(name, got, want)


def _curvature_from_independent(d, entries):
    R = zeros((d, d, d, d))
    for i, j, k, l, val in entries:
        i, j, k, l, val = i - 1, j - 1, k - 1, l - 1, frac(val)
        for (a, b, c, e), s in (
            ((i, j, k, l), 1),
            ((j, i, k, l), -1),
            ((i, j, l, k), -1),
            ((j, i, l, k), 1),
            ((k, l, i, j), 1),
            ((l, k, i, j), -1),
            ((k, l, j, i), -1),
            ((l, k, j, i), 1),
        ):
            R[a, b, c, e] = s * val
    return R


def _debug_eval(out: Analysis, assignment: dict) -> dict:
    result = {}
    try:
        if out.soliton is not None:
            for name, val in zip(("lambda", "mu", "nu"), out.soliton.constants):
                result[f"soliton.{name}"] = mpstr(evaluate(val, assignment))
        if out.nabla_v is not None:
            result["nabla_potential"] = [[mpstr(evaluate(x, assignment)) for x in row] for row in out.nabla_v]
        if out.potential is not None:
            result["potential"] = [mpstr(evaluate(x, assignment)) for x in out.potential.coeffs]
    except RingError as exc:
        result["error"] = str(exc)
    return result


def mpstr(x) -> str:
    import mpmath

    return mpmath.nstr(x, 15)


# golden regression ------------------------------------------------------------


def paper_check(seed: int = 0) -> Report:
    """Run the built-in reference instance and compare every reference value."""
    manifest = golden_manifest()
    result = run(manifest, seed=seed)
    src = result.report
    report = Report("paper-check", manifest=manifest.name, seed=seed)
    golden = next(s for s in src.sections if s.title == "expected values")
    report.sections.append(golden)
    for s in src.sections:
        if s.title in ("soliton constants and potential", "Lie derivative of the Ricci tensor", "Ricci form and special sections"):
            report.sections.append(s)
    report.data = {k: src.data[k] for k in ("structure_constants", "connection", "curvature", "rho", "tau", "tau_assoc", "tau_assoc_full", "sectional", "einstein_like", "soliton") if k in src.data}
    report.notes = [NOTE_E0, NOTE_TAU_ASSOC, NOTE_TAU_SIGN, NOTE_RHO_STAR, NOTE_NQXI]
    return report
