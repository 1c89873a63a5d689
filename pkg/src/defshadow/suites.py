"""Suite orchestration: resolve a target, run its checks, build a Report.

Targets are either built-in fixture names (``example-so41``, ``dfr-limit``)
or paths to ``.alg`` documents.  Every suite is deterministic for a given
seed; ``not-applicable`` results (structure the target does not carry) do
not fail a suite.
"""

from __future__ import annotations

import time
from pathlib import Path

from . import __version__
from .bicomplex import (
    c_i_cochain,
    check_bicomplex_axioms,
    check_normalization_preserved,
    check_total_cocycle,
    gamma_cochain,
    lambda_cochain,
)
from .crossed import (
    check_assemble_consistency,
    check_crossed_product,
    check_gamma_normalization,
    check_gamma_reality_equivariance,
    check_group_cocycle,
    check_lambda_relations,
    check_tau_homomorphism,
)
from .deformation import (
    bracket,
    check_center_structure,
    check_extraction_consistency,
    check_hochschild_cocycle,
    check_reality_c,
)
from .dsl import build_fixture, parse_document, print_document
from .models import (
    FIXTURE_BUILDERS,
    Fixture,
    check_casimir_facts,
    check_contraction_family,
    check_coordinate_cocycle_tensor,
    check_derivation_equivariance,
    check_lorentz_tau_compat,
    check_phase_law,
    check_poincare_group_law,
    check_poincare_relations,
    check_tau_first_order,
    get_fixture,
    standard_matrices,
)
from .reporting import CheckResult, Report, input_digest

SUITES = (
    "validate",
    "deformation",
    "center",
    "crossed",
    "bicomplex",
    "casimir",
    "poincare",
    "all",
)


class TargetError(ValueError):
    """The requested target is neither a fixture name nor a readable document."""


def resolve_target(target: str) -> Fixture:
    if target in FIXTURE_BUILDERS:
        return get_fixture(target)
    path = Path(target)
    if not path.exists():
        raise TargetError(
            f"target {target!r} is not a fixture name ({sorted(FIXTURE_BUILDERS)}) "
            "and no such file exists"
        )
    doc = parse_document(path.read_text(encoding="utf-8"))
    return build_fixture(doc, document_text=print_document(doc))


def _timed(results: list[CheckResult], out: list[CheckResult], t0: float) -> None:
    dt = (time.perf_counter() - t0) * 1000.0
    for r in results:
        r.elapsed_ms = dt / max(len(results), 1)
        out.append(r)


def suite_validate(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    out: list[CheckResult] = []
    t0 = time.perf_counter()
    bad = fix.family.check_involution_table()
    res = (
        CheckResult.failed("validate/involution-table", "", f"not involutive on {bad}")
        if bad
        else CheckResult.passed("validate/involution-table")
    )
    _timed([res], out, t0)

    t0 = time.perf_counter()
    report = fix.family.check_associativity(degree_bound=degree_bound, seed=seed)
    if report.ok:
        fix.family.validated = True
        gen = CheckResult.passed(
            "validate/associativity-generators", f"{report.generator_triples} triples"
        )
        rnd = CheckResult.passed(
            "validate/associativity-random", f"{report.random_triples} random triples"
        )
    else:
        f = report.failures[0]
        gen = CheckResult.failed(
            "validate/associativity-generators",
            fix.family.format(f.left - f.right),
            f"witness {f.triple}; {len(report.failures)} failing triples",
        )
        rnd = CheckResult.not_applicable(
            "validate/associativity-random", "skipped after generator-triple failure"
        )
    _timed([gen, rnd], out, t0)
    return out


def suite_deformation(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    out: list[CheckResult] = []
    alg = fix.family
    gens = [alg.gen(n) for n in alg.generator_names()]

    t0 = time.perf_counter()
    _timed([check_hochschild_cocycle(alg, gens)], out, t0)

    t0 = time.perf_counter()
    _timed([check_extraction_consistency(alg, seed=seed)], out, t0)

    t0 = time.perf_counter()
    hermitian = [alg.gen(g.name) for g in alg.generators if g.hermitian]
    _timed(check_reality_c(alg, hermitian), out, t0)

    t0 = time.perf_counter()
    if fix.expected_brackets:
        residual = ""
        bad = []
        for desc, f, g, want in fix.expected_brackets:
            got = bracket(f, g, alg)
            if got != want:
                bad.append(desc)
                residual = residual or alg.format(got - want)
        res = (
            CheckResult.failed("bracket/expected-values", residual, ", ".join(bad))
            if bad
            else CheckResult.passed(
                "bracket/expected-values", f"{len(fix.expected_brackets)} pairs"
            )
        )
    else:
        res = CheckResult.not_applicable("bracket/expected-values", "no table supplied")
    _timed([res], out, t0)
    return out


def suite_center(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    if not fix.center_candidates:
        return [CheckResult.not_applicable("center/structure", "no central candidates")]
    out: list[CheckResult] = []
    t0 = time.perf_counter()
    probes = fix.probes or [fix.family.gen(n) for n in fix.family.generator_names()]
    _timed(check_center_structure(fix.family, fix.center_candidates, probes), out, t0)
    return out


def suite_crossed(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    if fix.tau is None:
        return [CheckResult.not_applicable("crossed/suite", "no tau action supplied")]
    out: list[CheckResult] = []
    matrices = standard_matrices() if fix.lorentz is not None else None

    t0 = time.perf_counter()
    _timed(check_tau_homomorphism(fix.tau), out, t0)

    t0 = time.perf_counter()
    _timed(check_crossed_product(fix.tau, seed=seed), out, t0)

    data = fix.data
    if data is None or data.gamma is None:
        out.append(CheckResult.not_applicable("gamma/group-cocycle", "no gamma supplied"))
    else:
        t0 = time.perf_counter()
        _timed([check_gamma_normalization(data, fix.tau)], out, t0)
        t0 = time.perf_counter()
        _timed([check_group_cocycle(data, fix.tau)], out, t0)
        t0 = time.perf_counter()
        _timed(
            check_gamma_reality_equivariance(data, fix.tau, fix.lorentz, matrices),
            out,
            t0,
        )
    if data is None or not data.has_lambda():
        out.append(CheckResult.not_applicable("lambda/relations", "no lambda supplied"))
    else:
        t0 = time.perf_counter()
        _timed(check_lambda_relations(data, fix.tau, fix.lorentz, matrices), out, t0)
        t0 = time.perf_counter()
        _timed([check_assemble_consistency(data, fix.tau)], out, t0)

    t0 = time.perf_counter()
    _timed([check_lorentz_tau_compat(fix, matrices)], out, t0)
    t0 = time.perf_counter()
    _timed([check_tau_first_order(fix)], out, t0)
    return out


def suite_bicomplex(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    if fix.tau is None or fix.data is None:
        return [CheckResult.not_applicable("bicomplex/suite", "no cochain data supplied")]
    out: list[CheckResult] = []
    data, tau = fix.data, fix.tau
    inv_names = tau.algebra.generator_names()
    lam_names = data.lambda_domain

    samples = []
    mixed_pool = (lam_names + [n for n in inv_names if n not in lam_names])[:4]
    if data.gamma is not None:
        samples.append(("gamma", gamma_cochain(data, tau), mixed_pool))
    if data.has_lambda():
        samples.append(("lambda", lambda_cochain(data, tau), lam_names))
    if data.has_c_i():
        samples.append(("cI", c_i_cochain(data, tau), mixed_pool))
    if samples:
        t0 = time.perf_counter()
        _timed(check_bicomplex_axioms(samples), out, t0)
    t0 = time.perf_counter()
    _timed([check_normalization_preserved(data, tau)], out, t0)
    t0 = time.perf_counter()
    _timed(check_total_cocycle(data, tau, inv_names, lam_names or None), out, t0)
    return out


def suite_casimir(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    out: list[CheckResult] = []
    if fix.invariant_scalars or fix.casimir_elements:
        t0 = time.perf_counter()
        _timed(check_casimir_facts(fix), out, t0)
    else:
        out.append(CheckResult.not_applicable("casimir/facts", "no invariant scalars"))
    t0 = time.perf_counter()
    _timed(check_contraction_family(fix), out, t0)
    return out


def suite_poincare(fix: Fixture, seed: int, degree_bound: int) -> list[CheckResult]:
    if fix.lorentz is None or not fix.coordinates:
        return [
            CheckResult.not_applicable(
                "poincare/suite", "needs a Lorentz action and a coordinate family"
            )
        ]
    out: list[CheckResult] = []
    for fn in (
        lambda: [check_poincare_relations(fix, seed=seed)],
        lambda: [check_poincare_group_law(fix, seed=seed + 1)],
        lambda: [check_derivation_equivariance(fix)],
        lambda: [check_lorentz_tau_compat(fix)],
        lambda: [check_coordinate_cocycle_tensor(fix)],
        lambda: [check_phase_law(fix, seed=seed + 2)],
    ):
        t0 = time.perf_counter()
        _timed(fn(), out, t0)
    return out


_SUITE_FUNCTIONS = {
    "validate": suite_validate,
    "deformation": suite_deformation,
    "center": suite_center,
    "crossed": suite_crossed,
    "bicomplex": suite_bicomplex,
    "casimir": suite_casimir,
    "poincare": suite_poincare,
}


def run_suite(
    target: str, suite: str, seed: int = 0, degree_bound: int = 3
) -> Report:
    """Run one named suite (or 'all') against a fixture name or document."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    fixture = resolve_target(target)
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    checks: list[CheckResult] = []
    for name in names:
        checks.extend(_SUITE_FUNCTIONS[name](fixture, seed, degree_bound))
    return Report(
        suite=suite,
        target=fixture.name,
        engine_version=__version__,
        input_digest=input_digest(__version__, fixture.target_key, suite, seed, degree_bound),
        checks=checks,
    )
