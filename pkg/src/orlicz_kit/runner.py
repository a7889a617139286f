"""Dispatch a validated RunConfig to the module operations.

Exit-status contract: 0 for computations and passing verdicts, 1 for failing
verdicts (failed certification, refuted condition, failed reproduction),
2 for errors (which are reported as diagnostics, not tracebacks).
"""

from __future__ import annotations

import math
import os

from .composition import (
    BlockFamily,
    DyadicIntervalFamily,
    OrliczInverseMap,
    RandomSubsetFamily,
    certify_min_D,
    check_volume_condition,
    counterexample_suite,
    require_power_equivalence_gate,
)
from .config import (
    RunConfig,
    function_from_config,
    parse_config,
    space_from_config,
    tau_from_config,
    young_from_config,
)
from .errors import OrliczKitError
from .norms import QuadratureSettings, lorentz_quasinorm_result, luxemburg_norm_result
from .reports import CsvTable, ReportEnvelope
from .reproduce import TARGETS, run_all_targets, run_target
from .young import check_nabla2, complementary, validate_young

__all__ = ["run", "run_document"]


def _thread_cap_diagnostics(envelope: ReportEnvelope) -> None:
    raw = os.environ.get("ORLICZ_KIT_THREADS")
    if raw is None:
        return
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        raise OrliczKitError(
            f"ORLICZ_KIT_THREADS must be a positive integer, got {raw!r}") from None
    envelope.add_diagnostic(
        "info", f"thread cap {cap}: computations run sequentially, cap honored")


def run(config: RunConfig) -> ReportEnvelope:
    """Execute the configured command and assemble the report envelope."""
    envelope = ReportEnvelope(config_echo=config.to_document(), results={})
    try:
        _thread_cap_diagnostics(envelope)
        envelope.exit_code = _dispatch(config, envelope)
    except OrliczKitError as exc:
        envelope.add_diagnostic("error", str(exc))
        envelope.exit_code = 2
    return envelope


def run_document(doc: dict) -> ReportEnvelope:
    return run(parse_config(doc))


def _dispatch(config: RunConfig, envelope: ReportEnvelope) -> int:
    payload = config.payload
    command = config.command

    if command == "young-validate":
        phi = young_from_config(payload["phi"])
        report = validate_young(phi)
        envelope.results = report.to_dict()
        return 0 if report.passed else 1

    if command == "young-complementary":
        phi = young_from_config(payload["phi"])
        ts = payload["t"]
        ts = ts if isinstance(ts, list) else [ts]
        envelope.results = {
            "values": [{"t": float(t), "conjugate": complementary(phi, float(t))}
                       for t in ts]}
        return 0

    if command == "young-nabla2":
        phi = young_from_config(payload["phi"])
        report = check_nabla2(phi)
        envelope.results = report.to_dict()
        return 0 if report.holds else 1

    if command == "norm-orlicz":
        phi = young_from_config(payload["phi"])
        f = function_from_config(payload["f"])
        space = space_from_config(payload["space"])
        res = luxemburg_norm_result(phi, f, space, QuadratureSettings())
        envelope.results = res.to_dict()
        return 0

    if command == "norm-lorentz":
        p = float(payload["p"])
        q = payload["q"]
        q = math.inf if isinstance(q, str) else float(q)
        f = function_from_config(payload["f"])
        space = space_from_config(payload["space"])
        res = lorentz_quasinorm_result(p, q, f, space, QuadratureSettings())
        envelope.results = res.to_dict()
        return 0

    if command == "certify":
        return _run_certify(config, envelope)

    if command == "demo":
        kind = payload["kind"]
        p = float(payload["p"])
        q = payload.get("q")
        q = float(q) if q is not None and not isinstance(q, str) else (
            math.inf if isinstance(q, str) else None)
        evidence = counterexample_suite(kind, p, q)
        envelope.results = evidence.to_dict()
        rows = [{"R": r, "truncated_value": v} for r, v in evidence.ladder]
        envelope.tables.append(
            CsvTable("ladder", ("R", "truncated_value"), lambda: rows))
        return 0 if evidence.passed else 1

    if command == "reproduce-paper":
        target = payload.get("target", "all")
        if target == "all":
            results, tables, passed = run_all_targets(config.seed)
        else:
            res, tables, passed = run_target(target, config.seed)
            results = {target: {"passed": passed, "results": res}}
        envelope.results = results
        envelope.tables.extend(tables)
        for name, entry in results.items():
            envelope.add_diagnostic(
                "info", f"{name}: {'pass' if entry['passed'] else 'FAIL'}")
        return 0 if passed else 1

    raise OrliczKitError(f"unhandled command {command!r}")


def _run_certify(config: RunConfig, envelope: ReportEnvelope) -> int:
    payload = config.payload
    tau = tau_from_config(payload["tau"])
    phi = young_from_config(payload["phi"])
    p = float(payload["p"])
    include_zero = bool(payload.get("include_zero", False))
    family_name = payload.get("family", "blocks")
    n_max = payload.get("n_max", 1000)
    if family_name == "blocks":
        family = BlockFamily(n_max, include_zero)
    elif family_name == "random":
        family = RandomSubsetFamily(config.seed, include_zero=include_zero)
    else:
        family = DyadicIntervalFamily()

    if isinstance(tau, OrliczInverseMap):
        require_power_equivalence_gate(tau)

    d = payload.get("d")
    if d is not None:
        report = check_volume_condition(tau, phi, p, float(d), family)
    else:
        report = certify_min_D(tau, phi, p, family)
    envelope.results = report.to_dict()
    envelope.tables.append(CsvTable(
        "margins", ("set_id", "mu_E", "nu_preimage", "rhs", "ratio"),
        lambda: report.rows()))
    return 0 if report.passed else 1
