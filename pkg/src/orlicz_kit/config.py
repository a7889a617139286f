"""Configuration grammar: one JSON document schema shared by every command.

Specs for Young functions, sets, functions, spaces, and maps are parsed here
with range validation and field-path error reporting, and every constructed
object can be serialized back (``describe()``) so that report envelopes echo
a config that reparses to the same run.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .composition import (
    FiniteRestrictionMap,
    GaussPowerMap,
    IdentityMap,
    LogFloorMap,
    OrliczInverseMap,
    TauMap,
)
from .errors import ConfigError
from .measure import (
    COUNTING_INTEGERS,
    LEBESGUE_LINE,
    FunctionSpec,
    IndicatorFunction,
    IntegerSet,
    IntervalSet,
    MeasurableSet,
    MeasureSpace,
    PowerLogDecay,
    RadialPower,
    SimpleFunction,
    counting_finite,
)
from .young import (
    ExpMinusOneYoung,
    LLogLYoung,
    LinearYoung,
    PowerComposedYoung,
    PowerYoung,
    TabulatedYoung,
    YoungFunction,
)

__all__ = [
    "RunConfig",
    "parse_config",
    "parse_config_text",
    "young_from_config",
    "space_from_config",
    "set_from_config",
    "function_from_config",
    "tau_from_config",
    "COMMANDS",
]

COMMANDS = (
    "young-validate",
    "young-complementary",
    "young-nabla2",
    "norm-orlicz",
    "norm-lorentz",
    "certify",
    "demo",
    "reproduce-paper",
)


def _need(doc: dict, key: str, path: str) -> Any:
    if key not in doc:
        raise ConfigError(f"{path}.{key}" if path else key, "missing required field")
    return doc[key]


def _positive(value, path: str) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ConfigError(path, f"expected a number, got {value!r}") from None
    if not (v > 0.0 and math.isfinite(v)):
        raise ConfigError(path, f"must be a positive finite number, got {value!r}")
    return v


def young_from_config(doc: Any, path: str = "phi") -> YoungFunction:
    if not isinstance(doc, dict):
        raise ConfigError(path, f"expected an object, got {doc!r}")
    family = _need(doc, "family", path)
    cap = doc.get("domain_cap")
    cap = _positive(cap, f"{path}.domain_cap") if cap is not None else None
    if family == "power":
        return PowerYoung(_positive(_need(doc, "p", path), f"{path}.p"), cap)
    if family == "llogl":
        return LLogLYoung(cap)
    if family == "exp_minus_one":
        return ExpMinusOneYoung(cap)
    if family == "linear":
        return LinearYoung(cap)
    if family == "power_composed":
        base = young_from_config(_need(doc, "base", path), f"{path}.base")
        return PowerComposedYoung(base, _positive(_need(doc, "q", path), f"{path}.q"), cap)
    if family == "tabulated":
        knots = _need(doc, "knots", path)
        if not isinstance(knots, list) or not all(
                isinstance(k, (list, tuple)) and len(k) == 2 for k in knots):
            raise ConfigError(f"{path}.knots", "expected a list of [t, value] pairs")
        try:
            return TabulatedYoung([(float(a), float(b)) for a, b in knots], cap)
        except Exception as exc:
            raise ConfigError(f"{path}.knots", str(exc)) from None
    raise ConfigError(f"{path}.family", f"unknown Young-function family {family!r}")


def space_from_config(doc: Any, path: str = "space") -> MeasureSpace:
    if isinstance(doc, str):
        if doc == "lebesgue_line":
            return LEBESGUE_LINE
        if doc == "counting_integers":
            return COUNTING_INTEGERS
        raise ConfigError(path, f"unknown space {doc!r}")
    if isinstance(doc, dict):
        kind = _need(doc, "kind", path)
        if kind == "counting_finite":
            size = _need(doc, "size", path)
            if not isinstance(size, int) or size < 1:
                raise ConfigError(f"{path}.size", "must be a positive integer")
            return counting_finite(size)
        return space_from_config(kind, path)
    raise ConfigError(path, f"expected a space name or object, got {doc!r}")


def set_from_config(doc: Any, path: str = "set") -> MeasurableSet:
    if not isinstance(doc, dict):
        raise ConfigError(path, f"expected an object, got {doc!r}")
    if "intervals" in doc:
        try:
            return IntervalSet([(float(a), float(b)) for a, b in doc["intervals"]])
        except ConfigError:
            raise
        except Exception as exc:
            raise ConfigError(f"{path}.intervals", str(exc)) from None
    if "integers" in doc:
        try:
            return IntegerSet([int(n) for n in doc["integers"]])
        except Exception as exc:
            raise ConfigError(f"{path}.integers", str(exc)) from None
    raise ConfigError(path, "expected either 'intervals' or 'integers'")


def function_from_config(doc: Any, path: str = "f") -> FunctionSpec:
    if not isinstance(doc, dict):
        raise ConfigError(path, f"expected an object, got {doc!r}")
    family = _need(doc, "family", path)
    if family == "power_log_decay":
        return PowerLogDecay(_positive(_need(doc, "p", path), f"{path}.p"),
                             _positive(_need(doc, "r", path), f"{path}.r"))
    if family == "indicator":
        return IndicatorFunction(set_from_config(_need(doc, "set", path), f"{path}.set"))
    if family == "simple":
        pieces = _need(doc, "pieces", path)
        if not isinstance(pieces, list):
            raise ConfigError(f"{path}.pieces", "expected a list of [set, value] pairs")
        parsed = []
        for i, item in enumerate(pieces):
            if not (isinstance(item, (list, tuple)) and len(item) == 2):
                raise ConfigError(f"{path}.pieces[{i}]", "expected [set, value]")
            parsed.append((set_from_config(item[0], f"{path}.pieces[{i}]"),
                           float(item[1])))
        try:
            return SimpleFunction(parsed)
        except Exception as exc:
            raise ConfigError(f"{path}.pieces", str(exc)) from None
    if family == "radial_power":
        return RadialPower(_positive(_need(doc, "gamma", path), f"{path}.gamma"),
                           _positive(_need(doc, "radius", path), f"{path}.radius"))
    raise ConfigError(f"{path}.family", f"unknown function family {family!r}")


def tau_from_config(doc: Any, path: str = "tau") -> TauMap:
    if not isinstance(doc, dict):
        raise ConfigError(path, f"expected an object, got {doc!r}")
    name = _need(doc, "map", path)
    if name == "identity":
        return IdentityMap()
    if name == "gauss_power":
        return GaussPowerMap(_positive(_need(doc, "p", path), f"{path}.p"),
                             _positive(_need(doc, "q", path), f"{path}.q"))
    if name == "orlicz_inverse":
        phi = young_from_config(_need(doc, "phi", path), f"{path}.phi")
        p = _positive(_need(doc, "p", path), f"{path}.p")
        if p < 1.0:
            raise ConfigError(f"{path}.p", "orlicz_inverse requires p >= 1")
        return OrliczInverseMap(phi, p)
    if name == "log_map":
        p = _positive(_need(doc, "p", path), f"{path}.p")
        if p < 1.0:
            raise ConfigError(f"{path}.p", "log_map requires p >= 1")
        return LogFloorMap(p)
    if name == "finite_restriction":
        base = tau_from_config(_need(doc, "base", path), f"{path}.base")
        k = _need(doc, "k", path)
        if not isinstance(k, int) or k < 1:
            raise ConfigError(f"{path}.k", "must be a positive integer")
        return FiniteRestrictionMap(base, k)
    raise ConfigError(f"{path}.map", f"unknown map {name!r}")


@dataclass(frozen=True)
class RunConfig:
    """A fully validated run: command plus its validated payload document.

    The payload keeps the raw (validated) JSON fields so the envelope's
    config echo round-trips bit-for-bit; objects are rebuilt on demand.
    """

    command: str
    payload: dict
    output_path: str | None = None
    format: str = "structured-document"
    seed: int = 42

    def to_document(self) -> dict:
        doc = {"command": self.command, **self.payload}
        if self.output_path is not None:
            doc["output"] = self.output_path
        doc["format"] = self.format
        doc["seed"] = self.seed
        return doc


_LORENTZ_Q_INF = ("inf", "infinity", "oo")


def _parse_q(value, path: str) -> float:
    if isinstance(value, str) and value.lower() in _LORENTZ_Q_INF:
        return math.inf
    return _positive(value, path)


def parse_config(doc: dict) -> RunConfig:
    """Validate a configuration document into a RunConfig."""
    if not isinstance(doc, dict):
        raise ConfigError("", f"configuration must be an object, got {doc!r}")
    command = _need(doc, "command", "")
    if command not in COMMANDS:
        raise ConfigError("command", f"unknown command {command!r}")

    payload = {k: v for k, v in doc.items()
               if k not in ("command", "output", "format", "seed")}
    fmt = doc.get("format", "structured-document")
    if fmt not in ("structured-document", "csv", "both"):
        raise ConfigError("format", f"unknown format {fmt!r}")
    seed = doc.get("seed", 42)
    if not isinstance(seed, int) or seed < 0 or seed >= 2 ** 64:
        raise ConfigError("seed", "must be an unsigned 64-bit integer")

    # command-specific validation (constructs everything once, then discards)
    if command in ("young-validate", "young-complementary", "young-nabla2"):
        young_from_config(_need(payload, "phi", ""))
        if command == "young-complementary":
            ts = _need(payload, "t", "")
            for i, t in enumerate(ts if isinstance(ts, list) else [ts]):
                if float(t) < 0.0:
                    raise ConfigError(f"t[{i}]", "conjugate arguments must be >= 0")
    elif command == "norm-orlicz":
        young_from_config(_need(payload, "phi", ""))
        function_from_config(_need(payload, "f", ""))
        space_from_config(_need(payload, "space", ""))
    elif command == "norm-lorentz":
        _positive(_need(payload, "p", ""), "p")
        _parse_q(_need(payload, "q", ""), "q")
        function_from_config(_need(payload, "f", ""))
        space_from_config(_need(payload, "space", ""))
    elif command == "certify":
        tau_from_config(_need(payload, "tau", ""))
        young_from_config(_need(payload, "phi", ""))
        _positive(_need(payload, "p", ""), "p")
        if "d" in payload and payload["d"] is not None:
            d = _positive(payload["d"], "d")
            if d < 1.0:
                raise ConfigError("d", f"the volume condition requires D >= 1, got {d}")
        family = payload.get("family", "blocks")
        if family not in ("blocks", "random", "dyadic"):
            raise ConfigError("family", f"unknown family {family!r}")
        n_max = payload.get("n_max", 1000)
        if not isinstance(n_max, int) or n_max < 2:
            raise ConfigError("n_max", "must be an integer >= 2")
    elif command == "demo":
        topic = payload.get("topic", "counterexample")
        if topic != "counterexample":
            raise ConfigError("topic", f"unknown demo topic {topic!r}")
        kind = _need(payload, "kind", "")
        if kind not in ("ex1", "ex2_3"):
            raise ConfigError("kind", f"unknown counterexample kind {kind!r}")
        _positive(_need(payload, "p", ""), "p")
        if kind == "ex2_3":
            _parse_q(_need(payload, "q", ""), "q")
    elif command == "reproduce-paper":
        target = payload.get("target", "all")
        from .reproduce import TARGETS

        if target != "all" and target not in TARGETS:
            raise ConfigError("target", f"unknown reproduction target {target!r}")

    return RunConfig(command=command, payload=payload,
                     output_path=doc.get("output"), format=fmt, seed=seed)


def parse_config_text(text: str) -> RunConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"invalid JSON: {exc}") from None
    return parse_config(doc)
