"""Command-line entry point: ``orlicz-kit <command> [--config <path>] [flags]``.

Inline flags override fields of the configuration document.  Output goes to
--output (or standard output) as a structured JSON document, CSV tables, or
both.  The two-word spellings ``norm orlicz`` / ``norm lorentz`` are accepted
as aliases for the hyphenated commands.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import parse_config
from .errors import ConfigError, OrliczKitError
from .runner import run

__all__ = ["main", "build_parser"]


def _json_value(text: str):
    """Parse a flag value: JSON document, @file reference, or bare string."""
    if text.startswith("@"):
        return json.loads(Path(text[1:]).read_text(encoding="utf-8"))
    stripped = text.strip()
    if stripped[:1] in ("{", "["):
        return json.loads(stripped)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orlicz-kit",
        description="Orlicz/Lorentz norms, Young-function calculus, and "
                    "composition-operator certification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--config", type=Path, help="JSON configuration document")
        p.add_argument("--output", type=str, help="output path (default stdout)")
        p.add_argument("--format", choices=["structured-document", "csv", "both"])
        p.add_argument("--seed", type=int)

    for name in ("young-validate", "young-nabla2"):
        p = sub.add_parser(name)
        p.add_argument("--phi", type=str, help="Young-function spec (JSON)")
        common(p)

    p = sub.add_parser("young-complementary")
    p.add_argument("--phi", type=str)
    p.add_argument("--t", type=str, help="argument or JSON list of arguments")
    common(p)

    p = sub.add_parser("norm-orlicz")
    p.add_argument("--phi", type=str)
    p.add_argument("--f", type=str)
    p.add_argument("--space", type=str)
    common(p)

    p = sub.add_parser("norm-lorentz")
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=str)
    p.add_argument("--f", type=str)
    p.add_argument("--space", type=str)
    common(p)

    p = sub.add_parser("certify")
    p.add_argument("--tau", type=str)
    p.add_argument("--phi", type=str)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--family", choices=["blocks", "random", "dyadic"])
    p.add_argument("--n-max", type=int, dest="n_max")
    p.add_argument("--include-zero", action="store_true", dest="include_zero",
                   default=None)
    common(p)

    p = sub.add_parser("demo")
    p.add_argument("topic", choices=["counterexample"])
    p.add_argument("--kind", choices=["ex1", "ex2_3"])
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=float)
    common(p)

    p = sub.add_parser("reproduce-paper")
    p.add_argument("--target", type=str)
    common(p)

    return parser


_JSON_FLAGS = ("phi", "f", "space", "tau")


def _document_from_args(args: argparse.Namespace) -> dict:
    doc: dict = {}
    if args.config is not None:
        doc = json.loads(Path(args.config).read_text(encoding="utf-8"))
        if not isinstance(doc, dict):
            raise ConfigError("", "configuration document must be a JSON object")
    doc["command"] = args.command

    for key, value in vars(args).items():
        if key in ("command", "config") or value is None:
            continue
        if key in _JSON_FLAGS:
            doc[key] = _json_value(value)
        elif key == "t":
            doc[key] = _json_value(value)
            if isinstance(doc[key], str):
                doc[key] = float(doc[key])
        elif key == "q" and isinstance(value, str):
            doc[key] = value if value.lower() in ("inf", "infinity", "oo") \
                else float(value)
        else:
            doc[key] = value
    return doc


def _normalize_argv(argv: list[str]) -> list[str]:
    # accept the two-word spellings "norm orlicz" / "norm lorentz"
    if len(argv) >= 2 and argv[0] == "norm" and argv[1] in ("orlicz", "lorentz"):
        return [f"norm-{argv[1]}"] + argv[2:]
    return argv


def main(argv: list[str] | None = None) -> int:
    argv = _normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _document_from_args(args)
        config = parse_config(doc)
        envelope = run(config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except OrliczKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    envelope.write(config.output_path, config.format)
    return envelope.exit_code


if __name__ == "__main__":
    sys.exit(main())
