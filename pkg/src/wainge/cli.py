"""Command-line front door.

Subcommands: ``taxonomy list``, ``compute``, ``assess``, ``sensitivity``,
``report`` and ``serve``. Exit codes: 0 success, 1 usage or validation
error, 2 only under ``compute --gate`` when the recommendation is
AgileRisky (a machine-readable gate for scripts).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .elicitation import (
    ATTITUDE_QUESTION,
    ATTITUDE_SCALE,
    AttitudeResponse,
    Provenance,
    QuestionResponse,
    render_question,
    resolve_weights,
    session_ava,
    evaluate_session,
)
from .engine import ModelConfig, Recommendation, sensitivity
from .elicitation import to_score_input
from .errors import ConflictError, WaingeError
from .store import (
    AssessmentSession,
    apply_commit,
    load_session,
    result_to_doc,
    save_session,
    sensitivity_to_doc,
    taxonomy_to_doc,
)
from .taxonomy import builtin_taxonomy

GATE_EXIT_CODE = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the gate owns that code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wainge", description="Agile-adoption risk decision support")
    parser.add_argument("--version", action="version", version=f"wainge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    taxonomy = sub.add_parser("taxonomy", help="inspect the built-in risk taxonomy")
    taxonomy_sub = taxonomy.add_subparsers(
        dest="taxonomy_command", required=True, parser_class=_Parser
    )
    tax_list = taxonomy_sub.add_parser("list", help="print the built-in factors")
    tax_list.add_argument("--format", choices=("text", "json"), default="text")

    compute = sub.add_parser("compute", help="evaluate a session file")
    compute.add_argument("session_path")
    compute.add_argument("--log-base", type=float, default=None)
    compute.add_argument("--threshold", type=float, default=None)
    compute.add_argument(
        "--gate",
        action="store_true",
        help="exit 2 when the recommendation is AgileRisky",
    )
    compute.add_argument("--format", choices=("text", "json"), default="text")

    assess = sub.add_parser("assess", help="interactive elicitation loop")
    assess.add_argument("session_path")

    sens = sub.add_parser("sensitivity", help="gradient, tornado and threshold AVA")
    sens.add_argument("session_path")
    sens.add_argument("--format", choices=("text", "json"), default="text")

    report = sub.add_parser("report", help="write a Markdown decision record")
    report.add_argument("session_path")
    report.add_argument("--out", default=None, help="destination file (default stdout)")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument(
        "--data-dir",
        default=None,
        help="session directory (default $WAINGE_DATA_DIR or ./sessions)",
    )
    return parser


def _effective_config(session: AssessmentSession, args) -> ModelConfig:
    config = session.config
    replacements = {}
    if getattr(args, "log_base", None) is not None:
        replacements["log_base"] = args.log_base
    if getattr(args, "threshold", None) is not None:
        replacements["threshold"] = args.threshold
    if replacements:
        config = dataclasses.replace(config, **replacements)
    return config


def _threshold_text(value: float) -> str:
    return format(value, "g")


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2, ensure_ascii=False))


def cmd_taxonomy_list(args) -> int:
    taxonomy = builtin_taxonomy()
    if args.format == "json":
        _print_json(taxonomy_to_doc(taxonomy))
        return 0
    id_width = max(len(f.id) for f in taxonomy.factors)
    cat_width = max(len(f.category.value) for f in taxonomy.factors)
    for f in taxonomy.factors:
        print(
            f"{f.id:<{id_width}}  {f.category.value:<{cat_width}}  "
            f"r={f.intrinsic_risk:g}  {f.description}"
        )
    return 0


def cmd_compute(args) -> int:
    session = load_session(args.session_path)
    config = _effective_config(session, args)
    result = evaluate_session(session, config)
    if args.format == "json":
        _print_json(result_to_doc(result))
    else:
        print(f"OSR {result.osr:.6f}")
        print(f"MAF {result.maf:.6f}")
        print(
            f"DEC {result.dec:.6f} ({result.dec * 100:.2f}%) "
            f"— {result.recommendation.value}"
        )
        if result.borderline:
            print(
                f"borderline yes (within {config.borderline_margin:g} of "
                f"threshold {_threshold_text(config.threshold)})"
            )
        else:
            print("borderline no")
        for note in result.warnings:
            print(f"warning: {note}")
    if args.gate and result.recommendation is Recommendation.AGILE_RISKY:
        return GATE_EXIT_CODE
    return 0


def _prompt_weight(prompt: str) -> Optional[float]:
    """Read a weight in [0, 1]; blank means abstain. Re-prompts until valid."""
    while True:
        raw = input(prompt).strip()
        if raw == "":
            return None
        try:
            value = float(raw)
        except ValueError:
            print("  enter a number between 0 and 1, or leave blank to abstain")
            continue
        if not 0.0 <= value <= 1.0:
            print("  value must be between 0 and 1; try again")
            continue
        return value


def cmd_assess(args) -> int:
    path = Path(args.session_path)
    session = load_session(path)
    base_revision = session.revision
    taxonomy = session.taxonomy

    if not session.problems:
        print("session has no problems; skipping the question grid")
    try:
        for factor in taxonomy.factors:
            for problem in session.problems:
                print()
                print(render_question(factor, problem))
                value = _prompt_weight("  weight [0-1, blank to abstain]: ")
                if value is None:
                    continue
                session.responses.append(
                    QuestionResponse(
                        factor_id=factor.id, problem_id=problem.id, weight=value
                    )
                )
        if session.team:
            print()
            print(ATTITUDE_QUESTION)
            low, high = ATTITUDE_SCALE
            for member in session.team:
                value = _prompt_weight(
                    f"  {member.name} [0 = {low} .. 1 = {high}, blank to skip]: "
                )
                if value is None:
                    continue
                session.attitudes.append(
                    AttitudeResponse(member_id=member.member_id, ava=value)
                )
    except EOFError:
        print("\naborted; no changes written", file=sys.stderr)
        return 1

    stored = load_session(path)
    try:
        committed = apply_commit(stored, session, base_revision)
    except ConflictError as exc:
        print(
            f"error: {exc}\nthe session file changed while assessing; "
            "reload it and run assess again",
            file=sys.stderr,
        )
        return 1
    save_session(committed, path)
    print(f"\ncommitted revision {committed.revision} to {path}")
    return 0


def cmd_sensitivity(args) -> int:
    session = load_session(args.session_path)
    score_input = to_score_input(session)
    report = sensitivity(score_input, session.config)
    factor_ids = session.taxonomy.factor_ids()
    if args.format == "json":
        _print_json(sensitivity_to_doc(report, factor_ids))
        return 0
    print("gradient dDEC/dw per factor")
    for factor_id, value in zip(factor_ids, report.gradient):
        print(f"  {factor_id}  {value:+.6f}")
    print("tornado (DEC at w=0, DEC at w=1, swing), by |swing|")
    for entry in report.tornado:
        print(
            f"  {entry.factor_id}  {entry.dec_at_w0:.6f}  {entry.dec_at_w1:.6f}  "
            f"{entry.swing:+.6f}"
        )
    if report.threshold_ava is not None:
        print(f"threshold AVA {report.threshold_ava:.6f}")
    else:
        print("threshold AVA none within [0, 1]")
    for note in report.warnings:
        print(f"warning: {note}")
    return 0


def _render_report(session: AssessmentSession) -> str:
    weight_vector, _ = resolve_weights(session)
    result = evaluate_session(session)
    config = session.config
    lines: list[str] = []
    title = session.title or session.id
    lines.append(f"# Assessment report: {title}")
    lines.append("")
    lines.append(f"- Session: `{session.id}` (revision {session.revision})")
    lines.append(f"- Last updated: {session.updated_at}")
    lines.append(f"- Agile candidate: {session.agile_candidate or 'not recorded'}")
    lines.append(
        f"- Non-Agile candidate: {session.non_agile_candidate or 'not recorded'}"
    )
    lines.append("")
    lines.append("## Problems")
    lines.append("")
    if session.problems:
        for p in session.problems:
            lines.append(f"- **{p.id}**: {p.statement}")
    else:
        lines.append("- none recorded")
    lines.append("")
    lines.append("## Team")
    lines.append("")
    if session.team:
        for m in session.team:
            suffix = f" ({m.role})" if m.role else ""
            lines.append(f"- {m.name or m.member_id}{suffix}")
    else:
        lines.append("- none recorded")
    lines.append("")
    lines.append("## Weights")
    lines.append("")
    lines.append("| Factor | Weight | Provenance |")
    lines.append("| --- | ---: | --- |")
    for entry in weight_vector.entries:
        lines.append(
            f"| {entry.factor_id} | {entry.weight:g} | {entry.provenance.value} |"
        )
    lines.append("")
    lines.append("## Attitude")
    lines.append("")
    ava = session_ava(session)
    if session.ava_override is not None:
        lines.append(f"- AVA {ava:g}: session-level override")
    else:
        values = ", ".join(f"{a.ava:g}" for a in session.attitudes)
        lines.append(
            f"- AVA {ava:g}: average of {len(session.attitudes)} "
            f"member responses ({values})"
        )
    lines.append("")
    lines.append("## Result")
    lines.append("")
    lines.append(f"- OSR: {result.osr:.6f}")
    lines.append(f"- MAF: {result.maf:.6f}")
    lines.append(f"- DEC: {result.dec:.6f} ({result.dec * 100:.2f}%)")
    lines.append(f"- Recommendation: {result.recommendation.value}")
    threshold = _threshold_text(config.threshold)
    if result.recommendation is Recommendation.AGILE_RISKY:
        lines.append(
            f"- DEC exceeds {threshold}: adopting an Agile method is "
            "assessed as overly risky."
        )
    else:
        lines.append(
            f"- DEC does not exceed {threshold}: adopting an Agile method is "
            "not assessed as overly risky."
        )
    if result.borderline:
        lines.append(
            f"- Borderline: DEC is within {config.borderline_margin:g} of the threshold."
        )
    defaulted = [
        e.factor_id
        for e in weight_vector.entries
        if e.provenance is Provenance.NEUTRAL_DEFAULT
    ]
    if defaulted:
        lines.append("")
        lines.append("## Defaulted factors")
        lines.append("")
        for factor_id in defaulted:
            lines.append(f"- {factor_id}: no responses; neutral weight 0.5 applied")
    if result.warnings:
        lines.append("")
        lines.append("## Warnings")
        lines.append("")
        for note in result.warnings:
            lines.append(f"- {note}")
    lines.append("")
    return "\n".join(lines)


def cmd_report(args) -> int:
    session = load_session(args.session_path)
    text = _render_report(session)
    if args.out is None:
        print(text, end="")
        return 0
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    print(f"wrote {out}")
    return 0


def resolve_data_dir(flag_value: Optional[str]) -> str:
    """--data-dir flag, else $WAINGE_DATA_DIR, else ./sessions."""
    return flag_value or os.environ.get("WAINGE_DATA_DIR") or "./sessions"


def cmd_serve(args) -> int:
    import socket

    import uvicorn

    from .service import create_app

    data_dir = resolve_data_dir(args.data_dir)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    finally:
        probe.close()
    app = create_app(data_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "taxonomy":
            return cmd_taxonomy_list(args)
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "assess":
            return cmd_assess(args)
        if args.command == "sensitivity":
            return cmd_sensitivity(args)
        if args.command == "report":
            return cmd_report(args)
        if args.command == "serve":
            return cmd_serve(args)
    except WaingeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
