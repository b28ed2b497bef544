from __future__ import annotations

import argparse
import logging
from typing import List

from milnorkit.diagram import linking_matrix, load_diagram, read_document
from milnorkit.dwyer import parse_surgery, validate_surgery
from milnorkit.errors import WordSyntaxError
from milnorkit.fixtures import resolve_source
from milnorkit.milnor import milnor_table, mu_bar, table_to_document

from . import CommandContext

SURGERY_KEYS = ("knot_component", "surgered", "framings", "unlink_assertion")


def _parse_index(text: str) -> List[int]:
    parts = [part.strip() for part in text.split(",")]
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise WordSyntaxError(f"bad multi-index {text!r}; use e.g. 1,2,3", 0) from None


class InvariantCommands:
    """Milnor invariant tables and diagram checks."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("milnorkit.cli.invariants")

    def register(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        mu = subparsers.add_parser(
            "mu", parents=[common], help="first non-vanishing Milnor invariants of a link"
        )
        mu.add_argument("diagram", help="diagram file, inline JSON, or bundled name")
        mu.add_argument("--index", help="compute a single invariant, e.g. 1,2,3")
        mu.add_argument(
            "--complete", action="store_true", help="fill every weight up to the cap"
        )
        mu.add_argument(
            "--word-form",
            action="store_true",
            help="reduce longitudes as words (bounded by --guard-letters) before expanding",
        )
        mu.set_defaults(handler=self.cmd_mu)

        validate = subparsers.add_parser(
            "validate", parents=[common], help="parse a diagram or surgery file and report on it"
        )
        validate.add_argument("diagram", help="diagram file, inline JSON, or bundled name")
        validate.set_defaults(handler=self.cmd_validate)

    def cmd_mu(self, args: argparse.Namespace, ctx: CommandContext) -> int:
        diagram = load_diagram(resolve_source(args.diagram))
        if args.index:
            value = mu_bar(
                diagram, _parse_index(args.index), ctx.cap, ctx.guards, word_form=args.word_form
            )
            ctx.emit(ctx.formatter.milnor_value(value))
            return 0
        table = milnor_table(
            diagram, ctx.cap, ctx.guards, complete=args.complete, word_form=args.word_form
        )
        ctx.emit(ctx.formatter.milnor_table(table, table_to_document(table)))
        return 0

    def cmd_validate(self, args: argparse.Namespace, ctx: CommandContext) -> int:
        document = read_document(resolve_source(args.diagram))
        if any(key in document for key in SURGERY_KEYS):
            surgery = parse_surgery(document)
            validation = validate_surgery(surgery, ctx.cap, ctx.guards, strict=False)
            diagram = surgery.diagram
        else:
            validation = None
            diagram = load_diagram(resolve_source(args.diagram))
        ctx.emit(ctx.formatter.diagram_summary(diagram, linking_matrix(diagram), validation))
        if validation is not None and not validation.ok:
            self.logger.warning("surgery hypotheses failed: %s", "; ".join(validation.failures))
            return 3
        return 0
