from __future__ import annotations

import argparse
import logging

from milnorkit.freegroup import parse_word
from milnorkit.magnus import LcsDepthReport, magnus_expand, min_nonzero_weight
from milnorkit.validators import Validator

from . import CommandContext


class MagnusCommands:
    def __init__(self) -> None:
        self.logger = logging.getLogger("milnorkit.cli.magnus")

    def register(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(
            "magnus",
            parents=[common],
            help="Magnus expansion and lower central series depth of a word",
        )
        parser.add_argument("--word", required=True, help='free group word, e.g. "x1 x2^-1"')
        parser.add_argument("--vars", type=int, default=None, help="number of generators")
        parser.add_argument(
            "--depth-only", action="store_true", help="print only the depth report"
        )
        parser.set_defaults(handler=self.cmd_magnus)

    def cmd_magnus(self, args: argparse.Namespace, ctx: CommandContext) -> int:
        text = Validator.sanitize(args.word) or ""
        n_vars = args.vars
        if n_vars is None:
            # Enough generators for whatever the word mentions.
            n_vars = max(parse_word(text, 10**9).max_index, 1)
        check = Validator.variable_count(n_vars)
        if not check.ok:
            raise ValueError(check.message)
        word = parse_word(text, n_vars)
        series = magnus_expand(word, ctx.cap, n_vars)
        report = LcsDepthReport(word, ctx.cap, min_nonzero_weight(series))
        self.logger.info("expanded %d letters into %d terms", len(word), len(series))
        ctx.emit(ctx.formatter.series(series, report, depth_only=args.depth_only))
        return 0
