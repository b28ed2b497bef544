from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, TextIO

from commands import CommandContext
from milnorkit import Guards, ReportFormatter, Validator, load_config, setup_logging
from milnorkit.errors import (
    DegreeError,
    DiagramError,
    GeneratorRangeError,
    HypothesisError,
    MilnorKitError,
    ResourceGuardError,
    SeriesMismatchError,
    WordSyntaxError,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_GUARD = 4

INPUT_ERRORS = (
    WordSyntaxError,
    GeneratorRangeError,
    DiagramError,
    DegreeError,
    SeriesMismatchError,
    ValueError,
    OSError,
)


class MilnorKitApp:
    def __init__(self, config: Dict[str, Any], out: Optional[TextIO] = None) -> None:
        self.config = config
        self.out = out or sys.stdout
        self.logger = logging.getLogger("milnorkit.cli")
        self.groups = [
            self._build_series_commands(),
            self._build_invariant_commands(),
            self._build_surgery_commands(),
        ]

    def build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--cap", type=int, default=None, help="weight cap (default 8)")
        common.add_argument(
            "--format", dest="output_format", default="table", help="table or json"
        )
        common.add_argument("--guard-terms", type=int, default=None)
        common.add_argument("--guard-letters", type=int, default=None)
        common.add_argument("--log-file", default=None)
        common.add_argument("-v", "--verbose", action="count", default=0)

        parser = argparse.ArgumentParser(
            prog="milnorkit",
            description="Milnor invariants of link diagrams and Dwyer numbers of knots.",
        )
        subparsers = parser.add_subparsers(dest="command", required=True)
        for group in self.groups:
            group.register(subparsers, common)
        return parser

    def _context(self, args: argparse.Namespace) -> CommandContext:
        cap = args.cap if args.cap is not None else self.config["cap"]
        terms = args.guard_terms if args.guard_terms is not None else self.config["guard_terms"]
        letters = (
            args.guard_letters if args.guard_letters is not None else self.config["guard_letters"]
        )
        for result in (
            Validator.weight_cap(cap),
            Validator.guard("terms", terms),
            Validator.guard("letters", letters),
            Validator.output_format(args.output_format),
        ):
            if not result.ok:
                raise ValueError(result.message)
        return CommandContext(
            cap=cap,
            guards=Guards(max_terms=terms, max_letters=letters),
            formatter=ReportFormatter(args.output_format),
            out=self.out,
        )

    def _configure_logging(self, args: argparse.Namespace) -> None:
        level = self.config["log_level"]
        if args.verbose == 1:
            level = "INFO"
        elif args.verbose > 1:
            level = "DEBUG"
        setup_logging(args.log_file or self.config["log_file"], level)

    def run(self, argv: Optional[List[str]] = None) -> int:
        args = self.build_parser().parse_args(argv)
        self._configure_logging(args)
        try:
            ctx = self._context(args)
            return args.handler(args, ctx)
        except Exception as error:  # noqa: BLE001
            return self.on_command_error(error)

    def on_command_error(self, error: Exception) -> int:
        if isinstance(error, HypothesisError):
            self._report("Hypothesis Failed", str(error))
            return EXIT_HYPOTHESIS
        if isinstance(error, ResourceGuardError):
            self._report("Resource Guard", str(error))
            return EXIT_GUARD
        if isinstance(error, INPUT_ERRORS):
            self._report("Input Error", str(error))
            return EXIT_INPUT
        if isinstance(error, MilnorKitError):
            self._report("Computation Error", str(error))
            return EXIT_FAILURE
        self._report("Unexpected Error", "Something went wrong while running that command.")
        self.logger.exception("Command error: %s", error)
        return EXIT_FAILURE

    def _report(self, title: str, description: str) -> None:
        sys.stderr.write(f"{title}: {description}\n")

    def _build_series_commands(self) -> Any:
        from commands.series import MagnusCommands

        return MagnusCommands()

    def _build_invariant_commands(self) -> Any:
        from commands.invariants import InvariantCommands

        return InvariantCommands()

    def _build_surgery_commands(self) -> Any:
        from commands.surgery import SurgeryCommands

        return SurgeryCommands()


def main(argv: Optional[List[str]] = None) -> int:
    config = load_config()
    app = MilnorKitApp(config)
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
