from __future__ import annotations

import argparse
import logging

from milnorkit.diagram import load_diagram
from milnorkit.dwyer import (
    band_sum_bound,
    dwyer_number,
    knotification_bound,
    knotification_bound_from_link,
    load_surgery,
    report_to_document,
)
from milnorkit.fixtures import resolve_source

from . import CommandContext


class SurgeryCommands:
    """Dwyer numbers and the knotification and band-sum bounds."""

    def __init__(self) -> None:
        self.logger = logging.getLogger("milnorkit.cli.surgery")

    def register(self, subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
        dwyer = subparsers.add_parser(
            "dwyer", parents=[common], help="Dwyer number of a knot given by a surgery presentation"
        )
        dwyer.add_argument("surgery", help="surgery file, inline JSON, or bundled name")
        dwyer.add_argument(
            "--no-cross-check",
            dest="cross_check",
            action="store_false",
            help="skip recomputing the knot longitude depth",
        )
        dwyer.set_defaults(handler=self.cmd_dwyer)

        bounds = subparsers.add_parser(
            "bounds", parents=[common], help="knotification and band-sum bounds"
        )
        group = bounds.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--knotify", nargs=2, type=int, metavar=("N", "Q"),
            help="components and first non-vanishing weight of the link",
        )
        group.add_argument(
            "--bands", nargs=2, type=int, metavar=("R", "K"),
            help="first non-vanishing weight and number of bands",
        )
        group.add_argument("--knotify-link", metavar="DIAGRAM", help="compute q from a diagram")
        bounds.set_defaults(handler=self.cmd_bounds)

    def cmd_dwyer(self, args: argparse.Namespace, ctx: CommandContext) -> int:
        surgery = load_surgery(str(resolve_source(args.surgery)))
        report = dwyer_number(surgery, ctx.cap, ctx.guards, cross_check=args.cross_check)
        ctx.emit(ctx.formatter.dwyer(report, report_to_document(report)))
        return 0

    def cmd_bounds(self, args: argparse.Namespace, ctx: CommandContext) -> int:
        if args.knotify:
            n, q = args.knotify
            value = knotification_bound(n, q)
            ctx.emit(ctx.formatter.bound("knotification", value, str(value)))
        elif args.bands:
            r, k = args.bands
            value = band_sum_bound(r, k)
            ctx.emit(ctx.formatter.bound("band_sum", value, f"weight > {value}"))
        else:
            diagram = load_diagram(resolve_source(args.knotify_link))
            link_bound = knotification_bound_from_link(diagram, ctx.cap, ctx.guards)
            if link_bound is None:
                text = f"no non-vanishing invariant up to weight {ctx.cap}; no bound"
            else:
                text = str(link_bound)
            ctx.emit(ctx.formatter.bound("knotification", link_bound, text))
        return 0
