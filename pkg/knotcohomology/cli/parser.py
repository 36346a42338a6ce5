# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from argparse import ArgumentParser
from multiprocessing import cpu_count

from .. import __version__

commands = ["graph-complex", "config-homology", "tables", "verify", "report"]

tables = ["table2-left", "table2-right", "table5", "figure1", "table1", "column-p3", "rational"]

formats = ["json", "markdown"]

graph_predicates = {"connected": "connected", "2connected": "two_connected"}


def _build_parser():
    parser = ArgumentParser(
        prog="knotcohomology",
        description=f"knotcohomology {__version__} computes the stable integral cohomology of spaces of "
        "long knots in R^k in low degrees, together with the graph complexes, configuration spaces "
        "and spectral sequences it is built from.",
    )

    basegroup = parser.add_argument_group("base", "")
    basegroup.add_argument(
        "--outdir", type=str, help="directory where documents and log files are written",
    )
    basegroup.add_argument("--facts", type=str, help="facts file to use instead of the bundled one")
    basegroup.add_argument("--verbose", action="store_true", default=False)

    computegroup = parser.add_argument_group("compute", "")
    computegroup.add_argument("--jobs", type=int, default=cpu_count(), help="number of worker processes")
    computegroup.add_argument(
        "--allow-large", action="store_true", default=False, help="allow graph complexes with six or seven vertices"
    )

    outputgroup = parser.add_argument_group("output", "")
    outputgroup.add_argument("--format", choices=formats, default="json")

    parser.add_argument(
        "-v",
        "--version",
        action="store_true",
        help="print the version number and exit",
        default=False,
    )

    debuggroup = parser.add_argument_group("debug", "")
    debuggroup.add_argument("--debug", action="store_true", default=False)

    subparsers = parser.add_subparsers(dest="command")

    graphparser = subparsers.add_parser("graph-complex", help="homology of a complex of graphs")
    graphparser.add_argument("--a", type=int, required=True, help="number of vertices")
    graphparser.add_argument("--pred", choices=list(graph_predicates), default="connected")
    graphparser.add_argument("--complex", action="store_true", default=False, help="emit the chain complex itself")

    configparser = subparsers.add_parser("config-homology", help="Borel-Moore homology of a configuration space")
    configparser.add_argument("--k", type=int, required=True, help="dimension of the ambient space")
    configparser.add_argument("--n", type=int, required=True, help="number of points")
    configparser.add_argument("--rep", type=str, default="Z", help="local system")
    configparser.add_argument("--complex", action="store_true", default=False, help="emit the chain complex itself")

    tablesparser = subparsers.add_parser("tables", help="reproduce a table")
    tablesparser.add_argument("--which", choices=tables, required=True)
    tablesparser.add_argument("--k", type=int, help="dimension of the knots")
    tablesparser.add_argument("--mode", choices=["pinned", "computed"], default="pinned")

    verifyparser = subparsers.add_parser("verify", help="run the acceptance suite")
    verifyparser.add_argument("--only", action="append", help="check ids, comma separated")
    verifyparser.add_argument("--stretch", action="store_true", default=False, help="also run the a = 6 graph check")

    reportparser = subparsers.add_parser("report", help="discrepancy ledger and open questions")
    reportparser.add_argument("--k", type=int, action="append", help="dimensions of the knots, default 3 to 6")

    return parser


def parse_args(args=None, namespace=None):
    parser = _build_parser()
    opts = parser.parse_args(args, namespace)

    if opts.version is True:
        import sys

        print(__version__)
        sys.exit(0)

    if opts.command is None:
        parser.error(f"expected one of the commands {', '.join(commands)}")

    return opts
