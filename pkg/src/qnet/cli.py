# *****************************************************************************
# Quantum Network Conferencing-Key Estimator
# Copyright (C) 2024 qnet_estimator contributors
#
# This file is part of qnet_estimator
#
# qnet_estimator is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, either version 3 of the License, or (at your option) any
# later version.
#
# qnet_estimator is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# qnet_estimator. If not, see <https://www.gnu.org/licenses/>.
# *****************************************************************************


"""
Command line front end

Exit codes: 0 success, 1 input/output error, 2 validation error, 3 capacity error.
"""
import argparse
import json
import logging
import sys

from .channels import channel_from_dict
from .config import DEFAULT_TOLERANCE
from .dot import export_dot
from .errors import CapacityError, QNetError, ValidationError
from .estimator import METHODS, ConferenceKeyEstimator
from .finite_size import FiniteSizeParams, finite_size_penalty
from .network import parse_network
from .quantum.covariance import is_weyl_covariant
from .utils import format_text, json_number


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_CAPACITY = 3


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    """
    Return the argument parser of ``qnet-bound``

    EXAMPLES::

        >>> from qnet.cli import build_parser
        >>> args = build_parser().parse_args(["bound", "--input", "net.json", "--method", "maxflow"])
        >>> args.command, args.input, args.method, args.format, args.tolerance
        ('bound', 'net.json', 'maxflow', 'text', 1e-09)
    """
    parser = argparse.ArgumentParser(prog="qnet-bound",
                                     description="Cut upper bounds on conferencing-key rates in quantum networks")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug messages")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tolerance", type=_positive_float, default=DEFAULT_TOLERANCE)

    network = argparse.ArgumentParser(add_help=False, parents=[common])
    network.add_argument("--input", required=True, metavar="PATH", help="network JSON document")
    network.add_argument("--method", choices=METHODS, default="auto")
    network.add_argument("--jobs", type=_positive_int, default=1, help="worker processes for brute force")

    commands = parser.add_subparsers(dest="command", required=True)

    bound = commands.add_parser("bound", parents=[network], help="minimum multi-edge REE flow over all cuts")
    bound.add_argument("--per-sender", action="store_true", help="also bound each sender alone")
    bound.set_defaults(handler=cmd_bound)

    weights = commands.add_parser("weights", parents=[network], help="REE weight of every edge")
    weights.set_defaults(handler=cmd_weights)

    per_sender = commands.add_parser("per-sender", parents=[network], help="bound for each sender alone")
    per_sender.set_defaults(handler=cmd_per_sender)

    covariance = commands.add_parser("check-covariance", parents=[common], help="Weyl-covariance of a qubit channel")
    source = covariance.add_mutually_exclusive_group(required=True)
    source.add_argument("--channel", metavar="JSON", help="channel descriptor")
    source.add_argument("--input", metavar="PATH", help="file holding the channel descriptor")
    covariance.set_defaults(handler=cmd_check_covariance)

    finite = commands.add_parser("finite-size", parents=[common], help="continuity penalty of the weak converse")
    finite.add_argument("--epsilon", type=float, required=True)
    finite.add_argument("--n", type=int, required=True, help="number of network uses")
    finite.add_argument("--log2-dim", type=float)
    finite.add_argument("--alpha-n", type=float)
    finite.set_defaults(handler=cmd_finite_size)

    dot = commands.add_parser("export-dot", parents=[network], help="Graphviz rendering of the network")
    dot.add_argument("--with-bound", action="store_true", help="dash the edges of the minimum cut")
    dot.set_defaults(handler=cmd_export_dot)

    return parser


def _read(path):
    with open(path, "rb") as f:
        return f.read()


def _estimator(args):
    return ConferenceKeyEstimator(parse_network(_read(args.input)), method=args.method, tolerance=args.tolerance,
                                  jobs=args.jobs)


def _dump(document):
    return json.dumps(document, indent=2, ensure_ascii=False)


def _per_sender_dict(estimator):
    return [{"sender": sender, "bound": json_number(report.bound), "method": report.method,
             "witness": report.witness.to_dict()} for sender, report in estimator.per_sender_bounds()]


def _per_sender_text(estimator):
    return "\n".join(f"sender {sender}: {format_text(report.bound)} bits per network use "
                     f"(side A: {', '.join(report.witness.cut.side_a)})"
                     for sender, report in estimator.per_sender_bounds())


def cmd_bound(args):
    estimator = _estimator(args)
    report = estimator.bound()
    if args.format == "json":
        document = report.to_dict()
        if args.per_sender:
            document["per_sender"] = _per_sender_dict(estimator)
        return _dump(document)

    text = report.to_text()
    if args.per_sender:
        text += "\n" + _per_sender_text(estimator)
    return text


def cmd_weights(args):
    estimator = _estimator(args)
    if args.format == "json":
        rows = []
        for edge in estimator.network.edges:
            weight = edge.weight()
            rows.append({"u": edge.u, "v": edge.v, "index": edge.index, "channel": edge.channel.to_dict(),
                         "weight": json_number(weight.value), "distillable": weight.distillable,
                         "provenance": weight.provenance})
        return _dump(rows)
    return estimator.weights_table().get_string()


def cmd_per_sender(args):
    estimator = _estimator(args)
    if args.format == "json":
        return _dump(_per_sender_dict(estimator))
    return _per_sender_text(estimator)


def cmd_check_covariance(args):
    raw = _read(args.input).decode("utf-8") if args.input else args.channel
    try:
        desc = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValidationError(f"malformed JSON: {e.msg}", position=f"line {e.lineno} column {e.colno}") from e

    channel = channel_from_dict(desc, edge=False)
    errors = channel.validate()
    if errors:
        raise ValidationError(errors)
    report = is_weyl_covariant(channel.kraus(), tol=args.tolerance)

    if args.format == "json":
        document = report.to_dict()
        document["residuals"] = [json_number(r) for r in report.residuals]
        return _dump(document)
    residuals = ", ".join(f"U{k}: {format_text(r)}" for k, r in enumerate(report.residuals))
    return f"Weyl-covariant: {'yes' if report.covariant else 'no'}\nresiduals: {residuals}"


def cmd_finite_size(args):
    params = FiniteSizeParams(epsilon=args.epsilon, n=args.n, log2_dim=args.log2_dim, alpha_n=args.alpha_n)
    delta, per_use = finite_size_penalty(params)
    if args.format == "json":
        return _dump({"epsilon": params.epsilon, "n": params.n, "log2_dim": json_number(params.log2_dim),
                      "alpha_n": params.alpha_n, "delta": json_number(delta), "per_use": json_number(per_use)})
    return f"delta: {format_text(delta)}\nper use: {format_text(per_use)}"


def cmd_export_dot(args):
    estimator = _estimator(args)
    witness = estimator.bound().witness if args.with_bound else None
    return export_dot(estimator.network, witness=witness).rstrip("\n")


def configure_logging(verbose):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s: %(message)s", force=True)


def main(argv=None):
    """
    Run ``qnet-bound`` and return its exit code
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        output = args.handler(args)
    except OSError as e:
        logger.error("%s", e)
        return EXIT_IO
    except CapacityError as e:
        logger.error("%s", e)
        return EXIT_CAPACITY
    except (QNetError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_VALIDATION

    print(output)
    return EXIT_OK
