import sys
import argparse
from broomlab import api
from broomlab import common
from broomlab import construct
from broomlab import exceptions


logger = common.logging.getLogger(__name__)


USAGE_ERRORS = (
    exceptions.InvalidInput,
    exceptions.InvalidParameter,
    exceptions.FormatError,
    exceptions.PreconditionViolation,
    EnvironmentError,  # missing or unreadable files
)


def _add_programm_args(parser):
    # debug
    parser.add_argument('--debug', action='store_true',
                        help="Show debug information.")

    # quiet
    parser.add_argument('--quiet', action='store_true',
                        help="Only show warning and error information.")


def _add_version(command_parser):
    version_parser = command_parser.add_parser(  # NOQA
        "version", help="Show version number."
    )


def _add_construct(command_parser):
    construct_parser = command_parser.add_parser(
        "construct", help="Build a colored construction."
    )
    construct_parser.add_argument(
        "--family", required=True,
        help="One of: {0}.".format(", ".join(construct.FAMILIES))
    )
    construct_parser.add_argument(
        "--t", default=None, help="Broom edge count t (odd-matching family)."
    )
    construct_parser.add_argument(
        "--s", default=None, help="Vector space dimension."
    )
    construct_parser.add_argument(
        "--out", default=None, help="Write the coloring file here."
    )


def _add_verify(command_parser):
    verify_parser = command_parser.add_parser(
        "verify", help="Check a coloring for a rainbow broom."
    )
    verify_parser.add_argument(
        "--in", dest="in_path", required=True,
        help="Coloring file or WITNESS certificate."
    )
    verify_parser.add_argument("--t", required=True, help="Broom edge count t.")
    verify_parser.add_argument(
        "--ell", default=common.DEFAULT_ELL,
        help="Handle length (default: {0}).".format(common.DEFAULT_ELL)
    )


def _add_analyze(command_parser):
    analyze_parser = command_parser.add_parser(
        "analyze", help="Four-cycle, sigma and degree structure report."
    )
    analyze_parser.add_argument(
        "--in", dest="in_path", required=True,
        help="Coloring file or WITNESS certificate."
    )
    analyze_parser.add_argument("--t", required=True, help="Broom edge count t.")


def _add_search(command_parser):
    search_parser = command_parser.add_parser(
        "search", help="Certified exhaustive search (0 witness, 1 exhausted)."
    )
    search_parser.add_argument(
        "--host", required=True, help="clique:k, biclique:a,b or file:path."
    )
    search_parser.add_argument("--t", required=True, help="Broom edge count t.")

    # mode
    default = common.MODE_GENERIC
    search_parser.add_argument(
        "--mode", default=default,
        help="{0} (default: {1}).".format(" or ".join(common.MODES), default)
    )

    search_parser.add_argument(
        "--palette_cap", default=None,
        help="Maximum number of colors (default: n-1 or n on cliques)."
    )
    search_parser.add_argument(
        "--rules", default=None,
        help="Comma separated prune rules or 'none' (default: all that "
             "apply). Known: {0}.".format(", ".join(common.RULES))
    )

    # order
    default = common.ORDER_INDEX
    search_parser.add_argument(
        "--order", default=default,
        help="Edge order {0} (default: {1}).".format(
            " or ".join(common.ORDERS), default)
    )

    # Threadpool workers
    search_parser.add_argument(
        '--workers', default=common.DEFAULT_WORKERS,
        help="Witness hunt threads; exhaustion runs use one."
    )

    # audits
    default = common.DEFAULT_SEED
    search_parser.add_argument(
        "--seed", default=default,
        help="Prune audit seed (default: {0}).".format(default)
    )
    default = common.DEFAULT_AUDIT_RATE
    search_parser.add_argument(
        "--audit_rate", default=default,
        help="Fraction of pruned nodes re-expanded on hosts with at most "
             "{0} vertices (default: {1}).".format(
                 common.AUDIT_MAX_VERTICES, default)
    )

    search_parser.add_argument(
        "--out", default=None, help="Write the certificate here."
    )
    search_parser.add_argument(
        "--lemma_dir", default=None,
        help="Directory to load and store lemma certificates."
    )


def _add_bounds(command_parser):
    bounds_parser = command_parser.add_parser(
        "bounds", help="Known bounds on the extremal coefficient."
    )
    bounds_parser.add_argument("--t", required=True, help="Broom edge count t.")


def _add_certify(command_parser):
    certify_parser = command_parser.add_parser(
        "certify", help="Re-check a search certificate."
    )
    certify_parser.add_argument(
        "--cert", dest="cert_path", required=True, help="Certificate file."
    )
    certify_parser.add_argument(
        "--rerun", action='store_true',
        help="Repeat the recorded search and compare."
    )


def _parse_args(args):
    class ArgumentParser(argparse.ArgumentParser):
        def error(self, message):
            sys.stderr.write('error: %s\n' % message)
            self.print_help()
            sys.exit(common.EXIT_USAGE)

    # setup parser
    description = "Rainbow broom workbench command-line interface."
    parser = ArgumentParser(description=description)

    _add_programm_args(parser)

    command_parser = parser.add_subparsers(
        title='commands', dest='command', metavar="<command>"
    )

    _add_version(command_parser)
    _add_construct(command_parser)
    _add_verify(command_parser)
    _add_analyze(command_parser)
    _add_search(command_parser)
    _add_bounds(command_parser)
    _add_certify(command_parser)

    # get values
    arguments = vars(parser.parse_args(args=args))
    command_name = arguments.pop("command")
    if not command_name:
        parser.error("No command given!")
    return command_name, arguments


def main(args):
    """Run a command and return its exit code."""
    try:
        command_name, arguments = _parse_args(args)
        workbench = api.Workbench(
            debug=arguments.pop("debug"),
            quiet=arguments.pop("quiet"),
        )
        return getattr(workbench, command_name)(**arguments)
    except USAGE_ERRORS as e:
        logger.error(e)
        return common.EXIT_USAGE
    except KeyboardInterrupt:
        logger.warning("Caught KeyboardInterrupt")
        return common.EXIT_INTERNAL
    except exceptions.BroomlabException as e:
        logger.error(e)
        return common.EXIT_INTERNAL
    except Exception as e:
        logger.debug("Internal error", exc_info=True)
        logger.error("Internal error: {0}".format(e))
        return common.EXIT_INTERNAL
