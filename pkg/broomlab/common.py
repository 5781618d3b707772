import logging
from fractions import Fraction


LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


# search
DEFAULT_SEED = 20160729
DEFAULT_AUDIT_RATE = Fraction(1, 100)
AUDIT_MAX_VERTICES = 7  # audits re-expand subtrees, keep them on small hosts
DEFAULT_WORKERS = 1
DEFAULT_SPLIT_DEPTH = 3  # edges fixed per prefix handed to a worker
PROGRESS_INTERVAL = 100000  # nodes between debug progress lines
DEFAULT_ELL = 3

# edge branching orders
ORDER_INDEX = "index"
ORDER_CONSTRAINED = "constrained"
ORDERS = (ORDER_INDEX, ORDER_CONSTRAINED)

# search modes
MODE_GENERIC = "generic"
MODE_NEAR_FACTORIZATION = "near-factorization"
MODES = (MODE_GENERIC, MODE_NEAR_FACTORIZATION)

# prune rules
RULE_C4 = "c4"
RULE_BROOM_CAPACITY = "broom-capacity"
RULE_LEMMA = "lemma-certified"
RULES = (RULE_C4, RULE_BROOM_CAPACITY, RULE_LEMMA)

# guards
NAIVE_EMBED_LIMIT = 2000000  # injections tried by the naive embedder
MAX_FACTORIZATION_ORDER = 8

# exit codes
EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def configure_logging(debug=False, quiet=False):
    """Set the root log level from the --debug/--quiet flags."""
    if debug:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    root = logging.getLogger()
    if not root.handlers:
        logging.basicConfig(format=LOG_FORMAT, level=level)
    root.setLevel(level)
    return level
