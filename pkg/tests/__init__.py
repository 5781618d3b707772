from . test_deserialize import *  # NOQA
from . test_graph import *  # NOQA
from . test_coloring import *  # NOQA
from . test_detect import *  # NOQA
from . test_construct import *  # NOQA
from . test_bounds import *  # NOQA
from . test_certificate import *  # NOQA
from . test_search import *  # NOQA
from . test_nearfactor import *  # NOQA
from . test_lemmas import *  # NOQA
from . test_cli import *  # NOQA
