"""Search certificates: the config echo, the verdict with its witness,
statistics and the engine tag, plus their text format."""
import collections
from broomlab import common
from broomlab import coloring
from broomlab import detect
from broomlab import exceptions
from broomlab.version import ENGINE_VERSION


logger = common.logging.getLogger(__name__)


HEADER = "broomlab-cert v1"
WITNESS = "WITNESS"
EXHAUSTED = "EXHAUSTED"
VOLATILE_STATS = ("wall_ms", "rss_mb")

# loader error codes
MALFORMED_HEADER = "malformed-header"
MALFORMED_SECTION = "malformed-section"
MALFORMED_STATISTIC = "malformed-statistic"
MISSING_FIELD = "missing-field"

REQUIRED_CONFIG = ("host", "t", "mode", "palette_cap", "rules")


class SearchCertificate(object):

    def __init__(self, config, result, witness=None, stats=None,
                 engine=ENGINE_VERSION):
        if result not in (WITNESS, EXHAUSTED):
            raise exceptions.InvalidParameter(
                "Unknown result '{0}'!".format(result)
            )
        if (result == WITNESS) != (witness is not None):
            raise exceptions.InvalidParameter(
                "A witness is required exactly for WITNESS results!"
            )
        self.config = collections.OrderedDict(
            (k, str(v)) for k, v in config.items()
        )
        self.result = result
        self.witness = witness
        self.stats = collections.OrderedDict(stats or ())
        self.engine = engine

    @property
    def t(self):
        return int(self.config["t"])

    def is_witness(self):
        return self.result == WITNESS

    def stable_stats(self):
        return collections.OrderedDict(
            (k, v) for k, v in self.stats.items() if k not in VOLATILE_STATS
        )

    def same_run(self, other):
        """Equal up to wall time and memory, the scheduling dependent parts."""
        return (self.config == other.config and
                self.result == other.result and
                self.witness == other.witness and
                self.stable_stats() == other.stable_stats() and
                self.engine == other.engine)

    def summary(self):
        keys = ["nodes", "leaves", "depth", "wall_ms"]
        keys += [k for k in self.stats if k.startswith("pruned.")]
        return "{0} ({1})".format(self.result, ", ".join(
            "{0}={1}".format(k, self.stats[k]) for k in keys
            if k in self.stats
        ))

    def format(self):
        lines = [HEADER, "config"]
        lines += ["{0} {1}".format(k, v) for k, v in self.config.items()]
        lines += ["end", "result {0}".format(self.result)]
        if self.witness is not None:
            lines += coloring.format_coloring(self.witness).splitlines()
            lines.append("end")
        lines.append("statistics")
        lines += ["{0}={1}".format(k, v) for k, v in self.stats.items()]
        lines += ["end", "engine {0}".format(self.engine)]
        return "\n".join(lines) + "\n"

    def write(self, path):
        with open(path, "w") as fp:
            fp.write(self.format())
        logger.info("Wrote {0} certificate to '{1}'.".format(self.result, path))

    def __repr__(self):
        return "SearchCertificate({0}, {1})".format(
            self.config.get("host"), self.result
        )


def _section(body, start, name):
    """Lines of the block opened by `name` at body[start], up to 'end'."""
    no, line = body[start]
    if line != name:
        raise exceptions.CertificateFormatError(
            MALFORMED_SECTION, no, "expected '{0}', got {1!r}".format(name, line)
        )
    for j in range(start + 1, len(body)):
        if body[j][1] == "end":
            return body[start + 1:j], j + 1
    raise exceptions.CertificateFormatError(
        MALFORMED_SECTION, no, "unterminated '{0}' block".format(name)
    )


def parse_certificate(lines):
    body = [(i + 1, line.strip()) for i, line in enumerate(lines)]
    body = [(no, line) for no, line in body if line]
    if not body or body[0][1] != HEADER:
        no = body[0][0] if body else 1
        raise exceptions.CertificateFormatError(
            MALFORMED_HEADER, no, "missing '{0}'".format(HEADER)
        )
    entries, pos = _section(body, 1, "config")
    config = collections.OrderedDict()
    for no, line in entries:
        key, _, value = line.partition(" ")
        config[key] = value.strip()
    for key in REQUIRED_CONFIG:
        if key not in config:
            raise exceptions.CertificateFormatError(
                MISSING_FIELD, body[1][0], "config lacks '{0}'".format(key)
            )
    if pos >= len(body) or not body[pos][1].startswith("result "):
        no = body[pos][0] if pos < len(body) else body[-1][0]
        raise exceptions.CertificateFormatError(
            MALFORMED_SECTION, no, "missing result line"
        )
    no, line = body[pos]
    result = line.split(" ", 1)[1].strip()
    witness = None
    if result == WITNESS:
        embedded, pos = _section(body, pos, line)
        if not embedded:
            raise exceptions.CertificateFormatError(
                MALFORMED_SECTION, no, "empty witness block"
            )
        witness = coloring.parse_coloring(
            [text for _, text in embedded],
            error=exceptions.CertificateFormatError,
            first_lineno=embedded[0][0]
        )
    elif result == EXHAUSTED:
        pos += 1
    else:
        raise exceptions.CertificateFormatError(
            MALFORMED_SECTION, no, "unknown result {0!r}".format(result)
        )
    if pos >= len(body):
        raise exceptions.CertificateFormatError(
            MALFORMED_SECTION, body[-1][0], "missing statistics block"
        )
    entries, pos = _section(body, pos, "statistics")
    stats = collections.OrderedDict()
    for no, line in entries:
        key, sep, value = line.partition("=")
        if not sep or not value.strip().lstrip("-").isdigit():
            raise exceptions.CertificateFormatError(
                MALFORMED_STATISTIC, no, "bad statistic {0!r}".format(line)
            )
        stats[key.strip()] = int(value)
    if pos >= len(body) or not body[pos][1].startswith("engine "):
        no = body[pos][0] if pos < len(body) else body[-1][0]
        raise exceptions.CertificateFormatError(
            MISSING_FIELD, no, "missing engine line"
        )
    engine = body[pos][1].split(" ", 1)[1].strip()
    return SearchCertificate(config, result, witness, stats, engine)


def load_certificate(path):
    with open(path) as fp:
        return parse_certificate(fp.read().splitlines())


def looks_like_certificate(path):
    with open(path) as fp:
        return fp.readline().strip() == HEADER


def check_witness(cert):
    """Re-verify an embedded witness; returns a rainbow broom or None."""
    coloring.require_proper(cert.witness)
    return detect.find_rainbow_broom(cert.witness, detect.BroomPattern(cert.t))
