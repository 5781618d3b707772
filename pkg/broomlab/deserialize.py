import re
from fractions import Fraction
from broomlab import common
from broomlab import exceptions


def unicode_str(s):
    if isinstance(s, bytes):
        return s.decode("utf-8")
    if isinstance(s, str):
        return s
    raise exceptions.InvalidInput("Expected text, got {0!r}!".format(s))


def flag(value):
    if isinstance(value, bool):
        return value
    value = unicode_str(value).strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off", ""):
        return False
    raise exceptions.InvalidInput("Invalid flag value {0!r}!".format(value))


def integer(i):
    if isinstance(i, bool) or isinstance(i, float):
        raise exceptions.InvalidInput("Value {0!r} is not an integer!".format(i))
    if isinstance(i, int):
        return i
    try:
        return int(unicode_str(i).strip())
    except ValueError:
        raise exceptions.InvalidInput("Value {0!r} is not an integer!".format(i))


def positive_integer(i):
    i = integer(i)
    if i < 0:
        raise exceptions.InvalidInput("Value must be positive!")
    return i


def positive_nonzero_integer(i):
    i = positive_integer(i)
    if i == 0:
        raise exceptions.InvalidInput("Value must be greater then 0!")
    return i


def optional_integer(i):
    return None if i is None else positive_nonzero_integer(i)


def rational(value):
    """Exact rational from int, Fraction or text like '9/2' or '1.9'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    try:
        return Fraction(unicode_str(value).strip())
    except (ValueError, ZeroDivisionError):
        msg = "Value {0!r} is not rational!".format(value)
        raise exceptions.InvalidInput(msg)


def probability(value):
    p = rational(value)
    if p < 0 or p > 1:
        raise exceptions.InvalidInput("Rate {0} not in [0, 1]!".format(p))
    return p


def choice(value, options, what):
    value = unicode_str(value).strip()
    if value not in options:
        msg = "Unknown {0} '{1}', expected one of: {2}."
        options = ", ".join(options)
        raise exceptions.InvalidInput(msg.format(what, value, options))
    return value


def mode(value):
    return choice(value, common.MODES, "mode")


def order(value):
    return choice(value, common.ORDERS, "edge order")


def rules(value):
    """Comma separated rule names ('none' or empty for no rules)."""
    if value is None:
        return None
    if isinstance(value, (list, tuple, set, frozenset)):
        names = [unicode_str(v).strip() for v in value]
    else:
        value = unicode_str(value).strip()
        if value in ("", "none"):
            return frozenset()
        names = [v.strip() for v in value.split(",")]
    return frozenset(choice(name, common.RULES, "rule") for name in names)


_HOST_RE = re.compile(r'^(clique|biclique|file):(.+)$')


def host_spec(spec):
    """Parse 'clique:k', 'biclique:a,b' or 'file:path' into (kind, args)."""
    match = _HOST_RE.match(unicode_str(spec).strip())
    if match is None:
        raise exceptions.InvalidInput("Invalid host spec '{0}'!".format(spec))
    kind, rest = match.groups()
    if kind == "clique":
        return kind, (positive_nonzero_integer(rest),)
    if kind == "biclique":
        parts = rest.split(",")
        if len(parts) != 2:
            raise exceptions.InvalidInput(
                "Invalid biclique spec '{0}'!".format(spec)
            )
        return kind, tuple(positive_nonzero_integer(p) for p in parts)
    return kind, (rest,)
