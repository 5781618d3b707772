class BroomlabException(Exception):
    pass


class InvalidInput(BroomlabException):

    def __init__(self, msg):
        super(InvalidInput, self).__init__(msg)


class InvalidParameter(BroomlabException):

    def __init__(self, msg):
        super(InvalidParameter, self).__init__(msg)


class SizeGuardError(InvalidParameter):

    def __init__(self, what, size, limit):
        msg = "{0} of size {1} exceeds the guard {2}!".format(
            what, size, limit
        )
        super(SizeGuardError, self).__init__(msg)


class PreconditionViolation(BroomlabException):

    def __init__(self, msg):
        super(PreconditionViolation, self).__init__(msg)


class ImproperColoring(PreconditionViolation):

    def __init__(self, vertex):
        self.vertex = vertex
        msg = "Coloring is not proper at vertex {0}!".format(vertex)
        super(ImproperColoring, self).__init__(msg)


class FormatError(BroomlabException):
    """Loader failure; `code` is stable and machine readable."""

    kind = "file"

    def __init__(self, code, lineno, detail):
        self.code = code
        self.lineno = lineno
        msg = "Invalid {0} ({1}) at line {2}: {3}".format(
            self.kind, code, lineno, detail
        )
        super(FormatError, self).__init__(msg)


class ColoringFormatError(FormatError):
    kind = "coloring file"


class CertificateFormatError(FormatError):
    kind = "certificate file"


class PruneUnsound(BroomlabException):

    def __init__(self, rule, depth):
        msg = "Audit found a witness below a node pruned by '{0}' " \
              "at depth {1}!".format(rule, depth)
        super(PruneUnsound, self).__init__(msg)


class CertificateMismatch(BroomlabException):

    def __init__(self, msg):
        super(CertificateMismatch, self).__init__(msg)


class NondeterministicExhaustion(InvalidParameter):

    def __init__(self, workers):
        msg = "Parallel witness hunt with {0} workers found no witness; " \
              "exhaustion certificates need a single worker!".format(workers)
        super(NondeterministicExhaustion, self).__init__(msg)
