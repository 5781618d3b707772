from .version import __version__  # NOQA
