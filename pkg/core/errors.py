"""Exception hierarchy shared by the core modules and the CLI."""


class ScmError(Exception):
    """Base class for every pipeline error the CLI reports with exit code 1."""


class ConfigError(ScmError):
    """Bad or missing run configuration (exit code 2)."""


class EmbeddingFormatError(ScmError):
    pass


class LexiconError(ScmError):
    pass


class SubspaceError(ScmError):
    pass


class ValidationError(ScmError):
    pass


class CorpusError(ScmError):
    pass


class FillWordError(CorpusError):
    """The stereotype sentence could not be aligned with its BLANK context."""


class ClusterError(ScmError):
    pass


class ResourceError(ScmError):
    pass


class CounterError(ScmError):
    pass


class VocabularyError(ScmError):
    """None of the requested words has a vector."""
