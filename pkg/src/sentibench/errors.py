"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line runner can map
failures onto its documented exit statuses without a lookup table.
"""


class SentibenchError(Exception):
    exit_code = 2


class UsageError(SentibenchError):
    """Bad command-line usage, unknown preset, or inconsistent config."""

    exit_code = 1


class ConfigError(UsageError):
    pass


class DataError(SentibenchError):
    """Problems with input files: layout, encoding, syntax."""

    exit_code = 2


class CorpusLayoutError(DataError):
    pass


class IngestionError(DataError):
    pass


class AnnotationParseError(DataError):
    def __init__(self, message, line=None, path=None):
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{':'.join(where)}: {message}"
        super().__init__(message)
        self.line = line
        self.path = path


class TreeValidityError(AnnotationParseError):
    pass


class AlignmentError(DataError):
    def __init__(self, missing):
        self.missing = sorted(missing)
        shown = ", ".join(self.missing[:20])
        more = "" if len(self.missing) <= 20 else f" (+{len(self.missing) - 20} more)"
        super().__init__(f"missing annotation files for: {shown}{more}")


class LexiconParseError(DataError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VocabularyError(DataError):
    pass


class InputError(DataError):
    """Mismatched or malformed inputs to numerical routines."""


class DimensionError(InputError):
    pass


class FoldError(DataError):
    pass


class TrainingError(SentibenchError):
    exit_code = 3


class ConvergenceError(TrainingError):
    def __init__(self, message, kkt_violations=None):
        super().__init__(message)
        self.kkt_violations = kkt_violations
