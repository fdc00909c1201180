"""Exception types shared across the workbench."""


class TextbenchError(Exception):
    """Base class for all workbench errors."""

    code = "internal"


class ParseError(TextbenchError):
    """A lexicon or fixture file line could not be parsed."""

    code = "parse_error"

    def __init__(self, path, line_no, reason):
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{self.path}:{line_no}: {reason}")


class MissingFile(TextbenchError):
    code = "missing_file"


class ModelMissing(TextbenchError):
    """Tagger model file is absent."""

    code = "model_missing"


class EmptyCorpus(TextbenchError):
    code = "empty_corpus"


class ZeroVector(TextbenchError):
    """Cosine similarity is undefined for a zero-norm vector."""

    code = "zero_vector"


class UnknownProfile(TextbenchError):
    code = "unknown_profile"


class OverlapError(TextbenchError):
    """Conflicting speech annotations over the same span."""

    code = "overlap"


class SpanOutOfRange(TextbenchError):
    code = "span_out_of_range"


class EmptyInput(TextbenchError):
    code = "empty_input"


class TransientLlmError(TextbenchError):
    """Retryable failure from a chat-completion backend."""

    code = "llm_transient"


class LlmUnavailable(TextbenchError):
    """All retry attempts against the chat-completion backend failed."""

    code = "llm_unavailable"


class BuildInProgress(TextbenchError):
    """A corpus profile build for the same name is already running."""

    code = "build_in_progress"
