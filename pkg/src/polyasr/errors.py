"""Shared exception types."""


class PolyasrError(Exception):
    """Base class for toolkit errors."""


class LexiconError(PolyasrError):
    """Malformed lexicon/inventory data or unknown phone symbols."""


class OovError(PolyasrError):
    """A word outside the closed vocabulary was encountered."""

    def __init__(self, word, context=""):
        self.word = word
        msg = f"out-of-vocabulary word {word!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class DataError(PolyasrError):
    """Invalid corpus/manifest/feature data."""


class ModelError(PolyasrError):
    """Inconsistent model, state map or feature configuration."""


class DecodeError(PolyasrError):
    """Decoding or alignment is impossible for the given inputs."""


class ConfigError(PolyasrError):
    """Invalid experiment configuration (CLI exit code 2)."""


class StageError(PolyasrError):
    """A pipeline stage failed (CLI exit code 3)."""

    def __init__(self, stage, message, utterance=None):
        self.stage = stage
        self.utterance = utterance
        ctx = f" [utterance {utterance}]" if utterance else ""
        super().__init__(f"stage '{stage}' failed{ctx}: {message}")
