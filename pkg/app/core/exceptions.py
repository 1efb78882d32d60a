# app/core/exceptions.py
from typing import Any, Dict, Optional
import logging

logger = logging.getLogger(__name__)


class ScriptModelException(Exception):
    """Base exception for event-ordering errors"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ValidationException(ScriptModelException):
    """Invalid argument or hyperparameter values"""
    pass


class UsageException(ScriptModelException):
    """Unknown flags, missing subcommand"""
    pass


class DimensionMismatchException(ScriptModelException):
    """Array shapes that disagree with the declared dimensions"""
    pass


class EmptyInputException(ScriptModelException):
    """Empty corpus or pair list where content is required"""
    pass


class FileFormatException(ScriptModelException):
    """Malformed input text; always carries source and line."""
    def __init__(self, message: str, source: str = "<input>", line: Optional[int] = None):
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}", {"source": source, "line": line})
        self.source = source
        self.line = line


class CorpusFormatException(FileFormatException):
    """Corpus, pairs, embeddings or event-list format errors"""
    pass


class ModelFormatException(FileFormatException):
    """Model file format errors"""
    pass


# CLI exit code mapping
USAGE_ERRORS = (UsageException, ValidationException)
DATA_ERRORS = (FileFormatException, DimensionMismatchException, EmptyInputException)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, USAGE_ERRORS):
        logger.error(f"Usage error: {exc}")
        return 1
    if isinstance(exc, DATA_ERRORS) or isinstance(exc, OSError):
        logger.error(f"Data error: {exc}")
        return 2
    raise exc
