"""
Error handling policies for corpus processing.

A census reads many graph6 lines; a policy decides what happens when one of
them cannot be decoded or processed. The policy either re-raises (stopping
the run) or records the failure and returns None so the run continues.
"""

import sys
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional


class ErrorPolicy(ABC):
    """
    Base class for error handling policies.

    Subclasses implement different strategies for handling errors raised
    while decoding or analysing a single input line.
    """

    @abstractmethod
    def handle(self, error: Exception, lineno: int, text: str) -> Optional[Any]:
        """
        Handle an error raised for one input line.

        Args:
            error: The exception that was raised
            lineno: 1-based line number in the input stream
            text: The offending line, stripped

        Returns:
            None to skip the line and continue, or re-raises to stop.
        """
        pass

    @property
    def error_count(self) -> int:
        return 0


class FailFastPolicy(ErrorPolicy):
    """
    Policy that immediately re-raises any error, stopping the run.

    Useful when a corpus is expected to be clean and a partial census
    would be misleading.
    """

    def handle(self, error: Exception, lineno: int, text: str) -> Optional[Any]:
        """Re-raise the error immediately."""
        raise error


class _RecordingPolicy(ErrorPolicy):
    def __init__(self) -> None:
        self.errors: List[Dict[str, Any]] = []

    def _record(self, error: Exception, lineno: int, text: str) -> Dict[str, Any]:
        record = {
            "line": lineno,
            "text": text,
            "error": error,
            "error_type": type(error).__name__,
            "error_message": str(error),
        }
        self.errors.append(record)
        return record

    @property
    def error_count(self) -> int:
        return len(self.errors)

    def get_statistics(self) -> dict:
        """
        Get statistics about errors encountered.

        Returns:
            Dictionary with error counts and details
        """
        by_type: Dict[str, int] = {}
        for record in self.errors:
            by_type[record["error_type"]] = by_type.get(record["error_type"], 0) + 1
        return {
            "total_errors": len(self.errors),
            "by_type": by_type,
            "lines": [record["line"] for record in self.errors],
            "errors": self.errors,
        }


class ContinueOnErrorsPolicy(_RecordingPolicy):
    """
    Policy that reports errors and continues the run.

    Errors are collected for later inspection. This is the census default:
    malformed lines are reported with their line numbers and skipped.
    """

    def __init__(self, verbose: bool = True):
        """
        Initialize the policy.

        Args:
            verbose: If True, print a warning to stderr for each error
        """
        super().__init__()
        self.verbose = verbose

    def handle(self, error: Exception, lineno: int, text: str) -> Optional[Any]:
        self._record(error, lineno, text)
        if self.verbose:
            print(f"WARNING: line {lineno}: {type(error).__name__}: {error}", file=sys.stderr)
        return None


class CollectErrorsPolicy(_RecordingPolicy):
    """
    Policy that collects all errors without printing, for batch processing.
    """

    def handle(self, error: Exception, lineno: int, text: str) -> Optional[Any]:
        self._record(error, lineno, text)
        return None


class ThresholdPolicy(_RecordingPolicy):
    """
    Policy that tolerates errors up to a threshold, then fails fast.

    Useful when a few bad lines are expected but many indicate the wrong
    input format altogether.
    """

    def __init__(self, max_errors: int = 10, verbose: bool = True):
        """
        Initialize threshold policy.

        Args:
            max_errors: Maximum errors to tolerate before failing
            verbose: If True, print warnings for errors
        """
        super().__init__()
        self.max_errors = max_errors
        self.verbose = verbose

    def handle(self, error: Exception, lineno: int, text: str) -> Optional[Any]:
        self._record(error, lineno, text)
        if len(self.errors) > self.max_errors:
            raise RuntimeError(f"Error threshold exceeded ({self.max_errors} errors)") from error
        if self.verbose:
            print(
                f"WARNING: line {lineno}: {error} ({len(self.errors)}/{self.max_errors} errors)",
                file=sys.stderr,
            )
        return None
