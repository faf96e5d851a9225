"""
Result Output Manager Module

This module serializes every result the toolkit emits. All CSV rows, header
metadata and plot scripts go through one ResultManager so concurrent sweep
workers never interleave their output.

Author: Sasank Tanikella
Created: 10-16-2026
"""

import csv
import io
import json
import logging
import os
import sys
import threading
from enum import Enum
from typing import Any, Iterable, List, Optional, Sequence, TextIO

import numpy as np
from pydantic import BaseModel

from app.simulation_config import TOOL_NAME, TOOL_VERSION

logger = logging.getLogger(__name__)


class ComplexEncoder(json.JSONEncoder):
    """
    Custom JSON encoder for numeric and model objects.

    Extends the standard JSON encoder to serialize complex numbers as
    [real, imag] pairs, numpy scalars and arrays as plain lists, enums by
    value and pydantic models through model_dump.
    """
    def default(self, obj: Any) -> Any:
        """
        Convert non-standard objects to JSON-compatible values.

        Args:
            obj: Object to be serialized

        Returns:
            Any: JSON-compatible representation
        """
        if isinstance(obj, complex):
            return [obj.real, obj.imag]
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.generic):
            return obj.item()
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")
        return super().default(obj)


def format_value(value: Any) -> str:
    """
    Renders one CSV cell.

    Floats use 17 significant digits in scientific notation; missing values
    are written as nan.
    """
    if value is None:
        return "nan"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, float, np.integer, np.floating)):
        number = float(value)
        if np.isnan(number):
            return "nan"
        return f"{number:.16e}"
    return str(value)


def params_echo(params: Any) -> str:
    """One-line JSON echo of a parameter model."""
    return json.dumps(params, cls=ComplexEncoder, separators=(",", ":"), sort_keys=True)


class ResultManager:
    """
    Single writer for CSV tables, plot scripts and text reports.

    Manages one lock shared by every writer call so rows produced by sweep
    workers reach the destination in one piece.
    """

    def __init__(self):
        """Initialize the manager with its output lock."""
        self._lock = threading.Lock()

    def header_lines(self, scenario: Optional[str], params: Any, columns: Sequence[str],
                     notes: Optional[str] = None) -> List[str]:
        """
        Builds the '#' metadata block.

        Args:
            scenario: Probe scenario name or None
            params: Parameter model echoed as JSON
            columns: Column names of the table
            notes: Optional free-text metadata

        Returns:
            List[str]: Header lines including the leading '# '
        """
        lines = [f"# {TOOL_NAME} {TOOL_VERSION}"]
        if scenario is not None:
            lines.append(f"# scenario: {scenario}")
        lines.append(f"# params: {params_echo(params)}")
        lines.append(f"# columns: {', '.join(columns)}")
        if notes:
            lines.extend(f"# note: {line}" for line in notes.splitlines())
        return lines

    def render_csv(self, header: Sequence[str], columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Renders header, column row and data rows to one LF-terminated string."""
        buffer = io.StringIO()
        for line in header:
            buffer.write(line + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
        return buffer.getvalue()

    def emit(self, text: str, path: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
        """
        Writes text to a file or a stream under the output lock.

        Args:
            text: Content to write
            path: Destination file; parent directories are created
            stream: Destination stream when no path is given (default stdout)
        """
        with self._lock:
            if path is not None:
                directory = os.path.dirname(path)
                if directory:
                    os.makedirs(directory, exist_ok=True)
                with open(path, "w", encoding="utf-8", newline="\n") as handle:
                    handle.write(text)
                logger.info("wrote %s", path)
                return
            target = stream or sys.stdout
            target.write(text)
            target.flush()

    def write_csv(self, header: Sequence[str], columns: Sequence[str], rows: Iterable[Sequence[Any]],
                  path: Optional[str] = None, stream: Optional[TextIO] = None) -> str:
        """Renders and emits a CSV table; returns the rendered text."""
        text = self.render_csv(header, columns, rows)
        self.emit(text, path=path, stream=stream)
        return text


# Global instance of the result manager
result_manager = ResultManager()
