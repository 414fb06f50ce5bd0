import json
import logging
import traceback
from typing import Any, List, Tuple

from coverideal_lab.errors import CoverIdealError

logger = logging.getLogger(__name__)


class ParseError(CoverIdealError, ValueError):
    """An input file could not be turned into a model."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def read_json(path: str) -> Any:
    """
    Load a JSON document.

    Args:
        path: File to read

    Returns:
        The decoded document
    """
    try:
        with open(path, "r") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(path, str(e)) from e


def numbered_lines(path: str) -> List[Tuple[int, str]]:
    """Non-empty lines with `#` comments stripped, paired with their 1-based line number."""
    try:
        with open(path, "r") as f:
            raw = f.readlines()
    except OSError as e:
        raise ParseError(path, str(e)) from e
    lines = []
    for number, line in enumerate(raw, start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def read_lines(path: str) -> List[str]:
    return [line for _, line in numbered_lines(path)]


def write_json(path: str, document: Any) -> None:
    with open(path, "w") as f:
        json.dump(document, f, indent=2)
        f.write("\n")


def error_trace(e: Exception) -> None:
    logger.debug("".join(traceback.format_exception(type(e), e, e.__traceback__)))
