"""
Utility functions for the CACD toolkit
"""

import json
import logging
import os
import sys
from fractions import Fraction

from config.settings import DECIMAL_PLACES, LOG_DATE_FORMAT, LOG_FORMAT, WORKERS_ENV_VAR
from core.errors import InputFormatError

logger = logging.getLogger(__name__)


def create_output_directory(output_dir):
    """
    Create output directory if it doesn't exist.

    Parameters:
    output_dir (str): Path to output directory
    """
    if not os.path.exists(output_dir):
        os.makedirs(output_dir)
        logger.info("Created directory: %s", output_dir)


def configure_logging(verbose=False):
    """
    Install a single stderr handler on the root logger.

    Parameters:
    verbose (bool): INFO level when True, WARNING otherwise
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    root.addHandler(handler)
    root.setLevel(logging.INFO if verbose else logging.WARNING)


def resolve_worker_count(requested=None):
    """
    Number of worker processes for parallel sweeps.

    Parameters:
    requested (int): Explicit count; overrides the environment

    Returns:
    int: requested, else the CACD_WORKERS variable, else the CPU count
    """
    if requested is not None:
        return max(1, int(requested))
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            logger.warning("ignoring non-integer %s=%r", WORKERS_ENV_VAR, raw)
    return os.cpu_count() or 1


def parse_rational(value):
    """
    Parse an exact rational from JSON input.

    Parameters:
    value: int, Fraction, or a string such as "15/8", "3.66" or "7"

    Returns:
    Fraction: The exact value
    """
    if isinstance(value, bool):
        raise InputFormatError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(f"not a rational: {value!r}") from None
    if isinstance(value, float):
        # JSON floats are read exactly via load_json; a raw float still goes through its repr
        return Fraction(repr(value))
    raise InputFormatError(f"not a rational: {value!r}")


def format_rational(value):
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def rational_to_decimal(value, places=DECIMAL_PLACES):
    return round(float(value), places)


def load_json(path):
    """
    Read a JSON file with decimal literals parsed as exact fractions.

    Parameters:
    path (str): File path

    Returns:
    object: Parsed JSON
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})") from None


def dump_json(data, path=None):
    """
    Serialize `data` as indented JSON, to `path` when given.

    Returns:
    str: The JSON text
    """
    text = json.dumps(data, indent=2, sort_keys=False)
    if path is not None:
        directory = os.path.dirname(path)
        if directory:
            create_output_directory(directory)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text + "\n")
    return text


def print_report_summary(frame, name="Report", stream=None):
    """
    Print a short summary of a sweep report table.

    Parameters:
    frame (DataFrame): One row per sweep statistic
    name (str): Heading
    """
    stream = stream or sys.stderr
    print(f"\n{name} Summary:", file=stream)
    print(frame.to_string(index=False), file=stream)
