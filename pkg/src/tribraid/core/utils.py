import json
import logging
import sys
import time
from collections.abc import Generator
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

_EXTRA_FIELDS = ("command", "operation", "duration_ms", "crossings", "quantum_degree")


class JSONFormatter(logging.Formatter):
    """
    Formatter to output logs as JSON Lines.
    """

    def format(self, record: logging.LogRecord) -> str:
        log_obj: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        for key in _EXTRA_FIELDS:
            if hasattr(record, key):
                log_obj[key] = getattr(record, key)

        if record.exc_info:
            log_obj["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_obj)


def setup_logger(
    name: str,
    log_file: Path | None = None,
    level: int | str = logging.INFO,
    json_format: bool = False,
) -> logging.Logger:
    """Configures a logger with standard settings."""
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = False

    if logger.handlers:
        return logger

    # stdout carries command results, so diagnostics go to stderr
    stream_handler = logging.StreamHandler(sys.stderr)
    if json_format:
        stream_handler.setFormatter(JSONFormatter())
    else:
        formatter = logging.Formatter(
            "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
        stream_handler.setFormatter(formatter)

    logger.addHandler(stream_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(JSONFormatter())
        logger.addHandler(file_handler)

    return logger


@contextmanager
def timer(logger: logging.Logger, operation_name: str) -> Generator[dict[str, float], None, None]:
    """
    Context manager to measure execution time.
    Yields a dict that holds `duration_ms` once the block exits.
    """
    record: dict[str, float] = {}
    start_time = time.perf_counter()
    try:
        yield record
    finally:
        duration = (time.perf_counter() - start_time) * 1000
        record["duration_ms"] = round(duration, 3)
        logger.debug(
            f"{operation_name} completed in {duration:.1f} ms",
            extra={"duration_ms": round(duration, 2), "operation": operation_name},
        )


def safe_read_file(path: str | Path) -> str:
    """Safely reads a text file."""
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except Exception as e:
        raise OSError(f"Failed to read file at {path}: {str(e)}") from e


def safe_write_file(path: str | Path, content: str) -> None:
    """Safely writes a text file."""
    try:
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        with open(p, "w", encoding="utf-8") as f:
            f.write(content)
    except Exception as e:
        raise OSError(f"Failed to write file at {path}: {str(e)}") from e


def save_report(command: str, content: str, extension: str = "json") -> Path:
    """
    Writes a run report under REPORT_DIR as <timestamp>_<command>.<ext>.
    """
    from tribraid.core.config import get_settings

    settings = get_settings()
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    path = Path(settings.REPORT_DIR) / f"{timestamp}_{command}.{extension}"
    safe_write_file(path, content)
    return path
