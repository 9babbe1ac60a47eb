import logging
import os
import sys

from src.config import LOG_FILE, LOG_LEVEL

_ROOT = "rigidity"
_configured = False


def _configure():
    global _configured
    root = logging.getLogger(_ROOT)
    root.setLevel(LOG_LEVEL.upper())
    formatter = logging.Formatter("[%(asctime)s] %(levelname)s %(name)s: %(message)s")

    if LOG_FILE:
        log_dir = os.path.dirname(LOG_FILE)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(LOG_FILE)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(logging.WARNING)
    root.addHandler(stream_handler)
    _configured = True


def get_logger(name: str) -> logging.Logger:
    if not _configured:
        _configure()
    return logging.getLogger(f"{_ROOT}.{name}")


def set_level(level: str | int):
    if not _configured:
        _configure()
    logging.getLogger(_ROOT).setLevel(level)
