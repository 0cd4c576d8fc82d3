# apolar/shared/trace.py
"""
Tagged progress output. Lines look like `[hankel] compiled 5 operators`, go to stderr,
and only appear when the caller asked for verbose output or APOLAR_DEBUG=1.
"""
from __future__ import annotations
import logging
import sys
from typing import Optional

from .config import debug_enabled

logger = logging.getLogger("apolar")


def tracing(verbose: Optional[bool] = None) -> bool:
    return bool(verbose) or debug_enabled()


def trace(tag: str, message: str, verbose: Optional[bool] = None) -> None:
    if tracing(verbose):
        print(f"[{tag}] {message}", file=sys.stderr)


def warn(tag: str, message: str) -> None:
    logger.warning("[%s] %s", tag, message)
