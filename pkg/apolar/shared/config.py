"""apolar/shared/config.py"""

from __future__ import annotations
import os
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv, find_dotenv

# Pick up a local .env without overriding variables already exported by the shell
load_dotenv(find_dotenv(usecwd=True), override=False)


PERMANENT_LIMIT_DEFAULT = 10
EXPAND_LIMIT_DEFAULT = 1_000_000
DIFF_LIMIT_DEFAULT = 200_000
MINOR_MAX_D_DEFAULT = 14
HANKEL_MAX_D_DEFAULT = 24


def _get_int(name: str, default: int) -> int:
    val = os.getenv(name, str(default))
    try:
        out = int(str(val).strip())
    except Exception:
        return default
    return out if out > 0 else default


def get_permanent_limit() -> int:
    return _get_int("APOLAR_PERMANENT_LIMIT", PERMANENT_LIMIT_DEFAULT)


def get_expand_limit() -> int:
    return _get_int("APOLAR_EXPAND_LIMIT", EXPAND_LIMIT_DEFAULT)


def get_diff_limit() -> int:
    return _get_int("APOLAR_DIFF_LIMIT", DIFF_LIMIT_DEFAULT)


def get_minor_max_d() -> int:
    return _get_int("APOLAR_MINOR_MAX_D", MINOR_MAX_D_DEFAULT)


def get_hankel_max_d() -> int:
    return _get_int("APOLAR_HANKEL_MAX_D", HANKEL_MAX_D_DEFAULT)


def get_default_modulus() -> Optional[int]:
    val = (os.getenv("APOLAR_MODULUS", "") or "").strip()
    if not val or val.lower() in ("none", "exact", "0"):
        return None
    try:
        return int(val)
    except Exception:
        return None


def debug_enabled() -> bool:
    return (os.getenv("APOLAR_DEBUG", "0") or "0").strip() == "1"


@dataclass
class EngineOptions:
    """Knobs shared by every engine entry point."""
    modulus: Optional[int] = field(default_factory=get_default_modulus)
    verbose: bool = False
    compile_operators: bool = True    # hankel engine: precompiled operators vs. per-gate DP
    check_nonnegative: bool = True    # squarefree detection: expand and check when cheap

    permanent_limit: int = field(default_factory=get_permanent_limit)
    expand_limit: int = field(default_factory=get_expand_limit)
    diff_limit: int = field(default_factory=get_diff_limit)
    minor_max_d: int = field(default_factory=get_minor_max_d)
    hankel_max_d: int = field(default_factory=get_hankel_max_d)
    nonnegative_check_limit: int = 20_000

    @property
    def mode(self):
        from .scalars import ScalarMode
        return ScalarMode.of(self.modulus)
