"""
Tagged diagnostic messages on stderr.

Standard output belongs to command results, so everything here goes to the
diagnostic stream. Info lines only appear in verbose mode; warnings always do.
"""

import sys

_verbose = False


def set_verbose(enabled: bool) -> None:
    global _verbose
    _verbose = bool(enabled)


def is_verbose() -> bool:
    return _verbose


def log(tag: str, message: str) -> None:
    """Print `[tag] message` to stderr when verbose mode is on"""
    if _verbose:
        print(f"[{tag}] {message}", file=sys.stderr)


def warn(message: str) -> None:
    print(f"[!] {message}", file=sys.stderr)
