"""
Verification Report Caching
Exhaustive sweeps at n = 9, 10 take minutes; their reports are stored as JSON
so repeated CLI runs can reuse them.
"""

import hashlib
import json
import os
from datetime import datetime, timedelta
from typing import Any, Callable, Dict, Optional

from pydantic import ValidationError

from .config import APP_VERSION, REPORT_CACHE_DURATION_DAYS
from .enumeration import VerificationReport
from .log import log, warn


def ensure_cache_dir(cache_dir: str) -> None:
    os.makedirs(cache_dir, exist_ok=True)


def get_cache_key(kind: str, n: int, k: int, extra_params: Optional[dict] = None) -> str:
    """
    MD5 key over everything that affects a report

    Args:
        kind: Report kind (e.g. 'verify')
        n, k: Instance
        extra_params: Additional parameters that affect the result

    The package version is part of the key, so reports from another release
    are never reused.
    """
    key_parts = [kind, str(n), str(k), APP_VERSION]
    if extra_params:
        key_parts.append(json.dumps(extra_params, sort_keys=True))
    return hashlib.md5("_".join(key_parts).encode()).hexdigest()


def _cache_file(cache_dir: str, kind: str, n: int, k: int) -> str:
    return os.path.join(cache_dir, f"{get_cache_key(kind, n, k)}.json")


def get_cached_report(cache_dir: str, n: int, k: int, kind: str = "verify") -> Optional[VerificationReport]:
    """
    Retrieve a cached report if available and not expired

    Unreadable or stale entries count as misses.
    """
    ensure_cache_dir(cache_dir)
    cache_file = _cache_file(cache_dir, kind, n, k)
    if not os.path.exists(cache_file):
        return None

    file_age = datetime.now() - datetime.fromtimestamp(os.path.getmtime(cache_file))
    if file_age > timedelta(days=REPORT_CACHE_DURATION_DAYS):
        log("cache", f"expired {kind} n={n} k={k}")
        os.remove(cache_file)
        return None

    try:
        with open(cache_file, "r", encoding="utf-8") as f:
            cached_data = json.load(f)
        report = VerificationReport.model_validate(cached_data["result"])
    except (OSError, KeyError, ValueError, ValidationError) as e:
        warn(f"cache read error: {e}")
        return None
    log("cache", f"hit for {kind} n={n} k={k}")
    return report


def save_report(cache_dir: str, report: VerificationReport, kind: str = "verify") -> None:
    ensure_cache_dir(cache_dir)
    cache_file = _cache_file(cache_dir, kind, report.n, report.k)
    try:
        with open(cache_file, "w", encoding="utf-8") as f:
            json.dump({
                "result": report.model_dump(mode="json"),
                "cached_at": datetime.now().isoformat(),
                "kind": kind,
                "n": report.n,
                "k": report.k,
                "version": APP_VERSION,
            }, f, indent=2)
        log("cache", f"saved {kind} n={report.n} k={report.k}")
    except OSError as e:
        warn(f"cache write error: {e}")


def cached_verification(
    n: int,
    k: int,
    compute: Callable[[], VerificationReport],
    cache_dir: Optional[str] = None,
    force_refresh: bool = False,
) -> VerificationReport:
    """
    Wrapper for verify_turan with optional caching

    Example:
        report = cached_verification(9, 2, lambda: verify_turan(9, 2), cache_dir=".kp3-cache")
    """
    if cache_dir is None:
        return compute()

    if not force_refresh:
        cached = get_cached_report(cache_dir, n, k)
        if cached is not None:
            return cached

    log("cache", f"running fresh verification n={n} k={k}")
    report = compute()
    save_report(cache_dir, report)
    return report


def clear_cache(cache_dir: str, n: Optional[int] = None, k: Optional[int] = None) -> int:
    """
    Remove cache entries, optionally only those for one n and/or k

    Returns:
        Number of entries removed
    """
    ensure_cache_dir(cache_dir)
    count = 0
    for name in os.listdir(cache_dir):
        file_path = os.path.join(cache_dir, name)
        if n is not None or k is not None:
            try:
                with open(file_path, "r", encoding="utf-8") as f:
                    data = json.load(f)
            except (OSError, ValueError):
                continue
            if (n is not None and data.get("n") != n) or (k is not None and data.get("k") != k):
                continue
        os.remove(file_path)
        count += 1
    log("cache", f"cleared {count} entries")
    return count


def get_cache_stats(cache_dir: str) -> Dict[str, Any]:
    ensure_cache_dir(cache_dir)
    total_files = 0
    total_size = 0
    by_kind: Dict[str, int] = {}

    for name in os.listdir(cache_dir):
        file_path = os.path.join(cache_dir, name)
        total_files += 1
        total_size += os.path.getsize(file_path)
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                kind = json.load(f).get("kind", "unknown")
        except (OSError, ValueError):
            kind = "unreadable"
        by_kind[kind] = by_kind.get(kind, 0) + 1

    return {
        "total_entries": total_files,
        "total_size_mb": round(total_size / (1024 * 1024), 2),
        "by_kind": by_kind,
    }
