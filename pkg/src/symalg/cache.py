"""Byte-level result cache for CLI reports.

Reports are pure functions of their run configuration, so they are cached
by the hash of the canonical configuration JSON.  A cache hit returns the
stored bytes; recomputation with --no-cache additionally diffs against any
stored entry and flags a mismatch.
"""

import hashlib
import json
import os
from pathlib import Path

ENV_VAR = "SYMALG_CACHE_DIR"


def cache_dir(override=None):
    if override:
        return Path(override)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "symalg"


def config_key(config):
    blob = json.dumps(config, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def lookup(key, directory):
    path = Path(directory) / f"{key}.json"
    if path.is_file():
        return path.read_bytes()
    return None


def store(key, data, directory):
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    (d / f"{key}.json").write_bytes(data)
