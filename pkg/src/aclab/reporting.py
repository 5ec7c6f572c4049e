"""Canonical JSON, digests, run manifests and the on-disk result cache."""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__

CACHE_ENV = "AC_LAB_CACHE"


def _default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "as_dict"):
        return obj.as_dict()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _clean(obj):
    if isinstance(obj, float) and math.isinf(obj):
        return "infinite"
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def canonical_json(obj, indent=None) -> str:
    """Sorted-key JSON; identical inputs give identical bytes."""
    obj = json.loads(json.dumps(obj, default=_default))
    return json.dumps(_clean(obj), sort_keys=True, indent=indent,
                      separators=(",", ":") if indent is None else (",", ": "))


def digest(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


@dataclass
class RunManifest:
    command: list[str]
    spec_hash: str | None
    code_version: str = __version__
    caps: dict = field(default_factory=dict)
    jobs: int = 1
    elapsed: float = 0.0
    output_digest: str = ""
    cache_hit: bool = False

    def as_dict(self):
        return asdict(self)


class ResultCache:
    """JSON payloads keyed by (spec hash, operation, parameters, code version)."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_option(cls, directory=None):
        directory = directory or os.environ.get(CACHE_ENV)
        return cls(directory) if directory else None

    @staticmethod
    def key(spec_hash, operation, params) -> str:
        blob = canonical_json({"spec": spec_hash, "op": operation, "params": params, "version": __version__})
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, key):
        path = self.directory / f"{key}.json"
        if path.exists():
            return json.loads(path.read_text())
        return None

    def put(self, key, payload):
        path = self.directory / f"{key}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(canonical_json(payload))
        tmp.replace(path)
