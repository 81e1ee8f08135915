"""Startup configuration, all via EMBED_SERVICE_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass

_PREFIX = "EMBED_SERVICE_"


@dataclass(frozen=True)
class Settings:
    model_id: str = "sentence-transformers/all-MiniLM-L6-v2"
    pooling: str = "mean"        # mean | cls
    max_length: int = 512        # longer inputs are truncated, not rejected
    host: str = "127.0.0.1"
    port: int = 8100

    def __post_init__(self):
        if self.pooling not in ("mean", "cls"):
            raise ValueError(f"pooling must be 'mean' or 'cls', got "
                             f"{self.pooling!r}")
        if self.max_length <= 0:
            raise ValueError("max_length must be positive")


def from_env() -> Settings:
    return Settings(
        model_id=os.environ.get(_PREFIX + "MODEL",
                                Settings.model_id),
        pooling=os.environ.get(_PREFIX + "POOLING", Settings.pooling),
        max_length=int(os.environ.get(_PREFIX + "MAX_LENGTH",
                                      Settings.max_length)),
        host=os.environ.get(_PREFIX + "HOST", Settings.host),
        port=int(os.environ.get(_PREFIX + "PORT", Settings.port)),
    )
