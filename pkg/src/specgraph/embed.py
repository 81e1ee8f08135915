"""Embedding providers: a deterministic built-in structural embedder and a
client for an external encoder service, behind one interface.

Vectors are L2-normalized; empty or whitespace-only text maps to the zero
vector so contentless artifacts never spuriously match anything.
"""

from __future__ import annotations

import json
import math
import os
import time
from dataclasses import dataclass
from typing import Protocol, Sequence

import httpx
import numpy as np

from .graph import ArtifactGraph, linearize

NORM_TOL = 1e-6


class EmbedError(Exception):
    pass


class ServiceTransportError(EmbedError):
    """Request could not be completed after the configured retries."""


class ServiceProtocolError(EmbedError):
    """The service answered, but the payload violates the contract."""


@dataclass(frozen=True)
class EmbeddingVector:
    dim: int
    values: tuple[float, ...]
    provider_id: str
    origin: str = ""

    def validate(self) -> None:
        if len(self.values) != self.dim:
            raise EmbedError("value count %d != dim %d"
                             % (len(self.values), self.dim))
        if not all(math.isfinite(v) for v in self.values):
            raise EmbedError("non-finite component in vector for %r"
                             % self.origin)
        norm = math.sqrt(sum(v * v for v in self.values))
        if norm != 0.0 and abs(norm - 1.0) > NORM_TOL:
            raise EmbedError("vector norm %.9f is neither 0 nor 1" % norm)


class EmbeddingProvider(Protocol):
    id: str
    dim: int

    def encode(self, texts: Sequence[str]) -> list[list[float]]:
        """Raw (not yet normalized) vectors, one per text, in order."""
        ...


# 64-bit FNV-1a with a fixed seed xor'd into the offset basis. Documented
# here because the bucket layout (and therefore every persisted vector)
# depends on it; do not change without re-embedding.
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_HASH_SEED = 0x9E3779B97F4A7C15
_MASK = 0xFFFFFFFFFFFFFFFF


def hash_token(token: str) -> int:
    h = _FNV_OFFSET ^ _HASH_SEED
    for byte in token.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK
    return h


class StructuralEmbedder:
    """Feature-hashing bag of node tokens and adjacent-token bigrams.

    Each whitespace-separated "kind:label" token, and each bigram of
    neighbours, adds weight 1 to bucket hash(token) mod dim. Bigrams make
    the vector order-sensitive; with bigrams off, any permutation of the
    same tokens embeds identically.
    """

    def __init__(self, dim: int = 256, bigrams: bool = True):
        if dim <= 0:
            raise ValueError("dim must be positive")
        self.dim = dim
        self.bigrams = bigrams
        self.id = "structural-fnv1a-d%d%s" % (dim, "" if bigrams else "-uni")

    def encode(self, texts: Sequence[str]) -> list[list[float]]:
        return [self._encode_one(t) for t in texts]

    def _encode_one(self, text: str) -> list[float]:
        weights = np.zeros(self.dim, dtype=np.float64)
        tokens = text.split()
        for token in tokens:
            weights[hash_token(token) % self.dim] += 1.0
        if self.bigrams:
            for a, b in zip(tokens, tokens[1:]):
                weights[hash_token(a + " " + b) % self.dim] += 1.0
        return weights.tolist()


class ServiceEmbedder:
    """Client for the HTTP embedding service; batched, with exponential
    backoff on transport failures and typed errors on contract violations."""

    def __init__(self, endpoint: str, *, retries: int = 3,
                 backoff: float = 0.5, timeout: float = 60.0,
                 client: httpx.Client | None = None):
        self.endpoint = endpoint.rstrip("/")
        self.retries = retries
        self.backoff = backoff
        self._client = client or httpx.Client(timeout=timeout)
        health = self._request("GET", self.endpoint + "/health")
        if health.get("status") != "ok" or "dim" not in health:
            raise ServiceProtocolError(f"bad health response: {health}")
        self.dim = int(health["dim"])
        self.id = "service:%s" % health.get("model", "unknown")

    def encode(self, texts: Sequence[str]) -> list[list[float]]:
        if not texts:
            return []
        payload = {"texts": list(texts)}
        body = self._request("POST", self.endpoint + "/embed", json=payload)
        vectors = body.get("vectors")
        dim = body.get("dim")
        if not isinstance(vectors, list) or len(vectors) != len(texts):
            raise ServiceProtocolError(
                "expected %d vectors, got %s" % (
                    len(texts),
                    len(vectors) if isinstance(vectors, list) else "none"))
        if dim != self.dim:
            raise ServiceProtocolError(
                f"service dim changed: handshake {self.dim}, response {dim}")
        for vec in vectors:
            if len(vec) != self.dim:
                raise ServiceProtocolError(
                    "vector length %d != dim %d" % (len(vec), self.dim))
            if not all(math.isfinite(v) for v in vec):
                raise ServiceProtocolError("non-finite value in response")
        return [list(map(float, vec)) for vec in vectors]

    def _request(self, method: str, url: str, **kwargs) -> dict:
        delay = self.backoff
        last_exc: Exception | None = None
        for attempt in range(self.retries + 1):
            try:
                resp = self._client.request(method, url, **kwargs)
            except httpx.HTTPError as exc:
                last_exc = exc
            else:
                if resp.status_code == 200:
                    return resp.json()
                if resp.status_code < 500:
                    raise ServiceProtocolError(
                        f"{method} {url} -> {resp.status_code}: {resp.text[:200]}")
                last_exc = ServiceTransportError(
                    f"{method} {url} -> {resp.status_code}")
            if attempt < self.retries:
                time.sleep(delay)
                delay *= 2
        raise ServiceTransportError(
            f"{method} {url} failed after {self.retries + 1} attempts: {last_exc}")


def structural_embed(text: str, dim: int = 256) -> EmbeddingVector:
    """One-shot embedding with the built-in provider at its defaults."""
    return embed_text(StructuralEmbedder(dim=dim), text)


def service_embed(endpoint: str, texts: Sequence[str],
                  **kwargs) -> list[EmbeddingVector]:
    """One-shot batched embedding via the service provider."""
    provider = ServiceEmbedder(endpoint, **kwargs)
    return [embed_text(provider, t) for t in texts]


def embed_text(provider: EmbeddingProvider, text: str,
               origin: str = "") -> EmbeddingVector:
    if not text.strip():
        return EmbeddingVector(provider.dim, (0.0,) * provider.dim,
                               provider.id, origin)
    raw = provider.encode([text])[0]
    return _normalized(raw, provider, origin)


def embed_many(provider: EmbeddingProvider, texts: Sequence[str],
               origins: Sequence[str] | None = None) -> list[EmbeddingVector]:
    """Batched embed_text: empty texts short-circuit to the zero vector and
    are never sent to the provider."""
    origins = list(origins) if origins is not None else [""] * len(texts)
    out: list[EmbeddingVector | None] = [None] * len(texts)
    pending: list[int] = []
    for idx, text in enumerate(texts):
        if not text.strip():
            out[idx] = EmbeddingVector(provider.dim, (0.0,) * provider.dim,
                                       provider.id, origins[idx])
        else:
            pending.append(idx)
    if pending:
        raws = provider.encode([texts[i] for i in pending])
        for idx, raw in zip(pending, raws):
            out[idx] = _normalized(raw, provider, origins[idx])
    return out  # type: ignore[return-value]


def embed_graph(provider: EmbeddingProvider, graph: ArtifactGraph,
                ) -> EmbeddingVector:
    return embed_text(provider, linearize(graph), origin=graph.origin)


def _normalized(raw: Sequence[float], provider: EmbeddingProvider,
                origin: str) -> EmbeddingVector:
    arr = np.asarray(raw, dtype=np.float64)
    if arr.shape != (provider.dim,):
        raise EmbedError("provider %s returned shape %s, want (%d,)"
                         % (provider.id, arr.shape, provider.dim))
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        values = tuple(0.0 for _ in range(provider.dim))
    else:
        values = tuple(float(v) for v in arr / norm)
    vec = EmbeddingVector(provider.dim, values, provider.id, origin)
    vec.validate()
    return vec


def save_embeddings(path: str | os.PathLike,
                    vectors: dict[str, EmbeddingVector]) -> None:
    """Persist as {"provider", "dim", "vectors": {path: [floats]}} with keys
    sorted, so identical inputs serialize to identical bytes."""
    if not vectors:
        raise EmbedError("nothing to save")
    provider_ids = {v.provider_id for v in vectors.values()}
    dims = {v.dim for v in vectors.values()}
    if len(provider_ids) != 1 or len(dims) != 1:
        raise EmbedError("mixed providers or dims: %s / %s"
                         % (provider_ids, dims))
    doc = {
        "provider": next(iter(provider_ids)),
        "dim": next(iter(dims)),
        "vectors": {key: list(vectors[key].values) for key in sorted(vectors)},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_embeddings(path: str | os.PathLike) -> dict[str, EmbeddingVector]:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    provider, dim = doc["provider"], int(doc["dim"])
    out = {}
    for key, values in doc["vectors"].items():
        vec = EmbeddingVector(dim, tuple(float(v) for v in values),
                              provider, key)
        vec.validate()
        out[key] = vec
    return out
