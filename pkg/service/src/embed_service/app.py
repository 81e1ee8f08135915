"""HTTP surface: GET /health and batched POST /embed."""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException, Response
from pydantic import BaseModel

from .config import from_env
from .encoder import TransformerEncoder


class EmbedRequest(BaseModel):
    texts: list[str]


def create_app(encoder: TransformerEncoder | None = None) -> FastAPI:
    enc = encoder if encoder is not None else TransformerEncoder(from_env())
    app = FastAPI(title="embed-service")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "dim": enc.dim, "model": enc.model_id}

    @app.post("/embed")
    def embed(request: EmbedRequest, response: Response) -> dict:
        if not request.texts:
            raise HTTPException(status_code=400,
                                detail="texts must be a non-empty list")
        try:
            vectors, truncated = enc.encode(request.texts)
        except Exception as exc:
            raise HTTPException(status_code=500,
                                detail=f"encoding failed: {exc}") from exc
        if any(not math.isfinite(v) for row in vectors for v in row):
            raise HTTPException(status_code=500,
                                detail="encoder produced non-finite values")
        if truncated:
            response.headers["X-Truncated"] = str(truncated)
        return {"dim": enc.dim, "vectors": vectors}

    return app
