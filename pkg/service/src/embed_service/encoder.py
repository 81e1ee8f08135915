"""Transformer encoder with mean or CLS pooling."""

from __future__ import annotations

import torch
from transformers import AutoModel, AutoTokenizer

from .config import Settings


class TransformerEncoder:
    """Wraps a pretrained encoder; raises on load failure so the process
    never starts degraded."""

    def __init__(self, settings: Settings):
        self.model_id = settings.model_id
        self.pooling = settings.pooling
        self.tokenizer = AutoTokenizer.from_pretrained(settings.model_id)
        self.model = AutoModel.from_pretrained(settings.model_id)
        self.model.eval()
        self.dim = int(self.model.config.hidden_size)
        # absolute-position models hard-fail past their position table, so
        # the configured cap can never exceed it
        positions = getattr(self.model.config, "max_position_embeddings", None)
        self.max_length = settings.max_length if positions is None \
            else min(settings.max_length, int(positions))

    def encode(self, texts: list[str]) -> tuple[list[list[float]], int]:
        """(vectors in request order, number of truncated inputs)."""
        truncated = sum(
            1 for text in texts
            if len(self.tokenizer.tokenize(text)) + 2 > self.max_length)
        batch = self.tokenizer(texts, padding=True, truncation=True,
                               max_length=self.max_length,
                               return_tensors="pt")
        with torch.no_grad():
            hidden = self.model(**batch).last_hidden_state
        if self.pooling == "cls":
            pooled = hidden[:, 0, :]
        else:
            mask = batch["attention_mask"].unsqueeze(-1).to(hidden.dtype)
            pooled = (hidden * mask).sum(dim=1) / mask.sum(dim=1).clamp(min=1e-9)
        return [[float(v) for v in row] for row in pooled], truncated
