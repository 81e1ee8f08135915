"""Builds a tiny deterministic encoder checkpoint once per session.

The sandboxed test environment has no model-hub access, so tests exercise
the real transformers load/pooling path against a small fixed-seed BERT
saved locally. Production deployments point EMBED_SERVICE_MODEL at any
hub model id instead.
"""

from __future__ import annotations

import pytest
import torch
from tokenizers import Tokenizer
from tokenizers.models import WordPiece
from tokenizers.pre_tokenizers import Whitespace
from tokenizers.processors import TemplateProcessing
from transformers import BertConfig, BertModel, PreTrainedTokenizerFast

VOCAB = [
    "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]",
    ":", "_", "(", ")", ",", ".", "+", "-", "=", "<", ">",
    "file", "function", "method", "class", "decl", "stmt", "var",
    "compound", "return", "binary", "operator", "expr", "ref", "integer",
    "literal", "spec", "clause", "requires", "ensures", "invariant",
    "main", "x", "y", "i", "n", "a", "b", "0", "1", "2",
    "alpha", "beta", "gamma", "delta",
]


@pytest.fixture(scope="session")
def tiny_model_dir(tmp_path_factory) -> str:
    model_dir = tmp_path_factory.mktemp("tiny-encoder")
    vocab = {token: index for index, token in enumerate(VOCAB)}
    core = Tokenizer(WordPiece(vocab, unk_token="[UNK]"))
    core.pre_tokenizer = Whitespace()
    core.post_processor = TemplateProcessing(
        single="[CLS] $A [SEP]",
        pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", vocab["[CLS]"]),
                        ("[SEP]", vocab["[SEP]"])],
    )
    tokenizer = PreTrainedTokenizerFast(
        tokenizer_object=core, unk_token="[UNK]", pad_token="[PAD]",
        cls_token="[CLS]", sep_token="[SEP]", mask_token="[MASK]",
        model_max_length=128)
    tokenizer.save_pretrained(model_dir)
    config = BertConfig(
        vocab_size=len(VOCAB),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=4,
        intermediate_size=64,
        max_position_embeddings=128,
    )
    torch.manual_seed(1234)
    model = BertModel(config)
    model.save_pretrained(model_dir)
    return str(model_dir)
