"""Thin HTTP microservice serving transformer text embeddings."""

__version__ = "0.1.0"
