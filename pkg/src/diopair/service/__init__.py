"""Service layer: FastAPI app plus the shared request/response schemas."""

from .app import app, create_app

__all__ = ["app", "create_app"]
