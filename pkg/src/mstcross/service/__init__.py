"""HTTP facade: pydantic models plus the FastAPI application factory."""

from .app import app, create_app

__all__ = ["app", "create_app"]
