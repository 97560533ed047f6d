"""
HTTP API for webvac

This package contains the versioned FastAPI routers. Version 1 exposes the
tableau, matching and web operations and the exhaustive verifier.
"""
