"""
Test package for webvac

This package contains test modules for the tableau, matching and web
pipeline, the exhaustive verifier, the text formats, rendering, the command
line and the HTTP API.
"""
