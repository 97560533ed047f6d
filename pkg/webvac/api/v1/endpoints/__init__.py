"""
Endpoint modules for the v1 webvac API

Each module implements a FastAPI router for one resource:
- tableaux: validation, slides, promotion, evacuation, counting and enumeration
- matchings: multicolored noncrossing matchings
- webs: web construction and the operations on webs
- verification: the exhaustive verifier
"""
