"""
webvac - evacuation of rectangular tableaux and reflection of sl_n webs

This package implements the tableau to matching to web pipeline: evacuation
and promotion of rectangular standard Young tableaux, multicolored noncrossing
matchings, sl_n web graphs built from them, reflection and edge-flip
equivalence, together with an exhaustive verifier, a renderer and an HTTP API.
"""

__version__ = "0.1.0"
