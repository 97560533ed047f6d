"""
Version 1 of the webvac API

This package contains the v1 implementation of the webvac API endpoints,
organized by resource type.

This version provides endpoints for:
- Tableau validation, promotion, evacuation, rotation and enumeration
- Matchings of tableaux, their reflection and inversion
- Webs of tableaux, reflection, edge flips, flow and conventions
- Exhaustive verification of one shape
"""

# Import and expose the endpoints for easier access
from webvac.api.v1.endpoints import tableaux, matchings, webs, verification
