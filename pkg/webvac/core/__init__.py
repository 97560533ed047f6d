"""
Core functionality for webvac

This package contains the algorithms of the tableau to web pipeline. Every
function is pure: it takes immutable models and returns new ones.

Components:
- tableau: validation, jeu de taquin, promotion, evacuation, enumeration
- matching: multicolored noncrossing matchings from tableaux and back
- arrangement: exact crossings and traversal events of a matching
- web: web construction, standardization, reflection, flips and invariants
- equivalence: boundary-anchored web equality and the sl3/sl4 conventions
- verify: exhaustive checks over every tableau of a shape
- formats: line-oriented text formats
- render: SVG and TikZ drawings
"""

# Re-export core components for easier imports
from webvac.core.tableau import (
    validate,
    jdt_slide_path,
    promote,
    promote_n,
    evacuate,
    evacuate_fast,
    rotate180,
    complement,
    enumerate_syt,
    count_syt,
)
from webvac.core.matching import (
    ncm_from_tableau,
    ncm_from_rotated_tableau,
    is_standard_rectangular,
    reflect_ncm,
    tableau_from_ncm,
)
from webvac.core.arrangement import arrangement_from_ncm
from webvac.core.web import (
    web_from_ncm,
    standardize_boundary,
    reflect_web,
    flip_edges,
    single_arc_interior_edges,
    check_flow,
    check_web_invariants,
    planarity_report,
    rotation_system,
)
from webvac.core.equivalence import web_equal_anchored, apply_convention_34
from webvac.core.verify import check_left_square, check_right_square, check_conventions_34, run_suite
