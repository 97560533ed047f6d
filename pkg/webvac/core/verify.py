"""
Exhaustive verification

Every tableau of a shape is pushed through the whole pipeline and each
commutation and invariant claim is checked on it: evacuation against the
rotate-and-complement shortcut, the matching-level left square, the web-level
right square in its three strengths, the sl3/sl4 conventions, and the
involutions and invariants along the way. Per-tableau outcomes are immutable
and merged in enumeration order, so reports are identical whether the
tableaux were checked in one process or fanned out to several.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from webvac.core.arrangement import arrangement_from_ncm
from webvac.core.equivalence import apply_convention_34, web_equal_anchored
from webvac.core.errors import BudgetExceeded, InputError, WebvacError
from webvac.core.formats import format_ncm, format_tableau, format_web
from webvac.core.matching import (
    is_standard_rectangular,
    ncm_from_tableau,
    reflect_ncm,
    rotated_ncm_of,
    tableau_from_ncm,
)
from webvac.core.tableau import enumerate_syt, evacuate, evacuate_fast
from webvac.core.web import (
    boundary_weights,
    check_web_invariants,
    flip_edges,
    map_edge_keys,
    reflect_web,
    reflection_vertex_map,
    single_arc_interior_edges,
    standardize_boundary,
    web_equal_positioned,
    web_from_ncm,
)
from webvac.models.matching import MulticoloredNCM
from webvac.models.tableau import Shape, StandardTableau
from webvac.models.verification import CheckOutcome, CheckStatus, VerificationReport
from webvac.models.web import EqualityMode, WebGraph

logger = logging.getLogger(__name__)

RIGHT_SQUARE_CHECKS = ("right_square_undirected", "right_square_flip_set", "right_square_exact")

CHECK_NAMES = (
    "evacuation_involution",
    "fast_evacuation",
    "ncm_round_trip",
    "standard_rectangular",
    "rotated_ncm",
    "rotated_vs_evacuated",
    "left_square",
    "ncm_reflection_involution",
    "web_invariants",
    "reflected_boundary",
    "web_reflection_involution",
    "flip_involution",
    *RIGHT_SQUARE_CHECKS,
    "conventions_34",
)

Outcomes = Tuple[CheckOutcome, ...]


def _word(t: StandardTableau) -> str:
    return "word=" + ",".join(str(v) for v in t.reading_word())


def _passed(check: str) -> CheckOutcome:
    return CheckOutcome(check=check, status=CheckStatus.PASS)


def _skipped(check: str) -> CheckOutcome:
    return CheckOutcome(check=check, status=CheckStatus.SKIP)


def _failed(check: str, t: StandardTableau, detail: str) -> CheckOutcome:
    witness = f"{_word(t)} {detail}".replace("\n", "|")
    return CheckOutcome(check=check, status=CheckStatus.FAIL, witness=witness)


def _outcome(check: str, t: StandardTableau, ok: bool, detail: Callable[[], str]) -> CheckOutcome:
    return _passed(check) if ok else _failed(check, t, detail())


def _web_of(t: StandardTableau) -> WebGraph:
    return standardize_boundary(web_from_ncm(ncm_from_tableau(t)))


def check_left_square(t: StandardTableau) -> CheckOutcome:
    """
    Check that reflecting the matching of t gives the matching of E(t).

    Raises:
        InputError: If t has a single row
    """
    reflected = reflect_ncm(ncm_from_tableau(t))
    evacuated = ncm_from_tableau(evacuate(t))
    return _outcome(
        "left_square", t, reflected == evacuated,
        lambda: f"reflected {format_ncm(reflected)} evacuated {format_ncm(evacuated)}",
    )


def check_right_square(t: StandardTableau) -> Dict[str, CheckOutcome]:
    """
    Check the three strengths of the web-level square for t.

    right_square_undirected: the reflected web of t and the web of E(t) agree
    as undirected, unweighted graphs with fixed boundary.
    right_square_flip_set: the reflection carries the single-arc interior
    edges of t's web onto those of E(t)'s web.
    right_square_exact: flipping those edges in the reflected web gives the
    web of E(t) exactly, both up to anchored isomorphism and position by position.

    Raises:
        InputError: If t has a single row
    """
    w = _web_of(t)
    w_evacuated = _web_of(evacuate(t))
    reflected = reflect_web(w)

    undirected = web_equal_anchored(reflected, w_evacuated, EqualityMode.UNDIRECTED_UNWEIGHTED)
    outcomes = {
        "right_square_undirected": _outcome(
            "right_square_undirected", t, undirected.equal, lambda: undirected.witness or ""
        )
    }

    flip_set = map_edge_keys(single_arc_interior_edges(w), reflection_vertex_map(w))
    expected = single_arc_interior_edges(w_evacuated)
    outcomes["right_square_flip_set"] = _outcome(
        "right_square_flip_set", t, flip_set == expected,
        lambda: f"reflected {sorted(flip_set)} evacuated {sorted(expected)}",
    )

    flipped = flip_edges(reflected, flip_set)
    exact = web_equal_anchored(flipped, w_evacuated, EqualityMode.EXACT)
    positioned = web_equal_positioned(flipped, w_evacuated)
    outcomes["right_square_exact"] = _outcome(
        "right_square_exact", t, exact.equal and positioned.equal,
        lambda: f"{exact.witness or positioned.witness} flipped {format_web(flipped)}",
    )
    return outcomes


def check_conventions_34(t: StandardTableau) -> CheckOutcome:
    """
    Check that the reflected web of t and the web of E(t) coincide in sl3/sl4 form.

    Raises:
        InputError: If t does not have 3 or 4 rows
    """
    if t.shape.n not in (3, 4):
        raise InputError(f"conventions apply to tableaux with 3 or 4 rows, not {t.shape.n}")
    left = apply_convention_34(reflect_web(_web_of(t)))
    right = apply_convention_34(_web_of(evacuate(t)))
    result = web_equal_anchored(left, right, EqualityMode.EXACT)
    return _outcome("conventions_34", t, result.equal, lambda: result.witness or "")


def _rotated_outcomes(t: StandardTableau, m: MulticoloredNCM) -> List[CheckOutcome]:
    n, N = m.n, m.N
    rotated = rotated_ncm_of(t)
    layers_match = all(rotated.layer(x).arcs == m.layer(n - x).arcs for x in range(1, n))
    evacuated = ncm_from_tableau(evacuate(t))
    mirrored = all(
        {(N + 1 - a.j, N + 1 - a.i) for a in rotated.layer(x).arcs}
        == {a.key() for a in evacuated.layer(x).arcs}
        for x in range(1, n)
    )
    return [
        _outcome("rotated_ncm", t, layers_match, lambda: f"rotated {format_ncm(rotated)}"),
        _outcome(
            "rotated_vs_evacuated", t, mirrored,
            lambda: f"rotated {format_ncm(rotated)} evacuated {format_ncm(evacuated)}",
        ),
    ]


def _web_outcomes(t: StandardTableau, m: MulticoloredNCM) -> List[CheckOutcome]:
    raw = web_from_ncm(m)
    w = standardize_boundary(raw)
    arrangement = arrangement_from_ncm(m)
    raw_report = check_web_invariants(raw, arrangement)
    report = check_web_invariants(w, arrangement)

    reflected = reflect_web(w)
    reflected_report = check_web_invariants(reflected)
    outward = all(weight == 1 and out for weight, out in boundary_weights(reflected))

    every_edge = [e.key for e in w.edges]
    twice = flip_edges(flip_edges(w, every_edge), every_edge)

    return [
        _outcome(
            "web_invariants", t, raw_report.ok and report.ok,
            lambda: "; ".join(raw_report.failures + report.failures) + f" web {format_web(w)}",
        ),
        _outcome(
            "reflected_boundary", t, outward and reflected_report.ok,
            lambda: "; ".join(reflected_report.failures) + f" reflected {format_web(reflected)}",
        ),
        _outcome(
            "web_reflection_involution", t, reflect_web(reflected) == w,
            lambda: f"web {format_web(w)}",
        ),
        _outcome("flip_involution", t, twice == w, lambda: f"flipped twice {format_web(twice)}"),
    ]


def _guarded(check: str, t: StandardTableau, run: Callable[[], List[CheckOutcome]]) -> List[CheckOutcome]:
    try:
        return run()
    except WebvacError as e:
        return [_failed(check, t, f"{type(e).__name__}: {e}")]


def check_tableau(t: StandardTableau) -> Outcomes:
    """
    Run every check on one tableau.

    Checks that need a matching are skipped for single-row tableaux, and the
    convention check is skipped unless t has 3 or 4 rows. An error raised
    inside a check is recorded as a failure of that check.

    Returns:
        Outcomes: one outcome per name in CHECK_NAMES, in that order
    """
    outcomes: List[CheckOutcome] = []
    evacuated = evacuate(t)
    outcomes.append(
        _outcome("evacuation_involution", t, evacuate(evacuated) == t,
                 lambda: f"evacuated twice {format_tableau(evacuate(evacuated))}")
    )
    fast = evacuate_fast(t)
    outcomes.append(
        _outcome("fast_evacuation", t, fast == evacuated,
                 lambda: f"slides {format_tableau(evacuated)} rotation {format_tableau(fast)}")
    )

    if t.shape.n < 2:
        outcomes.extend(_skipped(name) for name in CHECK_NAMES[2:])
        return tuple(outcomes)

    m = ncm_from_tableau(t)

    def round_trip() -> List[CheckOutcome]:
        back = tableau_from_ncm(m)
        return [_outcome("ncm_round_trip", t, back == t, lambda: f"recovered {format_tableau(back)}")]

    def rectangular() -> List[CheckOutcome]:
        check = is_standard_rectangular(m)
        return [_outcome("standard_rectangular", t, check.ok, lambda: f"{check.reason} ncm {format_ncm(m)}")]

    def reflection() -> List[CheckOutcome]:
        return [
            _outcome("ncm_reflection_involution", t, reflect_ncm(reflect_ncm(m)) == m,
                     lambda: f"ncm {format_ncm(m)}")
        ]

    outcomes.extend(_guarded("ncm_round_trip", t, round_trip))
    outcomes.extend(_guarded("standard_rectangular", t, rectangular))
    rotated = _guarded("rotated_ncm", t, lambda: _rotated_outcomes(t, m))
    outcomes.extend(rotated if len(rotated) == 2 else rotated + [_failed("rotated_vs_evacuated", t, "not run")])
    outcomes.extend(_guarded("left_square", t, lambda: [check_left_square(t)]))
    outcomes.extend(_guarded("ncm_reflection_involution", t, reflection))

    web = _guarded("web_invariants", t, lambda: _web_outcomes(t, m))
    if len(web) == 1:
        web += [_failed(name, t, "not run") for name in CHECK_NAMES[9:12]]
    outcomes.extend(web)

    square = _guarded(RIGHT_SQUARE_CHECKS[0], t, lambda: list(check_right_square(t).values()))
    if len(square) == 1:
        square += [_failed(name, t, "not run") for name in RIGHT_SQUARE_CHECKS[1:]]
    outcomes.extend(square)

    if t.shape.n in (3, 4):
        outcomes.extend(_guarded("conventions_34", t, lambda: [check_conventions_34(t)]))
    else:
        outcomes.append(_skipped("conventions_34"))
    return tuple(outcomes)


def merge_outcome(first: CheckOutcome, second: CheckOutcome) -> CheckOutcome:
    """
    Combine two outcomes of the same check; the earlier failure wins.

    fail beats pass beats skip.
    """
    if first.status == CheckStatus.FAIL:
        return first
    if second.status == CheckStatus.FAIL:
        return second
    if first.status == CheckStatus.PASS:
        return first
    return second


def _merge(accumulated: Dict[str, CheckOutcome], outcomes: Outcomes) -> Dict[str, CheckOutcome]:
    merged = dict(accumulated)
    for outcome in outcomes:
        previous = merged.get(outcome.check)
        merged[outcome.check] = outcome if previous is None else merge_outcome(previous, outcome)
    return merged


def verify_shape(shape: Shape, budget: Optional[int] = None, workers: int = 1) -> VerificationReport:
    """
    Run every check on every tableau of one shape.

    Args:
        shape: rectangle to enumerate
        budget: enumeration budget; defaults to the configured one
        workers: number of processes; 1 checks in this process

    Returns:
        VerificationReport: the aggregated report; budget overruns are reported, not raised
    """
    try:
        tableaux = list(enumerate_syt(shape, budget))
    except BudgetExceeded as e:
        logger.warning(f"Skipping shape {shape}: {e}")
        return VerificationReport(shape=shape, tableau_count=0, error=str(e))

    logger.info(f"Verifying {len(tableaux)} tableaux of shape {shape} with {workers} worker(s)")
    if workers > 1 and len(tableaux) > 1:
        chunk = max(1, len(tableaux) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check_tableau, tableaux, chunksize=chunk))
    else:
        results = [check_tableau(t) for t in tableaux]

    checks = reduce(_merge, results, {})
    ordered = {name: checks[name] for name in CHECK_NAMES if name in checks}
    report = VerificationReport(shape=shape, tableau_count=len(tableaux), checks=ordered)

    failed = [c.check for c in ordered.values() if c.status == CheckStatus.FAIL]
    if failed:
        logger.error(f"Shape {shape}: failed {', '.join(failed)}")
    return report


def run_suite(
    shapes: Sequence[Shape], budget: Optional[int] = None, workers: int = 1
) -> List[VerificationReport]:
    """
    Verify a list of shapes.

    Args:
        shapes: rectangles to verify; duplicates are verified once
        budget: enumeration budget per shape
        workers: processes used per shape

    Returns:
        List[VerificationReport]: one report per distinct shape, sorted by (n, k)
    """
    unique = sorted({(s.n, s.k) for s in shapes})
    return [verify_shape(Shape(n=n, k=k), budget, workers) for n, k in unique]


def default_shapes() -> List[Shape]:
    """The default shape set: 2 x k for k <= 8, 3 x 2..4, 4 x 2..3 and 5 x 2."""
    pairs = [(2, k) for k in range(1, 9)] + [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2)]
    return [Shape(n=n, k=k) for n, k in pairs]