"""State-space search with symmetry exploitation.

States and actions cross the boundary as plain strings (the state encoding
and the action label); everything else stays in the extension module.
"""

from ._core import (
    Problem,
    SearchError,
    SearchResult,
    Symmetry,
    belief,
    bfs,
    bidirectional_bfs,
    canonical,
    check,
    declared_symmetries,
    depth_limited,
    export_dot,
    hanoi,
    mc,
    metrics_table,
    mirror_meet,
    orbit,
    parse_problem,
    quotient_bfs,
    render_canonical,
    run_episode,
    shipped_mirror,
    uniform_cost,
    vacuum,
    validate_plan,
)

__version__ = "0.1.0"

__all__ = [
    "Problem",
    "SearchError",
    "SearchResult",
    "Symmetry",
    "belief",
    "bfs",
    "bidirectional_bfs",
    "canonical",
    "check",
    "declared_symmetries",
    "depth_limited",
    "export_dot",
    "hanoi",
    "mc",
    "metrics_table",
    "mirror_meet",
    "orbit",
    "parse_problem",
    "quotient_bfs",
    "render_canonical",
    "run_episode",
    "shipped_mirror",
    "uniform_cost",
    "vacuum",
    "validate_plan",
]
