"""Built-in demonstration spaces, maps, and scenarios.

Each catalog entry packages a small space with its operator pair and the
comparison function under which the relevant condition is known to hold or
fail, so the same inputs can be pulled up from scenario files, from the
command line, and from the regression suite.
"""

from __future__ import annotations

from .metric import (
    FiniteMetricSpace,
    SelfMap,
    build_self_map,
    build_truncated_harmonic_space,
    identity_map,
    space_from_values,
)
from .sigma import ComparisonFn, gallery

EXAMPLE_IDS = (
    "ex-3.24",
    "ex-3.26",
    "ex-3.34",
    "ex-3.35",
    "koparde-demo",
    "patel-deheri-demo",
    "classify-gallery",
)

#: Members and parameters classified by the gallery sweep.
CLASSIFY_MEMBERS = (
    ("gamma", {}),
    ("beta", {}),
    ("step-g", {}),
    ("step-omega", {}),
    ("chi", {"alpha": 0.4}),
    ("tau", {}),
)
CLASSIFY_C_VALUES = (1.0, 2.0)


def five_point_pair() -> tuple[FiniteMetricSpace, SelfMap, SelfMap]:
    """Points 1..5 under |x - y|; T is 3 except T(4) = 2, S is 3 except S(4) = 5."""
    space = space_from_values([1, 2, 3, 4, 5])
    t = build_self_map(space, {"1": "3", "2": "3", "3": "3", "4": "2", "5": "3"})
    s = build_self_map(space, {"1": "3", "2": "3", "3": "3", "4": "5", "5": "3"})
    return space, t, s


def three_point_cycle() -> tuple[FiniteMetricSpace, SelfMap, SelfMap]:
    """Points 1..3 under |x - y|; T(1) = T(2) = 3 and T(3) = 2, no fixed point."""
    space = space_from_values([1, 2, 3])
    t = build_self_map(space, {"1": "3", "2": "3", "3": "2"})
    return space, t, identity_map(space)


def harmonic_pair(n_max: int = 50) -> tuple[FiniteMetricSpace, SelfMap, SelfMap]:
    truncation = build_truncated_harmonic_space(n_max)
    return truncation.space, truncation.t, truncation.s


def thirds_grid(cells: int = 100) -> tuple[FiniteMetricSpace, SelfMap, SelfMap]:
    """Grid 0.00 .. 1.00 with T = x/3 truncated down to the grid.

    Rounding down keeps the squared contraction inequality valid on every
    pair; rounding to nearest breaks it between the two smallest positive
    grid points.
    """
    labels = [f"{k / cells:.2f}" for k in range(cells + 1)]
    values = [k / cells for k in range(cells + 1)]
    space = space_from_values(values, labels)
    t = SelfMap(space, tuple(k // 3 for k in range(cells + 1)))
    return space, t, identity_map(space)


BUILTIN_SPACES = {
    "ex-3.24": five_point_pair,
    "ex-3.26": three_point_cycle,
    "ex-3.34": harmonic_pair,
    "ex-3.35": five_point_pair,
    "koparde-demo": thirds_grid,
    "patel-deheri-demo": harmonic_pair,
}


def builtin_triple(name: str) -> tuple[FiniteMetricSpace, SelfMap, SelfMap]:
    try:
        build = BUILTIN_SPACES[name]
    except KeyError:
        raise KeyError(f"unknown builtin space {name!r}") from None
    return build()


def builtin_sigma(name: str) -> tuple[ComparisonFn | None, float]:
    """Comparison function and c constant conventionally paired with an entry."""
    if name == "ex-3.24":
        return gallery("linear", slope=3.0 / 7.0), 1.0
    if name == "ex-3.26":
        return gallery("tau"), 1.0
    if name in ("ex-3.34", "patel-deheri-demo"):
        return gallery("chi", alpha=1.0 / 3.0), 1.0
    if name == "ex-3.35":
        return gallery("chi", alpha=0.45), 1.0
    if name == "koparde-demo":
        return gallery("chi", alpha=0.3), 1.0
    return None, 1.0


def builtin_theorem_id(name: str) -> str | None:
    return {
        "ex-3.24": "T3.18",
        "ex-3.26": "T3.18",
        "ex-3.34": "T3.29",
        "ex-3.35": "T3.29",
        "koparde-demo": "C3.31",
        "patel-deheri-demo": "C3.32",
    }.get(name)
