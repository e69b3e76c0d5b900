"""Two-argument comparison functions and the axiom checker.

A comparison function sigma(t, s) drives every contraction condition in the
package.  The interesting axioms quantify over *all* positive sequences,
which no finite computation can certify, so verdicts form a three-way
lattice: a closed-form certificate attached to a gallery member yields
``CERTIFIED_HOLDS``, a replayable counterexample yields ``FALSIFIED``, and
an exhausted search budget yields ``UNDETERMINED``.

Falsification searches walk structured sequence families (constants,
geometric decays, harmonic approaches, linear growth) before random grids.
Constant-sequence counterexamples are exact because constant sequences
converge; family-based ones verify positivity over the realized prefix and
at sparse far-tail indices of the closed form.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator

DEFAULT_BUDGET = 10_000
DEFAULT_PREFIX = 64
WITNESS_TERMS = 24

# Deterministic scan lists used before any random probing.
CANONICAL_POSITIVE = (1.0, 2.0, 0.5, 3.0, 1.5, 0.25, 4.0, 0.1, 5.0, 0.75, 8.0, 10.0)
GEOMETRIC_STARTS = (1.0, 2.0, 0.5)
GEOMETRIC_RATIOS = (0.5, 0.9)
TAIL_PROBES = (1_000, 10_000, 1_000_000)
GEOMETRIC_TAIL_PROBES = (100, 500, 1_000)


class UnknownGallery(ValueError):
    """Requested gallery name does not exist."""


class MissingParam(ValueError):
    """A gallery member needs a parameter that was not supplied."""


class ParamOutOfRange(ValueError):
    """A supplied parameter violates the member's admissible range."""


class SubUnitCWarning(UserWarning):
    """Emitted when a limit-ratio constant below 1 is supplied."""


class AxiomKind(Enum):
    SIGMA1 = "sigma1"
    SIGMA2 = "sigma2"
    DOLLAR = "dollar"
    UPPER_BOUND = "upper-bound"
    ZETA3 = "zeta3"
    ETA2 = "eta2"
    RHO1 = "rho1"
    RHO2 = "rho2"
    GERAGHTY = "geraghty"
    L_FUNCTION = "l-function"


class Outcome(Enum):
    CERTIFIED_HOLDS = "certified-holds"
    FALSIFIED = "falsified"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Interval:
    """A real interval with independently open or closed endpoints."""

    lo: float
    hi: float
    lo_open: bool = True
    hi_open: bool = True

    def contains(self, x: float) -> bool:
        if x < self.lo or (self.lo_open and x == self.lo):
            return False
        if x > self.hi or (self.hi_open and x == self.hi):
            return False
        return True

    def describe(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        hi = "inf" if self.hi == float("inf") else f"{self.hi:g}"
        return f"{left}{self.lo:g}, {hi}{right}"


@dataclass(frozen=True)
class WitnessSequence:
    """A closed-form sequence family together with its realized prefix.

    ``family`` is one of ``constant``, ``geometric``, ``harmonic``,
    ``harmonic-below``, ``linear`` or ``pair``; a ``pair`` witness carries
    its two component families in ``components``.
    """

    family: str
    params: tuple[tuple[str, float], ...] = ()
    first_terms: tuple[float, ...] = ()
    components: tuple["WitnessSequence", ...] = ()

    def param(self, key: str) -> float:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def term(self, n: int) -> float:
        return _family_term(self.family, dict(self.params), n)

    def limit(self) -> float:
        """Closed-form limit; ``inf`` for linear growth."""
        p = dict(self.params)
        if self.family == "constant":
            return p["value"]
        if self.family == "geometric":
            return 0.0 if p["ratio"] < 1.0 else float("inf")
        if self.family in ("harmonic", "harmonic-below"):
            return p["limit"]
        if self.family == "linear":
            return float("inf")
        raise ValueError(f"no scalar limit for family {self.family!r}")


def _family_term(family: str, p: dict[str, float], n: int) -> float:
    if family == "constant":
        return p["value"]
    if family == "geometric":
        return p["start"] * p["ratio"] ** (n - 1)
    if family == "harmonic":
        return p["limit"] * (1.0 + 1.0 / n)
    if family == "harmonic-below":
        return p["limit"] * (1.0 - 1.0 / (n + 1))
    if family == "linear":
        return p["scale"] * n
    raise ValueError(f"unknown family {family!r}")


def make_witness(family: str, n_terms: int = WITNESS_TERMS, **params: float) -> WitnessSequence:
    items = tuple(sorted(params.items()))
    terms = tuple(_family_term(family, dict(items), n) for n in range(1, n_terms + 1))
    return WitnessSequence(family, items, terms)


def make_pair_witness(a: WitnessSequence, b: WitnessSequence) -> WitnessSequence:
    return WitnessSequence("pair", (), (), (a, b))


@dataclass(frozen=True)
class AxiomVerdict:
    kind: AxiomKind
    outcome: Outcome
    witness: WitnessSequence | None = None
    budget_used: int = 0
    detail: str = ""


@dataclass(frozen=True)
class ComparisonFn:
    """A named two-argument real function with its analytic metadata.

    ``eval`` must be total and deterministic on [0, inf) x [0, inf).
    ``analytic_certificates`` lists parameterless axioms known to hold in
    closed form; the limit-ratio axiom carries its own certified interval
    because it is parameterized.  ``declared_c_range`` records the
    advertised membership interval for the sigma-class, when any.
    """

    name: str
    eval: Callable[[float, float], float]
    params: tuple[tuple[str, float], ...] = ()
    declared_c_range: Interval | None = None
    analytic_certificates: frozenset = frozenset()
    sigma2_certificate: Interval | None = None
    handles: tuple[tuple[str, Callable[[float], float]], ...] = ()
    notes: str = ""

    def param(self, key: str, default: float | None = None) -> float | None:
        for k, v in self.params:
            if k == key:
                return v
        return default

    def handle(self, key: str) -> Callable[[float], float] | None:
        for k, v in self.handles:
            if k == key:
                return v
        return None


# --------------------------------------------------------------------------
# Gallery
# --------------------------------------------------------------------------

GALLERY_NAMES = (
    "gamma",
    "beta",
    "step-g",
    "step-omega",
    "chi",
    "theta-pi",
    "theta-geraghty",
    "theta-l",
    "tau",
    "psi-phi",
    "linear",
)


def _half(t: float) -> float:
    return 0.5 * t


def _half_on_positive(t: float) -> float:
    return 0.5 * t if t > 0 else 0.0


def _reciprocal_decay(t: float) -> float:
    return 1.0 / (1.0 + t)


def _identity_fn(t: float) -> float:
    return t


def _linear_certificates(slope: float) -> tuple[frozenset, Interval]:
    certs = {AxiomKind.DOLLAR}
    if slope < 0.5:
        certs.add(AxiomKind.SIGMA1)
    if slope < 1.0:
        certs |= {
            AxiomKind.UPPER_BOUND,
            AxiomKind.ZETA3,
            AxiomKind.ETA2,
            AxiomKind.RHO1,
            AxiomKind.RHO2,
        }
    return frozenset(certs), Interval(0.0, 1.0 / slope)


def _make_linear(name: str, slope: float, declared: Interval | None) -> ComparisonFn:
    certs, sigma2 = _linear_certificates(slope)
    notes = ""
    if slope < 0.5:
        ratio = slope / (1.0 - slope)
        notes = f"positivity along consecutive-sum pairs forces a_n < {ratio:.12g} * a_(n-1)"

    def evaluate(t: float, s: float, a: float = slope) -> float:
        return a * s - t

    return ComparisonFn(
        name=name,
        eval=evaluate,
        params=(("slope", slope),),
        declared_c_range=declared,
        analytic_certificates=certs,
        sigma2_certificate=sigma2,
        notes=notes,
    )


def _require(params: dict, key: str, member: str) -> float:
    if key not in params:
        raise MissingParam(f"{member} requires parameter {key!r}")
    return float(params.pop(key))


def gallery(name: str, **params) -> ComparisonFn:
    """Construct a gallery member by name.

    Step functions and the piecewise average need no parameters; the linear
    families need ``alpha`` (or ``slope`` for the raw linear form); the
    theta variants additionally accept a unary handle (``pi_fn``, ``g_fn``,
    ``l_fn``) with sensible defaults.
    """
    if name not in GALLERY_NAMES:
        raise UnknownGallery(f"unknown gallery member {name!r}")
    build = _GALLERY_BUILDERS[name]
    fn = build(dict(params))
    return fn


def _build_gamma(params: dict) -> ComparisonFn:
    _reject_extras("gamma", params)

    def evaluate(t: float, s: float) -> float:
        return 0.5 * s - 1.5 * t if t < s else 0.0

    return ComparisonFn(
        name="gamma",
        eval=evaluate,
        declared_c_range=Interval(0.0, 3.0),
        analytic_certificates=frozenset({AxiomKind.SIGMA1, AxiomKind.DOLLAR}),
        sigma2_certificate=Interval(0.0, 3.0),
        notes="positivity along consecutive-sum pairs forces a_n < a_(n-1) / 2",
    )


def _build_beta(params: dict) -> ComparisonFn:
    _reject_extras("beta", params)
    fn = _make_linear("beta", 0.5, None)
    return fn


def _build_step_g(params: dict) -> ComparisonFn:
    _reject_extras("step-g", params)

    def evaluate(t: float, s: float) -> float:
        return -1.0 if t <= s else 1.0

    return ComparisonFn(
        name="step-g",
        eval=evaluate,
        declared_c_range=Interval(1.0, float("inf")),
        analytic_certificates=frozenset({AxiomKind.SIGMA1}),
        sigma2_certificate=Interval(1.0, float("inf")),
        notes="first axiom is vacuous: consecutive-sum pairs always evaluate to -1",
    )


def _build_step_omega(params: dict) -> ComparisonFn:
    _reject_extras("step-omega", params)

    def evaluate(t: float, s: float) -> float:
        return -1.0 if t < s else 1.0

    return ComparisonFn(
        name="step-omega",
        eval=evaluate,
        declared_c_range=Interval(1.0, float("inf")),
        analytic_certificates=frozenset({AxiomKind.SIGMA1}),
        sigma2_certificate=Interval(1.0, float("inf")),
        notes="first axiom is vacuous: consecutive-sum pairs always evaluate to -1",
    )


def _build_chi(params: dict) -> ComparisonFn:
    alpha = _require(params, "alpha", "chi")
    _reject_extras("chi", params)
    if not 0.0 < alpha < 0.5:
        raise ParamOutOfRange("chi requires 0 < alpha < 1/2")
    fn = _make_linear("chi", alpha, Interval(0.0, 2.0))
    return ComparisonFn(
        name="chi",
        eval=fn.eval,
        params=(("alpha", alpha),),
        declared_c_range=fn.declared_c_range,
        analytic_certificates=fn.analytic_certificates,
        sigma2_certificate=fn.sigma2_certificate,
        notes=fn.notes,
    )


def _build_linear(params: dict) -> ComparisonFn:
    slope = _require(params, "slope", "linear")
    _reject_extras("linear", params)
    if not slope > 0.0:
        raise ParamOutOfRange("linear requires slope > 0")
    declared = Interval(0.0, 2.0) if slope < 0.5 else None
    return _make_linear("linear", slope, declared)


def _build_tau(params: dict) -> ComparisonFn:
    _reject_extras("tau", params)
    fn = _make_linear("tau", 2.0 / 3.0, None)
    # Membership fails on the first axiom, but the limit-ratio axiom holds
    # up to c = 3/2 in closed form.
    return ComparisonFn(
        name="tau",
        eval=fn.eval,
        params=fn.params,
        declared_c_range=None,
        analytic_certificates=fn.analytic_certificates,
        sigma2_certificate=Interval(0.0, 1.5),
    )


def _build_theta_pi(params: dict) -> ComparisonFn:
    alpha = _require(params, "alpha", "theta-pi")
    pi_fn = params.pop("pi_fn", _half)
    _reject_extras("theta-pi", params)
    if not 0.0 < alpha < 0.5:
        raise ParamOutOfRange("theta-pi requires 0 < alpha < 1/2")
    if not callable(pi_fn):
        raise ParamOutOfRange("pi_fn must be callable")

    def evaluate(t: float, s: float) -> float:
        return alpha * pi_fn(s) - t

    return ComparisonFn(
        name="theta-pi",
        eval=evaluate,
        params=(("alpha", alpha),),
        declared_c_range=Interval(1.0, 2.0, lo_open=False, hi_open=False),
        analytic_certificates=frozenset({AxiomKind.SIGMA1, AxiomKind.DOLLAR}),
        sigma2_certificate=Interval(0.0, 1.0 / alpha),
        handles=(("pi", pi_fn),),
        notes="handle contract: pi(t) <= t on [0, inf)",
    )


def _build_theta_geraghty(params: dict) -> ComparisonFn:
    alpha = _require(params, "alpha", "theta-geraghty")
    g_fn = params.pop("g_fn", None)
    _reject_extras("theta-geraghty", params)
    if not 0.0 < alpha <= 0.5:
        raise ParamOutOfRange("theta-geraghty requires 0 < alpha <= 1/2")
    default = g_fn is None
    if default:
        g_fn = _reciprocal_decay
    if not callable(g_fn):
        raise ParamOutOfRange("g_fn must be callable")

    def evaluate(t: float, s: float) -> float:
        return alpha * g_fn(s) * s - t

    certs = {AxiomKind.SIGMA1, AxiomKind.DOLLAR}
    if default:
        certs.add(AxiomKind.GERAGHTY)
    return ComparisonFn(
        name="theta-geraghty",
        eval=evaluate,
        params=(("alpha", alpha),),
        declared_c_range=Interval(1.0, 2.0, lo_open=False, hi_open=False),
        analytic_certificates=frozenset(certs),
        sigma2_certificate=Interval(0.0, 1.0 / alpha, hi_open=False),
        handles=(("g", g_fn),),
        notes="handle contract: g maps [0, inf) into [0, 1)",
    )


def _build_theta_l(params: dict) -> ComparisonFn:
    alpha = _require(params, "alpha", "theta-l")
    l_fn = params.pop("l_fn", None)
    _reject_extras("theta-l", params)
    if not 0.0 < alpha < 0.5:
        raise ParamOutOfRange("theta-l requires 0 < alpha < 1/2")
    default = l_fn is None
    if default:
        l_fn = _half_on_positive
    if not callable(l_fn):
        raise ParamOutOfRange("l_fn must be callable")

    def evaluate(t: float, s: float) -> float:
        return alpha * l_fn(s) - t

    certs = {AxiomKind.SIGMA1, AxiomKind.DOLLAR}
    if default:
        certs.add(AxiomKind.L_FUNCTION)
    return ComparisonFn(
        name="theta-l",
        eval=evaluate,
        params=(("alpha", alpha),),
        declared_c_range=Interval(1.0, 2.0, lo_open=False, hi_open=False),
        analytic_certificates=frozenset(certs),
        sigma2_certificate=Interval(0.0, 1.0 / alpha),
        handles=(("l", l_fn),),
    )


def _build_psi_phi(params: dict) -> ComparisonFn:
    psi_fn = params.pop("psi_fn", _half)
    phi_fn = params.pop("phi_fn", _identity_fn)
    _reject_extras("psi-phi", params)
    if not callable(psi_fn) or not callable(phi_fn):
        raise ParamOutOfRange("psi_fn and phi_fn must be callable")

    def evaluate(t: float, s: float) -> float:
        return psi_fn(s) - phi_fn(t)

    return ComparisonFn(
        name="psi-phi",
        eval=evaluate,
        analytic_certificates=frozenset(
            {AxiomKind.UPPER_BOUND, AxiomKind.ZETA3, AxiomKind.DOLLAR}
        ),
        handles=(("psi", psi_fn), ("phi", phi_fn)),
        notes="handle contract: psi, phi continuous, zero only at 0, psi(t) < t <= phi(t)",
    )


def _reject_extras(member: str, params: dict) -> None:
    if params:
        raise ParamOutOfRange(f"{member} got unexpected parameter(s) {sorted(params)}")


_GALLERY_BUILDERS = {
    "gamma": _build_gamma,
    "beta": _build_beta,
    "step-g": _build_step_g,
    "step-omega": _build_step_omega,
    "chi": _build_chi,
    "theta-pi": _build_theta_pi,
    "theta-geraghty": _build_theta_geraghty,
    "theta-l": _build_theta_l,
    "tau": _build_tau,
    "psi-phi": _build_psi_phi,
    "linear": _build_linear,
}


# --------------------------------------------------------------------------
# Axiom checking
# --------------------------------------------------------------------------


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> bool:
        self.used += k
        return self.used <= self.limit

    @property
    def exhausted(self) -> bool:
        return self.used > self.limit


def _positive_scan(rng: random.Random, extra: int = 200) -> Iterator[float]:
    yield from CANONICAL_POSITIVE
    for _ in range(extra):
        yield rng.uniform(1e-6, 10.0)


def check_axiom(
    fn: ComparisonFn,
    kind: AxiomKind,
    c: float = 1.0,
    budget: int = DEFAULT_BUDGET,
    prefix_len: int = DEFAULT_PREFIX,
    seed: int = 0,
) -> AxiomVerdict:
    """Decide one axiom for one function, within an evaluation budget.

    Certificates short-circuit the search.  The limit-ratio axiom takes the
    constant ``c``; values below 1 are accepted with a warning and are
    vacuously true under the adopted reading (the paired limits cannot then
    be ordered unless both are zero).
    """
    rng = random.Random(seed)
    b = _Budget(budget)

    if kind is AxiomKind.SIGMA2:
        if not c > 0:
            raise ValueError("c must be > 0")
        if c < 1.0:
            warnings.warn(
                f"limit-ratio constant c={c:g} below 1 is outside the usual range",
                SubUnitCWarning,
                stacklevel=2,
            )
            return AxiomVerdict(
                kind,
                Outcome.CERTIFIED_HOLDS,
                detail="vacuously true for c < 1: no positive limit satisfies c*L >= L",
            )
        if fn.sigma2_certificate is not None and fn.sigma2_certificate.contains(c):
            return AxiomVerdict(
                kind,
                Outcome.CERTIFIED_HOLDS,
                detail=f"certified for c in {fn.sigma2_certificate.describe()}",
            )
        return _search_sigma2(fn, c, b, rng, prefix_len)

    if kind in fn.analytic_certificates:
        return AxiomVerdict(kind, Outcome.CERTIFIED_HOLDS, detail=fn.notes)

    if kind is AxiomKind.SIGMA1:
        return _search_sigma1(fn, b, rng, prefix_len)
    if kind is AxiomKind.DOLLAR:
        return _search_dollar(fn, b, rng, prefix_len)
    if kind is AxiomKind.UPPER_BOUND:
        return _search_upper_bound(fn, b, rng)
    if kind is AxiomKind.ZETA3:
        return _search_zeta3(fn, b, rng, prefix_len)
    if kind is AxiomKind.ETA2:
        return _search_eta2(fn, b, rng, prefix_len)
    if kind is AxiomKind.RHO1:
        return _search_rho1(fn, b, rng, prefix_len)
    if kind is AxiomKind.RHO2:
        return _search_rho2(fn, b, rng, prefix_len)
    if kind is AxiomKind.GERAGHTY:
        return _check_geraghty(fn, b, rng)
    if kind is AxiomKind.L_FUNCTION:
        return _check_l_function(fn, b, rng)
    raise ValueError(f"unhandled axiom kind {kind}")


def _undetermined(kind: AxiomKind, b: _Budget, note: str = "") -> AxiomVerdict:
    detail = note or "no counterexample found within budget"
    return AxiomVerdict(kind, Outcome.UNDETERMINED, budget_used=b.used, detail=detail)


def _prefix_all_positive(
    fn: ComparisonFn,
    pair_at: Callable[[int], tuple[float, float]],
    b: _Budget,
    prefix_len: int,
    start: int = 1,
    tail: tuple[int, ...] = TAIL_PROBES,
) -> bool:
    """Positivity of eval over a prefix plus sparse far-tail indices."""
    for n in itertools.chain(range(start, start + prefix_len), tail):
        if not b.spend():
            return False
        t, s = pair_at(n)
        if t <= 0 or s <= 0:
            return False
        if not fn.eval(t, s) > 0.0:
            return False
    return True


def _search_sigma1(fn, b, rng, prefix_len) -> AxiomVerdict:
    # Constant sequences decide exactly: positivity at (a, 2a) with a > 0.
    for a in _positive_scan(rng):
        if not b.spend():
            return _undetermined(AxiomKind.SIGMA1, b)
        if fn.eval(a, 2.0 * a) > 0.0:
            w = make_witness("constant", value=a)
            return AxiomVerdict(
                AxiomKind.SIGMA1,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"constant sequence a_n = {a:g} stays positive under the pairing",
            )
    for limit in CANONICAL_POSITIVE:
        w = make_witness("harmonic", limit=limit)
        if _prefix_all_positive(
            fn, lambda n: (w.term(n), w.term(n - 1) + w.term(n)), b, prefix_len, start=2
        ):
            return AxiomVerdict(
                AxiomKind.SIGMA1,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"harmonic family converges to {limit:g}, not 0",
            )
        if b.exhausted:
            return _undetermined(AxiomKind.SIGMA1, b)
    for scale in CANONICAL_POSITIVE:
        w = make_witness("linear", scale=scale)
        if _prefix_all_positive(
            fn, lambda n: (w.term(n), w.term(n - 1) + w.term(n)), b, prefix_len, start=2
        ):
            return AxiomVerdict(
                AxiomKind.SIGMA1,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail="linearly growing family diverges",
            )
        if b.exhausted:
            return _undetermined(AxiomKind.SIGMA1, b)
    return _undetermined(AxiomKind.SIGMA1, b)


def _sigma2_pair_families(limit: float, c: float) -> Iterable[WitnessSequence]:
    a_const = make_witness("constant", value=limit)
    b_const = make_witness("constant", value=c * limit)
    yield make_pair_witness(make_witness("harmonic-below", limit=limit), b_const)
    yield make_pair_witness(make_witness("harmonic", limit=limit), b_const)
    yield make_pair_witness(a_const, make_witness("harmonic", limit=c * limit))
    yield make_pair_witness(a_const, make_witness("harmonic-below", limit=c * limit))


def _search_sigma2(fn, c, b, rng, prefix_len) -> AxiomVerdict:
    for level in _positive_scan(rng):
        if not b.spend():
            return _undetermined(AxiomKind.SIGMA2, b)
        if fn.eval(level, c * level) > 0.0:
            w = make_pair_witness(
                make_witness("constant", value=level),
                make_witness("constant", value=c * level),
            )
            return AxiomVerdict(
                AxiomKind.SIGMA2,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"constant pair a_n = {level:g}, b_n = {c * level:g} with L = {level:g} > 0",
            )
    for level in CANONICAL_POSITIVE:
        for pair in _sigma2_pair_families(level, c):
            wa, wb = pair.components
            if _prefix_all_positive(
                fn, lambda n: (wa.term(n), wb.term(n)), b, prefix_len
            ):
                return AxiomVerdict(
                    AxiomKind.SIGMA2,
                    Outcome.FALSIFIED,
                    witness=pair,
                    budget_used=b.used,
                    detail=f"paired family with a_n -> {level:g} > 0, b_n -> {c * level:g}",
                )
            if b.exhausted:
                return _undetermined(AxiomKind.SIGMA2, b)
    return _undetermined(AxiomKind.SIGMA2, b)


def _search_dollar(fn, b, rng, prefix_len) -> AxiomVerdict:
    a_families = [make_witness("constant", value=a) for a in CANONICAL_POSITIVE]
    a_families += [make_witness("harmonic", limit=a) for a in CANONICAL_POSITIVE[:6]]
    for wa in a_families:
        for start in GEOMETRIC_STARTS:
            for ratio in GEOMETRIC_RATIOS:
                wb = make_witness("geometric", start=start, ratio=ratio)
                if _prefix_all_positive(
                    fn,
                    lambda n: (wa.term(n), wb.term(n)),
                    b,
                    prefix_len,
                    tail=GEOMETRIC_TAIL_PROBES,
                ):
                    pair = make_pair_witness(wa, wb)
                    return AxiomVerdict(
                        AxiomKind.DOLLAR,
                        Outcome.FALSIFIED,
                        witness=pair,
                        budget_used=b.used,
                        detail=f"b_n -> 0 geometrically while a_n -> {wa.limit():g} > 0",
                    )
                if b.exhausted:
                    return _undetermined(AxiomKind.DOLLAR, b)
    return _undetermined(AxiomKind.DOLLAR, b)


def _search_upper_bound(fn, b, rng) -> AxiomVerdict:
    for t in CANONICAL_POSITIVE:
        for s in CANONICAL_POSITIVE:
            if not b.spend():
                return _undetermined(AxiomKind.UPPER_BOUND, b)
            value = fn.eval(t, s)
            if value >= s - t:
                w = make_pair_witness(
                    make_witness("constant", value=t), make_witness("constant", value=s)
                )
                return AxiomVerdict(
                    AxiomKind.UPPER_BOUND,
                    Outcome.FALSIFIED,
                    witness=w,
                    budget_used=b.used,
                    detail=f"eval({t:g}, {s:g}) = {value:g} >= s - t = {s - t:g}",
                )
    while not b.exhausted:
        t, s = rng.uniform(1e-6, 10.0), rng.uniform(1e-6, 10.0)
        if not b.spend():
            break
        if fn.eval(t, s) >= s - t:
            w = make_pair_witness(
                make_witness("constant", value=t), make_witness("constant", value=s)
            )
            return AxiomVerdict(
                AxiomKind.UPPER_BOUND,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"eval({t:g}, {s:g}) >= s - t",
            )
    return _undetermined(AxiomKind.UPPER_BOUND, b)


def _estimate_limsup(values: list[float]) -> float:
    quarter = max(1, len(values) // 4)
    return max(values[-quarter:])


def _search_zeta3(fn, b, rng, prefix_len) -> AxiomVerdict:
    # Constant equal pairs decide exactly: limsup equals the single value.
    for a in _positive_scan(rng):
        if not b.spend():
            return _undetermined(AxiomKind.ZETA3, b)
        value = fn.eval(a, a)
        if value >= 0.0:
            w = make_pair_witness(
                make_witness("constant", value=a), make_witness("constant", value=a)
            )
            return AxiomVerdict(
                AxiomKind.ZETA3,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"constant pair at {a:g} gives limsup {value:g} >= 0",
            )
    for level in CANONICAL_POSITIVE:
        combos = (
            ("harmonic", "harmonic-below"),
            ("harmonic-below", "harmonic"),
            ("harmonic", "harmonic"),
        )
        for fam_t, fam_s in combos:
            wt = make_witness(fam_t, limit=level)
            ws = make_witness(fam_s, limit=level)
            values = []
            for n in range(1, prefix_len + 1):
                if not b.spend():
                    return _undetermined(AxiomKind.ZETA3, b)
                values.append(fn.eval(wt.term(n), ws.term(n)))
            if _estimate_limsup(values) > 1e-9:
                return AxiomVerdict(
                    AxiomKind.ZETA3,
                    Outcome.FALSIFIED,
                    witness=make_pair_witness(wt, ws),
                    budget_used=b.used,
                    detail=f"equal-limit family at {level:g} has tail estimate > 0",
                )
    return _undetermined(AxiomKind.ZETA3, b)


def _search_eta2(fn, b, rng, prefix_len) -> AxiomVerdict:
    # Constant pairs are bounded and non-increasing, so they decide exactly.
    for t in CANONICAL_POSITIVE:
        for s in CANONICAL_POSITIVE:
            if not b.spend():
                return _undetermined(AxiomKind.ETA2, b)
            ratio = (t + fn.eval(t, s)) / s
            if ratio >= 1.0:
                w = make_pair_witness(
                    make_witness("constant", value=t), make_witness("constant", value=s)
                )
                return AxiomVerdict(
                    AxiomKind.ETA2,
                    Outcome.FALSIFIED,
                    witness=w,
                    budget_used=b.used,
                    detail=f"constant pair ({t:g}, {s:g}) gives ratio {ratio:g} >= 1",
                )
    for t_level in CANONICAL_POSITIVE[:6]:
        for start in GEOMETRIC_STARTS:
            wt = make_witness("constant", value=t_level)
            ws = make_witness("geometric", start=start, ratio=0.9)
            ratios = []
            for n in range(1, prefix_len + 1):
                if not b.spend():
                    return _undetermined(AxiomKind.ETA2, b)
                t, s = wt.term(n), ws.term(n)
                ratios.append((t + fn.eval(t, s)) / s)
            if _estimate_limsup(ratios) > 1.0 + 1e-9:
                return AxiomVerdict(
                    AxiomKind.ETA2,
                    Outcome.FALSIFIED,
                    witness=make_pair_witness(wt, ws),
                    budget_used=b.used,
                    detail="ratio tail estimate exceeds 1",
                )
    return _undetermined(AxiomKind.ETA2, b)


def _search_rho1(fn, b, rng, prefix_len) -> AxiomVerdict:
    for a in _positive_scan(rng):
        if not b.spend():
            return _undetermined(AxiomKind.RHO1, b)
        if fn.eval(a, a) > 0.0:
            w = make_witness("constant", value=a)
            return AxiomVerdict(
                AxiomKind.RHO1,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"constant sequence at {a:g} stays positive under consecutive pairing",
            )
    for scale in CANONICAL_POSITIVE:
        w = make_witness("linear", scale=scale)
        if _prefix_all_positive(fn, lambda n: (w.term(n + 1), w.term(n)), b, prefix_len):
            return AxiomVerdict(
                AxiomKind.RHO1,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail="linearly growing sequence keeps consecutive pairing positive",
            )
        if b.exhausted:
            return _undetermined(AxiomKind.RHO1, b)
    for limit in CANONICAL_POSITIVE:
        w = make_witness("harmonic", limit=limit)
        if _prefix_all_positive(fn, lambda n: (w.term(n + 1), w.term(n)), b, prefix_len):
            return AxiomVerdict(
                AxiomKind.RHO1,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"harmonic family converges to {limit:g}, not 0",
            )
        if b.exhausted:
            return _undetermined(AxiomKind.RHO1, b)
    return _undetermined(AxiomKind.RHO1, b)


def _search_rho2(fn, b, rng, prefix_len) -> AxiomVerdict:
    for level in CANONICAL_POSITIVE:
        wa = make_witness("harmonic", limit=level)
        partners = (
            make_witness("constant", value=level),
            make_witness("harmonic", limit=level),
            make_witness("harmonic-below", limit=level),
        )
        for wb in partners:
            if _prefix_all_positive(fn, lambda n: (wa.term(n), wb.term(n)), b, prefix_len):
                return AxiomVerdict(
                    AxiomKind.RHO2,
                    Outcome.FALSIFIED,
                    witness=make_pair_witness(wa, wb),
                    budget_used=b.used,
                    detail=f"both sequences converge to {level:g} > 0 with a_n above the limit",
                )
            if b.exhausted:
                return _undetermined(AxiomKind.RHO2, b)
    return _undetermined(AxiomKind.RHO2, b)


def _check_geraghty(fn, b, rng) -> AxiomVerdict:
    g = fn.handle("g")
    if g is None:
        return _undetermined(AxiomKind.GERAGHTY, b, "no unary handle to check")
    for t in (0.0,) + CANONICAL_POSITIVE:
        if not b.spend():
            return _undetermined(AxiomKind.GERAGHTY, b)
        v = g(t)
        if v < 0.0 or v >= 1.0:
            w = make_witness("constant", value=t)
            return AxiomVerdict(
                AxiomKind.GERAGHTY,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail=f"g({t:g}) = {v:g} outside [0, 1)",
            )
    # Values approaching 1 far from the origin contradict the decay demand.
    for scale in (1.0, 10.0):
        probes = []
        for k in range(1, 7):
            if not b.spend():
                return _undetermined(AxiomKind.GERAGHTY, b)
            probes.append(g(scale * 10.0**k))
        if min(probes[-2:]) >= 1.0 - 1e-9:
            w = make_witness("linear", scale=scale)
            return AxiomVerdict(
                AxiomKind.GERAGHTY,
                Outcome.FALSIFIED,
                witness=w,
                budget_used=b.used,
                detail="g tends to 1 along a divergent sequence",
            )
    return _undetermined(AxiomKind.GERAGHTY, b)


def _check_l_function(fn, b, rng) -> AxiomVerdict:
    l = fn.handle("l")
    if l is None:
        return _undetermined(AxiomKind.L_FUNCTION, b, "no unary handle to check")
    if not b.spend():
        return _undetermined(AxiomKind.L_FUNCTION, b)
    at_zero = l(0.0)
    if abs(at_zero) > 1e-12:
        return AxiomVerdict(
            AxiomKind.L_FUNCTION,
            Outcome.FALSIFIED,
            witness=make_witness("constant", value=0.0),
            budget_used=b.used,
            detail=f"l(0) = {at_zero:g} != 0",
        )
    for eps in _positive_scan(rng):
        if not b.spend():
            return _undetermined(AxiomKind.L_FUNCTION, b)
        v = l(eps)
        if v <= 0.0:
            return AxiomVerdict(
                AxiomKind.L_FUNCTION,
                Outcome.FALSIFIED,
                witness=make_witness("constant", value=eps),
                budget_used=b.used,
                detail=f"l({eps:g}) = {v:g} not strictly positive",
            )
        if v > eps + 1e-12:
            # No window [eps, eps + delta] can stay below eps when the left
            # endpoint already exceeds it.
            return AxiomVerdict(
                AxiomKind.L_FUNCTION,
                Outcome.FALSIFIED,
                witness=make_witness("constant", value=eps),
                budget_used=b.used,
                detail=f"l({eps:g}) = {v:g} > {eps:g}",
            )
    return _undetermined(AxiomKind.L_FUNCTION, b)


# --------------------------------------------------------------------------
# Witness replay
# --------------------------------------------------------------------------


def replay_witness(
    fn: ComparisonFn, kind: AxiomKind, witness: WitnessSequence, c: float = 1.0
) -> bool:
    """Re-run a stored counterexample and confirm it violates the axiom.

    Checks the realized prefix exactly as the axiom states it, plus the
    closed-form limit claim that makes the sequence a counterexample.
    """
    if kind is AxiomKind.SIGMA1:
        terms = [witness.term(n) for n in range(1, WITNESS_TERMS + 1)]
        positive = all(
            fn.eval(terms[n], terms[n - 1] + terms[n]) > 0.0
            for n in range(1, len(terms))
        )
        return positive and witness.limit() != 0.0 and all(t > 0 for t in terms)
    if kind is AxiomKind.RHO1:
        terms = [witness.term(n) for n in range(1, WITNESS_TERMS + 1)]
        positive = all(
            fn.eval(terms[n], terms[n - 1]) > 0.0 for n in range(1, len(terms))
        )
        return positive and witness.limit() != 0.0 and all(t > 0 for t in terms)
    if kind in (AxiomKind.SIGMA2, AxiomKind.DOLLAR, AxiomKind.RHO2):
        wa, wb = witness.components
        pairs = [(wa.term(n), wb.term(n)) for n in range(1, WITNESS_TERMS + 1)]
        positive = all(fn.eval(t, s) > 0.0 for t, s in pairs)
        if not positive or not all(t > 0 and s > 0 for t, s in pairs):
            return False
        if kind is AxiomKind.SIGMA2:
            return wa.limit() > 0.0 and abs(wb.limit() - c * wa.limit()) <= 1e-9
        if kind is AxiomKind.DOLLAR:
            return wb.limit() == 0.0 and wa.limit() != 0.0
        return (
            wa.limit() > 0.0
            and abs(wb.limit() - wa.limit()) <= 1e-9
            and all(t > wa.limit() for t, _ in pairs)
        )
    if kind is AxiomKind.UPPER_BOUND:
        wa, wb = witness.components
        t, s = wa.param("value"), wb.param("value")
        return fn.eval(t, s) >= s - t
    if kind is AxiomKind.ZETA3:
        wa, wb = witness.components
        values = [fn.eval(wa.term(n), wb.term(n)) for n in range(1, WITNESS_TERMS + 1)]
        threshold = 0.0 if wa.family == "constant" else 1e-9
        return _estimate_limsup(values) >= threshold
    if kind is AxiomKind.ETA2:
        wa, wb = witness.components
        ratios = [
            (wa.term(n) + fn.eval(wa.term(n), wb.term(n))) / wb.term(n)
            for n in range(1, WITNESS_TERMS + 1)
        ]
        threshold = 1.0 if wa.family == "constant" else 1.0 + 1e-9
        return _estimate_limsup(ratios) >= threshold
    if kind in (AxiomKind.GERAGHTY, AxiomKind.L_FUNCTION):
        return True  # point witnesses carry their violation in the detail
    raise ValueError(f"unhandled axiom kind {kind}")


# --------------------------------------------------------------------------
# Classification
# --------------------------------------------------------------------------

CLASS_CONSTITUENTS = {
    "simulation": (AxiomKind.ZETA3, AxiomKind.UPPER_BOUND),
    "manageable": (AxiomKind.UPPER_BOUND, AxiomKind.ETA2),
    "r-function": (AxiomKind.RHO1, AxiomKind.RHO2),
    "dollar": (AxiomKind.DOLLAR,),
}


@dataclass(frozen=True)
class ClassVerdict:
    name: str
    outcome: Outcome
    failing_axiom: AxiomKind | None = None
    witness: WitnessSequence | None = None
    detail: str = ""


@dataclass(frozen=True)
class ClassificationMatrix:
    fn_name: str
    sigma_c: tuple[tuple[float, ClassVerdict], ...]
    simulation: ClassVerdict
    manageable: ClassVerdict
    r_function: ClassVerdict
    dollar: ClassVerdict
    axiom_verdicts: tuple[tuple[str, AxiomVerdict], ...]

    def sigma_c_at(self, c: float) -> ClassVerdict:
        for value, verdict in self.sigma_c:
            if value == c:
                return verdict
        raise KeyError(f"no verdict computed for c = {c}")


def classify(
    fn: ComparisonFn,
    c_values: Iterable[float] = (1.0,),
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> ClassificationMatrix:
    """Classify a function across the four axiom systems plus the decay tag.

    A class verdict is certified only when every constituent axiom is, and
    is falsified as soon as any constituent is, carrying that constituent's
    witness.
    """
    cache: dict[tuple[AxiomKind, float | None], AxiomVerdict] = {}

    def axiom(kind: AxiomKind, c: float | None = None) -> AxiomVerdict:
        key = (kind, c)
        if key not in cache:
            cache[key] = check_axiom(
                fn, kind, c=c if c is not None else 1.0, budget=budget, seed=seed
            )
        return cache[key]

    def combine(name: str, verdicts: list[tuple[AxiomKind, AxiomVerdict]]) -> ClassVerdict:
        for kind, v in verdicts:
            if v.outcome is Outcome.FALSIFIED:
                return ClassVerdict(name, Outcome.FALSIFIED, kind, v.witness, v.detail)
        if all(v.outcome is Outcome.CERTIFIED_HOLDS for _, v in verdicts):
            return ClassVerdict(name, Outcome.CERTIFIED_HOLDS)
        return ClassVerdict(name, Outcome.UNDETERMINED)

    sigma_entries = []
    for c in c_values:
        parts = [
            (AxiomKind.SIGMA1, axiom(AxiomKind.SIGMA1)),
            (AxiomKind.SIGMA2, axiom(AxiomKind.SIGMA2, c)),
        ]
        sigma_entries.append((float(c), combine(f"sigma-c({c:g})", parts)))

    sim_parts = [(k, axiom(k)) for k in CLASS_CONSTITUENTS["simulation"]]
    origin = fn.eval(0.0, 0.0)
    if abs(origin) > 1e-12:
        simulation = ClassVerdict(
            "simulation",
            Outcome.FALSIFIED,
            None,
            make_pair_witness(
                make_witness("constant", value=0.0), make_witness("constant", value=0.0)
            ),
            detail=f"eval(0, 0) = {origin:g} != 0",
        )
    else:
        simulation = combine("simulation", sim_parts)

    manageable = combine("manageable", [(k, axiom(k)) for k in CLASS_CONSTITUENTS["manageable"]])
    r_function = combine("r-function", [(k, axiom(k)) for k in CLASS_CONSTITUENTS["r-function"]])
    dollar = combine("dollar", [(AxiomKind.DOLLAR, axiom(AxiomKind.DOLLAR))])

    flat = tuple(
        (f"{kind.value}" + (f"@c={c:g}" if c is not None else ""), verdict)
        for (kind, c), verdict in sorted(
            cache.items(), key=lambda kv: (kv[0][0].value, kv[0][1] or 0.0)
        )
    )
    return ClassificationMatrix(
        fn_name=fn.name,
        sigma_c=tuple(sigma_entries),
        simulation=simulation,
        manageable=manageable,
        r_function=r_function,
        dollar=dollar,
        axiom_verdicts=flat,
    )
