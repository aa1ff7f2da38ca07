"""The two-variable determinant function det[f I + g D + h A] and its derivatives.

At an anchor ``(alpha, beta)`` with ``f = 0`` and ``g + h = 0`` the matrix
collapses to ``g(alpha, beta) * L``, and the first partials (and the mixed
partial in the exponent-weight direction) are multiples of the weighted
complexities.  Partials are computed by assembling the matrix over jets and
reading the infinitesimal part of a Berkowitz determinant; ``phi_interpolate``
rebuilds the whole polynomial from rational evaluations as an independent
check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping

from .complexity import kappa_cofactor, kappa_sigma_jet
from .graph import WeightedGraph, adjacency_matrix, vertex_weights
from .linalg import SquareMatrix, determinant
from .ring import LAMBDA, MU, BivarPoly, Jet1, Jet2, as_fraction, format_rational, poly_eval_jet

__all__ = [
    "DetFunSpec",
    "Anchor",
    "AnchorError",
    "CheckReport",
    "PresetIdentity",
    "PRESET_NAMES",
    "normalize_var",
    "anchor_conditions",
    "phi_matrix",
    "phi_eval",
    "phi_partial",
    "phi_mixed_partial",
    "theorem1_rhs",
    "theorem2_rhs",
    "verify_theorem1",
    "verify_theorem2",
    "preset",
    "verify_corollary",
    "bartholdi_anchor_audit",
    "phi_interpolate",
    "phi_symbolic",
    "interpolate_univariate",
]


class AnchorError(ValueError):
    pass


def normalize_var(var: str) -> str:
    """Map the accepted spellings of the two variables onto ``'l'`` / ``'m'``."""
    v = str(var).strip().lower()
    if v in ("l", "lambda", "λ", "t"):
        return "l"
    if v in ("m", "mu", "μ", "u"):
        return "m"
    raise ValueError(f"unknown variable {var!r}; use lambda/l/t or mu/m/u")


@dataclass(frozen=True)
class DetFunSpec:
    f: BivarPoly
    g: BivarPoly
    h: BivarPoly

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "g": self.g.to_json(), "h": self.h.to_json()}

    @classmethod
    def from_json(cls, doc: Mapping) -> "DetFunSpec":
        try:
            return cls(*(BivarPoly.from_json(doc[k]) for k in ("f", "g", "h")))
        except KeyError as exc:
            raise ValueError(f"spec is missing polynomial {exc.args[0]!r}") from None


def anchor_conditions(spec: DetFunSpec, alpha, beta) -> dict[str, Fraction]:
    a, b = as_fraction(alpha), as_fraction(beta)
    return {
        "f": spec.f.evaluate(a, b),
        "g+h": spec.g.evaluate(a, b) + spec.h.evaluate(a, b),
    }


@dataclass(frozen=True)
class Anchor:
    """A point where ``f = 0`` and ``g + h = 0``; refuses to exist otherwise."""

    spec: DetFunSpec = field(repr=False)
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        cond = anchor_conditions(self.spec, self.alpha, self.beta)
        failed = []
        if cond["f"] != 0:
            failed.append(f"f(alpha, beta) = {format_rational(cond['f'])} != 0")
        if cond["g+h"] != 0:
            failed.append(f"g(alpha, beta) + h(alpha, beta) = {format_rational(cond['g+h'])} != 0")
        if failed:
            pt = f"({format_rational(self.alpha)}, {format_rational(self.beta)})"
            raise AnchorError(f"invalid anchor {pt}: " + "; ".join(failed))

    def point(self) -> tuple[Fraction, Fraction]:
        return self.alpha, self.beta


def _require_anchor(spec: DetFunSpec, anchor) -> Anchor:
    if not isinstance(anchor, Anchor):
        raise AnchorError(f"expected a validated Anchor, got {type(anchor).__name__}")
    if anchor.spec != spec:
        raise AnchorError("anchor was validated against a different spec")
    return anchor


@dataclass(frozen=True)
class CheckReport:
    name: str
    lhs: Any
    rhs: Any
    equal: bool

    def to_json(self) -> dict:
        fmt = lambda x: format_rational(x) if isinstance(x, (int, Fraction)) else str(x)  # noqa: E731
        return {"name": self.name, "lhs": fmt(self.lhs), "rhs": fmt(self.rhs), "equal": self.equal}


# ------------------------------------------------------------------ matrices


def phi_matrix(spec: DetFunSpec, g: WeightedGraph, at_l, at_m) -> SquareMatrix:
    """``f I + g D + h A`` with the polynomials evaluated at ``(at_l, at_m)``."""
    fv = spec.f.evaluate(at_l, at_m)
    gv = spec.g.evaluate(at_l, at_m)
    hv = spec.h.evaluate(at_l, at_m)
    deg = vertex_weights(g)
    adj = adjacency_matrix(g)
    n = g.vertex_count
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(fv + gv * deg[i])
            else:
                a = adj[i, j]
                row.append(hv * a if a != 0 else 0)
        rows.append(row)
    return SquareMatrix(rows)


def phi_eval(spec: DetFunSpec, g: WeightedGraph, l0, m0) -> Fraction:
    return determinant(phi_matrix(spec, g, as_fraction(l0), as_fraction(m0)))


def _seed(var: str, anchor: Anchor, make):
    """Return (lambda, mu) arguments with the infinitesimal on ``var``."""
    a, b = anchor.point()
    if normalize_var(var) == "l":
        return make(a, True), make(b, False)
    return make(a, False), make(b, True)


def phi_partial(spec: DetFunSpec, g: WeightedGraph, var: str, anchor: Anchor) -> Fraction:
    _require_anchor(spec, anchor)
    at_l, at_m = _seed(var, anchor, lambda x, d: Jet1(x, 1 if d else 0))
    d = determinant(phi_matrix(spec, g, at_l, at_m), method="berkowitz")
    return d.a1 if isinstance(d, Jet1) else Fraction(0)


def phi_mixed_partial(spec: DetFunSpec, g: WeightedGraph, var: str, anchor: Anchor) -> Fraction:
    """d^2/dx d(var) of Phi for weights ``x**w(e)``, at the anchor and ``x = 1``."""
    _require_anchor(spec, anchor)
    at_l, at_m = _seed(var, anchor, lambda x, d: Jet2(x, 1 if d else 0, 0, 0))
    xg = g.map_weights(lambda w: Jet2(1, 0, w, 0))
    d = determinant(phi_matrix(spec, xg, at_l, at_m), method="berkowitz")
    return d.a11 if isinstance(d, Jet2) else Fraction(0)


def _anchor_partials(spec: DetFunSpec, var: str, anchor: Anchor):
    """g(alpha, beta) and the ``var``-partials of f, g, h at the anchor."""
    at_l, at_m = _seed(var, anchor, lambda x, d: Jet2(x, 1 if d else 0, 0, 0))
    fj, gj, hj = (_as_jet2(poly_eval_jet(p, at_l, at_m)) for p in (spec.f, spec.g, spec.h))
    return gj.a00, fj.a10, gj.a10, hj.a10


def _as_jet2(x) -> Jet2:
    return x if isinstance(x, Jet2) else Jet2(x)


def theorem1_rhs(spec: DetFunSpec, g: WeightedGraph, var: str, anchor: Anchor) -> Fraction:
    """``g^(n-1) [f_v n + (g_v + h_v) 2 w(G)] kappa(G_w)`` at the anchor."""
    _require_anchor(spec, anchor)
    n = g.vertex_count
    g0, fv, gv, hv = _anchor_partials(spec, var, anchor)
    kappa = kappa_cofactor(g)
    return g0 ** (n - 1) * (fv * n + (gv + hv) * 2 * g.total_weight()) * kappa


def theorem2_rhs(spec: DetFunSpec, g: WeightedGraph, var: str, anchor: Anchor) -> Fraction:
    _require_anchor(spec, anchor)
    n, m = g.vertex_count, g.edge_count
    g0, fv, gv, hv = _anchor_partials(spec, var, anchor)
    kappa, kappa_sigma = kappa_sigma_jet(g)
    lead = g0 ** (n - 1)
    return (
        lead * (gv + hv) * 2 * g.total_weight() * kappa
        + lead * (fv * n + (gv + hv) * 2 * m) * kappa_sigma
    )


def verify_theorem1(spec: DetFunSpec, g: WeightedGraph, var: str, anchor: Anchor, name: str = "theorem1") -> CheckReport:
    lhs = phi_partial(spec, g, var, anchor)
    rhs = theorem1_rhs(spec, g, var, anchor)
    return CheckReport(name, lhs, rhs, lhs == rhs)


def verify_theorem2(spec: DetFunSpec, g: WeightedGraph, var: str, anchor: Anchor, name: str = "theorem2") -> CheckReport:
    lhs = phi_mixed_partial(spec, g, var, anchor)
    rhs = theorem2_rhs(spec, g, var, anchor)
    return CheckReport(name, lhs, rhs, lhs == rhs)


# ------------------------------------------------------------------- presets

ONE = BivarPoly.const(1)

# rhs(nu, eps, total_weight, kappa)
RhsFn = Callable[[int, int, Fraction, Fraction], Fraction]


@dataclass(frozen=True)
class PresetIdentity:
    name: str
    spec: DetFunSpec
    anchor: Anchor
    variable: str
    expected_rhs: str
    rhs: RhsFn = field(repr=False)
    unit_weights_only: bool = False


def _build_presets() -> dict[str, PresetIdentity]:
    zeta = DetFunSpec(ONE - LAMBDA * LAMBDA, LAMBDA * LAMBDA, -LAMBDA)
    genchar = DetFunSpec(LAMBDA, MU, -ONE)
    one_minus_t = ONE - LAMBDA
    bartholdi = DetFunSpec(ONE - one_minus_t**2 * MU**2, one_minus_t * MU**2, -MU)
    lapchar = DetFunSpec(MU, -ONE, ONE)
    out = [
        PresetIdentity(
            "northshield", zeta, Anchor(zeta, 1, 0), "l",
            "2(eps_G - nu_G) kappa(G)", lambda n, m, w, k: 2 * (m - n) * k, True,
        ),
        PresetIdentity(
            "mizuno-sato", zeta, Anchor(zeta, 1, 0), "l",
            "2(omega(G) - nu_G) kappa(G_w)", lambda n, m, w, k: 2 * (w - n) * k,
        ),
        PresetIdentity(
            "gencharpoly", genchar, Anchor(genchar, 0, 1), "m",
            "2 eps_G kappa(G)", lambda n, m, w, k: 2 * m * k, True,
        ),
        PresetIdentity(
            "bartholdi", bartholdi, Anchor(bartholdi, 0, 1), "l",
            "2(nu_G - eps_G) kappa(G)", lambda n, m, w, k: 2 * (n - m) * k, True,
        ),
        PresetIdentity(
            "laplacian-charpoly", lapchar, Anchor(lapchar, 0, 0), "m",
            "(-1)^(nu_G - 1) nu_G kappa(G_w)", lambda n, m, w, k: (-1) ** (n - 1) * n * k,
        ),
    ]
    return {p.name: p for p in out}


_PRESETS = _build_presets()
PRESET_NAMES = tuple(_PRESETS)

# the u-derivative identity that accompanies the t-derivative one for B_G
BARTHOLDI_U_RHS = ("2(eps_G - nu_G) kappa(G)", lambda n, m, w, k: 2 * (m - n) * k)
BARTHOLDI_WARNING = (
    "bartholdi: the nominal anchor (t,u)=(1,0) violates f(alpha,beta)=0 (f(1,0)=1), "
    "so identities are checked at (t,u)=(0,1), which satisfies both anchor conditions; "
    "the nominal derivative 'd/dmu' is read as d/du"
)


def preset(name: str) -> PresetIdentity:
    try:
        return _PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}") from None


def verify_corollary(name: str, g: WeightedGraph, var: str | None = None) -> CheckReport:
    """Check a preset's corollary: jet partial against the corollary's own closed form.

    ``var`` only matters for ``bartholdi``, whose ``u``-derivative identity is
    reachable with ``var='u'``.
    """
    p = preset(name)
    if p.unit_weights_only and not g.is_unit():
        raise ValueError(f"preset {name!r} is stated for unweighted graphs; got non-unit weights")
    v = normalize_var(var) if var is not None else p.variable
    rhs_fn = p.rhs
    label = name
    if v != p.variable:
        if name != "bartholdi":
            raise ValueError(f"preset {name!r} has no identity for variable {var!r}")
        rhs_fn = BARTHOLDI_U_RHS[1]
        label = "bartholdi-u"
    lhs = phi_partial(p.spec, g, v, p.anchor)
    rhs = rhs_fn(g.vertex_count, g.edge_count, g.total_weight(), kappa_cofactor(g))
    return CheckReport(label, lhs, rhs, lhs == rhs)


def bartholdi_anchor_audit() -> dict:
    """Anchor-condition values at the nominal point (1,0) and at the point used, (0,1)."""
    spec = preset("bartholdi").spec
    out = {}
    for label, pt in (("nominal", (1, 0)), ("used", (0, 1))):
        cond = anchor_conditions(spec, *pt)
        out[label] = {
            "point": [format_rational(pt[0]), format_rational(pt[1])],
            "f": format_rational(cond["f"]),
            "g+h": format_rational(cond["g+h"]),
            "valid": cond["f"] == 0 and cond["g+h"] == 0,
        }
    return out


# ------------------------------------------------------------------- oracles


def interpolate_univariate(xs: list[Fraction], ys: list[Any]) -> list[Any]:
    """Monomial coefficients (lowest first) of the interpolant through the points.

    Newton divided differences over the rationals.
    """
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomials, Horner from the top
    poly: list[Any] = [coef[n - 1]] if n else []
    for k in range(n - 2, -1, -1):
        # poly <- poly * (x - xs[k]) + coef[k]
        shifted = [0] + poly
        for i in range(len(poly)):
            shifted[i] = shifted[i] - xs[k] * poly[i]
        shifted[0] = shifted[0] + coef[k]
        poly = shifted
    return poly


def phi_interpolate(spec: DetFunSpec, g: WeightedGraph) -> BivarPoly:
    """Phi as an explicit polynomial, rebuilt from exact evaluations on a grid.

    Degree bounds per variable are ``n * max(deg f, deg g, deg h)``; every
    grid value is a Bareiss determinant over the rationals.
    """
    n = g.vertex_count
    dl = n * max(0, *(p.degree("l") for p in (spec.f, spec.g, spec.h)))
    dm = n * max(0, *(p.degree("m") for p in (spec.f, spec.g, spec.h)))
    xl = [Fraction(i) for i in range(dl + 1)]
    xm = [Fraction(j) for j in range(dm + 1)]
    # for each mu node, the lambda-coefficients of Phi(., mu_j)
    per_mu = [interpolate_univariate(xl, [phi_eval(spec, g, a, b) for a in xl]) for b in xm]
    terms = {}
    for a in range(dl + 1):
        col = interpolate_univariate(xm, [per_mu[j][a] for j in range(dm + 1)])
        for b, c in enumerate(col):
            if c:
                terms[(a, b)] = c
    return BivarPoly(terms)


def phi_symbolic(spec: DetFunSpec, g: WeightedGraph) -> BivarPoly:
    """Phi by a Berkowitz determinant over polynomial entries."""
    return determinant(phi_matrix(spec, g, LAMBDA, MU), method="berkowitz") + BivarPoly()
