"""Random rational plane curves with a prescribed cusp count, and the
numerical census of their nodes and cusps.

Cusps are planted by construction: both affine derivative components carry
the factor m(t) = prod (t - t_i), so the parameterization degenerates exactly
at the chosen parameters.  Nodes are then located through the divided-
difference system and resultant elimination; draws whose census disagrees
with the genus-zero count delta + kappa = (c-1)(c-2)/2 are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dualize import RationalCurveParam, dual_param
from .errors import CensusMismatch, ClusterAmbiguity, GenerationExhausted, ZeroPolynomial
from .poly import UniPoly, divided_difference_pair, unipoly_gcd, unipoly_gcd_many
from .resultants import resultant_bipoly_in_s
from .rootfind import find_roots
from .scalars import to_complex

_MAX_TRIES = 50
_ISO_MARGIN = 1e-2  # generation-time margin keeping singular points off u^2+v^2=0


@dataclass(frozen=True)
class Node:
    """An ordinary double point: two parameters mapping to the same point."""

    params: tuple  # (s, t), canonically ordered
    point: np.ndarray
    residual: float = 0.0


@dataclass(frozen=True)
class Cusp:
    """A parameter where the tangent map degenerates, with its image point."""

    param: complex
    point: np.ndarray
    tangent: np.ndarray
    residual: float = 0.0


@dataclass(frozen=True)
class SingularityData:
    nodes: tuple
    cusps: tuple
    degree: int

    @property
    def delta(self):
        return len(self.nodes)

    @property
    def kappa(self):
        return len(self.cusps)

    def points(self):
        return [n.point for n in self.nodes] + [c.point for c in self.cusps]


def _normalize_point(p):
    p = np.asarray(p, dtype=complex)
    idx = int(np.argmax(np.abs(p)))
    return p / p[idx]


def projective_distance(p, q):
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    return float(np.linalg.norm(np.cross(p, q)) / (np.linalg.norm(p) * np.linalg.norm(q)))


def _canonical_pair(s, t):
    return (s, t) if (s.real, s.imag) <= (t.real, t.imag) else (t, s)


def _newton_refine_pair(P, Q, Ps, Pt, Qs, Qt, s, t, steps=25, tol=1e-14):
    for _ in range(steps):
        f1 = complex(P.evaluate(s, t))
        f2 = complex(Q.evaluate(s, t))
        j11 = complex(Ps.evaluate(s, t))
        j12 = complex(Pt.evaluate(s, t))
        j21 = complex(Qs.evaluate(s, t))
        j22 = complex(Qt.evaluate(s, t))
        det = j11 * j22 - j12 * j21
        if abs(det) == 0.0:
            break
        ds = (f1 * j22 - f2 * j12) / det
        dt = (j11 * f2 - j21 * f1) / det
        s, t = s - ds, t - dt
        if abs(ds) + abs(dt) <= tol * (1.0 + abs(s) + abs(t)):
            break
    return s, t


def _locate_cusps(param: RationalCurveParam, tol):
    w1, w2, w3 = param.wedge()
    nonzero = [w for w in (w1, w2, w3) if not w.is_zero()]
    if not nonzero:
        raise CensusMismatch("tangent map degenerates identically (a line?)")
    g = unipoly_gcd_many(nonzero)
    if g.effective_degree() == 0:
        return [], g
    roots = find_roots(g.as_float(), tol=tol)
    if any(m > 1 for _, m in roots.roots):
        raise CensusMismatch("non-simple cusp factor in the tangent degeneration")
    cusps = []
    d2 = RationalCurveParam(param.a.derivative().derivative(),
                            param.b.derivative().derivative(),
                            param.c.derivative().derivative())
    wfloats = [w.as_float() for w in (w1, w2, w3)]
    for r, _ in roots.roots:
        point = _normalize_point(param.evaluate(r))
        tangent = d2.evaluate(r)
        resid = max(abs(to_complex(w.evaluate(r))) for w in wfloats)
        cusps.append(Cusp(complex(r), point, tangent, resid))
    return cusps, g


def locate_singularities(param: RationalCurveParam, tol=1e-9) -> SingularityData:
    """Locate all nodes and cusps of a rational parameterization.

    Cusps are the common roots of the wedge components; nodes are the
    off-diagonal common zeros of the divided-difference pair, found by
    resultant elimination in one variable, partner matching in the other,
    projective validation of the image points, and a Newton polish.
    """
    param = param.rationalized().validate(tol)
    c = param.degree
    expected_total = (c - 1) * (c - 2) // 2

    cusps, _ = _locate_cusps(param, tol)
    cusp_params = [cu.param for cu in cusps]

    P, Q = divided_difference_pair(param.a, param.b, param.c)
    nodes = []
    if not (P.is_zero() and Q.is_zero()) and expected_total - len(cusps) != 0:
        try:
            elim = resultant_bipoly_in_s(P, Q)
        except ZeroPolynomial as exc:
            raise CensusMismatch("divided-difference system is degenerate") from exc
        elim_f = elim.as_float()
        if elim_f.effective_degree(rel_tol=1e-12) < 1:
            troots = []
        else:
            troots = [r for r, _ in find_roots(elim_f, tol=tol).roots]
        Pf, Qf = P, Q
        Ps, Pt = P.diff_s(), P.diff_t()
        Qs, Qt = Q.diff_s(), Q.diff_t()
        pscale = max(abs(x) for row in P.as_float_array() for x in row)
        qscale = max(abs(x) for row in Q.as_float_array() for x in row)
        seen = []
        for t0 in troots:
            if any(abs(t0 - cp) < 1e-6 * (1 + abs(cp)) for cp in cusp_params):
                continue
            spoly = P.specialize_t(t0).as_float()
            match_poly, match_scale = Q, qscale
            if spoly.effective_degree(rel_tol=1e-11) < 1:
                spoly = Q.specialize_t(t0).as_float()
                match_poly, match_scale = P, pscale
                if spoly.effective_degree(rel_tol=1e-11) < 1:
                    continue
            for s0, _ in find_roots(spoly, tol=tol).roots:
                if abs(s0 - t0) <= 1e-7 * (1 + abs(t0)):
                    continue
                if abs(complex(match_poly.evaluate(s0, t0))) > 1e-5 * max(match_scale, 1.0):
                    continue
                s_r, t_r = _newton_refine_pair(Pf, Qf, Ps, Pt, Qs, Qt, s0, t0)
                pd = projective_distance(param.evaluate(s_r), param.evaluate(t_r))
                if pd > 1e-7:
                    continue
                pair = _canonical_pair(complex(s_r), complex(t_r))
                if any(abs(pair[0] - p[0]) + abs(pair[1] - p[1]) < 1e-6 for p in seen):
                    continue
                seen.append(pair)
                point = _normalize_point(param.evaluate(pair[0]))
                resid = max(abs(complex(P.evaluate(*pair))) / max(pscale, 1.0),
                            abs(complex(Q.evaluate(*pair))) / max(qscale, 1.0))
                nodes.append(Node(pair, point, resid))

    found = len(nodes) + len(cusps)
    if found != expected_total:
        raise CensusMismatch(
            f"found {len(nodes)} nodes + {len(cusps)} cusps, expected total "
            f"{expected_total} for degree {c}")

    pts = [n.point for n in nodes] + [cu.point for cu in cusps]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if projective_distance(pts[i], pts[j]) < max(tol, 1e-7):
                raise ClusterAmbiguity(
                    "two singular points coincide projectively; degenerate draw")
    nodes.sort(key=lambda n: (n.params[0].real, n.params[0].imag))
    cusps = sorted(cusps, key=lambda cu: (cu.param.real, cu.param.imag))
    return SingularityData(tuple(nodes), tuple(cusps), c)


def _draw_fraction(rng, denominator=1000):
    val = int(rng.integers(-denominator, denominator + 1))
    if val == 0:
        val = 1
    return Fraction(val, denominator)


def _draw_unipoly(rng, degree, denominator=1000):
    coeffs = [_draw_fraction(rng, denominator) for _ in range(degree + 1)]
    return UniPoly(coeffs)


def _draw_cusp_params(rng, kappa):
    params = []
    guard = 0
    while len(params) < kappa:
        cand = Fraction(int(rng.integers(-64, 65)), 64)
        if all(abs(cand - p) >= Fraction(1, 4) for p in params):
            params.append(cand)
        guard += 1
        if guard > 500:
            params = []
            guard = 0
    return params


# margins defining "general position" operationally: singular parameters and
# singular points that almost collide make the condition system ill-conditioned
_PARAM_SEPARATION = 0.05
_POINT_SEPARATION = 1e-2


def _well_separated(census: SingularityData):
    params = [cu.param for cu in census.cusps]
    for n in census.nodes:
        params.extend(n.params)
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            if abs(params[i] - params[j]) < _PARAM_SEPARATION:
                return False
    pts = census.points()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if projective_distance(pts[i], pts[j]) < _POINT_SEPARATION:
                return False
    return True


def _integrate(p: UniPoly, constant):
    coeffs = [constant] + [p.coeffs[k] / (k + 1) for k in range(len(p.coeffs))]
    return UniPoly(coeffs)


def _isotropic_margin(point):
    p = np.asarray(point, dtype=complex)
    return abs(p[0] ** 2 + p[1] ** 2) / float(np.linalg.norm(p) ** 2)


def generate_curve_with_census(c, kappa, seed, tol=1e-9, max_tries=_MAX_TRIES):
    """Draw a random rational curve of degree c with kappa cusps, plus its census.

    Rejection criteria (redrawn): wrong singularity census, non-simple
    singularities, a singular point too close to u^2 + v^2 = 0, the curve
    through (0:0:1) (vanishing w^c coefficient after implicitization), or a
    reduced dual degree different from 2(c-1) - kappa.
    """
    if c < 2:
        raise GenerationExhausted("need degree >= 2")
    if kappa < 0 or kappa > (c - 1) * (c - 2) // 2:
        raise GenerationExhausted(f"kappa={kappa} is inadmissible for degree {c}")
    if c - 1 - kappa < 0:
        raise GenerationExhausted(
            f"the planted-cusp generator cannot reach kappa={kappa} at degree {c}")
    rng = np.random.default_rng(np.random.Philox(np.random.SeedSequence(int(seed))))
    expected_class = 2 * (c - 1) - kappa
    for _ in range(max_tries):
        cusp_params = _draw_cusp_params(rng, kappa)
        m = UniPoly([Fraction(1)])
        for tcusp in cusp_params:
            m = m * UniPoly([-tcusp, Fraction(1)])
        p = _draw_unipoly(rng, c - 1 - kappa)
        q = _draw_unipoly(rng, c - 1 - kappa)
        x = _integrate(m * p, _draw_fraction(rng))
        y = _integrate(m * q, _draw_fraction(rng))
        param = RationalCurveParam(x, y, UniPoly([Fraction(1)]))
        try:
            param.validate(tol)
        except Exception:
            continue
        if unipoly_gcd(x, y).effective_degree() > 0:
            continue  # curve passes through (0:0:1); w^c coefficient would vanish
        try:
            census = locate_singularities(param, tol)
        except (CensusMismatch, ClusterAmbiguity, ZeroPolynomial):
            continue
        if census.kappa != kappa:
            continue
        if not _well_separated(census):
            continue
        if any(_isotropic_margin(pt) < _ISO_MARGIN for pt in census.points()):
            continue
        if dual_param(param).degree != expected_class:
            continue
        return param, census
    raise GenerationExhausted(
        f"no admissible curve after {max_tries} draws for (c, kappa, seed) = "
        f"{(c, kappa, seed)}")


def random_rational_curve(c, kappa, seed, tol=1e-9, max_tries=_MAX_TRIES):
    """Random rational curve of degree c with exactly kappa cusps (see census twin)."""
    param, _ = generate_curve_with_census(c, kappa, seed, tol=tol, max_tries=max_tries)
    return param
