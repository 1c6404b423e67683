"""Equiclassical tangent spaces, the focal-map differential, and
minimal-class confocal constructions.

A first-order deformation of a dual curve of degree c, in the chart where the
w^c coefficient is 1, is a degree-c polynomial H with zero w^c coefficient
satisfying one linear condition per node (vanishing at the point) and two per
cusp (vanishing at the point, and vanishing of the second derivative of the
pullback, which forces contact order three there).  The differential of the
focal map sends H to the coefficients of its isotropic restriction; its
kernel consists of multiples of u^2 + v^2 whose quotients satisfy the same
conditions in degree c - 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CensusMismatch,
    SchemeOnIsotropicConic,
    ToleranceAmbiguity,
    TooFewFoci,
)
from .poly import TriPoly, monomials_of_degree
from .ratgen import SingularityData, projective_distance
from .scalars import to_complex

_REAL_POINT_TOL = 1e-8


@dataclass(frozen=True)
class EquiclassicalScheme:
    """Nodes and cusps of a dual curve, with preimage parameters."""

    nodes: tuple
    cusps: tuple
    degree: int

    @classmethod
    def from_census(cls, census: SingularityData):
        return cls(census.nodes, census.cusps, census.degree)

    def points(self):
        return [n.point for n in self.nodes] + [c.point for c in self.cusps]

    @property
    def delta(self):
        return len(self.nodes)

    @property
    def kappa(self):
        return len(self.cusps)

    def check_isotropic_disjoint(self, tol=1e-9):
        for p in self.points():
            v = np.asarray(p, dtype=complex)
            margin = abs(v[0] ** 2 + v[1] ** 2) / float(np.linalg.norm(v) ** 2)
            if margin < tol:
                raise SchemeOnIsotropicConic(
                    f"scheme point {v} lies on u^2+v^2=0 within tolerance")

    def validate(self, param, tol=1e-7):
        """Check the scheme against its parameterization."""
        for n in self.nodes:
            s, t = n.params
            if projective_distance(param.evaluate(s), param.evaluate(t)) > tol:
                raise CensusMismatch(f"node parameters {n.params} do not meet")
        wedges = [w.as_float() for w in param.wedge()]
        wscale = max(max((abs(c) for c in w.coeffs), default=0.0) for w in wedges)
        for cu in self.cusps:
            val = max(abs(to_complex(w.evaluate(cu.param))) for w in wedges)
            if val > tol * max(wscale, 1.0):
                raise CensusMismatch(f"no cusp at parameter {cu.param}")
        return self


def _is_real_vector(v, tol=_REAL_POINT_TOL):
    return bool(np.max(np.abs(np.asarray(v, dtype=complex).imag)) <= tol)


def _monomial_values(point, monomials):
    p = np.asarray(point, dtype=complex)
    return np.array([p[0] ** i * p[1] ** j * p[2] ** k for (i, j, k) in monomials])


class _Jet2:
    """Second-order jet (value, first, second derivative) at a fixed parameter."""

    __slots__ = ("v", "d1", "d2")

    def __init__(self, v, d1, d2):
        self.v, self.d1, self.d2 = v, d1, d2

    def __mul__(self, other):
        return _Jet2(self.v * other.v,
                     self.v * other.d1 + self.d1 * other.v,
                     self.v * other.d2 + 2 * self.d1 * other.d1 + self.d2 * other.v)

    def __pow__(self, n):
        acc = _Jet2(1.0 + 0j, 0j, 0j)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc


def _component_jet(poly, t0):
    p = poly.as_float()
    d1 = p.derivative()
    d2 = d1.derivative()
    return _Jet2(complex(p.evaluate(t0)), complex(d1.evaluate(t0)),
                 complex(d2.evaluate(t0)))


def _cusp_condition_values(param, t0, monomials):
    """Per-monomial (value, second derivative) of the pullback at the cusp."""
    ja = _component_jet(param.a, t0)
    jb = _component_jet(param.b, t0)
    jc = _component_jet(param.c, t0)
    vals = []
    svals = []
    # scale the jet to a unit-size point so rows stay comparable across cusps
    norm = max(abs(ja.v), abs(jb.v), abs(jc.v))
    scale = _Jet2(1.0 / norm, 0j, 0j)
    ja, jb, jc = ja * scale, jb * scale, jc * scale
    for (i, j, k) in monomials:
        jet = ja ** i * jb ** j * jc ** k
        vals.append(jet.v)
        svals.append(jet.d2)
    return np.array(vals), np.array(svals)


def _classify_nodes(nodes, tol=1e-7):
    reals, complexes = [], []
    for n in nodes:
        (reals if _is_real_vector(n.point) else complexes).append(n)
    pairs = []
    used = [False] * len(complexes)
    for i, n in enumerate(complexes):
        if used[i]:
            continue
        partner = None
        for j in range(i + 1, len(complexes)):
            if used[j]:
                continue
            if projective_distance(np.conj(n.point), complexes[j].point) < tol:
                partner = j
                break
        if partner is None:
            raise CensusMismatch("node set is not conjugation-stable")
        used[i] = used[partner] = True
        pairs.append(n)
    return reals, pairs


def _classify_cusps(cusps, tol=1e-7):
    reals, complexes = [], []
    for c in cusps:
        (reals if abs(c.param.imag) <= tol else complexes).append(c)
    pairs = []
    used = [False] * len(complexes)
    for i, c in enumerate(complexes):
        if used[i]:
            continue
        partner = None
        for j in range(i + 1, len(complexes)):
            if not used[j] and abs(np.conj(c.param) - complexes[j].param) < tol:
                partner = j
                break
        if partner is None:
            raise CensusMismatch("cusp set is not conjugation-stable")
        used[i] = used[partner] = True
        pairs.append(c)
    return reals, pairs


@dataclass(frozen=True)
class ConditionMatrix:
    """Real linear conditions cutting the equiclassical tangent space."""

    rows: np.ndarray
    monomials: tuple
    degree: int
    delta: int
    kappa: int
    complex_rank: int

    @property
    def n_conditions(self):
        return self.rows.shape[0]

    @property
    def n_columns(self):
        return self.rows.shape[1]

    def rank(self, tol=1e-8):
        if self.rows.size == 0:
            return 0
        sv = np.linalg.svd(self.rows, compute_uv=False)
        if sv.size == 0 or sv[0] == 0.0:
            return 0
        return int(np.sum(sv > tol * sv[0]))

    def null_space(self, tol=1e-8):
        """Orthonormal basis of the solution space, as rows."""
        n = self.n_columns
        if self.rows.size == 0:
            return np.eye(n)
        _, sv, vh = np.linalg.svd(self.rows, full_matrices=True)
        rank = int(np.sum(sv > tol * sv[0])) if sv.size and sv[0] > 0 else 0
        return vh[rank:]


def condition_matrix(param, scheme: EquiclassicalScheme, degree, chart,
                     iso_tol=1e-9) -> ConditionMatrix:
    """Linear node/cusp conditions on degree-``degree`` polynomials.

    One real row per real node, two per conjugate node pair; two per real
    cusp (point value and second pullback derivative), four per conjugate
    cusp pair.  With ``chart`` the w^degree coefficient slot is removed,
    matching the affine chart where it is pinned to 1.
    """
    scheme.check_isotropic_disjoint(iso_tol)
    monos = tuple(monomials_of_degree(degree, drop_top_w=chart))
    rows = []
    complex_rows = []

    real_nodes, pair_nodes = _classify_nodes(scheme.nodes)
    for n in real_nodes:
        vals = _monomial_values(n.point, monos)
        rows.append(vals.real)
        complex_rows.append(vals)
    for n in pair_nodes:
        vals = _monomial_values(n.point, monos)
        rows.append(vals.real)
        rows.append(vals.imag)
        complex_rows.append(vals)
        complex_rows.append(np.conj(vals))

    real_cusps, pair_cusps = _classify_cusps(scheme.cusps)
    for cu in real_cusps:
        vals, svals = _cusp_condition_values(param, cu.param, monos)
        rows.append(vals.real)
        rows.append(svals.real)
        complex_rows.append(vals)
        complex_rows.append(svals)
    for cu in pair_cusps:
        vals, svals = _cusp_condition_values(param, cu.param, monos)
        rows.extend([vals.real, vals.imag, svals.real, svals.imag])
        complex_rows.extend([vals, svals, np.conj(vals), np.conj(svals)])

    n_cols = len(monos)
    mat = np.zeros((len(rows), n_cols))
    for i, r in enumerate(rows):
        norm = np.linalg.norm(r)
        mat[i] = r / norm if norm > 0 else r
    if complex_rows:
        cmat = np.array(complex_rows)
        sv = np.linalg.svd(cmat, compute_uv=False)
        crank = int(np.sum(sv > 1e-8 * sv[0])) if sv.size and sv[0] > 0 else 0
    else:
        crank = 0
    return ConditionMatrix(mat, monos, degree, scheme.delta, scheme.kappa, crank)


def equiclassical_conditions(d_curve, z: EquiclassicalScheme,
                             iso_tol=1e-9) -> ConditionMatrix:
    """Tangent-space conditions at a nodal-cuspidal dual curve (chart rows)."""
    expected = z.delta + 2 * z.kappa
    cm = condition_matrix(d_curve, z, z.degree, chart=True, iso_tol=iso_tol)
    if cm.n_conditions != expected:
        raise CensusMismatch(
            f"built {cm.n_conditions} condition rows, expected {expected}")
    return cm


def tangent_space_basis(cm: ConditionMatrix, rank_tol=1e-8):
    """Tangent directions as TriPolys with zero w^degree coefficient.

    With no conditions the basis is the chart monomials themselves (so the
    coordinates match the alpha parameters of the naive expansion); otherwise
    it is an orthonormal null-space basis of the condition matrix.
    """
    null = cm.null_space(rank_tol)
    basis = []
    for vec in null:
        basis.append(TriPoly({m: complex(v) for m, v in zip(cm.monomials, vec)
                              if v != 0}))
    return basis


def restriction_matrix(degree, basis):
    """Real 2c x m matrix of the isotropic restriction on a tangent basis."""
    c = degree
    cols = []
    for b in basis:
        r = b.restrict_isotropic("+")
        coeffs = r.complex_coeffs()
        coeffs = coeffs + [0j] * (c + 1 - len(coeffs))
        col = np.concatenate([np.real(coeffs[:c]), np.imag(coeffs[:c])])
        cols.append(col)
    return np.column_stack(cols) if cols else np.zeros((2 * c, 0))


@dataclass(frozen=True)
class FocalJacobianReport:
    """Rank/kernel analysis of the focal-map differential at a dual curve."""

    curve_degree: int
    tangent_dim: int
    jacobian: np.ndarray
    singular_values: np.ndarray
    rank: int
    kernel_dim: int
    kernel_basis: tuple
    factor_residuals: tuple
    quotients: tuple
    shifted_residuals: tuple
    shifted_dim: int | None
    sv_gap: float
    expected_rank: int | None = None
    expected_kernel: int | None = None

    def matches_expectation(self):
        if self.expected_rank is None:
            return None
        return (self.rank == self.expected_rank
                and self.kernel_dim == self.expected_kernel)


def focal_jacobian(g: TriPoly, tangent_basis, *, scheme=None, param=None,
                   expected_class=None, rank_tol=1e-8, ambiguity_factor=10.0,
                   real_tol=1e-8) -> FocalJacobianReport:
    """Differential of the focal map on a tangent basis, with kernel analysis.

    Each kernel element is divided by u^2 + v^2 and the quotient is checked
    against the degree-(c-2) condition system when the scheme is supplied.
    Raises ToleranceAmbiguity when a singular value falls within a factor
    ``ambiguity_factor`` of the rank threshold.
    """
    c = g.degree
    if not g.is_real(1e-6):
        raise ValueError("focal jacobian is defined for real curves")
    top = g.coefficient((0, 0, c))
    if abs(to_complex(top) - 1.0) > 1e-6:
        raise ValueError("normalize g to unit w^degree coefficient first")

    jac = restriction_matrix(c, tangent_basis)
    m = jac.shape[1]
    if m == 0:
        raise ValueError("empty tangent basis")
    u, sv, vh = np.linalg.svd(jac)
    smax = sv[0] if sv.size else 0.0
    threshold = rank_tol * smax
    if smax > 0:
        band = [s for s in sv if threshold / ambiguity_factor < s < threshold * ambiguity_factor]
        if band:
            lo = int(np.sum(sv >= threshold * ambiguity_factor))
            hi = int(np.sum(sv > threshold / ambiguity_factor))
            raise ToleranceAmbiguity(
                f"singular values {band} sit within a factor {ambiguity_factor} "
                f"of the threshold {threshold:.3e}",
                rank_candidates=(lo, hi), singular_values=sv)
    rank = int(np.sum(sv > threshold)) if smax > 0 else 0
    kernel_dim = m - rank
    if rank < len(sv) and rank > 0:
        sv_gap = float(sv[rank - 1] / sv[rank]) if sv[rank] > 0 else float("inf")
    else:
        sv_gap = float("inf")

    kernel_vectors = vh[rank:]
    kernel_basis = []
    factor_residuals = []
    quotients = []
    for vec in kernel_vectors:
        k = TriPoly.zero(c)
        for coeff, b in zip(vec, tangent_basis):
            k = k + b * complex(coeff)
        quot, rem = k.divide_isotropic()
        kn = max(k.max_abs(), 1e-300)
        factor_residuals.append(rem.max_abs() / kn)
        kernel_basis.append(k)
        quotients.append(quot)

    shifted_residuals = []
    shifted_dim = None
    if scheme is not None and param is not None and c >= 2:
        cm_shift = condition_matrix(param, scheme, c - 2, chart=False)
        shifted_dim = cm_shift.n_columns - cm_shift.rank(rank_tol)
        for q in quotients:
            vec = np.array([to_complex(x) for x in
                            q.coefficient_vector(cm_shift.monomials)])
            norm = np.linalg.norm(vec)
            if norm == 0 or cm_shift.rows.size == 0:
                shifted_residuals.append(0.0)
                continue
            resid = np.abs(cm_shift.rows @ vec.real / norm) + \
                np.abs(cm_shift.rows @ vec.imag / norm)
            shifted_residuals.append(float(np.max(resid)))

    expected_rank = expected_kernel = None
    if expected_class is not None:
        expected_rank = min(2 * c, c + expected_class + 1)
        expected_kernel = max(0, expected_class - c + 1)

    return FocalJacobianReport(
        curve_degree=c,
        tangent_dim=m,
        jacobian=jac,
        singular_values=sv,
        rank=rank,
        kernel_dim=kernel_dim,
        kernel_basis=tuple(kernel_basis),
        factor_residuals=tuple(factor_residuals),
        quotients=tuple(quotients),
        shifted_residuals=tuple(shifted_residuals),
        shifted_dim=shifted_dim,
        sv_gap=sv_gap,
        expected_rank=expected_rank,
        expected_kernel=expected_kernel,
    )


def shifted_section_dim(d_curve, z: EquiclassicalScheme, shift_degree=None,
                        rank_tol=1e-8) -> int:
    """Dimension of degree-(c-2) forms through the equiclassical scheme.

    Must agree with the focal-jacobian kernel dimension; the agreement is the
    numerical content of the kernel identification.
    """
    degree = z.degree - 2 if shift_degree is None else shift_degree
    if degree < 0:
        return 0
    cm = condition_matrix(d_curve, z, degree, chart=False)
    return cm.n_columns - cm.rank(rank_tol)


def construct_min_class(foci, q: TriPoly | None = None) -> TriPoly:
    """Real curve of minimal class with prescribed real foci.

    The product of the dual lines of the foci already has the right focal
    divisor; adding (u^2 + v^2) * q for any real q of degree c - 2 leaves the
    isotropic restriction unchanged, which is exactly the confocal family.
    """
    c = len(foci)
    if c < 2:
        raise TooFewFoci("need at least two prescribed foci")
    pts = [(x, y) for x, y in foci]
    for i in range(c):
        for j in range(i + 1, c):
            if abs(complex(pts[i][0] - pts[j][0], 0)) < 1e-12 and \
               abs(complex(pts[i][1] - pts[j][1], 0)) < 1e-12:
                raise ValueError("prescribed foci must be distinct")
    g = TriPoly({(0, 0, 0): 1})
    for x, y in pts:
        g = g * TriPoly.linear_form(x, y, 1)
    if q is not None and not q.is_zero():
        if q.degree != c - 2 or not q.is_homogeneous:
            raise ValueError(f"q must be homogeneous of degree {c - 2}")
        if not q.is_real(1e-10):
            raise ValueError("q must be real")
        g = g + TriPoly.isotropic_conic() * q
    return g


@dataclass(frozen=True)
class ConfocalFamily:
    """Affine family base + (u^2+v^2) * (degree c-2 monomials)."""

    base: TriPoly
    basis: tuple
    dimension: int

    @classmethod
    def with_prescribed_foci(cls, foci, q: TriPoly | None = None):
        base = construct_min_class(foci, q)
        c = len(foci)
        iso = TriPoly.isotropic_conic()
        basis = tuple(iso * TriPoly.monomial(m)
                      for m in monomials_of_degree(c - 2))
        family = cls(base, basis, c * (c - 1) // 2)
        assert len(basis) == family.dimension
        return family

    def member(self, coefficients):
        g = self.base
        for coeff, b in zip(coefficients, self.basis):
            g = g + b * coeff
        return g
