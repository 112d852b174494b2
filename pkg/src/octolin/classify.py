"""Isometry and partial-isometry verdicts, the Iso_O(2) decomposition, and
the dimension count behind the weak associative Stiefel spaces."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import _linalg
from .config import Tolerances, resolve
from .errors import (
    DimMismatch,
    EntryOutsideCJ,
    NotIsometry,
    NotUnit,
    PageMismatch,
    TooManyVectors,
)
from .frames import Frame, as_frame, frame_report, is_weak_associative
from .octonion import Octonion, basis_array, oconj, omul
from .omodule import OVector, as_vector
from .paralinear import (
    OMatrix,
    _square,
    as_matrix,
    compose_real_check,
    conj_transpose,
    dual,
    matmul,
    paralinearity_residual,
    real_matrix,
)
from .sampling import probe_vectors, rng_from


@dataclass(frozen=True)
class ClassificationReport:
    is_paralinear_residual: float
    gram_TTstar_residual: float
    gram_TstarT_residual: float
    rows_weak_assoc: bool
    is_isometry: bool
    kernel_dim: int
    kernel_is_O_submodule: bool
    is_partial_isometry: bool
    # cross-checks of the isometry verdict
    columns_weak_assoc: bool
    real_composition_identity: bool
    norm_preserving: bool
    norm_residual: float
    verdicts_agree: bool
    # partial-isometry detail
    kernel_submodule_residual: float
    complement_norm_residual: float
    normal_form: bool
    nonzero_rows_weak_assoc: bool
    image_frame_weak_assoc: bool | None

    def to_dict(self) -> dict:
        return asdict(self)


def _identity_residual(m: OMatrix) -> float:
    c = m.coords.copy()
    n = c.shape[0]
    c[np.arange(n), np.arange(n), 0] -= 1.0
    return float(np.max(np.abs(c)))


def _basis_complete(f, tol: Tolerances) -> bool:
    r = frame_report(f, tol)
    return r.weak_associative and r.complete


def _norm_residual(r: np.ndarray, probes) -> float:
    v = np.array([x.flat() for x in probes])
    return float(np.max(np.abs(np.linalg.norm(v @ r, axis=1) - np.linalg.norm(v, axis=1))))


def _partial_isometry_parts(t: OMatrix, r: np.ndarray, tol: Tolerances, rng) -> dict:
    n = t.shape[0]
    ker = _linalg.null_space(r.T, tol.rank)  # rows, orthonormal
    comp = _linalg.row_space(r.T, tol.rank)  # (ker T)^perp

    # ker T is an O-submodule iff e_m v stays in ker for every basis vector v.
    sub_res = 0.0
    if ker.shape[0]:
        kv = ker.reshape(-1, n, 8)
        for m in range(1, 8):
            w = omul(basis_array(m), kv).reshape(ker.shape[0], -1)
            off = w - (w @ ker.T) @ ker
            sub_res = max(sub_res, float(np.max(np.abs(off))))
    submodule = sub_res <= tol.gram

    # isometry on the complement: Gram matrix of images of an orthonormal basis
    comp_res = 0.0
    if comp.shape[0]:
        img = comp @ r
        comp_res = float(np.max(np.abs(img @ img.T - np.eye(comp.shape[0]))))
        xs = rng.normal(size=(32, comp.shape[0])) @ comp
        gap = np.linalg.norm(xs @ r, axis=1) - np.linalg.norm(xs, axis=1)
        comp_res = max(comp_res, float(np.max(np.abs(gap))))

    rows = t.coords
    zero = np.max(np.abs(rows.reshape(n, -1)), axis=1) <= tol.eq
    nonzero = rows[~zero]
    normal_form = ker.shape[0] == 8 * int(zero.sum())
    nz_ok = bool(nonzero.shape[0] == 0 or is_weak_associative(Frame(nonzero), tol)[0])

    # Images of an associative orthonormal basis of (ker T)^perp, attempted only
    # when the complement has the form V (x) O for a real subspace V of R^n.
    image_ok = None
    if submodule and comp.shape[0]:
        proj = comp.T @ comp
        q = proj[0::8, 0::8]
        if np.max(np.abs(proj - np.kron(q, np.eye(8)))) <= tol.gram:
            w, v = np.linalg.eigh(q)
            eps = v[:, w > 0.5].T
            images = [OVector.from_real(e) for e in eps]
            imgs = Frame([OVector((img.flat() @ r).reshape(n, 8)) for img in images])
            image_ok = bool(is_weak_associative(imgs, tol)[0])

    verdict = bool(submodule and comp_res <= tol.gram)
    if image_ok is not None:
        verdict = verdict and image_ok
    return dict(
        kernel_dim=int(ker.shape[0]),
        kernel_is_O_submodule=bool(submodule),
        is_partial_isometry=verdict,
        kernel_submodule_residual=float(sub_res),
        complement_norm_residual=float(comp_res),
        normal_form=bool(normal_form),
        nonzero_rows_weak_assoc=nz_ok,
        image_frame_weak_assoc=image_ok,
    )


def classify(t, tol: Tolerances | None = None, seed=42) -> ClassificationReport:
    """Full report on the operator of a square octonionic matrix."""
    tol = resolve(tol)
    t = _square(t)
    n = t.shape[0]
    rng = rng_from(seed)
    probes = probe_vectors(n, rng)
    r = real_matrix(t)
    ts = dual(t)

    rows_ok = _basis_complete(Frame(t.rows()), tol)
    cols_ok = _basis_complete(Frame(conj_transpose(t).rows()), tol)
    comp = compose_real_check(t, tol)
    norm_res = _norm_residual(r, probes)
    norm_ok = norm_res <= tol.gram
    parts = _partial_isometry_parts(t, r, tol, rng)

    return ClassificationReport(
        is_paralinear_residual=paralinearity_residual(t, probes),
        gram_TTstar_residual=_identity_residual(matmul(t, ts)),
        gram_TstarT_residual=_identity_residual(matmul(ts, t)),
        rows_weak_assoc=bool(rows_ok),
        is_isometry=bool(rows_ok),
        columns_weak_assoc=bool(cols_ok),
        real_composition_identity=comp.both,
        norm_preserving=bool(norm_ok),
        norm_residual=norm_res,
        verdicts_agree=len({rows_ok, cols_ok, comp.both, bool(norm_ok)}) == 1,
        **parts,
    )


def is_isometry(t, tol: Tolerances | None = None, seed=42) -> ClassificationReport:
    """Verdict: the rows of ``t`` form a weak associative orthonormal basis."""
    return classify(t, tol, seed)


def is_partial_isometry(t, tol: Tolerances | None = None, seed=42) -> ClassificationReport:
    """Verdict in ``is_partial_isometry``; withheld (False) unless ker T is an O-submodule."""
    return classify(t, tol, seed)


# -- Iso_O(2) ----------------------------------------------------------------


@dataclass(frozen=True)
class Iso2Decomposition:
    """Representative ``(p, U)`` of a class with ``p U`` the decomposed matrix."""

    p: Octonion
    J: Octonion
    U: OMatrix
    residual: float

    def reconstruct(self) -> OMatrix:
        return self.p * self.U

    def to_dict(self) -> dict:
        return {
            "p": self.p.to_json(),
            "J": self.J.to_json(),
            "U": self.U.to_json(),
            "residual": self.residual,
        }


def _cj_residual(u: np.ndarray, j: np.ndarray) -> float:
    im = u[..., 1:]
    along = (im @ j[1:])[..., None] * j[1:]
    return float(np.max(np.abs(im - along)))


def iso2_decompose(t, tol: Tolerances | None = None) -> Iso2Decomposition:
    """Split an isometry of O^2 as ``p U`` with ``|p| = 1`` and ``U`` in U_{C_J}(2)."""
    tol = resolve(tol)
    t = as_matrix(t)
    if t.shape != (2, 2):
        raise DimMismatch(f"Iso_O(2) decomposition needs a 2x2 matrix, got {t.shape}")
    if not _basis_complete(Frame(t.rows()), tol):
        raise NotIsometry("rows do not form a weak associative orthonormal basis")
    c = t.coords
    pivot = c[0, 0] if np.linalg.norm(c[0, 0]) > tol.eq else c[0, 1]
    if np.max(np.abs(pivot[1:])) <= tol.eq:
        p = basis_array(0)
    else:
        p = pivot / np.linalg.norm(pivot)
    u = omul(oconj(p), c)

    j = basis_array(1)
    for entry in u.reshape(4, 8):
        mag = np.linalg.norm(entry[1:])
        if mag > tol.eq:
            j = np.concatenate([[0.0], entry[1:] / mag])
            break
    if _cj_residual(u, j) > tol.gram:
        raise EntryOutsideCJ("an entry of U leaves R + RJ")
    um = OMatrix(u)
    if _identity_residual(matmul(um, conj_transpose(um))) > tol.gram:
        raise EntryOutsideCJ("U is not unitary over C_J")
    residual = float(np.max(np.abs(omul(p, u) - c)))
    return Iso2Decomposition(Octonion(p), Octonion(j), um, residual)


def iso2_identity() -> Iso2Decomposition:
    return Iso2Decomposition(Octonion.real(1.0), Octonion.basis(1), OMatrix.identity(2), 0.0)


def same_page(a: Iso2Decomposition, b: Iso2Decomposition, tol: Tolerances | None = None) -> bool:
    """Whether both classes lie on one page ``S^7 x U_{C_J}(2)``.

    A real ``U`` lies in every page, and ``J`` and ``-J`` span the same C_J.
    """
    tol = resolve(tol)
    if a.U.is_real(tol.eq) or b.U.is_real(tol.eq):
        return True
    ja, jb = a.J.coords, b.J.coords
    return min(np.max(np.abs(ja - jb)), np.max(np.abs(ja + jb))) <= tol.gram


def loop_mul(a: Iso2Decomposition, b: Iso2Decomposition, tol: Tolerances | None = None) -> Iso2Decomposition:
    """``[p, U][q, S] = [pq, US]``, renormalized through :func:`iso2_decompose`."""
    if not same_page(a, b, tol):
        raise PageMismatch("classes lie on different C_J pages")
    pq = a.p * b.p
    return iso2_decompose(pq * matmul(a.U, b.U), tol)


def loop_inverse(a: Iso2Decomposition, tol: Tolerances | None = None) -> Iso2Decomposition:
    return iso2_decompose(a.p.conj() * conj_transpose(a.U), tol)


def alternative_law_residuals(a: Iso2Decomposition, x: Iso2Decomposition, tol=None) -> dict[str, float]:
    """Residuals of ``a(ax) = (aa)x``, ``(ax)a = a(xa)`` and ``x(aa) = (xa)a``.

    Proven for real ``U`` (the spine); elsewhere the numbers are only reported.
    """

    def m(u, v):
        return loop_mul(u, v, tol)

    def gap(u, v) -> float:
        return float(np.max(np.abs(u.reconstruct().coords - v.reconstruct().coords)))

    aa = m(a, a)
    return {
        "left": gap(m(a, m(a, x)), m(aa, x)),
        "flexible": gap(m(m(a, x), a), m(a, m(x, a))),
        "right": gap(m(x, aa), m(m(x, a), a)),
    }


# -- weak associative Stiefel spaces ---------------------------------------


@dataclass(frozen=True)
class StiefelReport:
    y: OVector
    dim_OOy: int
    fiber_dim: int

    def to_dict(self) -> dict:
        return {"y": self.y.to_json(), "dim_OOy": self.dim_OOy, "fiber_dim": self.fiber_dim}


def oo_span_matrix(y) -> np.ndarray:
    """The 64 x 8n matrix with rows ``coords(e_i (e_j y))``."""
    y = as_vector(y)
    eye = np.eye(8)
    inner = omul(eye[:, None, :], y.coords[None])  # (8, n, 8): e_j y
    outer = omul(eye[:, None, None, :], inner[None])  # (8, 8, n, 8)
    return outer.reshape(64, -1)


def stiefel_OOy_dim(y, tol: Tolerances | None = None) -> StiefelReport:
    """Real dimension of O(Oy) and of the fiber of V_2^w -> V_1^w over ``y``."""
    tol = resolve(tol)
    y = as_vector(y)
    if abs(y.norm() - 1.0) > tol.eq:
        raise NotUnit(f"y must be a unit vector, got norm {y.norm():.17g}")
    d = _linalg.svd_rank(oo_span_matrix(y), tol.rank)
    return StiefelReport(y, d, 8 * len(y) - d)


def is_stiefel_frame(f, tol: Tolerances | None = None) -> bool:
    """Membership of the frame in V_k^w(O^n)."""
    f = as_frame(f)
    if f.k > f.n:
        raise TooManyVectors(f"no weak associative set of {f.k} vectors exists in O^{f.n}")
    return is_weak_associative(f, tol)[0]
