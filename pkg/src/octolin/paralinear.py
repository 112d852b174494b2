"""Para-linear operators on O^n represented by octonionic matrices.

A matrix ``T`` acts on row vectors from the right, ``T(y) = y T`` with
``(yT)_j = sum_i y_i t_ij``.  Besides the octonionic matrix product this
module provides the regular composition, the two octonionic scalar actions
on operators, and the real-linear realization on R^{8n} that kernels, ranks
and the adjoint-composition test are computed from.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from . import _linalg
from .config import Tolerances, resolve
from .errors import DimMismatch, DomainError, LengthMismatch, NotSquare, ParseError
from .octonion import STRUCT, Octonion, as_octonion, oassoc, oconj, omul
from .omodule import OVector, as_vector

_IMAG = np.eye(8)[1:]

Operator = Callable[[OVector], OVector]


class OMatrix:
    """Immutable ``k x n`` octonionic matrix, stored as (k, n, 8)."""

    __slots__ = ("_c",)

    def __init__(self, rows):
        if isinstance(rows, OMatrix):
            c = rows._c
        elif isinstance(rows, np.ndarray):
            c = np.asarray(rows, dtype=float)
        else:
            c = np.array([as_vector(r).coords for r in rows], dtype=float)
        if c.ndim != 3 or c.shape[2] != 8 or min(c.shape[:2]) < 1:
            raise DomainError(f"an OMatrix needs shape (k, n, 8), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise DomainError("OMatrix entries must be finite")
        c = c.copy()
        c.flags.writeable = False
        self._c = c

    @classmethod
    def identity(cls, n: int) -> OMatrix:
        c = np.zeros((n, n, 8))
        c[np.arange(n), np.arange(n), 0] = 1.0
        return cls(c)

    @classmethod
    def zeros(cls, k: int, n: int | None = None) -> OMatrix:
        return cls(np.zeros((k, k if n is None else n, 8)))

    @classmethod
    def from_real(cls, a) -> OMatrix:
        a = np.asarray(a, dtype=float)
        c = np.zeros(a.shape + (8,))
        c[..., 0] = a
        return cls(c)

    @property
    def coords(self) -> np.ndarray:
        return self._c

    @property
    def shape(self) -> tuple[int, int]:
        return self._c.shape[0], self._c.shape[1]

    @property
    def is_square(self) -> bool:
        return self._c.shape[0] == self._c.shape[1]

    def row(self, i: int) -> OVector:
        return OVector(self._c[i])

    def rows(self) -> list[OVector]:
        return [OVector(r) for r in self._c]

    def __getitem__(self, ij) -> Octonion:
        i, j = ij
        return Octonion(self._c[i, j])

    def is_real(self, tol: float = 1e-9) -> bool:
        return bool(np.max(np.abs(self._c[..., 1:])) <= tol)

    def isclose(self, other, tol: float = 1e-9) -> bool:
        other = as_matrix(other)
        return self.shape == other.shape and bool(np.max(np.abs(self._c - other._c)) <= tol)

    def __eq__(self, other):
        try:
            return self.isclose(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    def __add__(self, other):
        other = as_matrix(other)
        if self.shape != other.shape:
            raise DimMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return OMatrix(self._c + other._c)

    def __sub__(self, other):
        other = as_matrix(other)
        if self.shape != other.shape:
            raise DimMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return OMatrix(self._c - other._c)

    def __neg__(self):
        return OMatrix(-self._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return OMatrix(self._c * float(other))
        if isinstance(other, Octonion):
            return OMatrix(omul(self._c, other.coords))
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return OMatrix(self._c * float(other))
        if isinstance(other, Octonion):
            return OMatrix(omul(other.coords, self._c))
        return NotImplemented

    def __matmul__(self, other):
        return matmul(self, other)

    def __repr__(self) -> str:
        return "OMatrix([" + "; ".join(repr(r)[8:-1] for r in self.rows()) + "])"

    def to_json(self) -> list:
        return [row.to_json() for row in self.rows()]

    @classmethod
    def from_json(cls, data) -> OMatrix:
        if not isinstance(data, list) or not data:
            raise ParseError("an OMatrix is a non-empty array of OVector rows")
        rows = [OVector.from_json(r) for r in data]
        if len({len(r) for r in rows}) != 1:
            raise ParseError("OMatrix rows must all have the same length")
        return cls(rows)


def as_matrix(t) -> OMatrix:
    return t if isinstance(t, OMatrix) else OMatrix(t)


def _square(t) -> OMatrix:
    t = as_matrix(t)
    if not t.is_square:
        raise NotSquare(f"expected a square matrix, got {t.shape}")
    return t


# -- application and associators -----------------------------------------


def apply_array(t: np.ndarray, y: np.ndarray) -> np.ndarray:
    """``y T`` for coordinate arrays; ``y`` may carry leading batch axes."""
    k, n = t.shape[:2]
    batch = y.shape[:-2]
    out = y.reshape(batch + (8 * k,)) @ real_matrix_array(t)
    return out.reshape(batch + (n, 8))


def apply(t, y) -> OVector:
    """Evaluate the operator of ``t`` at the row vector ``y``."""
    t, y = as_matrix(t), as_vector(y)
    if len(y) != t.shape[0]:
        raise LengthMismatch(f"vector of length {len(y)} against {t.shape} matrix")
    return OVector(apply_array(t.coords, y.coords))


def as_operator(t) -> Operator:
    t = as_matrix(t)
    return lambda y: apply(t, y)


class OpAssociator(NamedTuple):
    """Second associator of a matrix operator, by formula and by definition."""

    closed: OVector
    direct: OVector

    @property
    def residual(self) -> float:
        return float(np.max(np.abs(self.closed.coords - self.direct.coords)))


def op_second_associator(p, x, t) -> OpAssociator:
    """``A_p(x, f_T)``.

    ``closed`` is the componentwise sum ``sum_i [p, x_i, t_ij]``; ``direct``
    is ``T(px) - p T(x)``.
    """
    t, x = as_matrix(t), as_vector(x)
    if len(x) != t.shape[0]:
        raise LengthMismatch(f"vector of length {len(x)} against {t.shape} matrix")
    pc = as_octonion(p).coords
    closed = np.sum(oassoc(pc, x.coords[:, None, :], t.coords), axis=0)
    direct = apply_array(t.coords, omul(pc, x.coords)) - omul(pc, apply_array(t.coords, x.coords))
    return OpAssociator(OVector(closed), OVector(direct))


def _assoc_direct(t: np.ndarray, p: np.ndarray, x: np.ndarray) -> np.ndarray:
    return apply_array(t, omul(p, x)) - omul(p, apply_array(t, x))


def paralinearity_residual(t, probes) -> float:
    """Largest ``|Re(T(e_m x) - e_m T(x))|`` over ``m = 1..7`` and probes."""
    t = as_matrix(t)
    xs = np.array([as_vector(x).coords for x in probes])  # (P, n, 8)
    a = _assoc_direct(t.coords, _IMAG[:, None, None, :], xs[None])  # (7, P, n, 8)
    return float(np.max(np.abs(a[..., 0])))


# -- algebra of matrices --------------------------------------------------


def dual(t) -> OMatrix:
    """Conjugate transpose, the matrix of the real adjoint."""
    t = _square(t)
    return OMatrix(oconj(t.coords).transpose(1, 0, 2))


def conj_transpose(t) -> OMatrix:
    """Conjugate transpose of a possibly rectangular matrix."""
    t = as_matrix(t)
    return OMatrix(oconj(t.coords).transpose(1, 0, 2))


def matmul(a, b) -> OMatrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return OMatrix(np.sum(omul(a.coords[:, :, None, :], b.coords[None, :, :, :]), axis=1))


def regular_compose(f, g) -> OMatrix:
    """Matrix of ``f_S (regular) f_T`` given ``f = S`` and ``g = T``: the product ``T S``."""
    f, g = _square(f), _square(g)
    if f.shape != g.shape:
        raise DimMismatch(f"operator sizes differ: {f.shape} vs {g.shape}")
    return matmul(g, f)


def bracket_fgx(f, g, x) -> OVector:
    """Correction term ``-sum_i e_i Re(f(A_{e_i}(x, g)))``."""
    f, g, x = _square(f), _square(g), as_vector(x)
    if f.shape != g.shape or len(x) != g.shape[0]:
        raise DimMismatch("operator and vector sizes must agree")
    out = np.zeros_like(x.coords)
    # A_{e_0} vanishes identically, so only e_1 .. e_7 contribute
    a = _assoc_direct(g.coords, _IMAG[:, None, :], x.coords)  # (7, n, 8)
    out[:, 1:] = -apply_array(f.coords, a)[..., 0].T
    return OVector(out)


def regular_compose_apply(f, g, x) -> OVector:
    """``(f (regular) g)(x) = f(g(x)) + [f, g, x]`` evaluated pointwise."""
    return apply(f, apply(g, x)) + bracket_fgx(f, g, x)


def regular_compose_residual(f, g, probes) -> float:
    """Max gap between the pointwise definition and the matrix ``T S``."""
    k = regular_compose(f, g)
    return max(
        float(np.max(np.abs((regular_compose_apply(f, g, x) - apply(k, x)).coords)))
        for x in probes
    )


# -- octonionic scalar actions on operators -------------------------------


def scalar_action_right(t, p) -> Operator:
    """``x -> T(x) p - A_p(x, T)``."""
    t, pc = as_matrix(t), as_octonion(p).coords

    def op(x):
        xc = as_vector(x).coords
        return OVector(omul(apply_array(t.coords, xc), pc) - _assoc_direct(t.coords, pc, xc))

    return op


def scalar_action_left(p, t) -> Operator:
    """``x -> T(x p) + A_p(x, T)``."""
    t, pc = as_matrix(t), as_octonion(p).coords

    def op(x):
        xc = as_vector(x).coords
        return OVector(apply_array(t.coords, omul(xc, pc)) + _assoc_direct(t.coords, pc, xc))

    return op


def _invertible(p, tol: Tolerances | None) -> np.ndarray:
    p = as_octonion(p)
    if p.norm() <= resolve(tol).eq:
        raise DomainError("zero divisor")
    return p.coords


def moufang_right(t, p, tol: Tolerances | None = None) -> Operator:
    """``x -> p T(p^{-1} x) p``, equal to ``scalar_action_right(t, p)``."""
    t = as_matrix(t)
    pc = _invertible(p, tol)
    pinv = oconj(pc) / np.dot(pc, pc)

    def op(x):
        w = apply_array(t.coords, omul(pinv, as_vector(x).coords))
        return OVector(omul(omul(pc, w), pc))

    return op


def moufang_left(p, t, tol: Tolerances | None = None) -> Operator:
    """``x -> p^{-1} T(p x p)``, equal to ``scalar_action_left(p, t)``."""
    t = as_matrix(t)
    pc = _invertible(p, tol)
    pinv = oconj(pc) / np.dot(pc, pc)

    def op(x):
        xc = as_vector(x).coords
        return OVector(omul(pinv, apply_array(t.coords, omul(omul(pc, xc), pc))))

    return op


def scalar_action_matrix(t, p, side: str) -> OMatrix:
    """Matrix of ``T (.) p`` (side ``"right"``) or ``p (.) T`` (side ``"left"``).

    Both actions agree with ``T`` times ``p`` on real vectors, so their
    matrices are the entrywise products ``t_ij p`` and ``p t_ij``.
    """
    t, pc = as_matrix(t), as_octonion(p).coords
    if side == "right":
        return OMatrix(omul(t.coords, pc))
    if side == "left":
        return OMatrix(omul(pc, t.coords))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


# -- real-linear realization ---------------------------------------------


def real_matrix_array(t: np.ndarray) -> np.ndarray:
    k, n = t.shape[:2]
    # R[8i+a, 8j+c] = sum_b STRUCT[a, b, c] t[i, j, b]
    return np.einsum("ijb,abc->iajc", t, STRUCT).reshape(8 * k, 8 * n)


def real_matrix(t) -> np.ndarray:
    """The 8n x 8n matrix ``R`` with ``flat(y T) = flat(y) @ R``."""
    return real_matrix_array(_square(t).coords)


def rank(t, tol: Tolerances | None = None) -> int:
    return _linalg.svd_rank(real_matrix(t), resolve(tol).rank)


def kernel(t, tol: Tolerances | None = None) -> list[np.ndarray]:
    """Orthonormal real basis of ``{y : y T = 0}`` as flat length-8n vectors."""
    r = real_matrix(t)
    return list(_linalg.null_space(r.T, resolve(tol).rank))


class RealCompositionCheck(NamedTuple):
    star_after_t: bool
    t_after_star: bool
    star_after_t_residual: float
    t_after_star_residual: float

    @property
    def both(self) -> bool:
        return self.star_after_t and self.t_after_star


def compose_real_check(t, tol: Tolerances | None = None) -> RealCompositionCheck:
    """Test ``T* o T = Id`` and ``T o T* = Id`` as maps of R^{8n}.

    With row vectors, applying ``T`` then ``T*`` is ``R_T @ R_{T*}``.  This is
    the composition of the real maps, not the octonionic matrix product.
    """
    t = _square(t)
    tau = resolve(tol).gram
    rt, rs = real_matrix(t), real_matrix(dual(t))
    eye = np.eye(rt.shape[0])
    r1 = float(np.max(np.abs(rt @ rs - eye)))
    r2 = float(np.max(np.abs(rs @ rt - eye)))
    return RealCompositionCheck(r1 <= tau, r2 <= tau, r1, r2)
