"""Row vectors in O^n with the octonionic and real inner products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .config import DEFAULT_TOL
from .errors import DomainError, LengthMismatch, ParseError
from .octonion import Octonion, as_octonion, basis_array, oassoc, oconj, omul, onorm2


class OVector:
    """Immutable row vector ``(x_1, ..., x_n)`` of octonions, stored as (n, 8)."""

    __slots__ = ("_c",)

    def __init__(self, entries):
        if isinstance(entries, OVector):
            c = entries._c
        elif isinstance(entries, np.ndarray):
            c = np.asarray(entries, dtype=float)
        else:
            # entries may mix Octonions, real scalars and 8-sequences
            c = np.array([as_octonion(x).coords for x in entries], dtype=float)
        if c.ndim != 2 or c.shape[1] != 8 or c.shape[0] < 1:
            raise DomainError(f"an OVector needs shape (n>=1, 8), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise DomainError("OVector entries must be finite")
        c = c.copy()
        c.flags.writeable = False
        self._c = c

    @classmethod
    def zeros(cls, n: int) -> OVector:
        return cls(np.zeros((n, 8)))

    @classmethod
    def unit(cls, n: int, j: int, i: int = 0) -> OVector:
        """``e_i`` placed in slot ``j`` (0-based), zeros elsewhere."""
        c = np.zeros((n, 8))
        c[j, i] = 1.0
        return cls(c)

    @classmethod
    def from_real(cls, values: Iterable[float]) -> OVector:
        v = np.asarray(list(values), dtype=float)
        c = np.zeros((v.size, 8))
        c[:, 0] = v
        return cls(c)

    @property
    def coords(self) -> np.ndarray:
        return self._c

    def __len__(self) -> int:
        return self._c.shape[0]

    def __getitem__(self, i: int) -> Octonion:
        return Octonion(self._c[i])

    def __iter__(self):
        return (Octonion(row) for row in self._c)

    def flat(self) -> np.ndarray:
        """Real coordinates as a length-8n vector (slot-major)."""
        return self._c.reshape(-1)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self._c * self._c)))

    def is_real(self, tol: float | None = None) -> bool:
        tol = DEFAULT_TOL.eq if tol is None else tol
        return bool(np.max(np.abs(self._c[:, 1:])) <= tol)

    def isclose(self, other, tol: float | None = None) -> bool:
        tol = DEFAULT_TOL.eq if tol is None else tol
        other = as_vector(other)
        return self._c.shape == other._c.shape and bool(
            np.max(np.abs(self._c - other._c)) <= tol
        )

    def __eq__(self, other):
        try:
            return self.isclose(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    def __add__(self, other):
        other = as_vector(other)
        _check_len(self, other)
        return OVector(self._c + other._c)

    def __sub__(self, other):
        other = as_vector(other)
        _check_len(self, other)
        return OVector(self._c - other._c)

    def __neg__(self):
        return OVector(-self._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return OVector(self._c * float(other))
        if isinstance(other, Octonion):
            return scalar_mul_right(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return OVector(self._c * float(other))
        if isinstance(other, Octonion):
            return scalar_mul_left(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if np.isscalar(other):
            return OVector(self._c / float(other))
        return NotImplemented

    def __repr__(self) -> str:
        return "OVector([" + ", ".join(str(x) for x in self) + "])"

    def to_json(self) -> list[list[float]]:
        return [[float(v) + 0.0 for v in row] for row in self._c]

    @classmethod
    def from_json(cls, data) -> OVector:
        if not isinstance(data, list) or not data:
            raise ParseError("an OVector is a non-empty array of octonion arrays")
        return cls(np.array([Octonion.from_json(x).coords for x in data]))


def as_vector(x) -> OVector:
    return x if isinstance(x, OVector) else OVector(x)


def _check_len(x: OVector, y: OVector) -> None:
    if len(x) != len(y):
        raise LengthMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")


def _pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x, y = as_vector(x), as_vector(y)
    _check_len(x, y)
    return x.coords, y.coords


# -- inner products -------------------------------------------------------


def inner_array(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Sum over the slot axis (second to last) of ``x_i conj(y_i)``."""
    return np.sum(omul(x, oconj(y)), axis=-2)


def inner(x, y) -> Octonion:
    """Octonionic inner product ``sum_i x_i conj(y_i)``."""
    a, b = _pair(x, y)
    return Octonion(inner_array(a, b))


def inner_real(x, y) -> float:
    a, b = _pair(x, y)
    return float(np.sum(a * b))


def second_associator_array(p: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``<pu, v> - p<u, v>``; ``p`` broadcasts against the slot axis."""
    p = np.asarray(p, dtype=float)
    return inner_array(omul(p[..., None, :], u), v) - omul(p, inner_array(u, v))


def second_associator_vec(p, u, v) -> Octonion:
    """``A_p(u, v) = <pu, v> - p<u, v>``."""
    a, b = _pair(u, v)
    return Octonion(second_associator_array(as_octonion(p).coords, a, b))


def scalar_mul_left(p, x) -> OVector:
    x = as_vector(x)
    return OVector(omul(as_octonion(p).coords, x.coords))


def scalar_mul_right(x, p) -> OVector:
    x = as_vector(x)
    return OVector(omul(x.coords, as_octonion(p).coords))


def vec_associator(p, q, v) -> OVector:
    """Entrywise left associator ``[p, q, v_i]``."""
    v = as_vector(v)
    return OVector(oassoc(as_octonion(p).coords, as_octonion(q).coords, v.coords))


# -- real-part structure --------------------------------------------------


@dataclass(frozen=True)
class RealDecomposition:
    """``x = sum_i e_i parts[i]`` with each part an all-real OVector."""

    parts: tuple[OVector, ...]

    def reconstruct(self) -> OVector:
        acc = np.zeros_like(self.parts[0].coords)
        for i, part in enumerate(self.parts):
            acc += omul(basis_array(i), part.coords)
        return OVector(acc)


def decompose_real(x) -> RealDecomposition:
    x = as_vector(x)
    parts = []
    for i in range(8):
        c = np.zeros_like(x.coords)
        c[:, 0] = x.coords[:, i]
        parts.append(OVector(c))
    return RealDecomposition(tuple(parts))


def real_part(x) -> OVector:
    """Projection of a vector onto Re O^n = R^n."""
    return decompose_real(x).parts[0]


def inner_from_real(x, y) -> Octonion:
    """``sum_i e_i <conj(e_i) x, y>_R``."""
    a, b = _pair(x, y)
    out = np.zeros(8)
    for i in range(8):
        ebar = oconj(basis_array(i))
        out[i] = np.sum(omul(ebar, a) * b)
    return Octonion(out)


def polarization_inner(x, y) -> Octonion:
    """``(1/4) sum_i e_i (|conj(e_i) x + y|^2 - |conj(e_i) x - y|^2)``."""
    a, b = _pair(x, y)
    out = np.zeros(8)
    for i in range(8):
        shifted = omul(oconj(basis_array(i)), a)
        out[i] = 0.25 * (np.sum(onorm2(shifted + b)) - np.sum(onorm2(shifted - b)))
    return Octonion(out)
