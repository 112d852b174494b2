"""Octonion arithmetic on an exact signed-basis multiplication table.

Octonions are stored as 8 real coordinates, coordinate ``i`` being the
coefficient of ``e_i`` with ``e_0 = 1``.  The array kernels (``omul``,
``oconj``, ...) act on the trailing axis of arrays shaped ``(..., 8)`` and are
what the vector and matrix modules build on; :class:`Octonion` is the
immutable scalar type exposed to users.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .config import DEFAULT_TOL
from .errors import DomainError, ParseError

# e_i e_j = e_k for each listed (i, j, k), closed under cyclic shifts and
# antisymmetry; e_i^2 = -1 for i >= 1.
TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)


class BasisProduct(NamedTuple):
    sign: int
    index: int


def _build_table() -> tuple[np.ndarray, np.ndarray]:
    sign = np.zeros((8, 8), dtype=np.int64)
    index = np.zeros((8, 8), dtype=np.int64)
    for j in range(8):
        sign[0, j], index[0, j] = 1, j
        sign[j, 0], index[j, 0] = 1, j
    for i in range(1, 8):
        sign[i, i], index[i, i] = -1, 0
    for a, b, c in TRIPLES:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            sign[i, j], index[i, j] = 1, k
            sign[j, i], index[j, i] = -1, k
    if np.any(sign == 0):
        raise RuntimeError("incomplete multiplication table")
    sign.flags.writeable = False
    index.flags.writeable = False
    return sign, index


SIGN, INDEX = _build_table()

# Structure constants: e_i e_j = sum_k STRUCT[i, j, k] e_k.
STRUCT = np.zeros((8, 8, 8))
for _i in range(8):
    for _j in range(8):
        STRUCT[_i, _j, INDEX[_i, _j]] = SIGN[_i, _j]
STRUCT.flags.writeable = False
_STRUCT64 = STRUCT.reshape(64, 8)
_CONJ = np.array([1.0, -1, -1, -1, -1, -1, -1, -1])


def basis_mul(i: int, j: int) -> BasisProduct:
    """Return ``e_i e_j`` as ``(sign, index)``."""
    if not (0 <= i <= 7 and 0 <= j <= 7):
        raise DomainError(f"basis indices must lie in 0..7, got ({i}, {j})")
    return BasisProduct(int(SIGN[i, j]), int(INDEX[i, j]))


def mult_table() -> list[list[BasisProduct]]:
    return [[basis_mul(i, j) for j in range(8)] for i in range(8)]


# -- array kernels --------------------------------------------------------


def omul(a, b) -> np.ndarray:
    """Broadcasting octonion product over the trailing axis."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    outer = a[..., :, None] * b[..., None, :]
    return outer.reshape(outer.shape[:-2] + (64,)) @ _STRUCT64


def oconj(a) -> np.ndarray:
    return np.asarray(a, dtype=float) * _CONJ


def onorm2(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return np.sum(a * a, axis=-1)


def oassoc(p, q, r) -> np.ndarray:
    """``(pq)r - p(qr)``, broadcasting."""
    return omul(omul(p, q), r) - omul(p, omul(q, r))


def basis_array(i: int) -> np.ndarray:
    e = np.zeros(8)
    e[i] = 1.0
    return e


def real_part_array(x) -> np.ndarray:
    """``(5/12) x - (1/12) sum_i e_i x e_i`` on the trailing axis.

    The sum runs over the imaginary units; for an alternative algebra the
    sandwich ``e_i x e_i`` is unambiguous.
    """
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    for i in range(1, 8):
        e = basis_array(i)
        acc += omul(omul(e, x), e)
    return (5.0 / 12.0) * x - acc / 12.0


# -- scalar type ----------------------------------------------------------


class Octonion:
    """Immutable octonion with 8 finite real coordinates."""

    __slots__ = ("_c",)

    def __init__(self, coords: Iterable[float] = (0.0,) * 8):
        c = np.array(coords, dtype=float).reshape(-1)
        if c.shape != (8,):
            raise DomainError(f"an octonion needs exactly 8 coordinates, got {c.size}")
        if not np.all(np.isfinite(c)):
            raise DomainError("octonion coordinates must be finite")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def basis(cls, i: int) -> Octonion:
        if not 0 <= i <= 7:
            raise DomainError(f"basis index must lie in 0..7, got {i}")
        return cls(basis_array(i))

    @classmethod
    def real(cls, r: float) -> Octonion:
        return cls([r, 0, 0, 0, 0, 0, 0, 0])

    @property
    def coords(self) -> np.ndarray:
        return self._c

    @property
    def re(self) -> float:
        return float(self._c[0])

    @property
    def im(self) -> Octonion:
        c = self._c.copy()
        c[0] = 0.0
        return Octonion(c)

    def conj(self) -> Octonion:
        return Octonion(oconj(self._c))

    def norm(self) -> float:
        return float(np.sqrt(onorm2(self._c)))

    def norm2(self) -> float:
        return float(onorm2(self._c))

    def inv(self, tol: float | None = None) -> Octonion:
        tol = DEFAULT_TOL.eq if tol is None else tol
        n2 = self.norm2()
        if np.sqrt(n2) <= tol:
            raise DomainError("zero divisor")
        return Octonion(oconj(self._c) / n2)

    def is_real(self, tol: float | None = None) -> bool:
        tol = DEFAULT_TOL.eq if tol is None else tol
        return bool(np.max(np.abs(self._c[1:])) <= tol)

    def isclose(self, other, tol: float | None = None) -> bool:
        tol = DEFAULT_TOL.eq if tol is None else tol
        other = as_octonion(other)
        return bool(np.max(np.abs(self._c - other._c)) <= tol)

    def __eq__(self, other) -> bool:
        try:
            return self.isclose(other)
        except (DomainError, TypeError, ValueError):
            return NotImplemented

    __hash__ = None  # equality is tolerance based

    def __add__(self, other):
        return Octonion(self._c + as_octonion(other)._c)

    __radd__ = __add__

    def __sub__(self, other):
        return Octonion(self._c - as_octonion(other)._c)

    def __rsub__(self, other):
        return Octonion(as_octonion(other)._c - self._c)

    def __neg__(self):
        return Octonion(-self._c)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return Octonion(omul(self._c, other._c))
        if np.isscalar(other):
            return Octonion(self._c * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return Octonion(self._c * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if np.isscalar(other):
            return Octonion(self._c / float(other))
        return NotImplemented

    def __repr__(self) -> str:
        return f"Octonion({format_octonion(self, digits=17)})"

    def __str__(self) -> str:
        return format_octonion(self)

    def to_json(self) -> list[float]:
        return [float(v) + 0.0 for v in self._c]  # + 0.0 drops negative zeros

    @classmethod
    def from_json(cls, data) -> Octonion:
        if not isinstance(data, (list, tuple)) or len(data) != 8:
            raise ParseError("an octonion is encoded as an array of exactly 8 numbers")
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in data):
            raise ParseError("octonion coordinates must be numbers")
        try:
            return cls(data)
        except DomainError as exc:
            raise ParseError(str(exc)) from exc


def as_octonion(x) -> Octonion:
    if isinstance(x, Octonion):
        return x
    if np.isscalar(x):
        return Octonion.real(float(x))
    return Octonion(x)


def format_octonion(p, digits: int = 6) -> str:
    """Render as ``a + b e1 - c e3 ...`` with ``digits`` significant digits."""
    c = p.coords if isinstance(p, Octonion) else np.asarray(p, dtype=float)
    terms = []
    for i, v in enumerate(c):
        if v == 0:
            continue
        mag = f"{abs(v):.{digits}g}"
        if i == 0:
            body = mag
        elif mag == "1":
            body = f"e{i}"
        else:
            body = f"{mag}*e{i}"
        terms.append(("-" if v < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- functional API -------------------------------------------------------


def mul(p, q) -> Octonion:
    return Octonion(omul(as_octonion(p).coords, as_octonion(q).coords))


def conj(p) -> Octonion:
    return as_octonion(p).conj()


def re(p) -> float:
    return as_octonion(p).re


def im(p) -> Octonion:
    return as_octonion(p).im


def norm(p) -> float:
    return as_octonion(p).norm()


def inv(p, tol: float | None = None) -> Octonion:
    return as_octonion(p).inv(tol)


def associator(p, q, r) -> Octonion:
    """``[p, q, r] = (pq)r - p(qr)``."""
    return Octonion(
        oassoc(as_octonion(p).coords, as_octonion(q).coords, as_octonion(r).coords)
    )


def real_part_formula(p) -> Octonion:
    return Octonion(real_part_array(as_octonion(p).coords))


def e(i: int) -> Octonion:
    """Shorthand for the basis octonion ``e_i``."""
    return Octonion.basis(i)
