"""Orthonormal, associative and weak associative systems of vectors in O^n."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import _linalg
from .config import Tolerances, resolve
from .errors import DomainError, LengthMismatch, NonUnitScalar, NotWeakAssociative, ParseError
from .octonion import as_octonion, oconj, omul
from .omodule import OVector, as_vector, inner_array

# e_1 .. e_7 as rows
_IMAG = np.eye(8)[1:]


class Frame:
    """Ordered system of ``k >= 1`` vectors of common length ``n``."""

    __slots__ = ("_c",)

    def __init__(self, vectors):
        if isinstance(vectors, Frame):
            c = vectors._c
        elif isinstance(vectors, np.ndarray):
            c = np.asarray(vectors, dtype=float)
        else:
            vs = [as_vector(v) for v in vectors]
            if not vs:
                raise DomainError("a frame needs at least one vector")
            if len({len(v) for v in vs}) != 1:
                raise LengthMismatch("frame vectors must share one length")
            c = np.array([v.coords for v in vs])
        if c.ndim != 3 or c.shape[2] != 8 or min(c.shape[:2]) < 1:
            raise DomainError(f"a frame needs shape (k, n, 8), got {c.shape}")
        c = c.copy()
        c.flags.writeable = False
        self._c = c

    @classmethod
    def standard(cls, n: int) -> Frame:
        return cls([OVector.unit(n, j) for j in range(n)])

    @property
    def coords(self) -> np.ndarray:
        return self._c

    @property
    def k(self) -> int:
        return self._c.shape[0]

    @property
    def n(self) -> int:
        return self._c.shape[1]

    def __len__(self) -> int:
        return self.k

    def __getitem__(self, i: int) -> OVector:
        return OVector(self._c[i])

    def __iter__(self) -> Iterator[OVector]:
        return (OVector(v) for v in self._c)

    def __repr__(self) -> str:
        return f"Frame(k={self.k}, n={self.n})"

    def to_json(self) -> list:
        return [v.to_json() for v in self]

    @classmethod
    def from_json(cls, data) -> Frame:
        if not isinstance(data, list) or not data:
            raise ParseError("a frame is a non-empty array of OVectors")
        vs = [OVector.from_json(v) for v in data]
        if len({len(v) for v in vs}) != 1:
            raise ParseError("frame vectors must share one length")
        return cls(vs)


def as_frame(f) -> Frame:
    return f if isinstance(f, Frame) else Frame(f)


def gram(f) -> np.ndarray:
    """``G[a, b] = <x_a, x_b>`` as a (k, k, 8) array."""
    c = as_frame(f).coords
    return inner_array(c[:, None], c[None, :])


def gram_residual(f) -> float:
    g = gram(f)
    target = np.zeros_like(g)
    target[np.arange(g.shape[0]), np.arange(g.shape[0]), 0] = 1.0
    return float(np.max(np.abs(g - target)))


def assoc_residual(f) -> float:
    """``max |A_{e_m}(x_a, x_b)|`` over m = 1..7 and all ordered pairs.

    ``A_p`` is real-linear in ``p`` and ``A_1 = 0``, so the imaginary units
    decide vanishing for every ``p``.
    """
    c = as_frame(f).coords
    px = omul(_IMAG[:, None, None, :], c[None])  # (7, k, n, 8)
    lhs = np.sum(omul(px[:, :, None], oconj(c)[None, None]), axis=-2)  # (7, k, k, 8)
    rhs = omul(_IMAG[:, None, None, :], gram(c)[None])
    return float(np.max(np.abs(lhs - rhs)))


def is_orthonormal(f, tol: Tolerances | None = None) -> tuple[bool, float]:
    r = gram_residual(f)
    return r <= resolve(tol).gram, r


def is_weak_associative(f, tol: Tolerances | None = None) -> tuple[bool, float]:
    """Orthonormal with every second associator between members vanishing.

    The residual reported is the larger of the Gram and associator residuals.
    """
    tol = resolve(tol)
    g, a = gram_residual(f), assoc_residual(f)
    return (g <= tol.gram and a <= tol.assoc), max(g, a)


def is_associative_frame(f, tol: Tolerances | None = None) -> bool:
    tol = resolve(tol)
    f = as_frame(f)
    imag = float(np.max(np.abs(f.coords[..., 1:])))
    return is_orthonormal(f, tol)[0] and imag <= tol.eq


def span_rank(f, tol: Tolerances | None = None) -> int:
    """Real dimension of the left O-span of the frame, from the 8k x 8n matrix."""
    c = as_frame(f).coords
    rows = omul(np.eye(8)[:, None, None, :], c[None])  # (8, k, n, 8)
    return _linalg.svd_rank(rows.reshape(8 * c.shape[0], -1), resolve(tol).rank)


@dataclass(frozen=True)
class FrameReport:
    orthonormal: bool
    associative: bool
    weak_associative: bool
    max_gram_residual: float
    max_assoc_residual: float
    complete: bool
    k: int
    n: int

    def to_dict(self) -> dict:
        return asdict(self)


def frame_report(f, tol: Tolerances | None = None) -> FrameReport:
    tol = resolve(tol)
    f = as_frame(f)
    g, a = gram_residual(f), assoc_residual(f)
    orth = g <= tol.gram
    weak = orth and a <= tol.assoc
    complete = weak and span_rank(f, tol) == 8 * f.n
    return FrameReport(
        orthonormal=bool(orth),
        associative=bool(is_associative_frame(f, tol)),
        weak_associative=bool(weak),
        max_gram_residual=g,
        max_assoc_residual=a,
        complete=bool(complete),
        k=f.k,
        n=f.n,
    )


# -- expansions -------------------------------------------------------------


class ParsevalResult(NamedTuple):
    coef_energy: float
    reconstruction_residual: float


def _expansion(f: Frame, x: OVector) -> tuple[np.ndarray, np.ndarray]:
    if x.coords.shape[0] != f.n:
        raise LengthMismatch(f"vector of length {len(x)} against frame in O^{f.n}")
    coef = inner_array(x.coords[None], f.coords)  # (k, 8)
    approx = np.sum(omul(coef[:, None, :], f.coords), axis=0)
    return coef, approx


def parseval_check(f, x) -> ParsevalResult:
    """Coefficient energy ``sum |<x, x_a>|^2`` and ``|x - sum <x, x_a> x_a|``."""
    f, x = as_frame(f), as_vector(x)
    coef, approx = _expansion(f, x)
    return ParsevalResult(
        float(np.sum(coef * coef)), float(np.linalg.norm(x.coords - approx))
    )


def parseval_scan_set(n: int) -> Iterator[OVector]:
    """``e_i`` in slot ``j`` for i = 0..7 (outer), j = 1..n (inner)."""
    for i in range(8):
        for j in range(n):
            yield OVector.unit(n, j, i)


def parseval_witness(f, tol: Tolerances | None = None) -> OVector | None:
    """First scan vector on which the Parseval identity fails, if any."""
    tau = resolve(tol).gram
    f = as_frame(f)
    for x in parseval_scan_set(f.n):
        energy, resid = parseval_check(f, x)
        if abs(energy - x.norm() ** 2) > tau or resid > tau:
            return x
    return None


class BesselTerms(NamedTuple):
    norm2: float
    coef_energy: float
    tail: float

    @property
    def residual(self) -> float:
        return abs(self.norm2 - self.coef_energy - self.tail)


def bessel_terms(f, x, tol: Tolerances | None = None) -> BesselTerms:
    f, x = as_frame(f), as_vector(x)
    ok, _ = is_weak_associative(f, tol)
    if not ok:
        raise NotWeakAssociative("Bessel identity needs a weak associative orthonormal set")
    coef, approx = _expansion(f, x)
    tail = float(np.sum((x.coords - approx) ** 2))
    return BesselTerms(x.norm() ** 2, float(np.sum(coef * coef)), tail)


def bessel_residual(f, x, tol: Tolerances | None = None) -> float:
    """``| |x|^2 - sum |<x, xi_i>|^2 - |x - sum <x, xi_i> xi_i|^2 |``."""
    return bessel_terms(f, x, tol).residual


def frame_scalar_action(p, f, side: str = "left", tol: Tolerances | None = None) -> Frame:
    """Multiply every member entrywise by the unit octonion ``p``."""
    p, f = as_octonion(p), as_frame(f)
    if abs(p.norm() - 1.0) > resolve(tol).eq:
        raise NonUnitScalar(f"scalar must have norm 1, got {p.norm():.17g}")
    if side == "left":
        return Frame(omul(p.coords, f.coords))
    if side == "right":
        return Frame(omul(f.coords, p.coords))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
