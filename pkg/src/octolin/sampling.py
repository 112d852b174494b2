"""Seeded random octonions, vectors, frames and isometries."""

from __future__ import annotations

import numpy as np

from .octonion import Octonion, omul
from .omodule import OVector
from .paralinear import OMatrix


def rng_from(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_octonion(rng, scale: float = 1.0) -> Octonion:
    return Octonion(rng_from(rng).normal(scale=scale, size=8))


def random_unit(rng) -> Octonion:
    c = rng_from(rng).normal(size=8)
    return Octonion(c / np.linalg.norm(c))


def random_imaginary_unit(rng) -> Octonion:
    c = rng_from(rng).normal(size=8)
    c[0] = 0.0
    return Octonion(c / np.linalg.norm(c))


def random_vector(rng, n: int) -> OVector:
    return OVector(rng_from(rng).normal(size=(n, 8)))


def random_real_unit_vector(rng, n: int) -> OVector:
    v = rng_from(rng).normal(size=n)
    return OVector.from_real(v / np.linalg.norm(v))


def random_matrix(rng, n: int, k: int | None = None) -> OMatrix:
    return OMatrix(rng_from(rng).normal(size=(n if k is None else k, n, 8)))


def random_orthogonal(rng, n: int) -> np.ndarray:
    q, r = np.linalg.qr(rng_from(rng).normal(size=(n, n)))
    return q * np.sign(np.diag(r))


def random_complex_unitary(rng, n: int) -> np.ndarray:
    rng = rng_from(rng)
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def complex_to_cj(a: np.ndarray, j: Octonion) -> OMatrix:
    """Map a complex matrix into C_J = R + RJ via ``x + iy -> x + yJ``."""
    a = np.asarray(a, dtype=complex)
    c = a.real[..., None] * np.eye(8)[0] + a.imag[..., None] * j.coords
    return OMatrix(c)


def random_cj_unitary(rng, n: int, j: Octonion | None = None) -> tuple[Octonion, OMatrix]:
    rng = rng_from(rng)
    if j is None:
        j = random_imaginary_unit(rng)
    return j, complex_to_cj(random_complex_unitary(rng, n), j)


def random_isometry(rng, n: int) -> OMatrix:
    """``p U q`` for unit ``p, q`` and ``U`` unitary over a random C_J."""
    rng = rng_from(rng)
    _, u = random_cj_unitary(rng, n)
    p, q = random_unit(rng), random_unit(rng)
    return OMatrix(omul(omul(p.coords, u.coords), q.coords))


def random_weak_associative_frame(rng, n: int, k: int | None = None) -> list[OVector]:
    """First ``k`` rows of a random isometry of O^n."""
    t = random_isometry(rng, n)
    return t.rows()[: n if k is None else k]


def probe_vectors(n: int, rng, count: int = 32) -> list[OVector]:
    """``count`` Gaussian vectors followed by every ``e_i`` in every slot."""
    rng = rng_from(rng)
    probes = [random_vector(rng, n) for _ in range(count)]
    probes += [OVector.unit(n, j, i) for j in range(n) for i in range(8)]
    return probes
