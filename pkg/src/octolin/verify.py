"""Seeded property suite over the algebraic identities the package relies on.

Each property runs its fixed cases plus ``trials`` random ones and reports the
largest residual seen.  Boolean properties report the number of failing cases
against a threshold of zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import catalog
from .classify import classify, iso2_decompose
from .frames import (
    Frame,
    frame_report,
    frame_scalar_action,
    gram,
    is_weak_associative,
    parseval_check,
    parseval_witness,
)
from .octonion import INDEX, SIGN, TRIPLES, basis_array, oassoc, oconj, omul, onorm2, real_part_array
from .omodule import (
    OVector,
    decompose_real,
    inner,
    inner_from_real,
    inner_real,
    polarization_inner,
    second_associator_array,
)
from .paralinear import (
    OMatrix,
    apply,
    dual,
    matmul,
    moufang_left,
    moufang_right,
    op_second_associator,
    paralinearity_residual,
    real_matrix,
    regular_compose_residual,
    scalar_action_left,
    scalar_action_matrix,
    scalar_action_right,
)
from .sampling import (
    complex_to_cj,
    random_complex_unitary,
    random_imaginary_unit,
    random_isometry,
    random_matrix,
    random_orthogonal,
    random_unit,
    random_vector,
    random_weak_associative_frame,
    rng_from,
)


@dataclass(frozen=True)
class Property:
    name: str
    threshold: float
    run: Callable[[np.random.Generator, int], tuple[float, int]]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    max_residual: float
    threshold: float
    cases: int

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.threshold


def _maxabs(a) -> float:
    a = np.asarray(a, dtype=float)
    return float(np.max(np.abs(a))) if a.size else 0.0


def _ident(n: int) -> np.ndarray:
    c = np.zeros((n, n, 8))
    c[np.arange(n), np.arange(n), 0] = 1.0
    return c


# -- octonion core -----------------------------------------------------------


def _table_vs_triples(rng, trials):
    eps = np.zeros((8, 8, 8), dtype=int)
    for t in TRIPLES:
        for perm in itertools.permutations(range(3)):
            parity = np.linalg.det(np.eye(3)[list(perm)])
            eps[tuple(t[i] for i in perm)] = round(parity)
    bad = 0
    for i, j in itertools.product(range(1, 8), repeat=2):
        if i == j:
            bad += (SIGN[i, j], INDEX[i, j]) != (-1, 0)
            continue
        ks = np.nonzero(eps[i, j])[0]
        bad += len(ks) != 1 or (SIGN[i, j], INDEX[i, j]) != (eps[i, j, ks[0]], ks[0])
    return float(bad), 49


def _norm_multiplicative(rng, trials):
    p, q = rng.normal(size=(2, trials, 8))
    r = np.sqrt(onorm2(omul(p, q))) - np.sqrt(onorm2(p) * onorm2(q))
    return _maxabs(r), trials


def _alternating(rng, trials):
    p, q = rng.normal(size=(2, trials, 8))
    r = [oassoc(p, p, q), oassoc(p, q, p), oassoc(q, p, p)]
    return _maxabs(r), trials


def _real_part(rng, trials):
    p = rng.normal(size=(trials, 8))
    proj = np.zeros_like(p)
    proj[:, 0] = p[:, 0]
    return _maxabs(real_part_array(p) - proj), trials


def _trace_associativity(rng, trials):
    eye = np.eye(8)
    a = omul(eye[:, None, None], omul(eye[None, :, None], eye[None, None, :]))
    b = omul(omul(eye[:, None, None], eye[None, :, None]), eye[None, None, :])
    return _maxabs(a[..., 0] - b[..., 0]), 512


# -- module identities ----------------------------------------------------


def _vectors(rng, trials, n=3):
    return rng.normal(size=(2, trials, n, 8))


def _hermitian(rng, trials):
    u, v = _vectors(rng, trials)
    uv = np.sum(omul(u, oconj(v)), axis=-2)
    vu = np.sum(omul(v, oconj(u)), axis=-2)
    return _maxabs(uv - oconj(vu)), trials


def _assoc_antisymmetric(rng, trials):
    u, v = _vectors(rng, trials)
    p = rng.normal(size=(trials, 8))
    return _maxabs(second_associator_array(p, u, v) + second_associator_array(p, v, u)), trials


def _inner_p_expansion(rng, trials):
    worst = 0.0
    for _ in range(trials):
        u, v = random_vector(rng, 3), random_vector(rng, 3)
        p = rng.normal(size=8)
        lhs = inner(u, OVector(omul(p, v.coords))).coords
        rhs = omul(inner(u, v).coords, oconj(p)) + second_associator_array(p, u.coords, v.coords)
        worst = max(worst, _maxabs(lhs - rhs))
    return worst, trials


def _inner_pq_expansion(rng, trials):
    worst = 0.0
    for _ in range(trials):
        u, v = rng.normal(size=(2, 3, 8))
        p, q = rng.normal(size=(2, 8))
        lhs = np.sum(omul(omul(p, u), oconj(omul(q, v))), axis=0)
        pqv = oassoc(p, q, v)
        rhs = (
            omul(omul(p, np.sum(omul(u, oconj(v)), axis=0)), oconj(q))
            + second_associator_array(omul(p, q), u, v)
            + np.sum(omul(pqv, oconj(u)), axis=0)
        )
        worst = max(worst, _maxabs(lhs - rhs))
    return worst, trials


def _assoc_imaginary(rng, trials):
    u, v = _vectors(rng, trials)
    p = rng.normal(size=(trials, 8))
    return _maxabs(second_associator_array(p, u, v)[..., 0]), trials


def _left_alternative(rng, trials):
    p, q = rng.normal(size=(2, trials, 1, 8))
    x = rng.normal(size=(trials, 3, 8))
    return _maxabs(oassoc(p, q, x) + oassoc(q, p, x)), trials


def _inner_formulas(rng, trials):
    worst = 0.0
    for _ in range(trials):
        x, y = random_vector(rng, 3), random_vector(rng, 3)
        ref = inner(x, y).coords
        worst = max(
            worst,
            _maxabs(inner_from_real(x, y).coords - ref),
            _maxabs(polarization_inner(x, y).coords - ref),
            abs(inner_real(x, y) - ref[0]),
            _maxabs(decompose_real(x).reconstruct().coords - x.coords),
        )
    return worst, trials


# -- frames ----------------------------------------------------------------


def _gram_hermitian(rng, trials):
    worst = 0.0
    for _ in range(trials):
        g = gram(Frame(rng.normal(size=(4, 3, 8))))
        worst = max(worst, _maxabs(g - oconj(g.transpose(1, 0, 2))))
    return worst, trials


def _assoc_implies_weak(rng, trials):
    bad = 0
    for _ in range(trials):
        k = int(rng.integers(1, 4))
        q = random_orthogonal(rng, 3)[:k]
        rep = frame_report([OVector.from_real(row) for row in q])
        bad += not (rep.associative and rep.weak_associative)
    return float(bad), trials


def _cardinality(rng, trials):
    bad = 0
    for _ in range(trials):
        k = int(rng.integers(1, 4))
        rep = frame_report(random_weak_associative_frame(rng, 3, k))
        bad += not rep.weak_associative or rep.complete != (k == 3)
    return float(bad), trials


def _unit_action(rng, trials):
    worst = 0.0
    for _ in range(trials):
        f = Frame(random_weak_associative_frame(rng, 3, int(rng.integers(1, 4))))
        p = random_unit(rng)
        for side in ("left", "right"):
            worst = max(worst, is_weak_associative(frame_scalar_action(p, f, side))[1])
    return worst, trials


def _parseval(rng, trials):
    worst = 0.0
    for _ in range(trials):
        f = random_weak_associative_frame(rng, 3)
        x = random_vector(rng, 3)
        energy, resid = parseval_check(f, x)
        worst = max(worst, abs(energy - x.norm() ** 2), resid)
    return worst, trials


def _parseval_fails_off_class(rng, trials):
    four = catalog.ORTHONORMAL_FOUR_IN_O2
    bad = (parseval_witness(four) is None) + is_weak_associative(four)[0]
    return float(bad), 1


# -- para-linear operators -------------------------------------------------


def _paralinear(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t = random_matrix(rng, 3)
        worst = max(worst, paralinearity_residual(t, [random_vector(rng, 3) for _ in range(4)]))
    return worst, trials


def _dual_relation(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t = random_matrix(rng, 3)
        ts = dual(t)
        x, y = random_vector(rng, 3), random_vector(rng, 3)
        tx, tsy = apply(t, x), apply(ts, y)
        worst = max(worst, abs(inner_real(tx, y) - inner_real(x, tsy)))
        corr = np.zeros(8)
        for i in range(1, 8):
            a = op_second_associator(basis_array(i), x, t).direct
            corr[i] = inner_real(a, y)
        worst = max(worst, _maxabs(inner(x, tsy).coords - (inner(tx, y).coords - corr)))
        xr = OVector.from_real(rng.normal(size=3))
        yr = OVector.from_real(rng.normal(size=3))
        worst = max(
            worst,
            _maxabs(inner(xr, apply(ts, y)).coords - inner(apply(t, xr), y).coords),
            _maxabs(inner(x, apply(ts, yr)).coords - inner(apply(t, x), yr).coords),
        )
    return worst, trials


def _regular_composition(rng, trials):
    worst = 0.0
    for _ in range(trials):
        s, t = random_matrix(rng, 3), random_matrix(rng, 3)
        worst = max(worst, regular_compose_residual(s, t, [random_vector(rng, 3) for _ in range(3)]))
    return worst, trials


def _moufang(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t, p, x = random_matrix(rng, 3), random_unit(rng), random_vector(rng, 3)
        worst = max(
            worst,
            _maxabs((scalar_action_right(t, p)(x) - moufang_right(t, p)(x)).coords),
            _maxabs((scalar_action_left(p, t)(x) - moufang_left(p, t)(x)).coords),
        )
    return worst, trials


def _isometry_gram(rng, trials):
    mats = list(catalog.ISOMETRIES.values()) + [random_isometry(rng, 3) for _ in range(trials)]
    worst = 0.0
    for t in mats:
        n = t.shape[0]
        ts = dual(t)
        worst = max(
            worst,
            _maxabs(matmul(t, ts).coords - _ident(n)),
            _maxabs(matmul(ts, t).coords - _ident(n)),
        )
    return worst, len(mats)


def _op_associator(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t, x = random_matrix(rng, 3), random_vector(rng, 3)
        worst = max(worst, op_second_associator(rng.normal(size=8), x, t).residual)
    return worst, trials


def _op_associator_imaginary(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t, x = random_matrix(rng, 3), random_vector(rng, 3)
        a = op_second_associator(rng.normal(size=8), x, t)
        worst = max(worst, _maxabs(a.closed.coords[:, 0]), _maxabs(a.direct.coords[:, 0]))
    return worst, trials


def _real_matrix_agreement(rng, trials):
    worst = 0.0
    for _ in range(trials):
        t, y = random_matrix(rng, 3), random_vector(rng, 3)
        worst = max(worst, _maxabs(y.flat() @ real_matrix(t) - apply(t, y).flat()))
    return worst, trials


# -- classification --------------------------------------------------------


def classification_corpus(rng, random_count: int) -> list[OMatrix]:
    """Fixed examples plus random isometries and random non-isometries."""
    rng = rng_from(rng)
    mats = list(catalog.ISOMETRIES.values()) + list(catalog.NON_ISOMETRIES.values())
    mats.append(OMatrix.identity(2))
    for i in range(random_count):
        n = 2 + i % 2
        kind = i % 4
        if kind == 0:
            mats.append(OMatrix.from_real(random_orthogonal(rng, n)))
        elif kind == 1:
            j = random_imaginary_unit(rng)
            u = complex_to_cj(random_complex_unitary(rng, n), j)
            mats.append(random_unit(rng) * u)
        elif kind == 2:
            mats.append(random_isometry(rng, n))
        else:
            mats.append(random_matrix(rng, n))
    return mats


def _equivalence_web(rng, trials):
    bad = 0
    mats = classification_corpus(rng, trials)
    for t in mats:
        bad += not classify(t, seed=rng).verdicts_agree
    return float(bad), len(mats)


def _scalar_action_isometry(rng, trials):
    bad = 0
    mats = list(catalog.ISOMETRIES.values()) + [random_isometry(rng, 3) for _ in range(trials)]
    for t in mats:
        p = random_unit(rng)
        for side in ("left", "right"):
            rep = frame_report(scalar_action_matrix(t, p, side).rows())
            bad += not (rep.weak_associative and rep.complete)
    return float(bad), len(mats)


def _partial_image(rng, trials):
    bad = 0
    for i in range(trials):
        k = 1 + i % 2
        rows = random_weak_associative_frame(rng, 3, k) + [OVector.zeros(3)] * (3 - k)
        rep = classify(OMatrix(rows), seed=rng)
        bad += not (rep.is_partial_isometry and rep.image_frame_weak_assoc)
    return float(bad), trials


def _counterexamples(rng, trials):
    a, b = catalog.ONE_SIDED_UNITARY, catalog.UNITARY_NON_ISOMETRY
    expected = np.zeros((2, 2, 8))
    expected[0, 0, 0] = expected[1, 1, 0] = 1.0
    expected[0, 1, 4], expected[1, 0, 4] = -1.0, 1.0
    r = max(
        _maxabs(matmul(a, dual(a)).coords - _ident(2)),
        _maxabs(matmul(dual(a), a).coords - expected),
        _maxabs(matmul(b, dual(b)).coords - _ident(2)),
        _maxabs(matmul(dual(b), b).coords - _ident(2)),
    )
    if classify(a).is_isometry or classify(b).is_isometry:
        r = float("inf")
    return float(r), 2


def _iso2_round_trip(rng, trials):
    worst = 0.0
    for t in (catalog.ISO2_SWAP, catalog.ISO2_SIGN):
        worst = max(worst, _maxabs(iso2_decompose(t).reconstruct().coords - t.coords))
    for _ in range(trials):
        j = random_imaginary_unit(rng)
        m = random_unit(rng) * complex_to_cj(random_complex_unitary(rng, 2), j)
        worst = max(worst, _maxabs(iso2_decompose(m).reconstruct().coords - m.coords))
    return worst, trials + 2


PROPERTIES: tuple[Property, ...] = (
    Property("table matches triples", 0.0, _table_vs_triples),
    Property("norm is multiplicative", 1e-10, _norm_multiplicative),
    Property("associator alternating", 1e-12, _alternating),
    Property("real part formula", 1e-12, _real_part),
    Property("trace associativity on basis", 0.0, _trace_associativity),
    Property("inner product hermitian", 1e-12, _hermitian),
    Property("second associator antisymmetric", 1e-10, _assoc_antisymmetric),
    Property("<u,pv> expansion", 1e-10, _inner_p_expansion),
    Property("<pu,qv> expansion", 1e-10, _inner_pq_expansion),
    Property("second associator imaginary", 1e-12, _assoc_imaginary),
    Property("left alternative on O^n", 1e-12, _left_alternative),
    Property("inner product formulas agree", 1e-10, _inner_formulas),
    Property("Gram matrix hermitian", 1e-12, _gram_hermitian),
    Property("associative implies weak associative", 0.0, _assoc_implies_weak),
    Property("weak associative basis has n vectors", 0.0, _cardinality),
    Property("unit scalars preserve weak associativity", 1e-9, _unit_action),
    Property("Parseval for weak associative bases", 1e-9, _parseval),
    Property("Parseval fails for the four-vector system", 0.0, _parseval_fails_off_class),
    Property("matrix operators are para-linear", 1e-12, _paralinear),
    Property("dual operator relations", 1e-10, _dual_relation),
    Property("regular composition is opposite product", 1e-9, _regular_composition),
    Property("Moufang forms of scalar actions", 1e-9, _moufang),
    Property("isometry gives TT* = T*T = I", 1e-9, _isometry_gram),
    Property("operator second associator formulas", 1e-10, _op_associator),
    Property("operator second associator imaginary", 1e-12, _op_associator_imaginary),
    Property("real matrix agrees with apply", 1e-10, _real_matrix_agreement),
    Property("isometry verdicts agree", 0.0, _equivalence_web),
    Property("scalar actions keep isometries", 0.0, _scalar_action_isometry),
    Property("partial isometry image frames", 0.0, _partial_image),
    Property("non-isometric unitary examples", 1e-12, _counterexamples),
    Property("Iso_O(2) round trip", 1e-9, _iso2_round_trip),
)


def _fault(rng, trials):
    return 1.0, 1


def run_suite(seed=42, trials: int = 20, inject_fault: bool = False) -> list[PropertyResult]:
    """Run every property with its own generator spawned from ``seed``."""
    props = list(PROPERTIES)
    if inject_fault:
        props.append(Property("injected fault", 0.0, _fault))
    seeds = np.random.SeedSequence(seed).spawn(len(props))
    results = []
    for prop, ss in zip(props, seeds):
        resid, cases = prop.run(np.random.default_rng(ss), trials)
        results.append(PropertyResult(prop.name, float(resid), prop.threshold, int(cases)))
    return results


def format_results(results: list[PropertyResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  max={r.max_residual:.3e}  "
        f"tol={r.threshold:.0e}  cases={r.cases}"
        for r in results
    ]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} properties passed")
    return "\n".join(lines)

