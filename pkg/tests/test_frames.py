import numpy as np
import pytest

from octolin.catalog import ISO3, ISO2_SWAP, ORTHONORMAL_FOUR_IN_O2
from octolin.errors import DomainError, LengthMismatch, NonUnitScalar, NotWeakAssociative, ParseError
from octolin.frames import (
    Frame,
    assoc_residual,
    bessel_residual,
    bessel_terms,
    frame_report,
    frame_scalar_action,
    gram,
    is_associative_frame,
    is_orthonormal,
    is_weak_associative,
    parseval_check,
    parseval_scan_set,
    parseval_witness,
    span_rank,
)
from octolin.octonion import e
from octolin.omodule import OVector, second_associator_vec
from octolin.sampling import random_unit, random_vector, random_weak_associative_frame


def vec(*entries) -> OVector:
    return OVector(list(entries))


def test_orthonormal_examples():
    assert is_orthonormal(Frame.standard(2))[0]
    assert is_orthonormal(ORTHONORMAL_FOUR_IN_O2)[0]
    ok, res = is_orthonormal(Frame([vec(1, 0), vec(1, 0)]))
    assert not ok and res == pytest.approx(1.0)


def test_weak_associative_examples():
    for n in (1, 2, 4):
        assert is_weak_associative(Frame.standard(n)) == (True, 0.0)
    ok, res = is_weak_associative(ORTHONORMAL_FOUR_IN_O2)
    assert not ok and res > 0.1
    assert is_weak_associative(Frame(ISO3.rows()))[0]


def test_four_vector_witness_by_scan():
    # some A_{e_m}(x_a, x_b) must be nonzero
    f = ORTHONORMAL_FOUR_IN_O2
    witness = next(
        (m, a, b)
        for m in range(1, 8)
        for a in range(4)
        for b in range(4)
        if second_associator_vec(e(m), f[a], f[b]).norm() > 1e-6
    )
    assert witness is not None
    assert assoc_residual(f) > 1e-6


def test_associative_frame_examples():
    assert is_associative_frame(Frame.standard(3))
    assert not is_associative_frame(Frame([vec(e(1), 0), vec(0, 1)]))
    assert not is_associative_frame(Frame(ISO2_SWAP.rows()))


def test_associative_implies_weak_associative():
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
    f = Frame([OVector.from_real(row) for row in q[:3]])
    assert is_associative_frame(f) and is_weak_associative(f)[0]


def test_gram_is_hermitian():
    rng = np.random.default_rng(4)
    f = Frame([random_vector(rng, 3) for _ in range(3)])
    g = gram(f)
    conj_t = np.swapaxes(g, 0, 1) * np.array([1, -1, -1, -1, -1, -1, -1, -1])
    np.testing.assert_allclose(g, conj_t, atol=1e-12)


def test_frame_report_and_completeness():
    r = frame_report(Frame.standard(2))
    assert r.orthonormal and r.associative and r.weak_associative and r.complete
    assert (r.k, r.n) == (2, 2)
    r = frame_report(Frame([vec(1, 0)]))
    assert r.weak_associative and not r.complete
    assert span_rank(Frame(ISO3.rows())) == 24
    assert set(r.to_dict()) >= {"orthonormal", "max_gram_residual", "complete"}


def test_parseval_examples():
    rng = np.random.default_rng(5)
    f = Frame.standard(4)
    for _ in range(10):
        x = random_vector(rng, 4)
        energy, resid = parseval_check(f, x)
        assert energy == pytest.approx(x.norm() ** 2, abs=1e-9)
        assert resid <= 1e-9
    energy, resid = parseval_check(Frame(ISO3.rows()), ISO3.rows()[0])
    assert energy == pytest.approx(1.0) and resid <= 1e-12


def test_parseval_fails_on_four_vector_system():
    x = parseval_witness(ORTHONORMAL_FOUR_IN_O2)
    assert x is not None
    energy, resid = parseval_check(ORTHONORMAL_FOUR_IN_O2, x)
    assert abs(energy - x.norm() ** 2) > 1e-6 or resid > 1e-6
    assert parseval_witness(Frame.standard(3)) is None


def test_scan_set_order():
    scan = list(parseval_scan_set(2))
    assert len(scan) == 16
    assert scan[0] == OVector.unit(2, 0) and scan[1] == OVector.unit(2, 1)
    assert scan[2] == OVector.unit(2, 0, 1)


def test_scalar_action_examples():
    f = Frame.standard(2)
    assert np.array_equal(frame_scalar_action(1, f).coords, f.coords)
    g = frame_scalar_action(e(1), f)
    assert g[0] == vec(e(1), 0) and g[1] == vec(0, e(1))
    assert is_weak_associative(g)[0]
    with pytest.raises(NonUnitScalar):
        frame_scalar_action(2 * e(1), f)
    with pytest.raises(ValueError):
        frame_scalar_action(e(1), f, side="middle")


def test_scalar_action_preserves_weak_associativity():
    rng = np.random.default_rng(6)
    for _ in range(10):
        f = Frame(random_weak_associative_frame(rng, 3, 2))
        p = random_unit(rng)
        for side in ("left", "right"):
            ok, res = is_weak_associative(frame_scalar_action(p, f, side))
            assert ok and res <= 1e-9


def test_bessel_examples():
    rng = np.random.default_rng(7)
    x = random_vector(rng, 3)
    t = bessel_terms(Frame.standard(3), x)
    assert t.residual <= 1e-9 and t.tail <= 1e-9
    t = bessel_terms(Frame([vec(1, 0)]), vec(0, 1))
    assert t.tail == pytest.approx(1.0) and t.residual <= 1e-12
    for _ in range(5):
        idx = sorted(rng.choice(4, size=2, replace=False))
        f = Frame([OVector.unit(4, j) for j in idx])
        assert bessel_residual(f, random_vector(rng, 4)) <= 1e-9
    with pytest.raises(NotWeakAssociative):
        bessel_terms(ORTHONORMAL_FOUR_IN_O2, vec(1, 0))


def test_frame_constructor_and_json():
    with pytest.raises(DomainError):
        Frame([])
    with pytest.raises(LengthMismatch):
        Frame([vec(1, 0), vec(1)])
    f = Frame(ISO3.rows())
    g = Frame.from_json(f.to_json())
    assert np.array_equal(f.coords, g.coords)
    with pytest.raises(ParseError):
        Frame.from_json([[[0] * 8], [[0] * 8, [0] * 8]])
    with pytest.raises(ParseError):
        Frame.from_json({})
