import numpy as np
import pytest

from octolin.catalog import (
    ISO2_SIGN,
    ISO2_SWAP,
    ISO3,
    ONE_SIDED_UNITARY,
    ORTHONORMAL_FOUR_IN_O2,
    UNITARY_NON_ISOMETRY,
)
from octolin.classify import (
    alternative_law_residuals,
    classify,
    is_isometry,
    is_partial_isometry,
    is_stiefel_frame,
    iso2_decompose,
    iso2_identity,
    loop_inverse,
    loop_mul,
    same_page,
    stiefel_OOy_dim,
)
from octolin.errors import DimMismatch, NotIsometry, NotSquare, NotUnit, PageMismatch, TooManyVectors
from octolin.frames import Frame
from octolin.octonion import e
from octolin.omodule import OVector
from octolin.paralinear import OMatrix
from octolin.sampling import (
    complex_to_cj,
    random_complex_unitary,
    random_cj_unitary,
    random_imaginary_unit,
    random_isometry,
    random_orthogonal,
    random_real_unit_vector,
    random_unit,
    random_weak_associative_frame,
)

S2 = 1 / np.sqrt(2)


@pytest.fixture
def rng():
    return np.random.default_rng(99)


def test_isometry_examples():
    for t in (ISO2_SWAP, ISO2_SIGN, ISO3, OMatrix.identity(4)):
        r = is_isometry(t)
        assert r.is_isometry and r.verdicts_agree and r.kernel_dim == 0
        assert r.gram_TTstar_residual <= 1e-9 and r.gram_TstarT_residual <= 1e-9


def test_counterexamples_are_not_isometries():
    r = is_isometry(UNITARY_NON_ISOMETRY)
    assert not r.is_isometry and r.verdicts_agree
    assert r.gram_TTstar_residual <= 1e-12 and r.gram_TstarT_residual <= 1e-12
    assert r.kernel_dim >= 1 and not r.kernel_is_O_submodule and not r.is_partial_isometry
    r = is_isometry(ONE_SIDED_UNITARY)
    assert not r.is_isometry and r.verdicts_agree


def test_classify_requires_square(rng):
    with pytest.raises(NotSquare):
        classify(OMatrix(rng.normal(size=(2, 3, 8))))


def test_random_isometries(rng):
    for n in (1, 2, 3):
        r = classify(random_isometry(rng, n))
        assert r.is_isometry and r.verdicts_agree and r.is_partial_isometry


def test_partial_isometry_examples():
    t = OMatrix([[e(1) * S2, e(2) * S2], [0, 0]])
    r = is_partial_isometry(t)
    assert r.is_partial_isometry and r.kernel_dim == 8 and r.normal_form
    r = is_partial_isometry(OMatrix.zeros(2))
    assert r.is_partial_isometry and r.kernel_dim == 16
    r = is_partial_isometry(ISO3)
    assert r.is_partial_isometry and r.kernel_dim == 0


def test_partial_isometry_rejects_non_orthonormal_rows(rng):
    rows = random_weak_associative_frame(rng, 3, 2)
    t = OMatrix(rows + [OVector.zeros(3)])
    assert classify(t).is_partial_isometry
    bad = OMatrix(rows + [rows[0] * 0.5 + rows[1]])
    assert not classify(bad).is_partial_isometry


def test_report_dict_fields():
    d = classify(OMatrix.identity(2)).to_dict()
    for key in ("is_paralinear_residual", "gram_TTstar_residual", "rows_weak_assoc", "kernel_dim"):
        assert key in d


def test_iso2_real_orthogonal():
    c, s = np.cos(0.3), np.sin(0.3)
    t = OMatrix.from_real([[c, s], [-s, c]])
    d = iso2_decompose(t)
    assert d.p == 1 and d.J == e(1) and d.U == t and d.residual == 0


def test_iso2_catalog_examples():
    d = iso2_decompose(ISO2_SWAP)
    assert d.p == e(1)
    assert d.reconstruct().isclose(ISO2_SWAP, 1e-9) and d.residual <= 1e-9
    d = iso2_decompose(ISO2_SIGN)
    assert d.reconstruct().isclose(ISO2_SIGN, 1e-9)


def test_iso2_round_trip(rng):
    for _ in range(10):
        _, u = random_cj_unitary(rng, 2)
        p = random_unit(rng)
        t = p * u
        d = iso2_decompose(t)
        assert d.reconstruct().isclose(t, 1e-9)
        assert abs(d.p.norm() - 1) <= 1e-12


def test_iso2_zero_leading_entry():
    t = OMatrix([[0, e(1)], [e(2), 0]])
    d = iso2_decompose(t)
    assert d.reconstruct().isclose(t, 1e-12)


def test_iso2_errors():
    with pytest.raises(DimMismatch):
        iso2_decompose(ISO3)
    with pytest.raises(NotIsometry):
        iso2_decompose(UNITARY_NON_ISOMETRY)


def test_loop_on_spine(rng):
    ident = iso2_identity()
    sq = loop_mul(ident, ident)
    assert sq.reconstruct().isclose(OMatrix.identity(2))
    for _ in range(5):
        a = iso2_decompose(random_unit(rng) * OMatrix.from_real(random_orthogonal(rng, 2)))
        prod = loop_mul(a, loop_inverse(a))
        assert prod.reconstruct().isclose(OMatrix.identity(2), 1e-9)
        x = iso2_decompose(random_unit(rng) * OMatrix.from_real(random_orthogonal(rng, 2)))
        res = alternative_law_residuals(a, x)
        assert max(res.values()) <= 1e-9


def test_alternative_laws_off_spine_are_only_reported(rng):
    j = random_imaginary_unit(rng)
    a = iso2_decompose(random_unit(rng) * complex_to_cj(random_complex_unitary(rng, 2), j))
    x = iso2_decompose(random_unit(rng) * complex_to_cj(random_complex_unitary(rng, 2), j))
    res = alternative_law_residuals(a, x)
    assert set(res) == {"left", "flexible", "right"}
    assert all(np.isfinite(v) for v in res.values())


def test_loop_page_mismatch(rng):
    a = iso2_decompose(complex_to_cj(random_complex_unitary(rng, 2), e(1)))
    b = iso2_decompose(complex_to_cj(random_complex_unitary(rng, 2), e(2)))
    assert not same_page(a, b)
    with pytest.raises(PageMismatch):
        loop_mul(a, b)
    assert same_page(a, iso2_identity())


def test_stiefel_examples(rng):
    for _ in range(5):
        y = random_real_unit_vector(rng, 3)
        assert stiefel_OOy_dim(y).dim_OOy == 8
    y = OVector([S2, e(1) * S2, 0])
    rep = stiefel_OOy_dim(y)
    assert rep.dim_OOy >= 9 and rep.fiber_dim == 24 - rep.dim_OOy
    assert stiefel_OOy_dim(OVector.unit(4, 0)).fiber_dim == 24
    with pytest.raises(NotUnit):
        stiefel_OOy_dim(OVector([1, 1]))


def test_stiefel_dimension_bounds(rng):
    for _ in range(5):
        c = rng.normal(size=(3, 8))
        y = OVector(c / np.linalg.norm(c))
        d = stiefel_OOy_dim(y).dim_OOy
        assert 8 <= d <= 24


def test_is_stiefel_frame(rng):
    assert is_stiefel_frame(Frame([OVector(rng.normal(size=(3, 8)) / 1e3)])) is False
    c = rng.normal(size=(3, 8))
    assert is_stiefel_frame(Frame([OVector(c / np.linalg.norm(c))]))
    assert is_stiefel_frame(Frame(ISO3.rows()))
    with pytest.raises(TooManyVectors):
        is_stiefel_frame(ORTHONORMAL_FOUR_IN_O2)
