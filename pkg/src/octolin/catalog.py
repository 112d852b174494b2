"""Named octonionic matrices and frames used as fixed test cases."""

from __future__ import annotations

import numpy as np

from .frames import Frame
from .octonion import e
from .omodule import OVector
from .paralinear import OMatrix

_S2 = 1 / np.sqrt(2)
_S6 = 1 / np.sqrt(6)

#: isometry of O^2 with purely imaginary entries
ISO2_SWAP = OMatrix([[e(1) * _S2, e(2) * _S2], [e(2) * _S2, e(1) * _S2]])
#: isometry of O^2, second column sign-flipped in the lower row
ISO2_SIGN = OMatrix([[e(1) * _S2, e(2) * _S2], [e(1) * _S2, -e(2) * _S2]])
#: isometry of O^3
ISO3 = OMatrix(
    [
        [np.sqrt(2) * _S6 * e(4), np.sqrt(2) * _S6 * e(1), np.sqrt(2) * _S6 * e(2)],
        [0, np.sqrt(3) * _S6 * e(2), np.sqrt(3) * _S6 * e(1)],
        [-2 * _S6 * e(4), _S6 * e(1), _S6 * e(2)],
    ]
)
#: T T* = I but T* T = [[1, -e4], [e4, 1]]
ONE_SIDED_UNITARY = OMatrix([[e(7) * _S2, e(3) * _S2], [e(2) * _S2, -e(6) * _S2]])
#: T T* = T* T = I, yet not an isometry
UNITARY_NON_ISOMETRY = OMatrix([[_S2, e(1) * _S2], [-e(3) * _S2, e(2) * _S2]])
#: orthonormal system of four vectors in O^2 that is not weak associative
ORTHONORMAL_FOUR_IN_O2 = Frame(
    [
        OVector([e(1) * _S2, e(2) * _S2]),
        OVector([e(4) * _S2, e(7) * _S2]),
        OVector([e(6) * _S2, e(5) * _S2]),
        OVector([_S2, e(3) * _S2]),
    ]
)

ISOMETRIES = {"iso2_swap": ISO2_SWAP, "iso2_sign": ISO2_SIGN, "iso3": ISO3}
NON_ISOMETRIES = {
    "one_sided_unitary": ONE_SIDED_UNITARY,
    "unitary_non_isometry": UNITARY_NON_ISOMETRY,
}
