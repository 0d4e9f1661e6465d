"""Fermionic generator tuples and operator matrices with generator entries.

A family C_0, ..., C_{m-1} satisfying the canonical anticommutation
relations

    C_j C_k + C_k C_j = 0,        C_j C_k* + C_k* C_j = delta_{jk} I,

is realized on (C^2)^(tensor m) by the usual spin-chain construction:
C_k is a parity string of Z factors, then a single lowering matrix
[[0, 1], [0, 0]], then identities.  All entries are 0 or +-1, so sparse
products are computed exactly in floating point and the relation
residuals vanish exactly, not merely to rounding.

The matrices of interest here have block entries which are scalar
multiples of these generators, with the generator index constant along
antidiagonals i + j = t.  Because distinct antidiagonals then carry
*distinct* generators, the operator norm of such a matrix is pinched by
the row/column l^2 profile of the scalar coefficients alone:
max(row_sup, col_sup) <= norm <= row_sup + col_sup, with equality at the
lower end when the generator pattern is genuinely of Hankel type.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable

import numpy as np
import scipy.sparse as sp

from .errors import (
    InvalidDimensionError,
    InvalidModesError,
    InvalidPatternError,
    SizeCapExceededError,
)
from .linalg import DENSE_SIZE_CAP, op_norm_dense, op_norm_power
from .sequences import WeightSequence
from .summation import exact_sum

_MAX_MODES = 14

_Z = sp.csr_matrix(np.array([[1.0, 0.0], [0.0, -1.0]]))
_LOWER = sp.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
_I2 = sp.identity(2, format="csr")


@dataclass(frozen=True)
class CarAlgebra:
    modes: int
    dim: int
    generators: tuple

    def dense(self, k: int) -> np.ndarray:
        return np.asarray(self.generators[k].toarray(), dtype=np.complex128)


def build_car(modes: int) -> CarAlgebra:
    """Generators C_0..C_{modes-1} as CSR matrices of size 2^modes."""
    if not (1 <= modes <= _MAX_MODES):
        raise InvalidModesError(f"modes must lie in [1, {_MAX_MODES}]")
    gens = []
    for k in range(modes):
        factors = [_Z] * k + [_LOWER] + [_I2] * (modes - k - 1)
        mat = reduce(lambda a, b: sp.kron(a, b, format="csr"), factors)
        mat.eliminate_zeros()
        gens.append(mat)
    return CarAlgebra(modes=modes, dim=2 ** modes, generators=tuple(gens))


def _residual_norm(r, dense_cap: int = DENSE_SIZE_CAP) -> float:
    r = sp.csr_matrix(r)
    r.eliminate_zeros()
    if r.nnz == 0:
        return 0.0
    if r.shape[0] <= dense_cap:
        return op_norm_dense(r.toarray()).value
    rh = r.conj().T.tocsr()
    est = op_norm_power(lambda v: r @ v, lambda v: rh @ v, r.shape[0])
    return est.value


def car_check(alg: CarAlgebra) -> tuple[float, float]:
    """Worst-case relation residuals over all ordered generator pairs.

    Returns (dev_anti, dev_mixed): the largest operator norm of
    C_j C_k + C_k C_j and of C_j C_k* + C_k* C_j - delta_{jk} I.
    """
    dev_anti = 0.0
    dev_mixed = 0.0
    gens = alg.generators
    adjs = [g.conj().T.tocsr() for g in gens]
    ident = sp.identity(alg.dim, format="csr")
    for j in range(alg.modes):
        for k in range(alg.modes):
            anti = gens[j] @ gens[k] + gens[k] @ gens[j]
            dev_anti = max(dev_anti, _residual_norm(anti))
            mixed = gens[j] @ adjs[k] + adjs[k] @ gens[j]
            if j == k:
                mixed = mixed - ident
            dev_mixed = max(dev_mixed, _residual_norm(mixed))
    return dev_anti, dev_mixed


# ---- coefficient plumbing ---------------------------------------------


def _coeff_fn(alpha) -> Callable[[int], complex]:
    if isinstance(alpha, WeightSequence):
        return lambda k: complex(alpha.value(k)) if k >= 0 else 0.0
    return lambda k: complex(alpha(k)) if k >= 0 else 0.0


def hankel_pattern(alpha, weight: Callable[[int], float] | None = None):
    """(beta, phi) for entries weight(i+j) a_{i+j} C_{i+j}."""
    a = _coeff_fn(alpha)
    w = (lambda k: 1.0) if weight is None else weight
    return (lambda i, j: w(i + j) * a(i + j)), (lambda t: t)


def commutator_pattern(alpha):
    """(beta, phi) for entries (j - i) a_{i+j-1} C_{i+j-1}.

    This is the coefficient pattern of Gamma D - D Gamma when Gamma has
    generator-valued antidiagonals; the generator index lags the
    antidiagonal by one.
    """
    a = _coeff_fn(alpha)
    return (lambda i, j: (j - i) * a(i + j - 1)), (lambda t: t - 1)


# ---- generator-valued sections ----------------------------------------


def car_pattern_matrix(
    beta: Callable[[int, int], complex],
    phi: Callable[[int], int],
    size: int,
    alg: CarAlgebra | None = None,
    dense_cap: int = DENSE_SIZE_CAP,
) -> np.ndarray:
    """Dense block matrix with (i, j) block beta(i, j) C_{phi(i+j)}.

    ``phi`` maps the antidiagonal index to a generator index and is only
    consulted on antidiagonals where some beta(i, j) is nonzero; it must
    be injective there (distinct antidiagonals, distinct generators) —
    that independence is what makes the row/column bounds of
    :func:`rc_bounds` meaningful.
    """
    if size < 1:
        raise InvalidDimensionError("size must be >= 1")
    coeffs = np.array(
        [[complex(beta(i, j)) for j in range(size)] for i in range(size)]
    )
    needed = sorted(
        {i + j for i in range(size) for j in range(size) if coeffs[i, j] != 0.0}
    )
    gen_of = {}
    for t in needed:
        g = int(phi(t))
        if g < 0:
            raise InvalidPatternError(f"phi({t}) = {g} is negative")
        gen_of[t] = g
    if len(set(gen_of.values())) != len(gen_of):
        raise InvalidPatternError("phi repeats a generator across antidiagonals")
    modes = max(gen_of.values()) + 1 if gen_of else 1
    if alg is None:
        alg = build_car(modes)
    elif alg.modes < modes:
        raise InvalidModesError(
            f"need {modes} generator modes, algebra has {alg.modes}"
        )
    d = alg.dim
    if size * d > dense_cap:
        raise SizeCapExceededError(
            f"dense size {size * d} exceeds cap {dense_cap}"
        )
    out = np.zeros((size * d, size * d), dtype=np.complex128)
    gen_dense = {t: alg.dense(g) for t, g in gen_of.items()}
    for i in range(size):
        for j in range(size):
            c = coeffs[i, j]
            if c != 0.0:
                out[i * d : (i + 1) * d, j * d : (j + 1) * d] = c * gen_dense[i + j]
    return out


def car_hankel(
    alpha,
    weight: Callable[[int], float] | None,
    size: int,
    alg: CarAlgebra | None = None,
    dense_cap: int = DENSE_SIZE_CAP,
) -> np.ndarray:
    """Dense generator-valued Hankel section [w(i+j) a_{i+j} C_{i+j}]."""
    if alg is None and size >= 1:
        alg = build_car(2 * size - 1)
    beta, phi = hankel_pattern(alpha, weight)
    return car_pattern_matrix(beta, phi, size, alg=alg, dense_cap=dense_cap)


def car_hankel_oracles(
    alpha,
    weight: Callable[[int], float] | None,
    size: int,
    alg: CarAlgebra | None = None,
):
    """Matrix-free (apply, apply_adjoint, dim) for the generator Hankel.

    Keeps the 2^(2*size-1)-dimensional generator blocks sparse; the block
    structure of the adjoint reuses the same antidiagonal scalars, since
    block (i, j) of the adjoint is the adjoint of block (j, i) and both
    sit on antidiagonal i + j.
    """
    if size < 1:
        raise InvalidDimensionError("size must be >= 1")
    if alg is None:
        alg = build_car(2 * size - 1)
    elif alg.modes < 2 * size - 1:
        raise InvalidModesError(
            f"need {2 * size - 1} generator modes, algebra has {alg.modes}"
        )
    a = _coeff_fn(alpha)
    w = (lambda k: 1.0) if weight is None else weight
    d = alg.dim
    blocks = []
    blocks_h = []
    for t in range(2 * size - 1):
        b = (w(t) * a(t)) * alg.generators[t]
        b = sp.csr_matrix(b)
        blocks.append(b)
        blocks_h.append(b.conj().T.tocsr())
    dim = size * d

    def apply(v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.complex128).reshape(size, d)
        out = np.zeros((size, d), dtype=np.complex128)
        for i in range(size):
            for j in range(size):
                out[i] += blocks[i + j] @ v[j]
        return out.reshape(dim)

    def apply_adjoint(v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.complex128).reshape(size, d)
        out = np.zeros((size, d), dtype=np.complex128)
        for i in range(size):
            for j in range(size):
                out[i] += blocks_h[i + j] @ v[j]
        return out.reshape(dim)

    return apply, apply_adjoint, dim


# ---- scalar-profile norm bounds ---------------------------------------


@dataclass(frozen=True)
class RowColBounds:
    row_sup: float
    col_sup: float
    lower: float
    upper: float


def rc_bounds(beta: Callable[[int, int], complex], size: int) -> RowColBounds:
    """Row/column l^2 bounds for a distinct-generator pattern matrix.

    lower = max(row_sup, col_sup) and upper = row_sup + col_sup, where
    row_sup is the largest l^2 norm of a coefficient row (col_sup likewise
    for columns).  Both bounds are always valid, and for some profiles and
    sizes the lower one is attained exactly; in general, though, a finite
    section cuts different antidiagonals at different lengths and its norm
    sits strictly between the two (sandwich), approaching the row/column
    sup only as the section grows.
    """
    if size < 1:
        raise InvalidDimensionError("size must be >= 1")
    c = np.array([[complex(beta(i, j)) for j in range(size)] for i in range(size)])
    sq = np.abs(c) ** 2
    row_sup = max(np.sqrt(exact_sum(sq[i, :])) for i in range(size))
    col_sup = max(np.sqrt(exact_sum(sq[:, j])) for j in range(size))
    return RowColBounds(
        row_sup=float(row_sup),
        col_sup=float(col_sup),
        lower=float(max(row_sup, col_sup)),
        upper=float(row_sup + col_sup),
    )
