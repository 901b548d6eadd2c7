"""Matrix semantics: objects are dimensions, tensor is the Kronecker product.

Vectors are columns, so composition is matrix multiplication on the left:
evaluating ``compose(f, g)`` yields ``M(g) @ M(f)``.  A word's index space is
mixed-radix big-endian over the letters, matching numpy's kron convention.

Two tolerances are used throughout: TOL_EXACT for identities that hold to
rounding (permutation matrices, re-bracketing), TOL_CHAIN for identities
reached through a matrix inverse, where conditioning enters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .core import Diagram, Word, intermediate_words
from .errors import NumericError, SizeError, TypingError
from .rng import Lcg

DIM_LIMIT = 10**4
TOL_EXACT = 1e-12
TOL_CHAIN = 1e-9
COND_LIMIT = 1e8


def kron(*mats: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, guarded by DIM_LIMIT."""
    rows = 1
    cols = 1
    for m in mats:
        rows *= m.shape[0]
        cols *= m.shape[1]
        if rows > DIM_LIMIT or cols > DIM_LIMIT:
            raise SizeError(f"kron result {rows}x{cols} exceeds limit {DIM_LIMIT}")
    return reduce(np.kron, mats)


def eye(n: int) -> np.ndarray:
    if n > DIM_LIMIT:
        raise SizeError(f"identity of dimension {n} exceeds limit {DIM_LIMIT}")
    return np.eye(n)


def flip(p: int, q: int) -> np.ndarray:
    """The permutation matrix sending e_i (x) e_j to e_j (x) e_i.

    Columns are indexed by pairs (i, j) as i*q + j; the column for (i, j)
    is the basis vector at row j*p + i.
    """
    if p * q > DIM_LIMIT:
        raise SizeError(f"flip of dimension {p * q} exceeds limit {DIM_LIMIT}")
    out = np.zeros((p * q, p * q))
    for i in range(p):
        for j in range(q):
            out[j * p + i, i * q + j] = 1.0
    return out


def dual_pair(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Unit and counit for the self-duality of dimension n.

    The unit is the n^2 x 1 column picking out sum_i e_i (x) e_i; the counit
    is its transpose.  Both zigzag identities hold exactly.
    """
    if n * n > DIM_LIMIT:
        raise SizeError(f"dual pair of dimension {n * n} exceeds limit {DIM_LIMIT}")
    eta = np.zeros((n * n, 1))
    for i in range(n):
        eta[i * n + i, 0] = 1.0
    return eta, eta.T.copy()


@dataclass(frozen=True)
class ModelAssignment:
    """Dimensions for object names and matrices for morphism names."""

    dims: dict[str, int]
    mats: dict[str, np.ndarray]

    def dim_word(self, word: Word) -> int:
        total = 1
        for name in word:
            if name not in self.dims:
                raise TypingError(f"no dimension assigned to object {name!r}")
            total *= self.dims[name]
            if total > DIM_LIMIT:
                raise SizeError(f"word dimension exceeds limit {DIM_LIMIT}")
        return total

    def matrix(self, name: str) -> np.ndarray:
        if name not in self.mats:
            raise TypingError(f"no matrix assigned to morphism {name!r}")
        return self.mats[name]


def eval_diagram(d: Diagram, model: ModelAssignment) -> np.ndarray:
    """Fold the slices bottom-up; returns the matrix of the composite."""
    words = intermediate_words(d)
    total = eye(model.dim_word(d.input))
    for k, s in enumerate(d.slices):
        before = words[k]
        g = model.matrix(s.gen.name)
        want_cols = model.dim_word(s.gen.dom)
        want_rows = model.dim_word(s.gen.cod)
        if g.shape != (want_rows, want_cols):
            raise TypingError(
                f"matrix for {s.gen.name!r} is {g.shape}, "
                f"expected {(want_rows, want_cols)}"
            )
        left = model.dim_word(before[: s.offset])
        right = model.dim_word(before[s.offset + len(s.gen.dom):])
        total = kron(eye(left), g, eye(right)) @ total
    return total


def random_matrix(rows: int, cols: int, rng: Lcg) -> np.ndarray:
    """Entries drawn uniformly from [-1, 1)."""
    out = np.empty((rows, cols))
    for r in range(rows):
        for c in range(cols):
            out[r, c] = rng.symmetric()
    return out


def random_alpha(rows: int, cols: int, rng: Lcg) -> np.ndarray:
    """A random matrix nudged toward invertibility when square.

    Adding 2I keeps eigenvalues away from zero for entries in [-1, 1), so
    seeded runs stay well conditioned.
    """
    out = random_matrix(rows, cols, rng)
    if rows == cols:
        out += 2.0 * np.eye(rows)
    return out


def require_condition(m: np.ndarray, label: str) -> float:
    cond = float(np.linalg.cond(m))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise NumericError(f"{label} condition number {cond:.3e} exceeds {COND_LIMIT:.0e}")
    return cond


def mate_beta(alpha: np.ndarray, dim_a: int, dim_x: int) -> np.ndarray:
    """The companion map X (x) B -> B (x) X induced by alpha : X A -> A X.

    B shares A's dimension and the diagonal dual pair relates them.
    Assembled directly from Kronecker blocks (not via eval_diagram) so the
    two construction routes stay independent:

        (I_{B X} (x) eps) (I_B (x) alpha^{-1} (x) I_B) (eta (x) I_{X B})

    read bottom-up on column vectors.
    """
    n = dim_a
    x = dim_x
    if alpha.shape != (n * x, n * x):
        raise TypingError(f"alpha is {alpha.shape}, expected {(n * x, n * x)}")
    require_condition(alpha, "alpha")
    eta, eps = dual_pair(n)
    inv = np.linalg.inv(alpha)
    lift = kron(eta, eye(x * n))
    middle = kron(eye(n), inv, eye(n))
    drop = kron(eye(n * x), eps)
    return drop @ middle @ lift


def companion_gamma(beta: np.ndarray, dim_a: int, dim_x: int) -> np.ndarray:
    """The candidate inverse A (x) X -> X (x) A assembled from the companion:

        (eps (x) I_{X A}) (I_A (x) beta (x) I_A) (I_{A X} (x) eta)

    read bottom-up on column vectors.
    """
    n = dim_a
    x = dim_x
    if beta.shape != (n * x, x * n):
        raise TypingError(f"beta is {beta.shape}, expected {(n * x, x * n)}")
    eta, eps = dual_pair(n)
    grow = kron(eye(n * x), eta)
    middle = kron(eye(n), beta, eye(n))
    collapse = kron(eps, eye(x * n))
    return collapse @ middle @ grow


@dataclass(frozen=True)
class NumericReport:
    """Residuals from one numeric run; ok means all within tolerance."""

    dims: dict[str, int]
    residuals: dict[str, float]
    tolerance: float
    ok: bool
    seed: int | None = None

    def worst(self) -> float:
        return max(self.residuals.values(), default=0.0)


def check_theorem1_numeric(
    dim_a: int, dim_x: int, seed: int, tolerance: float = TOL_CHAIN
) -> NumericReport:
    """Draw a random invertible alpha : X A -> A X and test the full chain.

    beta is the mate of alpha's inverse, gamma the eta/beta/eps composite.
    The residuals cover the theorem's hypotheses (both squares hold for
    this alpha, beta pair) and its conclusion (gamma inverts alpha on both
    sides).
    """
    rng = Lcg(seed)
    n, x = dim_a, dim_x
    alpha = random_alpha(n * x, n * x, rng)
    beta = mate_beta(alpha, n, x)
    gamma = companion_gamma(beta, n, x)
    eta, eps = dual_pair(n)
    # unit square: eta (x) I_X = (I_B (x) alpha)(beta (x) I_A)(I_X (x) eta)
    eta_lhs = kron(eta, eye(x))
    eta_rhs = kron(eye(n), alpha) @ kron(beta, eye(n)) @ kron(eye(x), eta)
    # counit square: (eps (x) I_X)(I_A (x) beta)(alpha (x) I_B) = I_X (x) eps
    eps_lhs = kron(eps, eye(x)) @ kron(eye(n), beta) @ kron(alpha, eye(n))
    eps_rhs = kron(eye(x), eps)
    residuals = {
        "eta_square": float(np.max(np.abs(eta_lhs - eta_rhs))),
        "eps_square": float(np.max(np.abs(eps_lhs - eps_rhs))),
        "gamma_then_alpha": float(np.max(np.abs(alpha @ gamma - eye(n * x)))),
        "alpha_then_gamma": float(np.max(np.abs(gamma @ alpha - eye(x * n)))),
    }
    ok = all(v <= tolerance for v in residuals.values())
    return NumericReport(
        dims={"A": n, "X": x},
        residuals=residuals,
        tolerance=tolerance,
        ok=ok,
        seed=seed,
    )


def check_theorem3_numeric(
    dim_n: int, dim_x: int, tolerance: float = TOL_EXACT
) -> NumericReport:
    """Instantiate the pass-across maps as flips and check every identity.

    A and B share dimension n so the diagonal dual pair relates them:
    eta picks out 1 -> B (x) A, eps collapses A (x) B -> 1.  The actions
    are a = flip(n, x) : A X -> X A and b = flip(n, x) : B X -> X B, with
    binv = flip(x, n).  All composites are 0/1 permutation matrices, so
    every residual must be exactly zero:

    * the eta/binv/eps expression on A (x) X reproduces a;
    * the two-step composite on (B A) (x) X equals flip(n*n, x);
    * both zigzags and both inverse laws hold.
    """
    n, x = dim_n, dim_x
    a = flip(n, x)
    b = flip(n, x)
    binv = flip(x, n)
    eta, eps = dual_pair(n)
    # expression: (A X) -> (A X B A) -> (A B X A) -> (X A), bottom-up
    grow = kron(eye(n * x), eta)
    pass_back = kron(eye(n), binv, eye(n))
    collapse = kron(eps, eye(x * n))
    expression = collapse @ pass_back @ grow
    # composite on (B A) (x) X: slide X past A, then past B
    composite = kron(b, eye(n)) @ kron(eye(n), a)
    zig_a = kron(eps, eye(n)) @ kron(eye(n), eta)
    zig_b = kron(eye(n), eps) @ kron(eta, eye(n))
    residuals = {
        "expression_vs_action": float(np.max(np.abs(expression - a))),
        "composite_vs_flip": float(np.max(np.abs(composite - flip(n * n, x)))),
        "zigzag_A": float(np.max(np.abs(zig_a - eye(n)))),
        "zigzag_B": float(np.max(np.abs(zig_b - eye(n)))),
        "binv_left": float(np.max(np.abs(binv @ b - eye(n * x)))),
        "binv_right": float(np.max(np.abs(b @ binv - eye(x * n)))),
    }
    ok = all(v <= tolerance for v in residuals.values())
    return NumericReport(
        dims={"A": n, "B": n, "X": x},
        residuals=residuals,
        tolerance=tolerance,
        ok=ok,
    )
