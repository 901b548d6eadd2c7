import numpy as np
import pytest

from commuter.core import Diagram, Slice, compose, gen_diagram, identity, tensor
from commuter.duality import theorem1_gamma, theorem1_signature
from commuter.duality import CommutationStructure, DualityData
from commuter.errors import NumericError, SizeError, TypingError
from commuter.exchange import adjacent_swap, canonicalize, linearizations, swappable
from commuter.matrix import (
    COND_LIMIT,
    DIM_LIMIT,
    TOL_CHAIN,
    TOL_EXACT,
    ModelAssignment,
    check_theorem1_numeric,
    check_theorem3_numeric,
    companion_gamma,
    dual_pair,
    eval_diagram,
    eye,
    flip,
    kron,
    mate_beta,
    random_alpha,
    random_matrix,
    require_condition,
)
from commuter.rng import Lcg
from commuter.sampling import random_diagram

from conftest import soundness_model, soundness_signature


# ---------------------------------------------------------------- primitives

def test_flip_entries():
    m = flip(2, 3)
    assert m.shape == (6, 6)
    assert m[3, 4] == 1.0  # column (i=1, j=1) -> row 1*2+1
    assert m[0, 0] == 1.0
    assert np.allclose(m @ m.T, np.eye(6))
    # flipping twice in opposite shapes restores the identity
    assert np.array_equal(flip(3, 2) @ flip(2, 3), np.eye(6))


def test_kron_associative_and_guarded():
    rng = Lcg(5)
    a = random_matrix(2, 3, rng)
    b = random_matrix(3, 2, rng)
    c = random_matrix(2, 2, rng)
    assert np.array_equal(kron(a, b, c), np.kron(np.kron(a, b), c))
    with pytest.raises(SizeError):
        kron(np.zeros((200, 200)), np.zeros((200, 200)))
    with pytest.raises(SizeError):
        eye(DIM_LIMIT + 1)


def test_dual_pair_zigzags_exact():
    for n in (1, 2, 3, 5):
        eta, eps = dual_pair(n)
        assert eta.shape == (n * n, 1)
        assert np.array_equal(eps, eta.T)
        zig_a = kron(eps, eye(n)) @ kron(eye(n), eta)
        zig_b = kron(eye(n), eps) @ kron(eta, eye(n))
        assert np.array_equal(zig_a, np.eye(n))  # exactly, not approximately
        assert np.array_equal(zig_b, np.eye(n))


def test_require_condition():
    assert require_condition(np.eye(3), "id") == pytest.approx(1.0)
    with pytest.raises(NumericError):
        require_condition(np.zeros((2, 2)), "zero")
    nearly = np.diag([1.0, 1.0 / (10 * COND_LIMIT)])
    with pytest.raises(NumericError):
        require_condition(nearly, "nearly singular")


# ---------------------------------------------------------------- evaluation

@pytest.fixture(scope="module")
def model():
    return soundness_model(soundness_signature())


def test_eval_diagram_identity(model):
    assert np.array_equal(eval_diagram(identity(("P", "Q")), model), np.eye(6))


def test_eval_diagram_single_gen(model):
    sig = soundness_signature()
    f = sig.morphisms["f"]
    assert np.array_equal(eval_diagram(gen_diagram(f), model), model.matrix("f"))


def test_eval_diagram_composition_order(model):
    sig = soundness_signature()
    f, k = sig.morphisms["f"], sig.morphisms["k"]
    d = compose(gen_diagram(f), gen_diagram(k))
    assert np.allclose(eval_diagram(d, model), model.matrix("k") @ model.matrix("f"))


def test_eval_diagram_whiskering(model):
    sig = soundness_signature()
    f = sig.morphisms["f"]
    d = Diagram(("Q", "P"), (Slice(1, f),))
    want = kron(eye(3), model.matrix("f"))
    assert np.array_equal(eval_diagram(d, model), want)


def test_eval_diagram_mixed_product(model):
    sig = soundness_signature()
    f, k = sig.morphisms["f"], sig.morphisms["k"]
    t = tensor(gen_diagram(f), gen_diagram(k))
    direct = kron(model.matrix("f"), model.matrix("k"))
    assert np.max(np.abs(eval_diagram(t, model) - direct)) <= TOL_EXACT


def test_eval_diagram_rejects_bad_shape():
    sig = soundness_signature()
    f = sig.morphisms["f"]
    bad = ModelAssignment(dims={"P": 2, "Q": 3}, mats={"f": np.zeros((2, 2))})
    with pytest.raises(TypingError):
        eval_diagram(gen_diagram(f), bad)
    missing = ModelAssignment(dims={"P": 2, "Q": 3}, mats={})
    with pytest.raises(TypingError):
        eval_diagram(gen_diagram(f), missing)
    nameless = ModelAssignment(dims={}, mats={"f": np.zeros((3, 2))})
    with pytest.raises(TypingError):
        eval_diagram(gen_diagram(f), nameless)


def fits_model(d, model):
    from commuter.core import intermediate_words

    try:
        for w in intermediate_words(d):
            model.dim_word(w)
    except SizeError:
        return False
    return True


def test_eval_invariant_under_swaps(model):
    sig = soundness_signature()
    checked = 0
    for seed in range(40):
        d = random_diagram(sig, Lcg(seed), max_slices=5)
        if not fits_model(d, model):
            continue
        checked += 1
        base = eval_diagram(d, model)
        for i in range(len(d.slices) - 1):
            if swappable(d, i):
                other = eval_diagram(adjacent_swap(d, i), model)
                assert np.max(np.abs(base - other)) <= TOL_EXACT
        canon = eval_diagram(canonicalize(d).diagram, model)
        assert np.max(np.abs(base - canon)) <= TOL_EXACT
    assert checked >= 30  # the size guard must not hollow the test out


def test_eval_agrees_on_every_linearization(model):
    sig = soundness_signature()
    d = random_diagram(sig, Lcg(17), max_slices=4)
    base = eval_diagram(d, model)
    for lin in linearizations(d):
        assert np.max(np.abs(eval_diagram(lin, model) - base)) <= TOL_EXACT


# ---------------------------------------------------------------- companions

def test_mate_beta_shape_guard():
    with pytest.raises(TypingError):
        mate_beta(np.eye(5), 2, 2)
    with pytest.raises(NumericError):
        mate_beta(np.zeros((4, 4)), 2, 2)
    with pytest.raises(TypingError):
        companion_gamma(np.eye(5), 2, 2)


def test_mate_of_flip_is_flip():
    # alpha = flip(3, 2) passes X (dim 3) across A (dim 2); its mate passes
    # X across B the same way, so it is the same permutation
    beta = mate_beta(flip(3, 2), 2, 3)
    assert np.max(np.abs(beta - flip(3, 2))) <= TOL_EXACT


def test_companion_gamma_inverts_alpha():
    rng = Lcg(123)
    for n, x in ((2, 2), (2, 3), (3, 2)):
        alpha = random_alpha(n * x, n * x, rng)
        beta = mate_beta(alpha, n, x)
        gamma = companion_gamma(beta, n, x)
        assert np.max(np.abs(gamma @ alpha - np.eye(n * x))) <= TOL_CHAIN
        assert np.max(np.abs(alpha @ gamma - np.eye(n * x))) <= TOL_CHAIN


def test_symbolic_gamma_matches_companion_route():
    sig, gens = theorem1_signature()
    dual = DualityData(("A",), ("B",), gens["eta"], gens["eps"])
    s = CommutationStructure.from_gen(("X",), gens["alpha"])
    t = CommutationStructure.from_gen(("X",), gens["beta"])
    gamma_diagram = theorem1_gamma(s, dual, t)
    for n, x in ((2, 3), (3, 2)):
        rng = Lcg(7)
        alpha = random_alpha(n * x, n * x, rng)
        beta = mate_beta(alpha, n, x)
        eta, eps = dual_pair(n)
        model = ModelAssignment(
            dims={"A": n, "B": n, "X": x},
            mats={"alpha": alpha, "beta": beta, "eta": eta, "eps": eps},
        )
        via_diagram = eval_diagram(gamma_diagram, model)
        via_blocks = companion_gamma(beta, n, x)
        assert np.max(np.abs(via_diagram - via_blocks)) == 0.0  # same arithmetic


# ---------------------------------------------------------------- theorem runs

def test_theorem1_numeric_grid():
    for seed in (42, 43, 44):
        for n, x in ((2, 2), (2, 3), (3, 2), (3, 3)):
            report = check_theorem1_numeric(n, x, seed)
            assert report.ok, report.residuals
            assert report.worst() <= TOL_CHAIN
            assert report.seed == seed
            assert set(report.residuals) == {
                "eta_square", "eps_square", "gamma_then_alpha", "alpha_then_gamma",
            }


def test_theorem3_numeric_exact():
    for n in (1, 2, 3):
        for x in (1, 2, 3):
            report = check_theorem3_numeric(n, x)
            assert report.ok
            assert report.worst() == 0.0
            assert report.tolerance == TOL_EXACT


def test_numeric_report_worst():
    report = check_theorem1_numeric(2, 2, 42)
    assert report.worst() == max(report.residuals.values())
