import pytest

from commuter.errors import SizeError, TypingError
from commuter.finset import (
    SIZE_LIMIT,
    CoprodJ,
    Compose,
    FinSetMap,
    FinSetObj,
    Id,
    PowerS,
    TimesS,
    atom_strong_check,
    canonical_alpha,
    compose_maps,
    decode_power,
    encode_power,
    eval_map,
    eval_obj,
    hom_transpose_bijection,
    identity_map,
    inclusion,
    natural_map_J_to_JD,
    projection,
    retract_of_one,
    strength_map,
)
from commuter.rng import Lcg

SHAPES = (Id(), TimesS(2), PowerS(2), CoprodJ(3), Compose(TimesS(2), PowerS(2)))


def random_map(dom: FinSetObj, cod: FinSetObj, rng: Lcg) -> FinSetMap:
    return FinSetMap(dom, cod, tuple(rng.randrange(cod.size) for _ in range(dom.size)))


# ---------------------------------------------------------------- plumbing

def test_map_validation():
    two, three = FinSetObj(2), FinSetObj(3)
    with pytest.raises(TypingError):
        FinSetMap(two, three, (0,))  # wrong table length
    with pytest.raises(TypingError):
        FinSetMap(two, three, (0, 3))  # value out of range
    with pytest.raises(ValueError):
        FinSetObj(-1)
    with pytest.raises(SizeError):
        FinSetObj(SIZE_LIMIT + 1)


def test_map_predicates():
    two, three = FinSetObj(2), FinSetObj(3)
    inj = FinSetMap(two, three, (2, 0))
    assert inj.is_injective and not inj.is_surjective and not inj.is_bijective
    surj = FinSetMap(three, two, (0, 1, 0))
    assert surj.is_surjective and not surj.is_injective
    perm = FinSetMap(two, two, (1, 0))
    assert perm.is_bijective
    empty = FinSetMap(FinSetObj(0), FinSetObj(0), ())
    assert empty.is_bijective


def test_compose_maps_order():
    two, three = FinSetObj(2), FinSetObj(3)
    f = FinSetMap(two, three, (1, 2))
    g = FinSetMap(three, two, (0, 0, 1))
    gf = compose_maps(f, g)
    assert gf.table == (0, 1)  # g applied after f
    with pytest.raises(TypingError):
        compose_maps(f, identity_map(two))  # f ends in a 3-set


def test_power_encoding_roundtrip():
    assert encode_power((2, 1), 4) == 6  # 2 * 1 + 1 * 4, little-endian
    assert decode_power(6, 4, 2) == (2, 1)
    for code in range(27):
        assert encode_power(decode_power(code, 3, 3), 3) == code


# ---------------------------------------------------------------- functors

def test_eval_obj_sizes():
    c = FinSetObj(3)
    assert eval_obj(Id(), c).size == 3
    assert eval_obj(TimesS(2), c).size == 6
    assert eval_obj(PowerS(2), c).size == 9
    assert eval_obj(CoprodJ(4), c).size == 12
    assert eval_obj(Compose(TimesS(2), PowerS(2)), c).size == 18
    assert eval_obj(PowerS(0), FinSetObj(0)).size == 1  # empty exponent


def test_eval_obj_size_guard():
    with pytest.raises(SizeError):
        eval_obj(PowerS(7), FinSetObj(10))


def test_eval_map_times_table():
    f = FinSetMap(FinSetObj(3), FinSetObj(2), (1, 0, 1))
    m = eval_map(TimesS(2), f)
    assert (m.dom.size, m.cod.size) == (6, 4)
    assert m.table == (1, 0, 1, 3, 2, 3)


def test_eval_map_power_table():
    f = FinSetMap(FinSetObj(3), FinSetObj(2), (1, 0, 1))
    m = eval_map(PowerS(2), f)
    assert (m.dom.size, m.cod.size) == (9, 4)
    assert m.table == (3, 2, 3, 1, 0, 1, 3, 2, 3)


def test_eval_map_coprod_table():
    f = FinSetMap(FinSetObj(2), FinSetObj(2), (1, 0))
    m = eval_map(CoprodJ(2), f)
    assert m.table == (1, 0, 3, 2)


def test_eval_map_empty_domain_power():
    f = FinSetMap(FinSetObj(0), FinSetObj(2), ())
    m = eval_map(PowerS(2), f)  # 0^2 = 0 functions into a 0-set... of size 0
    assert m.dom.size == 0
    assert m.table == ()


@pytest.mark.parametrize("expr", SHAPES, ids=str)
def test_functoriality(expr):
    rng = Lcg(7)
    for _ in range(8):
        a = FinSetObj(1 + rng.randrange(3))
        b = FinSetObj(1 + rng.randrange(3))
        c = FinSetObj(1 + rng.randrange(3))
        f = random_map(a, b, rng)
        g = random_map(b, c, rng)
        assert eval_map(expr, identity_map(a)) == identity_map(eval_obj(expr, a))
        assert eval_map(expr, compose_maps(f, g)) == compose_maps(
            eval_map(expr, f), eval_map(expr, g)
        )


# ---------------------------------------------------------------- comparisons

def test_inclusion_tables():
    c = FinSetObj(2)
    assert inclusion(0, 3, c).table == (0, 1)
    assert inclusion(1, 3, c).table == (2, 3)
    assert inclusion(2, 3, c).table == (4, 5)
    with pytest.raises(ValueError):
        inclusion(3, 3, c)


def test_canonical_alpha_identity_functor():
    c = FinSetObj(3)
    assert canonical_alpha(Id(), 2, c) == identity_map(FinSetObj(6))


def test_canonical_alpha_times_is_permutation():
    m = canonical_alpha(TimesS(2), 2, FinSetObj(2))
    assert m.table == (0, 1, 4, 5, 2, 3, 6, 7)
    assert m.is_bijective


def test_canonical_alpha_power_fails():
    m = canonical_alpha(PowerS(2), 2, FinSetObj(1))
    assert (m.dom.size, m.cod.size) == (2, 4)
    assert m.table == (0, 3)  # the two constant functions
    assert m.is_injective and not m.is_bijective


def test_canonical_alpha_times_grid():
    for s in range(1, 4):
        for j in range(1, 4):
            for c in range(1, 4):
                assert canonical_alpha(TimesS(s), j, FinSetObj(c)).is_bijective


def test_canonical_alpha_naturality():
    rng = Lcg(11)
    for expr in SHAPES:
        for _ in range(6):
            c1 = FinSetObj(1 + rng.randrange(3))
            c2 = FinSetObj(1 + rng.randrange(3))
            j = 1 + rng.randrange(3)
            f = random_map(c1, c2, rng)
            lhs = compose_maps(
                canonical_alpha(expr, j, c1),
                eval_map(expr, eval_map(CoprodJ(j), f)),
            )
            rhs = compose_maps(
                eval_map(CoprodJ(j), eval_map(expr, f)),
                canonical_alpha(expr, j, c2),
            )
            assert lhs == rhs


# ---------------------------------------------------------------- strength

def test_strength_small_is_identity():
    m = strength_map(FinSetObj(2), FinSetObj(2), FinSetObj(1))
    assert m.table == (0, 1, 2, 3)


def test_strength_shape_and_entry():
    m = strength_map(FinSetObj(2), FinSetObj(2), FinSetObj(2))
    assert (m.dom.size, m.cod.size) == (8, 16)
    assert m.is_injective and not m.is_surjective
    # (j0=1, f=(0,1)) sits at index 1*4+2 and lands on the function (2,3)
    assert m.table[6] == 2 + 3 * 4


def test_natural_map_constants():
    m = natural_map_J_to_JD(FinSetObj(2), FinSetObj(2))
    assert m.table == (0, 3)
    assert natural_map_J_to_JD(FinSetObj(1), FinSetObj(3)).table == (0,)
    collapsed = natural_map_J_to_JD(FinSetObj(2), FinSetObj(0))
    assert (collapsed.dom.size, collapsed.cod.size) == (2, 1)
    assert collapsed.table == (0, 0)


# ---------------------------------------------------------------- atoms

def test_retract_of_one():
    assert not retract_of_one(FinSetObj(0))
    assert retract_of_one(FinSetObj(1))
    assert not retract_of_one(FinSetObj(2))
    assert not retract_of_one(FinSetObj(3))


def test_atom_verdicts():
    for d in range(4):
        report = atom_strong_check(FinSetObj(d), max_j=4)
        assert report.consistent == (d == 1)
        assert report.retract == (d == 1)
        assert report.d_size == d
        assert len(report.bijective) == 5


def test_atom_failure_rows():
    two = atom_strong_check(FinSetObj(2), max_j=4)
    assert two.failures() == [2, 3, 4]
    assert two.sizes[2] == (2, 4)
    zero = atom_strong_check(FinSetObj(0), max_j=4)
    assert zero.failures() == [0, 2, 3, 4]
    assert zero.sizes[0] == (0, 1)
    one = atom_strong_check(FinSetObj(1), max_j=4)
    assert one.failures() == []
    assert one.sizes == ((0, 0), (1, 1), (2, 2), (3, 3), (4, 4))


def test_atom_check_needs_informative_scan():
    with pytest.raises(ValueError):
        atom_strong_check(FinSetObj(1), max_j=1)


# ---------------------------------------------------------------- transposes

def test_projection_table():
    assert projection(2, 3).table == (0, 0, 0, 1, 1, 1)


def test_transpose_bijection_iff_d_is_one():
    for x in range(1, 4):
        for j in range(1, 4):
            assert hom_transpose_bijection(x, 1, j)
    assert not hom_transpose_bijection(1, 2, 2)
    assert not hom_transpose_bijection(2, 2, 2)
    assert not hom_transpose_bijection(1, 0, 2)  # empty exponent collapses hom


def test_transpose_degenerate_corners():
    assert hom_transpose_bijection(0, 0, 2)  # both hom sets are singletons
    assert hom_transpose_bijection(1, 1, 1)
