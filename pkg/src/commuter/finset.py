"""Finite-set semantics, computed by exhaustive enumeration.

Sets are {0, .., n-1}; maps are lookup tables.  Encodings are fixed so that
results are reproducible integers:

* pairs over a copy index j0 and an element c0 (products J x C and coproducts
  of J copies of C alike) encode as ``j0 * |C| + c0``;
* a function f : D -> Y encodes little-endian in base |Y|, as
  ``sum(f(d0) * |Y|**d0 for d0 in D)``.

The functor algebra is deliberately small: identity, product with a fixed
set, power by a fixed set, coproduct of j copies, and composition.  Every
operation that would build a set larger than ``SIZE_LIMIT`` raises SizeError
instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import SizeError, TypingError

SIZE_LIMIT = 10**6


@dataclass(frozen=True, slots=True)
class FinSetObj:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("negative size")
        if self.size > SIZE_LIMIT:
            raise SizeError(f"set of size {self.size} exceeds limit {SIZE_LIMIT}")


@dataclass(frozen=True, slots=True)
class FinSetMap:
    dom: FinSetObj
    cod: FinSetObj
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise TypingError(
                f"table has {len(self.table)} entries for a domain of size {self.dom.size}"
            )
        for v in self.table:
            if not 0 <= v < self.cod.size:
                raise TypingError(f"table value {v} outside codomain of size {self.cod.size}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == self.dom.size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.size

    @property
    def is_bijective(self) -> bool:
        return self.dom.size == self.cod.size and self.is_injective


def identity_map(obj: FinSetObj) -> FinSetMap:
    return FinSetMap(obj, obj, tuple(range(obj.size)))


def compose_maps(f: FinSetMap, g: FinSetMap) -> FinSetMap:
    """g after f."""
    if f.cod != g.dom:
        raise TypingError(f"cannot compose: {f.cod.size} vs {g.dom.size}")
    return FinSetMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))


# ---------------------------------------------------------------- functors

@dataclass(frozen=True, slots=True)
class Id:
    pass


@dataclass(frozen=True, slots=True)
class TimesS:
    """C maps to S x C, pairs encoded s0 * |C| + c0."""

    s: int


@dataclass(frozen=True, slots=True)
class PowerS:
    """C maps to C^S, functions encoded little-endian in base |C|."""

    s: int


@dataclass(frozen=True, slots=True)
class CoprodJ:
    """C maps to j disjoint copies of C, encoded j0 * |C| + c0."""

    j: int


@dataclass(frozen=True, slots=True)
class Compose:
    """outer applied after inner: (Compose(F, G))(c) = F(G(c))."""

    outer: "FunctorExpr"
    inner: "FunctorExpr"


FunctorExpr = Id | TimesS | PowerS | CoprodJ | Compose


def _checked_size(n: int) -> int:
    if n > SIZE_LIMIT:
        raise SizeError(f"set of size {n} exceeds limit {SIZE_LIMIT}")
    return n


def eval_obj(expr: FunctorExpr, c: FinSetObj) -> FinSetObj:
    match expr:
        case Id():
            return c
        case TimesS(s):
            return FinSetObj(_checked_size(s * c.size))
        case PowerS(s):
            return FinSetObj(_checked_size(c.size**s))
        case CoprodJ(j):
            return FinSetObj(_checked_size(j * c.size))
        case Compose(outer, inner):
            return eval_obj(outer, eval_obj(inner, c))
    raise TypeError(f"not a functor expression: {expr!r}")


def encode_power(values: tuple[int, ...], base: int) -> int:
    total = 0
    for d0 in range(len(values) - 1, -1, -1):
        total = total * base + values[d0]
    return total


def decode_power(code: int, base: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(code % base)
        code //= base
    return tuple(out)


def eval_map(expr: FunctorExpr, f: FinSetMap) -> FinSetMap:
    match expr:
        case Id():
            return f
        case TimesS(s):
            dom = eval_obj(expr, f.dom)
            cod = eval_obj(expr, f.cod)
            table = tuple(
                s0 * f.cod.size + f.table[c0]
                for s0 in range(s)
                for c0 in range(f.dom.size)
            )
            return FinSetMap(dom, cod, table)
        case PowerS(s):
            dom = eval_obj(expr, f.dom)
            cod = eval_obj(expr, f.cod)
            table = []
            for code in range(dom.size):
                values = decode_power(code, max(f.dom.size, 1), s)
                table.append(encode_power(tuple(f.table[v] for v in values), f.cod.size))
            return FinSetMap(dom, cod, tuple(table))
        case CoprodJ(j):
            dom = eval_obj(expr, f.dom)
            cod = eval_obj(expr, f.cod)
            table = tuple(
                j0 * f.cod.size + f.table[c0]
                for j0 in range(j)
                for c0 in range(f.dom.size)
            )
            return FinSetMap(dom, cod, table)
        case Compose(outer, inner):
            return eval_map(outer, eval_map(inner, f))
    raise TypeError(f"not a functor expression: {expr!r}")


def inclusion(j0: int, j: int, c: FinSetObj) -> FinSetMap:
    """The j0-th coprojection C -> (j copies of C)."""
    if not 0 <= j0 < j:
        raise ValueError(f"copy index {j0} outside range({j})")
    cop = FinSetObj(_checked_size(j * c.size))
    return FinSetMap(c, cop, tuple(j0 * c.size + c0 for c0 in range(c.size)))


def canonical_alpha(expr: FunctorExpr, j: int, c: FinSetObj) -> FinSetMap:
    """The comparison map from j copies of F(C) to F(j copies of C).

    On the j0-th copy it acts as F applied to the j0-th coprojection.
    Bijective whenever F preserves coproducts of j copies; the power
    functors fail this in general.
    """
    fc = eval_obj(expr, c)
    cod = eval_obj(expr, FinSetObj(_checked_size(j * c.size)))
    dom = FinSetObj(_checked_size(j * fc.size))
    table: list[int] = []
    for j0 in range(j):
        leg = eval_map(expr, inclusion(j0, j, c))
        table.extend(leg.table)
    return FinSetMap(dom, cod, tuple(table))


def strength_map(j: FinSetObj, y: FinSetObj, d: FinSetObj) -> FinSetMap:
    """J x (Y^D) -> (J x Y)^D, sending (j0, f) to d0 |-> (j0, f(d0))."""
    jn, yn, dn = j.size, y.size, d.size
    yd = FinSetObj(_checked_size(yn**dn))
    dom = FinSetObj(_checked_size(jn * yd.size))
    cod = FinSetObj(_checked_size((jn * yn) ** dn))
    table = []
    for j0 in range(jn):
        for code in range(yd.size):
            f = decode_power(code, max(yn, 1), dn)
            g = tuple(j0 * yn + f[d0] for d0 in range(dn))
            table.append(encode_power(g, jn * yn))
    return FinSetMap(dom, cod, tuple(table))


def natural_map_J_to_JD(j: FinSetObj, d: FinSetObj) -> FinSetMap:
    """J -> J^D, sending each element to the constant function at it."""
    jn, dn = j.size, d.size
    cod = FinSetObj(_checked_size(jn**dn))
    table = tuple(encode_power((j0,) * dn, max(jn, 1)) for j0 in range(jn))
    return FinSetMap(j, cod, table)


def retract_of_one(d: FinSetObj) -> bool:
    """Is D a retract of the one-element set?  Checked by enumerating maps."""
    one = FinSetObj(1)
    if d.size == 0:
        return False  # no map from 1 back into the empty set
    into = FinSetMap(d, one, (0,) * d.size)  # the only map D -> 1
    for pick in range(d.size):
        back = FinSetMap(one, d, (pick,))
        if compose_maps(into, back).table == identity_map(d).table:
            return True
    return False


@dataclass(frozen=True, slots=True)
class AtomReport:
    """Whether a fixed exponent D behaves like an atom, scanned over small J."""

    d_size: int
    max_j: int
    bijective: tuple[bool, ...]  # indexed by |J| = 0 .. max_j
    sizes: tuple[tuple[int, int], ...]  # (|J|, |J^D|) per row
    retract: bool
    consistent: bool  # every scanned J passed

    def failures(self) -> list[int]:
        return [j for j, ok in enumerate(self.bijective) if not ok]


def atom_strong_check(d: FinSetObj, max_j: int = 4) -> AtomReport:
    """Scan |J| = 0..max_j: is the constants map J -> J^D a bijection?

    The verdict is positive only when every scanned J passes, which happens
    exactly for |D| = 1; ``retract`` reports the independent retract-of-one
    check for comparison.
    """
    if max_j < 2:
        raise ValueError("max_j must be at least 2 to be informative")
    flags = []
    sizes = []
    for jn in range(max_j + 1):
        m = natural_map_J_to_JD(FinSetObj(jn), d)
        flags.append(m.is_bijective)
        sizes.append((m.dom.size, m.cod.size))
    return AtomReport(
        d_size=d.size,
        max_j=max_j,
        bijective=tuple(flags),
        sizes=tuple(sizes),
        retract=retract_of_one(d),
        consistent=all(flags),
    )


def projection(x: int, d: int) -> FinSetMap:
    """X x D -> X, pairs encoded x0 * d + d0."""
    dom = FinSetObj(_checked_size(x * d))
    return FinSetMap(dom, FinSetObj(x), tuple(x0 for x0 in range(x) for _ in range(d)))


def hom_transpose_bijection(x: int, d: int, j: int) -> bool:
    """Is precomposition with the projection X x D -> X a bijection
    hom(X, J) -> hom(X x D, J)?  Decided by listing both hom sets."""
    proj = projection(x, d)
    jj = FinSetObj(j)
    images = set()
    count = 0
    for table in iproduct(range(j), repeat=x):
        f = FinSetMap(FinSetObj(x), jj, table)
        images.add(compose_maps(proj, f).table)
        count += 1
    total = j ** (x * d)
    return len(images) == count and count == total
