"""Class functions on symmetric groups and products of two of them.

Irreducible characters are computed by the Murnaghan-Nakayama recursion,
Littlewood-Richardson coefficients by counting lattice skew tableaux, and
induction by the classical cycle-type splitting formula.  Everything is
exact rational arithmetic.

Characters are stored densely over all cycle types; with weights at desk
scale the class lists are tiny.  The Murnaghan-Nakayama memo cache is a
plain ``lru_cache`` on immutable arguments, safe for concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Mapping

from .errors import (
    InvalidArgs,
    NegativeMultiplicity,
    NonIntegralMultiplicity,
)
from .partitions import (
    Partition,
    SkewShape,
    enumerate_partitions,
    specht_dimension,
    transpose,
)

# ---------------------------------------------------------------------------
# Cycle-type combinatorics


def cycle_types(r: int) -> list[Partition]:
    return enumerate_partitions(r)


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod s^{m_s} m_s! over part sizes s with multiplicity m_s."""
    z = 1
    mult: dict[int, int] = {}
    for s in rho:
        mult[s] = mult.get(s, 0) + 1
    for s, m in mult.items():
        z *= s**m * factorial(m)
    return z


def class_size(rho: Partition) -> int:
    return factorial(rho.weight) // centralizer_order(rho)


def sign_of_class(rho: Partition) -> int:
    """Sign of any permutation with cycle type rho."""
    return (-1) ** (rho.weight - rho.length)


def identity_type(r: int) -> Partition:
    return Partition([1] * r)


def merge_types(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(tuple(a) + tuple(b), reverse=True))


def splittings(rho: Partition, a: int) -> Iterator[tuple[Partition, Partition]]:
    """All ways to split the multiset of parts of rho into a cycle type of
    weight a and the complementary one."""
    sizes = sorted(set(rho), reverse=True)
    mults = [sum(1 for s in rho if s == x) for x in sizes]

    def rec(i: int, left: int, chosen: list[int]):
        if left < 0:
            return
        if i == len(sizes):
            if left == 0:
                first = []
                second = []
                for s, m, k in zip(sizes, mults, chosen):
                    first += [s] * k
                    second += [s] * (m - k)
                yield Partition(sorted(first, reverse=True)), Partition(
                    sorted(second, reverse=True)
                )
            return
        for k in range(mults[i] + 1):
            yield from rec(i + 1, left - k * sizes[i], chosen + [k])

    yield from rec(0, a, [])


# ---------------------------------------------------------------------------
# Class functions


class ClassFunction:
    """A rational-valued function on the conjugacy classes of Sigma_r."""

    __slots__ = ("degree", "values")

    def __init__(self, degree: int, values: Mapping[Partition, Fraction | int]):
        self.degree = degree
        cts = cycle_types(degree)
        self.values = {ct: Fraction(values.get(ct, 0)) for ct in cts}
        extra = set(values) - set(cts)
        if extra:
            raise InvalidArgs(f"cycle types of wrong weight: {extra}")

    def __call__(self, rho: Partition) -> Fraction:
        return self.values[rho]

    @property
    def dimension(self) -> Fraction:
        return self.values[identity_type(self.degree)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.degree == other.degree
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.values.items()))))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(
            self.degree, {ct: v + other.values[ct] for ct, v in self.values.items()}
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(
            self.degree, {ct: v - other.values[ct] for ct, v in self.values.items()}
        )

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        """Pointwise product = character of the (inner) tensor product."""
        self._check(other)
        return ClassFunction(
            self.degree, {ct: v * other.values[ct] for ct, v in self.values.items()}
        )

    def scale(self, c) -> "ClassFunction":
        c = Fraction(c)
        return ClassFunction(self.degree, {ct: c * v for ct, v in self.values.items()})

    def sign_twist(self) -> "ClassFunction":
        return ClassFunction(
            self.degree,
            {ct: sign_of_class(ct) * v for ct, v in self.values.items()},
        )

    def _check(self, other: "ClassFunction"):
        if self.degree != other.degree:
            raise InvalidArgs(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )

    def __repr__(self) -> str:
        vals = ", ".join(f"{ct}:{v}" for ct, v in self.values.items())
        return f"ClassFunction(S_{self.degree}; {vals})"


class BiClassFunction:
    """A rational-valued function on conjugacy classes of Sigma_p x Sigma_q."""

    __slots__ = ("degrees", "values")

    def __init__(
        self,
        degrees: tuple[int, int],
        values: Mapping[tuple[Partition, Partition], Fraction | int],
    ):
        self.degrees = degrees
        p, q = degrees
        pairs = [(a, b) for a in cycle_types(p) for b in cycle_types(q)]
        self.values = {pr: Fraction(values.get(pr, 0)) for pr in pairs}
        extra = set(values) - set(pairs)
        if extra:
            raise InvalidArgs(f"class pairs of wrong weight: {extra}")

    def __call__(self, sigma: Partition, tau: Partition) -> Fraction:
        return self.values[(sigma, tau)]

    @property
    def dimension(self) -> Fraction:
        p, q = self.degrees
        return self.values[(identity_type(p), identity_type(q))]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiClassFunction)
            and self.degrees == other.degrees
            and self.values == other.values
        )

    def __add__(self, other: "BiClassFunction") -> "BiClassFunction":
        assert self.degrees == other.degrees
        return BiClassFunction(
            self.degrees, {k: v + other.values[k] for k, v in self.values.items()}
        )

    def __sub__(self, other: "BiClassFunction") -> "BiClassFunction":
        assert self.degrees == other.degrees
        return BiClassFunction(
            self.degrees, {k: v - other.values[k] for k, v in self.values.items()}
        )

    def sign_twist_first(self) -> "BiClassFunction":
        """Multiply by the sign of the Sigma_p component."""
        return BiClassFunction(
            self.degrees,
            {
                (s, t): sign_of_class(s) * v
                for (s, t), v in self.values.items()
            },
        )

    def __repr__(self) -> str:
        p, q = self.degrees
        return f"BiClassFunction(S_{p} x S_{q})"


def external_product(a: ClassFunction, b: ClassFunction) -> BiClassFunction:
    return BiClassFunction(
        (a.degree, b.degree),
        {
            (s, t): a.values[s] * b.values[t]
            for s in cycle_types(a.degree)
            for t in cycle_types(b.degree)
        },
    )


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    k = len(lam)
    beta = tuple(lam[i] + (k - 1 - i) for i in range(k))
    total = 0
    bset = set(beta)
    for f in beta:
        g = f - r
        if g < 0 or g in bset:
            continue
        height = sum(1 for x in beta if g < x < f)
        nb = sorted((x if x != f else g) for x in beta)
        nb.reverse()
        new_lam = tuple(
            nb[i] - (k - 1 - i) for i in range(k)
        )
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def irreducible_character(lam: Partition) -> ClassFunction:
    """The character of the Specht module indexed by lam."""
    r = lam.weight
    vals = {}
    for rho in cycle_types(r):
        # Largest-parts-first recursion keeps the memo small.
        vals[rho] = _mn(lam.parts, tuple(sorted(rho.parts, reverse=True)))
    return ClassFunction(r, vals)


def trivial_character(r: int) -> ClassFunction:
    return ClassFunction(r, {ct: 1 for ct in cycle_types(r)})


def sign_character(r: int) -> ClassFunction:
    return ClassFunction(r, {ct: sign_of_class(ct) for ct in cycle_types(r)})


# ---------------------------------------------------------------------------
# Inner products and decomposition


def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    if a.degree != b.degree:
        raise InvalidArgs(f"degree mismatch: {a.degree} vs {b.degree}")
    r = a.degree
    total = sum(
        class_size(rho) * a.values[rho] * b.values[rho] for rho in cycle_types(r)
    )
    return Fraction(total, factorial(r))


def inner_product_bi(a: BiClassFunction, b: BiClassFunction) -> Fraction:
    if a.degrees != b.degrees:
        raise InvalidArgs(f"degrees mismatch: {a.degrees} vs {b.degrees}")
    p, q = a.degrees
    total = sum(
        class_size(s) * class_size(t) * a.values[(s, t)] * b.values[(s, t)]
        for s in cycle_types(p)
        for t in cycle_types(q)
    )
    return Fraction(total, factorial(p) * factorial(q))


class IrredDecomposition:
    """Multiset of irreducible constituents with multiplicities.

    Keys are either Partition (single symmetric group) or pairs of
    Partitions (a product group).  Keys are reported in canonical order
    (reverse lexicographic, componentwise for pairs)."""

    __slots__ = ("mults",)

    def __init__(self, mults: Mapping):
        self.mults = {k: v for k, v in mults.items() if v != 0}

    def __getitem__(self, key):
        return self.mults.get(key, 0)

    def __len__(self):
        return len(self.mults)

    def __eq__(self, other):
        return isinstance(other, IrredDecomposition) and self.mults == other.mults

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list:
        def sortkey(k):
            if isinstance(k, Partition):
                return (tuple(-x for x in k.parts),)
            return tuple(tuple(-x for x in part.parts) for part in k)

        return sorted(self.mults.items(), key=lambda kv: sortkey(kv[0]))

    def total_dimension(self) -> int:
        dim = 0
        for k, m in self.mults.items():
            if isinstance(k, Partition):
                dim += m * specht_dimension(k)
            else:
                dim += m * prod(specht_dimension(part) for part in k)
        return dim

    def to_json(self) -> list[dict]:
        out = []
        for k, m in self.items():
            if isinstance(k, Partition):
                out.append({"key": str(k), "multiplicity": m})
            else:
                out.append({"key": [str(part) for part in k], "multiplicity": m})
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> "IrredDecomposition":
        mults = {}
        for entry in data:
            key = entry["key"]
            if isinstance(key, str):
                k = Partition.parse(key)
            else:
                k = tuple(Partition.parse(x) for x in key)
            mults[k] = entry["multiplicity"]
        return cls(mults)

    def __repr__(self):
        body = ", ".join(f"{k}: {m}" for k, m in self.items())
        return "{" + body + "}"


def reconstruct(dec: IrredDecomposition, degrees) -> ClassFunction | BiClassFunction:
    """Character with the given decomposition; inverse of ``decompose``."""
    if isinstance(degrees, int):
        out = ClassFunction(degrees, {})
        for k, m in dec.mults.items():
            out = out + irreducible_character(k).scale(m)
        return out
    p, q = degrees
    out = BiClassFunction((p, q), {})
    for (lam, mu), m in dec.mults.items():
        out = out + BiClassFunction(
            (p, q),
            {
                k: v * m
                for k, v in external_product(
                    irreducible_character(lam), irreducible_character(mu)
                ).values.items()
            },
        )
    return out


def decompose(
    f: ClassFunction | BiClassFunction, virtual: bool = False
) -> IrredDecomposition:
    """Multiplicities of f against the irreducible characters.

    With virtual=False (the default) f is asserted to be a genuine
    character: any negative or non-integral multiplicity raises.  With
    virtual=True, signed integer multiplicities are returned."""
    mults: dict = {}
    if isinstance(f, ClassFunction):
        for lam in enumerate_partitions(f.degree):
            m = inner_product(f, irreducible_character(lam))
            _store(mults, lam, m, virtual)
    else:
        p, q = f.degrees
        for lam in enumerate_partitions(p):
            chl = irreducible_character(lam)
            for mu in enumerate_partitions(q):
                chm = irreducible_character(mu)
                m = inner_product_bi(f, external_product(chl, chm))
                _store(mults, (lam, mu), m, virtual)
    return IrredDecomposition(mults)


def _store(mults: dict, key, m: Fraction, virtual: bool):
    if m.denominator != 1:
        raise NonIntegralMultiplicity(f"multiplicity {m} at {key}")
    m = int(m)
    if m < 0 and not virtual:
        raise NegativeMultiplicity(f"multiplicity {m} at {key}")
    if m:
        mults[key] = m


# ---------------------------------------------------------------------------
# Induction and restriction


def induce(f: BiClassFunction, q: int) -> ClassFunction:
    """Induce a class function on Sigma_i x Sigma_{q-i} up to Sigma_q,
    by the cycle-type splitting formula."""
    i, j = f.degrees
    if i + j != q:
        raise InvalidArgs(f"degrees {f.degrees} do not sum to {q}")
    vals = {}
    for rho in cycle_types(q):
        z = centralizer_order(rho)
        total = Fraction(0)
        for r1, r2 in splittings(rho, i):
            total += (
                Fraction(z, centralizer_order(r1) * centralizer_order(r2))
                * f.values[(r1, r2)]
            )
        vals[rho] = total
    return ClassFunction(q, vals)


def restrict(f: ClassFunction, i: int, j: int) -> BiClassFunction:
    """Restrict a class function on Sigma_{i+j} to Sigma_i x Sigma_j."""
    if f.degree != i + j:
        raise InvalidArgs(f"cannot restrict degree {f.degree} to ({i},{j})")
    return BiClassFunction(
        (i, j),
        {
            (a, b): f.values[merge_types(a, b)]
            for a in cycle_types(i)
            for b in cycle_types(j)
        },
    )


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule and skew Schur decomposition


def lr_tableaux_count(shape: SkewShape, content: Partition) -> int:
    """Number of Littlewood-Richardson tableaux: semistandard fillings of
    the skew shape with the given content whose reverse reading word is a
    lattice word."""
    cells = sorted(shape.cells(), key=lambda c: (c[0], -c[1]))
    n = len(content)
    if shape.size != content.weight:
        return 0

    filling: dict[tuple[int, int], int] = {}

    def ok(i: int, j: int, v: int, counts: list[int]) -> bool:
        # Semistandard: rows weakly increase, columns strictly increase.
        # Cells are visited right-to-left within a row, top to bottom, so
        # the right and upper neighbours are already filled.
        if (i, j + 1) in filling and v > filling[(i, j + 1)]:
            return False
        if (i - 1, j) in filling and filling[(i - 1, j)] >= v:
            return False
        if counts[v] + 1 > content[v]:
            return False
        # Lattice condition on the reverse reading word, which is read in
        # exactly our cell order.
        if v > 0 and counts[v] + 1 > counts[v - 1]:
            return False
        return True

    def rec(idx: int, counts: list[int]) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(n):
            if ok(i, j, v, counts):
                filling[(i, j)] = v
                counts[v] += 1
                total += rec(idx + 1, counts)
                counts[v] -= 1
                del filling[(i, j)]
        return total

    return rec(0, [0] * n)


@lru_cache(maxsize=None)
def _lr(lam: tuple, mu: tuple, nu: tuple) -> int:
    lamP, muP, nuP = Partition(lam), Partition(mu), Partition(nu)
    if not lamP.contains(muP) or muP.weight + nuP.weight != lamP.weight:
        return 0
    return lr_tableaux_count(SkewShape(lamP, muP), nuP)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}."""
    return _lr(lam.parts, mu.parts, nu.parts)


def skew_schur_decompose(shape: SkewShape) -> IrredDecomposition:
    """Decomposition of the skew Schur functor into Schur functors with
    Littlewood-Richardson multiplicities."""
    mults = {}
    for nu in enumerate_partitions(shape.size):
        c = lr_coefficient(shape.outer, shape.inner, nu)
        if c:
            mults[nu] = c
    return IrredDecomposition(mults)


# ---------------------------------------------------------------------------
# Kostka numbers (used by the weight-space decompositions downstream)


@lru_cache(maxsize=None)
def kostka(lam: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape lam and the given content,
    computed by peeling horizontal strips from the top entry down."""
    if sum(lam) != sum(content):
        return 0
    if not content:
        return 1 if not lam else 0
    last = content[-1]
    rest = content[:-1]
    total = 0
    for mu in _horizontal_strip_removals(lam, last):
        total += kostka(mu, rest)
    return total


def _horizontal_strip_removals(
    lam: tuple[int, ...], size: int
) -> list[tuple[int, ...]]:
    """All partitions mu ⊆ lam with lam/mu a horizontal strip of the given
    size (at most one removed cell per column)."""
    out = []
    k = len(lam)

    def rec(i: int, left: int, rows: list[int]):
        if i == k:
            if left == 0:
                out.append(tuple(x for x in rows if x))
            return
        lower = lam[i + 1] if i + 1 < k else 0
        # Row i of mu must satisfy lower bound lam[i+1] (mu a partition and
        # strip horizontal) and mu[i] <= lam[i]; also mu[i] >= lam[i+1]
        # guarantees no two removed cells share a column.
        hi = min(lam[i], (rows[-1] if rows else lam[i]))
        for v in range(hi, lower - 1, -1):
            removed = lam[i] - v
            if removed > left:
                continue
            rows.append(v)
            rec(i + 1, left - removed, rows)
            rows.pop()

    rec(0, size, [])
    return out


# ---------------------------------------------------------------------------
# Graded symmetric-algebra dimensions


def sym_dimension(d: int, i: int) -> int:
    """dim Sym^i(Q^d)."""
    if d == 0:
        return 1 if i == 0 else 0
    return comb(d + i - 1, i)


def series_mul(a: list[int], b: list[int], trunc: int) -> list[int]:
    out = [0] * (trunc + 1)
    for i, x in enumerate(a):
        if x == 0 or i > trunc:
            continue
        for j, y in enumerate(b):
            if i + j > trunc:
                break
            out[i + j] += x * y
    return out


def series_geom_power(step: int, mult: int, trunc: int) -> list[int]:
    """Truncated series of (1 - u^step)^(-mult)."""
    out = [0] * (trunc + 1)
    for k in range(0, trunc // step + 1):
        out[k * step] = comb(mult + k - 1, k)
    return out


def graded_sym_algebra_series(d: int, q: int, trunc: int) -> list[int]:
    """Truncated series (in u = t^2) of
    Sym( q linear d-dim summands  +  Sym^{i>=1}(Q^d) summands )."""
    out = [0] * (trunc + 1)
    out[0] = 1
    if q * d:
        out = series_mul(out, series_geom_power(1, q * d, trunc), trunc)
    for i in range(1, trunc + 1):
        out = series_mul(out, series_geom_power(i, sym_dimension(d, i), trunc), trunc)
    return out


def graded_sym_algebra_dimension(d: int, q: int, p: int) -> int:
    """Coefficient of t^{2p} in the graded dimension series of
    Sym(V[2]^{⊕q} ⊕ Sym^{>0}(V[2])) with dim V = d.  All generators sit in
    even degrees, so no signs enter."""
    if p < 0:
        return 0
    return graded_sym_algebra_series(d, q, p)[p]
