"""Explicit finite-dimensional rational modules with exact matrix actions.

This is the brute-force oracle layer: Specht modules as left ideals cut out
by Young symmetrizers, Schur functors as symmetrizer images on tensor space,
weight-space decomposition of polynomial gl_d actions, and the dimension /
trace verifications for Cauchy's lemma, Schur-Weyl duality and the split
extension filtration.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .errors import (
    InvalidArgs,
    NonPolynomialAction,
    OracleDisagreement,
    SizeBudgetExceeded,
)
from .linalg import ExactMatrix
from .characters import (
    cycle_types,
    irreducible_character,
    kostka,
    sym_dimension,
)
from .partitions import (
    Partition,
    enumerate_partitions,
    schur_gl_dimension,
    specht_dimension,
    transpose,
)

DEFAULT_BUDGET = 20000


def check_budget(needed: int, budget: int | None, what: str = "ambient dimension"):
    cap = DEFAULT_BUDGET if budget is None else budget
    if needed > cap:
        raise SizeBudgetExceeded(needed, cap, what)


# ---------------------------------------------------------------------------
# Permutations (tuples of images, 0-indexed)

Perm = tuple[int, ...]


def perm_identity(r: int) -> Perm:
    return tuple(range(r))


def perm_compose(a: Perm, b: Perm) -> Perm:
    """(a b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(a)))


def perm_inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def perm_sign(a: Perm) -> int:
    seen = [False] * len(a)
    sign = 1
    for i in range(len(a)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            ln += 1
        sign *= (-1) ** (ln - 1)
    return sign


def perm_cycle_type(a: Perm) -> Partition:
    seen = [False] * len(a)
    lens = []
    for i in range(len(a)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            ln += 1
        lens.append(ln)
    return Partition(sorted(lens, reverse=True))


def class_representative(rho: Partition) -> Perm:
    """A permutation with the given cycle type: consecutive cycles."""
    img = []
    start = 0
    for ln in rho:
        img += list(range(start + 1, start + ln)) + [start]
        start += ln
    return tuple(img)


def all_perms(r: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(r))]


def perms_of_blocks(blocks: list[list[int]], r: int) -> list[Perm]:
    """All permutations of {0..r-1} permuting each block within itself."""
    out = []
    for combo in itertools.product(
        *[itertools.permutations(b) for b in blocks]
    ):
        img = list(range(r))
        for block, perm in zip(blocks, combo):
            for src, dst in zip(block, perm):
                img[src] = dst
        out.append(tuple(img))
    return out


def young_symmetrizer(lam: Partition) -> list[tuple[int, Perm]]:
    """The group-algebra element a_lam * b_lam for the canonical tableau
    (fill the diagram with 0..r-1 row by row), as (coefficient, perm) terms."""
    r = lam.weight
    rows: list[list[int]] = []
    k = 0
    for ln in lam:
        rows.append(list(range(k, k + ln)))
        k += ln
    cols: list[list[int]] = []
    width = lam[0] if lam.length else 0
    for j in range(width):
        cols.append([rows[i][j] for i in range(lam.length) if lam[i] > j])
    terms: Counter = Counter()
    for p in perms_of_blocks(rows, r):
        for q in perms_of_blocks(cols, r):
            terms[perm_compose(p, q)] += perm_sign(q)
    return [(c, g) for g, c in terms.items() if c]


# ---------------------------------------------------------------------------
# ExplicitModule


@dataclass
class ExplicitModule:
    """A finite-dimensional rational vector space with exact generator
    actions.  sym_generators are the adjacent transpositions s_1..s_{r-1}
    when a symmetric-group action is present; gl_generators map (a, b) to
    the action of the elementary matrix E_{ab} when a polynomial gl_d
    action is present."""

    dimension: int
    sym_generators: list[ExactMatrix] = field(default_factory=list)
    gl_generators: dict[tuple[int, int], ExactMatrix] = field(default_factory=dict)
    grading: int | None = None
    weights: list[tuple[int, ...]] | None = None  # per-basis torus weights

    def sym_action(self, g: Perm) -> ExactMatrix:
        """Matrix of an arbitrary permutation, composed from the adjacent
        transposition generators along a bubble-sort word."""
        m = ExactMatrix.identity(self.dimension)
        word = _transposition_word(g)
        for i in word:
            m = self.sym_generators[i] @ m
        return m

    def check_coxeter_relations(self) -> bool:
        gens = self.sym_generators
        eye = ExactMatrix.identity(self.dimension)
        for i, s in enumerate(gens):
            if s @ s != eye:
                return False
            if i + 1 < len(gens):
                lhs = s @ gens[i + 1] @ s
                rhs = gens[i + 1] @ s @ gens[i + 1]
                if lhs != rhs:
                    return False
            for j in range(i + 2, len(gens)):
                if s @ gens[j] != gens[j] @ s:
                    return False
        return True

    def check_gl_relations(self) -> bool:
        """[E_ab, E_cd] = delta_bc E_ad - delta_da E_cb."""
        E = self.gl_generators
        keys = sorted(E)
        zero = ExactMatrix.zero(self.dimension, self.dimension)
        for (a, b) in keys:
            for (c, d) in keys:
                comm = E[(a, b)] @ E[(c, d)] - E[(c, d)] @ E[(a, b)]
                want = zero
                if b == c:
                    want = want + E[(a, d)]
                if d == a:
                    want = want - E[(c, b)]
                if comm != want:
                    return False
        return True

    def check_actions_commute(self) -> bool:
        for s in self.sym_generators:
            for e in self.gl_generators.values():
                if s @ e != e @ s:
                    return False
        return True


def _transposition_word(g: Perm) -> list[int]:
    """Indices i such that g = s_{i1} ... s_{ik} (adjacent transpositions,
    s_i swapping positions i and i+1)."""
    arr = list(g)
    word: list[int] = []
    # Sort arr back to identity with adjacent swaps, recording them.
    for i in range(len(arr)):
        for j in range(len(arr) - 1, i, -1):
            if arr[j - 1] > arr[j]:
                arr[j - 1], arr[j] = arr[j], arr[j - 1]
                word.append(j - 1)
    # Each swap right-multiplies by the transposition, so sorting gives
    # g s_{i1} ... s_{ik} = id, i.e. g = s_{ik} ... s_{i1}; applying the
    # generator matrices left-to-right over the recorded word composes
    # them in exactly that order.
    return word


# ---------------------------------------------------------------------------
# Tensor powers


def _tensor_basis(d: int, r: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(d), repeat=r))


def perm_on_index(g: Perm, J: tuple[int, ...]) -> tuple[int, ...]:
    """g moves the tensor factor in slot i to slot g(i)."""
    out = [0] * len(J)
    for i, v in enumerate(J):
        out[g[i]] = v
    return tuple(out)


def tensor_power_module(d: int, r: int, budget: int | None = None) -> ExplicitModule:
    """V^{⊗r} for V = Q^d, with Sigma_r permuting factors and gl_d acting
    by derivations."""
    if d < 1 or r < 0:
        raise InvalidArgs(f"bad tensor power parameters d={d}, r={r}")
    dim = d**r
    check_budget(dim, budget)
    basis = _tensor_basis(d, r)
    index = {J: i for i, J in enumerate(basis)}

    sym = []
    for i in range(r - 1):
        g = list(range(r))
        g[i], g[i + 1] = g[i + 1], g[i]
        m = ExactMatrix.zero(dim, dim)
        for J, col in index.items():
            m.data[index[perm_on_index(tuple(g), J)]][col] = Fraction(1)
        sym.append(m)

    gl = {}
    for a in range(d):
        for b in range(d):
            m = ExactMatrix.zero(dim, dim)
            for J, col in index.items():
                for t, v in enumerate(J):
                    if v == b:
                        J2 = J[:t] + (a,) + J[t + 1 :]
                        m.data[index[J2]][col] += 1
            gl[(a, b)] = m

    weights = [_weight_of_index(J, d) for J in basis]
    return ExplicitModule(
        dimension=dim,
        sym_generators=sym,
        gl_generators=gl,
        grading=r,
        weights=weights,
    )


def _weight_of_index(J: tuple[int, ...], d: int) -> tuple[int, ...]:
    w = [0] * d
    for v in J:
        w[v] += 1
    return tuple(w)


# ---------------------------------------------------------------------------
# Specht modules


def specht_module(lam: Partition, budget: int | None = None) -> ExplicitModule:
    """The left ideal Q[Sigma_r] c_lam, with Sigma_r acting by left
    multiplication."""
    r = lam.weight
    check_budget(factorial(r), budget, "group algebra dimension")
    perms = all_perms(r)
    index = {g: i for i, g in enumerate(perms)}
    n = len(perms)
    c = young_symmetrizer(lam)

    # Right multiplication by c: e_g -> sum coeff e_{g h}.
    rmul = ExactMatrix.zero(n, n)
    for g, col in index.items():
        for coeff, h in c:
            rmul.data[index[perm_compose(g, h)]][col] += coeff

    pivots = rmul.pivot_columns()
    bcols = [rmul.column(j) for j in pivots]
    dim = len(bcols)
    assert dim == specht_dimension(lam), (lam, dim)
    B = ExactMatrix.from_columns(bcols) if dim else ExactMatrix.zero(n, 0)

    sym = []
    for i in range(r - 1):
        g = list(range(r))
        g[i], g[i + 1] = g[i + 1], g[i]
        g = tuple(g)
        # Left multiplication by the transposition, expressed on the ideal.
        imgs = []
        for col in bcols:
            img = [Fraction(0)] * n
            for row, v in enumerate(col):
                if v:
                    img[index[perm_compose(g, perms[row])]] += v
            imgs.append(img)
        sols = B.solve_many(imgs)
        assert all(s is not None for s in sols)
        sym.append(ExactMatrix.from_columns(sols))
    return ExplicitModule(dimension=dim, sym_generators=sym)


def specht_character_traces(lam: Partition, budget: int | None = None) -> dict[Partition, Fraction]:
    """Traces of class representatives acting on the explicitly constructed
    Specht module; the independent oracle against Murnaghan-Nakayama.

    Uses the idempotent trick: with c^2 = (r!/f) c, the trace of g on the
    ideal equals (f/r!) tr(L_g R_c) on the whole group algebra."""
    r = lam.weight
    check_budget(factorial(r), budget, "group algebra dimension")
    f = specht_dimension(lam)
    c = young_symmetrizer(lam)
    perms = all_perms(r)
    out = {}
    for rho in cycle_types(r):
        g = class_representative(rho)
        ginv = perm_inverse(g)
        # tr(L_g R_c) = sum over x, (coeff, h) with g x h = x.
        total = 0
        for coeff, h in c:
            for x in perms:
                if perm_compose(perm_compose(g, x), h) == x:
                    total += coeff
        out[rho] = Fraction(f * total, factorial(r))
    return out


# ---------------------------------------------------------------------------
# Schur functors on tensor space


def schur_apply(lam: Partition, d: int, budget: int | None = None) -> ExplicitModule:
    """S_lam(Q^d) realized as the image of the Young symmetrizer on
    (Q^d)^{⊗r}; carries the restricted gl_d action."""
    r = lam.weight
    dim_amb = d**r
    check_budget(dim_amb, budget)
    basis = _tensor_basis(d, r)
    index = {J: i for i, J in enumerate(basis)}
    c = young_symmetrizer(lam)

    cols = []
    for J in basis:
        col = [Fraction(0)] * dim_amb
        for coeff, g in c:
            col[index[perm_on_index(g, J)]] += coeff
        cols.append(col)
    M = ExactMatrix.from_columns(cols)
    pivots = M.pivot_columns()
    bcols = [M.column(j) for j in pivots]
    dim = len(bcols)
    assert dim == schur_gl_dimension(lam, d), (lam, d, dim)
    if dim == 0:
        return ExplicitModule(dimension=0, grading=r, weights=[])
    B = ExactMatrix.from_columns(bcols)
    weights = [_weight_of_index(basis[j], d) for j in pivots]

    gl = {}
    for a in range(d):
        for b in range(d):
            imgs = []
            for col in bcols:
                img = [Fraction(0)] * dim_amb
                for row, v in enumerate(col):
                    if v:
                        J = basis[row]
                        for t, x in enumerate(J):
                            if x == b:
                                img[index[J[:t] + (a,) + J[t + 1 :]]] += v
                imgs.append(img)
            sols = B.solve_many(imgs)
            assert all(s is not None for s in sols)
            gl[(a, b)] = ExactMatrix.from_columns(sols)
    return ExplicitModule(dimension=dim, gl_generators=gl, grading=r, weights=weights)


# ---------------------------------------------------------------------------
# Weight-space decomposition


def module_weight_multiset(m: ExplicitModule) -> Counter:
    """Multiset of torus weights of a polynomial gl_d module."""
    if m.dimension == 0:
        return Counter()
    d = max(k[0] for k in m.gl_generators) + 1 if m.gl_generators else 0
    if d == 0:
        raise InvalidArgs("module carries no gl action")
    diag = [m.gl_generators[(a, a)] for a in range(d)]
    if all(_is_diagonal(t) for t in diag):
        weights = []
        for i in range(m.dimension):
            w = tuple(int(t.data[i][i]) for t in diag)
            if any(t.data[i][i] != w[a] for a, t in enumerate(diag)):
                raise NonPolynomialAction("non-integral torus eigenvalue")
            weights.append(w)
        cnt = Counter(weights)
    else:
        cnt = _weight_multiset_by_kernels(m, diag, d)
    for w in cnt:
        if any(x < 0 for x in w):
            raise NonPolynomialAction(f"negative weight {w}")
    return cnt


def _is_diagonal(m: ExactMatrix) -> bool:
    return all(
        m.data[i][j] == 0
        for i in range(m.rows)
        for j in range(m.cols)
        if i != j
    )


def _weight_multiset_by_kernels(m: ExplicitModule, diag, d: int) -> Counter:
    deg = m.grading
    if deg is None:
        td = sum(t.trace() for t in diag)
        if td.denominator != 1 or int(td) % m.dimension:
            raise NonPolynomialAction("cannot infer a uniform total degree")
        deg = int(td) // m.dimension
    cnt: Counter = Counter()
    found = 0
    for w in itertools.product(range(deg + 1), repeat=d):
        if sum(w) != deg:
            continue
        stacked = []
        for a in range(d):
            shifted = diag[a] - ExactMatrix.identity(m.dimension).scale(w[a])
            stacked.extend(shifted.data)
        k = m.dimension - ExactMatrix(stacked).rank()
        if k:
            cnt[w] = k
            found += k
    if found != m.dimension:
        raise NonPolynomialAction(
            f"weight spaces cover {found} of {m.dimension} dimensions"
        )
    return cnt


def decompose_weight_multiset(cnt: Counter, d: int):
    """Greedy subtraction of Schur weight multisets (Kostka vectors) from a
    symmetric weight multiset; returns {Partition: multiplicity} with signed
    multiplicities allowed (virtual input)."""
    from .characters import IrredDecomposition

    rem = {w: int(c) for w, c in cnt.items() if c}
    mults: dict[Partition, int] = {}
    while rem:
        top = max(rem)
        if list(top) != sorted(top, reverse=True):
            raise OracleDisagreement(
                f"lex-maximal weight {top} is not dominant; multiset not "
                "a virtual polynomial character"
            )
        lam = Partition(top)
        mult = rem[top]
        mults[lam] = mults.get(lam, 0) + mult
        n = lam.weight
        for w in itertools.product(range(n + 1), repeat=d):
            if sum(w) != n:
                continue
            k = kostka(lam.parts, w)
            if k:
                nv = rem.get(w, 0) - mult * k
                if nv:
                    rem[w] = nv
                else:
                    rem.pop(w, None)
    return IrredDecomposition(mults)


def gl_decompose(m: ExplicitModule):
    """Decompose a polynomial gl_d module into Schur functors by torus
    weight enumeration and greedy Kostka subtraction."""
    from .characters import IrredDecomposition

    if m.dimension == 0:
        return IrredDecomposition({})
    if not m.gl_generators:
        if m.grading in (None, 0):
            return IrredDecomposition({Partition(()): m.dimension})
        raise InvalidArgs("module carries no gl action")
    d = max(k[0] for k in m.gl_generators) + 1
    cnt = module_weight_multiset(m)
    dec = decompose_weight_multiset(cnt, d)
    # Consistency: dimensions and reconstructed weights must match exactly.
    dim = sum(mult * schur_gl_dimension(lam, d) for lam, mult in dec.mults.items())
    if dim != m.dimension:
        raise OracleDisagreement(f"dimension mismatch {dim} != {m.dimension}")
    return dec


# ---------------------------------------------------------------------------
# Verification reports


@dataclass
class Report:
    claim: str
    left: object
    right: object
    passed: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "left": _jsonable(self.left),
            "right": _jsonable(self.right),
            "pass": self.passed,
            "witnesses": _jsonable(self.witnesses),
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, Partition):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def verify_cauchy(r: int, dV: int, dW: int, budget: int | None = None) -> Report:
    """Lambda^r(V ⊗ W) vs the sum of S_lam(V) ⊗ S_{lam^T}(W): dimensions
    and full bi-weight multisets."""
    check_budget(comb(dV * dW, r) if r <= dV * dW else 0, budget)
    left_dim = comb(dV * dW, r) if r <= dV * dW else 0
    right_dim = sum(
        schur_gl_dimension(lam, dV) * schur_gl_dimension(transpose(lam), dW)
        for lam in enumerate_partitions(r)
    )

    left_weights: Counter = Counter()
    pairs = list(itertools.product(range(dV), range(dW)))
    for sub in itertools.combinations(pairs, r):
        wv = [0] * dV
        ww = [0] * dW
        for (i, j) in sub:
            wv[i] += 1
            ww[j] += 1
        left_weights[(tuple(wv), tuple(ww))] += 1

    right_weights: Counter = Counter()
    for lam in enumerate_partitions(r):
        lv = _schur_weight_counter(lam, dV)
        lw = _schur_weight_counter(transpose(lam), dW)
        for wv, cv in lv.items():
            for ww, cw in lw.items():
                right_weights[(wv, ww)] += cv * cw

    passed = left_dim == right_dim and left_weights == right_weights
    return Report(
        claim=f"exterior power of tensor product splits, r={r}, dims=({dV},{dW})",
        left=left_dim,
        right=right_dim,
        passed=passed,
        witnesses={
            "weight_multisets_equal": left_weights == right_weights,
            "num_weights": len(left_weights),
        },
    )


def _schur_weight_counter(lam: Partition, d: int) -> Counter:
    n = lam.weight
    out: Counter = Counter()
    for w in itertools.product(range(n + 1), repeat=d):
        if sum(w) != n:
            continue
        k = kostka(lam.parts, w)
        if k:
            out[w] = k
    return out


def verify_schur_weyl(r: int, d: int, budget: int | None = None) -> Report:
    """V^{⊗r} vs the sum of S_lam(V) ⊠ S^lam: for every cycle type the
    weight-graded trace of a permutation matches the character-side sum,
    as exact polynomials in the torus variables."""
    check_budget(d**r, budget)
    chars = {lam: irreducible_character(lam) for lam in enumerate_partitions(r)}
    weightgens = {lam: _schur_weight_counter(lam, d) for lam in chars}

    all_ok = True
    per_class = {}
    for rho in cycle_types(r):
        # Trace of (permutation with type rho) o diag(x) on V^{⊗r}: fixed
        # tensor indices are constant on cycles, contributing x^{weight}.
        lhs: Counter = Counter()
        for assign in itertools.product(range(d), repeat=rho.length):
            w = [0] * d
            for ln, v in zip(rho, assign):
                w[v] += ln
            lhs[tuple(w)] += 1
        rhs: Counter = Counter()
        for lam, ch in chars.items():
            cv = ch.values[rho]
            if cv:
                for w, k in weightgens[lam].items():
                    rhs[w] += cv * k
        rhs = Counter({w: c for w, c in rhs.items() if c})
        ok = lhs == rhs
        per_class[str(rho)] = ok
        all_ok = all_ok and ok

    dims_ok = d**r == sum(
        schur_gl_dimension(lam, d) * specht_dimension(lam) for lam in chars
    )
    recovered = {
        lam: 1
        for lam in chars
        if schur_gl_dimension(lam, d) > 0
    }
    return Report(
        claim=f"tensor power decomposes under commuting actions, r={r}, d={d}",
        left=d**r,
        right=sum(
            schur_gl_dimension(lam, d) * specht_dimension(lam) for lam in chars
        ),
        passed=all_ok and dims_ok,
        witnesses={
            "trace_identity_by_class": per_class,
            "constituents": {str(lam): m for lam, m in recovered.items()},
        },
    )


def split_extension_filtration_check(
    lam: Partition, dA: int, dC: int, budget: int | None = None
) -> Report:
    """Dimension shadows of the Schur-functor filtration for a split
    extension with sub of dimension dA and quotient of dimension dC:

    (i)  dim S_lam(Q^{dA+dC}) = sum over mu ⊆ lam of
         dim S_{lam/mu}(Q^{dA}) * dim S_mu(Q^{dC});
    (ii) dim S_lam(Q^{dA}) = alternating sum over mu ⊆ lam of
         dim S_{lam/mu}(Q^{dA+dC}) * dim S_{mu^T}(Q^{dC})."""
    from .characters import lr_coefficient

    def skew_dim(outer: Partition, inner: Partition, d: int) -> int:
        return sum(
            lr_coefficient(outer, inner, nu) * schur_gl_dimension(nu, d)
            for nu in enumerate_partitions(outer.weight - inner.weight)
        )

    subs = [
        mu
        for k in range(lam.weight + 1)
        for mu in enumerate_partitions(k)
        if lam.contains(mu)
    ]
    lhs_i = schur_gl_dimension(lam, dA + dC)
    rhs_i = sum(
        skew_dim(lam, mu, dA) * schur_gl_dimension(mu, dC) for mu in subs
    )
    lhs_ii = schur_gl_dimension(lam, dA)
    rhs_ii = sum(
        (-1) ** mu.weight
        * skew_dim(lam, mu, dA + dC)
        * schur_gl_dimension(transpose(mu), dC)
        for mu in subs
    )
    passed = lhs_i == rhs_i and lhs_ii == rhs_ii
    return Report(
        claim=f"split extension filtration shadow, lam={lam}, dA={dA}, dC={dC}",
        left={"filtration": lhs_i, "euler": lhs_ii},
        right={"filtration": rhs_i, "euler": rhs_ii},
        passed=passed,
        witnesses={"num_subdiagrams": len(subs)},
    )
