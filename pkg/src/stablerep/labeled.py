"""Labeled set partitions, the receiving symmetric algebra F_W(V), the
equivariant maps attached to each labeled partition, and brute-force
verification that stacking those maps gives an isomorphism onto the
GL-equivariant Hom space (with its product-group character).

Label encoding: 0 is the unlabeled marker (rendered as *), 1..q are the
distinguishable labels.  Set partitions are canonicalized with parts sorted
by minimum element, so enumeration is duplicate-free and values hash.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidArgs, OracleDisagreement
from .linalg import ExactMatrix, sparse_rank, sparse_nullity_witness
from .characters import (
    BiClassFunction,
    cycle_types,
    induce,
    irreducible_character,
    sym_dimension,
)
from .modules import (
    Perm,
    Report,
    check_budget,
    class_representative,
)
from .partitions import Partition, enumerate_partitions, specht_dimension

UNLABELED = 0

Part = tuple[int, ...]
SetPartition = tuple[Part, ...]


def canonical_set_partition(parts) -> SetPartition:
    ps = tuple(sorted((tuple(sorted(p)) for p in parts), key=lambda p: p[0]))
    seen = [x for p in ps for x in p]
    if sorted(seen) != list(range(len(seen))):
        raise InvalidArgs(f"not a partition of an initial segment: {parts}")
    return ps


@lru_cache(maxsize=None)
def set_partitions(p: int) -> tuple[SetPartition, ...]:
    """All set partitions of {0..p-1}, parts sorted by minimum."""
    if p == 0:
        return ((),)
    out = []
    for smaller in set_partitions(p - 1):
        x = p - 1
        for i in range(len(smaller)):
            out.append(
                canonical_set_partition(
                    smaller[:i] + (smaller[i] + (x,),) + smaller[i + 1 :]
                )
            )
        out.append(canonical_set_partition(smaller + ((x,),)))
    return tuple(out)


def bell_number(p: int) -> int:
    return len(set_partitions(p))


class LabelAlphabet:
    """Per-part-size label alphabets: size-1 parts draw from the unlabeled
    marker plus q distinguishable labels; larger parts are always unlabeled.
    Arbitrary finite alphabets are accepted via ``custom``."""

    def __init__(self, q: int):
        if q < 0:
            raise InvalidArgs(f"q must be non-negative, got {q}")
        self.q = q
        self._custom: dict[int, tuple[int, ...]] | None = None

    @classmethod
    def custom(cls, alphabets: dict[int, tuple[int, ...]]) -> "LabelAlphabet":
        a = cls(0)
        a._custom = dict(alphabets)
        return a

    def labels_for_size(self, i: int) -> tuple[int, ...]:
        if self._custom is not None:
            return self._custom.get(i, (UNLABELED,))
        if i == 1:
            return tuple(range(self.q + 1))
        return (UNLABELED,)


@dataclass(frozen=True)
class GeneralLabeledPartition:
    """A set partition with every part carrying a label from the alphabet
    matched to the part's size; labels may repeat across parts."""

    parts: SetPartition
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.labels):
            raise InvalidArgs("one label per part required")

    @property
    def p(self) -> int:
        return sum(len(x) for x in self.parts)

    def act(self, sigma: Perm, tau: Perm | None = None) -> "GeneralLabeledPartition":
        """Relabel elements by sigma and labels by tau (on labels 1..q)."""
        moved = [tuple(sorted(sigma[x] for x in part)) for part in self.parts]
        labs = list(self.labels)
        if tau is not None:
            labs = [(tau[l - 1] + 1) if l > 0 else 0 for l in labs]
        order = sorted(range(len(moved)), key=lambda i: moved[i][0])
        return GeneralLabeledPartition(
            tuple(moved[i] for i in order), tuple(labs[i] for i in order)
        )

    def __str__(self) -> str:
        body = "|".join(",".join(str(x + 1) for x in part) for part in self.parts)
        labs = ",".join("*" if l == 0 else str(l) for l in self.labels)
        return "{" + body + "}:labels=" + labs

    def to_json(self) -> dict:
        return {
            "parts": [
                {"elements": [x + 1 for x in part], "label": None if l == 0 else l}
                for part, l in zip(self.parts, self.labels)
            ]
        }


@dataclass(frozen=True)
class QLabeledPartition:
    """A set partition with at least q parts, of which q carry the labels
    1..q injectively; the rest are unlabeled (label 0)."""

    parts: SetPartition
    labels: tuple[int, ...]

    def __post_init__(self):
        used = [l for l in self.labels if l > 0]
        if sorted(used) != list(range(1, len(used) + 1)):
            raise InvalidArgs(f"labels must be exactly 1..q, got {self.labels}")

    @property
    def p(self) -> int:
        return sum(len(x) for x in self.parts)

    @property
    def q(self) -> int:
        return sum(1 for l in self.labels if l > 0)

    def act(self, sigma: Perm, tau: Perm | None = None) -> "QLabeledPartition":
        moved = [tuple(sorted(sigma[x] for x in part)) for part in self.parts]
        labs = list(self.labels)
        if tau is not None:
            labs = [(tau[l - 1] + 1) if l > 0 else 0 for l in labs]
        order = sorted(range(len(moved)), key=lambda i: moved[i][0])
        return QLabeledPartition(
            tuple(moved[i] for i in order), tuple(labs[i] for i in order)
        )

    def __str__(self) -> str:
        body = "|".join(",".join(str(x + 1) for x in part) for part in self.parts)
        labs = ",".join("*" if l == 0 else str(l) for l in self.labels)
        return "{" + body + "}:labels=" + labs

    def to_json(self) -> dict:
        return {
            "parts": [
                {"elements": [x + 1 for x in part], "label": None if l == 0 else l}
                for part, l in zip(self.parts, self.labels)
            ]
        }


# ---------------------------------------------------------------------------
# Enumeration


def count_general(p: int, alphabet: LabelAlphabet) -> int:
    """Number of labeled set partitions, without enumerating: sum over
    part-size profiles of the multinomial count times label choices."""
    from math import factorial

    total = 0
    for lam in enumerate_partitions(p):
        mult: dict[int, int] = {}
        for s in lam:
            mult[s] = mult.get(s, 0) + 1
        ways = factorial(p)
        for s, m in mult.items():
            ways //= factorial(s) ** m * factorial(m)
        for s, m in mult.items():
            ways *= len(alphabet.labels_for_size(s)) ** m
        total += ways
    return total


def enumerate_general(
    p: int, alphabet: LabelAlphabet, budget: int | None = None
) -> list[GeneralLabeledPartition]:
    """All labeled set partitions of {1..p} over the given alphabet."""
    if p < 0:
        raise InvalidArgs("p must be non-negative")
    check_budget(count_general(p, alphabet), budget, "labeled partitions")
    out = []
    for sp in set_partitions(p):
        choices = [alphabet.labels_for_size(len(part)) for part in sp]
        for labs in itertools.product(*choices):
            out.append(GeneralLabeledPartition(sp, labs))
    return out


def enumerate_pq(p: int, q: int) -> list[QLabeledPartition]:
    """All partitions of {1..p} with at least q parts, q of them labeled
    bijectively by 1..q."""
    if q < 0 or p < 0:
        raise InvalidArgs("p, q must be non-negative")
    if q > p:
        raise InvalidArgs(f"q={q} exceeds p={p}; no partition has enough parts")
    out = []
    for sp in set_partitions(p):
        k = len(sp)
        if k < q:
            continue
        for positions in itertools.permutations(range(k), q):
            labs = [0] * k
            for lab, pos in enumerate(positions, start=1):
                labs[pos] = lab
            out.append(QLabeledPartition(sp, tuple(labs)))
    return out


def splitting_map(x: QLabeledPartition) -> GeneralLabeledPartition:
    """Split each labeled part into singletons carrying that part's label;
    unlabeled parts pass through."""
    parts: list[Part] = []
    labels: list[int] = []
    for part, lab in zip(x.parts, x.labels):
        if lab == 0:
            parts.append(part)
            labels.append(0)
        else:
            for e in part:
                parts.append((e,))
                labels.append(lab)
    order = sorted(range(len(parts)), key=lambda i: parts[i][0])
    return GeneralLabeledPartition(
        tuple(parts[i] for i in order), tuple(labels[i] for i in order)
    )


# ---------------------------------------------------------------------------
# Permutation bicharacters (fixed-point counting)


def _fixed_points(objs, sigma: Perm, tau: Perm | None) -> int:
    return sum(1 for x in objs if x.act(sigma, tau) == x)


def permutation_bicharacter(
    p: int, q: int, source: str = "general", budget: int | None = None
) -> BiClassFunction:
    """Fixed-point character of Sigma_p x Sigma_q on the chosen family:
    'general' for labeled partitions with repeatable labels, 'pq' for the
    injectively labeled family."""
    if source == "general":
        objs = enumerate_general(p, LabelAlphabet(q), budget)
    elif source == "pq":
        objs = enumerate_pq(p, q)
    else:
        raise InvalidArgs(f"unknown source {source!r}")
    vals = {}
    for s in cycle_types(p):
        sig = class_representative(s)
        for t in cycle_types(q):
            tau = class_representative(t)
            vals[(s, t)] = _fixed_points(objs, sig, tau)
    return BiClassFunction((p, q), vals)


# ---------------------------------------------------------------------------
# The receiving algebra F_W(V), materialized in V-degree p

Symbol = tuple[int, tuple[int, ...]]  # (label, weakly increasing var tuple)
Monomial = tuple[Symbol, ...]  # sorted tuple of symbols


class FWGradedPiece:
    """Degree-p part (in V) of Sym(⊕_i W_i ⊗ Sym^i V) for the standard
    alphabet with q repeatable singleton labels, over V = Q^d.

    Basis elements are commutative monomials in symbols (label, m) with m a
    monomial in the d variables; the gl_d action is by derivations."""

    def __init__(self, p: int, q: int, d: int, budget: int | None = None):
        if p < 0 or q < 0 or d < 1:
            raise InvalidArgs(f"bad parameters p={p}, q={q}, d={d}")
        self.p, self.q, self.d = p, q, d
        est = fw_dimension_by_series(p, q, d)
        check_budget(est, budget)
        self.basis: list[Monomial] = self._enumerate()
        assert len(self.basis) == est, (len(self.basis), est)
        self.index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _enumerate(self) -> list[Monomial]:
        p, q, d = self.p, self.q, self.d
        symbols_by_size: dict[int, list[Symbol]] = {}
        for i in range(1, p + 1):
            monos = list(itertools.combinations_with_replacement(range(d), i))
            if i == 1:
                symbols_by_size[i] = [
                    (lab, m) for lab in range(q + 1) for m in monos
                ]
            else:
                symbols_by_size[i] = [(UNLABELED, m) for m in monos]
        out: list[Monomial] = []
        for lam in enumerate_partitions(p):
            mult: dict[int, int] = {}
            for s in lam:
                mult[s] = mult.get(s, 0) + 1
            pools = [
                list(
                    itertools.combinations_with_replacement(
                        symbols_by_size[s], m
                    )
                )
                for s, m in sorted(mult.items())
            ]
            for combo in itertools.product(*pools):
                mono = tuple(sorted(sym for group in combo for sym in group))
                out.append(mono)
        return sorted(out)

    def weight(self, mono: Monomial) -> tuple[int, ...]:
        w = [0] * self.d
        for _, vars_ in mono:
            for v in vars_:
                w[v] += 1
        return tuple(w)

    def weight_counter(self) -> Counter:
        return Counter(self.weight(m) for m in self.basis)

    def gl_apply(self, a: int, b: int, mono: Monomial) -> dict[Monomial, int]:
        """E_{ab} acting by derivation across symbol factors."""
        out: dict[Monomial, int] = {}
        for pos, (lab, vars_) in enumerate(mono):
            nb = vars_.count(b)
            if nb == 0:
                continue
            i = vars_.index(b)
            newvars = tuple(sorted(vars_[:i] + (a,) + vars_[i + 1 :]))
            newsym = (lab, newvars)
            newmono = tuple(sorted(mono[:pos] + (newsym,) + mono[pos + 1 :]))
            out[newmono] = out.get(newmono, 0) + nb
        return {m: c for m, c in out.items() if c}

    def gl_matrix(self, a: int, b: int) -> ExactMatrix:
        n = self.dimension
        m = ExactMatrix.zero(n, n)
        for col, mono in enumerate(self.basis):
            for tgt, c in self.gl_apply(a, b, mono).items():
                m.data[self.index[tgt]][col] += c
        return m

    def label_action(self, tau: Perm, mono: Monomial) -> Monomial:
        """Sigma_q permuting the singleton labels 1..q."""
        return tuple(
            sorted(
                ((tau[lab - 1] + 1) if lab > 0 else 0, vars_)
                for lab, vars_ in mono
            )
        )


def fw_dimension_by_series(p: int, q: int, d: int) -> int:
    """dim of the degree-p piece by generating series: product over i of
    (1-u^i)^{-dim(W_i ⊗ Sym^i)} with dim W_1 = q+1 and dim W_i = 1 after."""
    from .characters import series_geom_power, series_mul

    out = [0] * (p + 1)
    out[0] = 1
    for i in range(1, p + 1):
        w = (q + 1) if i == 1 else 1
        out = series_mul(out, series_geom_power(i, w * sym_dimension(d, i), p), p)
    return out[p]


def build_fw_piece(p: int, q: int, d: int, budget: int | None = None) -> FWGradedPiece:
    return FWGradedPiece(p, q, d, budget)


# ---------------------------------------------------------------------------
# The maps attached to labeled partitions


def phi_columns(
    x: GeneralLabeledPartition, d: int
) -> dict[tuple[int, ...], Monomial]:
    """The map (Q^d)^{⊗p} -> F_W(V) of a labeled partition, on the standard
    basis.  Each basis tensor goes to a single monomial with coefficient 1:
    multiply the slots of each part into one symbol carrying its label."""
    p = x.p
    out = {}
    for J in itertools.product(range(d), repeat=p):
        syms = [
            (lab, tuple(sorted(J[e] for e in part)))
            for part, lab in zip(x.parts, x.labels)
        ]
        out[J] = tuple(sorted(syms))
    return out


def phi_matrix(
    x: GeneralLabeledPartition, d: int, piece: FWGradedPiece | None = None
) -> ExactMatrix:
    """Dense matrix of the map, rows indexed by the FW piece basis."""
    if piece is None:
        piece = build_fw_piece(x.p, _max_label(x), d)
    cols = phi_columns(x, d)
    src = list(itertools.product(range(d), repeat=x.p))
    m = ExactMatrix.zero(piece.dimension, len(src))
    for col, J in enumerate(src):
        m.data[piece.index[cols[J]]][col] = Fraction(1)
    return m


def _max_label(x: GeneralLabeledPartition) -> int:
    return max([0] + [l for l in x.labels])


def check_phi_equivariance(
    x: GeneralLabeledPartition, d: int, piece: FWGradedPiece
) -> bool:
    """Exact intertwining with every derivation generator E_{ab}."""
    p = x.p
    cols = phi_columns(x, d)
    for a in range(d):
        for b in range(d):
            if a == b:
                continue
            for J in itertools.product(range(d), repeat=p):
                lhs: dict[Monomial, int] = {}
                for t, v in enumerate(J):
                    if v == b:
                        J2 = J[:t] + (a,) + J[t + 1 :]
                        m2 = cols[J2]
                        lhs[m2] = lhs.get(m2, 0) + 1
                rhs = piece.gl_apply(a, b, cols[J])
                if {k: v for k, v in lhs.items() if v} != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# Hom-space dimension and character


def fw_multiplicities(p: int, q: int, d: int, budget: int | None = None):
    """Schur-functor multiplicities of the degree-p FW piece, from its
    weight multiset by greedy Kostka subtraction."""
    from .modules import decompose_weight_multiset

    piece = build_fw_piece(p, q, d, budget)
    return decompose_weight_multiset(piece.weight_counter(), d), piece


def hom_space_dimension_gl(
    p: int,
    q: int,
    d: int,
    budget: int | None = None,
    solve_unknown_cap: int = 900,
) -> int:
    """dim Hom_GL((Q^d)^{⊗p}, FW piece), computed by the character method
    (always) and by directly solving for intertwiners (when the unknown
    count fits under solve_unknown_cap); the two must agree."""
    dec, piece = fw_multiplicities(p, q, d, budget)
    char_dim = sum(
        mult * specht_dimension(lam)
        for lam, mult in dec.mults.items()
        if lam.weight == p
    )
    solve_dim = _intertwiner_solve_dimension(p, d, piece, solve_unknown_cap)
    if solve_dim is not None and solve_dim != char_dim:
        raise OracleDisagreement(
            f"intertwiner solve gives {solve_dim}, characters give {char_dim}"
        )
    return char_dim


def _intertwiner_solve_dimension(
    p: int, d: int, piece: FWGradedPiece, cap: int
) -> int | None:
    """Kernel dimension of the 'commutes with every adjacent gl generator
    and preserves torus weight' system; None if over the cap."""
    src = list(itertools.product(range(d), repeat=p))
    src_weight = {J: _tensor_weight(J, d) for J in src}
    tgt_by_weight: dict[tuple[int, ...], list[int]] = {}
    for i, mono in enumerate(piece.basis):
        tgt_by_weight.setdefault(piece.weight(mono), []).append(i)

    unknowns = []
    for J in src:
        for t in tgt_by_weight.get(src_weight[J], []):
            unknowns.append((J, t))
    if len(unknowns) > cap:
        return None
    uindex = {u: i for i, u in enumerate(unknowns)}

    gens = [(a, a + 1) for a in range(d - 1)] + [(a + 1, a) for a in range(d - 1)]
    rows = []
    for (a, b) in gens:
        for J in src:
            # T(E.J) - E.T(J) = 0, one equation per target coordinate.
            eqs: dict[int, dict[int, int]] = {}
            for t, v in enumerate(J):
                if v == b:
                    J2 = J[:t] + (a,) + J[t + 1 :]
                    for tgt in tgt_by_weight.get(src_weight[J2], []):
                        eqs.setdefault(tgt, {})[uindex[(J2, tgt)]] = (
                            eqs.setdefault(tgt, {}).get(uindex[(J2, tgt)], 0) + 1
                        )
            for tgt in tgt_by_weight.get(src_weight[J], []):
                for m2, c in piece.gl_apply(a, b, piece.basis[tgt]).items():
                    i2 = piece.index[m2]
                    key = uindex[(J, tgt)]
                    eqs.setdefault(i2, {})[key] = eqs.setdefault(i2, {}).get(key, 0) - c
            for coeffs in eqs.values():
                row = {k: v for k, v in coeffs.items() if v}
                if row:
                    rows.append(row)
    rank = sparse_rank(rows)
    return len(unknowns) - rank


def _tensor_weight(J: tuple[int, ...], d: int) -> tuple[int, ...]:
    w = [0] * d
    for v in J:
        w[v] += 1
    return tuple(w)


def hom_bicharacter(p: int, q: int, d: int, budget: int | None = None) -> BiClassFunction:
    """Sigma_p x Sigma_q character of Hom_GL(V^{⊗p}, FW piece): the label
    action is traced through the weight-graded fixed-monomial counts and the
    tensor-slot action through Schur-Weyl multiplicities."""
    piece = build_fw_piece(p, q, d, budget)
    from .modules import decompose_weight_multiset

    lam_chars = {lam: irreducible_character(lam) for lam in enumerate_partitions(p)}
    vals = {}
    for t in cycle_types(q):
        tau = class_representative(t)
        twisted = Counter()
        for mono in piece.basis:
            if piece.label_action(tau, mono) == mono:
                twisted[piece.weight(mono)] += 1
        dec = decompose_weight_multiset(twisted, d)
        for s in cycle_types(p):
            vals[(s, t)] = sum(
                mult * lam_chars[lam].values[s]
                for lam, mult in dec.mults.items()
                if lam.weight == p
            )
    return BiClassFunction((p, q), vals)


# ---------------------------------------------------------------------------
# Verification of the two structural lemmas


def verify_rw_prop(p: int, q: int, d: int, budget: int | None = None) -> Report:
    """The stacked family of labeled-partition maps is injective and spans
    the GL-equivariant Hom space (requires d >= p for a pass)."""
    objs = enumerate_general(p, LabelAlphabet(q), budget)
    n = len(objs)
    rows = []
    for x in objs:
        row = {}
        for J, mono in phi_columns(x, d).items():
            row[(J, mono)] = 1
        rows.append(row)
    rank = sparse_rank(rows)
    hom_dim = hom_space_dimension_gl(p, q, d, budget)
    injective = rank == n
    surjective = rank == hom_dim
    witnesses: dict = {"num_labeled_partitions": n, "rank": rank, "hom_dim": hom_dim}
    if not injective:
        combo = sparse_nullity_witness(rows)
        if combo is not None:
            witnesses["dependent_combination"] = {
                str(objs[i]): str(c) for i, c in enumerate(combo) if c
            }
    return Report(
        claim=f"labeled-partition maps give an isomorphism, p={p}, q={q}, d={d}",
        left=rank,
        right=hom_dim,
        passed=injective and surjective,
        witnesses=witnesses,
    )


def induced_pq_bicharacter(p: int, i: int, q: int) -> BiClassFunction:
    """Character of Ind over the label factor from Sigma_i x Sigma_{q-i}
    up to Sigma_q of the injectively labeled family, with Sigma_{q-i}
    acting trivially; a Sigma_p x Sigma_q character."""
    base = permutation_bicharacter(p, i, source="pq")
    vals = {}
    for s in cycle_types(p):
        f = BiClassFunction(
            (i, q - i),
            {
                (r1, r2): base.values[(s, r1)]
                for r1 in cycle_types(i)
                for r2 in cycle_types(q - i)
            },
        )
        ind = induce(f, q)
        for t in cycle_types(q):
            vals[(s, t)] = ind.values[t]
    return BiClassFunction((p, q), vals)


def verify_splitting_lemma(p: int, q: int, d: int, budget: int | None = None) -> Report:
    """Classwise equality of three Sigma_p x Sigma_q characters: the
    labeled-partition permutation module, the sum of induced injectively
    labeled modules, and the GL-equivariant Hom space."""
    lhs = permutation_bicharacter(p, q, source="general", budget=budget)
    rhs = BiClassFunction((p, q), {})
    for i in range(q + 1):
        rhs = rhs + induced_pq_bicharacter(p, i, q)
    hom = hom_bicharacter(p, q, d, budget)
    chars_equal = lhs == rhs
    hom_equal = hom == rhs
    hom_dim = hom_space_dimension_gl(p, q, d, budget)
    dim_ok = lhs.dimension == hom_dim
    mismatches = [
        {"sigma_class": str(s), "tau_class": str(t), "left": int(lhs.values[(s, t)]),
         "right": int(rhs.values[(s, t)]), "hom": int(hom.values[(s, t)])}
        for s in cycle_types(p)
        for t in cycle_types(q)
        if not (lhs.values[(s, t)] == rhs.values[(s, t)] == hom.values[(s, t)])
    ]
    return Report(
        claim=f"induced labeled modules match the Hom space, p={p}, q={q}, d={d}",
        left=int(lhs.dimension),
        right=hom_dim,
        passed=chars_equal and hom_equal and dim_ok,
        witnesses={
            "classwise_table": {
                f"{s}|{t}": int(lhs.values[(s, t)])
                for s in cycle_types(p)
                for t in cycle_types(q)
            },
            "mismatches": mismatches,
        },
    )
