"""Graded algebra pairs (R, Gamma) with two units, reduction mod an
augmentation ideal, and the generalized splitting pipeline: hypothesis
checks, field-case splitting of the reductions, and the lifted isomorphism
M -> W (x)_R Gamma with a per-degree certificate.

Tensor products over R are stored in a free presentation: a module that is
free over R on a witness basis {b_i} identifies X (x)_R Gamma with the
direct sum of copies b_i (x) Gamma, so maps into the tensor product are
ordinary GradedMaps into TensorSpace(witness space, Gamma).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .. import gf2
from .core import (
    ComoduleData,
    DegreeCertificate,
    GradedMap,
    GradedSpace,
    HopfData,
    InvalidStructure,
    MMSplit,
    NotSurjective,
    SplitFailed,
    TensorSpace,
    Violation,
    _pairs_of,
    k_space,
    mm_split,
    pair_apply,
    validate_comodule,
    validate_hopf,
)


class HypothesisFailed(Exception):
    def __init__(self, which: str, detail: str = ""):
        self.which = which
        self.detail = detail
        super().__init__(f"{which}: {detail}" if detail else which)


class IsoFailed(Exception):
    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(
            f"lifted map fails to be an isomorphism in degree {degree}"
        )


@dataclass
class GradedAlgebra:
    """A graded unital algebra by structure constants up to N."""

    space: GradedSpace
    unit: GradedMap   # k -> space
    mult: GradedMap   # space (x) space -> space

    def __post_init__(self):
        self.SS = TensorSpace(self.space, self.space)
        self.N = self.space.N

    @property
    def unit_vec(self) -> int:
        return self.unit.rows[0][0] if self.unit.rows[0] else 0

    def mult_apply(self, da: int, va: int, db: int, vb: int) -> int:
        return pair_apply(self.mult, self.SS, da, va, db, vb)


def validate_algebra(
    alg: GradedAlgebra, N: int | None = None, commutative: bool = False
) -> list[Violation]:
    N = alg.N if N is None else min(N, alg.N)
    S = alg.space
    out: list[Violation] = []
    one = alg.unit_vec
    if one == 0:
        out.append(Violation("unit", 0, "unit map is zero"))
        return out
    for d in range(0, N + 1):
        for i in range(S.dim(d)):
            label = S.labels(d)[i]
            if alg.mult_apply(0, one, d, 1 << i) != 1 << i:
                out.append(Violation("left_unit", d, label))
            if alg.mult_apply(d, 1 << i, 0, one) != 1 << i:
                out.append(Violation("right_unit", d, label))
        for da, ia, db, jb in alg.SS.pairs(d):
            label = f"{S.labels(da)[ia]}(x){S.labels(db)[jb]}"
            prod = alg.mult_apply(da, 1 << ia, db, 1 << jb)
            if commutative:
                if prod != alg.mult_apply(db, 1 << jb, da, 1 << ia):
                    out.append(Violation("commutativity", d, label))
            for dc in range(0, N - d + 1):
                for kc in range(S.dim(dc)):
                    l1 = alg.mult_apply(d, prod, dc, 1 << kc)
                    inner = alg.mult_apply(db, 1 << jb, dc, 1 << kc)
                    l2 = alg.mult_apply(da, 1 << ia, db + dc, inner)
                    if l1 != l2:
                        out.append(
                            Violation(
                                "associativity",
                                d + dc,
                                f"{label}(x){S.labels(dc)[kc]}",
                            )
                        )
    return out


def algebra_map_violations(
    f: GradedMap, src: GradedAlgebra, dst: GradedAlgebra, N: int | None = None
) -> list[Violation]:
    N = min(src.N, dst.N) if N is None else N
    out: list[Violation] = []
    if f.apply(0, src.unit_vec) != dst.unit_vec:
        out.append(Violation(f"{f.name}_unital", 0, "f(1) != 1"))
    for d in range(0, N + 1):
        for da, ia, db, jb in src.SS.pairs(d):
            lhs = f.apply(d, src.mult_apply(da, 1 << ia, db, 1 << jb))
            rhs = dst.mult_apply(
                da, f.apply(da, 1 << ia), db, f.apply(db, 1 << jb)
            )
            if lhs != rhs:
                label = (
                    f"{src.space.labels(da)[ia]}(x){src.space.labels(db)[jb]}"
                )
                out.append(Violation(f"{f.name}_multiplicative", d, label))
    return out


Element = tuple[int, int]  # (degree, vector)


def ideal_spans(
    R: GradedAlgebra, gens: list[Element], N: int | None = None
) -> dict[int, list[int]]:
    """Per-degree spanning vectors of the two-sided ideal generated by gens
    (R is validated commutative elsewhere, so one-sided products suffice)."""
    N = R.N if N is None else min(N, R.N)
    spans: dict[int, list[int]] = {d: [] for d in range(0, N + 1)}
    for dg, gv in gens:
        if gv == 0:
            continue
        for dr in range(0, N - dg + 1):
            for ri in range(R.space.dim(dr)):
                prod = R.mult_apply(dr, 1 << ri, dg, gv)
                if prod:
                    spans[dr + dg].append(prod)
    return spans


@dataclass
class RightUnitReport:
    """Degreewise comparison of the left span I*Gamma with the right span
    Gamma*I; equality in every degree is what lets the right unit descend
    to the quotient by I."""

    ok: bool
    first_failure: int | None
    table: tuple[tuple[int, int, int, bool], ...]  # (deg, rank L, rank R, eq)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "first_failure": self.first_failure,
            "degrees": [
                {"degree": d, "rank_left": rl, "rank_right": rr, "equal": eq}
                for d, rl, rr, eq in self.table
            ],
        }


def right_unit_descends(
    R: GradedAlgebra,
    gens: list[Element],
    gamma: GradedAlgebra,
    eta_l: GradedMap,
    eta_r: GradedMap,
    N: int | None = None,
) -> RightUnitReport:
    """Compare the spans eta_l(I)*Gamma and Gamma*eta_r(I) degree by degree,
    where I is the ideal of R generated by gens."""
    N = min(R.N, gamma.N) if N is None else N
    ideal = ideal_spans(R, gens, N)
    table = []
    first = None
    for d in range(0, N + 1):
        left: list[int] = []
        right: list[int] = []
        for di in range(0, d + 1):
            for xv in ideal[di]:
                gl = eta_l.apply(di, xv)
                gr = eta_r.apply(di, xv)
                dg = d - di
                for j in range(gamma.space.dim(dg)):
                    if gl:
                        left.append(gamma.mult_apply(di, gl, dg, 1 << j))
                    if gr:
                        right.append(gamma.mult_apply(dg, 1 << j, di, gr))
        eq = gf2.spans_equal(left, right)
        table.append((d, gf2.rank(left), gf2.rank(right), eq))
        if not eq and first is None:
            first = d
    return RightUnitReport(first is None, first, tuple(table))


class FreenessFailed(Exception):
    def __init__(self, name: str, degree: int):
        self.name = name
        self.degree = degree
        super().__init__(
            f"{name}: witness products do not form a basis in degree {degree}"
        )


class Witnesses:
    """Freeness data for a space that is free over R on listed witness
    elements, through a supplied action of R basis vectors on vectors.

    Provides the quotient basis mod R_+ (the witnesses themselves), the
    projection to it, and the decomposition of any vector as a sum of
    terms (witness, R basis vector).
    """

    def __init__(
        self,
        name: str,
        R: GradedAlgebra,
        space: GradedSpace,
        witnesses: list[tuple[int, str, int]],  # (degree, label, vector)
        action: Callable[[int, int, int, int], int],  # (dr, ri, dw, wvec)
        N: int,
    ):
        if R.space.dim(0) != 1 or R.unit_vec != 1:
            raise InvalidStructure(
                "base ring must be connected with unit the degree-0 basis vector"
            )
        self.name = name
        self.R = R
        self.space = space
        self.witnesses = list(witnesses)
        self.N = N
        bar_basis: dict[int, list[str]] = {}
        self.bar_pos: dict[int, tuple[int, int]] = {}
        for g, (dw, label, _) in enumerate(self.witnesses):
            bar_basis.setdefault(dw, []).append(label)
            self.bar_pos[g] = (dw, len(bar_basis[dw]) - 1)
        self.bar = GradedSpace(name, bar_basis, N)
        self.entries: dict[int, list[tuple[int, int]]] = {}
        self._inv: dict[int, list[int]] = {}
        for d in range(0, N + 1):
            entries: list[tuple[int, int]] = []
            rows: list[int] = []
            for g, (dw, _, wvec) in enumerate(self.witnesses):
                dr = d - dw
                if dr < 0:
                    continue
                for ri in range(R.space.dim(dr)):
                    entries.append((g, ri))
                    rows.append(action(dr, ri, dw, wvec))
            dim = space.dim(d)
            if len(entries) != dim:
                raise FreenessFailed(name, d)
            inv = gf2.inverse(rows, dim)
            if inv is None:
                raise FreenessFailed(name, d)
            self.entries[d] = entries
            self._inv[d] = inv

    def decompose(self, d: int, vec: int) -> list[tuple[int, int, int]]:
        """vec as a list of (witness index, r degree, r basis index)."""
        coords = gf2.mat_vec(self._inv[d], vec)
        out = []
        for t, (g, ri) in enumerate(self.entries[d]):
            if (coords >> t) & 1:
                out.append((g, d - self.witnesses[g][0], ri))
        return out

    def project(self, d: int, vec: int) -> int:
        """Class of vec in the quotient mod R_+, in bar coordinates."""
        out = 0
        for g, dr, _ in self.decompose(d, vec):
            if dr == 0:
                out ^= 1 << self.bar_pos[g][1]
        return out


@dataclass
class AlgebroidData:
    """The pair (R, Gamma) with both units, by structure constants up to N.

    The comultiplication lands in the free presentation: Gamma is free as a
    right R-module on gamma_witnesses, and comult maps Gamma into
    TensorSpace(witness space, Gamma)."""

    R: GradedAlgebra
    r_plus: list[Element]
    gamma: GradedAlgebra
    eta_l: GradedMap
    eta_r: GradedMap
    gamma_witnesses: list[tuple[int, str, int]]
    comult: GradedMap
    counit: GradedMap           # Gamma -> R
    antipode: GradedMap | None
    N: int

    def left_witnesses(self) -> Witnesses:
        return Witnesses(
            "BG", self.R, self.gamma.space, self.gamma_witnesses,
            lambda dr, ri, dw, wv: self.gamma.mult_apply(
                dr, self.eta_l.row(dr, ri), dw, wv
            ),
            self.N,
        )

    def right_witnesses(self) -> Witnesses:
        return Witnesses(
            "BG", self.R, self.gamma.space, self.gamma_witnesses,
            lambda dr, ri, dw, wv: self.gamma.mult_apply(
                dw, wv, dr, self.eta_r.row(dr, ri)
            ),
            self.N,
        )


def validate_algebroid(alg: AlgebroidData, N: int | None = None) -> list[Violation]:
    """Checkable shadow of the axioms for the pair (R, Gamma): algebra
    axioms with commutativity, both units algebra maps, augmentation with
    quotient the ground field, freeness on the witnesses, counit laws and
    coassociativity in the free presentation, and the antipode conditions
    on the units when an antipode is supplied."""
    N = alg.N if N is None else min(N, alg.N)
    out: list[Violation] = []
    R, G = alg.R, alg.gamma

    if R.space.dim(0) != 1 or R.unit_vec != 1:
        out.append(Violation("base_connected", 0, f"dim R_0 = {R.space.dim(0)}"))
        return out
    out += validate_algebra(R, N, commutative=True)
    out += validate_algebra(G, N, commutative=True)
    out += algebra_map_violations(alg.eta_l, R, G, N)
    out += algebra_map_violations(alg.eta_r, R, G, N)

    for dg, gv in alg.r_plus:
        if dg <= 0 and gv:
            out.append(Violation("r_plus_proper", dg, "generator in degree <= 0"))
    ideal = ideal_spans(R, alg.r_plus, N)
    for d in range(1, N + 1):
        if gf2.rank(ideal[d]) != R.space.dim(d):
            out.append(
                Violation("r_plus_quotient", d, "quotient exceeds the ground field")
            )
    if out:
        return out

    try:
        wl = alg.left_witnesses()
        wr = alg.right_witnesses()
    except FreenessFailed as e:
        out.append(Violation("gamma_free", e.degree, e.name))
        return out

    # counit splits both units.
    for d in range(0, N + 1):
        for i in range(R.space.dim(d)):
            if alg.counit.apply(d, alg.eta_l.row(d, i)) != 1 << i:
                out.append(Violation("counit_eta_l", d, R.space.labels(d)[i]))
            if alg.counit.apply(d, alg.eta_r.row(d, i)) != 1 << i:
                out.append(Violation("counit_eta_r", d, R.space.labels(d)[i]))

    BG = wl.bar
    BGG = TensorSpace(BG, G.space)
    for d in range(0, N + 1):
        for i in range(G.space.dim(d)):
            label = G.space.labels(d)[i]
            bits = _pairs_of(alg.comult.row(d, i), BGG.pairs(d))
            # (counit (x) id) comult = id: sum of eta_l(counit(b)) * gamma.
            acc = 0
            for dw, iw, dg, jg in bits:
                wvec = _witness_vec(alg.gamma_witnesses, BG, dw, iw)
                r = alg.counit.apply(dw, wvec)
                acc ^= G.mult_apply(dw, alg.eta_l.apply(dw, r), dg, 1 << jg)
            if acc != 1 << i:
                out.append(Violation("counit_law_left", d, label))
            # (id (x) counit) comult = id: sum of b * eta_r(counit(gamma)).
            acc = 0
            for dw, iw, dg, jg in bits:
                wvec = _witness_vec(alg.gamma_witnesses, BG, dw, iw)
                r = alg.counit.row(dg, jg)
                acc ^= G.mult_apply(dw, wvec, dg, alg.eta_r.apply(dg, r))
            if acc != 1 << i:
                out.append(Violation("counit_law_right", d, label))
            # Coassociativity in (BG, BG, Gamma) coordinates.
            lhs: set = set()
            rhs: set = set()
            for dw, iw, dg, jg in bits:
                for dw2, iw2, dg2, jg2 in _pairs_of(
                    alg.comult.row(dg, jg), BGG.pairs(dg)
                ):
                    rhs ^= {(dw, iw, dw2, iw2, dg2, jg2)}
                wvec = _witness_vec(alg.gamma_witnesses, BG, dw, iw)
                inner = 0
                for b in range(G.space.dim(dw)):
                    if (wvec >> b) & 1:
                        inner ^= alg.comult.row(dw, b)
                for dwa, iwa, dgb, jgb in _pairs_of(inner, BGG.pairs(dw)):
                    for g, dr, ri in wr.decompose(dgb, 1 << jgb):
                        gp = G.mult_apply(
                            dr, alg.eta_l.row(dr, ri), dg, 1 << jg
                        )
                        wdeg, wpos = wr.bar_pos[g]
                        ji = 0
                        while gp:
                            if gp & 1:
                                lhs ^= {(dwa, iwa, wdeg, wpos, dr + dg, ji)}
                            gp >>= 1
                            ji += 1
            if lhs != rhs:
                out.append(Violation("coassociativity", d, label))

    if alg.antipode is not None:
        c = alg.antipode
        for d in range(0, N + 1):
            for i in range(R.space.dim(d)):
                if c.apply(d, alg.eta_l.row(d, i)) != alg.eta_r.row(d, i):
                    out.append(
                        Violation("antipode_eta_l", d, R.space.labels(d)[i])
                    )
                if c.apply(d, alg.eta_r.row(d, i)) != alg.eta_l.row(d, i):
                    out.append(
                        Violation("antipode_eta_r", d, R.space.labels(d)[i])
                    )
            for i in range(G.space.dim(d)):
                if c.apply(d, c.row(d, i)) != 1 << i:
                    out.append(
                        Violation("antipode_involutive", d, G.space.labels(d)[i])
                    )
    return _dedup(out)


def _witness_vec(witnesses, bar: GradedSpace, dw: int, iw: int) -> int:
    label = bar.labels(dw)[iw]
    for d, lab, vec in witnesses:
        if d == dw and lab == label:
            return vec
    raise KeyError((dw, iw))


def _dedup(violations: list[Violation]) -> list[Violation]:
    seen = set()
    out = []
    for v in violations:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


@dataclass
class Cor22Input:
    """A comodule algebra M over the pair (R, Gamma), with its coaction in
    the free presentation psi: M -> TensorSpace(witness space of M, Gamma)."""

    alg: AlgebroidData
    m: GradedAlgebra
    eta_m: GradedMap               # R -> m, algebra map (module structure)
    m_witnesses: list[tuple[int, str, int]]
    psi: GradedMap
    phi: GradedMap                 # m -> gamma
    N: int

    def m_witness_data(self) -> Witnesses:
        return Witnesses(
            "BM", self.alg.R, self.m.space, self.m_witnesses,
            lambda dr, ri, dw, wv: self.m.mult_apply(
                dr, self.eta_m.row(dr, ri), dw, wv
            ),
            self.N,
        )


class Cor22Report(NamedTuple):
    v_series: dict[int, int]
    w_generators: tuple[tuple[int, str], ...]  # degrees and labels of W's basis
    hypotheses: tuple[str, ...]
    right_unit: RightUnitReport
    mm: MMSplit
    theta: GradedMap               # M -> V (x) Gamma
    certificate: tuple[DegreeCertificate, ...]
    N: int

    def to_dict(self) -> dict:
        return {
            "trunc": self.N,
            "hypotheses": list(self.hypotheses),
            "w_generators": [
                {"degree": d, "label": s} for d, s in self.w_generators
            ],
            "v_series": {str(d): n for d, n in sorted(self.v_series.items())},
            "degrees": [
                {
                    "degree": c.degree,
                    "dim_M": c.dim_source,
                    "dim_WGamma": c.dim_target,
                    "invertible": c.invertible,
                }
                for c in self.certificate
            ],
        }


def _comodule_structure_violations(inp: Cor22Input, wm: Witnesses,
                                   wg_right: Witnesses, N: int) -> list[Violation]:
    """Coaction and phi compatibilities over R, in the free presentation."""
    alg, M, G = inp.alg, inp.m, inp.alg.gamma
    out: list[Violation] = []
    out += validate_algebra(M, N)
    out += algebra_map_violations(inp.eta_m, alg.R, M, N)
    out += algebra_map_violations(inp.phi, M, G, N)

    BM = wm.bar
    BG = wg_right.bar
    BMG = TensorSpace(BM, G.space)
    BGG = TensorSpace(BG, G.space)

    for d in range(0, N + 1):
        for i in range(M.space.dim(d)):
            label = M.space.labels(d)[i]
            bits = _pairs_of(inp.psi.row(d, i), BMG.pairs(d))
            # Counital: (id (x) counit) psi = id.
            acc = 0
            for dw, iw, dg, jg in bits:
                wvec = _witness_vec(inp.m_witnesses, BM, dw, iw)
                r = alg.counit.row(dg, jg)
                acc ^= M.mult_apply(dw, wvec, dg, inp.eta_m.apply(dg, r))
            if acc != 1 << i:
                out.append(Violation("coaction_counital", d, label))
            # Coassociative: (psi (x) id) psi = (id (x) comult) psi.
            lhs: set = set()
            rhs: set = set()
            for dw, iw, dg, jg in bits:
                for dw2, iw2, dg2, jg2 in _pairs_of(
                    alg.comult.row(dg, jg), BGG.pairs(dg)
                ):
                    rhs ^= {(dw, iw, dw2, iw2, dg2, jg2)}
                wvec = _witness_vec(inp.m_witnesses, BM, dw, iw)
                inner = 0
                for b in range(M.space.dim(dw)):
                    if (wvec >> b) & 1:
                        inner ^= inp.psi.row(dw, b)
                for dwa, iwa, dgb, jgb in _pairs_of(inner, BMG.pairs(dw)):
                    for g, dr, ri in wg_right.decompose(dgb, 1 << jgb):
                        gp = G.mult_apply(dr, alg.eta_l.row(dr, ri), dg, 1 << jg)
                        wdeg, wpos = wg_right.bar_pos[g]
                        ji = 0
                        while gp:
                            if gp & 1:
                                lhs ^= {(dwa, iwa, wdeg, wpos, dr + dg, ji)}
                            gp >>= 1
                            ji += 1
            if lhs != rhs:
                out.append(Violation("coaction_coassociative", d, label))
            # Compatibility of phi: (phi (x) id) psi = comult phi.
            lhsp: set = set()
            rhsp: set = set()
            for idx in range(G.space.dim(d)):
                if (inp.phi.row(d, i) >> idx) & 1:
                    for tup in _pairs_of(alg.comult.row(d, idx), BGG.pairs(d)):
                        rhsp ^= {tup}
            for dw, iw, dg, jg in bits:
                wvec = _witness_vec(inp.m_witnesses, BM, dw, iw)
                img = inp.phi.apply(dw, wvec)
                for g, dr, ri in wg_right.decompose(dw, img):
                    gp = G.mult_apply(dr, alg.eta_l.row(dr, ri), dg, 1 << jg)
                    wdeg, wpos = wg_right.bar_pos[g]
                    ji = 0
                    while gp:
                        if gp & 1:
                            lhsp ^= {(wdeg, wpos, dr + dg, ji)}
                        gp >>= 1
                        ji += 1
            if lhsp != rhsp:
                out.append(Violation("phi_comodule_map", d, label))

        # Coaction is R-linear and an algebra map.
        for da, ia, db, jb in M.SS.pairs(d):
            label = f"{M.space.labels(da)[ia]}(x){M.space.labels(db)[jb]}"
            prod = M.mult_apply(da, 1 << ia, db, 1 << jb)
            lhs2: set = set()
            for idx in range(M.space.dim(d)):
                if (prod >> idx) & 1:
                    for tup in _pairs_of(inp.psi.row(d, idx), BMG.pairs(d)):
                        lhs2 ^= {tup}
            rhs2: set = set()
            for dw1, iw1, dg1, jg1 in _pairs_of(
                inp.psi.row(da, ia), BMG.pairs(da)
            ):
                for dw2, iw2, dg2, jg2 in _pairs_of(
                    inp.psi.row(db, jb), BMG.pairs(db)
                ):
                    wv1 = _witness_vec(inp.m_witnesses, BM, dw1, iw1)
                    wv2 = _witness_vec(inp.m_witnesses, BM, dw2, iw2)
                    wprod = M.mult_apply(dw1, wv1, dw2, wv2)
                    gprod = G.mult_apply(dg1, 1 << jg1, dg2, 1 << jg2)
                    if not wprod or not gprod:
                        continue
                    for g, dr, ri in wm.decompose(dw1 + dw2, wprod):
                        gp = G.mult_apply(
                            dr, alg.eta_l.row(dr, ri), dg1 + dg2, gprod
                        )
                        wdeg, wpos = wm.bar_pos[g]
                        ji = 0
                        while gp:
                            if gp & 1:
                                rhs2 ^= {(wdeg, wpos, dr + dg1 + dg2, ji)}
                            gp >>= 1
                            ji += 1
            if lhs2 != rhs2:
                out.append(Violation("coaction_algebra_map", d, label))
    return _dedup(out)


def cor22_pipeline(inp: Cor22Input, N: int | None = None) -> Cor22Report:
    """Hypothesis checks, reduction mod R_+, field-case splitting of the
    reductions, and the lifted per-degree isomorphism M -> W (x)_R Gamma
    where W = R (x) V is free on the splitting's primitives."""
    N = inp.N if N is None else min(N, inp.N)
    alg, M, G = inp.alg, inp.m, inp.alg.gamma
    hypotheses: list[str] = []

    violations = validate_algebroid(alg, N)
    if violations:
        raise HypothesisFailed("algebroid_axioms", str(violations[0]))
    hypotheses.append("algebroid_axioms")

    ru = right_unit_descends(alg.R, alg.r_plus, G, alg.eta_l, alg.eta_r, N)
    if not ru.ok:
        raise HypothesisFailed(
            "right_unit_descends", f"first failure in degree {ru.first_failure}"
        )
    hypotheses.append("right_unit_descends")

    for d in range(0, N + 1):
        if gf2.rank(inp.phi.rows[d]) != G.space.dim(d):
            raise HypothesisFailed("phi_surjective", f"degree {d}")
    hypotheses.append("phi_surjective")

    try:
        wg = alg.left_witnesses()
        wg_right = alg.right_witnesses()
    except FreenessFailed as e:
        raise HypothesisFailed("freeness_gamma", f"degree {e.degree}")
    try:
        wm = inp.m_witness_data()
    except FreenessFailed as e:
        raise HypothesisFailed("freeness_m", f"degree {e.degree}")
    hypotheses.append("freeness_witnesses")

    structural = _comodule_structure_violations(inp, wm, wg_right, N)
    if structural:
        raise HypothesisFailed("comodule_structure", str(structural[0]))
    hypotheses.append("comodule_structure")

    if wm.bar.dim(0) != 1 or wg.bar.dim(0) != 1:
        raise HypothesisFailed(
            "connected_reduction",
            f"dim Mbar_0 = {wm.bar.dim(0)}, dim Gammabar_0 = {wg.bar.dim(0)}",
        )
    hypotheses.append("connected_reduction")

    # Reduce everything mod R_+ to the field case.
    Hbar = _reduced_hopf(alg, wg, N)
    Mbar = _reduced_comodule(inp, wm, wg, Hbar, N)
    phibar_rows = {
        d: [
            wg.project(d, inp.phi.apply(d, _witness_vec(inp.m_witnesses, wm.bar, d, i)))
            for i in range(wm.bar.dim(d))
        ]
        for d in range(0, N + 1)
    }
    phibar = GradedMap("phibar", Mbar.M, Hbar.A, phibar_rows)

    hv = validate_hopf(Hbar, N)
    cv = validate_comodule(Mbar, N)
    if hv or cv:
        raise HypothesisFailed("reduced_axioms", str((hv + cv)[0]))
    hypotheses.append("reduced_axioms")

    try:
        mm = mm_split(Mbar, phibar, N)
    except NotSurjective as e:
        raise HypothesisFailed("phi_surjective_reduced", f"degree {e.degree}")
    except SplitFailed as e:
        raise IsoFailed(e.degree)
    hypotheses.append("nakayama_reduction_iso")

    # Lift: theta(m) = sum alpha(bbar) (x) gamma over psi(m) = sum b (x) gamma.
    V = mm.V
    VG = TensorSpace(V, G.space)
    BMG = TensorSpace(wm.bar, G.space)
    theta_rows: dict[int, list[int]] = {}
    cert: list[DegreeCertificate] = []
    for d in range(0, N + 1):
        rows = []
        for i in range(M.space.dim(d)):
            out = 0
            for dw, iw, dg, jg in _pairs_of(inp.psi.row(d, i), BMG.pairs(d)):
                av = mm.alpha.apply(dw, 1 << iw)
                vi = 0
                while av:
                    if av & 1:
                        out ^= 1 << VG.index(d, dw, vi, jg)
                    av >>= 1
                    vi += 1
            rows.append(out)
        theta_rows[d] = rows
        ok = VG.dim(d) == M.space.dim(d) and gf2.is_invertible(
            rows, M.space.dim(d)
        )
        cert.append(DegreeCertificate(d, M.space.dim(d), VG.dim(d), ok))
        if not ok:
            raise IsoFailed(d)
    theta = GradedMap("theta_lift", M.space, VG, theta_rows)

    v_series = {d: V.dim(d) for d in V.degrees()}
    w_gens = tuple(
        (d, lab) for d in V.degrees() for lab in V.labels(d)
    )
    return Cor22Report(
        v_series, w_gens, tuple(hypotheses), ru, mm, theta,
        tuple(cert), N,
    )


def _reduced_hopf(alg: AlgebroidData, wg: Witnesses, N: int) -> HopfData:
    """Gamma mod R_+ Gamma, a connected Hopf algebra on the witness basis."""
    G = alg.gamma
    bar = GradedSpace("A", {d: wg.bar.labels(d) for d in wg.bar.degrees()}, N)
    AA = TensorSpace(bar, bar)
    mult_rows: dict[int, list[int]] = {}
    for d in range(0, N + 1):
        rows = []
        for da, ia, db, jb in AA.pairs(d):
            va = _witness_vec(alg.gamma_witnesses, wg.bar, da, ia)
            vb = _witness_vec(alg.gamma_witnesses, wg.bar, db, jb)
            rows.append(wg.project(d, G.mult_apply(da, va, db, vb)))
        mult_rows[d] = rows
    comult_rows: dict[int, list[int]] = {}
    BGG = TensorSpace(wg.bar, G.space)
    for d in range(0, N + 1):
        rows = []
        for i in range(bar.dim(d)):
            wvec = _witness_vec(alg.gamma_witnesses, wg.bar, d, i)
            acc = 0
            for b in range(G.space.dim(d)):
                if (wvec >> b) & 1:
                    acc ^= alg.comult.row(d, b)
            out = 0
            for dw, iw, dg, jg in _pairs_of(acc, BGG.pairs(d)):
                pg = wg.project(dg, 1 << jg)
                ji = 0
                while pg:
                    if pg & 1:
                        out ^= 1 << AA.index(d, dw, iw, ji)
                    pg >>= 1
                    ji += 1
            rows.append(out)
        comult_rows[d] = rows
    k = k_space(N)
    unit = GradedMap("unit", k, bar, {0: [wg.project(0, G.unit_vec)]})
    counit = GradedMap(
        "counit", bar, k, {0: [1] * bar.dim(0)}
    )
    mult = GradedMap("mult", AA, bar, mult_rows)
    comult = GradedMap("comult", bar, AA, comult_rows)
    return HopfData(bar, unit, counit, mult, comult, N)


def _reduced_comodule(
    inp: Cor22Input, wm: Witnesses, wg: Witnesses, Hbar: HopfData, N: int
) -> ComoduleData:
    M = inp.m
    bar = GradedSpace("M", {d: wm.bar.labels(d) for d in wm.bar.degrees()}, N)
    MM = TensorSpace(bar, bar)
    mult_rows: dict[int, list[int]] = {}
    for d in range(0, N + 1):
        rows = []
        for da, ia, db, jb in MM.pairs(d):
            va = _witness_vec(inp.m_witnesses, wm.bar, da, ia)
            vb = _witness_vec(inp.m_witnesses, wm.bar, db, jb)
            rows.append(wm.project(d, M.mult_apply(da, va, db, vb)))
        mult_rows[d] = rows
    MA = TensorSpace(bar, Hbar.A)
    BMG = TensorSpace(wm.bar, inp.alg.gamma.space)
    coaction_rows: dict[int, list[int]] = {}
    for d in range(0, N + 1):
        rows = []
        for i in range(bar.dim(d)):
            wvec = _witness_vec(inp.m_witnesses, wm.bar, d, i)
            acc = 0
            for b in range(M.space.dim(d)):
                if (wvec >> b) & 1:
                    acc ^= inp.psi.row(d, b)
            out = 0
            for dw, iw, dg, jg in _pairs_of(acc, BMG.pairs(d)):
                pg = wg.project(dg, 1 << jg)
                ji = 0
                while pg:
                    if pg & 1:
                        out ^= 1 << MA.index(d, dw, iw, ji)
                    pg >>= 1
                    ji += 1
            rows.append(out)
        coaction_rows[d] = rows
    k = k_space(N)
    unit = GradedMap("unit_M", k, bar, {0: [wm.project(0, M.unit_vec)]})
    mult = GradedMap("mult_M", MM, bar, mult_rows)
    coaction = GradedMap("psi_M", bar, MA, coaction_rows)
    return ComoduleData(bar, unit, mult, coaction, Hbar)
