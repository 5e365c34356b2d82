"""Formal rewriting that moves coefficients past Steenrod operations, plus
two small cohomology fixtures (a projective-space ring with one relation and
the rank-2 Moore-object module).

Coefficients are formal: products of the generators x and tau and of opaque
operator applications Sq^j(-) and beta(-).  A factor carries the coefficient
ideal flag when it is x, tau, or an operator applied to a flagged argument;
a product is flagged iff some factor is.  Words are sequences of beta and
even squares; odd squares normalize as Sq^(2n+1) = beta Sq^(2n) and two
adjacent betas annihilate the word.

The central identity (char 2) is

  x Sq^(2n) = sum_{a+b=n, a>0} Sq^(2a)(x) Sq^(2b)
            + sum_{a+b=n-1} tau Sq^(2a+1)(x) Sq^(2b+1)
            + Sq^(2n) x

together with the Bockstein rule x beta = beta x + beta(x).
"""

from __future__ import annotations

from typing import NamedTuple

X = (("x",),)
TAU = (("tau",),)

ONE: tuple = ()  # the empty coefficient monomial

FLAG_ASSUMPTION = (
    "operator atoms Sq^j(c) and beta(c) inherit the coefficient ideal flag "
    "from c; this closure is assumed, not derived"
)


def _factor_key(f) -> str:
    return render_factor(f)


def render_factor(f) -> str:
    kind = f[0]
    if kind == "x":
        return "x"
    if kind == "tau":
        return "tau"
    if kind == "Sq":
        return f"Sq^{f[1]}({render_mono(f[2])})"
    if kind == "beta":
        return f"beta({render_mono(f[1])})"
    raise ValueError(f"unknown factor {f!r}")


def render_mono(m: tuple) -> str:
    return "*".join(render_factor(f) for f in m) if m else "1"


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b, key=_factor_key))


def factor_flagged(f) -> bool:
    kind = f[0]
    if kind in ("x", "tau"):
        return True
    if kind == "Sq":
        return mono_flagged(f[2])
    if kind == "beta":
        return mono_flagged(f[1])
    raise ValueError(f"unknown factor {f!r}")


def mono_flagged(m: tuple) -> bool:
    return any(factor_flagged(f) for f in m)


def sq_of(j: int, m: tuple) -> tuple:
    """The formal operator Sq^j applied to a whole coefficient monomial."""
    if j == 0:
        return m
    return (("Sq", j, m),)


def beta_of(m: tuple) -> tuple | None:
    """beta applied to a monomial; None encodes zero (beta of a lone
    beta-atom vanishes)."""
    if len(m) == 1 and m[0][0] == "beta":
        return None
    return (("beta", m),)


# Words: "b" for the Bockstein, ("s", 2n) for the even square Sq^(2n).

def word(*squares: int) -> tuple:
    """Normalize a sequence of square indices into a word; Sq^1 = beta,
    Sq^(2n+1) = beta Sq^(2n), Sq^0 omitted.  Returns None for a word that
    dies by beta beta = 0."""
    items: list = []
    for j in squares:
        if j < 0:
            raise ValueError("negative square index")
        if j == 0:
            continue
        if j % 2:
            items.append("b")
            if j > 1:
                items.append(("s", j - 1))
        else:
            items.append(("s", j))
    return _word_reduce(tuple(items))


def _word_reduce(w: tuple) -> tuple | None:
    for i in range(len(w) - 1):
        if w[i] == "b" and w[i + 1] == "b":
            return None
    return w


def word_degree(w: tuple) -> int:
    return sum(1 if it == "b" else it[1] for it in w)


def render_word(w: tuple) -> str:
    if not w:
        return "1"
    return " ".join("beta" if it == "b" else f"Sq^{it[1]}" for it in w)


class Term(NamedTuple):
    left: tuple
    word: tuple
    right: tuple

    def __str__(self):
        parts = []
        if self.left != ONE:
            parts.append(render_mono(self.left))
        parts.append(f"[{render_word(self.word)}]")
        if self.right != ONE:
            parts.append(render_mono(self.right))
        return " ".join(parts)


def _term_key(t: Term):
    return (word_degree(t.word), render_word(t.word),
            render_mono(t.right), render_mono(t.left))


class RewriteResult(NamedTuple):
    terms: tuple[Term, ...]
    rules: int
    assumption: str = FLAG_ASSUMPTION

    def __str__(self):
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"

    def right_coefficients_flagged(self) -> bool:
        return all(t.left == ONE and mono_flagged(t.right) for t in self.terms)

    def left_coefficients_flagged(self) -> bool:
        return all(t.right == ONE and mono_flagged(t.left) for t in self.terms)

    def to_records(self) -> list[dict]:
        return [
            {
                "left": render_mono(t.left),
                "word": render_word(t.word),
                "right": render_mono(t.right),
            }
            for t in self.terms
        ]


class _Counter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


def _push_right(c: tuple, w: tuple, r: tuple, log: _Counter) -> set:
    """All-right normal form of the product c * w * r, as a mod-2 set of
    (word, right coefficient) pairs.  Terminates because each recursive
    call strictly decreases the degree of the word still to the right of
    the moving coefficient."""
    if c == ONE or not w:
        return {(w, mono_mul(c, r))}
    log.n += 1
    head, rest = w[0], w[1:]
    out: set = set()
    if head == "b":
        # c beta = beta c + beta(c)
        for w2, r2 in _push_right(c, rest, r, log):
            if not (w2 and w2[0] == "b"):
                out ^= {(("b",) + w2, r2)}
        bc = beta_of(c)
        if bc is not None:
            out ^= _push_right(bc, rest, r, log)
    else:
        n = head[1] // 2
        for a in range(1, n + 1):
            b = n - a
            mid = word(2 * b)
            out ^= _push_right(sq_of(2 * a, c), mid + rest, r, log)
        for a in range(0, n):
            b = n - 1 - a
            mid = word(2 * b + 1)
            out ^= _push_right(
                mono_mul(TAU, sq_of(2 * a + 1, c)), mid + rest, r, log
            )
        for w2, r2 in _push_right(c, rest, r, log):
            out ^= {((head,) + w2, r2)}
    return out


def _push_left(l: tuple, w: tuple, c: tuple, log: _Counter) -> set:
    """Mirror of _push_right: all-left normal form of l * w * c as a mod-2
    set of (left coefficient, word) pairs."""
    if c == ONE or not w:
        return {(mono_mul(l, c), w)}
    log.n += 1
    last, rest = w[-1], w[:-1]
    out: set = set()
    if last == "b":
        # beta c = c beta + beta(c)
        for l2, w2 in _push_left(l, rest, c, log):
            if not (w2 and w2[-1] == "b"):
                out ^= {(l2, w2 + ("b",))}
        bc = beta_of(c)
        if bc is not None:
            out ^= _push_left(l, rest, bc, log)
    else:
        n = last[1] // 2
        for a in range(1, n + 1):
            b = n - a
            mid = word(2 * b)
            for l2, w2 in _push_left(l, rest, sq_of(2 * a, c), log):
                joined = _word_reduce(w2 + mid)
                if joined is not None:
                    out ^= {(l2, joined)}
        for a in range(0, n):
            b = n - 1 - a
            mid = word(2 * b + 1)
            for l2, w2 in _push_left(
                l, rest, mono_mul(TAU, sq_of(2 * a + 1, c)), log
            ):
                joined = _word_reduce(w2 + mid)
                if joined is not None:
                    out ^= {(l2, joined)}
        for l2, w2 in _push_left(l, rest, c, log):
            out ^= {(l2, w2 + (last,))}
    return out


def commute_right(n: int) -> RewriteResult:
    """Normal form of x * Sq^(2n) with every coefficient on the right."""
    if n < 1:
        raise ValueError("need n >= 1")
    log = _Counter()
    pairs = _push_right(X, word(2 * n), ONE, log)
    terms = tuple(sorted(
        (Term(ONE, w, r) for w, r in pairs), key=_term_key
    ))
    return RewriteResult(terms, log.n)


def commute_right_beta() -> RewriteResult:
    """The i = 1 Bockstein case: x beta = beta x + beta(x)."""
    log = _Counter()
    pairs = _push_right(X, ("b",), ONE, log)
    terms = tuple(sorted(
        (Term(ONE, w, r) for w, r in pairs), key=_term_key
    ))
    return RewriteResult(terms, log.n)


def commute_left(n: int) -> RewriteResult:
    """One unfolding of the identity read right to left: the normal form of
    Sq^(2n) * x with every coefficient on the left."""
    if n < 1:
        raise ValueError("need n >= 1")
    terms = [Term(X, word(2 * n), ONE)]
    for a in range(1, n + 1):
        b = n - a
        terms.append(Term(sq_of(2 * a, X), word(2 * b), ONE))
    for a in range(0, n):
        b = n - 1 - a
        terms.append(Term(mono_mul(TAU, sq_of(2 * a + 1, X)), word(2 * b + 1), ONE))
    return RewriteResult(tuple(sorted(terms, key=_term_key)), 1)


def commute_left_beta() -> RewriteResult:
    """beta x = x beta + beta(x)."""
    terms = (Term(X, ("b",), ONE), Term((("beta", X),), (), ONE))
    return RewriteResult(tuple(sorted(terms, key=_term_key)), 1)


def roundtrip_check(n: int) -> bool:
    """Push the right coefficients of commute_right(n) back to the left with
    the mirror identity set; the reduced sum must be exactly x * Sq^(2n)."""
    res = commute_right(n)
    log = _Counter()
    acc: set = set()
    for t in res.terms:
        acc ^= _push_left(t.left, t.word, t.right, log)
    return acc == {(X, word(2 * n))}


# ---------------------------------------------------------------------------
# Projective-space cohomology fixture: generators u:(1,1), v:(2,1),
# tau:(0,1), rho:(1,1), single relation u^2 = tau v + rho u.  Normal basis
# u^e v^j tau^a rho^b with e <= 1.  The closed variant sets rho = 0.

_GEN_BIDEG = {"u": (1, 1), "v": (2, 1), "tau": (0, 1), "rho": (1, 1)}

Mono = tuple[int, int, int, int]  # exponents (e, j, a, b) of (u, v, tau, rho)


def mono_bidegree(m: Mono) -> tuple[int, int]:
    e, j, a, b = m
    return (e + 2 * j + b, e + j + a + b)


def render_rp_mono(m: Mono) -> str:
    e, j, a, b = m
    parts = []
    for name, exp in (("u", e), ("v", j), ("tau", a), ("rho", b)):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return " ".join(parts) if parts else "1"


def _normalize_rp(m: Mono, closed: bool) -> set[Mono]:
    """Reduce u-exponent below 2 through the relation; mod-2 set of normal
    monomials."""
    e, j, a, b = m
    if closed and b:
        return set()
    if e < 2:
        return {m}
    # u^e = u^(e-2) (tau v + rho u)
    out: set[Mono] = set()
    out ^= _normalize_rp((e - 2, j + 1, a + 1, b), closed)
    if not closed:
        out ^= _normalize_rp((e - 1, j, a, b + 1), closed)
    return out


def _rp_mono_mul(m1: Mono, m2: Mono, closed: bool) -> set[Mono]:
    raw = tuple(x + y for x, y in zip(m1, m2))
    return _normalize_rp(raw, closed)


def _rp_sq1(m: Mono, closed: bool) -> set[Mono]:
    """Derivation with Sq1(u) = v, Sq1(tau) = rho (0 in the closed
    variant), Sq1(v) = Sq1(rho) = 0, by the Leibniz rule on the normal
    form."""
    e, j, a, b = m
    out: set[Mono] = set()
    if e % 2:
        out ^= {(e - 1, j + 1, a, b)}
    if a % 2 and not closed:
        out ^= _normalize_rp((e, j, a - 1, b + 1), closed)
    return out


class RPRing(NamedTuple):
    variant: str
    maxdeg: int
    basis: tuple[Mono, ...]
    dims: dict[tuple[int, int], int]
    sq1: dict[Mono, frozenset[Mono]]
    relation_certificate: bool
    sq1_squared_zero: bool

    def dim(self, p: int, w: int) -> int:
        return self.dims.get((p, w), 0)

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "maxdeg": self.maxdeg,
            "dims": {
                f"({p},{w})": n for (p, w), n in sorted(self.dims.items())
            },
            "sq1": {
                render_rp_mono(m): sorted(render_rp_mono(t) for t in ts)
                for m, ts in sorted(self.sq1.items())
            },
            "relation_certificate": self.relation_certificate,
            "sq1_squared_zero": self.sq1_squared_zero,
        }


def _rp_relation_certificate(closed: bool) -> bool:
    """Sq1 applied to u*u + tau*v + rho*u through the Leibniz rule on the
    free monomials reduces to zero in the normal form."""
    sq1_gen = {"u": {"v": 1}, "v": {}, "tau": ({} if closed else {"rho": 1}),
               "rho": {}}
    exp_index = {"u": 0, "v": 1, "tau": 2, "rho": 3}

    def leibniz(factors: list[str]) -> set[tuple[int, int, int, int]]:
        out: set = set()
        for i, f in enumerate(factors):
            for g in sq1_gen[f]:
                raw = [0, 0, 0, 0]
                for k, other in enumerate(factors):
                    raw[exp_index[other if k != i else g]] += 1
                out ^= {tuple(raw)}
        return out

    total: set[Mono] = set()
    relation = [["u", "u"], ["tau", "v"]] + ([] if closed else [["rho", "u"]])
    for term in relation:
        for raw in leibniz(term):
            total ^= _normalize_rp(raw, closed)
    return total == set()


def rp_ring(maxdeg: int, variant: str = "real") -> RPRing:
    """The bigraded ring on u, v, tau, rho with u^2 = tau v + rho u, its
    dimension table on the grid 0 <= p, w <= maxdeg, the Sq1 action table,
    and the well-definedness certificates.

    The basis is grown multiplicatively from 1 by the four generators, so
    the table is an independent check against direct monomial enumeration.
    """
    if maxdeg < 0:
        raise ValueError("need maxdeg >= 0")
    if variant not in ("real", "closed"):
        raise ValueError(f"unknown variant {variant!r}")
    closed = variant == "closed"

    gens = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
    if not closed:
        gens.append((0, 0, 0, 1))

    def in_grid(m: Mono) -> bool:
        p, w = mono_bidegree(m)
        return 0 <= p <= maxdeg and 0 <= w <= maxdeg

    basis: set[Mono] = {(0, 0, 0, 0)}
    frontier = [(0, 0, 0, 0)]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                for prod in _rp_mono_mul(m, g, closed):
                    if in_grid(prod) and prod not in basis:
                        basis.add(prod)
                        nxt.append(prod)
        frontier = nxt

    ordered = tuple(sorted(basis))
    dims: dict[tuple[int, int], int] = {}
    for m in ordered:
        key = mono_bidegree(m)
        dims[key] = dims.get(key, 0) + 1

    sq1 = {}
    squared_zero = True
    for m in ordered:
        img = _rp_sq1(m, closed)
        sq1[m] = frozenset(img)
        second: set[Mono] = set()
        for t in img:
            second ^= _rp_sq1(t, closed)
        if second:
            squared_zero = False

    return RPRing(
        variant, maxdeg, ordered, dims, sq1,
        _rp_relation_certificate(closed), squared_zero,
    )


# ---------------------------------------------------------------------------
# Moore-object homology fixture: the rank-2 free module on 1:(0,0), x:(1,0)
# with the image classes of the comparison map in two models, and the dual
# operation Sq1(1) = x.

_TARGET_BIDEG = {"tau0": (1, 0), "rho": (-1, -1), "xi1": (2, 1)}

_MODELS = {
    "standard": {"1": (("1",),), "x": (("tau0",),)},
    "xu": {"1": (("1",),), "x": (("tau0",), ("rho", "xi1"))},
}


class MooreFixture(NamedTuple):
    model: str
    classes: dict[str, tuple[int, int]]
    alpha: dict[str, tuple[tuple[str, ...], ...]]
    sq1: dict[str, tuple[str, ...]]
    homogeneous: bool

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "classes": {k: list(v) for k, v in self.classes.items()},
            "alpha": {
                k: [" ".join(mono) for mono in v] for k, v in self.alpha.items()
            },
            "sq1": {k: list(v) for k, v in self.sq1.items()},
            "homogeneous": self.homogeneous,
        }


def moore_homology(model: str) -> MooreFixture:
    if model not in _MODELS:
        raise ValueError(f"unknown model {model!r}; choose standard or xu")
    classes = {"1": (0, 0), "x": (1, 0)}
    alpha = _MODELS[model]

    def mono_deg(mono: tuple[str, ...]) -> tuple[int, int]:
        p = w = 0
        for g in mono:
            if g == "1":
                continue
            gp, gw = _TARGET_BIDEG[g]
            p += gp
            w += gw
        return (p, w)

    homogeneous = all(
        mono_deg(mono) == classes[src]
        for src, monos in alpha.items()
        for mono in monos
    )
    sq1 = {"1": ("x",), "x": ()}
    return MooreFixture(model, classes, dict(alpha), sq1, homogeneous)
