"""Mod-2 operator rewriting with coefficient bookkeeping, the bigraded
projective-space ring, and the Moore-object fixtures."""

from __future__ import annotations

import itertools

import pytest

from motalg import steenrod as st


# ---------------------------------------------------------------------------
# words

def test_word_normalization():
    assert st.word(1) == ("b",)
    assert st.word(2) == (("s", 2),)
    assert st.word(3) == ("b", ("s", 2))
    assert st.word(2, 2) == (("s", 2), ("s", 2))
    assert st.word(0) == ()
    assert st.word(1, 1) is None  # beta beta = 0
    with pytest.raises(ValueError):
        st.word(-1)


def test_word_degree_and_rendering():
    assert st.word_degree(st.word(3)) == 3
    assert st.word_degree(()) == 0
    assert st.render_word(st.word(5)) == "beta Sq^4"
    assert st.render_word(()) == "1"


def test_formal_operator_atoms():
    assert st.sq_of(0, st.X) == st.X
    assert st.render_mono(st.sq_of(2, st.X)) == "Sq^2(x)"
    assert st.beta_of(st.beta_of(st.X)) is None
    assert st.render_mono(st.mono_mul(st.TAU, st.sq_of(1, st.X))) == "Sq^1(x)*tau"
    assert st.render_mono(st.ONE) == "1"


# ---------------------------------------------------------------------------
# commuting coefficients across operator words

def test_commute_right_smallest_case_is_frozen():
    res = st.commute_right(1)
    assert [str(t) for t in res.terms] == [
        "[1] Sq^2(x)",
        "[1] beta(Sq^1(x)*tau)",
        "[beta] Sq^1(x)*tau",
        "[Sq^2] x",
    ]
    assert res.rules == 2
    assert res.right_coefficients_flagged()
    assert str(res) == (
        "[1] Sq^2(x) + [1] beta(Sq^1(x)*tau) + [beta] Sq^1(x)*tau + [Sq^2] x"
    )


def test_commute_left_smallest_case_is_frozen():
    res = st.commute_left(1)
    assert [str(t) for t in res.terms] == [
        "Sq^2(x) [1]",
        "Sq^1(x)*tau [beta]",
        "x [Sq^2]",
    ]
    assert res.rules == 1
    assert res.left_coefficients_flagged()


def test_bockstein_cases():
    res = st.commute_right_beta()
    assert [str(t) for t in res.terms] == ["[1] beta(x)", "[beta] x"]
    res = st.commute_left_beta()
    assert [str(t) for t in res.terms] == ["beta(x) [1]", "x [beta]"]


@pytest.mark.parametrize("n", range(1, 5))
def test_flag_closure_in_both_directions(n):
    assert st.commute_right(n).right_coefficients_flagged()
    assert st.commute_left(n).left_coefficients_flagged()
    # One unfolding on the left gives exactly 2n + 1 terms.
    assert len(st.commute_left(n).terms) == 2 * n + 1


@pytest.mark.parametrize("n", range(1, 6))
def test_pushing_coefficients_back_recovers_the_input(n):
    assert st.roundtrip_check(n)


def test_commute_rejects_nonpositive_index():
    with pytest.raises(ValueError):
        st.commute_right(0)
    with pytest.raises(ValueError):
        st.commute_left(0)


def test_rewrite_records_and_assumption():
    res = st.commute_right(1)
    recs = res.to_records()
    assert recs[0] == {"left": "1", "word": "1", "right": "Sq^2(x)"}
    assert all(set(r) == {"left", "word", "right"} for r in recs)
    assert "assumed" in res.assumption


# ---------------------------------------------------------------------------
# the projective-space ring

def brute_force_dims(maxdeg, closed):
    # Normal monomials u^e v^j tau^a rho^b with e <= 1 (and b = 0 when
    # closed), counted by bidegree over the grid.
    dims = {}
    for e, j, a, b in itertools.product(
        range(2), range(maxdeg + 1), range(maxdeg + 1),
        range(1 if closed else maxdeg + 1),
    ):
        p, w = e + 2 * j + b, e + j + a + b
        if 0 <= p <= maxdeg and 0 <= w <= maxdeg:
            dims[(p, w)] = dims.get((p, w), 0) + 1
    return dims


def test_rp_small_dimension_table_is_frozen():
    rp = st.rp_ring(2, "real")
    assert dict(rp.dims) == {
        (0, 0): 1, (0, 1): 1, (0, 2): 1,
        (1, 1): 2, (1, 2): 2,
        (2, 1): 1, (2, 2): 3,
    }
    assert st.rp_ring(2, "closed").dims == {
        (0, 0): 1, (0, 1): 1, (0, 2): 1,
        (1, 1): 1, (1, 2): 1,
        (2, 1): 1, (2, 2): 1,
    }


@pytest.mark.parametrize("variant", ["real", "closed"])
@pytest.mark.parametrize("maxdeg", [0, 1, 3, 6])
def test_rp_dims_match_direct_monomial_enumeration(maxdeg, variant):
    rp = st.rp_ring(maxdeg, variant)
    assert dict(rp.dims) == brute_force_dims(maxdeg, variant == "closed")


def test_rp_certificates_and_generator_action():
    for variant in ("real", "closed"):
        rp = st.rp_ring(5, variant)
        assert rp.relation_certificate
        assert rp.sq1_squared_zero
    rp = st.rp_ring(4, "real")
    u, v, tau = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)
    assert rp.sq1[u] == frozenset({v})
    assert rp.sq1[tau] == frozenset({(0, 0, 0, 1)})  # rho
    assert rp.sq1[v] == frozenset()
    closed = st.rp_ring(4, "closed")
    assert closed.sq1[tau] == frozenset()
    assert all(m[3] == 0 for m in closed.basis)


def test_rp_dim_accessor_and_dict_form():
    rp = st.rp_ring(2, "real")
    assert rp.dim(2, 2) == 3 and rp.dim(5, 5) == 0
    d = rp.to_dict()
    assert d["dims"]["(2,2)"] == 3
    assert d["sq1"]["u"] == ["v"]
    assert d["relation_certificate"] is True


def test_rp_rejects_bad_arguments():
    with pytest.raises(ValueError):
        st.rp_ring(-1)
    with pytest.raises(ValueError):
        st.rp_ring(3, "complex")


def test_rp_mono_rendering():
    assert st.render_rp_mono((0, 0, 0, 0)) == "1"
    assert st.render_rp_mono((1, 2, 1, 0)) == "u v^2 tau"
    assert st.mono_bidegree((1, 1, 0, 0)) == (3, 2)


# ---------------------------------------------------------------------------
# Moore-object fixtures

def test_moore_models():
    std = st.moore_homology("standard")
    assert std.classes == {"1": (0, 0), "x": (1, 0)}
    assert std.alpha["x"] == (("tau0",),)
    assert std.homogeneous

    xu = st.moore_homology("xu")
    assert xu.alpha["x"] == (("tau0",), ("rho", "xi1"))
    assert xu.homogeneous
    assert xu.to_dict()["alpha"]["x"] == ["tau0", "rho xi1"]

    with pytest.raises(ValueError, match="unknown model"):
        st.moore_homology("bogus")
