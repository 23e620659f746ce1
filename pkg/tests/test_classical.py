"""Partial functions, partial injections, and their monoidal structure."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from revcat import classical as cl
from revcat.classical import FinObj, PartialFn, PartialInj

import oracles


def pfn(a, b, graph):
    return PartialFn(FinObj.of_size(a), FinObj.of_size(b), tuple(graph))


def pinj(a, b, graph):
    return PartialInj(FinObj.of_size(a), FinObj.of_size(b), tuple(graph))


@st.composite
def partial_fns(draw, max_size=5):
    a = draw(st.integers(0, max_size))
    b = draw(st.integers(0, max_size))
    graph = []
    for x in range(a):
        if b > 0 and draw(st.booleans()):
            graph.append((x, draw(st.integers(0, b - 1))))
    return pfn(a, b, graph)


class TestCompose:
    def test_basic(self):
        f = pfn(2, 2, [(0, 1)])
        g = pfn(2, 2, [(1, 0)])
        assert cl.compose(g, f).graph == ((0, 0),)

    def test_undefined_midpoint(self):
        f = pfn(2, 2, [(0, 1)])
        g = pfn(2, 2, [(0, 0)])
        assert cl.compose(g, f).graph == ()

    def test_object_mismatch(self):
        with pytest.raises(cl.CompositionError):
            cl.compose(pfn(3, 3, []), pfn(2, 2, []))

    def test_agrees_with_relational_product_exhaustively(self):
        objs = [FinObj.of_size(n) for n in range(3)]
        for a, b, c in itertools.product(objs, repeat=3):
            for f in cl.all_partial_fns(a, b):
                for g in cl.all_partial_fns(b, c):
                    expected = oracles.relational_compose(g, f)
                    assert set(cl.compose(g, f).graph) == expected

    def test_preserves_injectivity(self):
        f = pinj(2, 2, [(0, 1), (1, 0)])
        g = pinj(2, 2, [(0, 0)])
        assert isinstance(cl.compose(g, f), PartialInj)


class TestRidm:
    def test_total_gives_identity(self):
        f = pfn(3, 3, [(0, 1), (1, 2), (2, 0)])
        assert cl.ridm(f).graph == cl.identity(f.dom).graph

    def test_empty(self):
        assert cl.ridm(pfn(3, 3, [])).graph == ()

    def test_partial_identity_on_domain(self):
        # Defined exactly where f is, acting as the identity there.
        f = pfn(3, 3, [(0, 1)])
        assert cl.ridm(f).graph == ((0, 0),)

    def test_idempotent_and_absorbing(self):
        f = pfn(4, 3, [(0, 2), (2, 1)])
        r = cl.ridm(f)
        assert cl.compose(r, r).graph == r.graph
        assert cl.compose(f, r).graph == f.graph


class TestDagger:
    def test_transpose(self):
        assert cl.dagger(pinj(3, 3, [(0, 1), (1, 2)])).graph == ((1, 0), (2, 1))

    def test_empty(self):
        assert cl.dagger(pinj(2, 2, [])).graph == ()

    def test_regularity_exhaustive(self):
        for a in range(4):
            for b in range(4):
                aa, bb = FinObj.of_size(a), FinObj.of_size(b)
                for f in cl.all_partial_injections(aa, bb):
                    fd = cl.dagger(f)
                    assert cl.compose(cl.compose(f, fd), f).graph == f.graph
                    assert cl.compose(fd, f).graph == cl.ridm(f).graph
                    assert cl.compose(f, fd).graph == cl.ridm(fd).graph


class TestTensor:
    def test_identity_tensor(self):
        i2 = cl.identity(FinObj.of_size(2))
        t = cl.tensor_prod(i2, i2)
        assert t.graph == tuple((i, i) for i in range(4))

    def test_with_empty(self):
        f = pfn(2, 2, [(0, 0)])
        assert cl.tensor_prod(f, pfn(2, 2, [])).graph == ()

    def test_mixed_radix_domain(self):
        f = pfn(2, 2, [(0, 1)])
        g = pfn(2, 2, [(0, 0), (1, 1)])
        t = cl.tensor_prod(f, g)
        # Defined exactly on (0,0) and (0,1) in row-major flat indexing.
        assert t.graph == ((0, 2), (1, 3))

    def test_restriction_bifunctor(self):
        f = pfn(3, 2, [(1, 0)])
        g = pfn(2, 2, [(0, 1), (1, 0)])
        lhs = cl.ridm(cl.tensor_prod(f, g))
        rhs = cl.tensor_prod(cl.ridm(f), cl.ridm(g))
        assert lhs.graph == rhs.graph


class TestDirectSum:
    def test_zero_right_unit(self):
        f = pinj(2, 3, [(0, 1)])
        z = cl.empty_map(cl.ZERO, cl.ZERO)
        assert cl.direct_sum(f, z).same_table(f)

    def test_identities_add(self):
        i1 = cl.identity(FinObj.of_size(1))
        assert cl.direct_sum(i1, i1).graph == ((0, 0), (1, 1))

    def test_injectivity_preserved_exhaustive(self):
        objs = [FinObj.of_size(n) for n in range(3)]
        for a, b in itertools.product(objs, repeat=2):
            for f in cl.all_partial_injections(a, b):
                for g in cl.all_partial_injections(a, b):
                    assert isinstance(cl.direct_sum(f, g), PartialInj)


class TestCoherence:
    def test_runit_identity(self):
        p = cl.coherence("runit", (4,))
        assert p.graph == tuple((i, i) for i in range(4))

    def test_symm_2x3(self):
        p = cl.coherence("symm", (2, 3))
        for x in range(2):
            for y in range(3):
                assert p(x * 3 + y) == y * 2 + x

    def test_interchange_2222(self):
        p = cl.coherence("interchange", (2, 2, 2, 2))
        assert p.is_total() and p.is_injective() and p.dom.size == 16
        for idx in range(16):
            xb, xe, yb, ye = oracles.mixed_radix_unrank(idx, (2, 2, 2, 2))
            expected = oracles.mixed_radix_rank((xb, yb, xe, ye), (2, 2, 2, 2))
            assert p(idx) == expected

    def test_pentagon_hexagon_small_shapes(self):
        # Associators are identities, so the pentagon is trivial; the hexagon
        # reduces to gamma_{A(x)B,C} = (gamma_{A,C} (x) id) o (id (x) gamma_{B,C})
        # on flat indices.
        for a, b, c in itertools.product(range(1, 4), repeat=3):
            lhs = cl.coherence("symm", (a * b, c))
            step1 = cl.tensor_prod(
                cl.identity(FinObj.of_size(a)), cl.coherence("symm", (b, c))
            )
            step2 = cl.tensor_prod(
                cl.coherence("symm", (a, c)), cl.identity(FinObj.of_size(b))
            )
            rhs = cl.compose(step2, step1)
            assert lhs.same_table(rhs)
            # gamma is its own inverse after swapping arguments
            back = cl.coherence("symm", (c, a * b))
            assert cl.compose(back, lhs).same_table(cl.identity(lhs.dom))


class TestBennett:
    def test_constant_function(self):
        f = pfn(2, 1, [(0, 0), (1, 0)])
        b = cl.bennett(f)
        assert b.graph == ((0, 0), (1, 1))  # (0,0) and (0,1) in B x A
        assert b.is_injective()

    def test_identity_gives_diagonal(self):
        f = cl.identity(FinObj.of_size(3))
        b = cl.bennett(f)
        assert b.graph == tuple((x, x * 3 + x) for x in range(3))

    def test_empty(self):
        assert cl.bennett(pfn(2, 2, [])).graph == ()

    @given(partial_fns())
    def test_injective_and_projects_back(self, f):
        b = cl.bennett(f)
        assert b.is_injective()
        assert cl.ridm(b).graph == cl.ridm(f).graph
        n = f.dom.size
        recovered = tuple((x, y // n) for x, y in b.graph)
        assert recovered == f.graph


class TestPartialIso:
    def test_bijection_accepted(self):
        assert cl.is_partial_iso(pfn(2, 2, [(0, 1), (1, 0)])) is not None

    def test_noninjective_rejected(self):
        assert cl.is_partial_iso(pfn(2, 1, [(0, 0), (1, 0)])) is None

    def test_agrees_with_inverse_search_exhaustive(self):
        for a in range(4):
            for b in range(4):
                aa, bb = FinObj.of_size(a), FinObj.of_size(b)
                for f in cl.all_partial_fns(aa, bb):
                    found = oracles.search_partial_inverse(f)
                    assert (cl.is_partial_iso(f) is not None) == (found is not None)


class TestJson:
    @given(partial_fns())
    def test_roundtrip(self, f):
        assert PartialFn.from_json(f.to_json()) == f

    def test_sorted_no_duplicates(self):
        f = PartialFn(FinObj.of_size(3), FinObj.of_size(3), ((2, 0), (0, 1)))
        assert f.to_json()["graph"] == [[0, 1], [2, 0]]
