"""Point-agreement quotient and the equivalence with bare partial functions."""

import itertools

import numpy as np

from revcat import classical as cl
from revcat import extensional as ex
from revcat import garbage as gb
from revcat import quantum as qu
from revcat.classical import FinObj, PartialFn
from revcat.garbage import ISO, PINJ, AuxMorphism

from test_garbage import pinj, successor_pair


def all_pfns(a, b):
    return cl.all_partial_fns(FinObj.of_size(a), FinObj.of_size(b))


class TestExtEquiv:
    def test_successor_pair_identified(self):
        # The pair that the garbage-sensitive decider separates collapses here.
        f1, f2 = successor_pair()
        assert gb.aux_equiv(f1, f2) is None
        assert ex.ext_equiv(f1, f2)

    def test_matches_point_agreement_exhaustively(self):
        # ext_equiv(f, g) iff f o p ~ g o p for every global point p, where the
        # comparison of composites is the garbage-sensitive one on points.
        import oracles

        ms = oracles.enumerate_cores(2, 2, 1)
        pts = gb.points_of(2)
        for f in ms:
            for g in ms:
                agree = all(
                    gb.point_value(gb.aux_compose(f, p))
                    == gb.point_value(gb.aux_compose(g, p))
                    for p in pts
                )
                assert ex.ext_equiv(f, g) == agree

    def test_accepts_wrapped_and_raw(self):
        f1, f2 = successor_pair()
        assert ex.ext_equiv(ex.ExtMorphism(f1), f2)
        assert ex.ext_equiv(ex.ExtMorphism(f1), ex.ExtMorphism(f2))

    def test_iso_base_is_choi_equality(self):
        rng = np.random.default_rng(2)
        v = qu.haar_isometry(4, 2, rng)
        m = AuxMorphism(ISO, v, 2, 2)
        assert ex.ext_equiv(m, m)
        assert not ex.ext_equiv(m, gb.aux_id(2, ISO))


class TestPfnEquivalence:
    def test_functor_on_successor(self):
        f = PartialFn(FinObj.of_size(3), FinObj.of_size(4),
                      tuple((x, x + 1) for x in range(3)))
        m = ex.pfn_functor(f)
        assert ex.pfn_normalize(m).same_table(f)

    def test_roundtrip_exhaustive(self):
        # normalize o functor = id on tables, sizes up to 5 x 3.
        for a in range(6):
            for b in range(4):
                for f in all_pfns(a, b):
                    assert ex.pfn_normalize(ex.pfn_functor(f)).same_table(f)

    def test_functor_preserves_composition(self):
        for f in all_pfns(2, 2):
            for g in all_pfns(2, 2):
                lhs = gb.aux_compose(ex.pfn_functor(g).rep, ex.pfn_functor(f).rep)
                rhs = ex.pfn_functor(cl.compose(g, f)).rep
                assert ex.ext_equiv(lhs, rhs)

    def test_functor_preserves_identity(self):
        for n in range(4):
            m = ex.pfn_functor(cl.identity(FinObj.of_size(n))).rep
            assert ex.ext_equiv(m, gb.aux_id(n))

    def test_other_roundtrip_exhaustive(self):
        # functor o normalize = id up to the quotient, over all classes of
        # small garbage-carrying morphisms.
        import oracles

        for m in oracles.enumerate_cores(2, 2, 2):
            back = ex.pfn_functor(ex.pfn_normalize(m)).rep
            assert ex.ext_equiv(back, m)

    def test_functor_injective_on_tables(self):
        fs = list(all_pfns(2, 3))
        for f, g in itertools.combinations(fs, 2):
            assert not ex.ext_equiv(ex.pfn_functor(f), ex.pfn_functor(g))


class TestCongruence:
    def test_sampler_passes(self):
        rep = ex.ext_congruence_check(trials=50, seed=3)
        assert rep.passed, rep.detail

    def test_compose_respects_quotient_exhaustive(self):
        import oracles

        ms = oracles.enumerate_cores(2, 2, 1)
        g = AuxMorphism(PINJ, pinj(2, 4, [(0, 2), (1, 1)]), 2, 2)
        for m1 in ms:
            for m2 in ms:
                if not ex.ext_equiv(m1, m2):
                    continue
                assert ex.ext_equiv(gb.aux_compose(g, m1), gb.aux_compose(g, m2))
                assert ex.ext_equiv(gb.aux_tensor(m1, g), gb.aux_tensor(m2, g))
                assert ex.ext_equiv(gb.aux_ridm(m1), gb.aux_ridm(m2))


class TestTomography:
    def test_family_spans(self):
        # The family contains d*d states whose span is all of the operator
        # space: any matrix is a combination of them.
        for d in (2, 3):
            fam = ex.tomographic_family(d)
            assert len(fam) == d * d
            stacked = np.stack([s.reshape(-1) for s in fam])
            assert np.linalg.matrix_rank(stacked) == d * d

    def test_family_members_are_states(self):
        for s in ex.tomographic_family(3):
            assert abs(np.trace(s) - 1) < 1e-12
            assert np.min(np.linalg.eigvalsh((s + s.conj().T) / 2)) > -1e-12

    def test_agreement_detects_difference(self):
        c1 = qu.identity_channel(2)
        c2 = qu.dephasing_channel(2)
        assert not ex.channels_agree_on_family(c1, c2)

    def test_wellpointed_report(self):
        for d in (2, 3):
            rep = ex.wellpointed_check_cptp(d, trials=30, seed=4)
            assert rep.passed, rep.detail
