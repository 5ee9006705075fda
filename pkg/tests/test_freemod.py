import sys

sys.path.append(".")

import pytest

from steenres.core.engine import ZERO_SIGNATURE
from steenres.core.exceptions import NotHomogeneous, ParamError
from steenres.core.freemod import (
    FreeElement, GeneratorRef, MatrixCache, apply_differential, differential_matrix, element_degree,
    embed, extract_component, full_basis, slice, slice_coordinates,
)
from steenres.core.gf2 import GF2Vector
from steenres.core.resolution import Resolution
from steenres.core.subalgebra import Signature, enumerate_signatures, make_subalgebra, preset

from factorys import element_factory

PRESETS = ["A(0)", "A(1)", "E(Sq1,Sq(0,1))", "F(1)", "F'(1)"]

G0 = GeneratorRef(0, 0, 0)


def bidegrees(res, top=8):
    for s in range(1, res.max_s):
        for t in range(s, min(top, res.frontier_of(s - 1)) + 1):
            yield s, t


class TestFreeElement:
    def test_cancel(self):
        x = FreeElement([((1,), G0), ((1,), G0), ((2,), G0)])
        assert x == FreeElement([((2,), G0)])
        assert not (x + x)
        assert len(x) == 1

    def test_canonical_terms(self):
        assert FreeElement([((1, 0), G0)]) == FreeElement([((1,), G0)])

    def test_format(self):
        g = GeneratorRef(1, 0, 1)
        x = FreeElement([((0, 1), g), ((3,), g)])
        assert x.format() == "Sq(3)*g(1,0) + Sq(0,1)*g(1,0)"
        assert FreeElement().format() == "0"

    def test_generator(self):
        x = FreeElement.generator(G0)
        assert ((), G0) in x
        assert x.generators() == {G0}


class TestElementDegree:
    def test_examples(self):
        assert element_degree(FreeElement([((), GeneratorRef(1, 0, 2))])) == (1, 2)
        assert element_degree(FreeElement([((1,), G0)])) == (0, 1)

    def test_mixed(self):
        with pytest.raises(NotHomogeneous):
            element_degree(FreeElement([((1,), G0), ((2,), G0)]))
        with pytest.raises(NotHomogeneous):
            element_degree(FreeElement([((), G0), ((), GeneratorRef(1, 0, 0))]))

    def test_zero(self):
        with pytest.raises(NotHomogeneous):
            element_degree(FreeElement())


class TestSlice:
    @pytest.mark.parametrize("t", range(0, 21))
    def test_f1_zero_slice_one_dimensional(self, t):
        res = Resolution()
        assert len(slice(res, preset("F(1)", t), ZERO_SIGNATURE, 0, t)) == 1

    def test_empty(self):
        res = Resolution()
        assert len(full_basis(res, 3, 2)) == 0
        assert len(slice(res, make_subalgebra("A", 1), ZERO_SIGNATURE, 2, 5)) == 0

    def test_a0_degree_three(self):
        res = Resolution()
        a0 = make_subalgebra("A", 0)
        zero = slice(res, a0, ZERO_SIGNATURE, 0, 3)
        one = slice(res, a0, Signature((1,), 1), 0, 3)
        assert zero.basis == (((0, 1), G0),)
        assert one.basis == (((3,), G0),)
        assert len(zero) + len(one) == len(full_basis(res, 0, 3)) == 2

    @pytest.mark.parametrize("name", PRESETS)
    def test_partition(self, name, gsmall):
        res = gsmall.resolution
        for s, t in bidegrees(res):
            b = preset(name, t)
            total = sum(len(slice(res, b, sig, s, t)) for sig in enumerate_signatures(b, t))
            assert total == len(full_basis(res, s, t)), (s, t)


class TestDifferentialMatrix:
    def test_c0_has_no_rows(self):
        res = Resolution()
        m, domain, codomain = differential_matrix(res, None, None, 0, 4)
        assert m.rows == 0
        assert m.cols == len(domain) == len(full_basis(res, 0, 4))
        assert len(codomain) == 0

    def test_sq1_column_is_zero(self, gsmall):
        res = gsmall.resolution
        a0 = make_subalgebra("A", 0)
        h0 = res.generators_in_degree(1, 1)[0]
        assert h0.differential == FreeElement([((1,), G0)])
        m, domain, _ = differential_matrix(res, a0, Signature((1,), 1), 1, 2)
        j = domain.index[((1,), h0.ref)]
        assert m.column(j).is_zero()

    @pytest.mark.parametrize("name", PRESETS + [None])
    def test_matches_brute_force(self, name, gsmall):
        res = gsmall.resolution
        for s, t in bidegrees(res, top=7):
            b = None if name is None else preset(name, t)
            sigs = [None] if b is None else enumerate_signatures(b, t)
            for sig in sigs:
                m, domain, codomain = differential_matrix(res, b, sig, s, t)
                assert m.shape == (len(codomain), len(domain))
                for j, term in enumerate(domain.basis):
                    image = apply_differential(res, FreeElement([term]))
                    assert m.column(j) == slice_coordinates(codomain, image), (name, s, t, sig, term)


class TestExtractEmbed:
    def test_zero(self):
        res = Resolution()
        sl = full_basis(res, 0, 3)
        assert slice_coordinates(sl, FreeElement()).is_zero()

    def test_a0_component(self):
        res = Resolution()
        a0 = make_subalgebra("A", 0)
        sl = slice(res, a0, Signature((1,), 1), 0, 3)
        x = FreeElement([((3,), G0), ((0, 1), G0)])
        assert embed(sl, slice_coordinates(sl, x)) == FreeElement([((3,), G0)])

    @pytest.mark.parametrize("name", PRESETS)
    def test_reassemble(self, name, gsmall):
        res = gsmall.resolution
        for s, t in bidegrees(res):
            x = element_factory(res, s, t)
            if x is None:
                continue
            b = preset(name, t)
            total = FreeElement()
            for sig in enumerate_signatures(b, t):
                sl = slice(res, b, sig, s, t)
                total = total + embed(sl, slice_coordinates(sl, x))
            assert total == x

    def test_extract_component_by_signature(self):
        res = Resolution()
        a0 = make_subalgebra("A", 0)
        sig = Signature((1,), 1)
        x = FreeElement([((3,), G0), ((0, 1), G0)])
        v = extract_component(a0, x, sig, res)
        assert embed(slice(res, a0, sig, 0, 3), v) == FreeElement([((3,), G0)])
        assert v == slice_coordinates(slice(res, a0, sig, 0, 3), x)

    def test_extract_component_of_zero(self):
        res = Resolution()
        a0 = make_subalgebra("A", 0)
        sig = Signature((1,), 1)
        assert extract_component(a0, FreeElement(), sig, res).is_zero()
        v = extract_component(a0, FreeElement(), sig, res, bidegree=(0, 3))
        assert v.is_zero()
        assert len(v) == len(slice(res, a0, sig, 0, 3))

    @pytest.mark.parametrize("name", PRESETS)
    def test_extract_component_reassemble(self, name, gsmall):
        res = gsmall.resolution
        for s, t in bidegrees(res):
            x = element_factory(res, s, t)
            if x is None:
                continue
            b = preset(name, t)
            total = FreeElement()
            for sig in enumerate_signatures(b, t):
                total = total + embed(slice(res, b, sig, s, t), extract_component(b, x, sig, res))
            assert total == x
        x = element_factory(res, 1, 3)
        assert embed(full_basis(res, 1, 3), extract_component(None, x, None, res)) == x

    def test_wrong_bidegree(self):
        res = Resolution()
        sl = full_basis(res, 0, 3)
        with pytest.raises(NotHomogeneous):
            slice_coordinates(sl, FreeElement([((1,), G0)]))

    def test_embed_length(self):
        res = Resolution()
        with pytest.raises(ParamError):
            embed(full_basis(res, 0, 3), GF2Vector(5))


class TestApplyDifferential:
    def test_generator(self, gsmall):
        res = gsmall.resolution
        for gen in res.generators(2):
            assert apply_differential(res, FreeElement.generator(gen.ref)) == gen.differential

    def test_sq1_h0(self, gsmall):
        res = gsmall.resolution
        h0 = res.generators_in_degree(1, 1)[0]
        assert not apply_differential(res, FreeElement([((1,), h0.ref)]))

    def test_d_squared(self, gsmall):
        res = gsmall.resolution
        for s, t in bidegrees(res):
            if s < 2:
                continue
            x = element_factory(res, s, t)
            if x is not None:
                assert not apply_differential(res, apply_differential(res, x))


class TestMatrixCache:
    def test_hit_and_miss(self, gsmall):
        res = gsmall.resolution
        cache = MatrixCache(4)
        first = differential_matrix(res, None, None, 1, 4, cache)
        second = differential_matrix(res, None, None, 1, 4, cache)
        assert first is second
        assert (cache.hits, cache.misses) == (1, 1)

    def test_key_tracks_generators(self):
        res = Resolution()
        before = MatrixCache.key(res, None, None, 1, 1)
        res.add_generator(1, 1, FreeElement([((1,), G0)]))
        assert MatrixCache.key(res, None, None, 1, 1) != before

    def test_eviction(self):
        cache = MatrixCache(2)
        for k in range(3):
            cache.put(k, k)
        assert len(cache) == 2
        assert cache.get(0) is None
        assert cache.get(2) == 2

    def test_disabled(self):
        cache = MatrixCache(0)
        cache.put("k", 1)
        assert len(cache) == 0

    def test_negative(self):
        with pytest.raises(ParamError):
            MatrixCache(-1)
