"""Shipped category instances for the law-checking engine.

Classical instances enumerate their hom-sets when the object-size bound is
small (<= 3), enabling exhaustive law checks; larger bounds and the quantum
instances are sampled randomly.
"""

from __future__ import annotations

import numpy as np

from . import classical as cl
from . import extensional as ex
from . import garbage as gb
from . import quantum as qu
from .classical import FinObj, PartialFn, PartialInj
from .garbage import AuxMorphism, PINJ
from .lawcheck import CategoryInstance


def _random_graph(rng, n: int, m: int, injective: bool) -> tuple:
    if m == 0:
        return ()
    pairs = []
    used = set()
    for x in range(n):
        if rng.random() < 0.75:
            y = int(rng.integers(0, m))
            if injective:
                if y in used:
                    continue
                used.add(y)
            pairs.append((x, y))
    return tuple(pairs)


def make_pfn_instance(max_size: int = 4, injective: bool = False) -> CategoryInstance:
    cls = PartialInj if injective else PartialFn

    def sample_obj(rng):
        return FinObj.of_size(int(rng.integers(0, max_size + 1)))

    def sample_mor(rng, dom):
        a = dom if dom is not None else sample_obj(rng)
        b = sample_obj(rng)
        return cls(a, b, _random_graph(rng, a.size, b.size, injective))

    enum_objs = enum_mors = None
    if max_size <= 3:
        enum = cl.all_partial_injections if injective else cl.all_partial_fns
        enum_objs = lambda: [FinObj.of_size(n) for n in range(max_size + 1)]
        enum_mors = lambda a, b: list(enum(a, b))

    return CategoryInstance(
        name="pinj" if injective else "pfn",
        sample_obj=sample_obj,
        sample_mor=sample_mor,
        dom=lambda f: f.dom,
        cod=lambda f: f.cod,
        compose=cl.compose,
        identity=cl.identity,
        eq=lambda f, g: f.same_table(g),
        restrict=cl.ridm,
        dagger=cl.dagger if injective else None,
        tensor_obj=lambda a, b: a.tensor(b),
        tensor_mor=cl.tensor_prod,
        unit=cl.UNIT,
        enumerate_objs=enum_objs,
        enumerate_mors=enum_mors,
        describe=lambda f: f.to_json(),
    )


def make_pinj_instance(max_size: int = 4) -> CategoryInstance:
    return make_pfn_instance(max_size, injective=True)


def make_unitary_instance(max_dim: int = 3) -> CategoryInstance:
    def sample_obj(rng):
        return int(rng.integers(1, max_dim + 1))

    def sample_mor(rng, dom):
        d = dom if dom is not None else sample_obj(rng)
        return qu.haar_unitary(d, rng)

    return CategoryInstance(
        name="unitary",
        sample_obj=sample_obj,
        sample_mor=sample_mor,
        dom=lambda u: u.dim,
        cod=lambda u: u.dim,
        compose=lambda g, f: qu.Unitary(g.mat @ f.mat),
        identity=lambda d: qu.Unitary(np.eye(d, dtype=complex)),
        eq=lambda u, v: u.dim == v.dim and np.allclose(u.mat, v.mat, atol=qu.ATOL),
        restrict=lambda u: qu.Unitary(np.eye(u.dim, dtype=complex)),
        dagger=lambda u: qu.Unitary(u.mat.conj().T),
        tensor_obj=lambda a, b: a * b,
        tensor_mor=lambda u, v: qu.Unitary(np.kron(u.mat, v.mat)),
        unit=1,
        describe=lambda u: qu.matrix_to_json(u.mat),
    )


def make_isometry_instance(max_dim: int = 3) -> CategoryInstance:
    def sample_obj(rng):
        return int(rng.integers(1, max_dim + 1))

    def sample_mor(rng, dom):
        c = dom if dom is not None else sample_obj(rng)
        r = c * int(rng.integers(1, 3))
        return qu.haar_isometry(r, c, rng)

    return CategoryInstance(
        name="isometry",
        sample_obj=sample_obj,
        sample_mor=sample_mor,
        dom=lambda v: v.cols,
        cod=lambda v: v.rows,
        compose=lambda g, f: qu.Isometry(g.mat @ f.mat),
        identity=lambda d: qu.Isometry(np.eye(d, dtype=complex)),
        eq=lambda v, w: v.mat.shape == w.mat.shape
        and np.allclose(v.mat, w.mat, atol=qu.ATOL),
        restrict=lambda v: qu.Isometry(np.eye(v.cols, dtype=complex)),
        tensor_obj=lambda a, b: a * b,
        tensor_mor=lambda v, w: qu.Isometry(np.kron(v.mat, w.mat)),
        unit=1,
        describe=lambda v: qu.matrix_to_json(v.mat),
    )


def make_cptp_instance(max_dim: int = 3) -> CategoryInstance:
    def sample_obj(rng):
        return int(rng.integers(1, max_dim + 1))

    def sample_mor(rng, dom):
        din = dom if dom is not None else sample_obj(rng)
        dout = sample_obj(rng)
        return qu.random_channel(din, dout, 2, rng)

    return CategoryInstance(
        name="cptp",
        sample_obj=sample_obj,
        sample_mor=sample_mor,
        dom=lambda c: c.din,
        cod=lambda c: c.dout,
        compose=qu.channel_compose,
        identity=qu.identity_channel,
        eq=lambda a, b: a.close_to(b, qu.ROUND_ATOL),
        restrict=lambda c: qu.identity_channel(c.din),
        tensor_obj=lambda a, b: a * b,
        tensor_mor=qu.channel_tensor,
        unit=1,
        describe=lambda c: c.to_json(),
    )


def enumerate_aux_pinj(a: int, b: int, max_garbage: int = 2) -> list[AuxMorphism]:
    """Every pinj-based garbage-carrying morphism a -> b with garbage size up
    to max_garbage (garbage 0 exists only as the empty morphism)."""
    out = []
    dom = FinObj.of_size(a)
    for e in range(max_garbage + 1):
        cod = FinObj((b, e))
        for core in cl.all_partial_injections(dom, cod):
            out.append(AuxMorphism(PINJ, core, b, e))
    return out


def make_aux_pinj_instance(
    max_size: int = 2,
    max_garbage: int = 2,
    extensional: bool = False,
) -> CategoryInstance:
    def sample_obj(rng):
        return int(rng.integers(0, max_size + 1))

    def sample_mor(rng, dom):
        a = dom if dom is not None else sample_obj(rng)
        b = sample_obj(rng)
        e = int(rng.integers(1, max_garbage + 1))
        core = PartialInj(
            FinObj.of_size(a), FinObj((b, e)), _random_graph(rng, a, b * e, True)
        )
        return AuxMorphism(PINJ, core, b, e)

    if extensional:
        eq = lambda f, g: ex.ext_equiv(f, g)
    else:
        eq = lambda f, g: gb.aux_equiv(f, g) is not None

    enum_objs = enum_mors = None
    if max_size <= 3:
        enum_objs = lambda: list(range(max_size + 1))
        enum_mors = lambda a, b: enumerate_aux_pinj(a, b, max_garbage)

    return CategoryInstance(
        name="ext_aux_pinj" if extensional else "aux_pinj",
        sample_obj=sample_obj,
        sample_mor=sample_mor,
        dom=lambda f: f.dom_size,
        cod=lambda f: f.cod_size,
        compose=gb.aux_compose,
        identity=lambda n: gb.aux_id(n, PINJ),
        eq=eq,
        restrict=gb.aux_ridm,
        tensor_obj=lambda a, b: a * b,
        tensor_mor=gb.aux_tensor,
        unit=1,
        enumerate_objs=enum_objs,
        enumerate_mors=enum_mors,
        describe=lambda f: f.to_json(),
    )


INSTANCES = {
    "pfn": lambda: make_pfn_instance(2),
    "pfn-large": lambda: make_pfn_instance(6),
    "pinj": lambda: make_pinj_instance(2),
    "pinj-large": lambda: make_pinj_instance(6),
    "unitary": make_unitary_instance,
    "isometry": make_isometry_instance,
    "cptp": make_cptp_instance,
    "aux-pinj": lambda: make_aux_pinj_instance(2, 2),
    "ext-aux-pinj": lambda: make_aux_pinj_instance(2, 2, extensional=True),
}
