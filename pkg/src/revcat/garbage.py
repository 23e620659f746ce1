"""Garbage-adjoining completion: morphisms that carry an auxiliary output.

A morphism A -> B here is an equivalence class of base morphisms
f : A -> B (x) E for a garbage object E, where two such are identified when a
zigzag of mediators h : E -> E' relates them without changing where they are
defined.  The two shipped bases are partial injections ("pinj") and
isometries ("isometry").

For the pinj base the class has a decidable canonical form: the underlying
partial function plus the partition of its domain by garbage equality.  Any
equivalence is then witnessed by a single direct mediator; this
characterization is validated against a brute-force zigzag search in the test
suite before anything relies on it.  For the isometry base the induced channel
(trace out the garbage) is a complete invariant, so equivalence is Choi
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import classical as cl
from . import quantum as qu
from .classical import FinObj, PartialFn, PartialInj
from .quantum import Channel, Isometry

PINJ = "pinj"
ISO = "isometry"


class BaseMismatchError(ValueError):
    pass


class EndpointMismatchError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AuxMorphism:
    """A garbage-carrying morphism: core f : A -> B (x) E in the base.

    For the pinj base, core is a PartialInj with cod size b * e (flat, B
    major).  For the isometry base, core is an Isometry with b * e rows.
    Garbage is tracked by its size e; dom/cod report flat sizes.
    """

    base: str
    core: Union[PartialInj, Isometry]
    cod_size: int
    garbage_size: int

    def __post_init__(self) -> None:
        if self.base == PINJ:
            if self.core.cod.size != self.cod_size * self.garbage_size:
                raise ValueError("core codomain does not factor as B x E")
        elif self.base == ISO:
            if self.core.rows != self.cod_size * self.garbage_size:
                raise ValueError("core rows do not factor as B x E")
        else:
            raise ValueError(f"unknown base {self.base!r}")

    @property
    def dom_size(self) -> int:
        return self.core.dom.size if self.base == PINJ else self.core.cols

    def to_json(self) -> dict:
        if self.base == PINJ:
            core = self.core.to_json()
        else:
            core = qu.matrix_to_json(self.core.mat)
        return {
            "base": self.base,
            "garbage_shape": [self.garbage_size],
            "core": core,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AuxMorphism":
        base = data["base"]
        e = int(np.prod(data["garbage_shape"])) if data["garbage_shape"] else 1
        if e <= 0:
            raise ValueError("garbage_shape must have positive size in JSON form")
        if base == PINJ:
            core = PartialInj.from_json(data["core"])
            if core.cod.size % e != 0:
                raise ValueError("core codomain does not factor by the garbage size")
            return cls(PINJ, core, core.cod.size // e, e)
        if base == ISO:
            core = Isometry(qu.matrix_from_json(data["core"]))
            return cls(ISO, core, core.rows // e, e)
        raise ValueError(f"unknown base {base!r}")


@dataclass(frozen=True)
class PInjAuxNormal:
    """Canonical class representative for the pinj base: the visible partial
    function and the garbage-equality partition of its domain."""

    fn: PartialFn
    partition: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MediatorWitness:
    """A zigzag of base mediators; direction True means left-to-right."""

    steps: tuple[tuple[bool, PartialInj], ...]


def _same_endpoints(f: AuxMorphism, g: AuxMorphism) -> None:
    if f.base != g.base:
        raise BaseMismatchError(f"bases differ: {f.base} vs {g.base}")
    if f.dom_size != g.dom_size or f.cod_size != g.cod_size:
        raise EndpointMismatchError(
            f"endpoints differ: {f.dom_size}->{f.cod_size} vs {g.dom_size}->{g.cod_size}"
        )


# -- constructors -------------------------------------------------------------

def from_pinj_core(core: PartialInj, cod_size: int, garbage_size: int) -> AuxMorphism:
    return AuxMorphism(PINJ, core, cod_size, garbage_size)


def from_isometry_core(core: Isometry, cod_size: int, garbage_size: int) -> AuxMorphism:
    return AuxMorphism(ISO, core, cod_size, garbage_size)


def embed(f: Union[PartialInj, Isometry]) -> AuxMorphism:
    """The base morphism with trivial garbage (the embedding functor)."""
    if isinstance(f, PartialInj):
        return AuxMorphism(PINJ, f, f.cod.size, 1)
    return AuxMorphism(ISO, f, f.rows, 1)


def aux_id(size: int, base: str = PINJ) -> AuxMorphism:
    if base == PINJ:
        return embed(cl.identity(FinObj.of_size(size)))
    return embed(Isometry(np.eye(size, dtype=complex)))


def bang(size: int, base: str = PINJ) -> AuxMorphism:
    """The unique total morphism A -> I: keep everything as garbage."""
    if base == PINJ:
        core = cl.identity(FinObj.of_size(size))
        return AuxMorphism(PINJ, core, 1, size)
    return AuxMorphism(ISO, Isometry(np.eye(size, dtype=complex)), 1, size)


def proj1(a: int, b: int, base: str = PINJ) -> AuxMorphism:
    """Total projection A (x) B -> A with garbage B."""
    if base == PINJ:
        core = cl.identity(FinObj((a, b)))
        return AuxMorphism(PINJ, core, a, b)
    return AuxMorphism(ISO, Isometry(np.eye(a * b, dtype=complex)), a, b)


def proj2(a: int, b: int, base: str = PINJ) -> AuxMorphism:
    """Total projection A (x) B -> B with garbage A."""
    if base == PINJ:
        core = cl.coherence("symm", (a, b))
        return AuxMorphism(PINJ, core, b, a)
    swap = np.zeros((a * b, a * b), dtype=complex)
    for x in range(a):
        for y in range(b):
            swap[y * a + x, x * b + y] = 1.0
    return AuxMorphism(ISO, Isometry(swap), b, a)


# -- structure ----------------------------------------------------------------

def aux_compose(g: AuxMorphism, f: AuxMorphism) -> AuxMorphism:
    """Composite with garbage E' (x) E, core (g (x) id_E) o f (reassociated)."""
    if f.base != g.base:
        raise BaseMismatchError(f"bases differ: {f.base} vs {g.base}")
    if f.cod_size != g.dom_size:
        raise EndpointMismatchError(f"cod {f.cod_size} != dom {g.dom_size}")
    if f.base == PINJ:
        core = cl.compose(
            cl.tensor_prod(g.core, cl.identity(FinObj.of_size(f.garbage_size))),
            f.core,
        )
        return AuxMorphism(PINJ, core, g.cod_size, g.garbage_size * f.garbage_size)
    mat = np.kron(g.core.mat, np.eye(f.garbage_size)) @ f.core.mat
    return AuxMorphism(ISO, Isometry(mat), g.cod_size, g.garbage_size * f.garbage_size)


def aux_ridm(f: AuxMorphism) -> AuxMorphism:
    """The partial identity where f is defined, with trivial garbage."""
    if f.base == PINJ:
        return embed(cl.ridm(f.core))
    return aux_id(f.dom_size, ISO)  # isometries are total


def aux_tensor(f: AuxMorphism, g: AuxMorphism) -> AuxMorphism:
    """Tensor with garbage E (x) E'; the middle-factor interchange moves both
    garbage factors to the right."""
    if f.base != g.base:
        raise BaseMismatchError(f"bases differ: {f.base} vs {g.base}")
    if f.base == PINJ:
        theta = cl.coherence(
            "interchange", (f.cod_size, f.garbage_size, g.cod_size, g.garbage_size)
        )
        core = cl.compose(theta, cl.tensor_prod(f.core, g.core))
        return AuxMorphism(
            PINJ, core, f.cod_size * g.cod_size, f.garbage_size * g.garbage_size
        )
    b, e, b2, e2 = f.cod_size, f.garbage_size, g.cod_size, g.garbage_size
    prod = np.kron(f.core.mat, g.core.mat)
    # Row reindexing (b e b2 e2) -> (b b2 e e2).
    reshaped = prod.reshape(b, e, b2, e2, -1).transpose(0, 2, 1, 3, 4)
    mat = reshaped.reshape(b * b2 * e * e2, -1)
    return AuxMorphism(ISO, Isometry(mat), b * b2, e * e2)


def factorize(f: AuxMorphism) -> tuple[AuxMorphism, AuxMorphism]:
    """Split f into its embedded core followed by the first projection."""
    embedded = embed(f.core)
    projection = proj1(f.cod_size, f.garbage_size, f.base)
    return embedded, projection


def collapse(f: AuxMorphism) -> Union[PartialFn, Channel]:
    """Forget the garbage: the visible partial function, or the channel that
    traces out the environment."""
    if f.base == PINJ:
        return visible_fn(f)
    return qu.channel_of_isometry(f.core, f.garbage_size)


# -- pinj normal forms and equivalence ---------------------------------------

def visible_fn(f: AuxMorphism) -> PartialFn:
    """The first-component partial function of a pinj-based morphism."""
    if f.base != PINJ:
        raise BaseMismatchError("visible_fn requires the pinj base")
    e = f.garbage_size
    graph = tuple((x, y // e) for x, y in f.core.graph) if e > 0 else ()
    return PartialFn(
        FinObj.of_size(f.dom_size), FinObj.of_size(f.cod_size), graph
    )


def garbage_partition(f: AuxMorphism) -> tuple[tuple[int, ...], ...]:
    """Blocks of dom(f) with equal garbage component, sorted by least member."""
    if f.base != PINJ:
        raise BaseMismatchError("garbage_partition requires the pinj base")
    e = f.garbage_size
    blocks: dict[int, list[int]] = {}
    for x, y in f.core.graph:
        blocks.setdefault(y % e, []).append(x)
    out = [tuple(sorted(b)) for b in blocks.values()]
    return tuple(sorted(out))


def normal_form(f: AuxMorphism) -> Union[PInjAuxNormal, Channel]:
    if f.base == PINJ:
        return PInjAuxNormal(visible_fn(f), garbage_partition(f))
    return collapse(f)


def direct_mediator(f: AuxMorphism, g: AuxMorphism) -> PartialInj:
    """The one-step mediator h : E_f -> E_g witnessing f ~ g; assumes the
    normal forms agree."""
    ef, eg = f.garbage_size, g.garbage_size
    gg = g.core.mapping
    pairs = {}
    for x, y in f.core.graph:
        pairs[y % ef] = gg[x] % eg
    return PartialInj(
        FinObj.of_size(ef), FinObj.of_size(eg), tuple(pairs.items())
    )


def aux_equiv(f: AuxMorphism, g: AuxMorphism) -> Optional[MediatorWitness]:
    """Decide the garbage-mediated equivalence.

    Returns a witness (empty zigzag allowed only on syntactic identity) when
    equivalent, None otherwise.  For the isometry base the decision is Choi
    equality within 1e-9 and no witness mediator is produced.
    """
    _same_endpoints(f, g)
    if f.base == PINJ:
        if normal_form(f) != normal_form(g):
            return None
        return MediatorWitness(((True, direct_mediator(f, g)),))
    cf, cg = collapse(f), collapse(g)
    return MediatorWitness(()) if cf.close_to(cg, qu.ATOL) else None


def replay_witness(f: AuxMorphism, g: AuxMorphism, w: MediatorWitness) -> bool:
    """Check that the witness zigzag really relates f to g in the base."""
    if f.base != PINJ:
        return aux_equiv(f, g) is not None
    current = f
    for forward, h in w.steps:
        ident = cl.identity(FinObj.of_size(current.cod_size))
        if forward:
            core = cl.compose(cl.tensor_prod(ident, h), current.core)
            if cl.ridm(core).graph != cl.ridm(current.core).graph:
                return False
            current = AuxMorphism(PINJ, core, current.cod_size, h.cod.size)
        else:
            raise ValueError("replay only supports forward mediator steps")
    return (
        current.cod_size == g.cod_size
        and current.garbage_size == g.garbage_size
        and current.core.graph == g.core.graph
        and current.dom_size == g.dom_size
    )


# -- points -------------------------------------------------------------------

def points_of(size: int) -> list[AuxMorphism]:
    """All global points I -> A for the pinj base: one per element plus the
    nowhere-defined point, in canonical trivial-garbage form."""
    pts = []
    one = FinObj.of_size(1)
    a = FinObj.of_size(size)
    for val in range(size):
        core = PartialInj(one, a, ((0, val),))
        pts.append(AuxMorphism(PINJ, core, size, 1))
    pts.append(AuxMorphism(PINJ, PartialInj(one, a, ()), size, 1))
    return pts


def point_value(p: AuxMorphism) -> Optional[int]:
    """The element a point denotes, or None for the undefined point; any
    garbage normalizes away."""
    if p.base != PINJ or p.dom_size != 1:
        raise ValueError("not a pinj point")
    fn = visible_fn(p)
    return fn(0)
