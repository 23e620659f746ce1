"""Finite sets with partial functions and partial injections.

Objects are finite sets {0, .., n-1}, optionally carrying a shape of tensor
factors with flat row-major (mixed-radix) indexing.  Morphisms are stored as
sorted graphs of (input, output) index pairs, so equality is structural.

Two monoidal structures are provided: the cartesian-style product ``tensor``
(unit: the one-element set) and the disjoint sum ``direct_sum`` (unit: the
empty set).  Associators and unitors are identity permutations under the flat
indexing convention; the symmetry and the middle-factor interchange remain
genuine permutations and are produced by :func:`coherence`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator, Optional


@dataclass(frozen=True)
class FinObj:
    """A finite set of size prod(shape), with factor structure for tensors."""

    shape: tuple[int, ...] = (1,)

    def __post_init__(self) -> None:
        if any(n < 0 for n in self.shape):
            raise ValueError(f"negative factor in shape {self.shape}")

    @property
    def size(self) -> int:
        return prod(self.shape)

    def tensor(self, other: "FinObj") -> "FinObj":
        return FinObj(self.shape + other.shape)

    @staticmethod
    def of_size(n: int) -> "FinObj":
        return FinObj((n,))


UNIT = FinObj(())  # one-element set, unit of the tensor product
ZERO = FinObj((0,))  # empty set, unit of the disjoint sum


class CompositionError(ValueError):
    """Raised when objects of composed or constructed morphisms do not match."""


@dataclass(frozen=True)
class PartialFn:
    """A partial function between finite sets, as a sorted functional graph."""

    dom: FinObj
    cod: FinObj
    graph: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "graph", tuple(sorted(self.graph)))
        seen = set()
        for x, y in self.graph:
            if not (0 <= x < self.dom.size):
                raise ValueError(f"input {x} out of range for dom of size {self.dom.size}")
            if not (0 <= y < self.cod.size):
                raise ValueError(f"output {y} out of range for cod of size {self.cod.size}")
            if x in seen:
                raise ValueError(f"graph not functional: input {x} repeated")
            seen.add(x)

    def __call__(self, x: int) -> Optional[int]:
        for a, b in self.graph:
            if a == x:
                return b
        return None

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.graph)

    @property
    def defined_on(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.graph)

    def is_total(self) -> bool:
        return len(self.graph) == self.dom.size

    def is_injective(self) -> bool:
        outs = [y for _, y in self.graph]
        return len(outs) == len(set(outs))

    def same_table(self, other: "PartialFn") -> bool:
        """Equality disregarding factor shapes (flat sizes and graphs match)."""
        return (
            self.dom.size == other.dom.size
            and self.cod.size == other.cod.size
            and self.graph == other.graph
        )

    def to_json(self) -> dict:
        return {
            "dom": {"shape": list(self.dom.shape)},
            "cod": {"shape": list(self.cod.shape)},
            "graph": [[x, y] for x, y in self.graph],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PartialFn":
        return cls(
            FinObj(tuple(data["dom"]["shape"])),
            FinObj(tuple(data["cod"]["shape"])),
            tuple((int(x), int(y)) for x, y in data["graph"]),
        )


class PartialInj(PartialFn):
    """A partial injective function; the graph is functional and injective."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_injective():
            raise ValueError("graph is not injective")

    @classmethod
    def from_json(cls, data: dict) -> "PartialInj":
        f = PartialFn.from_json(data)
        return cls(f.dom, f.cod, f.graph)


def identity(a: FinObj) -> PartialInj:
    return PartialInj(a, a, tuple((x, x) for x in range(a.size)))


def empty_map(a: FinObj, b: FinObj) -> PartialInj:
    return PartialInj(a, b, ())


def compose(g: PartialFn, f: PartialFn) -> PartialFn:
    """Relational composite g after f; defined where both legs are."""
    if f.cod.size != g.dom.size:
        raise CompositionError(
            f"cannot compose: cod size {f.cod.size} != dom size {g.dom.size}"
        )
    gm = g.mapping
    graph = tuple((x, gm[y]) for x, y in f.graph if y in gm)
    cls = PartialInj if isinstance(f, PartialInj) and isinstance(g, PartialInj) else PartialFn
    return cls(f.dom, g.cod, graph)


def ridm(f: PartialFn) -> PartialFn:
    """The partial identity on dom(f) defined exactly where f is."""
    cls = PartialInj if isinstance(f, PartialInj) else PartialFn
    return cls(f.dom, f.dom, tuple((x, x) for x, _ in f.graph))


def dagger(f: PartialInj) -> PartialInj:
    """The partial inverse: the transposed graph."""
    return PartialInj(f.cod, f.dom, tuple((y, x) for x, y in f.graph))


def tensor_prod(f: PartialFn, g: PartialFn) -> PartialFn:
    """(x, y) -> (f(x), g(y)) on flat row-major indices."""
    dom = f.dom.tensor(g.dom)
    cod = f.cod.tensor(g.cod)
    graph = tuple(
        (x * g.dom.size + y, fx * g.cod.size + gy)
        for x, fx in f.graph
        for y, gy in g.graph
    )
    cls = PartialInj if isinstance(f, PartialInj) and isinstance(g, PartialInj) else PartialFn
    return cls(dom, cod, graph)


def direct_sum(f: PartialFn, g: PartialFn) -> PartialFn:
    """Tagged-union action with offset indexing; preserves injectivity."""
    dom = FinObj.of_size(f.dom.size + g.dom.size)
    cod = FinObj.of_size(f.cod.size + g.cod.size)
    graph = tuple(f.graph) + tuple(
        (x + f.dom.size, y + f.cod.size) for x, y in g.graph
    )
    cls = PartialInj if isinstance(f, PartialInj) and isinstance(g, PartialInj) else PartialFn
    return cls(dom, cod, graph)


def coherence(kind: str, shapes: tuple[int, ...]) -> PartialInj:
    """Structural permutation of flat indices for the tensor product.

    kinds:
      - "assoc":       (a, b, c), (A x B) x C -> A x (B x C); identity here.
      - "lunit":       (a,), I x A -> A; identity.
      - "runit":       (a,), A x I -> A; identity.
      - "symm":        (a, b), A x B -> B x A.
      - "interchange": (b, e, b2, e2), (B x E) x (B' x E') -> (B x B') x (E x E').
    """
    if kind in ("assoc",):
        if len(shapes) != 3:
            raise ValueError("assoc takes three factor sizes")
        n = prod(shapes)
        return PartialInj(FinObj(tuple(shapes)), FinObj(tuple(shapes)),
                          tuple((i, i) for i in range(n)))
    if kind in ("lunit", "runit"):
        if len(shapes) != 1:
            raise ValueError(f"{kind} takes one factor size")
        (a,) = shapes
        return PartialInj(FinObj((a,)), FinObj((a,)), tuple((i, i) for i in range(a)))
    if kind == "symm":
        if len(shapes) != 2:
            raise ValueError("symm takes two factor sizes")
        a, b = shapes
        graph = tuple((x * b + y, y * a + x) for x in range(a) for y in range(b))
        return PartialInj(FinObj((a, b)), FinObj((b, a)), graph)
    if kind == "interchange":
        if len(shapes) != 4:
            raise ValueError("interchange takes four factor sizes")
        b, e, b2, e2 = shapes
        graph = []
        for xb in range(b):
            for xe in range(e):
                for yb in range(b2):
                    for ye in range(e2):
                        src = ((xb * e + xe) * b2 + yb) * e2 + ye
                        dst = ((xb * b2 + yb) * e + xe) * e2 + ye
                        graph.append((src, dst))
        return PartialInj(FinObj((b, e, b2, e2)), FinObj((b, b2, e, e2)), tuple(graph))
    raise ValueError(f"unknown coherence kind {kind!r}")


def bennett(f: PartialFn) -> PartialInj:
    """The input-preserving reversibilization x -> (f(x), x)."""
    cod = f.cod.tensor(f.dom)
    n = f.dom.size
    graph = tuple((x, y * n + x) for x, y in f.graph)
    return PartialInj(f.dom, cod, graph)


def is_partial_iso(f: PartialFn) -> Optional[PartialInj]:
    """The PartialInj view of f, when its graph is injective."""
    if f.is_injective():
        return PartialInj(f.dom, f.cod, f.graph)
    return None


# -- enumeration helpers ------------------------------------------------------

def all_partial_fns(a: FinObj, b: FinObj) -> Iterator[PartialFn]:
    """Every partial function a -> b (|b|+1 choices per element)."""
    n, m = a.size, b.size
    for choice in itertools.product(range(m + 1), repeat=n):
        graph = tuple((x, y) for x, y in enumerate(choice) if y < m)
        yield PartialFn(a, b, graph)


def all_partial_injections(a: FinObj, b: FinObj) -> Iterator[PartialInj]:
    """Every partial injection a -> b."""
    n, m = a.size, b.size
    for k in range(min(n, m) + 1):
        for xs in itertools.combinations(range(n), k):
            for ys in itertools.permutations(range(m), k):
                yield PartialInj(a, b, tuple(zip(xs, ys)))
