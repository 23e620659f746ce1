"""Instance-parametric law checker for restriction, inverse, dagger, and
monoidal structure on concrete finite categories.

A category is described by oracles (composition, identity, equality, and
optionally restriction, dagger, tensor) plus samplers and, where feasible,
enumerators.  Laws are registered declaratively as (name, sampling pattern,
equation); the engine enumerates exhaustively when the search space is small
enough and otherwise draws seeded random samples, and returns the first
counterexample found.

Everything here is pure over immutable instance descriptions; trials share no
mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

import numpy as np

EXHAUSTIVE_CAP = 250_000


class ConfigurationError(ValueError):
    """A law was requested on an instance lacking the needed oracle."""


@dataclass(frozen=True, eq=False)
class CategoryInstance:
    """Oracle description of a concrete category.

    sample_mor(rng, dom) draws a morphism, from the given object when dom is
    not None.  enumerate_mors(a, b), when present, yields the whole hom-set
    and enables exhaustive checking.
    """

    name: str
    sample_obj: Callable[[np.random.Generator], Any]
    sample_mor: Callable[[np.random.Generator, Any], Any]
    dom: Callable[[Any], Any]
    cod: Callable[[Any], Any]
    compose: Callable[[Any, Any], Any]
    identity: Callable[[Any], Any]
    eq: Callable[[Any, Any], bool]
    restrict: Optional[Callable[[Any], Any]] = None
    dagger: Optional[Callable[[Any], Any]] = None
    tensor_obj: Optional[Callable[[Any, Any], Any]] = None
    tensor_mor: Optional[Callable[[Any, Any], Any]] = None
    unit: Any = None
    enumerate_objs: Optional[Callable[[], list]] = None
    enumerate_mors: Optional[Callable[[Any, Any], list]] = None
    describe: Callable[[Any], Any] = repr


@dataclass(frozen=True)
class LawReport:
    """Outcome of checking one law; a counterexample replays to a failure."""

    law: str
    trials: int
    passed: bool
    counterexample: Optional[tuple] = None
    detail: str = ""
    mode: str = "random"

    def to_json(self, describe: Callable[[Any], Any] = repr) -> dict:
        return {
            "law": self.law,
            "trials": self.trials,
            "mode": self.mode,
            "passed": self.passed,
            "counterexample": (
                None
                if self.counterexample is None
                else [describe(m) for m in self.counterexample]
            ),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Law:
    """A checkable equation: a sampling pattern plus a predicate.

    patterns:
      - "single":    one morphism f : A -> B
      - "same_dom":  f : A -> B, g : A -> C
      - "chain":     f : A -> B, g : B -> C
      - "chain3":    f : A -> B, g : B -> C, h : C -> D
      - "pair":      two unrelated morphisms
    """

    name: str
    pattern: str
    check: Callable[[CategoryInstance], Callable[..., bool]]
    needs: frozenset = frozenset()


def _require(cat: CategoryInstance, needs: Iterable[str]) -> None:
    for n in needs:
        if getattr(cat, n) is None:
            raise ConfigurationError(f"instance {cat.name!r} has no {n} oracle")


def _sample_tuple(cat: CategoryInstance, pattern: str, rng: np.random.Generator) -> tuple:
    if pattern == "single":
        return (cat.sample_mor(rng, None),)
    if pattern == "same_dom":
        f = cat.sample_mor(rng, None)
        g = cat.sample_mor(rng, cat.dom(f))
        return (f, g)
    if pattern == "chain":
        f = cat.sample_mor(rng, None)
        g = cat.sample_mor(rng, cat.cod(f))
        return (f, g)
    if pattern == "chain3":
        f = cat.sample_mor(rng, None)
        g = cat.sample_mor(rng, cat.cod(f))
        h = cat.sample_mor(rng, cat.cod(g))
        return (f, g, h)
    if pattern == "pair":
        return (cat.sample_mor(rng, None), cat.sample_mor(rng, None))
    raise ValueError(f"unknown pattern {pattern!r}")


def _enumerate_tuples(cat: CategoryInstance, pattern: str) -> Optional[list[tuple]]:
    if cat.enumerate_objs is None or cat.enumerate_mors is None:
        return None
    objs = cat.enumerate_objs()
    homs = {(a, b): cat.enumerate_mors(a, b) for a in objs for b in objs}
    out: list[tuple] = []
    if pattern == "single":
        for ms in homs.values():
            out.extend((m,) for m in ms)
            if len(out) > EXHAUSTIVE_CAP:
                return None
    elif pattern == "same_dom":
        for (a, b), ms in homs.items():
            for c in objs:
                for f in ms:
                    for g in homs[(a, c)]:
                        out.append((f, g))
                        if len(out) > EXHAUSTIVE_CAP:
                            return None
    elif pattern == "chain":
        for (a, b), ms in homs.items():
            for c in objs:
                for f in ms:
                    for g in homs[(b, c)]:
                        out.append((f, g))
                        if len(out) > EXHAUSTIVE_CAP:
                            return None
    elif pattern == "chain3":
        for (a, b), ms in homs.items():
            for c in objs:
                for d in objs:
                    for f in ms:
                        for g in homs[(b, c)]:
                            for h in homs[(c, d)]:
                                out.append((f, g, h))
                                if len(out) > EXHAUSTIVE_CAP:
                                    return None
    elif pattern == "pair":
        all_ms = [m for ms in homs.values() for m in ms]
        for f in all_ms:
            for g in all_ms:
                out.append((f, g))
                if len(out) > EXHAUSTIVE_CAP:
                    return None
    else:
        raise ValueError(f"unknown pattern {pattern!r}")
    if len(out) > EXHAUSTIVE_CAP:
        return None
    return out


def run_law(
    cat: CategoryInstance,
    law: Law,
    trials: int = 1000,
    seed: int = 0,
    exhaustive: Optional[bool] = None,
) -> LawReport:
    """Check one law, exhaustively when the tuple space is small enough."""
    _require(cat, law.needs)
    predicate = law.check(cat)
    tuples = _enumerate_tuples(cat, law.pattern) if exhaustive in (None, True) else None
    if exhaustive is True and tuples is None:
        raise ConfigurationError(f"instance {cat.name!r} cannot be enumerated")
    if tuples is not None:
        for t in tuples:
            if not predicate(*t):
                return LawReport(law.name, len(tuples), False, counterexample=t,
                                 mode="exhaustive")
        return LawReport(law.name, len(tuples), True, mode="exhaustive")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        t = _sample_tuple(cat, law.pattern, rng)
        if not predicate(*t):
            return LawReport(law.name, trials, False, counterexample=t)
    return LawReport(law.name, trials, True)


# -- law registry -------------------------------------------------------------

def _restriction_i(cat: CategoryInstance):
    return lambda f: cat.eq(cat.compose(f, cat.restrict(f)), f)


def _restriction_ii(cat: CategoryInstance):
    def check(f, g):
        rf, rg = cat.restrict(f), cat.restrict(g)
        return cat.eq(cat.compose(rf, rg), cat.compose(rg, rf))
    return check


def _restriction_iii(cat: CategoryInstance):
    def check(f, g):
        rf, rg = cat.restrict(f), cat.restrict(g)
        return cat.eq(cat.restrict(cat.compose(g, rf)), cat.compose(rg, rf))
    return check


def _restriction_iv(cat: CategoryInstance):
    def check(f, g):
        rg = cat.restrict(g)
        lhs = cat.compose(rg, f)
        rhs = cat.compose(f, cat.restrict(cat.compose(g, f)))
        return cat.eq(lhs, rhs)
    return check


def _lemma_i(cat: CategoryInstance):
    def check(f, g):
        lhs = cat.restrict(cat.compose(g, f))
        rhs = cat.restrict(cat.compose(cat.restrict(g), f))
        return cat.eq(lhs, rhs)
    return check


def _lemma_ii(cat: CategoryInstance):
    def check(f, g):
        if not cat.eq(cat.restrict(g), cat.identity(cat.dom(g))):
            return True  # only constrains total g
        return cat.eq(cat.restrict(cat.compose(g, f)), cat.restrict(f))
    return check


def _lemma_iii(cat: CategoryInstance):
    def check(f):
        if cat.dagger is None:
            return True
        fd = cat.dagger(f)
        invertible = cat.eq(
            cat.compose(fd, f), cat.identity(cat.dom(f))
        ) and cat.eq(cat.compose(f, fd), cat.identity(cat.cod(f)))
        if not invertible:
            return True
        return cat.eq(cat.restrict(f), cat.identity(cat.dom(f)))
    return check


def _dagger_involution(cat: CategoryInstance):
    return lambda f: cat.eq(cat.dagger(cat.dagger(f)), f)


def _dagger_identity(cat: CategoryInstance):
    def check(f):
        i = cat.identity(cat.dom(f))
        return cat.eq(cat.dagger(i), i)
    return check


def _dagger_contravariant(cat: CategoryInstance):
    def check(f, g):
        lhs = cat.dagger(cat.compose(g, f))
        rhs = cat.compose(cat.dagger(f), cat.dagger(g))
        return cat.eq(lhs, rhs)
    return check


def _inverse_regular(cat: CategoryInstance):
    return lambda f: cat.eq(cat.compose(cat.compose(f, cat.dagger(f)), f), f)


def _inverse_idempotents_commute(cat: CategoryInstance):
    def check(f, g):
        ef = cat.compose(cat.dagger(f), f)
        eg = cat.compose(cat.dagger(g), g)
        return cat.eq(cat.compose(ef, eg), cat.compose(eg, ef))
    return check


def _monoidal_restriction(cat: CategoryInstance):
    def check(f, g):
        lhs = cat.restrict(cat.tensor_mor(f, g))
        rhs = cat.tensor_mor(cat.restrict(f), cat.restrict(g))
        return cat.eq(lhs, rhs)
    return check


def _monoidal_bifunctor(cat: CategoryInstance):
    def check(f, g):
        # Interchange on two independently sampled composable chains is
        # approximated with f;g against identities on matching objects.
        idc = cat.identity(cat.cod(f))
        idd = cat.identity(cat.cod(g))
        lhs = cat.compose(cat.tensor_mor(idc, idd), cat.tensor_mor(f, g))
        rhs = cat.tensor_mor(cat.compose(idc, f), cat.compose(idd, g))
        return cat.eq(lhs, rhs)
    return check


def _monoidal_interchange(cat: CategoryInstance):
    def check(f, g, h):
        # (g o f) (x) h  =  (g (x) h) o (f (x) id) for endo h; checked via the
        # general identity (g (x) h) o (f (x) id_dom(h)) with h : C -> D.
        lhs = cat.tensor_mor(cat.compose(g, f), h)
        rhs = cat.compose(
            cat.tensor_mor(g, h),
            cat.tensor_mor(f, cat.identity(cat.dom(h))),
        )
        return cat.eq(lhs, rhs)
    return check


def _monoidal_unit(cat: CategoryInstance):
    def check(f):
        iu = cat.identity(cat.unit)
        return cat.eq(cat.tensor_mor(f, iu), f) and cat.eq(cat.tensor_mor(iu, f), f)
    return check


def _monoidal_assoc(cat: CategoryInstance):
    def check(f, g):
        lhs = cat.tensor_mor(cat.tensor_mor(f, g), f)
        rhs = cat.tensor_mor(f, cat.tensor_mor(g, f))
        return cat.eq(lhs, rhs)
    return check


RESTRICTION_LAWS = [
    Law("restriction_i", "single", _restriction_i, frozenset({"restrict"})),
    Law("restriction_ii", "same_dom", _restriction_ii, frozenset({"restrict"})),
    Law("restriction_iii", "same_dom", _restriction_iii, frozenset({"restrict"})),
    Law("restriction_iv", "chain", _restriction_iv, frozenset({"restrict"})),
]

DERIVED_LAWS = [
    Law("ridm_of_composite", "chain", _lemma_i, frozenset({"restrict"})),
    Law("ridm_total_post", "chain", _lemma_ii, frozenset({"restrict"})),
    Law("ridm_of_invertible", "single", _lemma_iii, frozenset({"restrict"})),
]

INVERSE_LAWS = [
    Law("dagger_involution", "single", _dagger_involution, frozenset({"dagger"})),
    Law("dagger_identity", "single", _dagger_identity, frozenset({"dagger"})),
    Law("dagger_contravariant", "chain", _dagger_contravariant, frozenset({"dagger"})),
    Law("inverse_regular", "single", _inverse_regular, frozenset({"dagger"})),
    Law("inverse_idempotents_commute", "same_dom", _inverse_idempotents_commute,
        frozenset({"dagger"})),
]

MONOIDAL_LAWS = [
    Law("tensor_restriction", "pair", _monoidal_restriction,
        frozenset({"restrict", "tensor_mor"})),
    Law("tensor_bifunctor", "pair", _monoidal_bifunctor, frozenset({"tensor_mor"})),
    Law("tensor_interchange", "chain3", _monoidal_interchange,
        frozenset({"tensor_mor"})),
    Law("tensor_unit", "single", _monoidal_unit, frozenset({"tensor_mor"})),
    Law("tensor_assoc", "pair", _monoidal_assoc, frozenset({"tensor_mor"})),
]

ALL_LAWS: dict[str, Law] = {
    law.name: law
    for law in RESTRICTION_LAWS + DERIVED_LAWS + INVERSE_LAWS + MONOIDAL_LAWS
}


def _run_group(cat, laws, trials, seed, exhaustive) -> LawReport:
    for law in laws:
        report = run_law(cat, law, trials, seed, exhaustive)
        if not report.passed:
            return report
    names = "+".join(l.name for l in laws)
    return LawReport(names, trials, True)


def check_restriction_axioms(cat, trials: int = 1000, seed: int = 0,
                             exhaustive: Optional[bool] = None) -> LawReport:
    return _run_group(cat, RESTRICTION_LAWS, trials, seed, exhaustive)


def check_derived_lemma(cat, trials: int = 1000, seed: int = 0,
                        exhaustive: Optional[bool] = None) -> LawReport:
    _require(cat, {"restrict"})
    return _run_group(cat, DERIVED_LAWS, trials, seed, exhaustive)


def check_inverse_axioms(cat, trials: int = 1000, seed: int = 0,
                         exhaustive: Optional[bool] = None) -> LawReport:
    return _run_group(cat, INVERSE_LAWS, trials, seed, exhaustive)


def check_monoidal_restriction(cat, trials: int = 1000, seed: int = 0,
                               exhaustive: Optional[bool] = None) -> LawReport:
    return _run_group(cat, MONOIDAL_LAWS, trials, seed, exhaustive)
