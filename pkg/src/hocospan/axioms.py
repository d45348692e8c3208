"""Commutative Frobenius axioms as term equations, plus the special axiom.

Each axiom lists two or more terms that must denote the same morphism.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from hocospan.cospan import compose_homotopy, compose_strict
from hocospan.normal import NormalCospan, normalize
from hocospan.randomgen import random_term
from hocospan.termlang import Id, Par, Semantics, Seq, Term, compile_term, infer_arity, parse


@dataclass(frozen=True)
class Axiom:
    name: str
    sides: tuple[str, ...]

    def terms(self) -> list[Term]:
        return list(_parse_sides(self.sides))


@lru_cache(maxsize=None)
def _parse_sides(sides: tuple[str, ...]) -> tuple[Term, ...]:
    return tuple(parse(s) for s in sides)


FROBENIUS_AXIOMS = (
    Axiom("associativity", ("mult * id1 ; mult", "id1 * mult ; mult")),
    Axiom("unitality", ("unit * id1 ; mult", "id1", "id1 * unit ; mult")),
    Axiom("coassociativity", ("comult ; comult * id1", "comult ; id1 * comult")),
    Axiom("counitality", ("comult ; counit * id1", "id1", "comult ; id1 * counit")),
    Axiom("commutativity", ("swap ; mult", "mult")),
    Axiom("cocommutativity", ("comult ; swap", "comult")),
    Axiom("frobenius", ("comult * id1 ; id1 * mult", "mult ; comult", "id1 * comult ; mult * id1")),
)

SPECIAL_AXIOM = Axiom("special", ("comult ; mult", "id1"))

ALL_AXIOMS = FROBENIUS_AXIOMS + (SPECIAL_AXIOM,)


def whisker(t: Term, left: int, right: int) -> Term:
    """``id_left * t * id_right``, omitting empty identities."""
    if left:
        t = Par(Id(left), t)
    if right:
        t = Par(t, Id(right))
    return t


def random_context(rng: random.Random, side: Term, max_arity: int = 6) -> tuple[Term, Term | None, int, int]:
    """Pick a random placement ``pre ; (id_a * [-] * id_b) ; post`` for ``side``.

    Returns ``(pre, post, a, b)``; ``pre`` is an identity when no random
    prefix with a wide enough codomain was found.
    """
    arity = infer_arity(side)
    room = max_arity - max(arity.dom, arity.cod)
    pre = None
    for _ in range(10):
        cand = random_term(rng, max_depth=4, max_arity=max_arity)
        extra = infer_arity(cand).cod - arity.dom
        if 0 <= extra <= room:
            pre = cand
            break
    if pre is None:
        extra = rng.randint(0, max(room, 0))
        pre = Id(arity.dom + extra)
    a = rng.randint(0, extra)
    b = extra - a
    post = random_term(rng, dom=a + arity.cod + b, max_depth=4, max_arity=max_arity) if rng.random() < 0.5 else None
    return pre, post, a, b


def plug(side: Term, pre: Term, post: Term | None, a: int, b: int) -> Term:
    t = Seq(pre, whisker(side, a, b))
    return Seq(t, post) if post is not None else t


def _normal(t: Term, semantics: Semantics) -> NormalCospan:
    return normalize(compile_term(t, semantics))


def holds(axiom: Axiom, semantics: Semantics) -> bool:
    forms = [_normal(t, semantics) for t in axiom.terms()]
    return all(f == forms[0] for f in forms[1:])


def holds_in_context(axiom: Axiom, semantics: Semantics, rng: random.Random) -> bool:
    sides = axiom.terms()
    pre, post, a, b = random_context(rng, sides[0])
    # compilation is structural, so the context is compiled once and shared
    compose = compose_homotopy if semantics == "homotopy" else compose_strict
    before = compile_term(pre, semantics)
    after = compile_term(post, semantics) if post is not None else None
    forms = []
    for side in sides:
        f = compose(before, compile_term(whisker(side, a, b), semantics))
        if after is not None:
            f = compose(f, after)
        forms.append(normalize(f))
    return all(f == forms[0] for f in forms[1:])


@dataclass(frozen=True)
class AxiomResult:
    name: str
    on_generators: bool
    contexts_passed: int
    contexts_run: int

    @property
    def passed(self) -> bool:
        return self.on_generators and self.contexts_passed == self.contexts_run


def expected_to_hold(axiom: Axiom, semantics: Semantics) -> bool:
    return axiom is not SPECIAL_AXIOM or semantics == "strict"


def run_suite(semantics: Semantics, seed: int = 0, instances: int = 100) -> list[AxiomResult]:
    """Check every axiom on generators and in ``instances`` random contexts."""
    rng = random.Random(seed)
    results = []
    for axiom in ALL_AXIOMS:
        ok = holds(axiom, semantics)
        passed = sum(holds_in_context(axiom, semantics, rng) for _ in range(instances))
        results.append(AxiomResult(axiom.name, ok, passed, instances))
    return results
