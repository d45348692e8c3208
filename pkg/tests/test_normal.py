import pytest
from hypothesis import given, strategies as st

from hocospan.axioms import FROBENIUS_AXIOMS, SPECIAL_AXIOM, holds, holds_in_context
from hocospan.cospan import (
    CompositionTypeError,
    GraphCospan,
    compose_homotopy,
    compose_strict,
    empty_cospan,
    generator_cospan,
    identity_cospan,
)
from hocospan.normal import (
    NormalCospan,
    NormalFormError,
    OpenComponent,
    canonicalize,
    check_invariants,
    compose_normal,
    encode,
    equal_normal,
    identity_normal,
    normalize,
    tensor_normal,
)
from hocospan.randomgen import random_composable_pair, random_graph_cospan

randoms = st.randoms(use_true_random=False)
N = {k: normalize(generator_cospan(k)) for k in ("mult", "unit", "comult", "counit", "swap")}
EMPTY = NormalCospan(0, 0)


def test_normalize_mult():
    assert N["mult"] == NormalCospan(2, 1, (OpenComponent((0, 1), (0,), 0),))


def test_normalize_empty():
    assert normalize(empty_cospan()) == EMPTY


def test_normalize_closed_loop():
    f = GraphCospan.build(1, [(0, 0)], [], [])
    assert normalize(f) == NormalCospan(0, 0, (), (1,))


def test_canonical_order_puts_input_ports_first():
    # out-only component keyed by dom_size + out port
    p = NormalCospan(1, 2, (OpenComponent((), (0,), 0), OpenComponent((0,), (1,), 0)))
    assert canonicalize(p).open_components == (OpenComponent((0,), (1,), 0), OpenComponent((), (0,), 0))


# direct composition


def test_compose_normal_handle():
    assert compose_normal(N["comult"], N["mult"]) == NormalCospan(1, 1, (OpenComponent((0,), (0,), 1),))


def test_compose_normal_mult_then_comult():
    assert compose_normal(N["mult"], N["comult"]) == NormalCospan(2, 2, (OpenComponent((0, 1), (0, 1), 0),))


def test_compose_normal_unit_counit():
    assert compose_normal(N["unit"], N["counit"]) == NormalCospan(0, 0, (), (0,))


def test_compose_normal_empty_middle_passes_through():
    p = NormalCospan(1, 0, (OpenComponent((0,), (), 2),), (3,))
    q = NormalCospan(0, 2, (OpenComponent((), (0, 1), 1),), (0,))
    r = compose_normal(p, q)
    assert r == NormalCospan(1, 2, (OpenComponent((0,), (), 2), OpenComponent((), (0, 1), 1)), (0, 3))


def test_compose_normal_mismatch():
    with pytest.raises(CompositionTypeError):
        compose_normal(N["mult"], N["mult"])


@given(randoms)
def test_compose_normal_matches_graph_composition(rnd):
    f, g = random_composable_pair(rnd)
    assert compose_normal(normalize(f), normalize(g)) == normalize(compose_homotopy(f, g))


@given(randoms)
def test_betti_total_monotone(rnd):
    f, g = random_composable_pair(rnd)
    p, q = normalize(f), normalize(g)
    assert compose_normal(p, q).total_betti >= p.total_betti + q.total_betti


# tensor


@given(randoms)
def test_tensor_unit(rnd):
    p = normalize(random_graph_cospan(rnd))
    assert tensor_normal(p, EMPTY) == p == tensor_normal(EMPTY, p)


def test_tensor_unit_counit():
    r = tensor_normal(N["unit"], N["counit"])
    assert r == NormalCospan(1, 1, (OpenComponent((0,), (), 0), OpenComponent((), (0,), 0)))


@given(randoms)
def test_tensor_betti_multiset_union(rnd):
    p, q = normalize(random_graph_cospan(rnd)), normalize(random_graph_cospan(rnd))
    r = tensor_normal(p, q)
    bettis = lambda x: sorted([c.betti for c in x.open_components] + list(x.closed_components))
    assert bettis(r) == sorted(bettis(p) + bettis(q))


# equality


def test_handle_is_not_identity():
    assert not equal_normal(normalize(compose_homotopy(generator_cospan("comult"), generator_cospan("mult"))), identity_normal(1))


def test_strict_handle_is_identity():
    assert equal_normal(normalize(compose_strict(generator_cospan("comult"), generator_cospan("mult"))), normalize(identity_cospan(1)))


@given(randoms)
def test_equal_is_reflexive_and_canonicalization_is_a_fixpoint(rnd):
    p = normalize(random_graph_cospan(rnd))
    assert equal_normal(p, p)
    assert canonicalize(canonicalize(p)) == canonicalize(p) == p
    check_invariants(p)


@given(randoms)
def test_composites_satisfy_invariants(rnd):
    f, g = random_composable_pair(rnd)
    check_invariants(compose_normal(normalize(f), normalize(g)))


def test_invariant_violations():
    with pytest.raises(NormalFormError):
        check_invariants(NormalCospan(2, 0, (OpenComponent((0,), (), 0),)))
    with pytest.raises(NormalFormError):
        canonicalize(NormalCospan(0, 0, (OpenComponent((), (), 0),)))


# axioms at the normal-form level


@pytest.mark.parametrize("axiom", FROBENIUS_AXIOMS, ids=lambda a: a.name)
def test_frobenius_axioms_hold_under_homotopy(axiom, rng):
    assert holds(axiom, "homotopy")
    assert all(holds_in_context(axiom, "homotopy", rng) for _ in range(20))


def test_special_axiom_contrast(rng):
    assert not holds(SPECIAL_AXIOM, "homotopy")
    assert holds(SPECIAL_AXIOM, "strict")
    assert not any(holds_in_context(SPECIAL_AXIOM, "homotopy", rng) for _ in range(20))
    assert all(holds_in_context(SPECIAL_AXIOM, "strict", rng) for _ in range(20))


# text encoding


def test_encode_handle():
    assert encode(compose_normal(N["comult"], N["mult"])) == "open in={0} out={0} b=1\n"


def test_encode_closed_groups_by_betti():
    p = NormalCospan(0, 1, (OpenComponent((), (0,), 0),), (2, 0, 0))
    assert encode(p) == "open in={} out={0} b=0\nclosed b=0 (x2)\nclosed b=2 (x1)\n"


def test_encode_empty():
    assert encode(EMPTY) == ""
