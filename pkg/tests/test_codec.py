"""Encode/decode round trips and the prefix reading rules."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slithercode import (
    COMPLY,
    NORMAL,
    CodeError,
    ReadResult,
    SlitherCode,
    capacity,
    classify,
    decode_sequence,
    independence_number,
    matching_number,
    max_capacity_edges,
    prefix_alpha,
    prufer_decode,
    prufer_encode,
    read_alpha,
    read_capacity_edges,
    read_matching_via_beta,
    read_path_edges,
    read_root_and_pset,
    slither_decode,
    slither_encode,
)

from conftest import random_tree

variants = st.sampled_from((NORMAL, COMPLY, capacity(3)))


@st.composite
def codes(draw, max_n=64):
    n = draw(st.integers(2, max_n))
    sym = draw(st.lists(st.integers(1, n), min_size=n - 1, max_size=n - 1))
    return SlitherCode(n=n, variant=draw(variants), symbols=tuple(sym))


# --- worked example ---------------------------------------------------------


def test_encode_worked_example(fig1):
    code, aux = slither_encode(fig1["tree"], NORMAL)
    assert code.symbols == fig1["code"]
    assert aux == fig1["aux"]


def test_decode_worked_example(fig1):
    t = decode_sequence(fig1["code"], n=10, variant=NORMAL)
    assert t == fig1["tree"]
    assert t.root == 9


def test_worked_example_reads(fig1):
    code = SlitherCode(n=10, variant=NORMAL, symbols=fig1["code"])
    assert read_alpha(code) == 6
    r = read_root_and_pset(code)
    assert (r.root, r.root_class) == (9, "P")
    assert r.p_set == fig1["p_set"]


def test_worked_example_comply_roundtrip(fig1):
    code, _ = slither_encode(fig1["tree"], COMPLY)
    assert slither_decode(code) == fig1["tree"]
    assert code.symbols != fig1["code"]  # variants really differ on this tree


# --- code construction ------------------------------------------------------


def test_code_normalizes_symbols():
    c = SlitherCode(n=4, variant=NORMAL, symbols=["3", np.int64(1), 2])
    assert c.symbols == (3, 1, 2)


@pytest.mark.parametrize(
    "n, symbols, fragment",
    (
        (4, (1, 2), "expected 3 symbols"),
        (4, (1, 2, 9), "out of range"),
        (4, (1, "x", 2), "non-integer symbol"),
        (0, (), "n must be >= 1"),
    ),
)
def test_code_rejects(n, symbols, fragment):
    with pytest.raises(CodeError, match=fragment):
        SlitherCode(n=n, variant=NORMAL, symbols=symbols)


def test_single_vertex_conventions():
    t = decode_sequence((), n=1)
    assert t.n == 1 and t.root == 1
    code, aux = slither_encode(t, NORMAL)
    assert code.symbols == () and aux == ()
    assert prefix_alpha((), 1) == 1
    r = read_root_and_pset(SlitherCode(n=1, variant=NORMAL, symbols=()))
    assert r == ReadResult(n=1, alpha=1, root=1, root_class="P", p_set=frozenset({1}))


# --- round trips ------------------------------------------------------------


@given(codes())
@settings(max_examples=150)
def test_decode_encode_identity(code):
    t = slither_decode(code)
    back, aux = slither_encode(t, code.variant)
    assert back == code
    assert sorted(aux) == [v for v in range(1, code.n + 1) if v != t.root]


@given(st.integers(2, 60), st.integers(0, 2**32 - 1), variants)
def test_encode_decode_identity(n, seed, variant):
    t = random_tree(n, seed)
    code, _ = slither_encode(t, variant)
    assert slither_decode(code) == t


@given(codes(max_n=32))
def test_occurrences_are_out_degrees(code):
    t = slither_decode(code)
    for v in range(1, code.n + 1):
        assert code.symbols.count(v) == t.out_degree(v)


# --- reading rules ----------------------------------------------------------


@pytest.mark.parametrize(
    "symbols, n, alpha, root, root_class, p_set",
    (
        ((2, 2, 1, 1), 5, 3, 1, "N", {3, 4, 5}),
        ((1, 1, 1), 4, 3, 1, "N", {2, 3, 4}),
        ((1,), 2, 1, 1, "N", {2}),
        ((2,), 2, 1, 2, "N", {1}),
    ),
)
def test_read_frozen_examples(symbols, n, alpha, root, root_class, p_set):
    code = SlitherCode(n=n, variant=NORMAL, symbols=symbols)
    assert read_alpha(code) == alpha
    r = read_root_and_pset(code)
    assert (r.n, r.alpha, r.root, r.root_class) == (n, alpha, root, root_class)
    assert r.p_set == frozenset(p_set)


def test_read_matching_frozen_examples():
    assert read_matching_via_beta(SlitherCode(n=2, variant=NORMAL, symbols=(1,))) == (1, 1)
    assert read_matching_via_beta(SlitherCode(n=4, variant=NORMAL, symbols=(1, 1, 1))) == (2, 1)
    assert read_path_edges(SlitherCode(n=2, variant=COMPLY, symbols=(1,))) == (1, 1)
    assert read_path_edges(SlitherCode(n=4, variant=COMPLY, symbols=(1, 1, 1))) == (2, 2)


@given(codes(max_n=40))
@settings(max_examples=150)
def test_reads_agree_with_the_decoded_tree(code):
    t = slither_decode(code)
    b = code.variant.b
    if b == 1:
        assert read_alpha(code) == independence_number(t)
        r = read_root_and_pset(code)
        assert r.root == t.root
        assert r.p_set == classify(t, NORMAL).p_set()
        assert r.root_class == ("P" if t.root in r.p_set else "N")
        beta, value = read_matching_via_beta(code)
        assert value == matching_number(t)
        assert 1 <= beta <= code.n - 1
    elif b == 2:
        _, value = read_path_edges(code)
        assert value == max_capacity_edges(t, 2)
    else:
        _, value = read_capacity_edges(code, b)
        assert value == max_capacity_edges(t, b)


@pytest.mark.parametrize(
    "call, code_variant, fragment",
    (
        (read_matching_via_beta, COMPLY, "reads normal codes"),
        (read_path_edges, NORMAL, "reads comply codes"),
        (lambda c: read_capacity_edges(c, 3), COMPLY, "reads capacity"),
    ),
)
def test_reads_enforce_their_variant(call, code_variant, fragment):
    code = SlitherCode(n=4, variant=code_variant, symbols=(1, 1, 1))
    with pytest.raises(CodeError, match=fragment):
        call(code)


@given(st.integers(2, 200), st.integers(0, 2**32 - 1))
def test_prefix_alpha_numpy_path_matches_loop(n, seed):
    rng = np.random.default_rng(seed)
    arr = rng.integers(1, n + 1, size=n - 1)
    assert prefix_alpha(arr, n) == prefix_alpha(list(arr), n)


def test_prefix_alpha_exhausted():
    with pytest.raises(ValueError, match="exhausted"):
        prefix_alpha([], 3)
    with pytest.raises(ValueError, match="exhausted"):
        prefix_alpha([5, 5], 9)


# --- classic prufer ---------------------------------------------------------


def test_prufer_star():
    assert prufer_encode(4, [(1, 2), (1, 3), (1, 4)]) == (1, 1)
    assert prufer_decode((1, 1)) == [(1, 2), (1, 3), (1, 4)]


def test_prufer_two_vertices():
    assert prufer_encode(2, [(1, 2)]) == ()
    assert prufer_decode(()) == [(1, 2)]


@given(st.integers(2, 50), st.integers(0, 2**32 - 1))
def test_prufer_roundtrip(n, seed):
    t = random_tree(n, seed)
    edges = sorted((min(c, p), max(c, p)) for c, p in t.edges())
    assert prufer_decode(prufer_encode(n, edges)) == edges
