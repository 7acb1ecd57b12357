"""The token rules, expansion, stripping, and representation recognition."""

import pytest

import worked_examples as W
from pidsym import (
    Marking,
    Pid,
    expand,
    is_representation,
    pids,
    represent,
    retained_pids,
    strip,
    strip_marking,
)
from pidsym.represent import RetainedNotCovered

P = Pid.parse


def test_represent_initial_marking():
    t = represent(W.NET_BASE, W.NET_BASE.init)
    assert t == W.tree(None, ("1", W.tree(None, ("1", W.leaf()))))


def test_represent_two_representation_marking():
    assert represent(W.NET_BASE, W.TWOREP_MARKING) == W.TWOREP_EXPANDED


def test_shared_token_sits_at_the_root():
    m = Marking({"s1": [(5,)], "g": [(P("1"), 0)]})
    t = represent(W.NET_BASE, m)
    assert t.marking == Marking({"s1": [(5,)]})
    assert pids(t) == {Pid(), P("1"), P("1.1")}


def test_referenced_pids_get_paths():
    m = Marking({"s2": [(P("1.2"), P("1.1.1"), P("1.2"))], "g": [(P("1"), 0)]})
    t = represent(W.NET_QUAD, m)
    assert {P("1.2"), P("1.1.1"), P("1.1")} <= pids(t)
    # the owner's node holds the token, the referenced node stays empty
    assert t.child(P("1")).child(P("2")).marking.tokens("s2") == ((P("1.2"), P("1.1.1"), P("1.2")),)


def test_expand_examples():
    assert expand(W.PATH_SINGLE) == W.PATH_EXPANDED
    assert expand(W.TWOREP_STRIPPED) == W.TWOREP_EXPANDED
    assert expand(W.TWOREP_EXPANDED) == W.TWOREP_EXPANDED
    assert expand(expand(W.QUAD_T1)) == expand(W.QUAD_T1)


def test_strip_examples():
    assert strip_marking(W.NET_BASE, W.TWOREP_MARKING) == W.TWOREP_STRIPPED
    assert strip_marking(W.NET_DEADSIB, W.DEADSIB_A_MARKING) == W.DEADSIB_A_STRIPPED
    assert strip_marking(W.NET_DEADSIB, W.DEADSIB_B_MARKING) == W.DEADSIB_B_STRIPPED
    assert strip_marking(W.NET_XREF, W.XREF_A_MARKING) == W.XREF_A_STRIPPED
    assert strip_marking(W.NET_XREF, W.XREF_B_MARKING) == W.XREF_B_STRIPPED


def test_strip_is_independent_of_the_source_representation():
    retained = retained_pids(W.NET_BASE, W.TWOREP_MARKING)
    assert strip(W.TWOREP_EXPANDED, retained) == W.TWOREP_STRIPPED
    assert strip(W.TWOREP_STRIPPED, retained) == W.TWOREP_STRIPPED  # fixpoint on stripped trees


def test_strip_of_fully_retained_tree_is_identity():
    t = represent(W.NET_BASE, W.NET_BASE.init)
    assert strip(t, pids(t) - {Pid()}) == t


def test_strip_missing_retained_pid():
    with pytest.raises(RetainedNotCovered):
        strip(W.TWOREP_EXPANDED, {P("9.9")})


def test_strip_refuses_to_drop_tokens():
    with pytest.raises(ValueError):
        strip(W.TWOREP_EXPANDED, {P("1")})  # would delete the token at 1.1.2


def test_is_representation_examples():
    assert is_representation(W.NET_BASE, W.TWOREP_EXPANDED, W.TWOREP_MARKING)
    assert is_representation(W.NET_BASE, W.TWOREP_STRIPPED, W.TWOREP_MARKING)
    assert not is_representation(W.NET_BASE, W.PATH_SINGLE, W.TWOREP_MARKING)


def test_is_representation_rejects_missing_next_pid():
    # like TWOREP_EXPANDED but without the next-pid node 1.2
    t = W.tree(
        Marking({"s1": [(12,)]}),
        ("1", W.tree(
            Marking({"s2": [(P("1"),)]}),
            ("1", W.tree(None, ("2", W.tree(Marking({"s2": [(P("1.1.2"),)]}), ("1", W.leaf()))))),
        )),
    )
    assert not is_representation(W.NET_BASE, t, W.TWOREP_MARKING)


def test_is_representation_rejects_misplaced_tokens():
    # the owned token of 1.1.2 moved to the root
    t = W.tree(
        Marking({"s1": [(12,)], "s2": [(P("1.1.2"),)]}),
        ("1", W.tree(
            Marking({"s2": [(P("1"),)]}),
            ("1", W.tree(None, ("2", W.tree(None, ("1", W.leaf()))))),
            ("2", W.leaf()),
        )),
    )
    assert not is_representation(W.NET_BASE, t, W.TWOREP_MARKING)


def test_is_representation_rejects_extra_tokens():
    extra = W.TWOREP_EXPANDED.marking.plus({"s1": [(12,)]})
    t = W.tree(extra, *[(str(f), s) for f, s in W.TWOREP_EXPANDED.children])
    assert not is_representation(W.NET_BASE, t, W.TWOREP_MARKING)


def test_expanded_tree_pid_bounds_are_the_subpid_closure():
    t = represent(W.NET_BASE, W.TWOREP_MARKING)
    got = pids(t) - {Pid()}
    assert got == {P("1"), P("1.1"), P("1.1.2"), P("1.2"), P("1.1.2.1")}


def test_shared_token_referencing_pids():
    net = W._net("mix", W.PlaceDecl("s", ("D", "P")))
    m = Marking({"s": [(7, P("1.1"))], "g": [(P("1"), 2)]})
    t = represent(net, m)
    assert t.marking.tokens("s") == ((7, P("1.1")),)
    assert {P("1.1"), P("1.3")} <= pids(t)
    assert is_representation(net, t, m)
    assert is_representation(net, strip(t, retained_pids(net, m)), m)


def test_marking_with_empty_generator():
    # all processes dead; only a shared data token remains
    m = Marking({"s1": [(5,)]})
    t = represent(W.NET_BASE, m)
    assert pids(t) == {Pid()}
    assert is_representation(W.NET_BASE, t, m)
    assert strip(t, retained_pids(W.NET_BASE, m)) == t


def test_strip_keeps_orphan_cousins_with_shared_prefix_fragments():
    # two workers under one dead parent: both fragments carry prefix 2
    m = Marking({"g": [(P("1"), 3), (P("1.2.1"), 0), (P("1.2.3"), 0)]})
    t = strip(represent(W.NET_BASE, m), retained_pids(W.NET_BASE, m))
    frags = [str(f) for f, _ in t.child(P("1")).children]
    assert frags == ["4", "2.1", "2.3"]
