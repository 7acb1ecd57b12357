"""State extraction, pid sets and the clean-marking test."""

import pytest

import worked_examples as W
from pidsym import Marking, Pid, is_clean, pids_of, state_of
from pidsym.state import MalformedGenerator

P = Pid.parse


def test_state_of_initial():
    s = state_of(W.NET_BASE, W.NET_BASE.init)
    assert s.sigma.is_empty()
    assert s.counters() == {P("1"): 0}
    sets = pids_of(s)
    assert sets.pids == {P("1")}
    assert sets.nextpids == {P("1.1")}


def test_state_of_tworep_marking():
    s = state_of(W.NET_BASE, W.TWOREP_MARKING)
    assert s.counters() == {P("1"): 1, P("1.1.2"): 0}
    assert s.sigma.tokens("g") == ()
    sets = pids_of(s)
    assert sets.pids == {P("1"), P("1.1.2")}
    assert sets.nextpids == {P("1.2"), P("1.1.2.1")}
    assert sets.active == sets.pids


def test_data_tokens_contribute_no_pids():
    m = Marking({"s1": [(5,)], "g": [(P("1"), 0)]})
    sets = pids_of(state_of(W.NET_BASE, m))
    assert sets.pids == {P("1")}


def test_malformed_generator_token():
    with pytest.raises(MalformedGenerator):
        state_of(W.NET_BASE, Marking({"g": [(1, 0)]}))
    with pytest.raises(MalformedGenerator):
        state_of(W.NET_BASE, Marking({"g": [(P("1"), -1)]}))


def test_next_of():
    s = state_of(W.NET_BASE, W.TWOREP_MARKING)
    assert s.next_of(P("1")) == P("1.2")
    assert s.next_of(P("1.1.2")) == P("1.1.2.1")
    with pytest.raises(KeyError):
        s.next_of(P("9"))


def test_is_clean_initial():
    assert is_clean(W.NET_BASE, W.NET_BASE.init)


def test_is_clean_tworep_marking_is_dirty():
    # 1.1.2 is active but its parent 1.1 appears in no token
    assert not is_clean(W.NET_BASE, W.TWOREP_MARKING)


def test_is_clean_generator_only_child():
    m = Marking({"g": [(P("1"), 1), (P("1.1"), 0)]})
    assert is_clean(W.NET_BASE, m)


def test_next_pid_needs_active_parent():
    # 1.1 is generative (hence active); its next pid 1.1.1 is fine, but a
    # generative orphan 1.2.1 makes the marking dirty via its next pid too.
    dirty = Marking({"g": [(P("1"), 2), (P("1.2.1"), 0)]})
    assert not is_clean(W.NET_BASE, dirty)
