"""States extracted from markings: data part, spawn counters, pid sets.

The state of a marking separates the generator place from the rest:
``sigma`` is the marking restricted to ordinary places and ``eta`` maps
each generative pid to its spawn counter.  From these come the derived
pid sets (``pids``, ``nextpids``, ``active``) and the *clean marking*
test: a marking is clean when every active or next pid, other than the
root ``1``, has an active parent.  Clean markings are exactly the ones
on which the stripped-tree keys detect every symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .net import Marking, TNet
from .pid import EMPTY, Pid

__all__ = ["State", "PidSets", "MalformedGenerator", "state_of", "pids_of", "is_clean"]


class MalformedGenerator(ValueError):
    """A generator token is not a ⟨pid, counter⟩ pair."""


@dataclass(frozen=True)
class State:
    """sigma: non-generator marking; eta: spawn counters, sorted by pid."""

    sigma: Marking
    eta: tuple  # tuple[(Pid, int), ...] hierarchically sorted

    def counters(self) -> dict[Pid, int]:
        return dict(self.eta)

    def generative(self) -> tuple[Pid, ...]:
        return tuple(p for p, _ in self.eta)

    def next_of(self, p: Pid) -> Pid:
        for q, k in self.eta:
            if q == p:
                return p.child(k + 1)
        raise KeyError(p)


@dataclass(frozen=True)
class PidSets:
    pids: frozenset  # pids in sigma tokens plus the generative pids
    nextpids: frozenset  # p.(counter+1) for each generative p
    active: frozenset  # pids appearing in any token, generator included


def state_of(net: TNet, m: Marking) -> State:
    gen = net.generator.name
    eta = []
    for tok in m.tokens(gen):
        if len(tok) != 2 or not isinstance(tok[0], Pid) or not isinstance(tok[1], int) or tok[1] < 0:
            raise MalformedGenerator(f"generator token {tok!r} is not a (pid, counter) pair")
        eta.append((tok[0], tok[1]))
    eta.sort(key=lambda e: e[0].sort_key())
    return State(sigma=m.without(gen), eta=tuple(eta))


def pids_of(s: State) -> PidSets:
    generative = {p for p, _ in s.eta}
    sigma_pids = s.sigma.all_pids()
    pid_set = frozenset(sigma_pids | generative)
    nextpid_set = frozenset(p.child(k + 1) for p, k in s.eta)
    # Generator tokens are tokens, so their pids are active; the counter
    # is data and the next pid occurs in no token at all.
    return PidSets(pids=pid_set, nextpids=nextpid_set, active=pid_set)


def is_clean(net: TNet, m: Marking) -> bool:
    """True when every active-or-next pid except the root has an active parent."""
    sets = pids_of(state_of(net, m))
    for p in sets.active | sets.nextpids:
        parent = p.prefix
        if parent == EMPTY:
            continue
        if parent not in sets.active:
            return False
    return True
