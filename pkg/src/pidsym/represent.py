"""Building pid-tree representations of markings and their canonical forms.

``represent`` applies the three token rules and returns the *expanded*
form, in which every edge carries a length-1 fragment:

* a generator token ⟨p, i⟩ contributes the paths of ``p`` and of its
  next child ``p.(i+1)`` (the token itself is not stored in the tree);
* a shared token (data-owned) lands in the root marking, and each pid it
  references contributes its path;
* an owned token (pid-owned) lands at the owner's node, referenced pids
  again contribute their paths.

The expanded form is the unique maximal representation.  ``strip``
produces the unique minimal one by deleting every node that is neither
active nor a next pid, concatenating fragments across the deleted
nodes.  Both are deterministic and idempotent, and for clean markings
they coincide.
"""

from __future__ import annotations

from .net import Marking, TNet, Token
from .pid import EMPTY, Pid
from .pidtree import PidTree, check_wf, is_sibling_ordered, pids, subtrees
from .state import pids_of, state_of

__all__ = [
    "represent",
    "expand",
    "strip",
    "strip_marking",
    "retained_pids",
    "is_representation",
    "RetainedNotCovered",
]

EMPTY_MARKING = Marking()


class RetainedNotCovered(ValueError):
    """strip() was asked to retain pids that the tree does not contain."""


class _Builder:
    """Accumulates node markings keyed by pid, then freezes into a PidTree."""

    def __init__(self):
        self.nodes: dict[Pid, dict[str, list[Token]]] = {EMPTY: {}}

    def ensure(self, p: Pid):
        while p not in self.nodes:
            self.nodes[p] = {}
            p = p.prefix

    def put(self, p: Pid, place: str, token: Token):
        self.ensure(p)
        self.nodes[p].setdefault(place, []).append(token)

    def freeze(self) -> PidTree:
        kids: dict[Pid, list[Pid]] = {p: [] for p in self.nodes}
        for p in self.nodes:
            if p != EMPTY:
                kids[p.prefix].append(p)

        def build(p: Pid) -> PidTree:
            children = [(Pid(c.parts[len(p.parts):]), build(c)) for c in kids[p]]
            return PidTree(Marking(self.nodes[p]), children)

        return build(EMPTY)


def represent(net: TNet, m: Marking) -> PidTree:
    """The expanded-form representation of a marking (sibling ordered)."""
    gen = net.generator.name
    b = _Builder()
    for place, tok in m.all_tokens():
        if place == gen:
            p, i = tok
            b.ensure(p)
            b.ensure(p.child(i + 1))
            continue
        owner = tok[0] if isinstance(tok[0], Pid) else EMPTY
        b.put(owner, place, tok)
        for v in tok:
            if isinstance(v, Pid):
                b.ensure(v)
    return b.freeze()


def expand(t: PidTree) -> PidTree:
    """Split every fragment into length-1 edges; a fixpoint on expanded trees."""
    b = _Builder()
    for loc, node in subtrees(t):
        b.ensure(loc)
        for place, toks in node.marking.items():
            for tok in toks:
                b.put(loc, place, tok)
    return b.freeze()


def retained_pids(net: TNet, m: Marking) -> frozenset[Pid]:
    """What stripping keeps: the active pids and the next pids of m."""
    sets = pids_of(state_of(net, m))
    return frozenset(sets.active | sets.nextpids)


def strip(t: PidTree, retained: frozenset[Pid] | set[Pid]) -> PidTree:
    """The tree on exactly the retained pids, fragments joined across dropped nodes.

    Dropped nodes must carry no tokens (they are pure path scaffolding in
    any representation, since owners are active).
    """
    have = pids(t)
    missing = set(retained) - have
    if missing:
        raise RetainedNotCovered(f"pids not in tree: {sorted(missing, key=lambda p: p.sort_key())}")

    keep = {EMPTY} | set(retained)
    markings: dict[Pid, Marking] = {}
    for loc, node in subtrees(t):
        if loc in keep:
            markings[loc] = node.marking
        elif not node.marking.is_empty():
            raise ValueError(f"cannot strip node {loc}: it carries tokens")

    def anchor(p: Pid) -> Pid:
        q = p.prefix
        while q not in keep:
            q = q.prefix
        return q

    kids: dict[Pid, list[Pid]] = {p: [] for p in keep}
    for p in sorted(keep, key=lambda q: q.sort_key()):
        if p != EMPTY:
            kids[anchor(p)].append(p)

    def build(p: Pid) -> PidTree:
        children = [(Pid(c.parts[len(p.parts):]), build(c)) for c in kids[p]]
        return PidTree(markings[p], children)

    return build(EMPTY)


def strip_marking(net: TNet, m: Marking) -> PidTree:
    """The stripped-form representation of a marking."""
    return strip(represent(net, m), retained_pids(net, m))


def is_representation(net: TNet, t: PidTree, m: Marking) -> bool:
    """Does t represent m?  Checks the token rules, reconstruction and pid bounds."""
    if not check_wf(t) or not is_sibling_ordered(t):
        return False

    gen = net.generator.name
    sets = pids_of(state_of(net, m))
    tree_pids = pids(t) - {EMPTY}

    # Bounds: every pid and next pid appears; nothing beyond the subpid
    # closure plus the next pids ever does.
    if not (sets.pids | sets.nextpids) <= tree_pids:
        return False
    closure = set(sets.nextpids)
    for p in sets.pids:
        closure |= p.subpids()
    if not tree_pids <= closure:
        return False

    # Tokens sit exactly where the rules put them: shared at the root,
    # owned at the owner, generator tokens nowhere; and per place the
    # node markings reassemble the marking (the reconstruction identity).
    leftovers: dict[str, list[Token]] = {place: list(toks) for place, toks in m.items() if place != gen}
    for loc, node in subtrees(t):
        for place, toks in node.marking.items():
            if place == gen:
                return False
            for tok in toks:
                owner = tok[0] if isinstance(tok[0], Pid) else EMPTY
                if owner != loc:
                    return False
                try:
                    leftovers.get(place, []).remove(tok)
                except ValueError:
                    return False
    return not any(leftovers.values())
