"""From a marking to its pid-trees: represent, expand, strip, and DOT.

The running example is a marking with one shared token, two owned
tokens, and a generator place saying pid 1 has spawned once while the
grandchild 1.1.2 has spawned nothing yet.  Its expanded tree contains
the inactive scaffold pid 1.1; the stripped tree compresses it away and
keeps exactly the active pids and next pids.

Run: python demos/02_pid_trees.py
"""

from pidsym import (
    Marking,
    Pid,
    PlaceDecl,
    TNet,
    is_representation,
    pids,
    represent,
    retained_pids,
    strip,
    to_dot,
)

P = Pid.parse

net = TNet(
    name="demo",
    places=(
        PlaceDecl("g", ("P", "D"), generator=True),
        PlaceDecl("s1", ("D",)),
        PlaceDecl("s2", ("P",)),
    ),
    transitions=(),
    init=Marking({"g": [(P("1"), 0)]}),
)

marking = Marking(
    {
        "s1": [(12,)],
        "s2": [(P("1"),), (P("1.1.2"),)],
        "g": [(P("1"), 1), (P("1.1.2"), 0)],
    }
)

print("marking:", marking)
print()

expanded = represent(net, marking)
print("expanded tree  :", expanded)
print("tree pids      :", sorted(str(p) for p in pids(expanded)))

retained = retained_pids(net, marking)
print("active + next  :", sorted(str(p) for p in retained))

stripped = strip(expanded, retained)
print("stripped tree  :", stripped)
print()
print("both are representations of the marking:",
      is_representation(net, expanded, marking) and is_representation(net, stripped, marking))
print()
print("DOT of the stripped tree (render with `dot -Tpng`):")
print(to_dot(stripped))
