"""Symmetry detection without isomorphism search: equivalence and signatures.

Two markings that differ only in process identities get equivalent
pid-trees; the canonical signature turns that equivalence into plain
byte equality, so the visited set of an explorer is one hash lookup.
This demo replays the four-tree worked example: T1 and T2 are the same
state up to renaming, T3 and T4 break an offset or a marking condition.

Run: python demos/03_signatures.py
"""

import hashlib

from pidsym import Marking, Pid, PlaceDecl, TNet, signature, strip_marking, tree_equivalent

P = Pid.parse

net = TNet(
    name="demo",
    places=(
        PlaceDecl("g", ("P", "D"), generator=True),
        PlaceDecl("s1", ("P",)),
        PlaceDecl("s2", ("P", "P", "P")),
    ),
    transitions=(),
    init=Marking({"g": [(P("1"), 0)]}),
)


def state(token, counters):
    return Marking(
        {
            "s1": [(P("1"),)],
            "s2": [tuple(P(x) for x in token)],
            "g": [(P(p), k) for p, k in counters],
        }
    )


markings = {
    "T1": state(("1.1", "1.2.1", "1.2.2"), [("1", 2), ("1.1", 0)]),
    "T2": state(("1.4", "1.3.1", "1.3.2"), [("1", 6), ("1.4", 1)]),
    "T3": state(("1.4", "1.3.1", "1.3.2"), [("1", 4), ("1.4", 1)]),
    "T4": state(("1.4", "1.3.1", "1.3.3"), [("1", 5), ("1.4", 1)]),
}

trees = {name: strip_marking(net, m) for name, m in markings.items()}
for name, tree in trees.items():
    digest = hashlib.sha256(signature(tree).data).hexdigest()[:16]
    print(f"{name}: {tree}")
    print(f"    signature digest {digest}  ({len(signature(tree).data)} bytes)")
print()

h = tree_equivalent(trees["T1"], trees["T2"])
print("T1 ~ T2 via renaming:", h)
print()
for a, b in [("T1", "T3"), ("T1", "T4"), ("T3", "T4")]:
    eq = tree_equivalent(trees[a], trees[b])
    same_sig = signature(trees[a]) == signature(trees[b])
    print(f"{a} vs {b}: checker={'equivalent' if eq else 'different'}, signatures equal={same_sig}")
