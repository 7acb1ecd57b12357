"""Process identifiers: structure, the five relations, the hierarchical order.

A pid records spawn ancestry: 1.2.3 is the third child of the second
child of the root process 1.  Models may compare pids in exactly five
ways, and the explorer's canonical forms rest on those five relations
plus one total order.

Run: python demos/01_pid_algebra.py
"""

from pidsym import Pid, cmp_hier
from pidsym.pid import concat, prefix, rel, subpid

P = Pid.parse

root = P("1")
worker = P("1.2")
grandchild = P("1.2.3")

print("pid          :", grandchild)
print("prefix       :", prefix(grandchild))
print("subpids      :", sorted(map(str, subpid(grandchild))))
print("concatenation:", concat(root, P("2.3")))
print()

pairs = [
    ("child (parent-of)", "child", root, worker),
    ("ancestor", "ancestor", root, grandchild),
    ("immediate elder sibling", "sib_next", P("1.2.1"), P("1.2.2")),
    ("elder sibling", "sib_elder", P("1.2.1"), P("1.2.5")),
    ("top-level pids are never siblings", "sib_next", P("1"), P("2")),
]
for label, op, a, b in pairs:
    print(f"{label:38}: {a} {op} {b} -> {rel(op, a, b)}")
print()

# the hierarchical order sorts by length first, then lexicographically;
# this is what sibling-orders every pid-tree in the package
sample = [P("3"), P("1.1"), P("1"), P("2.1"), P("1.2"), P("1.1.1")]
print("hierarchically sorted:", [str(p) for p in sorted(sample)])
print("3 vs 1.1 ->", cmp_hier(P("3"), P("1.1")), "(shorter pids come first)")
