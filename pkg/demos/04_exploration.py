"""State-space exploration under the four visited-set keys.

spawn_reap forever creates short-lived workers, so the concrete state
space is infinite (pids are never reused and the spawn counter keeps
climbing).  The stripped-tree keys identify markings up to pid renaming
and reach a fixpoint of 14 classes; the brute-force oracle confirms the
quotient is exact.  The audit mode re-checks every merge with the
equivalence oracle and the bisimulation property.

Run: python demos/04_exploration.py
"""

from pidsym import ExploreOptions, explore, load_model

net = load_model("spawn_reap")

print(f"{'mode':10} {'states':>8} {'edges':>7} {'truncated':>10}")
for mode in ("none", "expanded", "stripped", "oracle"):
    space = explore(net, ExploreOptions(mode=mode, max_states=10000))
    print(f"{mode:10} {space.state_count():8} {space.edge_count():7} {str(space.truncated):>10}")
print()

audited = explore(net, ExploreOptions(mode="stripped", validate=True))
print(
    f"audit: {audited.merges_audited} merges checked against the oracle, "
    f"{audited.audit_failures} failures"
)
print()
print("one representative per class (first three):")
for key, marking in list(audited.states.items())[:3]:
    print(f"  {key.hex()[:24]}...  {marking}")
