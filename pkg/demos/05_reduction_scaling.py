"""How the reduction scales: the fanout family and the whole bundle.

In fanout_n a leader starts n delegates; each delegate begets a worker
and dies, leaving workers that no model expression can tell apart.  The
concrete count grows like 3^n while the stripped quotient stays small,
and for n <= 4 the brute-force oracle certifies the quotient is exact.

Run: python demos/05_reduction_scaling.py
"""

from math import factorial

from pidsym import ExploreOptions, compare_reductions, explore, load_model

print(f"{'n':>2} {'none':>7} {'stripped':>9} {'oracle':>7} {'n!':>6}")
for n in range(2, 7):
    net = load_model("fanout_n", n=n)
    none = explore(net, ExploreOptions(mode="none")).state_count()
    stripped = explore(net, ExploreOptions(mode="stripped")).state_count()
    if n <= 4:
        oracle = str(explore(net, ExploreOptions(mode="oracle")).state_count())
    else:
        oracle = "-"
    print(f"{n:2} {none:7} {stripped:9} {oracle:>7} {factorial(n):6}")
print()

for name in ("clean_join", "ring"):
    report = compare_reductions(load_model(name), ExploreOptions(max_states=5000))
    rows = {row["mode"]: row for row in report["modes"]}
    counts = {mode: rows[mode].get("states", "skipped") for mode in rows}
    print(f"{name}: {counts}")
print()
print("clean_join keeps every marking clean, so its stripped quotient is exact;")
print("ring is a deterministic relay, so there is no symmetry to exploit.")
