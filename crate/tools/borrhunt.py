import subprocess, sys, itertools
sys.path.insert(0, 'tools')
from pdgen import braid, variants_of
BIN = "target/release/examples/scratch"

def run(pd, mode, maxd):
    return subprocess.run([BIN, pd, mode, str(maxd)], capture_output=True, text=True).stdout

def base_variants(pd_text):
    """All per-component base-arc rotations of a PD, as relabeled texts."""
    out = run(pd_text, "quick", "3")
    comps = []
    for line in out.splitlines():
        if line.startswith("edges"):
            comps.append([int(x) for x in line.split("=")[1].split(",")])
    crossings = []
    for tok in pd_text.split():
        crossings.append([int(x) for x in tok[2:-1].split(",")])
    variants = []
    # component key order must stay: comp1 < comp2 < comp3 by min label
    for rots in itertools.product(*[range(0, len(c), 2) for c in comps]):
        relabel = {}
        nxt = 1
        for ci, (comp, rot) in enumerate(zip(comps, rots)):
            rotated = comp[rot:] + comp[:rot]
            for lab in rotated:
                relabel[lab] = None
        # assign labels: component by component, traversal order from rotated start
        nxt = 1
        for comp, rot in zip(comps, rots):
            rotated = comp[rot:] + comp[:rot]
            for lab in rotated:
                relabel[lab] = nxt
                nxt += 1
        text = " ".join("X(%d,%d,%d,%d)" % tuple(relabel[l] for l in x) for x in crossings)
        variants.append((rots, text))
    return variants

b = braid([1,-2,1,-2,1,-2], 3)
hits = []
for tag, dirs, text in variants_of(b):
    for rots, pd2 in base_variants(text):
        out = run(pd2, "ledger", "5")
        for line in out.splitlines():
            if line.startswith("borrperm") and line.split()[-1] == "111111111":
                hits.append((tag, dirs, rots, line.split()[1:4], pd2))
                print("HIT", tag, dirs, rots, line.split()[1:4])
                print("  PD:", pd2)
for line in (["no hits"] if not hits else []):
    print(line)
