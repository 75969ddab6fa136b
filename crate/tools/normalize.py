"""Relabel a PD so components come in a chosen order with chosen base edges."""
import subprocess
SCR = "target/release/examples/scratch"

def components_of(pd_text):
    out = subprocess.run([SCR, pd_text, "quick", "2"], capture_output=True, text=True).stdout
    comps = []
    for line in out.splitlines():
        if line.startswith("edges"):
            comps.append([int(x) for x in line.split("=")[1].split(",")])
    return comps

def relabel(pd_text, order=None, rotations=None):
    comps = components_of(pd_text)
    q = len(comps)
    order = order or list(range(q))
    rotations = rotations or [0] * q
    mapping = {}
    nxt = 1
    for slot in range(q):
        comp = comps[order[slot]]
        rot = rotations[slot] % len(comp)
        for lab in comp[rot:] + comp[:rot]:
            mapping[lab] = nxt
            nxt += 1
    crossings = [[int(x) for x in tok[2:-1].split(",")] for tok in pd_text.split()]
    return " ".join("X(%d,%d,%d,%d)" % tuple(mapping[l] for l in x) for x in crossings)
