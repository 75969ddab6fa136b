import subprocess, sys, itertools
sys.path.insert(0, 'tools')
from pdgen import braid, variants_of
SCR = "target/release/examples/scratch"

def words(length):
    letters = [1, -1, 2, -2]
    for w in itertools.product(letters, repeat=length - 1):
        word = (1,) + w
        # skip adjacent cancellations (cyclically)
        if any(word[i] == -word[(i + 1) % length] for i in range(length)):
            continue
        # each generator must appear at least twice overall for irreducibility
        if sum(1 for x in word if abs(x) == 2) < 2:
            continue
        yield word

items = []
seen = set()
for length in (7, 8):
    for w in words(length):
        try:
            vs = variants_of(braid(list(w), 3))
        except Exception:
            continue
        for tag, dirs, text in vs:
            if text in seen:
                continue
            seen.add(text)
            items.append((f"B{w}{tag}{dirs}", text))
print(f"{len(items)} diagrams", file=sys.stderr)
proc = subprocess.Popen([SCR, "batch", "6"], stdin=subprocess.PIPE, stdout=subprocess.PIPE, text=True)
out, _ = proc.communicate("\n".join(t for _, t in items) + "\n", timeout=3000)
rows = {}
for (name, text), block in zip(items, out.split("END\n")):
    info = {"psi": {}}
    for line in block.splitlines():
        if line.startswith("q="):
            for p in line.split():
                k, v = p.split("=")
                info[k] = v
        elif line.startswith("m="):
            info["m"] = line[2:]
        elif line.startswith("psi "):
            _, j, _, expr = line.split(None, 3)
            info["psi"][int(j)] = expr
    if info.get("q") != "2":
        continue
    lk = info.get("lk", "9,9,9,9").split(",")
    if lk[1] != "0":
        continue
    if info.get("m") in ("?", None) or info.get("m", "").startswith("trivial"):
        continue
    key = (info.get("c"), info.get("m"), info["psi"].get(1, "?"), info.get("alt"))
    rows.setdefault(key, []).append((name, text))
for key in sorted(rows, key=str):
    c, m, psi1, alt = key
    print(f"c={c} m={m} alt={alt} psi1={psi1} count={len(rows[key])}")
    print("   e.g.", rows[key][0][0], "|", rows[key][0][1])
