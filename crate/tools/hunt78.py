import subprocess, sys, itertools
sys.path.insert(0, 'tools')
from pdgen import braid, rational, pretzel, variants_of
SCR = "target/release/examples/scratch"

def candidates():
    def compositions(total, maxlen):
        if maxlen == 1:
            yield (total,)
            return
        for first in range(1, total + 1):
            if first == total:
                yield (total,)
            else:
                for rest in compositions(total - first, maxlen - 1):
                    yield (first,) + rest
    for total in (7, 8):
        for vec in compositions(total, 4):
            for closure in ("numerator", "denominator"):
                yield (f"C{vec}{closure[0]}", rational(list(vec), closure))
        # one-negative-entry variants for non-alternating candidates
        for vec in compositions(total, 3):
            for i in range(len(vec)):
                signed = list(vec)
                signed[i] = -signed[i]
                for closure in ("numerator", "denominator"):
                    yield (f"C{tuple(signed)}{closure[0]}", rational(signed, closure))
    for vec in itertools.product([1, 2, 3, 4, -2, -3], repeat=3):
        if 7 <= sum(abs(a) for a in vec) <= 8:
            yield (f"P{vec}", pretzel(list(vec)))

items = []
seen_text = set()
for name, b in candidates():
    try:
        vs = variants_of(b)
    except Exception:
        continue
    for tag, dirs, text in vs:
        if text in seen_text:
            continue
        seen_text.add(text)
        items.append((name + tag + str(dirs), text))
print(f"{len(items)} candidate diagrams", file=sys.stderr)

proc = subprocess.Popen([SCR, "batch", "7"], stdin=subprocess.PIPE, stdout=subprocess.PIPE, text=True)
out, _ = proc.communicate("\n".join(t for _, t in items) + "\n", timeout=560)
blocks = out.split("END\n")
rows = {}
for (name, text), block in zip(items, blocks):
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
    key = (info.get("c"), info.get("m", "?"), info["psi"].get(1, "?"), info.get("alt"))
    rows.setdefault(key, []).append((name, text))

for key in sorted(rows, key=str):
    c, m, psi1, alt = key
    examples = rows[key]
    print(f"c={c} m={m} alt={alt} psi1={psi1} count={len(examples)}")
    print("   e.g.", examples[0][0], "|", examples[0][1])
