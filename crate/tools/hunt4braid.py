import subprocess, sys, itertools, collections
sys.path.insert(0, 'tools')
from pdgen import braid, variants_of
SCR = "target/release/examples/scratch"

def closure_info(word, strands):
    """cycle partition of strand positions + pairwise signed crossing counts"""
    perm = list(range(strands))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # cycles of the permutation taking top position -> bottom position
    mapping = {perm[i]: i for i in range(strands)}  # strand at top slot s ends at slot...
    seen, cycles = set(), []
    for s in range(strands):
        if s in seen:
            continue
        cyc, cur = [], s
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = mapping[cur]
        cycles.append(cyc)
    if len(cycles) != 2:
        return None
    comp_of = {}
    for ci, cyc in enumerate(cycles):
        for s in cyc:
            comp_of[s] = ci
    # trace positions through the braid to count inter-component signs
    pos = list(range(strands))  # strand id at each position, strand = top slot
    lk2 = 0
    for g in word:
        i = abs(g) - 1
        a, b = pos[i], pos[i + 1]
        if comp_of[a] != comp_of[b]:
            lk2 += 1 if g > 0 else -1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return lk2

items, seen = [], set()
letters = [1, -1, 2, -2, 3, -3]
nwords = 0
for w in itertools.product(letters, repeat=7):
    word = (1,) + w
    if any(word[i] == -word[(i + 1) % 8] for i in range(8)):
        continue
    gens = collections.Counter(abs(x) for x in word)
    if gens[1] < 2 or gens[2] < 2 or gens[3] < 2:
        continue
    info = closure_info(word, 4)
    if info is None or info != 0:
        continue
    nwords += 1
    try:
        vs = variants_of(braid(list(word), 4))
    except Exception:
        continue
    for tag, dirs, text in vs:
        if text in seen:
            continue
        seen.add(text)
        items.append((f"B4{word}{tag}{dirs}", text))
print(f"{nwords} words, {len(items)} diagrams", file=sys.stderr)
proc = subprocess.Popen([SCR, "batch", "6", "2"], stdin=subprocess.PIPE, stdout=subprocess.PIPE, text=True)
out, _ = proc.communicate("\n".join(t for _, t in items) + "\n", timeout=520)
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
    if "m" not in info or info["m"].startswith("trivial"):
        continue
    key = (info.get("c"), info.get("m"), info["psi"].get(1, "?"), info.get("alt"))
    rows.setdefault(key, []).append((name, text))
for key in sorted(rows, key=str):
    c, m, psi1, alt = key
    print(f"c={c} m={m} alt={alt} psi1={psi1} count={len(rows[key])}")
    for ex in rows[key][:2]:
        print("   e.g.", ex[0], "|", ex[1])
