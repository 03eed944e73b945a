"""The verification suite and the command-line verbs, driven from Python.

Every verb writes JSON (and DOT where a picture helps) into the output directory.
The same calls work from a shell as ``python3 -m coxchains <verb> ...``.
"""

import json
import sys
import tempfile
from pathlib import Path

from coxchains.cli import main
from coxchains.verify import run_suite, summarize

results = run_suite("B3", jobs=2)
s = summarize("B3", results)
print(f"B3: {s['passed']} checks passed, {s['failed']} failed")
for r in results[:6]:
    print("  ", r.line())

out = Path(tempfile.mkdtemp(prefix="coxchains-"))
verbs = [
    ["gen", "--type", "A3"],
    ["mg", "--type", "A3", "--coxeter", "bipartite"],
    ["cambrian", "quotient", "--type", "A3", "--coxeter", "2,1,3"],
    ["cambrian", "chain-map", "--type", "D4"],
    ["bruhat", "map-f", "--n", "3"],
    ["experiment", "rhbo-extrema", "--type", "A3"],
]
for argv in verbs:
    code = main(argv + ["--out", str(out)])
    print("exit", code, " ".join(argv), file=sys.stderr)

print("\nfiles written:", sorted(p.name for p in out.iterdir()))
mg = json.loads((out / "mg.json").read_text())
print("bipartite A3 chain classes:", len(mg["classes"]))
cm = json.loads((out / "chain-map-1234.json").read_text())
print("D4 chain map is a contraction:", cm["summary"]["contraction"]["ok"])
