"""
Which small graphs have circuit systems?
========================================

Runs the census over every connected graph on at most six vertices.
All graphs up to five vertices have a system; at six vertices a few
have none and a few more have no fundamental one.
"""

import io
from contextlib import redirect_stdout
from pathlib import Path

from cyclesystems.cli import main

data = Path(__file__).resolve().parent.parent / "tests" / "data"

for name in ["connected_upto5.g6", "connected_6.g6"]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(["census", str(data / name)])
    rows = [line.split("\t") for line in buf.getvalue().splitlines()[1:]]
    none = [r[0] for r in rows if r[3] == "false"]
    no_fund = [r[0] for r in rows if r[3] == "true" and r[4] == "false"]
    print(f"{name}: {len(rows)} graphs")
    print("  without a circuit system:", none)
    print("  with one but none fundamental:", no_fund)
