#!/usr/bin/env python3
"""Solve LP files written by `emit_lp` with scipy's MILP solver.

Usage: lp_crosscheck.py model.lp [model.lp ...]

Prints the solver status and optimal objective for each file. Only the LP
subset produced by the emitter is understood: one objective, named rows,
a Binaries section, default bounds [0, inf) for everything else.
"""

import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

SECTIONS = ("Minimize", "Subject To", "Binaries", "End")


def statements(text):
    """Yields (section, statement) with continuation lines joined."""
    section, buf = None, []
    for line in text.splitlines():
        if line.startswith("\\"):
            continue
        if line in SECTIONS:
            if buf:
                yield section, " ".join(buf)
                buf = []
            section = line
            continue
        # a new named row starts with a single space, continuations with three
        if buf and section != "Binaries" and line.startswith(" ") and not line.startswith("   "):
            yield section, " ".join(buf)
            buf = []
        buf.append(line.strip())
    if buf:
        yield section, " ".join(buf)


def terms(expr):
    out, sign, coef = [], 1.0, None
    for tok in expr.split():
        if tok in "+-":
            sign = 1.0 if tok == "+" else -1.0
            continue
        try:
            coef = float(tok)
            continue
        except ValueError:
            pass
        out.append((sign * (1.0 if coef is None else coef), tok))
        sign, coef = 1.0, None
    return out


def solve(path):
    objective, rows, binaries = [], [], set()
    for section, stmt in statements(open(path).read()):
        if section == "Minimize":
            objective = terms(stmt.split(":", 1)[1])
        elif section == "Subject To":
            body = stmt.split(":", 1)[1].strip()
            m = re.match(r"(.*)\s(<=|>=|=)\s(\S+)$", body)
            rows.append((terms(m.group(1)), m.group(2), float(m.group(3))))
        elif section == "Binaries":
            binaries.update(stmt.split())

    index = {}
    for _, name in objective + [t for row in rows for t in row[0]]:
        index.setdefault(name, len(index))
    n = len(index)

    c = np.zeros(n)
    for coef, name in objective:
        c[index[name]] += coef
    a = np.zeros((len(rows), n))
    lo, hi = [], []
    for i, (row, sense, rhs) in enumerate(rows):
        for coef, name in row:
            a[i, index[name]] += coef
        lo.append(rhs if sense in (">=", "=") else -np.inf)
        hi.append(rhs if sense in ("<=", "=") else np.inf)

    names = sorted(index, key=index.get)
    integrality = np.array([1 if v in binaries else 0 for v in names])
    upper = np.array([1.0 if v in binaries else np.inf for v in names])
    return milp(c, constraints=LinearConstraint(a, lo, hi), integrality=integrality, bounds=Bounds(0, upper))


if __name__ == "__main__":
    for path in sys.argv[1:]:
        res = solve(path)
        print(f"{path}: status={res.status} objective={res.fun}")
