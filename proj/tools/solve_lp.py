#!/usr/bin/env python3
# Copyright 2026 The ctsyn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Mixed-integer solver bridge for ctsyn LP exports.

Usage: solve_lp.py MODEL.lp OUT.sol [TIME_BUDGET_SECONDS]

Reads the LP subset written by ctsyn (Minimize / Subject To / Bounds /
Generals / End, backslash comments, records split by "name:" labels) and
solves it with scipy's HiGHS-backed milp at zero relative gap. The solution
file holds one "name value" line per variable.

Exit codes: 0 proven optimal, 2 infeasible, 3 budget exhausted with an
incumbent written, 4 no usable result, 5 usage or parse error.
"""

import sys

import numpy as np
from scipy import sparse
from scipy.optimize import Bounds, LinearConstraint, milp


def parse_sections(path):
    sections = {"Minimize": [], "Subject To": [], "Bounds": [], "Generals": []}
    current = None
    with open(path, "r", encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line or line.startswith("\\"):
                continue
            marker = line.strip()
            if marker in sections:
                current = marker
                continue
            if marker == "End":
                current = None
                continue
            if current is None:
                raise ValueError(f"content outside any section: {line!r}")
            sections[current].append(line)
    return sections


def split_records(lines):
    """Splits a token stream into records starting at 'label:' tokens."""
    records = []
    for tok in " ".join(lines).split():
        if tok.endswith(":"):
            records.append((tok[:-1], []))
            continue
        if not records:
            raise ValueError(f"term {tok!r} before any label")
        records[-1][1].append(tok)
    return records


def parse_terms(tokens):
    """Parses '[+|-] coef name ...' tokens; returns (terms, rest)."""
    terms = []
    sign = 1.0
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1.0
            i += 1
            continue
        if tok == "-":
            sign = -1.0
            i += 1
            continue
        if tok in ("<=", ">=", "="):
            return terms, tokens[i:]
        coef = float(tok)
        name = tokens[i + 1]
        terms.append((name, sign * coef))
        sign = 1.0
        i += 2
    return terms, []


def main(argv):
    if len(argv) < 3 or len(argv) > 4:
        print(__doc__, file=sys.stderr)
        return 5
    lp_path, sol_path = argv[1], argv[2]
    budget = float(argv[3]) if len(argv) == 4 else 60.0

    try:
        sections = parse_sections(lp_path)

        # Variable universe and bounds. Every model variable has a Bounds line.
        names = []
        index = {}
        lower = []
        upper = []
        for line in sections["Bounds"]:
            toks = line.split()
            if len(toks) != 3 or toks[1] not in ("=", "<="):
                raise ValueError(f"unsupported bound: {line!r}")
            name, op, value = toks[0], toks[1], float(toks[2])
            if name not in index:
                index[name] = len(names)
                names.append(name)
                lower.append(0.0)
                upper.append(np.inf)
            if op == "=":
                lower[index[name]] = value
                upper[index[name]] = value
            else:
                upper[index[name]] = value

        obj_records = split_records(sections["Minimize"])
        if len(obj_records) != 1 or obj_records[0][0] != "obj":
            raise ValueError("expected a single obj: record under Minimize")
        obj_terms, rest = parse_terms(obj_records[0][1])
        if rest:
            raise ValueError("operator inside the objective")
        c = np.zeros(len(names))
        for name, coef in obj_terms:
            c[index[name]] += coef

        rows, cols, data = [], [], []
        con_lb, con_ub = [], []
        for row_id, (label, tokens) in enumerate(
            split_records(sections["Subject To"])
        ):
            terms, rest = parse_terms(tokens)
            if len(rest) != 2:
                raise ValueError(f"constraint {label} has no operator/rhs")
            op, rhs = rest[0], float(rest[1])
            for name, coef in terms:
                rows.append(row_id)
                cols.append(index[name])
                data.append(coef)
            if op == "=":
                con_lb.append(rhs)
                con_ub.append(rhs)
            elif op == "<=":
                con_lb.append(-np.inf)
                con_ub.append(rhs)
            else:
                con_lb.append(rhs)
                con_ub.append(np.inf)

        for tok in " ".join(sections["Generals"]).split():
            if tok not in index:
                raise ValueError(f"unknown integer variable {tok}")
    except (OSError, ValueError, IndexError) as e:
        print(f"solve_lp: {e}", file=sys.stderr)
        return 5

    a = sparse.csr_matrix(
        (data, (rows, cols)), shape=(len(con_lb), len(names))
    )
    res = milp(
        c=c,
        constraints=LinearConstraint(a, np.array(con_lb), np.array(con_ub)),
        integrality=np.ones(len(names)),
        bounds=Bounds(np.array(lower), np.array(upper)),
        options={"time_limit": budget, "mip_rel_gap": 0.0},
    )

    if res.status == 2:
        return 2
    if res.x is None:
        return 4
    with open(sol_path, "w", encoding="utf-8") as f:
        f.write(f"# objective {res.fun}\n")
        for name, value in zip(names, res.x):
            f.write(f"{name} {int(round(value))}\n")
    if res.status == 0:
        return 0
    if res.status == 1:
        return 3
    return 4


if __name__ == "__main__":
    sys.exit(main(sys.argv))
