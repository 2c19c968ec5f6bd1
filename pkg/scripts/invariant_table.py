#!/usr/bin/env python3
"""Invariant table with aggregate statistics over the connected census.

Computes the eight coloring invariants (four connection numbers, three
disconnection numbers, and the proper-rainbow connection number) for every
connected graph up to a given order, prints the per-graph table, and then
summarizes how tight the standard bounds are across the census: how often
the rainbow value meets its diameter lower bound, how often the
monochromatic value meets m - n + 2, the value distribution of each column,
and the extremal graphs per column.

Usage:
    python scripts/invariant_table.py --max-n 5
    python scripts/invariant_table.py --max-n 4 --format json
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass

from chromaconn import (
    Pattern,
    connected_graphs_up_to,
    connection_number,
    diameter,
    disconnection_number,
    proper_rainbow_connection_number,
    write_graph6,
)

COLUMNS = ("rc", "pc", "mc", "cfc", "rd", "pd", "md", "prc")


@dataclass(frozen=True)
class Config:
    max_n: int = 5
    fmt: str = "text"
    budget: int = 10_000_000


def parse_config(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5,
                        help="largest graph order to include (default 5)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--budget", type=int, default=10_000_000,
                        help="coloring budget per solver call")
    args = parser.parse_args(argv)
    if not 1 <= args.max_n <= 7:
        parser.error("--max-n must be between 1 and 7")
    return Config(max_n=args.max_n, fmt=args.format, budget=args.budget)


def invariant_row(graph, budget):
    conn = {p: connection_number(graph, p, budget=budget).value for p in Pattern}
    disc = {
        p: disconnection_number(graph, p, budget=budget).value
        for p in (Pattern.RAINBOW, Pattern.PROPER, Pattern.MONOCHROMATIC)
    }
    return {
        "graph": write_graph6(graph),
        "n": graph.n,
        "m": graph.m,
        "rc": conn[Pattern.RAINBOW],
        "pc": conn[Pattern.PROPER],
        "mc": conn[Pattern.MONOCHROMATIC],
        "cfc": conn[Pattern.CONFLICT_FREE],
        "rd": disc[Pattern.RAINBOW],
        "pd": disc[Pattern.PROPER],
        "md": disc[Pattern.MONOCHROMATIC],
        "prc": proper_rainbow_connection_number(graph, budget=budget).value,
        "diameter": diameter(graph),
    }


def summarize(rows):
    multi = [r for r in rows if r["n"] >= 2]
    summary = {
        "graphs": len(rows),
        "rainbow_meets_diameter": sum(1 for r in multi if r["rc"] == r["diameter"]),
        "rainbow_meets_edge_count": sum(1 for r in multi if r["rc"] == r["m"]),
        "mono_meets_cycle_bound": sum(
            1 for r in multi if r["mc"] == r["m"] - r["n"] + 2
        ),
        "proper_below_rainbow": sum(1 for r in multi if r["pc"] < r["rc"]),
        "distributions": {
            col: dict(sorted(Counter(r[col] for r in multi).items()))
            for col in COLUMNS
        },
        "extremal": {
            col: {
                "max": max(r[col] for r in multi),
                "graphs": [r["graph"] for r in multi
                           if r[col] == max(x[col] for x in multi)],
            }
            for col in COLUMNS
        },
    }
    return summary


def print_text(rows, summary, out):
    headers = ("graph", "n", "m", *COLUMNS, "diameter")
    table = [headers] + [tuple(str(r[h]) for h in headers) for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    for row in table:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        out.write("\n")
    out.write("\n")
    multi = summary["graphs"]
    out.write(f"graphs: {multi}\n")
    out.write(
        f"rainbow value equals diameter on {summary['rainbow_meets_diameter']} "
        f"graphs, equals edge count on {summary['rainbow_meets_edge_count']}\n"
    )
    out.write(
        f"monochromatic value meets m-n+2 on "
        f"{summary['mono_meets_cycle_bound']} graphs\n"
    )
    out.write(
        f"proper value strictly below rainbow on "
        f"{summary['proper_below_rainbow']} graphs\n"
    )
    for col in COLUMNS:
        dist = summary["distributions"][col]
        ext = summary["extremal"][col]
        body = ", ".join(f"{v}x{c}" for v, c in dist.items())
        out.write(
            f"{col:>4}: {body}; max {ext['max']} at {' '.join(ext['graphs'])}\n"
        )


def main(argv=None) -> int:
    cfg = parse_config(argv)
    rows = [invariant_row(g, cfg.budget)
            for g in connected_graphs_up_to(cfg.max_n)]
    summary = summarize(rows)
    if cfg.fmt == "json":
        json.dump({"rows": rows, "summary": summary}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print_text(rows, summary, sys.stdout)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
