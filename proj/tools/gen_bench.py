#!/usr/bin/env python3
"""Writes the fd-type benchmark fixtures used by the bench tests.

The symmetric functions (rd53, rd73, rd84, xor5) are written as full
truth tables.  The rnd* files are cube lists drawn from a fixed seed, with
don't cares, so that every output has a non-empty dc-set.

    python3 tools/gen_bench.py tests/data/bench
"""

import argparse
import pathlib
import random


def truth_table(name, n, outputs, fn):
    rows = []
    for m in range(1 << n):
        bits = [(m >> i) & 1 for i in range(n)]
        out = fn(bits)
        if any(out):
            rows.append("".join(str(b) for b in bits) + " " + "".join(str(o) for o in out))
    return render(name, n, outputs, rows)


def render(name, n, outputs, rows):
    lines = [f"# {name}", f".i {n}", f".o {outputs}", ".type fd", f".p {len(rows)}"]
    lines += rows
    lines.append(".e")
    return "\n".join(lines) + "\n"


def weight_bits(bits, width):
    w = sum(bits)
    return [(w >> (width - 1 - k)) & 1 for k in range(width)]


def random_cubes(name, n, outputs, on_cubes, dc_cubes, literals, rng):
    rows = []

    def cube():
        s = ["-"] * n
        for v in rng.sample(range(n), literals):
            s[v] = rng.choice("01")
        return "".join(s)

    for _ in range(on_cubes):
        out = [rng.random() < 0.6 for _ in range(outputs)]
        if not any(out):
            out[rng.randrange(outputs)] = True
        rows.append(cube() + " " + "".join("1" if o else "0" for o in out))
    for _ in range(dc_cubes):
        out = ["0"] * outputs
        out[rng.randrange(outputs)] = "-"
        rows.append(cube() + " " + "".join(out))
    return render(name, n, outputs, rows)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("directory", type=pathlib.Path)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    files = {
        "rd53": truth_table("rd53", 5, 3, lambda b: weight_bits(b, 3)),
        "rd73": truth_table("rd73", 7, 3, lambda b: weight_bits(b, 3)),
        "rd84": truth_table("rd84", 8, 4, lambda b: weight_bits(b, 4)),
        "xor5": truth_table("xor5", 5, 1, lambda b: [sum(b) & 1]),
        "rnd8": random_cubes("rnd8", 8, 3, 14, 4, 4, rng),
        "rnd12": random_cubes("rnd12", 12, 2, 20, 6, 6, rng),
        "rnd16": random_cubes("rnd16", 16, 2, 18, 5, 8, rng),
        "rnd24": random_cubes("rnd24", 24, 1, 12, 3, 12, rng),
    }
    args.directory.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (args.directory / f"{name}.pla").write_text(text)


if __name__ == "__main__":
    main()
