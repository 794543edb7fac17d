"""
Generate randomized Seifert data for the property checks: closed manifolds
with zero Euler number, periodic surface bundles, and SFS text in both
accepted spellings.
"""

import json
import math
import os
import random
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import DATA_DIR, RANDOM_SEED

from seifert import SeifertData


def _random_fiber(rng: random.Random, max_alpha: int) -> tuple:
    alpha = rng.randint(2, max_alpha)
    beta = rng.choice([b for b in range(1, alpha) if math.gcd(alpha, b) == 1])
    return alpha, beta


def random_closed_euler_zero(rng: random.Random, max_genus: int = 2, max_fibers: int = 5,
                             max_alpha: int = 12) -> SeifertData:
    """
    Closed data with e = 0: all fibers but the last are random, the last one
    cancels the fractional part of sum beta/alpha, and b takes the integer part.
    """
    while True:
        genus = rng.randint(0, max_genus)
        m = rng.randint(0, max_fibers)
        fibers = [_random_fiber(rng, max_alpha) for _ in range(max(m - 1, 0))]
        total = sum((Fraction(beta, alpha) for alpha, beta in fibers), Fraction(0))
        remainder = total - math.floor(total)
        if remainder:
            d = remainder.denominator
            if d > max_alpha:
                continue
            fibers.append((d, d - remainder.numerator))
            total += Fraction(d - remainder.numerator, d)
        return SeifertData(genus, 0, -int(total), tuple(fibers))


def random_bounded(rng: random.Random, max_genus: int = 2, max_boundary: int = 2,
                   max_fibers: int = 4, max_alpha: int = 12) -> SeifertData:
    fibers = tuple(_random_fiber(rng, max_alpha) for _ in range(rng.randint(0, max_fibers)))
    return SeifertData(rng.randint(0, max_genus), rng.randint(1, max_boundary), None, fibers)


def random_periodic_bundle(rng: random.Random) -> SeifertData:
    """Either a closed e = 0 manifold or a bounded one, with equal odds."""
    return random_closed_euler_zero(rng) if rng.random() < 0.5 else random_bounded(rng)


def random_seifert_data(rng: random.Random) -> SeifertData:
    """Any valid data, periodic or not."""
    boundary = rng.randint(0, 3)
    obstruction = rng.randint(-5, 5) if boundary == 0 else None
    fibers = tuple(_random_fiber(rng, 30) for _ in range(rng.randint(0, 6)))
    return SeifertData(rng.randint(0, 3), boundary, obstruction, fibers)


def random_sfs_text(rng: random.Random, M: SeifertData) -> str:
    """M written with random spacing, in the compact form when it applies and the coin says so."""
    def gap():
        return rng.choice(["", " ", "  ", "\t"])

    fibers = ("," + gap()).join(f"{beta}{gap()}/{gap()}{alpha}" for alpha, beta in M.fiber_invariants)
    if M.genus == 0 and M.is_closed and rng.random() < 0.5:
        return f"({gap()}{M.obstruction}{gap()};{gap()}{fibers}{gap()})"
    head = f"SFS{gap()}({gap()}g{gap()}={gap()}{M.genus},{gap()}s={M.boundary_count}"
    if M.is_closed:
        head += f",{gap()}b{gap()}={gap()}{M.obstruction}"
    return f"{head}{gap()};{gap()}{fibers}{gap()})"


def generate_instances(count: int = 100, seed: int = RANDOM_SEED, output_file: str = "random_instances.json"):
    """Write `count` instances of each kind to data/<output_file>."""
    rng = random.Random(seed)
    instances = {
        "closed_euler_zero": [str(random_closed_euler_zero(rng)) for _ in range(count)],
        "periodic_bundles": [str(random_periodic_bundle(rng)) for _ in range(count)],
        "sfs_text": [random_sfs_text(rng, random_seifert_data(rng)) for _ in range(count)],
    }
    output_path = os.path.join(DATA_DIR, output_file)
    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(instances, f, indent=2)
    print(f"Saved {3 * count} instances to {output_path}")
    return instances


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Generate random Seifert data")
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=RANDOM_SEED)
    args = parser.parse_args()

    generate_instances(args.count, args.seed)
