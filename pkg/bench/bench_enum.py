"""Benchmark the compiled enumeration kernel against the pure one.

Runs the same integer Gram problems through both kernels, checks the
results agree vector for vector, and prints a timing table.  Invoke from
the repository root:

    python3 bench/bench_enum.py
"""

import random
import time
from fractions import Fraction

from liespec.lattices import _enum_py, enumeration
from liespec.lattices.enumeration import _integer_problem
from liespec.linalg import matmul, transpose


def _random_gram(rng, m):
    while True:
        b = tuple(
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(m))
            for _ in range(m)
        )
        g = matmul(transpose(b), b)
        if all(g[i][i] > 0 for i in range(m)):
            det = 1
            for i in range(m):
                det *= g[i][i]
            if det:
                return g


def _cases():
    rng = random.Random(20240817)
    eye4 = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(4))
        for i in range(4)
    )
    hexa = ((Fraction(2), Fraction(1)), (Fraction(1), Fraction(2)))
    yield "identity4 bound 60", eye4, Fraction(60)
    yield "identity4 bound 120", eye4, Fraction(120)
    yield "hexagonal bound 400", hexa, Fraction(400)
    for k in range(3):
        g = _random_gram(rng, 4)
        yield f"random4 #{k} bound 80", g, Fraction(80)


def _run(kernel, a, bound):
    t0 = time.perf_counter()
    out = kernel(a, bound)
    return time.perf_counter() - t0, sorted(out)


def main():
    if enumeration._enum_core is None:
        print("compiled kernel unavailable; nothing to compare")
        return
    rows = []
    for label, gram, bound in _cases():
        a, b_int, _ = _integer_problem(gram, bound)
        arows = [[int(x) for x in row] for row in a]
        t_c, out_c = _run(
            enumeration._enum_core.short_vectors_int, arows, b_int
        )
        t_p, out_p = _run(_enum_py.short_vectors_int, a, b_int)
        assert out_c == out_p, f"kernel mismatch on {label}"
        rows.append((label, len(out_c), t_c, t_p))
    width = max(len(r[0]) for r in rows)
    print(
        f"{'case':<{width}}  {'vectors':>8}  {'compiled':>10}  "
        f"{'pure':>10}  {'speedup':>8}"
    )
    for label, n, t_c, t_p in rows:
        speed = t_p / t_c if t_c > 0 else float("inf")
        print(
            f"{label:<{width}}  {n:>8}  {t_c * 1e3:>8.2f}ms  "
            f"{t_p * 1e3:>8.2f}ms  {speed:>7.1f}x"
        )


if __name__ == "__main__":
    main()
