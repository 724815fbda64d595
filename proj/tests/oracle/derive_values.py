"""Independent reference values for the C++ test suite.

Uses only Python integers and fractions (no code shared with the library).
Run: python3 tests/oracle/derive_values.py
"""
import itertools
import random
from fractions import Fraction
from math import gcd


def det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


def rank(m):
    rows = [[Fraction(x) for x in r] for r in m]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def matmul(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def max_minor(a):
    n = len(a[0])
    best, arg = -1, None
    for s in itertools.combinations(range(len(a)), n):
        d = abs(det([a[i] for i in s]))
        if d > best:
            best, arg = d, s
    return best, arg


def canonical_key(z):
    # smaller 1-norm, then per position larger magnitude, then positive
    return (sum(abs(x) for x in z), [(-abs(x), -x) for x in z])


def brute(a, k):
    n = len(a[0])
    best = None
    for z in itertools.product(range(-k, k + 1), repeat=n):
        if not any(z):
            continue
        norm = max(abs(y) for y in matmul(a, z))
        key = (norm, canonical_key(z))
        if best is None or key < best[0]:
            best = (key, z)
    return best[0][0], list(best[1])


def lower_bound(delta):
    arcs = [(i, j) for i in range(delta) for j in range(i + 1, delta)]
    t = [[(1 if c == i else -1 if c == j else 0) for c in range(delta - 1)] for i, j in arcs]
    b = [[1 if r == c else 0 for c in range(delta - 1)] for r in range(delta - 1)]
    b[-1] = [delta - 1] * (delta - 2) + [delta]
    return [[sum(t[r][k] * b[k][c] for k in range(delta - 1)) for c in range(delta - 1)] for r in range(len(t))]


def main():
    rng = random.Random(20240611)
    print("# random 4x4 determinants")
    for _ in range(3):
        m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        print(m, det(m))
    print("# 5x5")
    m = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
    print(m, det(m))

    for d in (4, 5):
        a = lower_bound(d)
        print("# lower_bound", d, a, "max minor", max_minor(a))
    a = lower_bound(3)
    print("# brute lower_bound(3) K=2", brute(a, 2))
    print("# brute lower_bound(4) K=2", brute(lower_bound(4), 2))
    print("# brute [[1,0],[1,2],[2,2]] K=2", brute([[1, 0], [1, 2], [2, 2]], 2))
    print("# rank [[1,2],[2,4],[0,1]]", rank([[1, 2], [2, 4], [0, 1]]))
    a = [[1, 0], [0, 1], [1, 1], [1, -1]]
    print("# max minor", a, max_minor(a))

    # Kernel-lattice minor identity on a fixed 2x4 matrix: kernel basis computed by brute search
    a = [[1, 2, 0, 3], [0, 1, 1, -1]]
    minors = {s: abs(det([[row[c] for c in s] for row in a])) for s in itertools.combinations(range(4), 2)}
    g = 0
    for v in minors.values():
        g = gcd(g, v)
    print("# kernel minors A", a, "gcd", g, {s: Fraction(v, g) for s, v in minors.items()})

    # hull of {x >= 0, 2x1 + 3x2 <= 7, x1 <= 3}
    pts = [(x, y) for x in range(0, 5) for y in range(0, 5) if 2 * x + 3 * y <= 7 and x <= 3]
    print("# integer points", pts)


if __name__ == "__main__":
    main()
