#!/usr/bin/env python3
"""Brute-force K-theoretic DT values on C4 with a mass-tautological insertion.

Evaluates sum over solid partitions pi of size n of
    (-1)^sigma_4(pi) * [ -v^4_pi + y^a t^mu Z_pi ]
at fixed rational points (s1, s2, s3, sy), where [t^w] = s^w - s^-w is taken on
the representative of w with no t4 exponent. Writes a JSON fixture.
"""
import itertools
import json
import sys
from collections import Counter
from fractions import Fraction


def solid_partitions(n):
    cells = list(itertools.product(range(n), repeat=4))
    out = []
    for subset in itertools.combinations(cells, n):
        s = set(subset)
        closed = all(
            tuple(c[k] - (k == a) for k in range(4)) in s
            for c in s
            for a in range(4)
            if c[a] > 0
        )
        if closed:
            out.append(sorted(s))
    return out


def canon(w):
    # w = (a1, a2, a3, a4, mass) -> representative with a4 = 0
    d = w[3]
    return (w[0] - d, w[1] - d, w[2] - d, 0, w[4])


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def mul(c1, c2):
    out = Counter()
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            out[canon(add(w1, w2))] += m1 * m2
    return out


def combine(*pairs):
    out = Counter()
    for sign, c in pairs:
        for w, m in c.items():
            out[w] += sign * m
    return Counter({w: m for w, m in out.items() if m})


def axis(a):
    w = [0] * 5
    w[a] = 1
    return canon(tuple(w))


def sqrt_vertex_4(pi):
    z = Counter(canon((*b, 0)) for b in pi)
    zbar = Counter({neg(w): m for w, m in z.items()})
    pbar = Counter({canon((0,) * 5): 1})
    for a in range(3):
        pbar = mul(pbar, Counter({canon((0,) * 5): 1, neg(axis(a)): -1}))
    return combine((1, z), (-1, mul(pbar, mul(z, zbar)))), z


def sigma_4(pi):
    return len(pi) + sum(1 for b in pi if b[0] == b[1] == b[2] < b[3])


def bracket(w, s):
    x = Fraction(1)
    for e, v in zip((w[0], w[1], w[2], w[4]), s):
        x *= v ** e
    return x - 1 / x


def dt_k(n, mu, s):
    total = Fraction(0)
    for pi in solid_partitions(n):
        v, z = sqrt_vertex_4(pi)
        ins = Counter({canon(add(w, mu)): m for w, m in z.items()})
        c = combine((-1, v), (1, ins))
        assert canon((0,) * 5) not in c, "fixed part"
        term = Fraction((-1) ** sigma_4(pi))
        for w, m in c.items():
            term *= bracket(w, s) ** m
        total += term
    return total


POINTS = [
    (Fraction(2), Fraction(3), Fraction(5), Fraction(7)),
    (Fraction(1, 2), Fraction(3), Fraction(7, 3), Fraction(11, 5)),
    (Fraction(5, 3), Fraction(7, 4), Fraction(2, 7), Fraction(3)),
]
MUS = [(0, 0, 0, 0, 1), (1, 0, 0, 0, 1), (0, 0, 0, 1, 1)]


def main():
    fixtures = []
    for mu in MUS:
        for n in (1, 2):
            for s in POINTS:
                val = dt_k(n, canon(mu), s)
                fixtures.append({
                    "n": n,
                    "mu": list(canon(mu)),
                    "point": [str(x) for x in s],
                    "value": str(val),
                })
    json.dump(fixtures, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
