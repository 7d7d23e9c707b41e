"""Independent reference computations used only by the tests.

Nothing here imports the determinant engine; each oracle is the textbook
definition, written for clarity rather than speed.
"""

import random
from itertools import permutations

from sylvester.ring import ONE, ZERO, EntryVar, Monomial, MultiPoly


def perm_sign(p):
    inversions = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inversions & 1 else 1


def leibniz_det(rows, zero=0, one=1):
    """Sum over all n! permutations."""
    n = len(rows)
    total = zero
    for p in permutations(range(n)):
        term = one
        for r in range(n):
            term = term * rows[r][p[r]]
        total = total + term * perm_sign(p)
    return total


def leibniz_poly(m):
    return leibniz_det(m.rows, ZERO, ONE)


def delete_positions(rows, drop_rows, drop_cols):
    """0-based positional deletion on plain lists."""
    return [[x for c, x in enumerate(row) if c not in drop_cols]
            for r, row in enumerate(rows) if r not in drop_rows]


def generic_rows(n, first_row=1):
    return [[MultiPoly.var(r, c) for c in range(1, n + 1)] for r in range(first_row, first_row + n)]


def random_poly(rng: random.Random, rows, cols, max_terms=5, max_exp=2, coeff=9):
    """Random polynomial in a[r,c] for r in ``rows``, c in ``cols``."""
    variables = [EntryVar(r, c) for r in rows for c in cols]
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        k = rng.randint(0, min(3, len(variables)))
        factors = [(v, rng.randint(1, max_exp)) for v in rng.sample(variables, k)]
        terms[Monomial(factors)] = rng.randint(-coeff, coeff)
    return MultiPoly(terms)


def random_int_matrix(rng: random.Random, n, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
