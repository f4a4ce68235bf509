"""Independent reference computations used by the tests.

These deliberately avoid :mod:`concordium` arithmetic and work on plain
``{(exp1, exp2): coeff}`` dictionaries.
"""

from itertools import permutations


def as_dict(p):
    return {(a, b): c for a, b, c in p.terms}


def dict_add(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def dict_mul(p, q):
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def permutation_sign(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def leibniz_det(rows):
    """Determinant of a matrix of coefficient dicts as a sum over permutations."""
    n = len(rows)
    total = {}
    for perm in permutations(range(n)):
        term = {(0, 0): permutation_sign(perm)}
        for i, j in enumerate(perm):
            term = dict_mul(term, rows[i][j])
            if not term:
                break
        total = dict_add(total, term)
    return total
