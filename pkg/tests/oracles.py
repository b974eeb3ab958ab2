"""Naive brute-force oracles used to freeze expected values.

Everything here works by direct enumeration over plain integers or tuple
matrices, independently of the library's search logic.
"""

import itertools


# -- integers mod n ------------------------------------------------------------


def zmod_units(n):
    return {a for a in range(n) if any(a * b % n == 1 % n for b in range(n))}


def zmod_idempotents(n):
    return {a for a in range(n) if a * a % n == a}


def zmod_regulars(n):
    return {a for a in range(n) if any(a * x * a % n == a for x in range(n))}


def zmod_principal(n, a):
    return {a * r % n for r in range(n)}


def zmod_annihilator(n, a):
    return {r for r in range(n) if a * r % n == 0}


def zmod_unimodular(n, a, b):
    return any((r * a + s * b) % n == 1 % n for r in range(n) for s in range(n))


# -- k x k matrices over Z_n as flat row-major tuples ---------------------------


def mat_all(n, k):
    return [tuple(m) for m in itertools.product(range(n), repeat=k * k)]


def mat_identity(n, k):
    return tuple(1 % n if i == j else 0 for i in range(k) for j in range(k))


def mat_add(A, B, n):
    return tuple((a + b) % n for a, b in zip(A, B))


def mat_mul(A, B, n, k):
    out = []
    for i in range(k):
        for j in range(k):
            out.append(sum(A[i * k + l] * B[l * k + j] for l in range(k)) % n)
    return tuple(out)


def mat_units(n, k):
    one = mat_identity(n, k)
    elems = mat_all(n, k)
    return {A for A in elems
            if any(mat_mul(A, B, n, k) == one and mat_mul(B, A, n, k) == one
                   for B in elems)}


def mat_all_unit_regular(n, k):
    elems = mat_all(n, k)
    units = mat_units(n, k)
    for A in elems:
        if not any(mat_mul(mat_mul(A, U, n, k), A, n, k) == A for U in units):
            return False
    return True


# -- subset enumeration over raw operation tables -------------------------------


def subsets_right_ideals(add_table, mul_table, zero, size):
    """All right ideals found by checking every subset containing zero.

    Exponential; only for rings of size <= 12 or so.
    """
    universe = list(range(size))
    out = []
    for bits in range(1 << size):
        if not bits >> zero & 1:
            continue
        subset = [i for i in universe if bits >> i & 1]
        sset = set(subset)
        closed = all(int(add_table[i, j]) in sset for i in subset for j in subset) and \
            all(int(mul_table[i, r]) in sset for i in subset for r in universe)
        if closed:
            out.append(frozenset(subset))
    return set(out)
