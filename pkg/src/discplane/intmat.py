"""Exact 3x3 integer matrix helpers.

Matrices are tuples of three row tuples.  All arithmetic is over Python
ints, so products of long matrix words never overflow.
"""

IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

E1 = (1, 0, 0)
E2 = (0, 1, 0)
E3 = (0, 0, 1)
BASIS = (E1, E2, E3)


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(3)) for i in range(3))


def transpose(a):
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def det(a):
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def adjugate(a):
    # cyclic-index form of the 3x3 adjugate; the cofactor signs are built in
    return tuple(
        tuple(
            a[(j + 1) % 3][(i + 1) % 3] * a[(j + 2) % 3][(i + 2) % 3]
            - a[(j + 1) % 3][(i + 2) % 3] * a[(j + 2) % 3][(i + 1) % 3]
            for j in range(3)
        )
        for i in range(3)
    )


def inv_unimodular(a):
    """Exact inverse of an integer matrix with det = +-1."""
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")
    adj = adjugate(a)
    if d == 1:
        return adj
    return tuple(tuple(-x for x in row) for row in adj)


def mat_prod(matrices):
    out = IDENTITY
    for m in matrices:
        out = mat_mul(out, m)
    return out


def vec_add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vec_sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])
