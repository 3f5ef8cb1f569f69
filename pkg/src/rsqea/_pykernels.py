"""Pure-Python hot kernels.

Reference implementation of everything in ``_ckernels.pyx``; the two modules
expose the same functions with the same semantics.
"""

from fractions import Fraction

NAME = "python"


def _norm(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def _keyadd(a, b):
    if len(a) == len(b):
        return tuple([x + y for x, y in zip(a, b)])
    if len(a) < len(b):
        a, b = b, a
    return tuple([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def laurent_mul(a, b):
    """Product of two sparse term maps ``{exponent tuple: rational}``."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ka, ca in a.items():
        if len(ka) == 2:
            a0, a1 = ka
            for kb, cb in b.items():
                if len(kb) == 2:
                    k = (a0 + kb[0], a1 + kb[1])
                else:
                    k = _keyadd(ka, kb)
                out[k] = get(k, 0) + ca * cb
        else:
            for kb, cb in b.items():
                k = _keyadd(ka, kb)
                out[k] = get(k, 0) + ca * cb
    return {k: _norm(v) for k, v in out.items() if v != 0}


def laurent_axpy(acc, a, scale):
    """In place ``acc += scale * a`` on term maps; ``scale`` is a rational."""
    for k, c in a.items():
        v = acc.get(k, 0) + scale * c
        if v == 0:
            acc.pop(k, None)
        else:
            acc[k] = _norm(v)
    return acc


def rank_mod_p(rows, ncols, p):
    """Rank of an integer matrix (list of lists, entries already reduced) mod p."""
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][c] % p:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[c], p - 2, p)
        for i in range(rank + 1, nrows):
            f = m[i][c] % p
            if f:
                f = f * inv % p
                row = m[i]
                for j in range(c, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def pencil_nullities(lhs, rhs, lams, ncols, p):
    """For each scalar ``lam`` return ``ncols - rank(lhs - lam*rhs)`` mod p.

    ``lhs`` and ``rhs`` are equally shaped integer matrices mod p.
    """
    out = []
    for lam in lams:
        rows = [[(x - lam * y) % p for x, y in zip(lr, rr)] for lr, rr in zip(lhs, rhs)]
        out.append(ncols - rank_mod_p(rows, ncols, p))
    return out
