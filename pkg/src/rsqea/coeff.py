"""Exact Laurent polynomials in r, s over the rationals, and linear algebra over Q(r, s).

A :class:`LaurentCoeff` is a sparse map from integer exponent tuples to
nonzero rationals.  Exponent tuples normally have length 2 (powers of r and s);
two extra central symbols ``a1``, ``a2`` are available by using length-4
tuples, which is how torus actions are checked.  Tuples of different lengths
combine by zero padding.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from . import kernels

VARIABLES = ("r", "s", "a1", "a2")
EXPONENT_LIMIT = 10_000


class NotAMonomial(ValueError):
    """Raised when an operation needs a single-term Laurent polynomial."""


def _norm(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def _strip(key):
    # canonical key: drop trailing zeros beyond the (r, s) pair
    if len(key) > 2:
        k = list(key)
        while len(k) > 2 and k[-1] == 0:
            k.pop()
        key = tuple(k)
    return key


def _check_exponents(key):
    for e in key:
        if not -EXPONENT_LIMIT <= e <= EXPONENT_LIMIT:
            raise OverflowError(f"Laurent exponent {e} out of range")


class LaurentCoeff:
    """Immutable element of Q[r^±1, s^±1] (optionally with a1^±1, a2^±1)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, v in terms.items():
                k = _strip(tuple(int(e) for e in k))
                if len(k) < 2:
                    k = k + (0,) * (2 - len(k))
                if not isinstance(v, Rational):
                    raise TypeError(f"coefficient {v!r} is not an exact rational")
                v = clean.get(k, 0) + v
                if v:
                    clean[k] = _norm(Fraction(v)) if not isinstance(v, int) else v
                else:
                    clean.pop(k, None)
            for k in clean:
                _check_exponents(k)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): _norm(Fraction(c))} if c else {})

    @classmethod
    def monomial(cls, *exps, coeff=1):
        key = _strip(tuple(exps) + (0,) * max(0, 2 - len(exps)))
        _check_exponents(key)
        return cls._raw({key: _norm(Fraction(coeff))} if coeff else {})

    @classmethod
    def var(cls, name):
        i = VARIABLES.index(name)
        exps = [0] * max(2, i + 1)
        exps[i] = 1
        return cls.monomial(*exps)

    # -- queries ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_one(self):
        return self.terms == {(0, 0): 1}

    def nvars(self):
        return max((len(k) for k in self.terms), default=2)

    def lead(self):
        """Lexicographically largest exponent and its coefficient."""
        k = max(self.terms, key=_padkey)
        return k, self.terms[k]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        kernels.laurent_axpy(acc, other.terms, 1)
        return LaurentCoeff._raw(_canon(acc))

    __radd__ = __add__

    def __neg__(self):
        return LaurentCoeff._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        kernels.laurent_axpy(acc, other.terms, -1)
        return LaurentCoeff._raw(_canon(acc))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return ZERO
            other = _norm(Fraction(other))
            return LaurentCoeff._raw({k: _norm(v * other) for k, v in self.terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return ZERO
        return LaurentCoeff._raw(_canon(kernels.laurent_mul(self.terms, other.terms)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return monomial_invert(self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_exponents(self, shift):
        """Multiply by the monomial with exponent tuple ``shift``."""
        return LaurentCoeff._raw(_canon({_addkey(k, shift): v for k, v in self.terms.items()}))

    def __eq__(self, other):
        if isinstance(other, LaurentCoeff):
            return self.terms == other.terms
        if isinstance(other, Rational):
            return self.terms == LaurentCoeff.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentCoeff({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    def evaluate_mod(self, point, p):
        """Value mod p at ``point`` (tuple of nonzero residues, one per variable)."""
        total = 0
        for k, c in self.terms.items():
            v = c.numerator * pow(c.denominator, -1, p) if type(c) is Fraction else c
            for x, e in zip(point, k):
                if e:
                    v = v * pow(x, e, p)
            total += v
        return total % p

    def evaluate(self, point):
        """Exact value at a tuple of nonzero rationals."""
        total = Fraction(0)
        for k, c in self.terms.items():
            v = Fraction(c)
            for x, e in zip(point, k):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total


def _padkey(k):
    return k + (0,) * (4 - len(k))


def _addkey(a, b):
    if len(a) == len(b):
        return tuple(x + y for x, y in zip(a, b))
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _canon(terms):
    if any(len(k) > 2 for k in terms):
        out = {}
        for k, v in terms.items():
            k = _strip(k)
            _check_exponents(k)
            out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}
    for k in terms:
        _check_exponents(k)
    return terms


def _coerce(x):
    if isinstance(x, LaurentCoeff):
        return x
    if isinstance(x, Rational):
        return LaurentCoeff.const(x)
    return NotImplemented


ZERO = LaurentCoeff._raw({})
ONE = LaurentCoeff._raw({(0, 0): 1})
R = LaurentCoeff.var("r")
S = LaurentCoeff.var("s")


def laurent_arith(a, b, kind):
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def monomial_invert(a):
    if len(a.terms) != 1:
        raise NotAMonomial(f"{to_text(a)} has {len(a.terms)} terms")
    (k, c), = a.terms.items()
    return LaurentCoeff._raw({_strip(tuple(-e for e in k)): _norm(1 / Fraction(c))})


def rs_monomial(m, n, coeff=1):
    return LaurentCoeff.monomial(m, n, coeff=coeff)


# -- text form --------------------------------------------------------------

def _mono_text(key):
    parts = []
    for name, e in zip(VARIABLES, key):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _rat_text(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(a):
    """Canonical text: terms by ascending exponent tuple, e.g. ``-r^-1*s + 1``."""
    if not a.terms:
        return "0"
    out = []
    for k in sorted(a.terms, key=_padkey):
        c = Fraction(a.terms[k])
        neg = c < 0
        mag = -c if neg else c
        mono = _mono_text(k)
        if not mono:
            body = _rat_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_rat_text(mag)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- exact division ---------------------------------------------------------

def _to_poly(a):
    """Shift ``a`` by a monomial so all exponents are >= 0 and minimal."""
    n = a.nvars()
    keys = [_padkey(k)[:n] for k in a.terms]
    low = tuple(min(k[i] for k in keys) for i in range(n))
    neg = tuple(-x for x in low)
    return {_addkey(k, neg): v for k, v in zip(keys, a.terms.values())}, low


def exact_divide(a, b):
    """Return ``a / b`` in the Laurent ring, or None if ``b`` does not divide ``a``."""
    if not b.terms:
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if not a.terms:
        return ZERO
    if len(b.terms) == 1:
        return a * monomial_invert(b)
    n = max(a.nvars(), b.nvars())
    pa, la = _to_poly(a)
    pb, lb = _to_poly(b)
    pa = {_padkey(k)[:n]: v for k, v in pa.items()}
    pb = {_padkey(k)[:n]: v for k, v in pb.items()}
    lt_b = max(pb)
    lc_b = Fraction(pb[lt_b])
    quot = {}
    rem = dict(pa)
    while rem:
        lt = max(rem)
        shift = tuple(x - y for x, y in zip(lt, lt_b))
        if min(shift) < 0:
            return None
        c = _norm(Fraction(rem[lt]) / lc_b)
        quot[shift] = quot.get(shift, 0) + c
        for k, v in pb.items():
            kk = tuple(x + y for x, y in zip(k, shift))
            nv = rem.get(kk, 0) - c * v
            if nv:
                rem[kk] = _norm(nv)
            else:
                rem.pop(kk, None)
    la = _padkey(la)[:n]
    lb = _padkey(lb)[:n]
    offset = tuple(x - y for x, y in zip(la, lb))
    return LaurentCoeff(quot).scale_exponents(offset)


# -- rational functions -----------------------------------------------------

class RatFunc:
    """Element of Q(r, s) as numerator / denominator Laurent polynomials.

    The denominator is shifted to a polynomial with leading coefficient 1;
    exact quotients collapse to a Laurent numerator.
    Equality is decided by cross multiplication.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=ONE):
        if not isinstance(numerator, LaurentCoeff):
            numerator = LaurentCoeff.const(numerator)
        if not isinstance(denominator, LaurentCoeff):
            denominator = LaurentCoeff.const(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        if numerator.is_zero():
            self.numerator, self.denominator = ZERO, ONE
            return
        q = exact_divide(numerator, denominator)
        if q is not None:
            self.numerator, self.denominator = q, ONE
            return
        poly, low = _to_poly(denominator)
        den = LaurentCoeff(poly)
        num = numerator.scale_exponents(tuple(-x for x in low))
        _, lc = den.lead()
        lc = Fraction(lc)
        self.numerator = num * (1 / lc)
        self.denominator = den * (1 / lc)

    def is_zero(self):
        return self.numerator.is_zero()

    def is_laurent(self):
        return self.denominator.is_one()

    def __add__(self, other):
        other = _ratcoerce(other)
        return RatFunc(self.numerator * other.denominator + other.numerator * self.denominator,
                       self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-_ratcoerce(other))

    def __mul__(self, other):
        other = _ratcoerce(other)
        return RatFunc(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _ratcoerce(other)
        return RatFunc(self.numerator * other.denominator, self.denominator * other.numerator)

    def __eq__(self, other):
        other = _ratcoerce(other)
        return (self.numerator * other.denominator) == (other.numerator * self.denominator)

    def __hash__(self):
        # cross-multiplication equality only guarantees equal hashes for Laurent values
        return hash(self.numerator) if self.is_laurent() else hash(("ratfunc", self.denominator.nvars()))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_laurent():
            return to_text(self.numerator)
        return f"({to_text(self.numerator)})/({to_text(self.denominator)})"


def _ratcoerce(x):
    if isinstance(x, RatFunc):
        return x
    return RatFunc(x)


# -- nullspace --------------------------------------------------------------

def _as_laurent(x):
    if isinstance(x, LaurentCoeff):
        return x
    return LaurentCoeff.const(x)


def ff_rref(matrix):
    """Fraction-free Gauss-Jordan elimination over the Laurent ring.

    Returns ``(rows, pivot_cols, det)`` where every pivot entry equals ``det``
    and all other entries of pivot columns are zero.  Each division by the
    previous pivot is exact (entries are minors of the input).
    """
    m = [[_as_laurent(x) for x in row] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = ONE
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        cand = [i for i in range(r, nrows) if m[i][c]]
        if not cand:
            continue
        # shortest pivot keeps intermediate swell down
        piv = min(cand, key=lambda i: len(m[i][c].terms))
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        prow = m[r]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            new = []
            for j in range(ncols):
                if j == c:
                    new.append(ZERO)
                    continue
                x = pv * row[j]
                if f and prow[j]:
                    x = x - f * prow[j]
                if x and not prev.is_one():
                    q = exact_divide(x, prev)
                    if q is None:
                        raise ArithmeticError("fraction-free step was not exact")
                    x = q
                new.append(x)
            m[i] = new
        if not prev.is_one():
            # the pivot row itself is untouched; earlier pivots now equal pv
            pass
        prev = pv
        pivots.append(c)
        r += 1
    return m[:r], pivots, prev


def primitive_part(vec):
    """Divide a Laurent vector by its monomial and rational content, sign-normalized."""
    nz = [x for x in vec if x]
    if not nz:
        return list(vec)
    n = max(x.nvars() for x in nz)
    low = None
    for x in nz:
        for k in x.terms:
            k = _padkey(k)[:n]
            low = k if low is None else tuple(min(a, b) for a, b in zip(low, k))
    neg = tuple(-e for e in low)
    from math import gcd
    g, lcm = 0, 1
    for x in nz:
        for v in x.terms.values():
            v = Fraction(v)
            g = gcd(g, abs(v.numerator))
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    scale = Fraction(lcm, g)
    out = [x.scale_exponents(neg) * scale if x else ZERO for x in vec]
    # common polynomial factor: try dividing by the shortest entry
    short = min((x for x in out if x), key=lambda x: len(x.terms))
    if len(short.terms) > 1:
        qs = [exact_divide(x, short) if x else ZERO for x in out]
        if all(q is not None for q in qs):
            return primitive_part(qs)
    first = next(x for x in out if x)
    if Fraction(first.lead()[1]) < 0:
        out = [-x for x in out]
    return out


def nullspace(matrix, ncols=None):
    """Basis of the right nullspace over Q(r, s) as lists of RatFunc.

    Vectors come from fraction-free elimination, so every entry is a Laurent
    polynomial; content is removed.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        rows, pivots, det = [], [], ONE
    else:
        rows, pivots, det = ff_rref(matrix)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [ZERO] * ncols
        vec[f] = det
        for row, pc in zip(rows, pivots):
            vec[pc] = -row[f]
        basis.append([RatFunc(x) for x in primitive_part(vec)])
    return basis


def mat_vec(matrix, vec):
    """Exact product of a Laurent matrix with a vector of RatFunc."""
    out = []
    for row in matrix:
        acc = RatFunc(ZERO)
        for a, x in zip(row, vec):
            if a and not x.is_zero():
                acc = acc + RatFunc(_as_laurent(a)) * x
        out.append(acc)
    return out
