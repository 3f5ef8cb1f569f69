"""Free-algebra words, PBW normal forms and weight grading.

A :class:`Presentation` fixes an ordered list of PBW generators and one
straightening rule ``X_j X_i -> q X_i X_j + correction`` for every pair with
``j`` after ``i``.  Words are tuples of generator positions (0-based, in PBW
order) and PBW monomials are exponent tuples of the same length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coeff import ONE, ZERO, LaurentCoeff, to_text


class UnknownGenerator(KeyError):
    pass


class PresentationError(ValueError):
    pass


def _axpy(acc, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class Presentation:
    """Immutable PBW rewriting data.

    ``relations`` maps a pair of generator labels ``(i, j)`` with ``i`` before
    ``j`` to ``(q, correction)``: the rule ``X_j X_i -> q X_i X_j + correction``.
    ``correction`` maps labels (or ``"1"`` for the unit) to coefficients.
    """

    def __init__(self, name, generators, weights, rules, e_embedding, chevalley=None,
                 relations=None):
        self.name = name
        self.generators = tuple(generators)
        self.n = len(self.generators)
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.weights = tuple(tuple(weights[g]) for g in self.generators)
        self.e_embedding = dict(e_embedding)
        self.relations = list(relations or [])
        self._rule = [[None] * self.n for _ in range(self.n)]
        self.rules = {}
        for (gj, gi), (q, corr) in rules.items():
            j, i = self._pos(gj), self._pos(gi)
            if j <= i:
                raise PresentationError(f"rule {gj}{gi} is not a descent in PBW order")
            if not isinstance(q, LaurentCoeff) or not q.is_monomial():
                raise PresentationError(f"rule {gj}{gi}: q must be a Laurent monomial")
            cterms = {}
            for g, c in corr.items():
                if not isinstance(c, LaurentCoeff):
                    c = LaurentCoeff.const(c)
                if not c:
                    continue
                mono = [0] * self.n
                if g != "1":
                    mono[self._pos(g)] = 1
                cterms[tuple(mono)] = c
            self._rule[j][i] = (q, cterms)
        for j in range(self.n):
            for i in range(j):
                if self._rule[j][i] is None:
                    raise PresentationError(
                        f"missing rule for {self.generators[j]}{self.generators[i]}")
        for j in range(self.n):
            for i in range(j):
                q, cterms = self._rule[j][i]
                w = _wadd(self.weights[i], self.weights[j])
                for mono in cterms:
                    if sum(mono) >= 2:
                        raise PresentationError("correction monomials must have length < 2")
                    if self.mono_weight(mono) != w:
                        raise PresentationError(
                            f"rule {self.generators[j]}{self.generators[i]} is not weight-homogeneous")
                key = (self.label_number(j), self.label_number(i))
                self.rules[key] = (q, PBWElement(self, dict(cterms)))
        # chevalley: label -> FreeElement in e-letters, defaults to the embedding
        self.chevalley = dict(chevalley or {})
        self._cache = {}

    # -- labels -----------------------------------------------------------
    def _pos(self, g):
        if isinstance(g, int):
            g = f"X{g}"
        try:
            return self.index[g]
        except KeyError:
            raise UnknownGenerator(g) from None

    def label_number(self, pos):
        name = self.generators[pos]
        digits = "".join(ch for ch in name if ch.isdigit())
        return int(digits) if digits else pos + 1

    def position(self, g):
        return self._pos(g)

    def rule(self, j, i):
        """(q, correction terms) for positions j > i."""
        return self._rule[j][i]

    def mono_weight(self, mono):
        a = b = 0
        for e, (x, y) in zip(mono, self.weights):
            if e:
                a += e * x
                b += e * y
        return (a, b)

    def chevalley_generator(self, name):
        """PBW position of the Chevalley generator ``e1``/``e2``."""
        return self._pos(self.e_embedding[name])

    def __repr__(self):
        return f"Presentation({self.name!r}, {list(self.generators)})"

    # -- element constructors ----------------------------------------------
    def gen(self, g):
        mono = [0] * self.n
        mono[self._pos(g)] = 1
        return PBWElement(self, {tuple(mono): ONE})

    def one(self):
        return PBWElement(self, {(0,) * self.n: ONE})

    def zero(self):
        return PBWElement(self, {})

    def word(self, *gens, coeff=ONE):
        return FreeElement(self, {tuple(self._pos(g) for g in gens): coeff})

    # -- memoized straightening --------------------------------------------
    def _mono_gen(self, mono, k):
        """Normal form of (PBW monomial) * X_k as {monomial: coefficient}."""
        key = (mono, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        last = -1
        for t in range(self.n - 1, -1, -1):
            if mono[t]:
                last = t
                break
        if last <= k:
            m = list(mono)
            m[k] += 1
            res = {tuple(m): ONE}
        else:
            q, corr = self._rule[last][k]
            prefix = list(mono)
            prefix[last] -= 1
            prefix = tuple(prefix)
            res = {}
            for m1, c1 in self._mono_gen(prefix, k).items():
                qc1 = q * c1
                for m2, c2 in self._mono_gen(m1, last).items():
                    _axpy(res, m2, qc1 * c2)
            for cm, cc in corr.items():
                if not any(cm):
                    _axpy(res, prefix, cc)
                    continue
                g = cm.index(1)
                for m2, c2 in self._mono_gen(prefix, g).items():
                    _axpy(res, m2, cc * c2)
        self._cache[key] = res
        return res

    def _times_gen(self, terms, k):
        out = {}
        for m, c in terms.items():
            for m2, c2 in self._mono_gen(m, k).items():
                _axpy(out, m2, c * c2)
        return out


def _wadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def mono_word(mono):
    """Expand an exponent tuple into its ordered word of positions."""
    return tuple(itertools.chain.from_iterable([i] * e for i, e in enumerate(mono)))


def _coeff_text(c, mono_text, first):
    if c.is_monomial():
        (k, v), = c.terms.items()
        neg = v < 0
        mag = -c if neg else c
        body = to_text(mag)
        if mono_text:
            body = mono_text if body == "1" else f"{body}*{mono_text}"
        sign = ("-" if neg else "") if first else (" - " if neg else " + ")
        return sign + body
    body = f"({to_text(c)})"
    if mono_text:
        body = f"{body}*{mono_text}"
    return body if first else " + " + body


class _Element:
    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = {k: v for k, v in terms.items() if v}

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _same(self, other):
        if not isinstance(other, type(self)):
            return False
        if other.pres is not self.pres and other.pres.generators != self.pres.generators:
            raise PresentationError("elements of different presentations")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _axpy(acc, k, c)
        return type(self)(self.pres, acc)

    def __neg__(self):
        return type(self)(self.pres, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _axpy(acc, k, -c)
        return type(self)(self.pres, acc)

    def scale(self, c):
        if not isinstance(c, LaurentCoeff):
            c = LaurentCoeff.const(c)
        if not c:
            return type(self)(self.pres, {})
        return type(self)(self.pres, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))


class FreeElement(_Element):
    """Linear combination of words (tuples of generator positions)."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, (LaurentCoeff, int)):
            return self.scale(other)
        if not self._same(other):
            return NotImplemented
        acc = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _axpy(acc, w1 + w2, c1 * c2)
        return FreeElement(self.pres, acc)

    def __rmul__(self, other):
        if isinstance(other, (LaurentCoeff, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        out = FreeElement(self.pres, {(): ONE})
        for _ in range(n):
            out = out * self
        return out

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (-len(w), w)):
            mono = "*".join(self.pres.generators[i] for i in w)
            parts.append(_coeff_text(self.terms[w], mono, not parts))
        return "".join(parts)

    def __repr__(self):
        return f"FreeElement({self.text()})"


class PBWElement(_Element):
    """Linear combination of ordered PBW monomials (exponent tuples)."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, (LaurentCoeff, int)):
            return self.scale(other)
        if not self._same(other):
            return NotImplemented
        return multiply(self, other, self.pres)

    def __rmul__(self, other):
        if isinstance(other, (LaurentCoeff, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        out = self.pres.one()
        for _ in range(n):
            out = out * self
        return out

    def to_free(self):
        return FreeElement(self.pres, {mono_word(m): c for m, c in self.terms.items()})

    def monomials(self):
        return list(self.terms)

    def weights(self):
        return {self.pres.mono_weight(m) for m in self.terms}

    def weight(self):
        """The common weight of a nonzero homogeneous element."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("element is not weight-homogeneous")
        return next(iter(ws))

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), ZERO)

    def text(self):
        if not self.terms:
            return "0"
        gens = self.pres.generators
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            mono = "*".join(gens[i] if e == 1 else f"{gens[i]}^{e}"
                            for i, e in enumerate(m) if e)
            parts.append(_coeff_text(self.terms[m], mono, not parts))
        return "".join(parts)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"PBWElement({self.text()})"


# -- operations --------------------------------------------------------------

def normal_form(x, p=None):
    """Straighten a FreeElement into PBW normal form."""
    p = p or x.pres
    one = (0,) * p.n
    acc = {}
    for word, c in x.terms.items():
        for k in word:
            if not (isinstance(k, int) and 0 <= k < p.n):
                raise UnknownGenerator(k)
        terms = {one: c}
        for k in word:
            terms = p._times_gen(terms, k)
        for m, v in terms.items():
            _axpy(acc, m, v)
    return PBWElement(p, acc)


def multiply(a, b, p=None):
    p = p or a.pres
    acc = {}
    for mb, cb in b.terms.items():
        terms = dict(a.terms)
        for k in mono_word(mb):
            terms = p._times_gen(terms, k)
        for m, v in terms.items():
            _axpy(acc, m, v * cb)
    return PBWElement(p, acc)


def weight_of(mono, p):
    return p.mono_weight(tuple(mono))


def weight_space_basis(w, p):
    """All PBW monomials of weight ``w``, by total degree then exponent tuple."""
    a, b = w
    if a < 0 or b < 0:
        raise ValueError("weights are nonnegative")
    out = []

    def rec(i, ra, rb, acc):
        if i == p.n:
            if ra == 0 and rb == 0:
                out.append(tuple(acc))
            return
        x, y = p.weights[i]
        if not x and not y:
            raise ValueError("generator of weight zero")
        top = min(ra // x if x else ra + rb, rb // y if y else ra + rb)
        for e in range(top + 1):
            acc.append(e)
            rec(i + 1, ra - e * x, rb - e * y, acc)
            acc.pop()

    rec(0, a, b, [])
    out.sort(key=lambda m: (sum(m), m))
    return out


# -- explicit word rewriting ---------------------------------------------------

def _measure(word):
    inv = sum(1 for s, t in itertools.combinations(word, 2) if s > t)
    return (len(word), inv)


def rewrite_step(word, pos, p):
    """Rewrite the descent at ``pos``; returns {word: coefficient}."""
    j, i = word[pos], word[pos + 1]
    if j <= i:
        raise ValueError("no descent at position")
    q, corr = p.rule(j, i)
    head, tail = word[:pos], word[pos + 2:]
    out = {head + (i, j) + tail: q}
    for cm, cc in corr.items():
        out[head + mono_word(cm) + tail] = cc
    return out


def _descent(word, strategy):
    rng = range(len(word) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    for t in rng:
        if word[t] > word[t + 1]:
            return t
    return None


def rewrite(x, strategy="leftmost", check_measure=False, first_step=None):
    """Word-level straightening, one descent at a time.

    ``strategy`` picks the leftmost or rightmost descent.  ``first_step``
    forces the position of the very first rewrite (used for critical pairs).
    With ``check_measure`` every step asserts that (length, inversions)
    strictly decreases.
    """
    p = x.pres
    todo = dict(x.terms)
    done = {}
    forced = first_step
    while todo:
        word, c = todo.popitem()
        pos = _descent(word, strategy) if forced is None else forced
        forced = None
        if pos is None:
            _axpy(done, word, c)
            continue
        before = _measure(word) if check_measure else None
        for w2, c2 in rewrite_step(word, pos, p).items():
            if check_measure:
                assert _measure(w2) < before, (word, w2)
            _axpy(todo, w2, c * c2)
    acc = {}
    for word, c in done.items():
        mono = [0] * p.n
        for k in word:
            mono[k] += 1
        _axpy(acc, tuple(mono), c)
    return PBWElement(p, acc)


@dataclass
class Check:
    check: str
    citation: str
    status: str
    residual_text: str = "0"

    @property
    def ok(self):
        return self.status in ("pass", "verified", "documented")

    def to_dict(self):
        return {"check": self.check, "citation": self.citation,
                "status": self.status, "residual_text": self.residual_text}


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def to_dict(self):
        return [c.to_dict() for c in self.checks]

    def text(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.check}: {c.residual_text}")
        return "\n".join(lines)


def confluence_check(p):
    """Resolve every overlap X_k X_j X_i (k > j > i) both ways."""
    rep = Report(f"confluence {p.name}")
    for i, j, k in itertools.combinations(range(p.n), 3):
        word = FreeElement(p, {(k, j, i): ONE})
        left = rewrite(word, "leftmost", first_step=0)
        right = rewrite(word, "rightmost", first_step=1)
        diff = left - right
        g = p.generators
        rep.checks.append(Check(
            check=f"overlap {g[k]}*{g[j]}*{g[i]}",
            citation="PBW basis: every overlap resolves",
            status="pass" if diff.is_zero() else "fail",
            residual_text=diff.text()))
    return rep
