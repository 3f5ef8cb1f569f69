"""(r,s)-centrality certificates and bounded-degree searches for normal elements.

An element u is (r,s)-central when ``u e_i = r^m s^n e_i u`` for each Chevalley
generator.  Searches run weight space by weight space: for every exponent pair
on the grid a cheap rank test modulo a prime discards pairs whose pencil
``L - r^m s^n R`` has full column rank (specialization can only lower the rank,
so nothing is lost), and survivors are solved exactly over Q(r, s).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import kernels
from .algebra import PBWElement, multiply, weight_space_basis
from .coeff import ONE, LaurentCoeff, RatFunc, exact_divide, ff_rref, nullspace, rs_monomial


class ZeroElement(ValueError):
    pass


CHEVALLEY = ("e1", "e2")


@dataclass
class NormalityCertificate:
    exponents: list | None = None
    refutation: tuple | None = None
    on_boundary: bool = False
    grid_bound: int = 0

    @property
    def central(self):
        return self.exponents is not None

    def text(self):
        if self.central:
            inner = ", ".join(f"{e}: r^{m} s^{n}" for e, (m, n) in zip(CHEVALLEY, self.exponents))
            return f"({inner})"
        gen, res = self.refutation
        return f"not (r,s)-central: {gen} residual {res.text()}"

    def to_dict(self):
        if self.central:
            return {"central": True, "exponents": [list(e) for e in self.exponents],
                    "on_boundary": self.on_boundary}
        return {"central": False, "generator": self.refutation[0],
                "residual_text": self.refutation[1].text()}


def _leading(elem):
    return min(elem.terms, key=lambda m: (-sum(m), tuple(-e for e in m)))


def _rs_exponents(c):
    """(m, n) if ``c`` is exactly r^m s^n, else None."""
    if len(c.terms) != 1:
        return None
    (k, v), = c.terms.items()
    if v != 1 or len(k) != 2:
        return None
    return k


def commutation_scalar(u, x, p):
    """The Laurent monomial q with u*x = q*x*u, or (None, residual)."""
    a = multiply(u, x, p)
    b = multiply(x, u, p)
    if b.is_zero():
        return None, a
    lead = _leading(b)
    ratio = exact_divide(a.coefficient(lead), b.terms[lead])
    lam = ratio if ratio is not None and ratio.is_monomial() else ONE
    res = a - b.scale(lam)
    if res.is_zero():
        return lam, res
    return None, res


def is_rs_central(u, p, grid_bound=None):
    if u.is_zero():
        raise ZeroElement("zero is not a candidate normal element")
    if grid_bound is None:
        grid_bound = 2 * (max(sum(w) for w in u.weights()) + 1)
    if grid_bound < 1:
        raise ValueError("grid_bound must be >= 1")
    exps = []
    boundary = False
    for e in CHEVALLEY:
        x = p.gen(p.e_embedding[e])
        lam, res = commutation_scalar(u, x, p)
        mn = _rs_exponents(lam) if lam is not None else None
        if lam is not None and (mn is None or max(map(abs, mn)) > grid_bound):
            # a scalar exists but is not r^m s^n on the grid
            if lam.is_monomial() and len(lam.lead()[0]) == 2:
                lam = rs_monomial(*lam.lead()[0])
            else:
                lam = ONE
            res = multiply(u, x, p) - multiply(x, u, p).scale(lam)
            if res.is_zero():
                res = multiply(u, x, p) - multiply(x, u, p)
            mn = None
        if mn is None:
            return NormalityCertificate(refutation=(e, res), grid_bound=grid_bound)
        if max(map(abs, mn)) == grid_bound:
            boundary = True
        exps.append(tuple(mn))
    return NormalityCertificate(exponents=exps, on_boundary=boundary, grid_bound=grid_bound)


# -- weight-space systems ---------------------------------------------------------

def _eval_point(seed=20240917):
    rng = random.Random(seed)
    return (rng.randrange(2, kernels.PRIME - 1), rng.randrange(2, kernels.PRIME - 1))


_POINT = _eval_point()


def _coords(elem, index):
    col = [LaurentCoeff()] * len(index)
    for m, c in elem.terms.items():
        col[index[m]] = c
    return col


@dataclass
class _System:
    """Matrices of right and left multiplication by one Chevalley generator."""

    lhs: list
    rhs: list
    lhs_mod: list
    rhs_mod: list


def _system(p, basis, gen):
    x = p.gen(gen)
    w = p.mono_weight(basis[0])
    gw = p.weights[p.position(gen)]
    target = weight_space_basis((w[0] + gw[0], w[1] + gw[1]), p)
    index = {m: t for t, m in enumerate(target)}
    cols_l, cols_r = [], []
    for b in basis:
        mb = PBWElement(p, {b: ONE})
        cols_l.append(_coords(multiply(mb, x, p), index))
        cols_r.append(_coords(multiply(x, mb, p), index))
    lhs = [list(r) for r in zip(*cols_l)]
    rhs = [list(r) for r in zip(*cols_r)]
    P = kernels.PRIME
    lmod = [[c.evaluate_mod(_POINT, P) for c in row] for row in lhs]
    rmod = [[c.evaluate_mod(_POINT, P) for c in row] for row in rhs]
    return _System(lhs, rhs, lmod, rmod)


def _lam_mod(m, n):
    P = kernels.PRIME
    return pow(_POINT[0], m, P) * pow(_POINT[1], n, P) % P


@dataclass
class NormalSpace:
    weight: tuple
    exponents: tuple
    basis: list = field(default_factory=list)


def _solve(p, basis, systems, lams):
    """Exact nullspace of the stacked pencils; returns PBWElements."""
    rows = []
    for sysm, (m, n) in zip(systems, lams):
        lam = rs_monomial(m, n)
        for lr, rr in zip(sysm.lhs, sysm.rhs):
            rows.append([a - lam * b for a, b in zip(lr, rr)])
    rows = _independent_rows(rows, len(basis))
    out = []
    for vec in nullspace(rows, len(basis)) if rows else _identity(len(basis)):
        terms = {}
        for b, x in zip(basis, vec):
            if not x.is_zero():
                terms[b] = _laurent(x)
        out.append(PBWElement(p, terms))
    return out


def _identity(n):
    return [[RatFunc(ONE if i == j else LaurentCoeff()) for j in range(n)] for i in range(n)]


def _laurent(x):
    if not x.is_laurent():
        raise ArithmeticError("nullspace vector was not cleared of denominators")
    return x.numerator


def _independent_rows(rows, ncols):
    """A subset of rows with the same rank modulo the prime (greedy)."""
    P = kernels.PRIME
    chosen, chosen_mod = [], []
    rank = 0
    for row in rows:
        rmod = [c.evaluate_mod(_POINT, P) for c in row]
        if not any(rmod):
            if any(row):
                chosen.append(row)
                chosen_mod.append(rmod)
            continue
        r2 = kernels.rank_mod_p(chosen_mod + [rmod], ncols, P)
        if r2 > rank:
            chosen.append(row)
            chosen_mod.append(rmod)
            rank = r2
        if rank == ncols:
            break
    return chosen


def _grid(bound):
    return [(m, n) for m in range(-bound, bound + 1) for n in range(-bound, bound + 1)]


def default_grid(w):
    return 2 * (sum(w) + 1)


def find_normal_spaces(w, p, grid_bound=None, fixed=None):
    """Solution spaces of the centrality system at weight ``w``, one per exponent tuple.

    ``fixed`` restricts the search to one exponent tuple (e.g. all zeros for
    the center).
    """
    w = tuple(w)
    if w[0] < 0 or w[1] < 0:
        raise ValueError("weights are nonnegative")
    if grid_bound is None:
        grid_bound = default_grid(w)
    basis = weight_space_basis(w, p)
    if not basis:
        return []
    gens = [p.e_embedding[e] for e in CHEVALLEY]
    systems = [_system(p, basis, g) for g in gens]
    ncols = len(basis)
    P = kernels.PRIME
    cands = []
    for t, sysm in enumerate(systems):
        pts = [fixed[t]] if fixed is not None else _grid(grid_bound)
        nul = kernels.pencil_nullities(sysm.lhs_mod, sysm.rhs_mod,
                                       [_lam_mod(m, n) for m, n in pts], ncols, P)
        cands.append([pt for pt, k in zip(pts, nul) if k > 0])
    spaces = []
    for combo in itertools.product(*cands):
        stacked = []
        for sysm, (m, n) in zip(systems, combo):
            lam = _lam_mod(m, n)
            stacked += [[(a - lam * b) % P for a, b in zip(lr, rr)]
                        for lr, rr in zip(sysm.lhs_mod, sysm.rhs_mod)]
        if kernels.rank_mod_p(stacked, ncols, P) == ncols:
            continue
        sols = _dedup(_solve(p, basis, systems, combo))
        if sols:
            spaces.append(NormalSpace(w, tuple(combo), sols))
    return spaces


def _dedup(elems):
    kept = []
    for e in elems:
        if _in_span(e, kept):
            continue
        kept.append(e)
    return kept


def _in_span(e, elems):
    if not elems:
        return e.is_zero()
    monos = sorted({m for x in elems + [e] for m in x.terms})
    rows = [[x.coefficient(m) for m in monos] for x in elems]
    r0 = len(ff_rref(rows)[1])
    r1 = len(ff_rref(rows + [[e.coefficient(m) for m in monos]])[1])
    return r1 == r0


def find_normal(w, p, grid_bound=None):
    return [b for sp in find_normal_spaces(w, p, grid_bound) for b in sp.basis]


def weights_up_to(max_degree):
    return [(a, d - a) for d in range(max_degree + 1) for a in range(d + 1)]


def center_basis(max_degree, p, grid_bound=None):
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    out = []
    for w in weights_up_to(max_degree):
        for sp in find_normal_spaces(w, p, grid_bound, fixed=((0, 0), (0, 0))):
            out.extend(sp.basis)
    return out


# -- predicted classification -------------------------------------------------------

def predicted_normals(p, max_degree):
    """{weight: [(label, element)]} for the monomials in the known normal generators."""
    from .presentations import derived_element
    if p.name == "V":
        a, b = p.gen("X3"), derived_element("Zprime", p).value
        names = ("Z", "Zp")
    elif p.name == "U":
        a, b = p.gen("X3"), derived_element("X3prime_U", p).value
        names = ("X3", "X3p")
    else:
        raise ValueError(f"no predicted classification for {p.name}")
    wa, wb = a.weight(), b.weight()
    out = {}
    for i in range(max_degree + 1):
        for j in range(max_degree + 1):
            w = (i * wa[0] + j * wb[0], i * wa[1] + j * wb[1])
            if sum(w) > max_degree:
                continue
            elem = multiply(a ** i, b ** j, p)
            label = f"{names[0]}^{i}*{names[1]}^{j}"
            out.setdefault(w, []).append((label, elem))
    return out


def proportional(a, b):
    """True if a = c*b for a nonzero scalar c in Q(r, s)."""
    if a.is_zero() or b.is_zero():
        return False
    if set(a.terms) != set(b.terms):
        return False
    m = next(iter(b.terms))
    ca, cb = a.terms[m], b.terms[m]
    return all(a.terms[k] * cb == b.terms[k] * ca for k in b.terms)


@dataclass
class WeightEntry:
    weight: tuple
    dimension_found: int
    dimension_predicted: int
    basis_texts: list
    exponent_tuples: list
    agree: bool
    boundary: bool = False
    note: str = ""

    def to_dict(self):
        return {"weight": list(self.weight), "dimension_found": self.dimension_found,
                "dimension_predicted": self.dimension_predicted,
                "basis_texts": self.basis_texts,
                "exponent_tuples": [[list(x) for x in t] for t in self.exponent_tuples],
                "agree": self.agree, "grid_boundary": self.boundary, "note": self.note}


@dataclass
class NormalSpanReport:
    algebra: str
    max_degree: int
    entries: list

    @property
    def agree(self):
        return all(e.agree for e in self.entries)

    def to_dict(self):
        return [e.to_dict() for e in self.entries]

    def text(self):
        lines = [f"normal span {self.algebra} up to degree {self.max_degree}: "
                 f"{'agreement' if self.agree else 'DISAGREEMENT'}"]
        for e in self.entries:
            if e.dimension_found or e.dimension_predicted:
                lines.append(f"  weight {e.weight}: found {e.dimension_found}, predicted "
                             f"{e.dimension_predicted} {e.exponent_tuples}"
                             + (f" ({e.note})" if e.note else ""))
        return "\n".join(lines)


def normal_span_report(max_degree, p, grid_bound=None):
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    predicted = predicted_normals(p, max_degree)
    entries = []
    for w in weights_up_to(max_degree):
        spaces = find_normal_spaces(w, p, grid_bound)
        found_dim = sum(len(sp.basis) for sp in spaces)
        preds = predicted.get(w, [])
        notes = []
        agree = found_dim == len(preds)
        by_tuple = {sp.exponents: sp for sp in spaces}
        bound = grid_bound if grid_bound is not None else default_grid(w)
        boundary = any(max(abs(x) for pair in sp.exponents for x in pair) >= bound
                       for sp in spaces)
        for label, elem in preds:
            cert = is_rs_central(elem, p, bound)
            if not cert.central:
                agree = False
                notes.append(f"{label} not certified")
                continue
            sp = by_tuple.get(tuple(cert.exponents))
            if sp is None or len(sp.basis) != 1 or not proportional(elem, sp.basis[0]):
                agree = False
                notes.append(f"{label} missing")
        if boundary:
            notes.append("certificate on grid boundary")
        entries.append(WeightEntry(
            w, found_dim, len(preds),
            [b.text() for sp in spaces for b in sp.basis],
            [sp.exponents for sp in spaces], agree, boundary, "; ".join(notes)))
    return NormalSpanReport(p.name, max_degree, entries)
