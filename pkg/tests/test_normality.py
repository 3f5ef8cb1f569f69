import pytest

from rsqea.algebra import PBWElement, multiply, normal_form, weight_space_basis
from rsqea.coeff import ONE, rs_monomial
from rsqea.normality import (ZeroElement, center_basis, find_normal, find_normal_spaces,
                             is_rs_central, normal_span_report, proportional)
from rsqea.parser import parse
from rsqea.presentations import derived_element


def grid_scan(u, p, bound):
    """Oracle: try every r^m s^n on the grid, generator by generator."""
    out = []
    for e in ("e1", "e2"):
        x = p.gen(p.e_embedding[e])
        ux, xu = multiply(u, x), multiply(x, u)
        hits = [(m, n) for m in range(-bound, bound + 1) for n in range(-bound, bound + 1)
                if (ux - xu.scale(rs_monomial(m, n))).is_zero()]
        if not hits:
            return None
        out.append(hits)
    return out


def el(text, p):
    return normal_form(parse(text, p))


def test_z_certificate(V):
    cert = is_rs_central(el("Z", V), V, 4)
    assert cert.exponents == [(-2, -2), (1, 1)]
    assert cert.text() == "(e1: r^-2 s^-2, e2: r^1 s^1)"


def test_zprime_certificate(V):
    cert = is_rs_central(el("Zp", V), V, 6)
    assert cert.exponents == [(-2, -2), (2, 2)]


def test_x1_refuted_through_x2(V):
    cert = is_rs_central(V.gen("X1"), V, 4)
    assert not cert.central
    gen, res = cert.refutation
    assert gen == "e2" and res == V.gen("X2")
    assert grid_scan(V.gen("X1"), V, 6) is None


@pytest.mark.parametrize("which,text", [
    ("V", "Z"), ("V", "Zp"), ("V", "W"), ("V", "e3"), ("V", "e3bar"), ("V", "X1"),
    ("V", "X4"), ("V", "Z^2*Zp"), ("V", "X1*X2 + X3"), ("U", "X3"), ("U", "X3p"),
    ("U", "X1"), ("U", "X3*X3p"), ("U", "X1*X2"),
])
def test_certificate_matches_grid_scan(which, text, request):
    p = request.getfixturevalue(which)
    u = el(text, p)
    bound = 8
    cert = is_rs_central(u, p, bound)
    scan = grid_scan(u, p, bound)
    if scan is None:
        assert not cert.central
    else:
        assert cert.central
        # uniqueness: r and s are independent, so each generator has one hit
        assert [h[0] for h in scan] == cert.exponents and all(len(h) == 1 for h in scan)
        for e, (m, n) in zip(("e1", "e2"), cert.exponents):
            x = p.gen(p.e_embedding[e])
            assert (multiply(u, x) - multiply(x, u).scale(rs_monomial(m, n))).is_zero()


def test_zero_and_bad_grid(V):
    with pytest.raises(ZeroElement):
        is_rs_central(V.zero(), V, 3)
    with pytest.raises(ValueError):
        is_rs_central(V.gen("X3"), V, 0)


def test_small_grid_misses_certificate(V):
    cert = is_rs_central(el("Zp", V), V, 1)
    assert not cert.central
    cert = is_rs_central(el("Zp", V), V, 2)
    assert cert.central and cert.on_boundary


def test_products_of_normals(V):
    z, zp = el("Z", V), el("Zp", V)
    c1, c2 = is_rs_central(z, V, 8), is_rs_central(zp, V, 8)
    c = is_rs_central(multiply(z, zp), V, 8)
    assert c.exponents == [(a[0] + b[0], a[1] + b[1]) for a, b in zip(c1.exponents, c2.exponents)]


def test_find_normal_v_12(V):
    found = find_normal((1, 2), V)
    assert len(found) == 1 and proportional(found[0], V.gen("X3"))


def test_find_normal_v_11_empty(V):
    assert find_normal((1, 1), V) == []


def test_find_normal_u_11(U):
    spaces = find_normal_spaces((1, 1), U)
    assert len(spaces) == 2 and {s.exponents for s in spaces} == {((-1, 0), (1, 0)),
                                                                  ((0, -1), (0, 1))}
    found = [b for s in spaces for b in s.basis]
    assert any(proportional(b, U.gen("X3")) for b in found)
    assert any(proportional(b, derived_element("X3p", U).value) for b in found)


def test_find_normal_is_sound(P):
    for w in [(1, 1), (1, 2), (2, 2), (2, 4), (3, 3)]:
        for b in find_normal(w, P):
            assert is_rs_central(b, P, 20).central


def test_find_normal_brute_force_oracle(V):
    # every basis monomial combination with a certificate must lie in the found span
    w = (2, 2)
    found = find_normal(w, V)
    assert len(found) == 1
    for m in weight_space_basis(w, V):
        single = PBWElement(V, {m: ONE})
        assert is_rs_central(single, V, 10).central == proportional(single, found[0])


def test_basis_order_invariance(V, monkeypatch):
    import rsqea.normality as nm
    before = find_normal((2, 4), V)
    monkeypatch.setattr(nm, "weight_space_basis",
                        lambda w, p: list(reversed(weight_space_basis(w, p))))
    after = nm.find_normal((2, 4), V)
    assert len(before) == len(after) == 1 and proportional(before[0], after[0])


def test_center_is_trivial(P):
    basis = center_basis(6, P)
    assert [b.text() for b in basis] == ["1"]
    assert [b.text() for b in center_basis(0, P)] == ["1"]
    with pytest.raises(ValueError):
        center_basis(-1, P)


def test_normal_span_report_small(P):
    rep = normal_span_report(6, P)
    assert rep.agree
    nonzero = {e.weight: e.dimension_found for e in rep.entries if e.dimension_found}
    if P.name == "V":
        assert nonzero == {(0, 0): 1, (1, 2): 1, (2, 2): 1, (2, 4): 1}
    else:
        assert nonzero == {(0, 0): 1, (1, 1): 2, (2, 2): 3, (3, 3): 4}
    assert not any(e.boundary for e in rep.entries)
    d = rep.to_dict()[0]
    assert set(d) >= {"weight", "dimension_found", "dimension_predicted", "basis_texts",
                      "exponent_tuples"}


def test_normal_span_report_degree_zero(V):
    rep = normal_span_report(0, V)
    assert rep.agree and len(rep.entries) == 1 and rep.entries[0].dimension_found == 1
