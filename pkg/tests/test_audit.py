import pytest

from rsqea.algebra import confluence_check, normal_form
from rsqea.audit import (CANDIDATES, NotStrictlyQCommuting, audit_passed, catalog_report,
                         identity_catalog, quotient_by_pbw_generator, run_identity_audit,
                         stratification_catalog, torus_eigenvalue, verify_torus,
                         weyl_group_order)
from rsqea.coeff import LaurentCoeff
from rsqea.normality import is_rs_central
from rsqea.parser import parse
from rsqea.presentations import CARTAN, build_presentation


@pytest.fixture(scope="module")
def v_audit():
    return {r.id: r for r in run_identity_audit(build_presentation("V"))}


@pytest.fixture(scope="module")
def u_audit():
    return {r.id: r for r in run_identity_audit(build_presentation("U"))}


def test_no_failed_records(v_audit, u_audit):
    assert audit_passed(v_audit.values()) and audit_passed(u_audit.values())


def test_record_invariants(v_audit, u_audit):
    for r in list(v_audit.values()) + list(u_audit.values()):
        assert r.status in ("verified", "corrected")
        if r.status == "verified" and r.unknown is None:
            assert r.residual.is_zero()
        if r.status == "corrected":
            assert not r.residual.is_zero()
            assert r.correction_residual.is_zero()
            assert r.correction


def test_x_relations_verify(v_audit):
    for k in range(1, 7):
        assert v_audit[f"X-rel {k}"].status == "verified"


def test_w_zprime_items(v_audit):
    assert v_audit["WZ' 3"].status == "verified"
    assert v_audit["WZ' 1"].status == "verified"
    for k in range(1, 9):
        assert v_audit[f"WZ' {k}"].status in ("verified", "corrected")


def test_zprime_chain(v_audit):
    assert v_audit["Z' chain 1"].status == "verified"
    assert v_audit["Z' chain 2"].status == "verified"
    assert v_audit["Z' chain 3"].status == "corrected"
    assert v_audit["Z' chain 4"].status == "corrected"
    assert "u" not in v_audit["Z' chain 4"].correction.split("=")[0]


def test_corrected_chain_line_rechecks(V, v_audit):
    # re-verify the corrected third line from its text, independently of the solver
    text = v_audit["Z' chain 3"].correction
    lhs, rhs = text.split(" = ", 1)
    assert normal_form(parse(lhs, V)) == normal_form(parse(rhs, V))


def test_tower_delta4_corrected(v_audit):
    rec = v_audit["tower X4X1"]
    assert rec.status == "corrected"
    assert rec.correction == "X4*X1 = (r^-2)*X1*X4 + (-r^-2)*X2"


def test_u_records(u_audit):
    assert u_audit["X2X3"].status == "verified" and u_audit["X2X3"].residual.is_zero()
    assert u_audit["X1X3"].status == "verified"
    assert u_audit["normal X3"].status == "corrected"
    assert "(-s)*e2*e1" in u_audit["normal X3"].correction
    assert u_audit["tower X3X1"].correction == "X3*X1 = (r^-1)*X1*X3"
    assert u_audit["tower X2X1"].correction == "X2*X1 = (s^-1)*X1*X2 + (-s^-1)*X3"


def test_audit_json_fields(v_audit):
    d = v_audit["WZ' 1"].to_dict()
    assert set(d) >= {"id", "citation", "status", "residual_text", "correction_text"}


def test_identity_catalog_unknown():
    with pytest.raises(ValueError):
        identity_catalog("G2")


def test_audit_detects_correction_mutation():
    bad = build_presentation("V", x2x4_correction="-s^3")
    recs = {r.id: r for r in run_identity_audit(bad)}
    assert recs["def X3"].status != "verified"
    assert recs["X-rel 5"].status == "corrected"


def test_torus_v(V):
    rep = verify_torus(V)
    assert rep.passed
    assert rep.eigenvalues["Z"] == "a1*a2^2"
    assert rep.eigenvalues["Zp"] == "a1^2*a2^2"


def test_torus_eigenvalue_is_weight_character(P):
    a1, a2 = LaurentCoeff.var("a1"), LaurentCoeff.var("a2")
    for text in (["X1*X4^2 + X3", "X2^2*X4"] if P.name == "V" else ["X1*X2 + X3", "X3*X2"]):
        u = normal_form(parse(text, P))
        w = u.weight()
        assert torus_eigenvalue(u) == a1 ** w[0] * a2 ** w[1]
    mixed = normal_form(parse("X1 + X2", P))
    assert torus_eigenvalue(mixed) is None


def test_torus_u(U):
    assert verify_torus(U).passed


def test_quotient_by_z(V):
    q, cls = quotient_by_pbw_generator(V, "X3")
    assert q.generators == ("X1", "X2", "X4")
    assert cls.confluence.passed and confluence_check(q).passed
    assert cls.vanishing == [("r^2", "s^2")] and cls.pair == ("r^2", "s^2")
    assert len(cls.pairs_tested) == len(CANDIDATES) * (len(CANDIDATES) + 1) // 2
    cert = is_rs_central(q.gen("X2"), q, 4)
    assert cert.central


def test_quotient_rejects_non_normal_generator(V):
    with pytest.raises(NotStrictlyQCommuting):
        quotient_by_pbw_generator(V, "X2")


def test_weyl_orders():
    assert weyl_group_order(CARTAN["U"]) == 6
    assert weyl_group_order(CARTAN["V"]) == 8
    assert weyl_group_order(((2, -1), (-3, 2))) == 12
    assert weyl_group_order(((2,),)) == 2


def test_catalog_counts():
    assert len(stratification_catalog("V")) == 8
    assert len(stratification_catalog("U")) == 6
    hp = [s.h_prime for s in stratification_catalog("V")]
    assert hp == [(), ("Z",), ("Zp",), ("e3",), ("e3bar",), ("e1",), ("e2",), ("e1", "e2")]
    with pytest.raises(ValueError):
        stratification_catalog("G2")


def test_catalog_report(P):
    rep = catalog_report(P.name)
    assert rep.passed
    normal = {"V": ("Z", "Zp"), "U": ("X3", "X3p")}[P.name]
    for n in normal:
        assert rep.certificates[n].central
    if P.name == "V":
        # reported, not presumed
        assert not rep.certificates["e3bar"].central
    fams = [m for s in rep.strata for m in s.members if m.parameter]
    assert len(fams) == 2 and all(m.kind == "both" for m in fams)
    assert all(isinstance(s.to_dict(), dict) for s in rep.strata)
