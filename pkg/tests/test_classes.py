"""Exact zero-divisor pairs, semidualizing certificates, class memberships
and the relative homological dimensions."""

import pytest

from ezdlab.classes import (
    CertifiedAll,
    Fails,
    HoldsUpTo,
    NotSemidualizingError,
    Undefined,
    build_proper_PC_resolution,
    fc_pd,
    homothety_map,
    ic_id,
    in_A_C,
    in_B_C,
    in_G_C,
    is_ezd_pair,
    is_semidualizing,
    pc_pd,
)
from ezdlab.module import (
    direct_sum,
    dual_k,
    free_module,
    hom_module,
    regular_module,
    residue_field_module,
    scale_quotient,
    tensor_module,
    zero_module,
)
from ezdlab.resolution import AtLeast, Exactly, NEG_INF

from conftest import var


def test_ezd_pair_ci(ci):
    x, y = var(ci, 0), var(ci, 1)
    rep = is_ezd_pair(x, y, regular_module(ci))
    assert rep.holds
    assert all(rep.checks.values())


def test_ezd_pair_rejects_unit(ci):
    rep = is_ezd_pair(ci.one_element(), var(ci, 1), regular_module(ci))
    assert not rep.holds
    assert rep.failing_checks()


def test_ezd_pair_rejects_nonexact(sprime):
    """x kills nothing but its own multiples in S'; (x, x) is a zero divisor
    pair yet not exact since ker x strictly contains im x."""
    x = var(sprime, 0)
    rep = is_ezd_pair(x, x, regular_module(sprime))
    assert not rep.holds


def test_ezd_pair_u_on_sprime(sprime):
    u = var(sprime, 2)
    assert is_ezd_pair(u, u, regular_module(sprime)).holds


def test_homothety_map_is_iso(square_zero):
    r = regular_module(square_zero)
    omega = dual_k(r)
    chi = homothety_map(omega)
    assert chi.is_isomorphism()


def test_regular_always_semidualizing(ci):
    cert = is_semidualizing(regular_module(ci))
    assert cert.holds
    assert cert.certified_all


def test_omega_semidualizing(square_zero):
    omega = dual_k(regular_module(square_zero))
    cert = is_semidualizing(omega, 12)
    assert cert.holds
    assert cert.certified_all
    assert cert.homothety_iso


def test_residue_field_not_semidualizing(square_zero):
    k = residue_field_module(square_zero)
    cert = is_semidualizing(k)
    assert not cert.holds


def test_free_rank2_not_semidualizing(ci):
    cert = is_semidualizing(free_module(ci, 2))
    assert not cert.holds


def test_class_predicates_reject_bad_c(ci):
    k = residue_field_module(ci)
    with pytest.raises(NotSemidualizingError):
        in_G_C(regular_module(ci), k)


def test_g_class_over_dualizing(square_zero):
    """With C dualizing, every finite module is totally C-reflexive."""
    r = regular_module(square_zero)
    omega = dual_k(r)
    k = residue_field_module(square_zero)
    for m in (r, omega, k):
        rep = in_G_C(m, omega)
        assert rep.holds
        assert isinstance(rep.verdict, CertifiedAll)


def test_a_b_classes_over_dualizing(square_zero):
    r = regular_module(square_zero)
    omega = dual_k(r)
    assert isinstance(in_A_C(r, omega).verdict, CertifiedAll)
    assert isinstance(in_B_C(omega, omega).verdict, CertifiedAll)
    # k fails both natural maps: dim Hom(C, C(x)k) = 4 != 1
    assert isinstance(in_A_C(residue_field_module(square_zero), omega).verdict, Fails)
    assert isinstance(in_B_C(residue_field_module(square_zero), omega).verdict, Fails)


def test_foxby_style_transfer(square_zero, ci):
    """If M is in A_C then C (x) M is in B_C; if M is in B_C then
    Hom(C, M) is in A_C."""
    for algebra in (square_zero, ci):
        r = regular_module(algebra)
        omega = dual_k(r)
        for m in (r, free_module(algebra, 2)):
            assert in_A_C(m, omega).holds
            assert in_B_C(tensor_module(omega, m), omega).holds
        for m in (omega, direct_sum(omega, omega)):
            assert in_B_C(m, omega).holds
            assert in_A_C(hom_module(omega, m), omega).holds


def test_bounded_membership_when_uncertifiable(hyper2):
    """A/xA over k[x]/(x^2) has an infinite resolution, so G-membership in
    the regular module is reported as bounded, never certified."""
    m = scale_quotient(regular_module(hyper2), var(hyper2, 0))[0]
    rep = in_G_C(m, regular_module(hyper2), 10)
    assert rep.holds
    assert isinstance(rep.verdict, HoldsUpTo)
    assert rep.verdict.bound >= 10


def test_proper_resolution_of_c(square_zero):
    omega = dual_k(regular_module(square_zero))
    report = build_proper_PC_resolution(omega, omega, 4, 4)
    assert report.terminated
    assert report.proper
    assert report.proper_rank2
    assert report.augmented_exact
    assert report.betti == [1]


def test_proper_resolution_infinite(hyper2):
    a = regular_module(hyper2)
    m = scale_quotient(a, var(hyper2, 0))[0]
    report = build_proper_PC_resolution(m, a, 4, 4)
    assert not report.terminated
    assert report.proper
    assert report.betti == [1] * 5


def test_pc_pd_values(square_zero):
    r = regular_module(square_zero)
    omega = dual_k(r)
    assert pc_pd(omega, omega) == Exactly(0)
    assert pc_pd(zero_module(square_zero), omega) == Exactly(NEG_INF)
    undef = pc_pd(residue_field_module(square_zero), omega)
    assert isinstance(undef, Undefined)


def test_ic_id_values(square_zero):
    r = regular_module(square_zero)
    omega = dual_k(r)
    assert ic_id(r, omega) == Exactly(0)
    assert ic_id(zero_module(square_zero), omega) == Exactly(NEG_INF)


def test_fc_pd_artinian_collapse(hyper2, square_zero):
    """Over an artinian algebra, flat = projective, so F_C-pd and P_C-pd
    agree; values land in {-inf, 0, >= bound+1}."""
    for algebra in (hyper2, square_zero):
        a = regular_module(algebra)
        assert fc_pd(a, a) == pc_pd(a, a) == Exactly(0)
    m = scale_quotient(regular_module(hyper2), var(hyper2, 0))[0]
    v = fc_pd(m, regular_module(hyper2), 6)
    assert v == AtLeast(7)
