from fractions import Fraction

import pytest

import pytorsion as pt


def test_pinned_values():
    base = pt.RayConfig(2, [0, 0, 0])
    assert pt.identity_alternating_sum(base) == 48
    assert pt.identity_alternating_sum(base.with_m(1)) == 480
    assert pt.alternating_sum(base, 2) == {
        (0,): Fraction(6), (1,): Fraction(-4), (-1,): Fraction(-4),
        (2,): Fraction(1), (-2,): Fraction(1),
    }
    orb = pt.pinned_config().orbifold
    assert pt.me(base, orb)["rational"] == 0
    assert pt.me(base.with_m(1), orb)["rational"] == Fraction(-16, 3)
    assert pt.mi(base, orb)["rational"] == Fraction(176, 15)
    assert pt.mi(base, orb)["standin"]


def test_p_gamma_and_weyl():
    base = pt.RayConfig(2, [0, 0, 0])
    p = pt.p_gamma(base, 0, 2)
    assert p[(0,)] == [-2, 0, -2]
    assert pt.weyl_group_order(4) == 192
    assert pt.weyl_dim(pt.RayConfig(3, [1, 1, 0, 0])) == 28
    assert base.lambdas() == [2, 1, 0]


def test_eqfora_and_pseudo():
    r = pt.eqfora_check([2, 1], 2)
    assert r["passed"] and r["value"] == 3
    rep = pt.pseudopoly_extract([m * m for m in range(11)], 1, 3)
    assert rep["global_degree"] == 2
    rep = pt.pseudopoly_extract([m if m % 2 == 0 else -m for m in range(21)], 2, 2)
    assert rep["residue_degrees"] == [1, 1]


def test_errors():
    with pytest.raises(pt.InvalidArgument):
        pt.RayConfig(2, [0, 1, 0])
    with pytest.raises(pt.ConfigError) as err:
        pt.parse_config('{"n": 2, "tau": [0, 1, 0], "volume": 1}')
    assert "tau not non-increasing" in str(err.value)
    assert issubclass(pt.ConfigError, pt.TorsionError)


def test_config_and_commands():
    cfg = pt.pinned_config()
    assert cfg.q == 4
    assert pt.parse_config(cfg.canonical()) == cfg
    assert pt.verify("lemma51")["passed"]
    csv = pt.table("ME", m_max=3)
    assert csv.splitlines()[:3] == ["m,re,im,exact", "0,0,0,0", "1,-5.333333333333333,0,-16/3"]
    assert csv == pt.table("ME", m_max=3)


def test_cone():
    assert pt.cone_integrand(1.0, 1.0) == pytest.approx(1 / (64 * 2 ** 2.5))
    assert pt.cone_tail(1.0, 1e-4) > pt.cone_tail(1.0, 1e-2)
