import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bcl.channels import (
    IDENTITY,
    AdditiveNoise,
    Amplifier,
    ChannelParams,
    ContraAmplifier,
    Decomposition,
    Thermal,
    amp,
    canonical_params,
    classify,
    classify_family,
    compose,
    contra_amp,
    decompose,
    is_physical,
    loss,
    recompose,
    transpose_channel,
)
from bcl.errors import NonPhysical, UnsupportedDirection

unit = st.floats(0, 1)
gain = st.floats(1, 20)
photons = st.floats(0, 50)

families = st.one_of(
    st.builds(Thermal, unit, photons),
    st.builds(AdditiveNoise, photons),
    st.builds(Amplifier, gain, photons),
    st.builds(ContraAmplifier, gain, photons),
)


def close(p: ChannelParams, tau, y, conj=False, tol=1e-12):
    return p.conjugating == conj and abs(p.tau - tau) <= tol and abs(p.y - y) <= tol


class TestCanonical:
    def test_examples(self):
        assert canonical_params(Thermal(0.5, 1)) == ChannelParams(0.5, 1.5)
        assert canonical_params(AdditiveNoise(0)) == IDENTITY
        assert canonical_params(ContraAmplifier(2, 0)) == ChannelParams(-1.0, 2.0, True)
        assert canonical_params(Amplifier(2, 1)) == ChannelParams(2.0, 3.0)

    @given(families)
    def test_always_physical(self, fam):
        assert is_physical(canonical_params(fam))

    @pytest.mark.parametrize("bad", [lambda: Thermal(1.5), lambda: Thermal(0.5, -1), lambda: Amplifier(0.5),
                                     lambda: ContraAmplifier(0.9), lambda: AdditiveNoise(-0.1)])
    def test_invalid_family_parameters(self, bad):
        with pytest.raises(ValueError):
            bad()

    def test_sign_convention_enforced(self):
        with pytest.raises(ValueError):
            ChannelParams(1.0, 2.0, True)
        with pytest.raises(ValueError):
            ChannelParams(-1.0, 2.0, False)
        with pytest.raises(ValueError):
            ChannelParams(1.0, -1.0)
        with pytest.raises(ValueError):
            ChannelParams(float("nan"), 1.0)


class TestClassify:
    def test_thermal_half_one(self):
        c = classify(ChannelParams(0.5, 1.5))
        assert c.is_physical and not c.is_quantum_limited and c.is_entanglement_breaking

    @given(unit)
    def test_pure_loss_is_quantum_limited(self, eta):
        c = classify(ChannelParams(eta, 1 - eta))
        assert c.is_physical and c.is_quantum_limited

    def test_unphysical(self):
        assert not is_physical(ChannelParams(2.0, 0.5))
        assert is_physical(ChannelParams(1.0, 0.5))

    def test_boundary_tolerance(self):
        assert is_physical(ChannelParams(2.0, 1.0 - 5e-13))
        assert not is_physical(ChannelParams(2.0, 1.0 - 1e-9))

    def test_contravariant_always_breaking_and_bounded(self):
        assert not is_physical(ChannelParams(-1.0, 1.5, True))
        c = classify(contra_amp(2.0))
        assert c.is_physical and c.is_quantum_limited and c.is_entanglement_breaking

    @given(families)
    def test_family_classification(self, fam):
        c = classify_family(fam)
        assert c.is_physical
        env = fam.n if isinstance(fam, AdditiveNoise) else fam.N
        assert c.is_quantum_limited == (env == 0)
        if isinstance(fam, ContraAmplifier):
            assert c.is_entanglement_breaking


class TestDecompose:
    @pytest.mark.parametrize(
        "fam, eta0, kappa0",
        [
            (Thermal(0.5, 1), 1 / 3, 1.5),
            (AdditiveNoise(2), 1 / 3, 3.0),
            (ContraAmplifier(2, 1), 1 / 3, 4.0),
            (Amplifier(2, 1), 2 / 3, 3.0),
            (Thermal(1, 5), 1.0, 1.0),
        ],
    )
    def test_examples(self, fam, eta0, kappa0):
        d = decompose(canonical_params(fam))
        assert d.eta0 == pytest.approx(eta0, abs=1e-14)
        assert d.kappa0 == pytest.approx(kappa0, abs=1e-14)
        assert d.conjugating == isinstance(fam, ContraAmplifier)

    @given(unit, photons)
    def test_thermal_closed_form(self, eta, N):
        d = decompose(canonical_params(Thermal(eta, N)))
        assert d.kappa0 == pytest.approx(1 + (1 - eta) * N, rel=1e-12)
        assert d.eta0 == pytest.approx(eta / (1 + (1 - eta) * N), rel=1e-12, abs=1e-15)

    @given(gain, photons)
    def test_amplifier_closed_form(self, k, N):
        d = decompose(canonical_params(Amplifier(k, N)))
        assert d.eta0 == pytest.approx(k / (k + (k - 1) * N), rel=1e-12)

    @given(families)
    def test_round_trip(self, fam):
        p = canonical_params(fam)
        d = decompose(p)
        assert 0 <= d.eta0 <= 1 and d.kappa0 >= 1
        back = recompose(d)
        scale = max(1.0, abs(p.tau), p.y)
        assert back.conjugating == p.conjugating
        assert back.tau == pytest.approx(p.tau, abs=1e-12 * scale)
        assert back.y == pytest.approx(p.y, abs=1e-12 * scale)

    def test_rejects_unphysical(self):
        with pytest.raises(NonPhysical):
            decompose(ChannelParams(2.0, 0.5))


class TestCompose:
    def test_examples(self):
        assert close(compose(loss(1 / 3), amp(1.5)), 0.5, 1.5)
        assert compose(IDENTITY, IDENTITY) == IDENTITY
        assert close(compose(loss(0.5), amp(2.0)), 1.0, 2.0)

    def test_two_conjugations_cancel(self):
        c = compose(contra_amp(2.0), contra_amp(3.0))
        assert not c.conjugating and close(c, 2.0, 2 * 2 + 3, tol=1e-12)

    @given(families, families)
    def test_closure(self, a, b):
        assert is_physical(compose(canonical_params(a), canonical_params(b)))

    @given(unit, unit)
    def test_loss_semigroup(self, a, b):
        c = compose(loss(a), loss(b))
        assert c.tau == pytest.approx(a * b, abs=1e-15)
        assert c.y == pytest.approx(1 - a * b, abs=1e-14)
        assert classify(c).is_quantum_limited

    @given(gain, gain)
    def test_amplifier_semigroup(self, a, b):
        c = compose(amp(a), amp(b))
        assert c.y == pytest.approx(a * b - 1, rel=1e-12)

    def test_rejects_unphysical(self):
        with pytest.raises(NonPhysical):
            compose(ChannelParams(2.0, 0.5), IDENTITY)


class TestTranspose:
    def test_examples(self):
        assert close(transpose_channel(contra_amp(2.0)), 1.0, 2.0)
        m = transpose_channel(contra_amp(3.0))
        assert close(m, 2.0, 3.0)
        d = decompose(m)
        assert d == Decomposition(pytest.approx(2 / 3), 3.0) or (
            d.eta0 == pytest.approx(2 / 3) and d.kappa0 == pytest.approx(3.0)
        )
        assert close(transpose_channel(contra_amp(1.0)), 0.0, 1.0)

    @given(gain)
    def test_equals_amp_after_loss(self, k):
        m = transpose_channel(contra_amp(k))
        ref = compose(loss((k - 1) / k), amp(k))
        assert m.tau == pytest.approx(ref.tau, rel=1e-12) and m.y == pytest.approx(ref.y, rel=1e-12)
        assert classify(m).is_entanglement_breaking

    def test_covariant_rejected(self):
        with pytest.raises(UnsupportedDirection):
            transpose_channel(amp(2.0))


@given(st.floats(0, 10), st.floats(0, 30), st.booleans())
def test_decompose_recompose_generic(gain_, extra, conj):
    tau = -gain_ if conj else gain_
    floor = gain_ + 1 if conj else abs(gain_ - 1)
    p = ChannelParams(tau, floor + extra, conj)
    assume(is_physical(p))
    back = recompose(decompose(p))
    scale = max(1.0, gain_, p.y)
    assert math.isclose(back.tau, p.tau, abs_tol=1e-12 * scale)
    assert math.isclose(back.y, p.y, abs_tol=1e-12 * scale)
