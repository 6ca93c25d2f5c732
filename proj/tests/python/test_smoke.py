"""Smoke checks of the Python bindings against values the C++ suite pins."""

import numpy as np
import pytest

import blipfield as bf


@pytest.fixture(scope="module")
def lat():
    return bf.build_lattice(1024, 200.0)


@pytest.fixture(scope="module")
def consts():
    return bf.PhysicalConstants.natural()


def packet(lat, kind=bf.StateKind.SingleExcitation, center=-30.0, width=4.0,
           carrier=10.0, direction=bf.Direction.Right):
    spec = bf.PacketSpec()
    spec.center = center
    spec.width = width
    spec.carrier = carrier
    spec.channel = bf.Channel(direction, bf.Polarization.H)
    return bf.make_packet(spec, lat, kind)


def test_lattice_grids(lat):
    assert lat.n == 1024
    assert lat.dx == pytest.approx(200.0 / 1024)
    assert lat.ks[lat.zero_index()] == 0.0
    assert lat.xs[0] == -100.0


def test_packet_norm_and_spectrum(lat):
    st = packet(lat)
    assert bf.norm(st) == pytest.approx(1.0, abs=1e-12)
    stm = bf.to_rep(st, bf.Rep.Momentum)
    amps = stm.channel(bf.Channel(bf.Direction.Right, bf.Polarization.H))
    peak_k = lat.ks[int(np.argmax(np.abs(amps)))]
    assert peak_k == pytest.approx(10.0, abs=2 * np.pi / 200.0)


def test_cross_channel_orthogonality(lat, consts):
    right = packet(lat, center=-50.0)
    left = packet(lat, center=50.0, direction=bf.Direction.Left)
    for t in (0.0, 25.0, 50.0):
        er = bf.evolve(right, t, bf.EvolutionLaw.Blip, consts)
        el = bf.evolve(left, t, bf.EvolutionLaw.Blip, consts)
        assert abs(bf.inner_product(er, el)) == 0.0


def test_blip_evolution_is_transport(lat, consts):
    st = packet(lat)
    t = 64 * lat.dx / consts.c
    moved = bf.evolve(st, t, bf.EvolutionLaw.Blip, consts)
    oracle = bf.exact_transport(st, 64)
    ch = bf.Channel(bf.Direction.Right, bf.Polarization.H)
    assert np.max(np.abs(moved.channel(ch) - oracle.channel(ch))) < 1e-11


def test_energy_conserved_and_positive(lat, consts):
    st = packet(lat)
    e0 = bf.energy_expectation(st, consts)
    assert e0 > 0.0
    moved = bf.evolve(st, 17.3, bf.EvolutionLaw.Blip, consts)
    assert bf.energy_expectation(moved, consts) == pytest.approx(e0, rel=1e-12)
    gauge = bf.PhaseGauge.random(lat, 11)
    assert bf.field_route_energy(st, consts, gauge) == pytest.approx(e0, rel=1e-12)


def test_kernel_tail_slope(consts):
    big = bf.build_lattice(4096, 200.0)
    kernel = bf.kernel_real_space(big, consts)
    fit = bf.kernel_tail_slope(list(kernel), big)
    assert -1.55 < fit.slope < -1.45


def test_boost_norm_and_doppler(lat, consts):
    assert bf.doppler_factor(0.6, bf.Direction.Right) == 0.5
    st = packet(lat, center=0.0)
    boosted = bf.boost_state(st, 0.3)
    assert bf.norm(boosted) == pytest.approx(1.0, abs=1e-10)


def test_edge_packet_rejected(lat):
    with pytest.raises(bf.PreconditionError):
        packet(lat, center=99.0)
