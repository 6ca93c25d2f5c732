#include <doctest.h>

#include <cmath>

#include "blipfield/dynamics.hpp"
#include "helpers.hpp"

using namespace blipfield;

namespace {

StateVector two_channel_packet(std::shared_ptr<const Lattice> lat) {
  PacketSpec right;
  right.center = -20.0;
  right.width = 3.0;
  right.carrier = 4.0;
  right.channel = {Direction::Right, Polarization::H};
  PacketSpec left;
  left.center = 25.0;
  left.width = 2.0;
  left.carrier = 6.0;
  left.channel = {Direction::Left, Polarization::V};
  return normalized(superpose(make_packet(right, lat, StateKind::SingleExcitation),
                              make_packet(left, lat, StateKind::SingleExcitation)));
}

}  // namespace

TEST_CASE("blip evolution equals the transport oracle at site-integer times") {
  auto lat = testhelp::lat(1024, 200.0);
  const PhysicalConstants consts;
  const StateVector st = two_channel_packet(lat);
  for (int m : {1, 7, -5, 128}) {
    const double t = m * lat->dx / consts.c;
    const StateVector spectral = evolve(st, t, EvolutionLaw::Blip, consts);
    const StateVector shifted = exact_transport(st, m);
    CHECK(testhelp::max_abs_diff(spectral, shifted) < 1e-11);
  }
}

TEST_CASE("evolution preserves norm and t=0 is the identity") {
  auto lat = testhelp::lat(512, 100.0);
  const PhysicalConstants consts;
  const StateVector st = testhelp::random_state(lat, 21);
  CHECK(testhelp::max_abs_diff(evolve(st, 0.0, EvolutionLaw::Blip, consts), st) < 1e-13);
  for (EvolutionLaw law : {EvolutionLaw::Blip, EvolutionLaw::Standard})
    CHECK(norm(evolve(st, 13.37, law, consts)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("laws agree on one-sided spectra and disagree on straddling ones") {
  auto lat = testhelp::lat(1024, 200.0);
  const PhysicalConstants consts;

  PacketSpec fast;
  fast.width = 4.0;
  fast.carrier = 10.0;  // k0 * sigma_k >> 1: essentially no weight at k <= 0
  const StateVector one_sided = make_packet(fast, lat, StateKind::SingleExcitation);
  const double t = 11.0;
  CHECK(testhelp::max_abs_diff(evolve(one_sided, t, EvolutionLaw::Blip, consts),
                               evolve(one_sided, t, EvolutionLaw::Standard, consts)) < 1e-9);

  PacketSpec narrow;
  narrow.width = 2.0 * lat->dx;  // spectrum straddles k = 0
  const StateVector straddling = make_packet(narrow, lat, StateKind::SingleExcitation);
  const double w0 = rms_width(straddling, narrow.channel);
  const double horizon = lat->length / (8.0 * consts.c);
  CHECK(rms_width(evolve(straddling, horizon, EvolutionLaw::Blip, consts), narrow.channel) ==
        doctest::Approx(w0).epsilon(1e-9));
  CHECK(rms_width(evolve(straddling, horizon, EvolutionLaw::Standard, consts), narrow.channel) >
        2.0 * w0);
}

TEST_CASE("rms width") {
  auto lat = testhelp::lat(1024, 200.0);
  PacketSpec spec;
  spec.width = 4.0;
  spec.carrier = 3.0;
  const StateVector st = make_packet(spec, lat, StateKind::SingleExcitation);
  CHECK(rms_width(st, spec.channel) == doctest::Approx(4.0).epsilon(0.02));

  // a single-site spike has zero width
  const Channel ch{Direction::Right, Polarization::H};
  CHECK(rms_width(blip_basis_proxy(100, ch, lat), ch) <= lat->dx);

  // transport across the periodic seam must not inflate the width
  const StateVector seam = exact_transport(st, lat->n / 2);
  CHECK(rms_width(seam, spec.channel) == doctest::Approx(4.0).epsilon(0.02));

  CHECK_THROWS_AS(rms_width(st, Channel{Direction::Left, Polarization::V}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rms_width(to_rep(st, Rep::Momentum), spec.channel), std::invalid_argument);
}

TEST_CASE("transport oracle moves each channel its own way") {
  auto lat = testhelp::lat(256, 64.0);
  const Channel right{Direction::Right, Polarization::H};
  const Channel left{Direction::Left, Polarization::H};
  StateVector st = superpose(blip_basis_proxy(100, right, lat), blip_basis_proxy(100, left, lat));
  const StateVector moved = exact_transport(st, 10);
  CHECK(std::abs(moved.channel(right)[110]) > 0.0);
  CHECK(std::abs(moved.channel(left)[90]) > 0.0);
  CHECK_THROWS_AS(exact_transport(to_rep(st, Rep::Momentum), 1), std::invalid_argument);
}
