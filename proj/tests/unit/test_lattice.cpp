#include <doctest.h>

#include <numbers>
#include <stdexcept>

#include "blipfield/constants.hpp"
#include "blipfield/lattice.hpp"

using namespace blipfield;

TEST_CASE("lattice grids") {
  const Lattice lat = build_lattice(8, 2.0);
  CHECK(lat.dx == doctest::Approx(0.25));
  CHECK(lat.xs[0] == doctest::Approx(-1.0));
  CHECK(lat.xs[7] == doctest::Approx(0.75));
  CHECK(lat.dk() == doctest::Approx(std::numbers::pi));
  CHECK(lat.ks[0] == doctest::Approx(-4.0 * std::numbers::pi));
  CHECK(lat.ks[4] == 0.0);
  CHECK(lat.zero_index() == 4);
  CHECK(lat.nyquist_index() == 0);
  CHECK(lat.kmax() == doctest::Approx(4.0 * std::numbers::pi));
  for (int i = 1; i < 8; ++i)
    CHECK(lat.ks[static_cast<std::size_t>(lat.paired_index(i))] == doctest::Approx(-lat.ks[i]));
  CHECK(lat.paired_index(0) == 0);
}

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(build_lattice(12, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(256, -1.0), std::invalid_argument);
  CHECK(same_lattice(build_lattice(64, 3.0), build_lattice(64, 3.0)));
  CHECK_FALSE(same_lattice(build_lattice(64, 3.0), build_lattice(128, 3.0)));
}

TEST_CASE("constants presets") {
  PhysicalConstants nat = PhysicalConstants::natural();
  CHECK(nat.c == 1.0);
  CHECK(nat.hbar == 1.0);
  nat.validate();

  const PhysicalConstants si = PhysicalConstants::si();
  CHECK(si.c == doctest::Approx(299792458.0));
  CHECK(si.hbar == doctest::Approx(1.054571817e-34));
  CHECK(si.eps0 == doctest::Approx(8.8541878128e-12));
  si.validate();

  nat.c = 0.0;
  CHECK_THROWS_AS(nat.validate(), std::invalid_argument);
}

TEST_CASE("channel indexing") {
  for (int i = 0; i < 4; ++i) CHECK(Channel::from_index(i).index() == i);
  CHECK(Channel{Direction::Left, Polarization::H}.index() == 0);
  CHECK(Channel{Direction::Right, Polarization::V}.index() == 3);
  CHECK_THROWS_AS(Channel::from_index(4), std::invalid_argument);
  CHECK(sign(Direction::Left) == -1);
  CHECK(sign(Direction::Right) == 1);
  CHECK(to_string(Channel{Direction::Left, Polarization::V}) == "left,V");
}
