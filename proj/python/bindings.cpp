#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blipfield/dynamics.hpp"
#include "blipfield/errors.hpp"
#include "blipfield/lorentz.hpp"
#include "blipfield/observables.hpp"
#include "blipfield/version.hpp"

namespace py = pybind11;
using namespace blipfield;

namespace {

py::array_t<double> as_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<std::complex<double>> as_array(const cvec& v) {
  return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(v.size()), v.data());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "1D four-channel field lattice: states, blip evolution, "
            "regularised observables, boosts";
  m.attr("__version__") = version_string;

  py::register_exception<PreconditionError>(m, "PreconditionError");

  py::enum_<Direction>(m, "Direction")
      .value("Left", Direction::Left)
      .value("Right", Direction::Right);
  py::enum_<Polarization>(m, "Polarization")
      .value("H", Polarization::H)
      .value("V", Polarization::V);
  py::enum_<StateKind>(m, "StateKind")
      .value("SingleExcitation", StateKind::SingleExcitation)
      .value("Coherent", StateKind::Coherent);
  py::enum_<PacketShape>(m, "PacketShape")
      .value("Gaussian", PacketShape::Gaussian)
      .value("Rectangular", PacketShape::Rectangular)
      .value("Custom", PacketShape::Custom);
  py::enum_<Rep>(m, "Rep")
      .value("Position", Rep::Position)
      .value("Momentum", Rep::Momentum);
  py::enum_<EvolutionLaw>(m, "EvolutionLaw")
      .value("Blip", EvolutionLaw::Blip)
      .value("Standard", EvolutionLaw::Standard);
  py::enum_<FieldComponent>(m, "FieldComponent")
      .value("Ey", FieldComponent::Ey)
      .value("Ez", FieldComponent::Ez)
      .value("By", FieldComponent::By)
      .value("Bz", FieldComponent::Bz);

  py::class_<Channel>(m, "Channel")
      .def(py::init<>())
      .def(py::init([](Direction d, Polarization p) { return Channel{d, p}; }),
           py::arg("dir"), py::arg("pol"))
      .def_readwrite("dir", &Channel::dir)
      .def_readwrite("pol", &Channel::pol)
      .def("index", &Channel::index)
      .def_static("from_index", &Channel::from_index)
      .def("__eq__", [](const Channel& a, const Channel& b) { return a == b; })
      .def("__repr__", [](const Channel& ch) { return "Channel(" + to_string(ch) + ")"; });
  m.def("all_channels", [] {
    const auto chs = all_channels();
    return std::vector<Channel>(chs.begin(), chs.end());
  });

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<>())
      .def_readwrite("c", &PhysicalConstants::c)
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("eps0", &PhysicalConstants::eps0)
      .def_readwrite("area", &PhysicalConstants::area)
      .def_static("natural", &PhysicalConstants::natural)
      .def_static("si", &PhysicalConstants::si)
      .def("validate", &PhysicalConstants::validate);

  py::class_<Lattice, std::shared_ptr<Lattice>>(m, "Lattice")
      .def_readonly("n", &Lattice::n)
      .def_readonly("length", &Lattice::length)
      .def_readonly("dx", &Lattice::dx)
      .def_property_readonly("xs", [](const Lattice& l) { return as_array(l.xs); })
      .def_property_readonly("ks", [](const Lattice& l) { return as_array(l.ks); })
      .def("dk", &Lattice::dk)
      .def("nyquist_index", &Lattice::nyquist_index)
      .def("zero_index", &Lattice::zero_index)
      .def("paired_index", &Lattice::paired_index)
      .def("kmax", &Lattice::kmax);
  m.def("build_lattice",
        [](int n, double length) { return std::make_shared<Lattice>(build_lattice(n, length)); },
        py::arg("n"), py::arg("length"));

  py::class_<ChannelAmplitude>(m, "ChannelAmplitude")
      .def(py::init([](Rep rep, const cvec& values) {
             return ChannelAmplitude{rep, values};
           }),
           py::arg("rep"), py::arg("values"))
      .def_readwrite("rep", &ChannelAmplitude::rep)
      .def_property_readonly("values",
                             [](const ChannelAmplitude& a) { return as_array(a.values); });
  m.def("to_momentum", &to_momentum, py::arg("a"), py::arg("dir"), py::arg("lat"));
  m.def("to_position", &to_position, py::arg("a"), py::arg("dir"), py::arg("lat"));

  py::class_<PacketSpec>(m, "PacketSpec")
      .def(py::init<>())
      .def_readwrite("shape", &PacketSpec::shape)
      .def_readwrite("channel", &PacketSpec::channel)
      .def_readwrite("center", &PacketSpec::center)
      .def_readwrite("width", &PacketSpec::width)
      .def_readwrite("carrier", &PacketSpec::carrier)
      .def_readwrite("phase", &PacketSpec::phase)
      .def_readwrite("amplitude", &PacketSpec::amplitude)
      .def_readwrite("samples", &PacketSpec::samples)
      .def_readwrite("samples_file", &PacketSpec::samples_file);

  py::class_<StateVector>(m, "StateVector")
      .def_readonly("kind", &StateVector::kind)
      .def_readonly("rep", &StateVector::rep)
      .def_readonly("lattice", &StateVector::lattice)
      .def("channel",
           [](const StateVector& st, Channel ch) { return as_array(st.channel(ch)); },
           py::arg("ch"))
      .def("set_channel",
           [](StateVector& st, Channel ch, const cvec& values) {
             if (static_cast<int>(values.size()) != st.lattice->n)
               throw std::invalid_argument("channel length must match the lattice");
             st.channel(ch) = values;
           },
           py::arg("ch"), py::arg("values"));

  m.def("zero_state", &zero_state, py::arg("lat"), py::arg("kind"),
        py::arg("rep") = Rep::Position);
  m.def("make_packet", &make_packet, py::arg("spec"), py::arg("lat"), py::arg("kind"));
  m.def("blip_basis_proxy", &blip_basis_proxy, py::arg("site"), py::arg("ch"), py::arg("lat"));
  m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
  m.def("norm", &norm, py::arg("st"));
  m.def("to_rep", &to_rep, py::arg("st"), py::arg("rep"));
  m.def("superpose", &superpose, py::arg("a"), py::arg("b"));
  m.def("normalized", &normalized, py::arg("st"));

  py::class_<PositiveProjection>(m, "PositiveProjection")
      .def_readonly("state", &PositiveProjection::state)
      .def_readonly("discarded_fraction", &PositiveProjection::discarded_fraction);
  m.def("project_positive_wavenumbers", &project_positive_wavenumbers, py::arg("st"));

  m.def("evolve", &evolve, py::arg("st"), py::arg("t"), py::arg("law"), py::arg("consts"));
  m.def("exact_transport", &exact_transport, py::arg("st"), py::arg("sites"));
  m.def("rms_width", &rms_width, py::arg("st"), py::arg("ch"));

  py::class_<PhaseGauge>(m, "PhaseGauge")
      .def(py::init<>())
      .def(py::init([](const std::vector<double>& phi) { return PhaseGauge{phi}; }),
           py::arg("phi"))
      .def_readwrite("phi", &PhaseGauge::phi)
      .def("is_zero", &PhaseGauge::is_zero)
      .def("validate", &PhaseGauge::validate)
      .def_static("zero", &PhaseGauge::zero)
      .def_static("random", &PhaseGauge::random, py::arg("lat"), py::arg("seed"));

  m.def("regularisation_symbol",
        [](const Lattice& lat, const PhysicalConstants& consts, const PhaseGauge& gauge,
           double exponent) { return as_array(regularisation_symbol(lat, consts, gauge, exponent)); },
        py::arg("lat"), py::arg("consts"), py::arg("gauge") = PhaseGauge{},
        py::arg("exponent") = 0.5);
  m.def("apply_regularisation", &apply_regularisation, py::arg("a"), py::arg("dir"),
        py::arg("lat"), py::arg("consts"), py::arg("gauge") = PhaseGauge{},
        py::arg("exponent") = 0.5);
  m.def("kernel_real_space",
        [](const Lattice& lat, const PhysicalConstants& consts) {
          return as_array(kernel_real_space(lat, consts));
        },
        py::arg("lat"), py::arg("consts"));

  py::class_<SlopeFit>(m, "SlopeFit")
      .def_readonly("slope", &SlopeFit::slope)
      .def_readonly("window_lo", &SlopeFit::window_lo)
      .def_readonly("window_hi", &SlopeFit::window_hi)
      .def_readonly("points", &SlopeFit::points);
  m.def("kernel_tail_slope",
        [](const std::vector<double>& kernel, const Lattice& lat) {
          return kernel_tail_slope(kernel, lat);
        },
        py::arg("kernel"), py::arg("lat"));

  py::class_<ChannelFieldProfiles>(m, "ChannelFieldProfiles")
      .def_readonly("t", &ChannelFieldProfiles::t)
      .def_readonly("lattice", &ChannelFieldProfiles::lattice)
      .def("channel",
           [](const ChannelFieldProfiles& p, Channel ch) { return as_array(p.channel(ch)); },
           py::arg("ch"));
  m.def("channel_field_profiles", &channel_field_profiles, py::arg("coherent"), py::arg("t"),
        py::arg("consts"), py::arg("gauge") = PhaseGauge{}, py::arg("exponent") = 0.5);

  py::class_<FieldSnapshot>(m, "FieldSnapshot")
      .def_readonly("t", &FieldSnapshot::t)
      .def("component",
           [](const FieldSnapshot& s, FieldComponent c) { return as_array(s.component(c)); },
           py::arg("c"))
      .def("real_component",
           [](const FieldSnapshot& s, FieldComponent c) { return as_array(s.real_component(c)); },
           py::arg("c"));
  m.def("field_expectation", &field_expectation, py::arg("coherent"), py::arg("t"),
        py::arg("consts"), py::arg("gauge") = PhaseGauge{});
  m.def("advection_residual_rms", &advection_residual_rms, py::arg("prev"), py::arg("curr"),
        py::arg("next"), py::arg("dt"), py::arg("dir"), py::arg("lat"), py::arg("consts"));

  m.def("energy_expectation", &energy_expectation, py::arg("st"), py::arg("consts"));
  m.def("field_route_energy", &field_route_energy, py::arg("st"), py::arg("consts"),
        py::arg("gauge") = PhaseGauge{});
  m.def("hdyn_expectation", &hdyn_expectation, py::arg("st"), py::arg("consts"));
  m.def("eigenvalue_hdyn", &eigenvalue_hdyn, py::arg("n_excitations"), py::arg("k"),
        py::arg("consts"));

  py::class_<SpectraResult>(m, "SpectraResult")
      .def_property_readonly("hdyn", [](const SpectraResult& r) { return as_array(r.hdyn); })
      .def_property_readonly("henergy",
                             [](const SpectraResult& r) { return as_array(r.henergy); })
      .def_readonly("commutator_max_abs", &SpectraResult::commutator_max_abs);
  m.def("single_excitation_spectra", &single_excitation_spectra, py::arg("lat"),
        py::arg("consts"));
  m.def("rr_composition_check", &rr_composition_check, py::arg("lat"), py::arg("consts"),
        py::arg("seed") = std::uint64_t{7});

  m.def("doppler_factor", &doppler_factor, py::arg("beta"), py::arg("dir"));
  m.def("boost_state", &boost_state, py::arg("st"), py::arg("beta"));

  py::class_<TwoPathResult>(m, "TwoPathResult")
      .def_readonly("max_abs_diff", &TwoPathResult::max_abs_diff)
      .def_readonly("peak_field", &TwoPathResult::peak_field)
      .def_readonly("normalized", &TwoPathResult::normalized);
  m.def("covariance_two_path", &covariance_two_path, py::arg("coherent"), py::arg("beta"),
        py::arg("consts"), py::arg("exponent") = 0.5);
}
