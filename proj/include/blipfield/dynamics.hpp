#pragma once

#include "blipfield/states.hpp"

namespace blipfield {

/// Blip: phase e^{-i c k t} with signed k; dispersion-free for any spectrum,
/// equivalent to rigid transport x -> x - s c t. Standard: e^{-i c |k| t};
/// agrees with Blip on spectra supported at k > 0 and disperses otherwise.
enum class EvolutionLaw { Blip, Standard };

/// Free evolution by time t (spectral multiplication). Result is returned in
/// the input's representation.
StateVector evolve(const StateVector& st, double t, EvolutionLaw law,
                   const PhysicalConstants& consts);

/// Independent transport oracle: circular shift of each channel by s*sites
/// lattice sites, i.e. the exact Blip evolution at t = sites*dx/c.
StateVector exact_transport(const StateVector& st, int sites);

/// Root-mean-square width of |amplitude|^2 in the named channel, computed
/// around the circular mean so a packet straddling the periodic seam is not
/// misread as wide. Position rep; channel must have nonzero norm.
double rms_width(const StateVector& st, Channel ch);

}
