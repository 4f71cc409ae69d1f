#pragma once

#include "durasim/fault_params.hpp"

namespace durasim {

/// Exponential fault CDF: probability that a component with the given MTTF
/// faults within t hours. Throws std::domain_error for t < 0 or mttf <= 0.
double fault_probability(double t_hours, double mttf_hours);

/// First-order approximation t/mttf, clamped to 1 where the window is no
/// longer small. Same domain requirements as fault_probability.
double fault_probability_linear(double t_hours, double mttf_hours);

/// Conditional probabilities of a second fault landing inside the window of
/// vulnerability opened by a first fault, by (first, second) fault type.
struct WindowProbabilities {
  double pvv = 0.0;  ///< P(visible | after visible)
  double plv = 0.0;  ///< P(latent  | after visible)
  double pvl = 0.0;  ///< P(visible | after latent)
  double pll = 0.0;  ///< P(latent  | after latent)
};

/// Window probabilities with correlation boost 1/alpha, each clamped to
/// [0,1], and each (pvv,plv) / (pvl,pll) pair-sum clamped to <= 1 preserving
/// the within-pair ratio. With mdl undetected the latent pair saturates at
/// exactly 1, split proportionally to the 1/MV : 1/ML occurrence rates.
WindowProbabilities window_probabilities(const FaultParams& p);

}  // namespace durasim
