#include "durasim/probability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace durasim {

namespace {

void check_domain(double t, double mttf) {
  if (t < 0.0 || std::isnan(t)) throw std::domain_error("time must be >= 0");
  if (!(mttf > 0.0)) throw std::domain_error("mttf must be > 0");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Scales a pair down so its sum is <= 1, keeping the ratio between members.
void clamp_pair(double& a, double& b) {
  double s = a + b;
  if (s > 1.0) {
    a /= s;
    b /= s;
  }
}

}  // namespace

double fault_probability(double t_hours, double mttf_hours) {
  check_domain(t_hours, mttf_hours);
  if (std::isinf(mttf_hours)) return 0.0;
  return -std::expm1(-t_hours / mttf_hours);
}

double fault_probability_linear(double t_hours, double mttf_hours) {
  check_domain(t_hours, mttf_hours);
  return std::min(t_hours / mttf_hours, 1.0);
}

WindowProbabilities window_probabilities(const FaultParams& p) {
  validate(p);
  WindowProbabilities w;

  const double boost = 1.0 / p.alpha;
  const double visible_window = p.mrv;

  w.pvv = clamp01(visible_window / p.mv * boost);
  w.plv = std::isinf(p.ml) ? 0.0 : clamp01(visible_window / p.ml * boost);
  clamp_pair(w.pvv, w.plv);

  if (std::isinf(p.ml)) {
    // No latent faults: the latent-first windows never open.
    w.pvl = 0.0;
    w.pll = 0.0;
  } else if (!p.mdl) {
    // Never detected: the latent window saturates exactly. Split the unit
    // mass across second-fault types by occurrence rate 1/MV : 1/ML.
    if (std::isinf(p.mv)) {
      w.pvl = 0.0;
      w.pll = 1.0;
    } else {
      w.pvl = p.ml / (p.mv + p.ml);
      w.pll = p.mv / (p.mv + p.ml);
    }
  } else {
    const double latent_window = *p.mdl + p.mrl;
    w.pvl = std::isinf(p.mv) ? 0.0 : clamp01(latent_window / p.mv * boost);
    w.pll = clamp01(latent_window / p.ml * boost);
    clamp_pair(w.pvl, w.pll);
  }
  return w;
}

}  // namespace durasim
