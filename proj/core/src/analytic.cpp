#include "durasim/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "durasim/probability.hpp"

namespace durasim {

namespace {

constexpr double kTinyRatio = 0.01;   // threshold for "window is tiny against an MTTF"
constexpr double kWarnRatio = 0.1;    // above this, dominance margins get a warning

std::string fmt(const char* pattern, double value) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

struct RegimeCheck {
  bool applicable = true;
  std::vector<std::string> diags;

  void require_tiny(const char* label, double num, double den) {
    double ratio = num / den;
    bool ok = ratio < kTinyRatio;
    applicable = applicable && ok;
    diags.push_back(std::string(label) + (ok ? " holds: ratio " : " fails: ratio ") +
                    fmt("%.3g", ratio));
  }

  void require_order(const char* label, double smaller, double larger) {
    double ratio = smaller / larger;
    bool ok = smaller < larger;
    applicable = applicable && ok;
    if (!ok) {
      diags.push_back(std::string(label) + " fails: ratio " + fmt("%.3g", ratio));
    } else if (ratio > kWarnRatio) {
      diags.push_back(std::string(label) + " holds with thin margin: ratio " +
                      fmt("%.3g", ratio));
    } else {
      diags.push_back(std::string(label) + " holds: ratio " + fmt("%.3g", ratio));
    }
  }

  void fail(const std::string& reason) {
    applicable = false;
    diags.push_back(reason);
  }
};

RegimeCheck check_eq9(const FaultParams& p) {
  RegimeCheck c;
  c.require_tiny("eq9: MRV << MV", p.mrv, p.mv);
  if (p.mdl) {
    c.require_tiny("eq9: MRL+MDL << MV", p.mrl + *p.mdl, p.mv);
  } else {
    c.fail("eq9: latent window saturated (mdl undetected)");
  }
  c.require_order("eq9: MV << ML", p.mv, p.ml);
  return c;
}

RegimeCheck check_eq10(const FaultParams& p) {
  RegimeCheck c;
  if (!p.mdl) {
    c.fail("eq10: requires finite detection latency (mdl undetected)");
    return c;
  }
  c.require_tiny("eq10: MRV << ML", p.mrv, p.ml);
  c.require_tiny("eq10: MRL+MDL << ML", p.mrl + *p.mdl, p.ml);
  c.require_order("eq10: ML << MV", p.ml, p.mv);
  return c;
}

RegimeCheck check_eq11(const FaultParams& p) {
  RegimeCheck c;
  c.require_tiny("eq11: MRV << MV", p.mrv, p.mv);
  c.require_order("eq11: MV << ML", p.mv, p.ml);
  if (!(p.ml < p.mv * p.mv)) {
    c.fail("eq11: latent rate negligible (ML >= MV^2); use eq9 instead");
  } else {
    c.diags.push_back("eq11: ML < MV^2 holds: ratio " + fmt("%.3g", p.ml / (p.mv * p.mv)));
  }
  return c;
}

ReliabilityEstimate make_estimate(double mttdl, Method m, std::vector<std::string> diags) {
  ReliabilityEstimate est;
  est.mttdl_hours = mttdl;
  est.method = m;
  est.validity = std::move(diags);
  return est;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact_eq8: return "exact_eq8";
    case Method::visible_dominant_eq9: return "visible_dominant_eq9";
    case Method::latent_dominant_eq10: return "latent_dominant_eq10";
    case Method::long_wov_eq11: return "long_wov_eq11";
    case Method::replicated: return "replicated";
    case Method::simulation: return "simulation";
  }
  return "unknown";
}

double double_fault_rate(const FaultParams& p) {
  const WindowProbabilities w = window_probabilities(p);
  double rate = 0.0;
  if (std::isfinite(p.mv)) rate += (w.pvv + w.plv) / p.mv;
  if (std::isfinite(p.ml)) rate += (w.pvl + w.pll) / p.ml;
  return rate;
}

ReliabilityEstimate mttdl_exact(const FaultParams& p) {
  const double rate = double_fault_rate(p);
  std::vector<std::string> diags = margin_warnings(p);
  double mttdl;
  if (rate > 0.0) {
    mttdl = 1.0 / rate;
  } else {
    mttdl = std::numeric_limits<double>::infinity();
    diags.push_back("double-fault rate is zero: MTTDL unbounded");
  }

  // The product form of the same expression; deviations mean a clamp or
  // saturation engaged and the clamped sum above is authoritative.
  if (p.mdl && std::isfinite(p.mv) && std::isfinite(p.ml)) {
    const double product_form =
        p.alpha * p.ml * p.ml * p.mv * p.mv /
        ((p.mv + p.ml) * (p.mrv * p.ml + (p.mrl + *p.mdl) * p.mv));
    if (std::isfinite(mttdl) && product_form > 0.0) {
      diags.push_back(fmt("product-form relative deviation: %.3g",
                          std::fabs(mttdl - product_form) / product_form));
    }
  } else if (!p.mdl) {
    diags.push_back("latent window saturated (mdl undetected); product form not applicable");
  }
  return make_estimate(mttdl, Method::exact_eq8, std::move(diags));
}

ReliabilityEstimate mttdl_visible_dominant(const FaultParams& p) {
  validate(p);
  RegimeCheck c = check_eq9(p);
  return make_estimate(p.alpha * p.mv * p.mv / p.mrv, Method::visible_dominant_eq9,
                       std::move(c.diags));
}

ReliabilityEstimate mttdl_latent_dominant(const FaultParams& p) {
  validate(p);
  if (!p.mdl) {
    throw std::invalid_argument(
        "latent-dominant regime requires a finite detection latency");
  }
  RegimeCheck c = check_eq10(p);
  return make_estimate(p.alpha * p.ml * p.ml / (p.mrl + *p.mdl),
                       Method::latent_dominant_eq10, std::move(c.diags));
}

ReliabilityEstimate mttdl_long_wov(const FaultParams& p) {
  validate(p);
  RegimeCheck c = check_eq11(p);
  return make_estimate(p.alpha * p.mv * p.mv / (p.mrv + p.mv * p.mv / p.ml),
                       Method::long_wov_eq11, std::move(c.diags));
}

ReliabilityEstimate mttdl_replicated(const SystemConfig& c) {
  if (c.r < 2) throw std::domain_error("replication degree r must be >= 2");
  const FaultParams& p = c.params;
  validate(p);
  const double mttdl =
      p.mv * std::pow(p.alpha * p.mv / p.mrv, static_cast<double>(c.r - 1));
  std::vector<std::string> diags = margin_warnings(p);
  diags.push_back(fmt("replication degree r = %.0f", static_cast<double>(c.r)));
  return make_estimate(mttdl, Method::replicated, std::move(diags));
}

double loss_probability(const ReliabilityEstimate& est, double horizon_hours) {
  if (horizon_hours < 0.0 || std::isnan(horizon_hours)) {
    throw std::domain_error("horizon must be >= 0");
  }
  if (std::isinf(est.mttdl_hours)) return 0.0;
  return -std::expm1(-horizon_hours / est.mttdl_hours);
}

ReliabilityEstimate select_regime(const FaultParams& p) {
  validate(p);
  RegimeCheck c9 = check_eq9(p);
  RegimeCheck c10 = check_eq10(p);
  RegimeCheck c11 = check_eq11(p);

  std::vector<std::string> all;
  for (const auto* c : {&c9, &c10, &c11}) {
    all.insert(all.end(), c->diags.begin(), c->diags.end());
  }
  for (auto& w : margin_warnings(p)) all.push_back(std::move(w));

  ReliabilityEstimate chosen;
  if (c9.applicable) {
    chosen = mttdl_visible_dominant(p);
  } else if (c10.applicable) {
    chosen = mttdl_latent_dominant(p);
  } else if (c11.applicable) {
    chosen = mttdl_long_wov(p);
  } else {
    all.push_back("no dominance regime applicable: falling back to exact form");
    chosen = mttdl_exact(p);
  }
  chosen.validity = std::move(all);
  return chosen;
}

double alpha_lower_bound(const FaultParams& p) {
  validate(p);
  return std::min(10.0 * p.mrv / p.mv, 1.0);
}

}  // namespace durasim
