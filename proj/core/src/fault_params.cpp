#include "durasim/fault_params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace durasim {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string ratio_str(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

void validate(const FaultParams& p) {
  require(p.mv > 0.0 && !std::isnan(p.mv), "mv must be strictly positive");
  require(p.ml > 0.0 && !std::isnan(p.ml), "ml must be strictly positive");
  require(p.mrv >= 0.0 && !std::isnan(p.mrv), "mrv must be non-negative");
  require(p.mrl >= 0.0 && !std::isnan(p.mrl), "mrl must be non-negative");
  if (p.mdl) {
    require(*p.mdl >= 0.0 && !std::isnan(*p.mdl),
            "mdl must be non-negative or the undetected marker");
  }
  require(p.alpha > 0.0 && p.alpha <= 1.0, "alpha must be in (0, 1]");
}

std::vector<std::string> margin_warnings(const FaultParams& p) {
  std::vector<std::string> out;
  if (std::isfinite(p.mv) && p.mrv * 10.0 >= p.mv) {
    out.push_back("repair margin: MRV is within 10x of MV (MRV/MV = " +
                  ratio_str(p.mrv / p.mv) + ")");
  }
  if (p.mdl && std::isfinite(p.ml) && (p.mrl + *p.mdl) * 10.0 >= p.ml) {
    out.push_back("repair margin: MRL+MDL is within 10x of ML ((MRL+MDL)/ML = " +
                  ratio_str((p.mrl + *p.mdl) / p.ml) + ")");
  }
  return out;
}

void validate(const ScrubPolicy& s) {
  if (s.kind == ScrubPolicy::Kind::periodic) {
    require(s.period_hours > 0.0 && std::isfinite(s.period_hours),
            "periodic scrub requires a positive finite period");
  }
}

FaultParams SystemConfig::effective_params() const {
  FaultParams p = params;
  if (auto mdl = scrub.implied_mdl()) p.mdl = mdl;
  return p;
}

void validate(const SystemConfig& c) {
  require(c.r >= 2, "replication degree r must be >= 2");
  validate(c.scrub);
  validate(c.params);
  validate(c.effective_params());
  require(std::isfinite(c.params.mv) || std::isfinite(c.params.ml),
          "at least one fault rate must be nonzero (mv or ml finite)");
}

}  // namespace durasim
