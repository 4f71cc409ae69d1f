#pragma once

// Test-only oracles: exact mean first-passage times to data loss for small
// continuous-time Markov chains, solved by Gaussian elimination. These are
// independent of the event-driven simulator and of the closed-form engine.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace durasim::test {

/// Solves A x = b (dense, partial pivoting). Sizes here are tiny.
inline std::vector<double> solve_linear(std::vector<std::vector<double>> a,
                                        std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    }
    if (a[pivot][col] == 0.0) throw std::runtime_error("singular system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Mean time to loss for a mirrored pair. Replica states: healthy, visible
/// repair, latent undetected, latent repair; loss when both replicas are
/// non-healthy. detection_rate = 1/MDL (0 = never detected). Detection is
/// exponential here, while the simulator samples it uniformly over the scrub
/// period; the means match, so differences are second order.
inline double mirror_pair_mttdl(double mv, double ml, double mrv, double mrl,
                                double detection_rate, double alpha) {
  const double v = 1.0 / mv;
  const double l = std::isinf(ml) ? 0.0 : 1.0 / ml;
  const double mu_v = std::isinf(mrv) ? 0.0 : 1.0 / mrv;
  const double mu_l = std::isinf(mrl) ? 0.0 : 1.0 / mrl;
  const double lam = (v + l) / alpha;  // accelerated fault rate of the mate

  // States: 0 = both healthy, 1 = one visible repair, 2 = one latent
  // undetected, 3 = one latent repair. Absorption = second fault.
  std::vector<std::vector<double>> a(4, std::vector<double>(4, 0.0));
  std::vector<double> b(4, 0.0);

  const double out0 = 2.0 * (v + l);
  a[0][0] = 1.0;
  a[0][1] = -v / (v + l);
  a[0][2] = -l / (v + l);
  b[0] = 1.0 / out0;

  const double out1 = mu_v + lam;
  a[1][1] = 1.0;
  a[1][0] = -mu_v / out1;
  b[1] = 1.0 / out1;

  const double out2 = detection_rate + lam;
  a[2][2] = 1.0;
  a[2][3] = -detection_rate / out2;
  b[2] = 1.0 / out2;

  const double out3 = mu_l + lam;
  a[3][3] = 1.0;
  a[3][0] = -mu_l / out3;
  b[3] = 1.0 / out3;

  return solve_linear(std::move(a), std::move(b))[0];
}

/// Mean time to loss for r replicas with visible faults only. State = number
/// of replicas down; repairs proceed in parallel; loss at r down.
inline double visible_only_mttdl(int r, double mv, double mrv, double alpha) {
  const double v = 1.0 / mv;
  const double mu = 1.0 / mrv;
  const int n = r;  // states 0..r-1
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  std::vector<double> b(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const double fault = (r - k) * v * (k > 0 ? 1.0 / alpha : 1.0);
    const double repair = k * mu;
    const double out = fault + repair;
    a[k][k] = 1.0;
    b[k] = 1.0 / out;
    if (k + 1 < n) a[k][k + 1] = -fault / out;  // k+1 == r is absorption
    if (k > 0) a[k][k - 1] = -repair / out;
  }
  return solve_linear(std::move(a), std::move(b))[0];
}

}  // namespace durasim::test
