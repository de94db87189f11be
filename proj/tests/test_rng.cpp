#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "grain/chf.hpp"
#include "grain/rng.hpp"

using namespace grain;

TEST_SUITE("random streams") {

TEST_CASE("streams are deterministic and separated") {
  SeededStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool same = true, differ_stream = false, differ_seed = false;
  for (int i = 0; i < 256; ++i) {
    std::uint64_t va = a.next_u64();
    if (va != b.next_u64()) same = false;
    if (va != c.next_u64()) differ_stream = true;
    if (va != d.next_u64()) differ_seed = true;
  }
  CHECK(same);
  CHECK(differ_stream);
  CHECK(differ_seed);
}

TEST_CASE("unit draws live on (0,1] with the right moments") {
  SeededStream rng(1, 0);
  const int n = 100000;
  double sum = 0.0, sq = 0.0, lo = 1.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = rng.unit();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
    sq += u * u;
  }
  CHECK(lo > 0.0);
  CHECK(hi <= 1.0);
  double mean = sum / n, var = sq / n - mean * mean;
  CHECK(std::fabs(mean - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("gaussian and exponential moments") {
  SeededStream rng(2, 0);
  const int n = 100000;
  double gs = 0.0, gsq = 0.0, es = 0.0;
  for (int i = 0; i < n; ++i) {
    double g = rng.gaussian();
    gs += g;
    gsq += g * g;
    es += rng.exponential();
  }
  CHECK(std::fabs(gs / n) < 4.0 / std::sqrt(double(n)));
  CHECK(gsq / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(es / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("pareto draws: support, tail and moments") {
  SeededStream rng(3, 0);
  const int n = 200000;
  double min_r = 1e300, root_sum = 0.0;
  int above2 = 0;
  for (int i = 0; i < n; ++i) {
    double r = pareto_sample(rng, 1.5, 1.0);
    min_r = std::min(min_r, r);
    root_sum += std::sqrt(r);
    if (r > 2.0) ++above2;
  }
  CHECK(min_r >= 1.0);
  // E sqrt(R) = alpha/(alpha - 1/2) = 3/2, Var sqrt(R) = E R - 9/4 = 3/4
  CHECK(std::fabs(root_sum / n - 1.5) <
        4.0 * std::sqrt(0.75 / n));
  // P(R > 2) = 2^(-3/2)
  CHECK(double(above2) / n ==
        doctest::Approx(std::pow(2.0, -1.5)).epsilon(0.02));
}

TEST_CASE("tilted pareto shifts the exponent") {
  // density reweighted by r^q is Pareto with exponent alpha - q
  SeededStream rng(4, 0);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = pareto_sample(rng, 1.5, 1.0, 1.0);  // effective exponent 1/2
    sum += std::pow(r, 0.2);
  }
  // E R^0.2 under Pareto(1/2) is (1/2)/(1/2 - 0.2) = 5/3
  double var = 0.5 / 0.1 - 25.0 / 9.0;  // E R^0.4 - (E R^0.2)^2
  CHECK(std::fabs(sum / n - 5.0 / 3.0) < 4.0 * std::sqrt(var / n));
}

TEST_CASE("poisson counts in both branch regimes") {
  SeededStream rng(5, 0);
  const int n = 100000;
  for (double mean : {3.7, 47.3}) {
    double s = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      double k = static_cast<double>(poisson_count(rng, mean));
      s += k;
      sq += k * k;
    }
    double m = s / n, v = sq / n - m * m;
    CHECK(std::fabs(m - mean) < 4.0 * std::sqrt(mean / n));
    CHECK(v / mean == doctest::Approx(1.0).epsilon(0.05));
  }
  CHECK(poisson_count(rng, 0.0) == 0);
}

TEST_CASE("poisson determinism") {
  SeededStream a(6, 1), b(6, 1);
  for (int i = 0; i < 50; ++i)
    CHECK(poisson_count(a, 23.5) == poisson_count(b, 23.5));
}

TEST_CASE("stable draws match the characteristic function") {
  const double a = 1.5, sigma = 2.0;
  const int n = 200000;
  for (double beta : {1.0, 0.0}) {
    SeededStream rng(7, 0);
    std::complex<double> acc(0.0, 0.0);
    const double theta = 0.4;
    for (int i = 0; i < n; ++i) {
      double z = stable_sample(rng, a, sigma, beta);
      acc += std::complex<double>(std::cos(theta * z), std::sin(theta * z));
    }
    acc /= static_cast<double>(n);
    double scale = std::pow(sigma, a);
    std::complex<double> target =
        beta == 1.0
            ? std::exp(chf::stable_log_chf(theta, a, scale))
            : std::exp(std::complex<double>(
                  -scale * std::pow(std::fabs(theta), a), 0.0));
    CHECK(std::abs(acc - target) < 0.015);
  }
}

}  // TEST_SUITE
