#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "grain/errors.hpp"
#include "grain/kernels.hpp"
#include "grain/rng.hpp"

using namespace grain;

namespace {

struct Batch {
  std::vector<double> u, v, rx, ry;
};

Batch make_batch(std::size_t n, std::uint64_t seed) {
  SeededStream rng(seed, 0);
  Batch b;
  b.u.resize(n);
  b.v.resize(n);
  b.rx.resize(n);
  b.ry.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.u[i] = -2.0 + 5.0 * rng.unit();
    b.v[i] = -2.0 + 5.0 * rng.unit();
    b.rx[i] = 2.0 * rng.unit();
    b.ry[i] = 2.0 * rng.unit();
  }
  return b;
}

}  // namespace

TEST_SUITE("compute kernels") {

TEST_CASE("scalar and avx2 kernels agree") {
  const kernels::Ops* simd = kernels::avx2_ops();
  if (!kernels::avx2_available() || simd == nullptr) return;
  const kernels::Ops& scalar = kernels::scalar_ops();

  // lengths straddling and not dividing the vector width
  for (std::size_t n : {std::size_t(1), std::size_t(7), std::size_t(64),
                        std::size_t(1003)}) {
    Batch b = make_batch(n, 100 + n);

    // positive inputs only: fractional powers of negatives are undefined
    std::vector<double> out_a(n), out_b(n);
    scalar.pow_transform(b.rx.data(), out_a.data(), n, 1.25, -0.6);
    simd->pow_transform(b.rx.data(), out_b.data(), n, 1.25, -0.6);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(out_b[i] ==
            doctest::Approx(out_a[i]).epsilon(1e-11));

    double sum_a = scalar.overlap_area_sum(b.u.data(), b.v.data(),
                                           b.rx.data(), b.ry.data(), n,
                                           2.5, 1.7);
    double sum_b = simd->overlap_area_sum(b.u.data(), b.v.data(),
                                          b.rx.data(), b.ry.data(), n,
                                          2.5, 1.7);
    CHECK(sum_b == doctest::Approx(sum_a).epsilon(1e-11));

    // pure comparisons, so the counts must match exactly
    CHECK(scalar.cover_count(b.u.data(), b.v.data(), b.rx.data(),
                             b.ry.data(), n, 0.4, 0.9) ==
          simd->cover_count(b.u.data(), b.v.data(), b.rx.data(),
                            b.ry.data(), n, 0.4, 0.9));
  }
}

TEST_CASE("pow_transform matches std::pow") {
  const kernels::Ops& scalar = kernels::scalar_ops();
  Batch b = make_batch(257, 9);
  std::vector<double> out(257);
  scalar.pow_transform(b.rx.data(), out.data(), 257, 2.0, 0.75);
  for (std::size_t i = 0; i < 257; ++i)
    CHECK(out[i] ==
          doctest::Approx(2.0 * std::pow(b.rx[i], 0.75)).epsilon(1e-12));
}

TEST_CASE("kernel selection") {
  kernels::set_active("scalar");
  CHECK(std::string(kernels::active_ops().name) == "scalar");
  if (kernels::avx2_available()) {
    kernels::set_active("avx2");
    CHECK(std::string(kernels::active_ops().name) == "avx2");
  } else {
    CHECK_THROWS_AS(kernels::set_active("avx2"), Error);
  }
  CHECK_THROWS_AS(kernels::set_active("neon"), Error);
  kernels::set_active("auto");
  CHECK(kernels::active_ops().name != nullptr);
}

}  // TEST_SUITE
