#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fcg/errors.hpp"
#include "fcg/kernels.hpp"

using namespace fcg::kernels;

namespace {

// restores the dispatch even when a CHECK aborts the test case
struct IsaGuard {
  ~IsaGuard() { reset_isa(); }
};

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_supported(Isa::avx2)) out.push_back(Isa::avx2);
  if (isa_supported(Isa::neon)) out.push_back(Isa::neon);
  return out;
}

std::vector<double> random_doubles(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<double> random_ints(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-8, 8);
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(u(rng));
  return v;
}

}  // namespace

TEST_CASE("scalar kernels, exact small cases") {
  const double a[] = {1, 2, 3};
  const double b[] = {4, 5, 6};
  CHECK(scalar::dot(a, b, 3) == 32.0);
  CHECK(scalar::dot(a, b, 0) == 0.0);

  double y[] = {1, 1, 1};
  scalar::axpy(y, 2.0, a, 3);
  CHECK(y[0] == 3.0);
  CHECK(y[1] == 5.0);
  CHECK(y[2] == 7.0);

  double x[] = {2, 4};
  scalar::scale(x, 0.5, 2);
  CHECK(x[0] == 1.0);
  CHECK(x[1] == 2.0);
}

TEST_CASE("every supported isa matches scalar exactly on integer data") {
  // small-integer products and sums are exact in doubles, so reassociation
  // and FMA cannot change the result: equality must be bitwise
  IsaGuard guard;
  std::mt19937_64 rng(7);
  for (Isa isa : supported_isas()) {
    for (std::size_t n = 1; n <= 17; ++n) {
      const auto a = random_ints(n, rng);
      const auto b = random_ints(n, rng);
      const double want = scalar::dot(a.data(), b.data(), n);
      force_isa(isa);
      CHECK(dot(a.data(), b.data(), n) == want);

      auto y0 = random_ints(n, rng);
      auto y1 = y0;
      force_isa(Isa::scalar);
      axpy(y0.data(), 3.0, a.data(), n);
      force_isa(isa);
      axpy(y1.data(), 3.0, a.data(), n);
      CHECK(y0 == y1);

      auto s0 = a;
      auto s1 = a;
      force_isa(Isa::scalar);
      scale(s0.data(), -2.0, n);
      force_isa(isa);
      scale(s1.data(), -2.0, n);
      CHECK(s0 == s1);
    }
  }
}

TEST_CASE("every supported isa matches scalar within rounding on random data") {
  IsaGuard guard;
  std::mt19937_64 rng(11);
  for (Isa isa : supported_isas()) {
    for (std::size_t n : {1ul, 2ul, 3ul, 4ul, 5ul, 7ul, 8ul, 9ul, 13ul, 16ul, 17ul, 64ul, 1000ul}) {
      const auto a = random_doubles(n, rng);
      const auto b = random_doubles(n, rng);
      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::fabs(a[i] * b[i]);
      const double want = scalar::dot(a.data(), b.data(), n);
      force_isa(isa);
      const double got = dot(a.data(), b.data(), n);
      CHECK(std::fabs(got - want) <= 1e-13 * (1.0 + mag));

      // axpy differs at most by the one rounding FMA removes, per element
      auto y0 = random_doubles(n, rng);
      auto y1 = y0;
      force_isa(Isa::scalar);
      axpy(y0.data(), 0.7, a.data(), n);
      force_isa(isa);
      axpy(y1.data(), 0.7, a.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::fabs(y0[i] - y1[i]) <= 1e-15 * (1.0 + std::fabs(y0[i])));

      // scale is one multiply either way: bitwise equal
      auto s0 = a;
      auto s1 = a;
      force_isa(Isa::scalar);
      scale(s0.data(), 0.3, n);
      force_isa(isa);
      scale(s1.data(), 0.3, n);
      CHECK(s0 == s1);
    }
  }
}

TEST_CASE("dispatch control") {
  IsaGuard guard;
  CHECK(isa_supported(Isa::scalar));
  CHECK(isa_supported(best_isa()));

  force_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  reset_isa();
  CHECK(active_isa() == best_isa());

  for (Isa isa : {Isa::avx2, Isa::neon})
    if (!isa_supported(isa)) CHECK_THROWS_AS(force_isa(isa), fcg::InvalidValueError);

  CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
  CHECK(std::string(isa_name(Isa::avx2)) == "avx2");
  CHECK(std::string(isa_name(Isa::neon)) == "neon");
}
