#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wheel6/counting.hpp"
#include "wheel6/estimators.hpp"

using namespace wheel6;
using doctest::Approx;

namespace {
const PrimeTable& table_1e5() {
  static PrimeTable pt(100'000);
  return pt;
}
constexpr auto kSum = EstimatorParams::TailMode::DiscreteSum;
constexpr auto kIntegral = EstimatorParams::TailMode::Integral;
}  // namespace

TEST_CASE("mertens products") {
  CHECK(mertens_product(table_1e5(), 1, 30) == Approx(0.47384166930585675).epsilon(1e-12));
  CHECK(mertens_product(table_1e5(), 2, 5) == Approx(0.6).epsilon(1e-15));
  CHECK(mertens_product(table_1e5(), 4, 5) == Approx(0.2).epsilon(1e-15));
  CHECK_THROWS_AS(mertens_product(table_1e5(), 3, 30), std::invalid_argument);
  CHECK_THROWS_AS(mertens_product(table_1e5(), 2, 4), std::invalid_argument);
}

TEST_CASE("product identities") {
  // (1 - 2/p) = C12-factor * (1 - 1/p)^2 per prime, hence for the products.
  for (uint64_t x : {30ull, 1000ull, 100'000ull}) {
    double lhs = mertens_product(table_1e5(), 2, x);
    double rhs = constant_C(table_1e5(), PrimeTable::Constant::C12, x) *
                 std::pow(mertens_product(table_1e5(), 1, x), 2);
    CHECK(lhs == Approx(rhs).epsilon(1e-12));
    CHECK(lhs < std::pow(mertens_product(table_1e5(), 1, x), 2));
  }
}

TEST_CASE("truncated constants") {
  CHECK(constant_C(table_1e5(), PrimeTable::Constant::C12, 5) == Approx(0.9375).epsilon(1e-15));
  CHECK(constant_C(table_1e5(), PrimeTable::Constant::C24, 7) ==
        Approx(7.0 / 15.0).epsilon(1e-14));
  // already within a few 1e-6 of the twin-constant limit at 1e5
  CHECK(constant_C(table_1e5(), PrimeTable::Constant::C12, 100'000) ==
        Approx(0.8802).epsilon(0.001));
}

TEST_CASE("eta2") {
  CHECK(eta2(28, Eta2Mode::Gap) == Approx(1.2).epsilon(1e-12));
  CHECK(eta2(30, Eta2Mode::Gap) == Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(eta2(94, Eta2Mode::Sum) == Approx(0.5 * 46.0 / 45.0).epsilon(1e-12));
  CHECK(eta2(2, Eta2Mode::Gap) == 1.0);
  // depends only on the odd prime divisors >= 5 and the residue mod 3
  for (uint64_t g : {10ull, 28ull, 94ull, 210ull})
    CHECK(eta2(g, Eta2Mode::Gap) == Approx(eta2(4 * g, Eta2Mode::Gap)).epsilon(1e-12));
}

TEST_CASE("eta4") {
  CHECK(eta4(1) == 1.0);
  CHECK(eta4(5) == Approx(3.0).epsilon(1e-12));
  CHECK(eta4(35) == Approx(5.0).epsilon(1e-12));
  CHECK(eta4(4) == 1.0);
  CHECK(eta4(25) == Approx(3.0).epsilon(1e-12));
}

TEST_CASE("mu ratios") {
  CHECK(mu2(32, kSum) == Approx(0.7069685).epsilon(1e-5));
  CHECK(mu2(100'000, kSum) == Approx(0.9722745).epsilon(1e-5));
  CHECK(mu4(227, kSum) == Approx(0.1362778).epsilon(1e-5));
  CHECK_THROWS_AS(mu2(5, kSum), std::invalid_argument);

  for (uint64_t n : {6ull, 10ull, 32ull, 100ull, 997ull, 5000ull}) {
    double v2 = mu2(n, kSum);
    double v4 = mu4(n, kSum);
    CHECK(v2 > 0.0);
    CHECK(v2 <= 1.0);
    CHECK(v4 > 0.0);
    CHECK(v4 <= 1.0);
  }
  // The two modes approach each other slowly for mu2; for mu4 the t = 2
  // endpoint terms keep a persistent offset that quadrature cannot see.
  CHECK(std::fabs(mu2(1000, kSum) - mu2(1000, kIntegral)) < 0.03);
  CHECK(std::fabs(mu2(10'000, kSum) - mu2(10'000, kIntegral)) < 0.01);
  CHECK(std::fabs(mu2(100'000, kSum) - mu2(100'000, kIntegral)) < 0.002);
  for (uint64_t n : {1000ull, 10'000ull}) {
    double vi = mu4(n, kIntegral);
    CHECK(vi > 0.0);
    CHECK(vi <= 1.0);
    CHECK(std::fabs(mu4(n, kSum) - vi) < 0.2);
  }
}

TEST_CASE("lower bounds") {
  EstimatorParams params;
  SieveSet s = SieveSet::build(2000);
  // pi_2(36) = 4 beats mH_6
  double mh6 = bound_H(table_1e5(), params, 6);
  CHECK(mh6 < 4.0);
  CHECK(make_bound_report(6, mh6, 4.0).satisfied);
  for (uint64_t m = 6; m <= 2000; ++m)
    CHECK(static_cast<double>(pi_twin(s, 6 * m)) > bound_H(table_1e5(), params, m));
  for (uint64_t m = 2; m <= 1999; ++m)
    CHECK(static_cast<double>(pi_quad(s, 1, m)) > bound_Q(table_1e5(), params, m));
}

TEST_CASE("twin-sum bound crosses 1 by m = 947") {
  EstimatorParams params;
  uint64_t first = 0;
  for (uint64_t m = 2; m <= 947; ++m) {
    if (bound_Qprime(table_1e5(), params, m) > 1.0) {
      first = m;
      break;
    }
  }
  CHECK(first != 0);
  CHECK(first <= 947);
  for (uint64_t m : {947ull, 1000ull, 2000ull, 5000ull})
    CHECK(bound_Qprime(table_1e5(), params, m) > 1.0);
}

TEST_CASE("divergence sequence") {
  std::vector<uint64_t> ms = {1};
  CHECK(divergence_sequence(table_1e5(), ms)[0] == Approx(0.2).epsilon(1e-12));
  std::vector<uint64_t> more = {1000, 2000, 5000, 10'000, 16'000};
  auto seq = divergence_sequence(table_1e5(), more);
  for (size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] > seq[i - 1]);
  std::vector<uint64_t> bad = {10, 10};
  CHECK_THROWS_AS(divergence_sequence(table_1e5(), bad), std::invalid_argument);
}

TEST_CASE("density factors recover the class counts") {
  SieveSet s = SieveSet::build(2000);
  auto [pa, pb] = prime_class_counts(s, 2000);
  double fa = density_factor(table_1e5(), 2000, pa);
  CHECK(fa * 2000 * mertens_product(table_1e5(), 1, 12'000) == Approx(pa).epsilon(1e-12));
}

TEST_CASE("prefix densities") {
  SieveSet s = SieveSet::build(2000);
  // value-domain density of the a-class primes decays
  double d1 = prefix_density(s.l, 1200, DensityKind::Asymptotic);
  double d2 = prefix_density(s.l, 6000, DensityKind::Asymptotic);
  double d3 = prefix_density(s.l, 12'000, DensityKind::Asymptotic);
  CHECK(d1 > d2);
  CHECK(d2 > d3);
  CHECK(prefix_density(s.l, 2, DensityKind::Asymptotic) == 0.0);
  // the first member 5 alone forces the Schnirelmann infimum to 0
  CHECK(prefix_density(s.l, 12'000, DensityKind::Schnirelmann) == 0.0);

  IndexedMask empty({1, 100}, MaskKind::L);
  for (uint64_t i = 1; i <= 100; ++i) empty.clear(i);
  CHECK(prefix_density(empty, 600, DensityKind::Asymptotic) == 0.0);
  CHECK(prefix_density(empty, 600, DensityKind::Schnirelmann) == 0.0);
}

TEST_CASE("sumset densities") {
  SieveSet s = SieveSet::build(10'000);
  CHECK(sumset_density(s.l, s.r, 10'000, DensityKind::Schnirelmann) == 1.0);
  CHECK(sumset_density(s.l, s.l, 10'000, DensityKind::Schnirelmann) == 1.0);
  CHECK(sumset_density(s.r, s.r, 10'000, DensityKind::Schnirelmann) == 1.0);
  CHECK(sumset_density(s.l, s.r, 10'000, DensityKind::Asymptotic) == 1.0);
}

TEST_CASE("quadruplet counts track the 4-fold sieve scale") {
  SieveSet s = SieveSet::build(10'001);
  EstimatorParams params;
  double ratio = static_cast<double>(pi_quad(s, 1, 10'000)) /
                 bound_Q(table_1e5(), params, 10'000);
  CHECK(ratio >= 0.5);
  CHECK(ratio <= 2.0);
}

TEST_CASE("hl estimates at the worked scales") {
  EstimatorParams params;
  SieveSet s = SieveSet::build(2000);
  auto [pa, pb] = prime_class_counts(s, 1666);
  uint64_t pi2 = pi_twin(s, 6 * 1666);
  PrimeTable pt(6 * 1666);
  // the class estimate lands within a few percent at n ~ 1e4
  double est = estimate_twin_via_classes(pt, 1666, pa, pb);
  CHECK(std::fabs(est - static_cast<double>(pi2)) / pi2 < 0.1);
  double hl = estimate_twin_hl(params, 6 * 1666, pa + pb + 2);
  CHECK(std::fabs(hl - static_cast<double>(pi2)) / pi2 < 0.1);
  // gap and sum tails stay positive and scale with eta2
  double gap_est = estimate_gap_hl(params, 28, 9996);
  CHECK(gap_est > 0.0);
  double sum_est = estimate_sum_hl(params, 9996);
  CHECK(sum_est > 0.0);
  uint64_t quad = pi_quad(s, 1, 1666);
  double q_est = estimate_quad_via_classes(pt, 1666, pa, pb);
  CHECK(std::fabs(q_est - static_cast<double>(quad)) < 10.0);
}
