#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wheel6/mask.hpp"

namespace wheel6 {

struct EstimatorParams {
  enum class TailMode : uint8_t { DiscreteSum, Integral };

  double gamma = 0.5772156649015329;          // Euler-Mascheroni
  double twin_constant = 0.6601618158468696;  // C2
  TailMode mode = TailMode::DiscreteSum;
  uint64_t cutoff = 1'000'000;                // truncated product upper limit
};

// Primes 5 <= p <= limit with precomputed, error-compensated prefix sums of
// the log factors used by every truncated product, so each query costs one
// binary search. Prefix snapshots carry >= 10 significant digits at 1e6 terms.
class PrimeTable {
 public:
  enum class Constant : uint8_t { C12, C14, C24 };

  explicit PrimeTable(uint64_t limit);

  uint64_t limit() const { return limit_; }
  std::span<const uint64_t> primes() const { return primes_; }

  // prod_{5 <= p <= x} (1 - k/p), k in {1, 2, 4}.
  double product_one_minus(unsigned k, uint64_t x) const;

  // Truncated constants over 5 <= p <= cutoff:
  //   C12: p(p-2)/(p-1)^2   C14: (p-4)p^3/(p-1)^4   C24: (p-4)p/(p-2)^2
  double constant(Constant c, uint64_t cutoff) const;

 private:
  uint64_t limit_;
  std::vector<uint64_t> primes_;
  std::vector<double> log1m_[3];   // k = 1, 2, 4
  std::vector<double> logc_[3];    // C12, C14, C24
  size_t index_of(uint64_t x) const;
};

double mertens_product(const PrimeTable& pt, unsigned k, uint64_t x);
double constant_C(const PrimeTable& pt, PrimeTable::Constant c, uint64_t cutoff);

// Mertens-product lower bounds:
//   bound_H  = m e^{2 gamma} prod_{5<=p<=6m} (1 - 2/p)
//   bound_Q  = m e^{4 gamma} prod_{5<=p<=6m} (1 - 4/p)
//   bound_Qprime = mu4(6m) * bound_Q
double bound_H(const PrimeTable& pt, const EstimatorParams& params, uint64_t m);
double bound_Q(const PrimeTable& pt, const EstimatorParams& params, uint64_t m);
double bound_Qprime(const PrimeTable& pt, const EstimatorParams& params, uint64_t m);

struct BoundReport {
  uint64_t m = 0;
  double lower = 0.0;
  double empirical = 0.0;
  bool satisfied = false;  // empirical > lower
};
BoundReport make_bound_report(uint64_t m, double lower, double empirical);

// Correction factor rescaling pair counts between gap/sum parameters:
// kappa * prod over distinct prime divisors d >= 5 of g of (d-1)/(d-2).
// Gap mode: kappa = 2 if 3 | g else 1. Sum mode: kappa = 1 if 3 | g else 0.5.
enum class Eta2Mode : uint8_t { Gap, Sum };
double eta2(uint64_t g, Eta2Mode mode);

// prod over distinct prime divisors d >= 5 of shift of (d-2)/(d-4).
double eta4(uint64_t shift);

// Ratios of logarithmic sums over t = 2..n-2 (or midpoint quadrature at
// step 1 in Integral mode):
//   mu2: 1/(log t log(n-t))           over 1/(log t)^2
//   mu4: 1/((log t)^2 (log(n-t))^2)   over 1/(log t)^4
double mu2(uint64_t n, EstimatorParams::TailMode mode);
double mu4(uint64_t n, EstimatorParams::TailMode mode);

// Hardy-Littlewood style estimates. Empirical inputs (pi_a, pi_b, pi2,
// pi_total) come from the counting module; pi_total = pi_a + pi_b + 2.
double estimate_twin_via_classes(const PrimeTable& pt, uint64_t m,
                                 uint64_t pi_a, uint64_t pi_b);
double estimate_twin_hl(const EstimatorParams& params, uint64_t n, uint64_t pi_n);
double estimate_gap_hl(const EstimatorParams& params, uint64_t g, uint64_t n);
double estimate_sum_hl(const EstimatorParams& params, uint64_t g);
double estimate_quad_via_classes(const PrimeTable& pt, uint64_t m,
                                 uint64_t pi_a, uint64_t pi_b);
double estimate_quad_via_twins(const PrimeTable& pt, uint64_t m, uint64_t pi2);
double estimate_twin_sum(const PrimeTable& pt, const EstimatorParams& params,
                         uint64_t m, uint64_t pi_total);

// Derived ratio f with count = m * f * prod_{5<=p<=6m}(1 - 1/p).
double density_factor(const PrimeTable& pt, uint64_t m, uint64_t class_count);

// I_m = m * prod_{5<=p<=6m} (1 - 4/p) for each m (ascending).
std::vector<double> divergence_sequence(const PrimeTable& pt,
                                      std::span<const uint64_t> ms);

// Finite-prefix densities. For masks the measured set is the underlying
// prime values (6i-1 for L, 6i+1 for R and T), so |S(n)|/n is a plain
// prime-class density. Sumset densities live in index space: the sequences
// contain 0 as an element value, so a lone nonzero summand already yields
// its own value.
enum class DensityKind : uint8_t { Asymptotic, Schnirelmann };
double prefix_density(const IndexedMask& mask, uint64_t n, DensityKind kind);
double sumset_density(const IndexedMask& s1, const IndexedMask& s2, uint64_t n,
                      DensityKind kind);

}  // namespace wheel6
