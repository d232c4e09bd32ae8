#include "wheel6/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wheel6/sieve.hpp"

namespace wheel6 {

namespace {

// Compensated accumulator; truncated products over ~1e5 primes keep >= 10
// significant digits this way.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

std::vector<uint64_t> distinct_prime_divisors_ge5(uint64_t n) {
  std::vector<uint64_t> out;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  for (uint64_t d = 5; d * d <= n; d += 2) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

double tail_term_mu2(double t, double n) { return 1.0 / (std::log(t) * std::log(n - t)); }
double tail_den_mu2(double t, double /*n*/) { double l = std::log(t); return 1.0 / (l * l); }
double tail_term_mu4(double t, double n) {
  double a = std::log(t), b = std::log(n - t);
  return 1.0 / (a * a * b * b);
}
double tail_den_mu4(double t, double /*n*/) {
  double l = std::log(t);
  return 1.0 / (l * l * l * l);
}

// Sum of f(t, n) over the tail range [2, n-2]: integer t in DiscreteSum
// mode, midpoint quadrature at step 1 otherwise.
template <typename F>
double tail(F f, uint64_t n_hi, double n, EstimatorParams::TailMode mode) {
  KahanSum s;
  if (mode == EstimatorParams::TailMode::DiscreteSum) {
    for (uint64_t t = 2; t + 2 <= n_hi; ++t) s.add(f(static_cast<double>(t), n));
  } else {
    for (double t = 2.5; t < static_cast<double>(n_hi) - 2.0; t += 1.0) s.add(f(t, n));
  }
  return s.sum;
}

}  // namespace

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit), primes_(primes_in_wheel(limit)) {
  if (limit < 5) throw std::invalid_argument("prime table cutoff >= 5 required");
  const unsigned ks[3] = {1, 2, 4};
  KahanSum acc1[3], accc[3];
  for (int j = 0; j < 3; ++j) {
    log1m_[j].reserve(primes_.size() + 1);
    logc_[j].reserve(primes_.size() + 1);
    log1m_[j].push_back(0.0);
    logc_[j].push_back(0.0);
  }
  for (uint64_t p : primes_) {
    double pd = static_cast<double>(p);
    for (int j = 0; j < 3; ++j) {
      acc1[j].add(std::log1p(-static_cast<double>(ks[j]) / pd));
      log1m_[j].push_back(acc1[j].sum);
    }
    accc[0].add(std::log(pd * (pd - 2)) - 2 * std::log(pd - 1));
    accc[1].add(std::log(pd - 4) + 3 * std::log(pd) - 4 * std::log(pd - 1));
    accc[2].add(std::log((pd - 4) * pd) - 2 * std::log(pd - 2));
    for (int j = 0; j < 3; ++j) logc_[j].push_back(accc[j].sum);
  }
}

size_t PrimeTable::index_of(uint64_t x) const {
  return std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin();
}

double PrimeTable::product_one_minus(unsigned k, uint64_t x) const {
  int j = k == 1 ? 0 : k == 2 ? 1 : k == 4 ? 2 : -1;
  if (j < 0) throw std::invalid_argument("k must be 1, 2 or 4");
  if (x < 5) throw std::invalid_argument("product lower limit is p = 5");
  if (x > limit_) throw std::out_of_range("x beyond prime table limit");
  return std::exp(log1m_[j][index_of(x)]);
}

double PrimeTable::constant(Constant c, uint64_t cutoff) const {
  if (cutoff < 5) throw std::invalid_argument("cutoff >= 5 required");
  if (cutoff > limit_) throw std::out_of_range("cutoff beyond prime table limit");
  return std::exp(logc_[static_cast<int>(c)][index_of(cutoff)]);
}

double mertens_product(const PrimeTable& pt, unsigned k, uint64_t x) {
  return pt.product_one_minus(k, x);
}

double constant_C(const PrimeTable& pt, PrimeTable::Constant c, uint64_t cutoff) {
  return pt.constant(c, cutoff);
}

double bound_H(const PrimeTable& pt, const EstimatorParams& params, uint64_t m) {
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  return static_cast<double>(m) * std::exp(2 * params.gamma) * pt.product_one_minus(2, 6 * m);
}

double bound_Q(const PrimeTable& pt, const EstimatorParams& params, uint64_t m) {
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  return static_cast<double>(m) * std::exp(4 * params.gamma) * pt.product_one_minus(4, 6 * m);
}

double bound_Qprime(const PrimeTable& pt, const EstimatorParams& params, uint64_t m) {
  return mu4(6 * m, params.mode) * bound_Q(pt, params, m);
}

BoundReport make_bound_report(uint64_t m, double lower, double empirical) {
  return {m, lower, empirical, empirical > lower};
}

double eta2(uint64_t g, Eta2Mode mode) {
  if (g < 2 || g % 2 != 0) throw std::invalid_argument("even g >= 2 required");
  double kappa;
  if (mode == Eta2Mode::Gap) {
    kappa = g % 3 == 0 ? 2.0 : 1.0;
  } else {
    kappa = g % 3 == 0 ? 1.0 : 0.5;
  }
  for (uint64_t d : distinct_prime_divisors_ge5(g))
    kappa *= static_cast<double>(d - 1) / static_cast<double>(d - 2);
  return kappa;
}

double eta4(uint64_t shift) {
  if (shift < 1) throw std::invalid_argument("shift >= 1 required");
  double v = 1.0;
  for (uint64_t d : distinct_prime_divisors_ge5(shift))
    v *= static_cast<double>(d - 2) / static_cast<double>(d - 4);
  return v;
}

double mu2(uint64_t n, EstimatorParams::TailMode mode) {
  if (n < 6) throw std::invalid_argument("mu2 requires n >= 6");
  double nd = static_cast<double>(n);
  return tail(tail_term_mu2, n, nd, mode) / tail(tail_den_mu2, n, nd, mode);
}

double mu4(uint64_t n, EstimatorParams::TailMode mode) {
  if (n < 6) throw std::invalid_argument("mu4 requires n >= 6");
  double nd = static_cast<double>(n);
  return tail(tail_term_mu4, n, nd, mode) / tail(tail_den_mu4, n, nd, mode);
}

double estimate_twin_via_classes(const PrimeTable& pt, uint64_t m, uint64_t pi_a,
                                 uint64_t pi_b) {
  double md = static_cast<double>(m);
  return pt.constant(PrimeTable::Constant::C12, 6 * m) *
         static_cast<double>(pi_a) * static_cast<double>(pi_b) / md;
}

double estimate_twin_hl(const EstimatorParams& params, uint64_t n, uint64_t pi_n) {
  double nd = static_cast<double>(n);
  double density = static_cast<double>(pi_n) / nd;
  return 2.0 * nd * params.twin_constant * density * density;
}

double estimate_gap_hl(const EstimatorParams& params, uint64_t g, uint64_t n) {
  auto term = [g](double t, double /*n*/) {
    return 1.0 / (std::log(t) * std::log(t + static_cast<double>(g)));
  };
  // tail over [2, n]
  KahanSum s;
  if (params.mode == EstimatorParams::TailMode::DiscreteSum) {
    for (uint64_t t = 2; t <= n; ++t) s.add(term(static_cast<double>(t), 0));
  } else {
    for (double t = 2.5; t < static_cast<double>(n); t += 1.0) s.add(term(t, 0));
  }
  return eta2(g, Eta2Mode::Gap) * 2.0 * params.twin_constant * s.sum;
}

double estimate_sum_hl(const EstimatorParams& params, uint64_t g) {
  if (g < 6) throw std::invalid_argument("g >= 6 required");
  return eta2(g, Eta2Mode::Sum) * 2.0 * params.twin_constant *
         tail(tail_term_mu2, g, static_cast<double>(g), params.mode);
}

double estimate_quad_via_classes(const PrimeTable& pt, uint64_t m, uint64_t pi_a,
                                 uint64_t pi_b) {
  double md = static_cast<double>(m);
  double q = (static_cast<double>(pi_a) / md) * (static_cast<double>(pi_b) / md);
  return pt.constant(PrimeTable::Constant::C14, 6 * m) * md * q * q;
}

double estimate_quad_via_twins(const PrimeTable& pt, uint64_t m, uint64_t pi2) {
  double md = static_cast<double>(m);
  double q = static_cast<double>(pi2) / md;
  return pt.constant(PrimeTable::Constant::C24, 6 * m) * md * q * q;
}

double estimate_twin_sum(const PrimeTable& pt, const EstimatorParams& params,
                         uint64_t m, uint64_t pi_total) {
  double md = static_cast<double>(m);
  double q = static_cast<double>(pi_total) / md;
  return md * mu4(6 * m, params.mode) *
         pt.constant(PrimeTable::Constant::C14, 6 * m) / eta4(m) * q * q * q * q;
}

double density_factor(const PrimeTable& pt, uint64_t m, uint64_t class_count) {
  return static_cast<double>(class_count) /
         (static_cast<double>(m) * pt.product_one_minus(1, 6 * m));
}

std::vector<double> divergence_sequence(const PrimeTable& pt,
                                      std::span<const uint64_t> ms) {
  std::vector<double> out;
  out.reserve(ms.size());
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i > 0 && ms[i] <= ms[i - 1])
      throw std::invalid_argument("m values must be ascending");
    out.push_back(static_cast<double>(ms[i]) * pt.product_one_minus(4, 6 * ms[i]));
  }
  return out;
}

namespace {

// Largest index whose member value fits below n, per mask kind.
uint64_t value_index_limit(MaskKind kind, uint64_t n) {
  return kind == MaskKind::L ? (n + 1) / 6 : n >= 1 ? (n - 1) / 6 : 0;
}

}  // namespace

double prefix_density(const IndexedMask& mask, uint64_t n, DensityKind kind) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  uint64_t full = value_index_limit(mask.kind(), n);
  uint64_t hi = std::min(full, mask.window().end() - 1);
  if (kind == DensityKind::Asymptotic)
    return static_cast<double>(mask.count_through(hi)) / static_cast<double>(n);

  // inf over 1 <= k <= n of |S(k)|/k. Between member values the ratio only
  // decays, so it suffices to probe just before each member and at k = n.
  double best = 1.0;
  uint64_t members = 0;
  for (uint64_t i = mask.window().lo; i <= hi; ++i) {
    if (!mask.test(i)) continue;
    uint64_t v = mask.kind() == MaskKind::L ? 6 * i - 1 : 6 * i + 1;
    if (v > n) break;
    if (v > 1)
      best = std::min(best, static_cast<double>(members) / static_cast<double>(v - 1));
    ++members;
  }
  best = std::min(best, static_cast<double>(members) / static_cast<double>(n));
  return best;
}

double sumset_density(const IndexedMask& s1, const IndexedMask& s2, uint64_t n,
                      DensityKind kind) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  if (!s1.window().covers(1, n) || !s2.window().covers(1, n))
    throw std::out_of_range("masks must cover [1, n]");

  std::vector<uint64_t> left;  // surviving indices of s1, ascending
  for (uint64_t i = 1; i <= n; ++i)
    if (s1.test(i)) left.push_back(i);

  // k is representable with a lone nonzero summand (the other sequence holds
  // zeros) or as i + (k - i) with both summands alive.
  auto member = [&](uint64_t k) {
    if (s1.test(k) || s2.test(k)) return true;
    for (uint64_t i : left) {
      if (i >= k) break;
      if (s2.test(k - i)) return true;
    }
    return false;
  };

  uint64_t members = 0;
  double best = 1.0;
  for (uint64_t k = 1; k <= n; ++k) {
    if (member(k)) ++members;
    best = std::min(best, static_cast<double>(members) / static_cast<double>(k));
  }
  if (kind == DensityKind::Asymptotic)
    return static_cast<double>(members) / static_cast<double>(n);
  return best;
}

}  // namespace wheel6
