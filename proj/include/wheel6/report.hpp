#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wheel6 {

enum class CountTask : uint8_t { Gap, Sum, Twin, Quad, TwinSum };

const char* to_string(CountTask task);

// One counting task compared against its estimator and lower bound.
// lower_bound is NaN where no bound applies (gaps).
struct CountReport {
  CountTask task = CountTask::Twin;
  uint64_t g_or_shift = 0;
  uint64_t n_or_m = 0;
  std::string cls;      // "g1"/"g2"/"g3" or empty
  double empirical = 0.0;
  double estimate = 0.0;
  double lower_bound = 0.0;
  double deviation = 0.0;  // empirical - estimate
};

// CSV schema: task,g_or_shift,n_or_m,class,empirical,estimate,lower_bound,deviation
std::string csv_header();
std::string to_csv_row(const CountReport& r);
std::string to_json(const std::vector<CountReport>& rs);
std::string to_table(const std::vector<CountReport>& rs);

}  // namespace wheel6
