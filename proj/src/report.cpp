#include "wheel6/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace wheel6 {

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// Counts are integers or exact halves; print the shortest faithful form.
std::string count_str(double v) {
  char buf[64];
  if (v == std::floor(v))
    std::snprintf(buf, sizeof(buf), "%.0f", v);
  else
    std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace

const char* to_string(CountTask task) {
  switch (task) {
    case CountTask::Gap: return "gap";
    case CountTask::Sum: return "sum";
    case CountTask::Twin: return "twins";
    case CountTask::Quad: return "quad";
    default: return "twin-sum";
  }
}

std::string csv_header() {
  return "task,g_or_shift,n_or_m,class,empirical,estimate,lower_bound,deviation";
}

std::string to_csv_row(const CountReport& r) {
  std::ostringstream os;
  os << to_string(r.task) << ',' << r.g_or_shift << ',' << r.n_or_m << ','
     << r.cls << ',' << count_str(r.empirical) << ',' << fixed4(r.estimate) << ','
     << (std::isnan(r.lower_bound) ? "" : fixed4(r.lower_bound)) << ','
     << fixed4(r.deviation);
  return os.str();
}

std::string to_json(const std::vector<CountReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) {
    nlohmann::ordered_json j;
    j["task"] = to_string(r.task);
    j["params"] = {{"g_or_shift", r.g_or_shift}, {"n_or_m", r.n_or_m}, {"class", r.cls}};
    j["empirical"] = r.empirical;
    j["estimate"] = r.estimate;
    if (std::isnan(r.lower_bound))
      j["lower_bound"] = nullptr;
    else
      j["lower_bound"] = r.lower_bound;
    j["deviation"] = r.deviation;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string to_table(const std::vector<CountReport>& rs) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-9s %10s %10s %5s %12s %14s %14s %12s",
                "task", "g/shift", "n/m", "class", "empirical", "estimate",
                "lower_bound", "deviation");
  os << buf << '\n';
  for (const auto& r : rs) {
    std::snprintf(buf, sizeof(buf), "%-9s %10llu %10llu %5s %12s %14s %14s %12s",
                  to_string(r.task),
                  static_cast<unsigned long long>(r.g_or_shift),
                  static_cast<unsigned long long>(r.n_or_m), r.cls.c_str(),
                  count_str(r.empirical).c_str(), fixed4(r.estimate).c_str(),
                  std::isnan(r.lower_bound) ? "-" : fixed4(r.lower_bound).c_str(),
                  fixed4(r.deviation).c_str());
    os << buf << '\n';
  }
  return os.str();
}

}  // namespace wheel6
