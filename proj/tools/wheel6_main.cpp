#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wheel6/counting.hpp"
#include "wheel6/estimators.hpp"
#include "wheel6/report.hpp"
#include "wheel6/sieve.hpp"
#include "wheel6/verify.hpp"
#include "wheel6/wheel.hpp"

namespace fs = std::filesystem;
using namespace wheel6;

namespace {

enum class Format { Table, Csv, Json };

struct Options {
  std::string format = "table";
  std::string out;
  std::string mask_cache;
  std::string mode = "sum";
  unsigned threads = 1;
  bool raw = false;
  bool corrected = false;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Table;
  }
  EstimatorParams params() const {
    EstimatorParams p;
    p.mode = mode == "integral" ? EstimatorParams::TailMode::Integral
                                : EstimatorParams::TailMode::DiscreteSum;
    return p;
  }
  bool use_raw() const { return raw && !corrected; }
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(opt.out, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open output file: " + opt.out);
  os << text;
  if (!text.empty() && text.back() != '\n') os << '\n';
}

void emit_reports(const Options& opt, const std::vector<CountReport>& rs) {
  switch (opt.fmt()) {
    case Format::Csv: {
      std::string text = csv_header() + "\n";
      for (const auto& r : rs) text += to_csv_row(r) + "\n";
      emit(opt, text);
      return;
    }
    case Format::Json:
      emit(opt, to_json(rs));
      return;
    default:
      emit(opt, to_table(rs));
      return;
  }
}

// Loads cached masks when their windows cover [1, limit]; header fields only.
std::optional<SieveSet> load_cached(const Options& opt, uint64_t limit) {
  if (opt.mask_cache.empty()) return std::nullopt;
  fs::path dir(opt.mask_cache);
  fs::path lp = dir / "l.w6sv", rp = dir / "r.w6sv", tp = dir / "t.w6sv";
  if (!fs::exists(lp) || !fs::exists(rp) || !fs::exists(tp)) return std::nullopt;
  IndexedMask l = load_mask(lp), r = load_mask(rp), t = load_mask(tp);
  if (l.kind() != MaskKind::L || r.kind() != MaskKind::R || t.kind() != MaskKind::T)
    return std::nullopt;
  if (l.window().lo != 1 || l.window() != r.window() || l.window() != t.window())
    return std::nullopt;
  if (l.window().len < limit) return std::nullopt;
  return SieveSet{std::move(l), std::move(r), std::move(t)};
}

SieveSet obtain_sieve(const Options& opt, uint64_t limit) {
  if (auto cached = load_cached(opt, limit)) return std::move(*cached);
  return SieveSet::build(limit, opt.threads);
}

uint64_t round_down_6(uint64_t n) { return n < 6 ? 6 : n - n % 6; }

// Count of pairs whose smaller member <= n lives at index floor((n+1)/6).
uint64_t twin_index_limit(uint64_t n) { return (n + 1) / 6; }

CountReport gap_report(const Options& opt, const SieveSet& s, uint64_t g, uint64_t n) {
  GapCount gc = pi_gap(s, g, n);
  EvenClass ec = EvenClass::of(g);
  CountReport r;
  r.task = CountTask::Gap;
  r.g_or_shift = g;
  r.n_or_m = n;
  r.cls = to_string(ec.cls);
  r.empirical = static_cast<double>(opt.use_raw() ? gc.construction : gc.corrected);
  r.estimate = estimate_gap_hl(opt.params(), g, n);
  r.lower_bound = std::nan("");
  r.deviation = r.empirical - r.estimate;
  return r;
}

CountReport sum_report(const Options& opt, const PrimeTable& pt, const SieveSet& s,
                       uint64_t g) {
  SumCount sc = pi_sum(s, g);
  EvenClass ec = EvenClass::of(g);
  CountReport r;
  r.task = CountTask::Sum;
  r.g_or_shift = g;
  r.n_or_m = ec.m;
  r.cls = to_string(ec.cls);
  r.empirical = opt.use_raw() ? sc.construction.value() : sc.corrected.value();
  r.estimate = estimate_sum_hl(opt.params(), g);
  r.lower_bound = mu2(6 * ec.m, opt.params().mode) * bound_H(pt, opt.params(), ec.m);
  r.deviation = r.empirical - r.estimate;
  return r;
}

CountReport twin_report(const Options& opt, const PrimeTable& pt, const SieveSet& s,
                        uint64_t n) {
  uint64_t m = twin_index_limit(n);
  auto [pa, pb] = prime_class_counts(s, m);
  CountReport r;
  r.task = CountTask::Twin;
  r.n_or_m = n;
  r.empirical = static_cast<double>(s.t.count_through(m));
  r.estimate = estimate_twin_via_classes(pt, m, pa, pb);
  r.lower_bound = bound_H(pt, opt.params(), m);
  r.deviation = r.empirical - r.estimate;
  return r;
}

CountReport quad_report(const Options& opt, const PrimeTable& pt, const SieveSet& s,
                        uint64_t shift, uint64_t m) {
  auto [pa, pb] = prime_class_counts(s, m);
  CountReport r;
  r.task = CountTask::Quad;
  r.g_or_shift = shift;
  r.n_or_m = m;
  r.empirical = static_cast<double>(pi_quad(s, shift, m));
  r.estimate = eta4(shift) * estimate_quad_via_classes(pt, m, pa, pb);
  r.lower_bound =
      shift == 1 ? bound_Q(pt, opt.params(), m) : std::nan("");
  r.deviation = r.empirical - r.estimate;
  return r;
}

CountReport twin_sum_report(const Options& opt, const PrimeTable& pt,
                            const SieveSet& s, uint64_t m) {
  auto [pa, pb] = prime_class_counts(s, m);
  CountReport r;
  r.task = CountTask::TwinSum;
  r.n_or_m = m;
  r.empirical = static_cast<double>(twin_sum_reps(s, m));
  r.estimate = estimate_twin_sum(pt, opt.params(), m, pa + pb + 2);
  r.lower_bound = bound_Qprime(pt, opt.params(), m);
  r.deviation = r.empirical - r.estimate;
  return r;
}

void run_scan(const Options& opt, uint64_t m_max) {
  SieveSet s = obtain_sieve(opt, m_max);
  std::vector<uint64_t> exceptions = scan_exceptions(s, m_max, opt.threads);
  switch (opt.fmt()) {
    case Format::Csv: {
      std::string text = "m,g1,g2,g3\n";
      for (uint64_t m : exceptions)
        text += std::to_string(m) + "," + std::to_string(6 * m - 2) + "," +
                std::to_string(6 * m) + "," + std::to_string(6 * m + 2) + "\n";
      emit(opt, text);
      return;
    }
    case Format::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (uint64_t m : exceptions)
        arr.push_back({{"m", m}, {"g1", 6 * m - 2}, {"g2", 6 * m}, {"g3", 6 * m + 2}});
      emit(opt, arr.dump(2));
      return;
    }
    default: {
      std::string text = "exceptional m (no twin-sum representation):\n";
      for (uint64_t m : exceptions)
        text += "  m = " + std::to_string(m) + "  (" + std::to_string(6 * m - 2) +
                ", " + std::to_string(6 * m) + ", " + std::to_string(6 * m + 2) + ")\n";
      text += std::to_string(exceptions.size()) + " exceptions up to m = " +
              std::to_string(m_max) + "\n";
      emit(opt, text);
      return;
    }
  }
}

void run_density(const Options& opt, uint64_t n) {
  uint64_t idx_limit = std::max<uint64_t>((n + 1) / 6 + 1, n / 6);
  SieveSet s = obtain_sieve(opt, idx_limit);
  struct Row {
    std::string set;
    std::string kind;
    double value;
  };
  std::vector<Row> rows;
  auto add_mask = [&](const char* name, const IndexedMask& mask) {
    rows.push_back({name, "asymptotic", prefix_density(mask, n, DensityKind::Asymptotic)});
    rows.push_back({name, "schnirelmann", prefix_density(mask, n, DensityKind::Schnirelmann)});
  };
  add_mask("L", s.l);
  add_mask("R", s.r);
  add_mask("T", s.t);
  uint64_t k = n / 6;
  if (k >= 1) {
    auto add_sumset = [&](const char* name, const IndexedMask& a, const IndexedMask& b) {
      rows.push_back({name, "asymptotic", sumset_density(a, b, k, DensityKind::Asymptotic)});
      rows.push_back({name, "schnirelmann", sumset_density(a, b, k, DensityKind::Schnirelmann)});
    };
    add_sumset("L+L", s.l, s.l);
    add_sumset("L+R", s.l, s.r);
    add_sumset("R+R", s.r, s.r);
  }
  char buf[128];
  switch (opt.fmt()) {
    case Format::Csv: {
      std::string text = "set,kind,n,value\n";
      for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%llu,%.6f\n", row.set.c_str(),
                      row.kind.c_str(), (unsigned long long)n, row.value);
        text += buf;
      }
      emit(opt, text);
      return;
    }
    case Format::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows)
        arr.push_back({{"set", row.set}, {"kind", row.kind}, {"n", n}, {"value", row.value}});
      emit(opt, arr.dump(2));
      return;
    }
    default: {
      std::string text;
      for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%-4s %-13s %.6f\n", row.set.c_str(),
                      row.kind.c_str(), row.value);
        text += buf;
      }
      emit(opt, text);
      return;
    }
  }
}

void run_sieve(const Options& opt, uint64_t m, const std::string& kind) {
  std::string dir = !opt.mask_cache.empty() ? opt.mask_cache : opt.out;
  if (dir.empty())
    throw CLI::ValidationError("sieve", "needs --mask-cache (or --out) directory");
  fs::create_directories(dir);
  SieveSet s = SieveSet::build(m, opt.threads);
  std::string written;
  auto save = [&](const IndexedMask& mask, const char* name) {
    fs::path p = fs::path(dir) / name;
    save_mask(mask, p);
    written += p.string() + "\n";
  };
  if (kind == "l" || kind == "all") save(s.l, "l.w6sv");
  if (kind == "r" || kind == "all") save(s.r, "r.w6sv");
  if (kind == "t" || kind == "all") save(s.t, "t.w6sv");
  std::cout << written;
}

int run_verify(const std::string& self_path) {
  VerifyOptions vo;
  vo.cli_path = self_path;
  std::vector<CriterionResult> results = run_acceptance(vo);
  for (const auto& r : results)
    std::printf("%s  %2d  %s  [%s]  (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
  bool ok = all_passed(results);
  std::printf("%s: %zu/%zu criteria passed\n", ok ? "OK" : "FAILED",
              static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                [](const auto& r) { return r.passed; })),
              results.size());
  return ok ? 0 : 1;
}

// Evaluation points for `estimate` ranges: `steps` values ending at n_max,
// each rounded down to a multiple of 6.
std::vector<uint64_t> range_points(uint64_t n_max, unsigned steps) {
  std::vector<uint64_t> out;
  for (unsigned j = 1; j <= steps; ++j) {
    uint64_t n = round_down_6(n_max * j / steps);
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mod-6 wheel sieve: prime pair counts, estimates and bounds"};
  app.require_subcommand(1);
  Options opt;

  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", opt.out, "write output to a file");
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--mask-cache", opt.mask_cache, "directory with persisted W6SV masks");
  app.add_option("--mode", opt.mode, "tail evaluation mode for mu and HL tails")
      ->check(CLI::IsMember({"sum", "integral"}));
  app.add_flag("--raw", opt.raw, "report raw construction counts");
  app.add_flag("--corrected", opt.corrected, "report corrected counts (default)");

  uint64_t g = 0, n = 0, m = 0, m_max = 0, shift = 1;
  unsigned steps = 1;
  std::string sieve_kind = "all";

  auto* count = app.add_subcommand("count", "count a prime configuration");
  count->fallthrough();
  count->require_subcommand(1);
  auto* count_gap = count->add_subcommand("gap", "pairs p, p+g with p <= n");
  count_gap->fallthrough();
  count_gap->add_option("--g", g, "even gap")->required();
  count_gap->add_option("--n", n, "upper limit, multiple of 6")->required();
  auto* count_sum = count->add_subcommand("sum", "representations g = p + q");
  count_sum->fallthrough();
  count_sum->add_option("--g", g, "even sum >= 10")->required();
  auto* count_twins = count->add_subcommand("twins", "twin pairs up to n");
  count_twins->fallthrough();
  count_twins->add_option("--n", n, "upper limit")->required();
  auto* count_quad = count->add_subcommand("quad", "double twin configurations");
  count_quad->fallthrough();
  count_quad->add_option("--shift", shift, "center distance m'")->default_val(1);
  count_quad->add_option("--n", n, "upper limit, multiple of 6");
  count_quad->add_option("--m", m, "index limit (alternative to --n)");
  auto* count_twin_sum = count->add_subcommand("twin-sum", "twin-sum representations of the m-th even triple");
  count_twin_sum->fallthrough();
  count_twin_sum->add_option("--m", m, "triple index")->required();

  auto* scan = app.add_subcommand("scan", "range scans");
  scan->fallthrough();
  scan->require_subcommand(1);
  auto* scan_exc = scan->add_subcommand("exceptions", "m with no twin-sum representation");
  scan_exc->fallthrough();
  scan_exc->add_option("--m-max", m_max, "scan limit")->required();

  auto* est = app.add_subcommand("estimate", "empirical counts vs estimates over a range");
  est->fallthrough();
  est->require_subcommand(1);
  struct EstCmd {
    CLI::App* sub;
    std::string task;
  };
  std::vector<EstCmd> est_cmds;
  for (const char* task : {"twins-classes", "twins-hl", "gap-hl", "sum-hl",
                           "quad-classes", "quad-twins", "twin-sum"}) {
    auto* sub = est->add_subcommand(task);
    sub->fallthrough();
    sub->add_option("--steps", steps, "number of evaluation points")->default_val(1);
    est_cmds.push_back({sub, task});
  }
  est_cmds[0].sub->add_option("--n", n)->required();
  est_cmds[1].sub->add_option("--n", n)->required();
  est_cmds[2].sub->add_option("--g", g)->required();
  est_cmds[2].sub->add_option("--n", n)->required();
  est_cmds[3].sub->add_option("--g", g)->required();
  est_cmds[4].sub->add_option("--n", n)->required();
  est_cmds[5].sub->add_option("--n", n)->required();
  est_cmds[6].sub->add_option("--m", m)->required();

  auto* density = app.add_subcommand("density", "finite-prefix densities");
  density->fallthrough();
  density->add_option("--n", n, "prefix length")->required();

  auto* sieve_cmd = app.add_subcommand("sieve", "build and persist survivor masks");
  sieve_cmd->fallthrough();
  sieve_cmd->add_option("--m", m, "index window length")->required();
  sieve_cmd->add_option("--kind", sieve_kind, "which mask to write")
      ->check(CLI::IsMember({"l", "r", "t", "all"}));

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (opt.raw && opt.corrected)
      throw CLI::ValidationError("flags", "--raw and --corrected are exclusive");

    if (count_gap->parsed()) {
      if (n % 6 != 0) throw CLI::ValidationError("--n", "must be a multiple of 6");
      EvenClass ec = EvenClass::of(g);
      SieveSet s = obtain_sieve(opt, n / 6 + ec.m);
      emit_reports(opt, {gap_report(opt, s, g, n)});
    } else if (count_sum->parsed()) {
      EvenClass ec = EvenClass::of(g);
      SieveSet s = obtain_sieve(opt, ec.m);
      PrimeTable pt(6 * ec.m);
      emit_reports(opt, {sum_report(opt, pt, s, g)});
    } else if (count_twins->parsed()) {
      uint64_t mm = twin_index_limit(n);
      SieveSet s = obtain_sieve(opt, mm);
      PrimeTable pt(6 * mm);
      emit_reports(opt, {twin_report(opt, pt, s, n)});
    } else if (count_quad->parsed()) {
      if (m == 0) {
        if (n == 0 || n % 6 != 0)
          throw CLI::ValidationError("--n", "must be a positive multiple of 6");
        m = n / 6;
      }
      SieveSet s = obtain_sieve(opt, m + shift);
      PrimeTable pt(6 * m);
      emit_reports(opt, {quad_report(opt, pt, s, shift, m)});
    } else if (count_twin_sum->parsed()) {
      SieveSet s = obtain_sieve(opt, m);
      PrimeTable pt(6 * m);
      emit_reports(opt, {twin_sum_report(opt, pt, s, m)});
    } else if (scan_exc->parsed()) {
      run_scan(opt, m_max);
    } else if (est->parsed()) {
      std::string task;
      for (const auto& ec : est_cmds)
        if (ec.sub->parsed()) task = ec.task;
      std::vector<CountReport> rows;
      if (task == "sum-hl") {
        SieveSet s = obtain_sieve(opt, EvenClass::of(g).m);
        PrimeTable pt(6 * EvenClass::of(g).m);
        for (uint64_t gj : range_points(g, steps)) {
          if (gj < 10) continue;
          rows.push_back(sum_report(opt, pt, s, gj));
        }
      } else if (task == "twin-sum") {
        SieveSet s = obtain_sieve(opt, m);
        PrimeTable pt(6 * m);
        for (uint64_t mj : range_points(6 * m, steps))
          rows.push_back(twin_sum_report(opt, pt, s, mj / 6));
      } else if (task == "gap-hl") {
        EvenClass ec = EvenClass::of(g);
        SieveSet s = obtain_sieve(opt, n / 6 + ec.m);
        for (uint64_t nj : range_points(round_down_6(n), steps))
          rows.push_back(gap_report(opt, s, g, nj));
      } else {
        uint64_t mm = twin_index_limit(n);
        SieveSet s = obtain_sieve(opt, mm + 1);
        PrimeTable pt(6 * mm);
        for (uint64_t nj : range_points(round_down_6(n), steps)) {
          uint64_t mj = nj / 6;
          auto [pa, pb] = prime_class_counts(s, mj);
          CountReport r;
          r.n_or_m = nj;
          if (task == "twins-classes") {
            r.task = CountTask::Twin;
            r.empirical = static_cast<double>(pi_twin(s, nj));
            r.estimate = estimate_twin_via_classes(pt, mj, pa, pb);
            r.lower_bound = bound_H(pt, opt.params(), mj);
          } else if (task == "twins-hl") {
            r.task = CountTask::Twin;
            r.empirical = static_cast<double>(pi_twin(s, nj));
            r.estimate = estimate_twin_hl(opt.params(), nj, pa + pb + 2);
            r.lower_bound = bound_H(pt, opt.params(), mj);
          } else if (task == "quad-classes") {
            r.task = CountTask::Quad;
            r.g_or_shift = 1;
            r.empirical = static_cast<double>(pi_quad(s, 1, mj));
            r.estimate = estimate_quad_via_classes(pt, mj, pa, pb);
            r.lower_bound = bound_Q(pt, opt.params(), mj);
          } else {  // quad-twins
            r.task = CountTask::Quad;
            r.g_or_shift = 1;
            r.empirical = static_cast<double>(pi_quad(s, 1, mj));
            r.estimate = estimate_quad_via_twins(pt, mj, pi_twin(s, nj));
            r.lower_bound = bound_Q(pt, opt.params(), mj);
          }
          r.deviation = r.empirical - r.estimate;
          rows.push_back(r);
        }
      }
      emit_reports(opt, rows);
    } else if (density->parsed()) {
      run_density(opt, n);
    } else if (sieve_cmd->parsed()) {
      run_sieve(opt, m, sieve_kind);
    } else if (verify->parsed()) {
      return run_verify(fs::absolute(argv[0]).string());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
