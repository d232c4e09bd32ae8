#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wheel6/counting.hpp"
#include "wheel6/estimators.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/sieve.hpp"
#include "wheel6/wheel.hpp"

namespace py = pybind11;
using namespace wheel6;

namespace {

WheelKind parse_kind(const std::string& kind) {
  if (kind == "A" || kind == "a") return WheelKind::A;
  if (kind == "B" || kind == "b") return WheelKind::B;
  throw std::invalid_argument("kind must be 'A' or 'B'");
}

EstimatorParams::TailMode parse_mode(const std::string& mode) {
  if (mode == "sum") return EstimatorParams::TailMode::DiscreteSum;
  if (mode == "integral") return EstimatorParams::TailMode::Integral;
  throw std::invalid_argument("mode must be 'sum' or 'integral'");
}

const IndexedMask& mask_of(const SieveSet& s, const std::string& kind) {
  if (kind == "L" || kind == "l") return s.l;
  if (kind == "R" || kind == "r") return s.r;
  if (kind == "T" || kind == "t") return s.t;
  throw std::invalid_argument("kind must be 'L', 'R' or 'T'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "mod-6 wheel sieve: survivor masks, pair counts and estimates";

  m.def("value", [](const std::string& kind, uint64_t i) { return value(parse_kind(kind), i); },
        py::arg("kind"), py::arg("i"));
  m.def("classify", [](uint64_t n) -> py::object {
    auto c = classify(n);
    if (!c) return py::none();
    return py::make_tuple(c->first == WheelKind::A ? "A" : "B", c->second);
  }, py::arg("n"));
  m.def("is_prime", &oracle::is_prime, py::arg("n"));

  py::class_<SieveSet>(m, "Sieve")
      .def(py::init([](uint64_t limit, unsigned threads) {
             return SieveSet::build(limit, threads);
           }),
           py::arg("limit"), py::arg("threads") = 1)
      .def_property_readonly("limit", &SieveSet::limit)
      .def("survives",
           [](const SieveSet& s, const std::string& kind, uint64_t i) {
             return mask_of(s, kind).test(i);
           },
           py::arg("kind"), py::arg("i"))
      .def("prime_class_counts",
           [](const SieveSet& s, uint64_t m) { return prime_class_counts(s, m); },
           py::arg("m"))
      .def("pi_twin", [](const SieveSet& s, uint64_t n) { return pi_twin(s, n); },
           py::arg("n"))
      .def("pi_gap",
           [](const SieveSet& s, uint64_t g, uint64_t n) {
             GapCount c = pi_gap(s, g, n);
             return py::make_tuple(c.construction, c.corrected);
           },
           py::arg("g"), py::arg("n"))
      .def("pi_sum",
           [](const SieveSet& s, uint64_t g) {
             SumCount c = pi_sum(s, g);
             return py::make_tuple(c.construction.value(), c.corrected.value());
           },
           py::arg("g"))
      .def("pi_quad",
           [](const SieveSet& s, uint64_t shift, uint64_t m) {
             return pi_quad(s, shift, m);
           },
           py::arg("shift"), py::arg("m"))
      .def("twin_sum_reps",
           [](const SieveSet& s, uint64_t m) { return twin_sum_reps(s, m); },
           py::arg("m"))
      .def("scan_exceptions",
           [](const SieveSet& s, uint64_t m_max) { return scan_exceptions(s, m_max); },
           py::arg("m_max"));

  m.def("mertens_product",
        [](unsigned k, uint64_t x) {
          PrimeTable pt(x);
          return mertens_product(pt, k, x);
        },
        py::arg("k"), py::arg("x"));
  m.def("constant_c12", [](uint64_t cutoff) {
    return PrimeTable(cutoff).constant(PrimeTable::Constant::C12, cutoff);
  }, py::arg("cutoff"));
  m.def("constant_c14", [](uint64_t cutoff) {
    return PrimeTable(cutoff).constant(PrimeTable::Constant::C14, cutoff);
  }, py::arg("cutoff"));
  m.def("constant_c24", [](uint64_t cutoff) {
    return PrimeTable(cutoff).constant(PrimeTable::Constant::C24, cutoff);
  }, py::arg("cutoff"));
  m.def("bound_h", [](uint64_t m) {
    return bound_H(PrimeTable(6 * m), EstimatorParams{}, m);
  }, py::arg("m"));
  m.def("bound_q", [](uint64_t m) {
    return bound_Q(PrimeTable(6 * m), EstimatorParams{}, m);
  }, py::arg("m"));
  m.def("bound_qprime", [](uint64_t m) {
    return bound_Qprime(PrimeTable(6 * m), EstimatorParams{}, m);
  }, py::arg("m"));
  m.def("eta2",
        [](uint64_t g, const std::string& mode) {
          return eta2(g, mode == "sum" ? Eta2Mode::Sum : Eta2Mode::Gap);
        },
        py::arg("g"), py::arg("mode") = "gap");
  m.def("eta4", &eta4, py::arg("shift"));
  m.def("mu2", [](uint64_t n, const std::string& mode) { return mu2(n, parse_mode(mode)); },
        py::arg("n"), py::arg("mode") = "sum");
  m.def("mu4", [](uint64_t n, const std::string& mode) { return mu4(n, parse_mode(mode)); },
        py::arg("n"), py::arg("mode") = "sum");
  m.def("divergence_sequence", [](const std::vector<uint64_t>& ms) {
    if (ms.empty()) return std::vector<double>{};
    PrimeTable pt(6 * ms.back());
    return divergence_sequence(pt, ms);
  }, py::arg("ms"));
  m.def("primes_in_wheel", &primes_in_wheel, py::arg("limit"));
}
