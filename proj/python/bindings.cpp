#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zpscodes/commands.hpp"
#include "zpscodes/duality.hpp"
#include "zpscodes/gray.hpp"
#include "zpscodes/kernel.hpp"
#include "zpscodes/lee.hpp"

namespace py = pybind11;
using namespace zps;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

LinearCode make_code(std::uint64_t p, std::int64_t s, const Rows& rows, std::optional<std::size_t> n) {
  const auto ring = Ring::make(p, s);
  const std::size_t length = n ? *n : (rows.empty() ? 0 : rows.front().size());
  std::vector<RingVector> vs;
  for (const auto& r : rows) vs.emplace_back(ring, std::span<const std::int64_t>(r));
  return LinearCode::from_rows(ring, length, std::move(vs));
}

std::vector<std::vector<Value>> rows_out(const std::vector<RingVector>& rows) {
  std::vector<std::vector<Value>> out;
  for (const auto& r : rows) out.emplace_back(r.entries().begin(), r.entries().end());
  return out;
}

std::vector<GrayDigit> digits(const GrayVector& g) { return {g.entries().begin(), g.entries().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear codes over Z_{p^s}: Gray images, Lee-metric bounds, kernels and duals";

  auto& base = py::register_exception<Error>(m, "ZpsError", PyExc_ValueError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("lee_weight", [](std::uint64_t p, std::int64_t s, const std::vector<std::int64_t>& v) {
    return lee_weight(RingVector(Ring::make(p, s), std::span<const std::int64_t>(v)));
  }, py::arg("p"), py::arg("s"), py::arg("vector"));

  m.def("gray_scalar", [](std::uint64_t p, std::int64_t s, std::int64_t x) {
    return digits(gray_scalar(Residue(Ring::make(p, s), x)));
  }, py::arg("p"), py::arg("s"), py::arg("x"));

  m.def("gray_vec", [](std::uint64_t p, std::int64_t s, const std::vector<std::int64_t>& v) {
    return digits(gray_vec(RingVector(Ring::make(p, s), std::span<const std::int64_t>(v))));
  }, py::arg("p"), py::arg("s"), py::arg("vector"));

  m.def("gray_preimage", [](std::uint64_t p, std::int64_t s, const std::vector<GrayDigit>& g)
            -> std::optional<std::vector<Value>> {
    const auto pre = gray_preimage(Ring::make(p, s), GrayVector(p, g));
    if (!pre) return std::nullopt;
    return std::vector<Value>(pre->entries().begin(), pre->entries().end());
  }, py::arg("p"), py::arg("s"), py::arg("digits"));

  m.def("gray_table", [](std::uint64_t p, std::int64_t s, const std::vector<std::int64_t>& values) {
    return cli::gray_table(Ring::make(p, s), values);
  }, py::arg("p"), py::arg("s"), py::arg("values") = std::vector<std::int64_t>{});

  m.def("code_type", [](std::uint64_t p, std::int64_t s, const Rows& rows, std::optional<std::size_t> n) {
    return make_code(p, s, rows, n).type().deltas;
  }, py::arg("p"), py::arg("s"), py::arg("rows"), py::arg("n") = py::none());

  m.def("dual", [](std::uint64_t p, std::int64_t s, const Rows& rows, std::optional<std::size_t> n) {
    return rows_out(dual_code(make_code(p, s, rows, n)).standard_rows());
  }, py::arg("p"), py::arg("s"), py::arg("rows"), py::arg("n") = py::none(), "Standard-form rows of the dual code.");

  m.def("codewords", [](std::uint64_t p, std::int64_t s, const Rows& rows, std::optional<std::size_t> n,
                        std::uint64_t max_enum) {
    return rows_out(codeword_set(make_code(p, s, rows, n), max_enum));
  }, py::arg("p"), py::arg("s"), py::arg("rows"), py::arg("n") = py::none(), py::arg("max_enum") = kDefaultMaxEnum);

  m.def("kernel_dim", [](std::uint64_t p, std::int64_t s, const Rows& rows, std::optional<std::size_t> n,
                         std::uint64_t max_kernel) {
    return kernel_of_gray_image(make_code(p, s, rows, n), max_kernel).dim_m;
  }, py::arg("p"), py::arg("s"), py::arg("rows"), py::arg("n") = py::none(), py::arg("max_kernel") = kDefaultMaxKernel);

  m.def("kernel_dim_bounds", [](const std::vector<std::size_t>& deltas) { return kernel_dim_bounds(CodeType{deltas}); },
        py::arg("deltas"));

  m.def("_analyze_json", [](std::uint64_t p, std::int64_t s, const Rows& rows, std::optional<std::size_t> n,
                            std::uint64_t max_enum, std::uint64_t max_kernel, unsigned threads) {
    const AnalysisOptions options{max_enum, max_kernel, threads};
    return to_json(analyze(make_code(p, s, rows, n), options)).dump();
  });

  m.def("_search_ndjson", [](std::uint64_t p, std::int64_t s, std::size_t n, bool exhaustive, std::uint64_t budget,
                             std::uint64_t seed, const std::vector<std::string>& targets) {
    SearchSpec spec{.ring = Ring::make(p, s), .n = n};
    spec.mode = exhaustive ? SearchMode::Exhaustive : SearchMode::Random;
    spec.budget = budget;
    spec.seed = seed;
    for (const auto& t : targets) {
      const auto target = parse_target(t);
      if (!target) throw ParseError("unknown target '" + t + "'");
      spec.targets.insert(*target);
    }
    return to_ndjson(run_search(spec));
  });
}
