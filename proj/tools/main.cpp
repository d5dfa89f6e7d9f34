#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zpscodes/commands.hpp"

namespace {

using zps::cli::CommandOutput;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zps::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const CommandOutput& result, const std::string& out_path) {
  std::cerr << result.err;
  if (out_path.empty()) {
    std::cout << result.out;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw zps::Error("cannot write " + out_path);
    out << result.out;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear codes over Z_{p^s}: Gray images, Lee-metric bounds, kernels and duals"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::int64_t s = 0;
  std::size_t n = 1;
  bool json = false;
  std::string file;
  std::string out_path;
  std::vector<std::int64_t> values;
  zps::AnalysisOptions options;

  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-enum", options.max_enum, "Largest code enumerated for distances")->capture_default_str();
    cmd->add_option("--max-kernel", options.max_kernel, "Largest code for quadratic analyses")->capture_default_str();
    cmd->add_option("--threads", options.threads, "Worker threads for distance enumeration")->capture_default_str();
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Matrix file: 'p s n k' then k rows")->required();
    cmd->add_flag("--json", json, "JSON output");
    cmd->add_option("--out", out_path, "Write output here instead of stdout");
  };
  auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "Prime p")->required();
    cmd->add_option("--s", s, "Exponent s >= 1")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Full report for a code");
  add_file(analyze);
  add_limits(analyze);

  auto* gray = app.add_subcommand("gray", "Gray images of ring elements");
  add_ring(gray);
  gray->add_option("values", values, "Elements (default: the whole ring)");
  gray->add_option("--out", out_path, "Write output here instead of stdout");

  auto* weight = app.add_subcommand("weight", "Lee, Hamming and complete weight of a vector");
  add_ring(weight);
  weight->add_option("values", values, "Vector entries")->required();
  weight->add_flag("--json", json, "JSON output");

  auto* dual = app.add_subcommand("dual", "Dual code, printed as a matrix file");
  add_file(dual);

  auto* kernel = app.add_subcommand("kernel", "Kernel of the Gray image");
  add_file(kernel);
  add_limits(kernel);

  zps::SearchSpec spec{.ring = zps::Ring::make(2, 1)};
  bool exhaustive = false;
  bool random = false;
  std::vector<std::string> targets;
  std::string type_text;
  std::uint64_t max_size = 0;
  auto* search = app.add_subcommand("search", "Search small codes for MLDS/MLDR/self-dual/image targets");
  add_ring(search);
  search->add_option("--n", n, "Code length")->capture_default_str();
  auto* ex_flag = search->add_flag("--exhaustive", exhaustive, "Enumerate all n x n generator matrices");
  search->add_flag("--random", random, "Draw random codes (default)")->excludes(ex_flag);
  search->add_option("--budget", spec.budget, "Number of candidates")->capture_default_str();
  search->add_option("--seed", spec.seed, "64-bit seed")->capture_default_str();
  search->add_option("--target", targets,
                     "mlds, mldr, self-dual, self-orthogonal-image, linear-image (repeatable; default all)");
  search->add_option("--type", type_text, "Type constraint delta_0,...,delta_{s-1}");
  search->add_option("--max-size", max_size, "Random mode: largest code size to draw");
  search->add_option("--out", out_path, "NDJSON results file (default stdout)");
  add_limits(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zps::cli::kExitUsage;
  }

  try {
    if (analyze->parsed()) return emit(zps::cli::cmd_analyze(read_file(file), options, json), out_path);
    if (dual->parsed()) return emit(zps::cli::cmd_dual(read_file(file), json), out_path);
    if (kernel->parsed()) return emit(zps::cli::cmd_kernel(read_file(file), options, json), out_path);
    const auto ring = zps::Ring::make(p, s);
    if (gray->parsed()) return emit(zps::cli::cmd_gray(ring, values), out_path);
    if (weight->parsed()) return emit(zps::cli::cmd_weight(ring, values, json), {});

    spec.ring = ring;
    spec.n = n;
    spec.mode = exhaustive ? zps::SearchMode::Exhaustive : zps::SearchMode::Random;
    spec.analysis = options;
    if (max_size > 0) spec.max_size = max_size;
    if (!type_text.empty()) spec.type_constraint = zps::cli::parse_type(type_text);
    for (const auto& t : targets) {
      const auto target = zps::parse_target(t);
      if (!target) throw zps::ParseError("unknown target '" + t + "'");
      spec.targets.insert(*target);
    }
    auto result = zps::cli::cmd_search(spec);
    if (out_path.empty()) return emit(result, {});
    std::cout << result.err;
    result.err.clear();
    return emit(result, out_path);
  } catch (const zps::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return zps::cli::kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zps::cli::kExitUsage;
  }
}
