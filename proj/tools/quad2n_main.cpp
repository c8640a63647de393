// quad2n: command-line front end. Exit codes: 0 solvable, 3 no solutions,
// 2 usage or parse errors; nothing else.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quad2n/oracle.hpp"
#include "quad2n/solver.hpp"

namespace {

using quad2n::CaseTag;
using quad2n::CosetSolutionSet;
using quad2n::Nat;
using quad2n::QuadraticInstance;
using quad2n::Residue;
using quad2n::width_t;

constexpr int kExitSolvable = 0;
constexpr int kExitNoSolutions = 3;
constexpr int kExitUsage = 2;

Nat parse_numeral(const std::string& text, const char* flag) {
  auto v = Nat::parse(text);
  if (!v.has_value()) {
    throw std::invalid_argument(std::string(flag) +
                                ": malformed numeral '" + text + "'");
  }
  return *v;
}

// Small widths print comfortably in decimal; big ones stay hex.
std::string show(const Nat& v, width_t n) {
  return n < 64 ? v.to_dec() : v.to_hex();
}

std::string case_label(const CaseTag& tag) {
  std::string out{quad2n::case_name(tag.kind)};
  if (tag.kind == quad2n::CaseKind::all_even) {
    out += " t=" + std::to_string(tag.min_val2);
  }
  return out;
}

struct Listing {
  std::vector<Nat> items;
  bool truncated = false;
};

Listing list_solutions(const CosetSolutionSet& sol, std::uint64_t limit) {
  Listing out;
  out.items = sol.enumerate(limit);
  out.truncated = Nat(out.items.size()) < sol.count();
  return out;
}

struct OutputOptions {
  std::uint64_t limit = 64;
  bool count_only = false;
  std::string format = "text";
  bool verify = false;
};

void print_set(const CosetSolutionSet& sol, const OutputOptions& opt,
               const nlohmann::json& echo, const char* tag_line) {
  const width_t n = sol.width();
  Listing listing;
  if (!opt.count_only) listing = list_solutions(sol, opt.limit);

  if (opt.format == "json") {
    nlohmann::json rec = echo;
    rec["n"] = n;
    if (tag_line != nullptr) rec["case"] = tag_line;
    rec["count"] = sol.count().to_dec();
    const auto log2 = sol.count_log2();
    rec["count_log2"] =
        log2.has_value() ? nlohmann::json(*log2) : nlohmann::json(nullptr);
    rec["base_width"] = sol.base_width();
    nlohmann::json bases = nlohmann::json::array();
    for (const Nat& b : sol.bases()) bases.push_back(b.to_hex());
    rec["bases"] = std::move(bases);
    if (!opt.count_only) {
      nlohmann::json xs = nlohmann::json::array();
      for (const Nat& x : listing.items) xs.push_back(x.to_hex());
      rec["solutions"] = std::move(xs);
      rec["truncated"] = listing.truncated;
    }
    std::cout << rec.dump(2) << "\n";
    return;
  }

  if (tag_line != nullptr) std::cout << "case: " << tag_line << "\n";
  std::cout << "count: " << sol.count().to_dec();
  if (const auto log2 = sol.count_log2(); log2.has_value() && *log2 > 0) {
    std::cout << " = 2^" << *log2;
  }
  std::cout << "\n";
  if (sol.empty()) {
    std::cout << "no solutions\n";
    return;
  }
  std::cout << "base_width: " << sol.base_width() << "\n";
  std::cout << "bases:";
  for (const Nat& b : sol.bases()) std::cout << ' ' << show(b, n);
  std::cout << "\n";
  if (!opt.count_only) {
    std::cout << (listing.truncated ? "solutions (first " +
                                          std::to_string(listing.items.size()) +
                                          "):"
                                    : "solutions:");
    for (const Nat& x : listing.items) std::cout << ' ' << show(x, n);
    std::cout << "\n";
  }
}

int run_solve(const std::string& a_s, const std::string& b_s,
              const std::string& c_s, width_t n, const OutputOptions& opt) {
  const Nat av = parse_numeral(a_s, "--a");
  const Nat bv = parse_numeral(b_s, "--b");
  const Nat cv = parse_numeral(c_s, "--c");
  const QuadraticInstance inst{Residue::from_nat(n, av),
                               Residue::from_nat(n, bv),
                               Residue::from_nat(n, cv)};
  const CaseTag tag = quad2n::classify(inst);
  const CosetSolutionSet sol = quad2n::solve(inst);
  if (opt.verify) {
    for (const Nat& x : sol.enumerate(opt.count_only ? 0 : opt.limit)) {
      if (!quad2n::substitute(inst, Residue::from_nat(n, x)).is_zero()) {
        throw std::runtime_error("self-check failed at x = " + x.to_hex());
      }
    }
  }
  nlohmann::json echo;
  echo["a"] = av.mod_pow2(n).to_hex();
  echo["b"] = bv.mod_pow2(n).to_hex();
  echo["c"] = cv.mod_pow2(n).to_hex();
  print_set(sol, opt, echo, case_label(tag).c_str());
  return sol.empty() ? kExitNoSolutions : kExitSolvable;
}

int run_sqrt(const std::string& a_s, width_t n, const OutputOptions& opt) {
  const Nat av = parse_numeral(a_s, "--a");
  const Residue a = Residue::from_nat(n, av);
  const CosetSolutionSet sol = quad2n::sqrt_pow2(a);
  if (opt.verify) {
    for (const Nat& x : sol.enumerate(opt.count_only ? 0 : opt.limit)) {
      const Residue r = Residue::from_nat(n, x);
      if (!(r * r == a)) {
        throw std::runtime_error("self-check failed at x = " + x.to_hex());
      }
    }
  }
  nlohmann::json echo;
  echo["a"] = av.mod_pow2(n).to_hex();
  print_set(sol, opt, echo, nullptr);
  return sol.empty() ? kExitNoSolutions : kExitSolvable;
}

int run_classify(const std::string& a_s, const std::string& b_s,
                 const std::string& c_s, width_t n) {
  const QuadraticInstance inst{
      Residue::from_nat(n, parse_numeral(a_s, "--a")),
      Residue::from_nat(n, parse_numeral(b_s, "--b")),
      Residue::from_nat(n, parse_numeral(c_s, "--c"))};
  std::cout << case_label(quad2n::classify(inst)) << "\n";
  return kExitSolvable;
}

int run_count(const std::string& a_s, const std::string& b_s,
              const std::string& c_s, width_t n) {
  const QuadraticInstance inst{
      Residue::from_nat(n, parse_numeral(a_s, "--a")),
      Residue::from_nat(n, parse_numeral(b_s, "--b")),
      Residue::from_nat(n, parse_numeral(c_s, "--c"))};
  const CosetSolutionSet sol = quad2n::solve(inst);
  std::cout << sol.count().to_dec() << "\n";
  return sol.empty() ? kExitNoSolutions : kExitSolvable;
}

// Deterministic instance for the given seed: a even, b odd, c free.
QuadraticInstance bench_instance(width_t n, std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t{n}};
  std::mt19937_64 rng(seq);
  const std::size_t limbs = quad2n::detail::limb_count(n);
  auto draw = [&] {
    std::vector<std::uint64_t> v(limbs);
    for (auto& l : v) l = rng();
    return v;
  };
  auto a = draw();
  a[0] &= ~std::uint64_t{1};
  auto b = draw();
  b[0] |= 1;
  return {Residue::from_limbs(n, std::move(a)),
          Residue::from_limbs(n, std::move(b)),
          Residue::from_limbs(n, draw())};
}

int run_bench(const std::vector<width_t>& widths, std::uint64_t seed) {
  for (width_t n : widths) {
    const QuadraticInstance inst = bench_instance(n, seed);
    quad2n::BitSolveStats stats;
    quad2n::solve_bitwise_unique(inst, &stats);  // warm-up
    const auto start = std::chrono::steady_clock::now();
    const Residue x = quad2n::solve_bitwise_unique(inst, &stats);
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (stats.iterations != n) {
      std::cerr << "error: expected " << n << " iterations, saw "
                << stats.iterations << "\n";
      return kExitUsage;
    }
    if (!quad2n::substitute(inst, x).is_zero()) {
      std::cerr << "error: bench root failed to verify at n=" << n << "\n";
      return kExitUsage;
    }
    std::cout << "n=" << n << " iterations=" << stats.iterations
              << " ms=" << ms << "\n";
  }
  return kExitSolvable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for a*x^2 + b*x + c = 0 (mod 2^n)"};
  app.require_subcommand(1);

  std::string a_s, b_s, c_s;
  width_t n = 0;
  OutputOptions opt;

  const auto width_range =
      CLI::Range(width_t{1}, std::numeric_limits<width_t>::max());
  auto add_width = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "bit width (modulus is 2^n)")
        ->required()
        ->check(width_range);
  };
  auto add_abc = [&](CLI::App* cmd) {
    cmd->add_option("--a", a_s, "quadratic coefficient")->required();
    cmd->add_option("--b", b_s, "linear coefficient")->required();
    cmd->add_option("--c", c_s, "constant coefficient")->required();
    add_width(cmd);
  };
  auto add_output = [&opt](CLI::App* cmd) {
    cmd->add_option("--limit", opt.limit,
                    "max enumerated solutions (default 64)");
    cmd->add_flag("--count-only", opt.count_only,
                  "report the count, skip enumeration");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--verify", opt.verify,
                  "re-substitute every emitted solution");
  };

  auto* solve_cmd =
      app.add_subcommand("solve", "full solution set of the congruence");
  add_abc(solve_cmd);
  add_output(solve_cmd);

  auto* sqrt_cmd =
      app.add_subcommand("sqrt", "all square roots of a modulo 2^n");
  sqrt_cmd->add_option("--a", a_s, "value to take square roots of")
      ->required();
  add_width(sqrt_cmd);
  add_output(sqrt_cmd);

  auto* classify_cmd =
      app.add_subcommand("classify", "print the parity case tag");
  add_abc(classify_cmd);

  auto* count_cmd =
      app.add_subcommand("count", "print the exact solution count");
  add_abc(count_cmd);

  auto* bench_cmd = app.add_subcommand(
      "bench", "time the linear-pass solver on random instances");
  std::vector<width_t> bench_widths;
  std::uint64_t bench_seed = 0x2b992ddfa23249d6ULL;
  bench_cmd->add_option("--n", bench_widths, "bit width (repeatable)")
      ->required()
      ->check(width_range);
  bench_cmd->add_option("--seed", bench_seed, "instance generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(a_s, b_s, c_s, n, opt);
    if (sqrt_cmd->parsed()) return run_sqrt(a_s, n, opt);
    if (classify_cmd->parsed()) return run_classify(a_s, b_s, c_s, n);
    if (count_cmd->parsed()) return run_count(a_s, b_s, c_s, n);
    if (bench_cmd->parsed()) return run_bench(bench_widths, bench_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
