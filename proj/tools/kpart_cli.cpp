// kpart: generate instances, build and verify k-planar / k-quasi-planar
// partitions, print bound tables, and render SVG figures.
//
// Exit status: 0 success or verified, 1 verification failed, 2 usage, parse or
// invalid input, 3 search budget exceeded or internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpart/kpart.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct CliError {
  int code;
  std::string message;
};

struct PointsDeleter {
  void operator()(kp_pointset* p) const { kp_pointset_free(p); }
};
struct ColoringDeleter {
  void operator()(kp_coloring* c) const { kp_coloring_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { kp_string_free(s); }
};
using PointsPtr = std::unique_ptr<kp_pointset, PointsDeleter>;
using ColoringPtr = std::unique_ptr<kp_coloring, ColoringDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(kp_status status) {
  if (status == KP_OK) return;
  const int code = status == KP_ERR_BUDGET_EXCEEDED || status == KP_ERR_INTERNAL ? kExitRuntime : kExitUsage;
  throw CliError{code, std::string(kp_status_name(status)) + ": " + kp_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to --out when given, otherwise to stdout. Returns true if a file was written.
bool emit(const std::string& out, const char* text) {
  if (out.empty()) {
    std::fputs(text, stdout);
    return false;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw CliError{kExitUsage, "cannot write " + out};
  file << text;
  return true;
}

PointsPtr load_points(const std::string& path) {
  kp_pointset* raw = nullptr;
  check(kp_pointset_parse(read_file(path).c_str(), &raw));
  return PointsPtr(raw);
}

ColoringPtr load_coloring(const std::string& path) {
  kp_coloring* raw = nullptr;
  check(kp_coloring_parse(read_file(path).c_str(), &raw));
  return ColoringPtr(raw);
}

std::string edge_list(const std::vector<int>& uv, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ',';
    out += std::to_string(uv[2 * i]) + "-" + std::to_string(uv[2 * i + 1]);
  }
  return out;
}

struct Options {
  std::string mode;
  std::size_t n = 0;
  std::size_t s = 3;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  std::string in;
  std::string points;
  std::string out;
};

int run_gen(const Options& o) {
  kp_pointset* raw = nullptr;
  if (o.mode == "convex") {
    check(kp_pointset_gen_convex(o.n, o.seed, &raw));
  } else if (o.mode == "random") {
    check(kp_pointset_gen_random(o.n, o.seed, &raw));
  } else {
    check(kp_pointset_gen_crossing_family(o.n, o.seed, &raw));
  }
  PointsPtr points(raw);
  char* text = nullptr;
  check(kp_pointset_write(points.get(), &text));
  StringPtr owned(text);
  if (emit(o.out, text)) {
    std::printf("OK gen %s n=%zu seed=%llu points=%zu family=%zu\n", o.mode.c_str(), o.n,
                static_cast<unsigned long long>(o.seed), kp_pointset_size(points.get()),
                kp_pointset_family_size(points.get()));
  }
  return kExitOk;
}

int run_partition(const Options& o) {
  kp_coloring* raw = nullptr;
  std::string detail;
  if (o.mode == "slope") {
    std::size_t n = o.n;
    if (!o.in.empty()) {
      auto points = load_points(o.in);
      kp_pointset_report report{};
      check(kp_pointset_validate(points.get(), &report, nullptr));
      if (!report.convex_position) throw CliError{kExitUsage, "invalid input: slope partition needs a convex instance"};
      n = kp_pointset_size(points.get());
      // The convex machinery works on cyclic positions; require them to match indices.
      std::vector<int> order(n);
      check(kp_pointset_validate(points.get(), &report, order.data()));
      for (std::size_t i = 0; i < n; ++i) {
        if (order[i] != static_cast<int>(i)) {
          throw CliError{kExitUsage, "invalid input: convex instance is not in cyclic index order"};
        }
      }
    }
    if (n == 0) throw CliError{kExitUsage, "usage: partition slope needs --n or --in"};
    check(kp_partition_slope(n, o.s, &raw));
    detail = "s=" + std::to_string(o.s);
  } else {
    if (o.in.empty()) throw CliError{kExitUsage, "usage: partition " + o.mode + " needs --in"};
    auto points = load_points(o.in);
    if (o.mode == "doublestar") {
      check(kp_partition_double_star(points.get(), &raw));
    } else if (o.mode == "halving") {
      check(kp_partition_halving(points.get(), o.k, &raw));
      detail = "k=" + std::to_string(o.k);
    } else {
      kp_theorem7_report report{};
      check(kp_partition_theorem7(points.get(), o.k, o.budget, &raw, &report));
      detail = "k=" + std::to_string(o.k) + " m=" + std::to_string(report.m) +
               (report.single_color ? " single_color=1" : "");
    }
  }
  ColoringPtr coloring(raw);
  char* text = nullptr;
  check(kp_coloring_write(coloring.get(), &text));
  StringPtr owned(text);
  if (emit(o.out, text)) {
    std::printf("OK partition %s n=%zu colors=%d %s\n", o.mode.c_str(), kp_coloring_n(coloring.get()),
                kp_coloring_num_colors(coloring.get()), detail.c_str());
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  if (o.in.empty()) throw CliError{kExitUsage, "usage: verify needs --in <coloring>"};
  auto coloring = load_coloring(o.in);
  PointsPtr points;
  if (!o.points.empty()) points = load_points(o.points);
  const std::size_t n = kp_coloring_n(coloring.get());
  const int colors = kp_coloring_num_colors(coloring.get());

  int total = 0;
  check(kp_verify_partition(points.get(), coloring.get(), &total));
  if (!total) {
    std::printf("FAIL verify %s n=%zu reason=not_a_partition\n", o.mode.c_str(), n);
    return kExitFailed;
  }
  if (o.mode == "partition") {
    std::printf("OK verify partition n=%zu colors=%d\n", n, colors);
    return kExitOk;
  }
  if (o.mode == "kplanar") {
    kp_kplanar_result r{};
    check(kp_verify_k_planar(points.get(), coloring.get(), o.k, &r));
    if (!r.ok) {
      std::printf("FAIL verify kplanar n=%zu k=%zu class=%d witness=%d-%d crossings=%zu\n", n, o.k,
                  r.color, r.u, r.v, r.crossings);
      return kExitFailed;
    }
    std::printf("OK verify kplanar n=%zu k=%zu colors=%d max_crossings=%zu\n", n, o.k, colors,
                r.max_crossings);
    return kExitOk;
  }
  if (o.mode == "quasiplanar") {
    int ok = 0;
    int bad = -1;
    std::vector<int> witness(2 * (o.k + 1));
    std::size_t size = 0;
    check(kp_verify_k_quasi_planar(points.get(), coloring.get(), o.k, o.budget, &ok, &bad,
                                   witness.data(), o.k + 1, &size));
    if (!ok) {
      std::printf("FAIL verify quasiplanar n=%zu k=%zu class=%d witness=%s\n", n, o.k, bad,
                  edge_list(witness, size).c_str());
      return kExitFailed;
    }
    std::printf("OK verify quasiplanar n=%zu k=%zu colors=%d\n", n, o.k, colors);
    return kExitOk;
  }
  int ok = 0;
  int bad = -1;
  check(kp_verify_spanning_trees(coloring.get(), &ok, &bad));
  if (!ok) {
    std::printf("FAIL verify spanning n=%zu class=%d\n", n, bad);
    return kExitFailed;
  }
  std::printf("OK verify spanning n=%zu trees=%d\n", n, colors);
  return kExitOk;
}

int run_bounds(const Options& o) {
  PointsPtr points;
  if (!o.in.empty()) points = load_points(o.in);
  const std::size_t n = o.n ? o.n : kp_pointset_size(points.get());
  if (n == 0) throw CliError{kExitUsage, "usage: bounds needs --n or --in"};
  char* text = nullptr;
  int all = 0;
  check(kp_bounds_report(n, o.k, points.get(), o.budget, &text, &all));
  StringPtr owned(text);
  std::fputs(text, stdout);
  return all ? kExitOk : kExitFailed;
}

int run_render(const Options& o) {
  if (o.in.empty()) throw CliError{kExitUsage, "usage: render needs --in <coloring>"};
  auto coloring = load_coloring(o.in);
  PointsPtr points;
  if (!o.points.empty()) points = load_points(o.points);
  char* svg = nullptr;
  check(kp_render_svg(points.get(), coloring.get(), nullptr, &svg));
  StringPtr owned(svg);
  if (emit(o.out, svg)) std::printf("OK render n=%zu out=%s\n", kp_coloring_n(coloring.get()), o.out.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-planar and k-quasi-planar partitions of complete geometric graphs", "kpart"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write an instance file");
  gen->add_option("mode", o.mode, "convex | random | crossing-family")
      ->required()
      ->check(CLI::IsMember({"convex", "random", "crossing-family"}));
  gen->add_option("--n", o.n, "Point count (family size for crossing-family)")->required();
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--out", o.out, "Output file (stdout if omitted)");

  auto* partition = app.add_subcommand("partition", "Write a coloring file");
  partition->add_option("mode", o.mode, "slope | doublestar | halving | theorem7")
      ->required()
      ->check(CLI::IsMember({"slope", "doublestar", "halving", "theorem7"}));
  partition->add_option("--s", o.s, "Slope block size (slope)");
  partition->add_option("--k", o.k, "Quasi-planarity parameter (halving, theorem7)");
  partition->add_option("--n", o.n, "Convex n-gon size (slope without --in)");
  partition->add_option("--in", o.in, "Instance file");
  partition->add_option("--budget", o.budget, "Clique search node budget");
  partition->add_option("--out", o.out, "Output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check a coloring file");
  verify->add_option("mode", o.mode, "kplanar | quasiplanar | spanning | partition")
      ->required()
      ->check(CLI::IsMember({"kplanar", "quasiplanar", "spanning", "partition"}));
  verify->add_option("--k", o.k, "k");
  verify->add_option("--in", o.in, "Coloring file")->required();
  verify->add_option("--points", o.points, "Instance file (convex n-gon if omitted)");
  verify->add_option("--budget", o.budget, "Clique search node budget");

  auto* bounds = app.add_subcommand("bounds", "Print the bound table");
  bounds->add_option("--n", o.n, "Convex n-gon size");
  bounds->add_option("--k", o.k, "k")->required();
  bounds->add_option("--in", o.in, "Instance file for the quasi-planar rows");
  bounds->add_option("--budget", o.budget, "Search node budget");

  auto* render = app.add_subcommand("render", "Render a coloring as SVG");
  render->add_option("--in", o.in, "Coloring file")->required();
  render->add_option("--points", o.points, "Instance file (circle layout if omitted)");
  render->add_option("--out", o.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(o);
    if (*partition) {
      if ((o.mode == "halving" || o.mode == "theorem7") && o.k == 0) {
        throw CliError{kExitUsage, "usage: partition " + o.mode + " needs --k"};
      }
      return run_partition(o);
    }
    if (*verify) {
      if ((o.mode == "kplanar" || o.mode == "quasiplanar") && verify->count("--k") == 0) {
        throw CliError{kExitUsage, "usage: verify " + o.mode + " needs --k"};
      }
      return run_verify(o);
    }
    if (*bounds) return run_bounds(o);
    return run_render(o);
  } catch (const CliError& e) {
    std::fprintf(stderr, "ERROR %s\n", e.message.c_str());
    return e.code;
  }
}
