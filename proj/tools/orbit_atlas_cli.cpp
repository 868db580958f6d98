// orbit-atlas: enumeration dumps, count tables, orbit graphs and the
// verification suite.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/pil.hpp"
#include "orbit_atlas/serialize.hpp"
#include "orbit_atlas/series.hpp"
#include "orbit_atlas/verify.hpp"

namespace oa = orbit_atlas;

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 3;

std::uint64_t size_guard() {
  const char* env = std::getenv("ORBIT_ATLAS_GUARD");
  if (env == nullptr || *env == '\0') return oa::kDefaultSizeGuard;
  std::size_t used = 0;
  const unsigned long long v = std::stoull(env, &used);
  if (used != std::string(env).size()) throw std::invalid_argument("ORBIT_ATLAS_GUARD is not an integer");
  return v;
}

void check_guard(int n, int i) {
  const oa::BigInt predicted = oa::count_orbits(n, i);
  if (predicted > size_guard()) {
    throw std::length_error("predicted orbit count " + predicted.str() +
                            " exceeds the size guard; raise ORBIT_ATLAS_GUARD to proceed");
  }
}

std::string words(std::span<const int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string enumerate_output(int n, int i, const std::string& format) {
  check_guard(n, i);
  const auto decorated = oa::enumerate_decorated(n, i);
  if (format == "json") {
    oa::json rows = oa::json::array();
    for (const auto& d : decorated) {
      const oa::IStandardFlag f = oa::decorated_to_flag(d);
      const oa::SharePair p = oa::sharepair_of(d);
      rows.push_back({{"decorated", d},
                      {"flag", f},
                      {"pair", p},
                      {"standardized_pair", oa::standardize(p)},
                      {"pil", oa::flag_to_pilpair(f)},
                      {"partial", oa::decorated_to_partial(d)}});
    }
    return oa::json{{"n", n}, {"i", i}, {"count", decorated.size()}, {"orbits", rows}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "w,delta,flag,u_i,u,pil,distinguished,partial\n";
  for (const auto& d : decorated) {
    const oa::IStandardFlag f = oa::decorated_to_flag(d);
    const oa::SharePair p = oa::sharepair_of(d);
    const oa::PilWithList pil = oa::flag_to_pilpair(f);
    const oa::PartialPermutation kappa = oa::decorated_to_partial(d);
    std::string partial;
    for (auto [a, b] : kappa.mapping) {
      if (!partial.empty()) partial += ' ';
      partial += std::to_string(a) + ">" + std::to_string(b);
    }
    const auto idx = pil.distinguished_index();
    out << words(d.w.images()) << ',' << words(d.delta) << ',' << oa::flag_text(f) << ','
        << words(p.u_i.images()) << ',' << words(oa::standardize(p).u.images()) << ','
        << oa::pil_text(pil.pil) << ',' << (idx ? std::to_string(*idx) : std::string()) << ','
        << partial << '\n';
  }
  return out.str();
}

std::string graph_output(int n, int i, const std::string& format) {
  const oa::OrbitGraph g = oa::weak_order_graph(n, i, size_guard());
  if (format == "json") return oa::graph_to_json(g).dump(2) + "\n";
  return oa::graph_to_dot(g);
}

std::string sequence_output(int shift, int order, const std::string& format) {
  const oa::RationalSeries s =
      shift < 0 ? oa::total_orbit_egf(order) : oa::shifted_pil_egf(shift, order);
  if (format == "json") {
    oa::json rows = oa::json::array();
    for (int n = 0; n <= order; ++n) {
      std::ostringstream c;
      c << s[n];
      rows.push_back({{"n", n}, {"coefficient", c.str()}, {"egf_value", s.egf_coefficient(n).str()}});
    }
    return rows.dump(2) + "\n";
  }
  return oa::series_csv(s);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbits of line stabilizers on the flag variety: enumeration, counts, graphs"};
  app.name("orbit-atlas");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int n = 0;
  int i = 0;
  int max_n = 0;
  int order = oa::kDefaultSeriesOrder;
  int shift = -1;
  std::string format;
  std::string out_path;

  auto* enumerate = app.add_subcommand("enumerate", "List every orbit in all parametrizations");
  enumerate->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--i", i, "Line index, 1 <= i <= n")->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->default_str("csv");
  enumerate->add_option("--out", out_path, "Write to PATH instead of stdout");

  auto* triangle = app.add_subcommand("triangle", "Orbit counts for 1 <= i <= n <= max-n");
  triangle->add_option("--max-n", max_n, "Largest degree")->required()->check(CLI::Range(1, 200));
  triangle->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->default_str("csv");
  triangle->add_option("--out", out_path, "Write to PATH instead of stdout");

  auto* graph = app.add_subcommand("graph", "Weak-order graph with closure covers");
  graph->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 12));
  graph->add_option("--i", i, "Line index, 1 <= i <= n")->required()->check(CLI::Range(1, 12));
  graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))->default_str("dot");
  graph->add_option("--out", out_path, "Write to PATH instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run every cross-module check");
  verify->add_option("--max-n", max_n, "Largest degree checked")->check(CLI::Range(1, 6))->default_val(5);
  verify->add_option("--order", order, "Series truncation order")->check(CLI::Range(2, 60))->default_val(8);
  verify->add_option("--out", out_path, "Write the report to PATH instead of stdout");

  auto* sequence = app.add_subcommand("sequence", "Coefficients of the orbit-count series");
  sequence->add_option("--i", shift,
                       "Use x^i exp(x/(1-x)), counting orbits of S_{n-i}; omit for the total series")
      ->check(CLI::Range(0, 200));
  sequence->add_option("--order", order, "Truncation order")->check(CLI::Range(0, 200));
  sequence->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->default_str("csv");
  sequence->add_option("--out", out_path, "Write to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if ((enumerate->parsed() || graph->parsed()) && i > n) {
    std::cerr << "error: --i must not exceed --n\n\n" << app.help();
    return kUsageError;
  }
  if (format.empty()) format = graph->parsed() ? "dot" : "csv";

  try {
    std::string text;
    bool ok = true;
    if (enumerate->parsed()) {
      text = enumerate_output(n, i, format);
    } else if (triangle->parsed()) {
      text = format == "json" ? oa::triangle_json(max_n).dump(2) + "\n" : oa::triangle_csv(max_n);
    } else if (graph->parsed()) {
      text = graph_output(n, i, format);
    } else if (verify->parsed()) {
      const auto results = oa::run_verification(max_n, order);
      text = oa::format_report(results);
      for (const auto& r : results) ok = ok && r.passed;
      text += ok ? "all checks passed\n" : "some checks FAILED\n";
    } else if (sequence->parsed()) {
      if (shift > order) throw std::invalid_argument("--i must not exceed --order");
      text = sequence_output(shift, order, format);
    }
    emit(text, out_path);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}
