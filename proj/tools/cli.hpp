#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tutte/tutte.hpp"
#include "tutte/verify.hpp"

namespace tutte::cli {

enum ExitCode : int { kOk = 0, kInput = 1, kRegion = 2, kVerification = 3 };

using json = nlohmann::json;

/// Resolves a specialization preset to an evaluation point. Presets only fix
/// the (x, y) constraint; one free coordinate may come from --x or --y.
inline std::pair<Rational, Rational> resolve_preset(const std::string& preset, std::optional<Rational> x,
                                                    std::optional<Rational> y) {
  auto need = [&](const std::optional<Rational>& v, const char* name) {
    if (!v) throw Error(ErrorCode::Parse, "preset '" + preset + "' needs --" + name);
    return *v;
  };
  auto on_hyperbola = [&](const Rational& q) -> std::pair<Rational, Rational> {
    if (x) {
      if (*x == Rational(1)) throw Error(ErrorCode::Parse, "x = 1 is not on the hyperbola");
      return {*x, Rational(1) + q / (*x - Rational(1))};
    }
    const Rational yy = need(y, "x or --y");
    if (yy == Rational(1)) throw Error(ErrorCode::Parse, "y = 1 is not on the hyperbola");
    return {Rational(1) + q / (yy - Rational(1)), yy};
  };
  if (preset == "ising") return on_hyperbola(Rational(2));
  if (preset.rfind("potts:", 0) == 0) return on_hyperbola(Rational::parse(preset.substr(6)));
  if (preset == "jones") {
    const Rational xx = need(x, "x");
    return {xx, Rational(1) / xx};
  }
  if (preset == "chromatic") return {need(x, "x"), Rational(0)};
  if (preset == "flow") return {Rational(0), need(y, "y")};
  if (preset == "reliability") {
    const Rational yy = need(y, "y");
    if (yy == Rational(1)) throw Error(ErrorCode::Parse, "reliability needs y != 1");
    return {Rational(1), yy};
  }
  if (preset == "random-cluster") {
    const Rational yy = need(y, "y");
    if (yy == Rational(1)) throw Error(ErrorCode::Parse, "random-cluster needs y != 1");
    return {need(x, "x"), yy};
  }
  if (preset == "forest-generator") return {need(x, "x"), Rational(1)};
  if (preset == "spanning-trees") return {Rational(1), Rational(1)};
  if (preset == "spanning-forests") return {Rational(2), Rational(1)};
  if (preset == "spanning-subgraphs") return {Rational(1), Rational(2)};
  throw Error(ErrorCode::Parse, "unknown preset '" + preset + "'");
}

struct Options {
  std::string file;
  std::string x;
  std::string y;
  std::string method = "dc";
  std::string format = "text";
  std::string preset;
  bool coeffs = false;
  bool check = false;
  bool corpus = false;
  std::uint64_t seed = 1;
  std::size_t count = 25;
};

inline std::pair<Rational, Rational> point_from(const Options& o) {
  std::optional<Rational> x, y;
  if (!o.x.empty()) x = Rational::parse(o.x);
  if (!o.y.empty()) y = Rational::parse(o.y);
  if (!o.preset.empty()) return resolve_preset(o.preset, x, y);
  if (!x || !y) throw Error(ErrorCode::Parse, "--x and --y are required");
  return {*x, *y};
}

inline int cmd_poly(const Options& o, std::ostream& out) {
  const Multigraph g = io::graph_from_json(io::read_json_file(o.file));
  MultiPoly p;
  if (o.method == "dc") p = tutte_dc(g).poly;
  else if (o.method == "oracle") p = tutte_oracle(g).poly;
  else if (o.method == "negami") p = negami(g).poly;
  else throw Error(ErrorCode::Parse, "unknown method '" + o.method + "'");
  if (o.format == "json") {
    json j{{"method", o.method}, {"polynomial", p.to_string()},
           {"terms", o.method == "negami" ? io::negami_terms_json(p) : io::tutte_terms_json(p)}};
    out << j.dump() << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return kOk;
}

inline int cmd_split(const Options& o, std::ostream& out) {
  const SplitInstance inst = io::split_from_json(io::read_json_file(o.file));
  const auto [x, y] = point_from(o);
  const std::size_t n = inst.terminals.size();
  const Region region = classify_region(n, x, y);
  const SplitTables tables(inst);
  const Rational value = tables.evaluate(x, y);
  std::optional<Rational> direct;
  if (o.check) direct = tutte_value(inst.glued(), x, y);
  const bool mismatch = direct && *direct != value;

  if (o.format == "json") {
    json j{{"region", region.to_string()}, {"x", x.to_string()}, {"y", y.to_string()}, {"value", value.to_string()}};
    if (o.coeffs) j["coeffs"] = io::to_json(tables.coefficients(x, y));
    if (direct) {
      j["direct"] = direct->to_string();
      j["check"] = mismatch ? "mismatch" : "ok";
    }
    out << j.dump() << "\n";
  } else {
    out << "region: " << region.to_string() << ", value: " << value << "\n";
    if (o.coeffs) {
      const CoeffMatrix c = tables.coefficients(x, y);
      out << "order: ";
      for (std::size_t i = 0; i < c.order.size(); ++i) out << (i ? " " : "") << c.order[i];
      out << "\n" << c.entries;
    }
    if (direct) out << "check: " << (mismatch ? "mismatch" : "ok") << " (direct " << *direct << ")\n";
  }
  return mismatch ? kVerification : kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<verify::CheckResult> results = verify::fixture_checks();
  CoeffCache cache;
  auto append = [&](std::vector<verify::CheckResult> more) {
    results.insert(results.end(), more.begin(), more.end());
  };
  auto check_instance = [&](const SplitInstance& inst, const std::string& label) {
    append(verify::sweep_checks(inst, label, &cache));
    append(verify::graph_checks(inst.glued(), label + " G"));
    append(verify::graph_checks(inst.k, label + " K"));
    append(verify::graph_checks(inst.h, label + " H"));
    append(verify::aux_identity_checks(inst.k, inst.h, inst.terminals, label + " K|H"));
    append(verify::aux_identity_checks(inst.h, inst.k, inst.terminals, label + " H|K"));
  };
  if (!o.file.empty()) {
    const json j = io::read_json_file(o.file);
    if (j.contains("K")) check_instance(io::split_from_json(j), "file");
    else append(verify::graph_checks(io::graph_from_json(j), "file"));
  }
  if (o.corpus || o.file.empty()) {
    const auto instances = corpus::random_corpus(o.seed, o.count);
    for (std::size_t i = 0; i < instances.size(); ++i) check_instance(instances[i], "corpus[" + std::to_string(i) + "]");
  }
  const bool ok = verify::all_ok(results);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    out << json{{"ok", ok}, {"checks", arr}}.dump() << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.ok;
      out << (r.ok ? "PASS " : "FAIL ") << r.name;
      if (!r.ok && !r.detail.empty()) out << " [" << r.detail << "]";
      out << "\n";
    }
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? kOk : kVerification;
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  const SplitInstance inst = io::split_from_json(io::read_json_file(o.file));
  std::vector<std::pair<Rational, Rational>> points;
  if (!o.x.empty() || !o.y.empty() || !o.preset.empty()) points.push_back(point_from(o));
  else points = {{Rational(2), Rational(3, 2)}, {Rational(1), Rational(2)}, {Rational(2), Rational(1)}, {Rational(1), Rational(1)}};

  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

  const auto t0 = clock::now();
  const TuttePoly direct = tutte_dc(inst.glued());
  const double direct_ms = ms(clock::now() - t0);
  const auto t1 = clock::now();
  const SplitTables tables(inst);
  const double tables_ms = ms(clock::now() - t1);

  bool ok = true;
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(18) << "point" << std::setw(24) << "region" << std::setw(14) << "split_ms"
       << "equal\n";
  for (const auto& [x, y] : points) {
    const auto t2 = clock::now();
    const Rational split = tables.evaluate(x, y);
    const double split_ms = ms(clock::now() - t2);
    const bool equal = split == direct.evaluate(x, y);
    ok = ok && equal;
    const std::string pt = "(" + x.to_string() + "," + y.to_string() + ")";
    const std::string region = classify_region(inst.terminals.size(), x, y).to_string();
    rows.push_back({{"point", pt}, {"region", region}, {"split_ms", split_ms}, {"value", split.to_string()}, {"equal", equal}});
    text << std::setw(18) << pt << std::setw(24) << region << std::setw(14) << std::fixed << std::setprecision(3)
         << split_ms << (equal ? "yes" : "NO") << "\n";
  }
  if (o.format == "json") {
    out << json{{"direct_ms", direct_ms}, {"contractions_ms", tables_ms}, {"points", rows}, {"ok", ok}}.dump() << "\n";
  } else {
    out << "direct deletion-contraction: " << std::fixed << std::setprecision(3) << direct_ms << " ms\n";
    out << "part contractions:           " << tables_ms << " ms\n" << text.str();
    out << (ok ? "all values equal\n" : "VALUE MISMATCH\n");
  }
  return ok ? kOk : kVerification;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tutte polynomial splitting"};
  app.require_subcommand(1);
  Options o;

  auto* poly = app.add_subcommand("poly", "Tutte or Negami polynomial of a graph file");
  poly->add_option("file", o.file, "graph JSON")->required();
  poly->add_option("--method", o.method, "dc | oracle | negami");
  poly->add_option("--format", o.format, "text | json");

  auto* split = app.add_subcommand("split", "Evaluate T(G;x,y) of a split file by splitting");
  split->add_option("file", o.file, "split JSON")->required();
  split->add_option("--x", o.x, "rational x");
  split->add_option("--y", o.y, "rational y");
  split->add_option("--preset", o.preset, "ising | potts:q | reliability | jones | chromatic | flow | ...");
  split->add_flag("--coeffs", o.coeffs, "print the coefficient matrix");
  split->add_flag("--check", o.check, "compare against direct evaluation");
  split->add_option("--format", o.format, "text | json");

  auto* ver = app.add_subcommand("verify", "Run the identity and splitting suites");
  ver->add_option("file", o.file, "graph or split JSON");
  ver->add_flag("--corpus", o.corpus, "also run the random corpus");
  ver->add_option("--seed", o.seed, "corpus seed");
  ver->add_option("--count", o.count, "corpus size");
  ver->add_option("--format", o.format, "text | json");

  auto* bench = app.add_subcommand("bench", "Time direct versus split evaluation");
  bench->add_option("file", o.file, "split JSON")->required();
  bench->add_option("--x", o.x, "rational x");
  bench->add_option("--y", o.y, "rational y");
  bench->add_option("--preset", o.preset, "specialization preset");
  bench->add_option("--format", o.format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kInput;
  }
  if (o.format != "text" && o.format != "json") {
    err << "unknown format '" << o.format << "'\n";
    return kInput;
  }

  try {
    if (*poly) return cmd_poly(o, out);
    if (*split) return cmd_split(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::RegionPrecondition: return kRegion;
      case ErrorCode::SingularInverse: return kVerification;
      default: return kInput;
    }
  }
  return kInput;
}

}  // namespace tutte::cli
