// command-line front end: construct prepotentials, run the verification
// battery, print the flat-coordinate map, reproduce the example table, and
// check the even-sector restriction. Exit codes: 0 pass, 1 check failure,
// 2 usage error, 3 internal error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wdvv/serialize.hpp"

using namespace wdvv;

namespace {

struct Options {
  unsigned n = 1;
  unsigned m = 0;
  std::string flavor = "generic";
  std::string rational_spec;
  unsigned points = 5;
  uint64_t seed = 1;
  double tol = 1e-9;
  std::string format = "json";
  std::string out;
};

// flags > config file > defaults
WaterBagSpecData resolve_spec(const Options& o, const CLI::App* cmd) {
  WaterBagSpecData s;
  if (!o.rational_spec.empty()) {
    std::ifstream f(o.rational_spec);
    if (!f)
      throw CLI::ValidationError("--rational-spec",
                                 "cannot read " + o.rational_spec);
    s = spec_from_json(Json::parse(f));
  }
  if (o.rational_spec.empty() || cmd->count("--n")) s.N = o.n;
  if (o.rational_spec.empty() || cmd->count("--m")) s.M = o.m;
  if (o.rational_spec.empty() || cmd->count("--flavor")) {
    s.flavor = o.flavor == "generic" ? Flavor::Generic
              : o.flavor == "bn"     ? Flavor::BN
                                     : Flavor::Rational;
    if (s.flavor != Flavor::Rational) s.rational.clear();
  }
  return s;
}

int emit(const Options& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path " << o.out << "\n";
    return 3;
  }
  f << content;
  return 0;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Built {
  WaterBag w;
  FlatChart fc;
  CTensor c_flat;
  bool has_prepotential = false;
  Prepotential P;
};

Built build_all(const WaterBagSpecData& spec) {
  Built b{WaterBag::make(spec), {}, {}, false, {}};
  b.fc = flat_map(b.w);
  const bool rational = spec.flavor == Flavor::Rational;
  b.c_flat = push_to_flat(rational ? c_oracle(b.w) : c_closed(b.w), b.w, b.fc);
  if (!rational) {
    b.P = integrate_F(b.w, b.c_flat);
    b.has_prepotential = true;
  }
  return b;
}

int run_construct(const Options& o, const CLI::App* cmd) {
  WaterBagSpecData spec = resolve_spec(o, cmd);
  Built b = build_all(spec);
  if (o.format == "latex") {
    if (!b.has_prepotential)
      throw CLI::ValidationError(
          "--format", "latex output needs the integrated prepotential; "
                      "rational-flavor tensors are emitted as json or text");
    return emit(o, prepotential_latex(b.P) + "\n");
  }
  if (o.format == "text") {
    std::ostringstream os;
    if (b.has_prepotential)
      os << prepotential_text(b.P, b.w.grading_weights());
    else
      os << "rational flavor: flat metric and structure constants only\n"
         << tensor_to_json(b.c_flat, b.w.coords_flat()).dump(2) << "\n";
    return emit(o, os.str());
  }
  Json j;
  j["spec"] = spec_to_json(spec);
  j["flat_metric"] =
      metric_to_json(metric_closed_flat(b.w), b.w.coords_flat());
  j["c"] = tensor_to_json(b.c_flat, b.w.coords_flat());
  if (b.has_prepotential)
    j["prepotential"] = prepotential_to_json(b.P);
  else
    j["prepotential"] = nullptr;
  return emit(o, dump(j));
}

int run_flatcoords(const Options& o, const CLI::App* cmd) {
  WaterBagSpecData spec = resolve_spec(o, cmd);
  WaterBag w = WaterBag::make(spec);
  FlatChart fc = flat_map(w);
  if (o.format == "text") {
    std::ostringstream os;
    for (unsigned i = 1; i <= w.N(); ++i)
      os << "t" << i << " = " << fc.t_of_s[i - 1].str() << "\n";
    for (unsigned i = 1; i <= w.N(); ++i)
      os << "s" << i << " = " << fc.s_of_t[i - 1].str() << "\n";
    for (const Coord& c : w.coords_flat())
      if (c.kind != CoordKind::T) os << c.name << " flat as is\n";
    return emit(o, os.str());
  }
  Json j;
  j["spec"] = spec_to_json(spec);
  Json ts = Json::array(), ss = Json::array();
  for (const auto& p : fc.t_of_s) ts.push_back(poly_to_json(p));
  for (const auto& p : fc.s_of_t) ss.push_back(poly_to_json(p));
  j["t_of_s"] = ts;
  j["s_of_t"] = ss;
  Json chart = Json::array();
  for (const Coord& c : w.coords_flat()) chart.push_back(c.name);
  j["chart"] = chart;
  return emit(o, dump(j));
}

int run_verify(const Options& o, const CLI::App* cmd) {
  WaterBagSpecData spec = resolve_spec(o, cmd);
  Built b = build_all(spec);
  std::vector<CheckReport> reports;
  if (spec.flavor == Flavor::Rational) {
    Metric closed = metric_closed_flat(b.w);
    Metric oracle = push_to_flat(metric_oracle(b.w), b.w, b.fc);
    CheckReport blocks{"flat metric blocks", true, {}};
    for (size_t x = 0; x < closed.g.size(); ++x)
      for (size_t y = 0; y < closed.g.size(); ++y)
        if (!(closed.at(x, y) == oracle.at(x, y))) {
          blocks.pass = false;
          blocks.witnesses.push_back(
              "entry " + closed.coords[x].name + "," + closed.coords[y].name);
        }
    if (blocks.pass)
      blocks.witnesses.push_back("closed form equals the residue oracle");
    reports.push_back(blocks);
    reports.push_back(wdvv_check(b.w, b.c_flat, o.points, o.seed));
  } else {
    reports.push_back(wdvv_check(b.w, b.c_flat, o.points, o.seed));
    reports.push_back(unity_check(b.w, b.c_flat));
    reports.push_back(homogeneity_check(b.w, b.P));
    reports.push_back(intersection_form_check(b.w, b.c_flat));
    reports.push_back(k_decomposition_check(b.w, b.c_flat, o.points, o.seed));
    reports.push_back(fmanifold_check(b.w, b.c_flat,
                                      std::min(o.points, 3u), o.seed));
    // numeric spot check of the canonical frame at one seeded point
    std::mt19937_64 rng(o.seed);
    std::map<std::string, Rat> tpt = sample_point(b.w, rng);
    std::map<std::string, Rat> raw;
    for (unsigned i = 1; i <= b.w.N(); ++i)
      raw[WaterBag::s_name(i)] = b.fc.s_of_t[i - 1].eval(tpt);
    for (unsigned j = 1; j <= b.w.M(); ++j) {
      raw[WaterBag::b_name(j)] = tpt.at(WaterBag::b_name(j));
      raw[WaterBag::k_name(j)] = tpt.at(WaterBag::k_name(j));
    }
    CheckReport canon{"canonical frame (numeric)", false, {}};
    try {
      CanonicalReport rep = canonical_check(b.w, raw);
      canon.pass = rep.pass(static_cast<long double>(o.tol), 1e-6L);
      std::ostringstream os;
      os << "offdiag " << static_cast<double>(rep.offdiag) << ", diag "
         << static_cast<double>(rep.diag_mismatch) << ", egoroff "
         << static_cast<double>(rep.egoroff) << ", beta "
         << static_cast<double>(rep.beta_asym);
      canon.witnesses.push_back(os.str());
    } catch (const std::domain_error& e) {
      canon.witnesses.push_back(e.what());
    }
    reports.push_back(canon);
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.check;
      for (const auto& wit : r.witnesses) os << "\n      " << wit;
      os << "\n";
    }
    os << (all ? "all checks passed\n" : "some checks FAILED\n");
    int rc = emit(o, os.str());
    return rc ? rc : (all ? 0 : 1);
  }
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(check_to_json(r));
  int rc = emit(o, dump(j));
  return rc ? rc : (all ? 0 : 1);
}

int run_examples(const Options& o) {
  std::vector<ExampleResult> rows = run_example_suite();
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& r : rows) {
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.status;
      if (!r.detail.empty()) os << "\n      " << r.detail;
      os << "\n";
    }
    int rc = emit(o, os.str());
    return rc ? rc : (all ? 0 : 1);
  }
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(example_to_json(r));
  int rc = emit(o, dump(j));
  return rc ? rc : (all ? 0 : 1);
}

int run_reduce_bn(const Options& o) {
  CheckReport r = bn_restriction_check(o.n, o.m, o.points, o.seed);
  if (o.format == "text") {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.check;
    for (const auto& wit : r.witnesses) os << "\n      " << wit;
    os << "\n";
    int rc = emit(o, os.str());
    return rc ? rc : (r.pass ? 0 : 1);
  }
  int rc = emit(o, dump(check_to_json(r)));
  return rc ? rc : (r.pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"water-bag WDVV construction and verification"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool with_spec, bool with_sampling) {
    if (with_spec) {
      cmd->add_option("--n", o.n, "polynomial rank N");
      cmd->add_option("--m", o.m, "number of logarithmic poles M");
      cmd->add_option("--flavor", o.flavor, "generic, bn, or rational")
          ->check(CLI::IsMember({"generic", "bn", "rational"}));
      cmd->add_option("--rational-spec", o.rational_spec,
                      "JSON file with the full superpotential spec");
    }
    if (with_sampling) {
      cmd->add_option("--points", o.points, "sample point count");
      cmd->add_option("--seed", o.seed, "RNG seed for sample points");
      cmd->add_option("--tol", o.tol, "numeric tolerance");
    }
    cmd->add_option("--format", o.format, "json, latex, or text")
        ->check(CLI::IsMember({"json", "latex", "text"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
  };

  CLI::App* construct =
      app.add_subcommand("construct", "build and emit the prepotential");
  add_common(construct, true, false);
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification battery");
  add_common(verify, true, true);
  CLI::App* flatcoords =
      app.add_subcommand("flatcoords", "print the flat coordinate map");
  add_common(flatcoords, true, false);
  CLI::App* examples =
      app.add_subcommand("examples", "reproduce the example table");
  add_common(examples, false, false);
  CLI::App* reduce_bn = app.add_subcommand(
      "reduce-bn", "verify the even-sector restriction for (N, M)");
  add_common(reduce_bn, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(o, construct);
    if (verify->parsed()) return run_verify(o, verify);
    if (flatcoords->parsed()) return run_flatcoords(o, flatcoords);
    if (examples->parsed()) return run_examples(o);
    if (reduce_bn->parsed()) return run_reduce_bn(o);
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
