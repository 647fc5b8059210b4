#include "wdvv/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wdvv {

namespace {

std::string key_of(std::vector<size_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::string s;
  for (size_t v : idx) {
    if (!s.empty()) s += ",";
    s += std::to_string(v);
  }
  return s;
}

// b-index of an atom side: "b7" -> 7, anything else -> 0
unsigned b_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'b') return 0;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
  return static_cast<unsigned>(std::stoul(name.substr(1)));
}

Json pole_entry_to_json(const PoleExpr& e) {
  Json out;
  out["poly"] = poly_to_json(e.poly());
  if (!e.is_polynomial()) {
    Json poles = Json::array();
    for (const auto& [key, num] : e.pole_terms()) {
      const auto& [atom, exp] = key;
      Json p;
      unsigned i = b_index(atom.var);
      unsigned j = 0;
      if (atom.shift.term_count() == 1 && !atom.shift.is_constant()) {
        // a pure-variable shift names the partner pole
        const auto& vars = atom.shift.vars();
        for (size_t v = 0; v < vars.size(); ++v)
          if (atom.shift == MultiPoly::var(vars[v])) j = b_index(vars[v]);
      }
      if (i && j) {
        p["pair"] = Json::array({i, j});
      } else {
        p["atom"] = Json{{"var", atom.var}, {"shift", poly_to_json(atom.shift)}};
      }
      p["num"] = poly_to_json(num);
      p["exp"] = exp;
      poles.push_back(p);
    }
    out["poles"] = poles;
  }
  return out;
}

std::string latex_group(const MultiPoly& p) {
  std::string body = p.latex();
  if (p.term_count() > 1) return "\\left(" + body + "\\right)";
  return body;
}

std::string tex_var(unsigned i, char base) {
  std::ostringstream os;
  os << base << "_{" << i << "}";
  return os.str();
}

std::string degree_tag(const MultiPoly& p,
                       const std::map<std::string, Rat>& weights) {
  if (p.is_zero()) return "degree -";
  auto d = p.homogeneous_degree(weights);
  if (!d) return "degree mixed";
  return "degree " + rat_to_string(*d);
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["num"] = numerator(c).str();
    t["den"] = denominator(c).str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

MultiPoly poly_from_json(const Json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  MultiPoly out;
  for (const auto& t : j.at("terms")) {
    std::vector<uint16_t> e = t.at("exp").get<std::vector<uint16_t>>();
    if (e.size() != vars.size())
      throw std::invalid_argument("poly_from_json: exponent arity mismatch");
    Rat c(BigInt(t.at("num").get<std::string>()),
          BigInt(t.at("den").get<std::string>()));
    MultiPoly term(c);
    for (size_t i = 0; i < vars.size(); ++i)
      if (e[i]) term *= MultiPoly::var(vars[i], e[i]);
    out += term;
  }
  return out;
}

Json spec_to_json(const WaterBagSpecData& s) {
  Json j;
  j["N"] = s.N;
  j["M"] = s.M;
  j["flavor"] = s.flavor == Flavor::Generic ? "generic"
               : s.flavor == Flavor::BN     ? "bn"
                                            : "rational";
  Json rats = Json::array();
  for (const auto& r : s.rational) rats.push_back(Json{{"L", r.L}});
  j["rational"] = rats;
  return j;
}

WaterBagSpecData spec_from_json(const Json& j) {
  WaterBagSpecData s;
  s.N = j.at("N").get<unsigned>();
  s.M = j.value("M", 0u);
  std::string fl = j.value("flavor", "generic");
  if (fl == "generic")
    s.flavor = Flavor::Generic;
  else if (fl == "bn")
    s.flavor = Flavor::BN;
  else if (fl == "rational")
    s.flavor = Flavor::Rational;
  else
    throw std::invalid_argument("spec_from_json: unknown flavor " + fl);
  if (j.contains("rational"))
    for (const auto& r : j.at("rational"))
      s.rational.push_back(RationalPole{r.at("L").get<unsigned>()});
  return s;
}

Json metric_to_json(const Metric& m, const std::vector<Coord>& coords) {
  Json j;
  Json chart = Json::array();
  for (const auto& c : coords) chart.push_back(c.name);
  j["chart"] = chart;
  Json entries;
  for (size_t a = 0; a < coords.size(); ++a)
    for (size_t b = a; b < coords.size(); ++b) {
      const PoleExpr& e = m.at(a, b);
      if (e.is_zero()) continue;
      entries[key_of({a, b})] = pole_entry_to_json(e);
    }
  j["entries"] = entries.is_null() ? Json::object() : entries;
  return j;
}

Json tensor_to_json(const CTensor& c, const std::vector<Coord>& coords) {
  Json j;
  Json chart = Json::array();
  for (const auto& co : coords) chart.push_back(co.name);
  j["chart"] = chart;
  Json entries;
  for (size_t a = 0; a < coords.size(); ++a)
    for (size_t b = a; b < coords.size(); ++b)
      for (size_t l = b; l < coords.size(); ++l) {
        const PoleExpr& e = c.at(a, b, l);
        if (e.is_zero()) continue;
        entries[key_of({a, b, l})] = pole_entry_to_json(e);
      }
  j["entries"] = entries.is_null() ? Json::object() : entries;
  return j;
}

Json prepotential_to_json(const Prepotential& P) {
  Json j;
  j["F0"] = poly_to_json(P.F0);
  Json f1;
  for (const auto& [i, f] : P.F1) f1[std::to_string(i)] = poly_to_json(f);
  j["F1"] = f1.is_null() ? Json::object() : f1;
  Json logs = Json::array();
  for (const auto& [pr, g] : P.gamma) {
    Json entry;
    entry["pair"] = Json::array({pr.first, pr.second});
    entry["coeff"] = poly_to_json(g);
    logs.push_back(entry);
  }
  j["log"] = logs;
  return j;
}

Json check_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = r.pass ? "pass" : "fail";
  j["witnesses"] = r.witnesses;
  return j;
}

Json numeric_to_json(const NumericReport& r) {
  Json j;
  j["check"] = r.check;
  j["point"] = r.point;
  j["max_residual"] = static_cast<double>(r.max_residual);
  j["tol"] = static_cast<double>(r.tol);
  j["pass"] = r.pass;
  return j;
}

Json example_to_json(const ExampleResult& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = r.status;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

std::string prepotential_latex(const Prepotential& P) {
  std::ostringstream os;
  os << "F = ";
  bool any = false;
  if (!P.F0.is_zero()) {
    os << P.F0.latex();
    any = true;
  }
  for (const auto& [i, f] : P.F1) {
    if (f.is_zero()) continue;
    if (any) os << " + ";
    os << tex_var(i, 'k') << " " << latex_group(f);
    any = true;
  }
  for (const auto& [pr, g] : P.gamma) {
    if (g.is_zero()) continue;
    if (any) os << " + ";
    std::string z =
        "(" + tex_var(pr.first, 'b') + " - " + tex_var(pr.second, 'b') + ")";
    os << latex_group(g) << " \\, " << z << "^{2} \\log " << z << "^{2}";
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

std::string prepotential_text(const Prepotential& P,
                              const std::map<std::string, Rat>& weights) {
  std::ostringstream os;
  os << "F0  [" << degree_tag(P.F0, weights) << "]: " << P.F0.str() << "\n";
  for (const auto& [i, f] : P.F1)
    os << "F1[" << i << "]  [" << degree_tag(f, weights) << "]: " << f.str()
       << "\n";
  for (const auto& [pr, g] : P.gamma)
    os << "log(" << pr.first << "," << pr.second << ")  ["
       << degree_tag(g, weights) << "]: " << g.str()
       << "  * (b" << pr.first << "-b" << pr.second << ")^2 log(b" << pr.first
       << "-b" << pr.second << ")^2\n";
  return os.str();
}

}  // namespace wdvv
