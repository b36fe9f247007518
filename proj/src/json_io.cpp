#include "axkatz/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace axkatz {

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const ExtendedDegree& d) {
  if (d.is_finite()) return d.value();
  return d.to_string();
}

Json to_json(const AbelianShape& shape) { return shape.factors(); }

Json to_json(const FiniteMap& f) {
  Json values = Json::array();
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto v = f.at_index(x);
    values.push_back(std::vector<std::uint64_t>(v.begin(), v.end()));
  }
  return Json{{"domain", to_json(f.domain())},
              {"codomain", to_json(f.codomain())},
              {"values", std::move(values)}};
}

const char* to_string(BoundCase c) { return c == BoundCase::first ? "first" : "second"; }

const char* to_string(VerifyMode m) { return m == VerifyMode::exhaustive ? "exhaustive" : "sampled"; }

namespace {

Json targets_json(const std::vector<Target>& targets) {
  Json out = Json::array();
  for (const Target& t : targets) out.push_back(Json{{"beta", t.beta}, {"d", t.d}});
  return out;
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json j{{"p", r.p},
         {"alpha", r.alpha},
         {"targets", targets_json(r.targets)},
         {"A", to_json(r.A)},
         {"B", to_json(r.B)},
         {"L", r.L},
         {"alpha_breve", r.alpha_breve},
         {"alpha_total", r.alpha_total},
         {"alpha_breve_total", r.alpha_breve_total},
         {"A_breve", to_json(r.A_breve)},
         {"case", to_string(r.bound_case)}};
  if (r.bound_case == BoundCase::first)
    j["s0"] = r.s0;
  else
    j["t_star"] = r.t_star;
  j["raw_bound"] = r.raw_bound;
  j["bound"] = r.bound;
  return j;
}

Json to_json(const VpWitness& w) {
  Json n = Json::array();
  for (const BigInt& v : w.n) n.push_back(to_json(v));
  return Json{{"value", w.value}, {"t", w.t},   {"Q", w.Q},
              {"R", w.R},         {"mu", w.mu}, {"n", std::move(n)},
              {"alternative_forms", w.alternative_forms}};
}

Json to_json(const ZeroCount& z) {
  Json ord = Json::object();
  for (const auto& [l, v] : z.ord) ord[std::to_string(l)] = to_json(v);
  return Json{{"count", z.count}, {"ord", std::move(ord)}};
}

Json to_json(const PrimeBound& b) {
  Json j{{"prime", b.prime}, {"alpha", b.alpha}, {"empty_system", b.empty_system}, {"bound", b.bound}};
  if (b.report) j["report"] = to_json(*b.report);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json targets = Json::array();
  for (const auto& [shape, d] : r.targets) targets.push_back(Json{{"shape", to_json(shape)}, {"d", d}});
  Json witness = Json::array();
  for (const FiniteMap& f : r.witness) witness.push_back(to_json(f));
  Json j{{"p", r.p},
         {"alpha", r.alpha},
         {"targets", std::move(targets)},
         {"bound", r.bound.bound},
         {"report", to_json(r.bound)},
         {"mode", to_string(r.mode)}};
  if (r.mode == VerifyMode::sampled) j["seed"] = r.seed;
  j["qualifying"] = r.qualifying;
  j["systems_tested"] = r.systems_tested;
  j["min_ord"] = to_json(r.min_ord);
  j["witness_count"] = r.witness_count;
  j["witness"] = std::move(witness);
  j["vacuous"] = r.vacuous;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const ProofTrace& t) {
  Json coeffs = Json::array();
  for (const CoefficientCheck& c : t.coefficients)
    coeffs.push_back(Json{{"map", c.map}, {"n", c.n}, {"ord", to_json(c.ord)}, {"floor", c.floor}});
  return Json{{"p", t.p},
              {"beta", t.beta},
              {"count", t.count},
              {"ord_count", to_json(t.ord_count)},
              {"integral", to_json(t.integral)},
              {"ord_integral", to_json(t.ord_integral)},
              {"congruent", t.congruent},
              {"orders_match", t.orders_match},
              {"empty_zero_set", t.empty_zero_set},
              {"indicator_degrees_ok", t.indicator_degrees_ok},
              {"coefficients_ok", t.coefficients_ok},
              {"coefficients", std::move(coeffs)}};
}

Json to_json(const PolyZeroCount& c) {
  Json ord = Json::object();
  Json bound = Json::object();
  for (const auto& [l, v] : c.ord) ord[std::to_string(l)] = to_json(v);
  for (const auto& [l, v] : c.bound) bound[std::to_string(l)] = v;
  return Json{{"count", c.count}, {"ord", std::move(ord)}, {"bound", std::move(bound)}, {"holds", c.holds}};
}

namespace {

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ValidationError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> as_uint_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const Json& v : j) out.push_back(as_uint(v, what));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

FiniteMap finite_map_from_json(const Json& j) {
  AbelianShape domain(as_uint_list(field(j, "domain"), "domain"));
  AbelianShape codomain(as_uint_list(field(j, "codomain"), "codomain"));
  const Json& rows = field(j, "values");
  if (!rows.is_array()) throw ValidationError("values must be an array");
  std::vector<std::uint64_t> values;
  for (const Json& row : rows) {
    const auto v = as_uint_list(row, "value");
    if (v.size() != codomain.rank())
      throw ValidationError("each value must have one entry per codomain factor");
    values.insert(values.end(), v.begin(), v.end());
  }
  return FiniteMap(std::move(domain), std::move(codomain), std::move(values));
}

PolySystem poly_system_from_json(const Json& j) {
  PolySystem s;
  s.modulus = as_uint(field(j, "modulus"), "modulus");
  s.vars = as_uint(field(j, "vars"), "vars");
  const Json& polys = field(j, "polys");
  if (!polys.is_array()) throw ValidationError("polys must be an array");
  for (const Json& pj : polys) {
    Polynomial poly;
    poly.degree = as_uint(field(pj, "degree"), "degree");
    const Json& terms = field(pj, "terms");
    if (!terms.is_array()) throw ValidationError("terms must be an array");
    for (const Json& tj : terms) {
      if (!tj.is_array() || tj.size() != 2) throw ValidationError("terms are [coeff, [exps...]]");
      poly.terms.push_back({as_uint(tj[0], "coefficient"), as_uint_list(tj[1], "exponents")});
    }
    s.polys.push_back(std::move(poly));
  }
  s.validate();
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace axkatz
