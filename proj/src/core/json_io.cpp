#include "json_io.hpp"

#include <json.hpp>

#include "poly_parse.hpp"
#include "rational.hpp"

namespace varembed {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null())
    throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

void check_version(const ordered_json& j) {
  const ordered_json& v = field(j, "version");
  if (!v.is_number_integer() || v.get<int>() != 1)
    throw Error(Errc::ParseError, "unsupported document version");
}

std::size_t size_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw Error(Errc::ParseError, std::string("field '") + key +
                                      "' must be a nonnegative integer");
  return std::size_t(v.get<long long>());
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

VarContextPtr domain_for(std::size_t m) {
  if (m == 0)
    throw Error(Errc::ParseError, "witness domain dimension must be positive");
  std::vector<std::string> names;
  if (m == 1) {
    names.push_back("t");
  } else {
    names.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) names.push_back("t" + std::to_string(i));
  }
  return VarContext::make(names);
}

}  // namespace

std::string variety_to_json(const VarietyPresentation& v) {
  ordered_json j;
  j["version"] = 1;
  j["case"] = v.kase == VarietyCase::Real ? "real" : "complex";
  j["meta"] = ordered_json{{"d", v.d}, {"e", v.e}, {"n", v.n}};
  ordered_json coords = ordered_json::array();
  for (const Coordinate& c : v.coordinates)
    coords.push_back(ordered_json{{"name", c.name}, {"role", c.role}});
  j["coordinates"] = std::move(coords);
  ordered_json eqs = ordered_json::array();
  for (const Polynomial& e : v.equations) eqs.push_back(format_polynomial(e));
  j["equations"] = std::move(eqs);
  return dump(j);
}

VarietyPresentation variety_from_json(const std::string& text) {
  ordered_json j = parse_document(text);
  check_version(j);
  VarietyPresentation v;
  const std::string kase = field(j, "case").get<std::string>();
  if (kase == "real")
    v.kase = VarietyCase::Real;
  else if (kase == "complex")
    v.kase = VarietyCase::Complex;
  else
    throw Error(Errc::ParseError, "unknown case '" + kase + "'");
  const ordered_json& meta = field(j, "meta");
  v.d = size_field(meta, "d");
  v.e = size_field(meta, "e");
  v.n = size_field(meta, "n");

  const ordered_json& coords = field(j, "coordinates");
  if (!coords.is_array() || coords.empty())
    throw Error(Errc::ParseError, "'coordinates' must be a nonempty array");
  std::vector<std::string> names;
  names.reserve(coords.size());
  for (const ordered_json& c : coords) {
    Coordinate coord{field(c, "name").get<std::string>(),
                     field(c, "role").get<std::string>()};
    names.push_back(coord.name);
    v.coordinates.push_back(std::move(coord));
  }
  v.coord_ctx = VarContext::make(names);

  const ordered_json& eqs = field(j, "equations");
  if (!eqs.is_array())
    throw Error(Errc::ParseError, "'equations' must be an array");
  v.equations.reserve(eqs.size());
  for (const ordered_json& e : eqs)
    v.equations.push_back(parse_polynomial(e.get<std::string>(), v.coord_ctx));

  const VarietyCounts want = v.kase == VarietyCase::Real
                                 ? real_counts(v.d)
                                 : complex_counts(v.d, v.e, v.n);
  if (v.coordinates.size() != want.coordinates ||
      v.equations.size() != want.equations)
    throw Error(Errc::ParseError,
                "coordinate/equation counts do not match case metadata");
  return v;
}

std::string witness_to_json(const EmbeddingWitness& w) {
  ordered_json j;
  j["version"] = 1;
  j["domain_dim"] = w.domain_dim;
  ordered_json rows = ordered_json::array();
  for (const auto& row : w.integers) {
    ordered_json r = ordered_json::array();
    for (const Int& x : row) {
      if (!x.fits_slong_p())
        throw Error(Errc::InvalidArgument,
                    "witness integer does not fit in 64 bits");
      r.push_back(x.get_si());
    }
    rows.push_back(std::move(r));
  }
  j["integers"] = std::move(rows);
  ordered_json assignment = ordered_json::object();
  for (const auto& [name, poly] : w.assignment)
    assignment[name] = format_polynomial(poly);
  j["assignment"] = std::move(assignment);
  return dump(j);
}

EmbeddingWitness witness_from_json(const std::string& text) {
  ordered_json j = parse_document(text);
  check_version(j);
  EmbeddingWitness w;
  w.domain_dim = size_field(j, "domain_dim");
  w.domain = domain_for(w.domain_dim);

  const ordered_json& rows = field(j, "integers");
  if (!rows.is_array())
    throw Error(Errc::ParseError, "'integers' must be an array of arrays");
  for (const ordered_json& row : rows) {
    if (!row.is_array())
      throw Error(Errc::ParseError, "'integers' must be an array of arrays");
    std::vector<Int> out;
    out.reserve(row.size());
    for (const ordered_json& x : row) {
      if (!x.is_number_integer())
        throw Error(Errc::ParseError, "witness integers must be integers");
      out.emplace_back(long(x.get<long long>()));
    }
    w.integers.push_back(std::move(out));
  }

  const ordered_json& assignment = field(j, "assignment");
  if (!assignment.is_object() || assignment.empty())
    throw Error(Errc::ParseError, "'assignment' must be a nonempty object");
  for (auto it = assignment.begin(); it != assignment.end(); ++it)
    w.assignment.emplace_back(it.key(),
                              parse_polynomial(it.value().get<std::string>(),
                                               w.domain));
  return w;
}

std::string divfam_to_json(const DivFamily& fam) {
  ordered_json j;
  ordered_json constants = ordered_json::array();
  for (const Rational& c : fam.constants) constants.push_back(to_string(c));
  j["constants"] = std::move(constants);
  ordered_json h = ordered_json::array();
  for (const Polynomial& hk : fam.h) h.push_back(format_polynomial(hk));
  j["H"] = std::move(h);
  j["P"] = format_polynomial(fam.p);
  return dump(j);
}

std::string report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["version"] = 1;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["domain_dim"] = r.domain_dim;
  j["seed"] = r.seed;
  ordered_json eqs = ordered_json::array();
  for (std::size_t i = 0; i < r.equations.size(); ++i) {
    const EquationCheck& c = r.equations[i];
    ordered_json e;
    e["index"] = i;
    e["vanishes"] = c.vanishes;
    e["method"] = c.method;
    if (c.residual) e["residual"] = *c.residual;
    eqs.push_back(std::move(e));
  }
  j["equations"] = std::move(eqs);
  j["nonconstant"] = r.nonconstant;
  j["injective_by_projection"] = r.injective_by_projection;
  j["jacobian"] = ordered_json{{"rank", r.jacobian.rank},
                               {"required", r.jacobian.required},
                               {"attempts", r.jacobian.attempts},
                               {"points", r.jacobian.points}};
  return dump(j);
}

}  // namespace varembed
