#include "grauert/serialize.hpp"

#include "grauert/error.hpp"

namespace grauert {

namespace {

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json pi_vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(PiRational{x}));
  return a;
}

}  // namespace

Json rational_json(const Rational& q) { return Json::array({q.numerator(), q.denominator()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw DataError("rational must be [numerator, denominator], got " + j.dump());
  const auto den = j[1].get<std::int64_t>();
  if (den == 0) throw DataError("zero denominator");
  return Rational(j[0].get<std::int64_t>(), den);
}

Json to_json(const RootSystem& rs) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = to_string(rs.family());
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient_dim();
  j["frame"] = rs.frame_name();
  Json roots = Json::array();
  for (const auto& r : rs.roots()) roots.push_back({{"coords", vector_json(r.vector.coords)}, {"mult", r.multiplicity}});
  j["roots"] = std::move(roots);
  return j;
}

RootSystem root_system_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw DataError("schema_version " + j.at("schema_version").dump() + " is not supported");
    const int ambient = j.at("ambient_dim").get<int>();
    std::vector<Root> roots;
    for (const auto& r : j.at("roots")) {
      RationalVector v;
      for (const auto& c : r.at("coords")) v.push_back(rational_from_json(c));
      if (static_cast<int>(v.size()) != ambient) throw DataError("root has the wrong number of coordinates");
      roots.push_back({{v}, r.at("mult").get<int>()});
    }
    return RootSystem::from_roots(parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>(), ambient,
                                  std::move(roots));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed root system document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(e.what());
  }
}

Json to_json(const OmegaPolytope& p) {
  Json j;
  j["rank"] = p.rank;
  j["ambient_dim"] = p.ambient_dim;
  Json eq = Json::array();
  for (const auto& e : p.equalities) eq.push_back(vector_json(e));
  j["equalities"] = std::move(eq);
  Json hs = Json::array();
  for (const auto& h : p.halfspaces) hs.push_back({{"alpha", vector_json(h.coords)}, {"bound", "pi/2"}});
  j["halfspaces"] = std::move(hs);
  if (p.vertices_available) {
    Json vs = Json::array();
    for (const auto& v : p.vertices) vs.push_back(pi_vector_json(v));
    j["vertices"] = std::move(vs);
  } else {
    j["vertices"] = nullptr;
  }
  return j;
}

Json to_json(const Classification& c, const Catalog& catalog) {
  Json j;
  j["space"] = c.space.label();
  j["verdict"] = to_string(c.verdict);
  if (c.envelope_space) j["envelope"] = c.envelope_space->label();
  Json ev = Json::array();
  const auto& pairs = catalog.jaffee_pairs();
  for (const auto& e : c.evidence) {
    Json x;
    x["pair"] = e.pair_index;
    x["source"] = e.source;
    if (e.pair_index < pairs.size() && !pairs[e.pair_index].note.empty()) x["note"] = pairs[e.pair_index].note;
    x["envelope"] = e.envelope;
    x["applicable"] = e.applicable;
    x["rank"] = e.rank_m;
    x["envelope_rank"] = e.rank_n;
    x["rank_condition"] = e.passes;
    if (!e.reason.empty()) x["reason"] = e.reason;
    ev.push_back(std::move(x));
  }
  j["evidence"] = std::move(ev);
  if (!c.remarks.empty()) j["remarks"] = c.remarks;
  return j;
}

Json to_json(const Theorem7Result& r) {
  Json j;
  j["holds"] = r.holds;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.separating_vertex) j["separating_vertex"] = pi_vector_json(*r.separating_vertex);
  if (r.separating_root) {
    j["separating_root"] = vector_json(r.separating_root->coords);
    j["separating_value"] = to_string(PiRational{r.separating_value});
  }
  Json cert = Json::array();
  for (const auto& v : r.certificate) {
    Json sat = Json::array();
    for (const auto& s : v.saturating) sat.push_back(vector_json(s.coords));
    cert.push_back({{"vertex", pi_vector_json(v.vertex)}, {"saturating", std::move(sat)}});
  }
  j["certificate"] = std::move(cert);
  return j;
}

}  // namespace grauert
