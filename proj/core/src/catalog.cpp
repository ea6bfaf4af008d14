#include "grauert/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <set>

#include <nlohmann/json.hpp>

#include "grauert/error.hpp"

#ifndef GRAUERT_SOURCE_DATA_DIR
#define GRAUERT_SOURCE_DATA_DIR ""
#endif
#ifndef GRAUERT_DEFAULT_DATA_DIR
#define GRAUERT_DEFAULT_DATA_DIR ""
#endif

namespace grauert {

namespace {

using json = nlohmann::json;

constexpr std::array<std::pair<CartanLabel, const char*>, 29> kLabelNames{{
    {CartanLabel::AI, "AI"},     {CartanLabel::AII, "AII"},   {CartanLabel::AIII, "AIII"},
    {CartanLabel::BDI, "BDI"},   {CartanLabel::DIII, "DIII"}, {CartanLabel::CI, "CI"},
    {CartanLabel::CII, "CII"},   {CartanLabel::EI, "EI"},     {CartanLabel::EII, "EII"},
    {CartanLabel::EIII, "EIII"}, {CartanLabel::EIV, "EIV"},   {CartanLabel::EV, "EV"},
    {CartanLabel::EVI, "EVI"},   {CartanLabel::EVII, "EVII"}, {CartanLabel::EVIII, "EVIII"},
    {CartanLabel::EIX, "EIX"},   {CartanLabel::FI, "FI"},     {CartanLabel::FII, "FII"},
    {CartanLabel::G, "G"},       {CartanLabel::cA, "cA"},     {CartanLabel::cB, "cB"},
    {CartanLabel::cC, "cC"},     {CartanLabel::cD, "cD"},     {CartanLabel::cE6, "cE6"},
    {CartanLabel::cE7, "cE7"},   {CartanLabel::cE8, "cE8"},   {CartanLabel::cF4, "cF4"},
    {CartanLabel::cG2, "cG2"},   {CartanLabel::Product, "product"},
}};

std::optional<int> lookup_param(const std::vector<std::pair<std::string, int>>& params, const std::string& name) {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  return std::nullopt;
}

// "2*p", "p", "3": product of integer literals and parameter names.
std::optional<int> eval_expr(const std::string& expr, const std::vector<std::pair<std::string, int>>& params) {
  int value = 1;
  std::size_t start = 0;
  while (start <= expr.size()) {
    auto star = expr.find('*', start);
    std::string term = expr.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (term.empty()) return std::nullopt;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      value *= std::stoi(term);
    } else {
      auto v = lookup_param(params, term);
      if (!v) return std::nullopt;
      value *= *v;
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return value;
}

std::string substitute(const std::string& pattern, const std::vector<std::pair<std::string, int>>& params) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '{') {
      out += pattern[i];
      continue;
    }
    auto close = pattern.find('}', i);
    auto v = eval_expr(pattern.substr(i + 1, close - i - 1), params);
    out += v ? std::to_string(*v) : "?";
    i = close;
  }
  return out;
}

// Whitespace, underscores and unicode letter forms dropped so that display aliases compare loosely.
std::string normalize_alias(std::string s) {
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  };
  replace_all("\xC3\x97", "x");      // multiplication sign
  replace_all("\xE2\x84\x9D", "R");  // double-struck R
  replace_all("\xE2\x84\x82", "C");  // double-struck C
  replace_all("\\times", "x");
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') out += c;
  return out;
}

std::string regex_escape(const std::string& s) {
  static const std::string special = R"(\^$.|?*+()[]{})";
  std::string out;
  for (char c : s) {
    if (special.find(c) != std::string::npos) out += '\\';
    out += c;
  }
  return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (std::tolower(a[i - 1]) == std::tolower(b[j - 1]) ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("malformed JSON in " + path.string() + ": " + e.what());
  }
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw DataError("schema_version mismatch in " + path.string() + ": expected " +
                    std::to_string(kSchemaVersion));
  return j;
}

CartanLabel label_from_json(const json& j) {
  auto l = parse_cartan_label(j.get<std::string>());
  if (!l) throw DataError("unknown Cartan label '" + j.get<std::string>() + "' in data");
  return *l;
}

SpaceTemplate template_from_json(const json& j) {
  SpaceTemplate t;
  t.any_hermitian = j.value("any_hermitian", false);
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) t.labels.push_back(label_from_json(l));
  if (j.contains("guards"))
    for (const auto& g : j["guards"]) t.guards.push_back(Guard::parse(g.get<std::string>()));
  return t;
}

EnvelopeTemplate envelope_from_json(const json& j) {
  EnvelopeTemplate e;
  e.product = j.value("product", false);
  if (j.contains("label")) e.label = label_from_json(j["label"]);
  if (j.contains("params"))
    for (const auto& [k, v] : j["params"].items()) e.params.emplace_back(k, v.get<std::string>());
  return e;
}

}  // namespace

std::string to_string(CartanLabel l) {
  for (const auto& [k, name] : kLabelNames)
    if (k == l) return name;
  return "?";
}

std::optional<CartanLabel> parse_cartan_label(const std::string& s) {
  for (const auto& [k, name] : kLabelNames)
    if (s == name) return k;
  return std::nullopt;
}

bool is_classical(CartanLabel l) {
  switch (l) {
    case CartanLabel::AI: case CartanLabel::AII: case CartanLabel::AIII: case CartanLabel::BDI:
    case CartanLabel::DIII: case CartanLabel::CI: case CartanLabel::CII: case CartanLabel::cA:
    case CartanLabel::cB: case CartanLabel::cC: case CartanLabel::cD:
      return true;
    default:
      return false;
  }
}

std::string SpaceDescriptor::label() const {
  if (cartan_label == CartanLabel::Product) return "product(" + factor + ")";
  std::string s = to_string(cartan_label);
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i == 0 ? ":" : ",") + params[i].first + "=" + std::to_string(params[i].second);
  return s;
}

int SpaceDescriptor::param(const std::string& name) const {
  auto v = lookup_param(params, name);
  if (!v) throw InvalidArgument(label() + " has no parameter '" + name + "'");
  return *v;
}

Guard Guard::parse(const std::string& text) {
  for (const char* op : {">=", "<=", "!=", ">", "<", "="}) {
    auto pos = text.find(op);
    if (pos == std::string::npos || pos == 0) continue;
    Guard g{text.substr(0, pos), op, text.substr(pos + std::string(op).size())};
    if (g.rhs.empty()) break;
    return g;
  }
  throw DataError("malformed guard '" + text + "'");
}

bool Guard::holds(const SpaceDescriptor& s) const {
  auto l = lookup_param(s.params, lhs);
  auto r = eval_expr(rhs, s.params);
  if (!l || !r) return false;
  if (op == ">=") return *l >= *r;
  if (op == "<=") return *l <= *r;
  if (op == "!=") return *l != *r;
  if (op == ">") return *l > *r;
  if (op == "<") return *l < *r;
  return *l == *r;
}

bool SpaceTemplate::matches(const SpaceDescriptor& s) const {
  if (any_hermitian) return s.hermitian && s.cartan_label != CartanLabel::Product;
  if (std::find(labels.begin(), labels.end(), s.cartan_label) == labels.end()) return false;
  return std::all_of(guards.begin(), guards.end(), [&](const Guard& g) { return g.holds(s); });
}

std::string EnvelopeTemplate::instantiate(const SpaceDescriptor& real_form) const {
  if (product) return "product(" + real_form.label() + ")";
  std::string s = to_string(label);
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto v = eval_expr(params[i].second, real_form.params);
    if (!v) throw DataError("envelope parameter '" + params[i].second + "' undefined for " + real_form.label());
    s += (i == 0 ? ":" : ",") + params[i].first + "=" + std::to_string(*v);
  }
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::rigid: return "rigid";
    case Verdict::product: return "product";
    case Verdict::envelope: return "envelope";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "rigid") return Verdict::rigid;
  if (s == "product") return Verdict::product;
  if (s == "envelope") return Verdict::envelope;
  throw DataError("unknown verdict '" + s + "'");
}

namespace {

struct ClassicalShape {
  Family family;
  int rank;
  std::map<Rational, int> mult;  // squared root length -> multiplicity
  int dim;
  bool hermitian;
};

// Restricted roots of the classical families in the standard B/C/BC/D frames.
ClassicalShape classical_shape(CartanLabel l, const std::vector<std::pair<std::string, int>>& params) {
  auto get = [&](const char* n) { return *lookup_param(params, n); };
  switch (l) {
    case CartanLabel::AI: {
      int n = get("n");
      return {Family::A, n - 1, {{2, 1}}, n * (n + 1) / 2 - 1, n == 2};
    }
    case CartanLabel::AII: {
      int n = get("n");
      return {Family::A, n - 1, {{2, 4}}, (n - 1) * (2 * n + 1), false};
    }
    case CartanLabel::AIII: {
      int p = get("p"), q = get("q"), r = std::min(p, q);
      if (p == q) return {Family::C, r, {{2, 2}, {4, 1}}, 2 * p * q, true};
      return {Family::BC, r, {{1, 2 * std::abs(p - q)}, {2, 2}, {4, 1}}, 2 * p * q, true};
    }
    case CartanLabel::BDI: {
      int p = get("p"), q = get("q");
      bool herm = q == 2 || (p == 2 && q == 1);
      if (p == q) return {Family::D, q, {{2, 1}}, p * q, herm};
      return {Family::B, q, {{1, p - q}, {2, 1}}, p * q, herm};
    }
    case CartanLabel::DIII: {
      int n = get("n"), r = n / 2;
      if (n % 2 == 0) return {Family::C, r, {{2, 4}, {4, 1}}, n * (n - 1), true};
      return {Family::BC, r, {{1, 4}, {2, 4}, {4, 1}}, n * (n - 1), true};
    }
    case CartanLabel::CI: {
      int n = get("n");
      return {Family::C, n, {{2, 1}, {4, 1}}, n * (n + 1), true};
    }
    case CartanLabel::CII: {
      int p = get("p"), q = get("q"), r = std::min(p, q);
      if (p == q) return {Family::C, r, {{2, 4}, {4, 3}}, 4 * p * q, false};
      return {Family::BC, r, {{1, 4 * std::abs(p - q)}, {2, 4}, {4, 3}}, 4 * p * q, false};
    }
    case CartanLabel::cA: {
      int n = get("n");
      return {Family::A, n - 1, {{2, 2}}, n * n - 1, false};
    }
    case CartanLabel::cB: {
      int n = get("n");
      return {Family::B, (n - 1) / 2, {{1, 2}, {2, 2}}, n * (n - 1) / 2, false};
    }
    case CartanLabel::cD: {
      int n = get("n");
      return {Family::D, n / 2, {{2, 2}}, n * (n - 1) / 2, false};
    }
    case CartanLabel::cC: {
      int n = get("n");
      return {Family::C, n, {{2, 2}, {4, 2}}, n * (2 * n + 1), false};
    }
    default:
      throw InvalidArgument(to_string(l) + " is not a classical family");
  }
}

RootSystem attach(const RootSystem& rs, const std::map<Rational, int>& mult) {
  return rs.with_multiplicities([&](const Rational& n2) {
    auto it = mult.find(n2);
    return it == mult.end() ? 0 : it->second;
  });
}

}  // namespace

Catalog Catalog::load(const std::filesystem::path& data_dir) {
  Catalog c;
  auto cat = read_json(data_dir / "catalog.json");
  try {
    for (const auto& e : cat.at("classical")) {
      ClassicalEntry ce{label_from_json(e.at("label")), {}, e.at("display").get<std::string>(), {}, ""};
      for (const auto& p : e.at("params")) ce.params.push_back(p.get<std::string>());
      for (const auto& g : e.at("guards")) ce.guards.push_back(Guard::parse(g.get<std::string>()));
      c.classical_.push_back(std::move(ce));
    }
    for (const auto& e : cat.at("exceptional")) {
      ExceptionalEntry ee;
      ee.label = label_from_json(e.at("label"));
      ee.display = e.at("display").get<std::string>();
      for (const auto& a : e.at("aliases")) ee.aliases.push_back(a.get<std::string>());
      ee.family = parse_family(e.at("family").get<std::string>());
      ee.rank = e.at("rank").get<int>();
      ee.dim = e.at("dim").get<int>();
      ee.hermitian = e.at("hermitian").get<bool>();
      for (const auto& [k, v] : e.at("multiplicities").items()) ee.multiplicities[parse_rational(k)] = v.get<int>();
      c.exceptional_.push_back(std::move(ee));
    }
    auto pairs = read_json(data_dir / "jaffee_pairs.json");
    for (const auto& p : pairs.at("pairs"))
      c.pairs_.push_back({template_from_json(p.at("real_form")), envelope_from_json(p.at("envelope")),
                          p.at("source").get<std::string>(), p.value("note", "")});
    auto table = read_json(data_dir / "golden_table.json");
    for (const auto& r : table.at("rows")) {
      GoldenTableRow row;
      row.space_text = r.at("space").get<std::string>();
      row.space = template_from_json(r.at("template"));
      row.verdict = parse_verdict(r.at("verdict").get<std::string>());
      if (row.verdict == Verdict::envelope) {
        row.envelope_text = r.at("envelope").get<std::string>();
        row.envelope = envelope_from_json(r.at("envelope_template"));
      }
      c.table_.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed catalog data: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("malformed catalog data: ") + e.what());
  }
  return c;
}

std::filesystem::path Catalog::default_data_dir() {
  if (const char* env = std::getenv("GRAUERT_DATA_DIR"); env && *env) return env;
  std::filesystem::path src = GRAUERT_SOURCE_DATA_DIR;
  if (!src.empty() && std::filesystem::exists(src / "catalog.json")) return src;
  return GRAUERT_DEFAULT_DATA_DIR;
}

const Catalog& Catalog::instance() {
  static const Catalog c = load(default_data_dir());
  return c;
}

SpaceDescriptor Catalog::make_classical(const ClassicalEntry& e, std::vector<std::pair<std::string, int>> given) const {
  const std::string name = to_string(e.label);
  std::vector<std::pair<std::string, int>> params;
  for (const auto& p : e.params) {
    auto v = lookup_param(given, p);
    if (!v) throw InvalidArgument(name + " requires parameter '" + p + "'");
    params.emplace_back(p, *v);
  }
  for (const auto& [k, v] : given)
    if (std::find(e.params.begin(), e.params.end(), k) == e.params.end())
      throw InvalidArgument(name + " has no parameter '" + k + "'");
  if (e.label == CartanLabel::BDI && params[0].second < params[1].second)
    std::swap(params[0].second, params[1].second);

  SpaceDescriptor probe{e.label, params, "", 0, 0, false, ""};
  for (const auto& g : e.guards)
    if (!g.holds(probe)) throw InvalidArgument("parameter out of range: " + name + " needs " + g.text());
  if (e.label == CartanLabel::BDI) {
    int p = params[0].second, q = params[1].second;
    if (p + q < 3) throw InvalidArgument("parameter out of range: BDI needs p+q>=3");
    if (p == 2 && q == 2) throw InvalidArgument("BDI:p=2,q=2 is reducible");
  }
  if (e.label == CartanLabel::cB && params[0].second % 2 == 0)
    throw InvalidArgument("parameter out of range: cB needs odd n");
  if (e.label == CartanLabel::cD && params[0].second % 2 != 0)
    throw InvalidArgument("parameter out of range: cD needs even n");

  auto shape = classical_shape(e.label, params);
  return {e.label, params, substitute(e.display, params), shape.rank, shape.dim, shape.hermitian, ""};
}

SpaceDescriptor Catalog::make_exceptional(const ExceptionalEntry& e) const {
  return {e.label, {}, e.display, e.rank, e.dim, e.hermitian, ""};
}

std::optional<SpaceDescriptor> Catalog::lookup_alias(const std::string& text) const {
  const std::string norm = normalize_alias(text);
  for (const auto& e : exceptional_) {
    if (normalize_alias(e.display) == norm) return make_exceptional(e);
    for (const auto& a : e.aliases)
      if (normalize_alias(a) == norm) return make_exceptional(e);
  }
  for (const auto& e : classical_) {
    std::string pattern = normalize_alias(e.display);
    std::vector<std::string> exprs;
    std::string re;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] == '{') {
        auto close = pattern.find('}', i);
        exprs.push_back(pattern.substr(i + 1, close - i - 1));
        re += "([0-9]+)";
        i = close;
      } else {
        re += regex_escape(std::string(1, pattern[i]));
      }
    }
    std::smatch m;
    if (!std::regex_match(norm, m, std::regex(re))) continue;
    std::vector<std::pair<std::string, int>> params;
    bool consistent = true;
    for (std::size_t k = 0; k < exprs.size() && consistent; ++k) {
      int value = std::stoi(m[k + 1].str());
      std::string var = exprs[k];
      int factor = 1;
      if (auto star = var.find('*'); star != std::string::npos) {
        factor = std::stoi(var.substr(0, star));
        var = var.substr(star + 1);
      }
      if (value % factor != 0) {
        consistent = false;
        break;
      }
      value /= factor;
      if (auto prev = lookup_param(params, var)) {
        consistent = *prev == value;
      } else {
        params.emplace_back(var, value);
      }
    }
    if (!consistent) continue;
    try {
      return make_classical(e, params);
    } catch (const InvalidArgument&) {
      // same display pattern may belong to another family (SO(n,C) is cB or cD)
    }
  }
  return std::nullopt;
}

SpaceDescriptor Catalog::lookup(const std::string& raw) const {
  std::string label = raw;
  while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.erase(0, 1);
  while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
  if (label.rfind("product(", 0) == 0 && label.back() == ')')
    return product_descriptor(lookup(label.substr(8, label.size() - 9)));

  static const std::regex grammar(R"(^([A-Za-z0-9]+)(?::([a-z]+=-?[0-9]+(?:,[a-z]+=-?[0-9]+)*))?$)");
  std::smatch m;
  if (std::regex_match(label, m, grammar)) {
    auto cl = parse_cartan_label(m[1].str());
    if (cl && *cl != CartanLabel::Product) {
      std::vector<std::pair<std::string, int>> params;
      std::string rest = m[2].str();
      static const std::regex kv(R"(([a-z]+)=(-?[0-9]+))");
      for (auto it = std::sregex_iterator(rest.begin(), rest.end(), kv); it != std::sregex_iterator(); ++it) {
        std::string k = (*it)[1].str();
        if (lookup_param(params, k)) throw InvalidArgument("parameter '" + k + "' given twice in '" + label + "'");
        params.emplace_back(k, std::stoi((*it)[2].str()));
      }
      for (const auto& e : classical_)
        if (e.label == *cl) return make_classical(e, params);
      for (const auto& e : exceptional_)
        if (e.label == *cl) {
          if (!params.empty()) throw InvalidArgument(m[1].str() + " takes no parameters");
          return make_exceptional(e);
        }
    }
  }
  if (auto alias = lookup_alias(label)) return *alias;

  std::string msg = "unknown space '" + label + "'";
  auto sugg = suggestions(label);
  if (!sugg.empty()) {
    msg += "; did you mean";
    for (std::size_t i = 0; i < sugg.size(); ++i) msg += (i ? ", " : " ") + sugg[i];
    msg += "?";
  }
  throw InvalidArgument(msg);
}

SpaceDescriptor Catalog::product_descriptor(const SpaceDescriptor& m) const {
  if (m.cartan_label == CartanLabel::Product) throw InvalidArgument("nested product spaces are not supported");
  return {CartanLabel::Product, {}, m.display_name + " x conj(" + m.display_name + ")",
          2 * m.rank, 2 * m.dim, true, m.label()};
}

RestrictedRootDatum Catalog::restricted_datum(const SpaceDescriptor& space) const {
  RestrictedRootDatum d;
  d.space = space;
  if (space.cartan_label == CartanLabel::Product) {
    auto f = restricted_datum(lookup(space.factor));
    const auto& rs = f.root_system;
    const int n = rs.ambient_dim();
    std::vector<Root> roots;
    for (int side = 0; side < 2; ++side)
      for (const auto& r : rs.roots()) {
        RationalVector v(2 * n, Rational(0));
        std::copy(r.vector.coords.begin(), r.vector.coords.end(), v.begin() + side * n);
        roots.push_back({{v}, r.multiplicity});
      }
    d.root_system = RootSystem::from_roots(rs.family(), 2 * rs.rank(), 2 * n, std::move(roots));
    d.metric_scale = f.metric_scale;
    d.metric_convention = f.metric_convention;
    return d;
  }
  if (is_classical(space.cartan_label)) {
    auto shape = classical_shape(space.cartan_label, space.params);
    d.root_system = attach(build_root_system(shape.family, shape.rank), shape.mult);
  } else {
    auto it = std::find_if(exceptional_.begin(), exceptional_.end(),
                           [&](const ExceptionalEntry& e) { return e.label == space.cartan_label; });
    if (it == exceptional_.end()) throw InvalidArgument("no data for " + space.label());
    d.root_system = attach(build_root_system(it->family, it->rank), it->multiplicities);
  }
  const auto& rs = d.root_system;
  if (rs.rank() == 1) {
    d.metric_scale = rs.max_norm2();
    d.metric_convention = "curvature";
  } else {
    const auto& h = rs.roots().front().vector;
    d.metric_scale = rs.killing_form(h.coords) / h.norm2();
    d.metric_convention = "killing";
  }
  return d;
}

std::vector<SpaceDescriptor> Catalog::instantiate(const SpaceTemplate& t, const ParameterGrid& grid) const {
  std::vector<SpaceDescriptor> out;
  std::set<std::string> seen;
  auto push = [&](SpaceDescriptor s) {
    if (t.matches(s) && seen.insert(s.label()).second) out.push_back(std::move(s));
  };
  auto wanted = [&](CartanLabel l) {
    return t.any_hermitian || std::find(t.labels.begin(), t.labels.end(), l) != t.labels.end();
  };
  for (const auto& e : classical_) {
    if (!wanted(e.label)) continue;
    std::vector<std::pair<std::string, int>> params;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == e.params.size()) {
        try {
          push(make_classical(e, params));
        } catch (const InvalidArgument&) {
        }
        return;
      }
      const int hi = e.params[i] == "n" ? grid.max_n : grid.max_pq;
      for (int v = 1; v <= hi; ++v) {
        params.emplace_back(e.params[i], v);
        rec(i + 1);
        params.pop_back();
      }
    };
    rec(0);
  }
  for (const auto& e : exceptional_)
    if (wanted(e.label)) push(make_exceptional(e));
  return out;
}

std::vector<SpaceDescriptor> Catalog::all_spaces(const ParameterGrid& grid) const {
  SpaceTemplate t;
  for (const auto& e : classical_) t.labels.push_back(e.label);
  for (const auto& e : exceptional_) t.labels.push_back(e.label);
  return instantiate(t, grid);
}

std::vector<std::string> Catalog::label_forms() const {
  std::vector<std::string> out;
  for (const auto& e : classical_) {
    std::string s = to_string(e.label);
    for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? "," : ":") + e.params[i] + "=<int>";
    out.push_back(s);
  }
  for (const auto& e : exceptional_) out.push_back(to_string(e.label));
  return out;
}

std::vector<std::string> Catalog::suggestions(const std::string& bad_label) const {
  std::string head = bad_label.substr(0, bad_label.find_first_of(":("));
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& form : label_forms()) {
    std::string name = form.substr(0, form.find(':'));
    scored.emplace_back(edit_distance(head, name), form);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (const auto& [d, form] : scored)
    if (d <= 2 && out.size() < 3) out.push_back(form);
  return out;
}

}  // namespace grauert
