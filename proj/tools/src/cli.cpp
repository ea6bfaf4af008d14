#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "grauert/adapted.hpp"
#include "grauert/domain.hpp"
#include "grauert/error.hpp"
#include "grauert/hermitian.hpp"
#include "grauert/matrix_oracle.hpp"
#include "grauert/psh.hpp"
#include "grauert/serialize.hpp"

namespace grauert::cli {

namespace {

struct Options {
  std::string space;
  std::string format = "json";
  std::string out;
  std::string data_dir;
  std::string direction;
  std::uint64_t seed = 0;
  int samples = -1;
  double tol = -1;
  int jobs = 0;
  bool check = false;
};

struct Report {
  Json json;
  std::string text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int status = kExitOk;
};

// 12 significant digits.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json num(double x) { return Json::parse(fmt(x)); }

Json nums(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

std::string vec_text(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string pi_vec_text(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(PiRational{v[i]});
  return s + ")";
}

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << r.json.dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    };
    line(r.csv_header);
    for (const auto& row : r.csv_rows) line(row);
  } else {
    os << r.text;
  }
}

class Context {
 public:
  explicit Context(const Options& o) : opt(o) {
    if (!o.data_dir.empty()) owned_ = std::make_unique<Catalog>(Catalog::load(o.data_dir));
  }
  const Catalog& catalog() const { return owned_ ? *owned_ : Catalog::instance(); }
  SpaceDescriptor space() const {
    if (opt.space.empty()) throw InvalidArgument("--space is required for this command");
    return catalog().lookup(opt.space);
  }
  int samples(int fallback) const { return opt.samples >= 0 ? opt.samples : fallback; }
  double tol(double fallback) const { return opt.tol >= 0 ? opt.tol : fallback; }
  unsigned jobs() const {
    if (opt.jobs > 0) return static_cast<unsigned>(opt.jobs);
    return std::max(1u, std::thread::hardware_concurrency());
  }

  const Options& opt;

 private:
  std::unique_ptr<Catalog> owned_;
};

// Runs f(i) for i < n on a pool; results are stored by index, so ordering is deterministic.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::min<std::size_t>(jobs, n); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Report cmd_info(const Context& ctx) {
  const auto s = ctx.space();
  const auto d = ctx.catalog().restricted_datum(s);
  const auto& rs = d.root_system;
  Report r;
  r.json["space"] = s.label();
  r.json["display_name"] = s.display_name;
  r.json["rank"] = s.rank;
  r.json["dim"] = s.dim;
  r.json["hermitian"] = s.hermitian;
  r.json["metric_scale"] = to_string(d.metric_scale);
  r.json["metric_convention"] = d.metric_convention;
  r.json["r_max"] = to_string(max_tube_radius(d));
  r.json["positive_roots"] = rs.positive_roots().size();
  r.json["root_system"] = to_json(rs);

  std::ostringstream t;
  t << "space: " << s.label() << "\n"
    << "display name: " << s.display_name << "\n"
    << "rank: " << s.rank << "\n"
    << "dimension: " << s.dim << "\n"
    << "hermitian: " << (s.hermitian ? "yes" : "no") << "\n"
    << "root system: " << to_string(rs.family()) << s.rank << " in " << rs.frame_name() << "\n"
    << "metric: " << d.metric_convention << ", scale " << to_string(d.metric_scale) << "\n"
    << "r_max: " << to_string(max_tube_radius(d)) << "\n"
    << "positive roots:\n";
  r.csv_header = {"root", "multiplicity", "norm2"};
  for (const auto& root : rs.positive_roots()) {
    t << "  " << vec_text(root.vector.coords) << " x" << root.multiplicity << "\n";
    r.csv_rows.push_back({vec_text(root.vector.coords), std::to_string(root.multiplicity), to_string(root.vector.norm2())});
  }
  r.text = t.str();
  return r;
}

Report cmd_omega(const Context& ctx) {
  const auto s = ctx.space();
  const auto p = omega_polytope(ctx.catalog().restricted_datum(s));
  Report r;
  r.json["space"] = s.label();
  r.json["polytope"] = to_json(p);
  std::ostringstream t;
  t << "omega(" << s.label() << "): " << p.halfspaces.size() << " constraints |alpha(H)| <= pi/2\n";
  for (const auto& h : p.halfspaces) t << "  alpha = " << vec_text(h.coords) << "\n";
  r.csv_header = {"vertex"};
  for (int i = 0; i < p.ambient_dim; ++i) r.csv_header.push_back("x" + std::to_string(i + 1));
  if (p.vertices_available) {
    t << p.vertices.size() << " vertices:\n";
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
      t << "  " << pi_vec_text(p.vertices[k]) << "\n";
      std::vector<std::string> row{std::to_string(k)};
      for (const auto& x : p.vertices[k]) row.push_back(to_string(PiRational{x}));
      r.csv_rows.push_back(std::move(row));
    }
  } else {
    t << "vertices: not enumerated above rank " << kMaxVertexRank << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_radius(const Context& ctx) {
  const auto s = ctx.space();
  const auto d = ctx.catalog().restricted_datum(s);
  Report r;
  r.json["space"] = s.label();
  r.json["r_max"] = to_string(max_tube_radius(d));
  r.json["metric_convention"] = d.metric_convention;
  r.json["metric_scale"] = to_string(d.metric_scale);
  std::ostringstream t;
  t << s.label() << ": r_max = " << to_string(max_tube_radius(d)) << " (" << d.metric_convention << " metric)\n";
  r.csv_header = {"space", "r_max", "metric_convention"};
  r.csv_rows.push_back({s.label(), to_string(max_tube_radius(d)), d.metric_convention});
  if (!ctx.opt.direction.empty()) {
    const auto h = parse_rational_list(ctx.opt.direction);
    const auto sstar = boundary_parameter(d, h);
    r.json["direction"] = vec_text(h);
    r.json["boundary_parameter"] = to_string(sstar);
    t << "boundary parameter along " << vec_text(h) << ": " << to_string(sstar) << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_classify(const Context& ctx) {
  const auto& cat = ctx.catalog();
  const auto s = ctx.space();
  const auto c = classify(cat, s);
  Report r;
  r.json = to_json(c, cat);
  std::ostringstream t;
  t << s.label() << ": " << to_string(c.verdict);
  if (c.envelope_space) t << " " << c.envelope_space->label();
  t << "\n";
  for (const auto& e : c.evidence)
    t << "  pair " << e.pair_index << " -> " << (e.envelope.empty() ? "-" : e.envelope) << ": "
      << (e.applicable ? (e.passes ? "passes" : "fails") : "not applicable") << " (" << e.reason << ")\n";
  for (const auto& m : c.remarks) t << "  remark: " << m << "\n";

  if (ctx.opt.check && c.verdict != Verdict::rigid) {
    const auto target = c.envelope_space ? *c.envelope_space : cat.product_descriptor(s);
    try {
      const auto res = theorem7_check(cat, embedding_map(cat, s, target));
      r.json["theorem7"] = to_json(res);
      t << "  vertex check against " << target.label() << ": " << (res.holds ? "equal" : "different") << "\n";
      if (!res.holds) r.status = kExitVerification;
    } catch (const Unsupported& e) {
      r.json["theorem7"] = {{"unsupported", e.what()}};
      t << "  vertex check: unsupported (" << e.what() << ")\n";
    }
  }
  r.text = t.str();
  r.csv_header = {"space", "verdict", "envelope"};
  r.csv_rows.push_back({s.label(), to_string(c.verdict), c.envelope_space ? c.envelope_space->label() : ""});
  return r;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

Report cmd_table(const Context& ctx) {
  const auto& cat = ctx.catalog();
  const auto rep = reproduce_golden_table(cat);
  const auto& table = cat.paper_table();
  Report r;
  r.json["rows"] = Json::array();
  r.csv_header = {"row", "space", "verdict", "envelope", "instances", "ok"};
  std::ostringstream t;
  t << rtrim(pad("#", 4) + pad("space", 42) + pad("verdict", 10) + "envelope") << "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::size_t count = 0;
    for (const auto& inst : rep.instances) count += inst.row == i ? 1 : 0;
    const bool ok = rep.row_ok[i];
    const std::string verdict = ok ? to_string(table[i].verdict) : "MISMATCH";
    Json row{{"row", i}, {"space", table[i].space_text}, {"verdict", verdict}};
    if (table[i].envelope) row["envelope"] = table[i].envelope_text;
    row["instances"] = count;
    row["ok"] = ok;
    r.json["rows"].push_back(std::move(row));
    r.csv_rows.push_back({std::to_string(i), table[i].space_text, verdict, table[i].envelope_text, std::to_string(count),
                          ok ? "true" : "false"});
    t << rtrim(pad(std::to_string(i), 4) + pad(table[i].space_text, 42) + pad(verdict, 10) + table[i].envelope_text)
      << "\n";
  }
  Json mism = Json::array();
  for (const auto& inst : rep.instances)
    if (!inst.match)
      mism.push_back({{"row", inst.row},
                      {"space", inst.space},
                      {"expected", to_string(inst.expected)},
                      {"got", to_string(inst.got)},
                      {"expected_envelope", inst.expected_envelope},
                      {"got_envelope", inst.got_envelope}});
  r.json["instances"] = rep.instances.size();
  r.json["mismatches"] = std::move(mism);
  if (rep.mismatches() > 0) r.status = kExitVerification;
  r.text = t.str();
  return r;
}

Report cmd_adapted(const Context& ctx) {
  const auto s = ctx.space();
  const auto d = ctx.catalog().restricted_datum(s);
  const RationalVector h =
      ctx.opt.direction.empty() ? d.root_system.roots().front().vector.coords : parse_rational_list(ctx.opt.direction);
  const auto spec = jacobi_spectrum(d, h);
  const auto sstar = boundary_parameter(d, h);
  const auto poles = singular_parameters(d, h, PiRational{sstar.coeff * 2});
  const int n = std::max(2, ctx.samples(20));
  const double tol = ctx.tol(1e-10);

  Report r;
  r.json["space"] = s.label();
  r.json["direction"] = vec_text(h);
  Json sp = Json::array();
  for (const auto& e : spec.eigenvalues) sp.push_back({{"value", num(e.value)}, {"multiplicity", e.multiplicity}});
  r.json["jacobi_spectrum"] = std::move(sp);
  r.json["boundary_parameter"] = to_string(sstar);
  Json pj = Json::array();
  for (const auto& p : poles) {
    Json roots = Json::array();
    for (const auto& root : p.roots) roots.push_back(vec_text(root.coords));
    pj.push_back({{"s", to_string(p.s)}, {"roots", std::move(roots)}});
  }
  r.json["singular_parameters"] = std::move(pj);

  // Residual of J^2 = -I relative to |J|^2; entries blow up near the poles.
  r.csv_header = {"lambda", "t", "s", "j11", "j12", "j21", "j22", "residual"};
  double worst = 0;
  Json failures = Json::array();
  const double s_max = sstar.value();
  for (const auto& e : spec.eigenvalues) {
    const double lambda = std::sqrt(-e.value);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double t = -1 + 2.0 * i / (n - 1);
        const double sv = s_max * (j + 0.5) / n;
        try {
          const auto b = adapted_block(lambda, {t, sv});
          const auto& m = b.matrix;
          const double res = std::max({std::abs(m[0][0] * m[0][0] + m[0][1] * m[1][0] + 1),
                                       std::abs(m[0][0] * m[0][1] + m[0][1] * m[1][1]),
                                       std::abs(m[1][0] * m[0][0] + m[1][1] * m[1][0]),
                                       std::abs(m[1][0] * m[0][1] + m[1][1] * m[1][1] + 1)}) /
                           std::max(1.0, m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1]);
          worst = std::max(worst, res);
          if (res > tol) failures.push_back({{"lambda", num(lambda)}, {"t", num(t)}, {"s", num(sv)}, {"residual", num(res)}});
          r.csv_rows.push_back({fmt(lambda), fmt(t), fmt(sv), fmt(m[0][0]), fmt(m[0][1]), fmt(m[1][0]), fmt(m[1][1]), fmt(res)});
        } catch (const SingularPointError&) {
          failures.push_back({{"lambda", num(lambda)}, {"t", num(t)}, {"s", num(sv)}, {"error", "singular"}});
        }
      }
  }
  r.json["grid"] = {{"points_per_eigenvalue", n * n}, {"max_residual", num(worst)}, {"tolerance", num(tol)}};
  r.json["failures"] = failures;
  if (!failures.empty()) r.status = kExitVerification;

  std::ostringstream t;
  t << s.label() << " along H = " << vec_text(h) << "\n"
    << "jacobi spectrum:";
  for (const auto& e : spec.eigenvalues) t << " " << fmt(e.value) << " (x" << e.multiplicity << ")";
  t << "\nboundary parameter: " << to_string(sstar) << "\nsingular parameters up to " << to_string(PiRational{sstar.coeff * 2})
    << ":";
  for (const auto& p : poles) t << " " << to_string(p.s);
  t << "\nJ^2 = -I on " << n * n << " points per eigenvalue: max residual " << fmt(worst) << ", " << failures.size()
    << " failures\n";
  r.text = t.str();
  return r;
}

struct PointResult {
  std::vector<double> point;
  bool non_regular = false;
  PdCertificate hessian;
  bool levi_done = false;
  PdCertificate levi;
  double cross_residual = 0;
};

Report cmd_psh_check(const Context& ctx) {
  const auto& cat = ctx.catalog();
  const auto s = ctx.space();
  const auto d = cat.restricted_datum(s);
  const int samples = ctx.samples(100);
  const double tol = ctx.tol(0.0);

  std::unique_ptr<MatrixAlgebra> alg;
  std::string levi_note;
  try {
    alg = std::make_unique<MatrixAlgebra>(realize(cat, s));
  } catch (const Unsupported& e) {
    levi_note = e.what();
  }

  // Points are drawn sequentially so the sample set depends only on the seed.
  std::mt19937_64 rng(ctx.opt.seed);
  std::vector<std::vector<double>> points;
  std::vector<bool> walls;
  for (int i = 0; i < samples; ++i) {
    walls.push_back(i % 10 == 0);
    points.push_back(interior_point(d, rng, 0.9, walls.back()));
  }
  std::vector<std::vector<double>> rays;
  for (int i = 0; i < 20; ++i) rays.push_back(interior_point(d, rng, 1.0, false));

  const auto results = parallel_map<PointResult>(points.size(), ctx.jobs(), [&](std::size_t i) {
    PointResult pr;
    pr.point = points[i];
    pr.non_regular = walls[i];
    pr.hessian = certify_pd(hessian_u(d, points[i]));
    if (alg) {
      const auto l = levi_matrix(*alg, points[i]);
      pr.levi_done = true;
      pr.levi = l.certificate;
      pr.cross_residual = l.cross_residual;
    }
    return pr;
  });

  Report r;
  Json failures = Json::array();
  double min_h = INFINITY, min_l = INFINITY, cross = 0;
  r.csv_header = {"index", "non_regular", "hessian_min_eigenvalue", "levi_min_eigenvalue", "cross_residual"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& pr = results[i];
    min_h = std::min(min_h, pr.hessian.min_eigenvalue);
    if (!pr.hessian.positive_definite || pr.hessian.min_eigenvalue <= tol)
      failures.push_back({{"kind", "hessian"}, {"index", i}, {"point", nums(pr.point)}, {"min_eigenvalue", num(pr.hessian.min_eigenvalue)}});
    if (pr.levi_done) {
      min_l = std::min(min_l, pr.levi.min_eigenvalue);
      cross = std::max(cross, pr.cross_residual);
      if (!pr.levi.positive_definite || pr.levi.min_eigenvalue <= tol)
        failures.push_back({{"kind", "levi"}, {"index", i}, {"point", nums(pr.point)}, {"min_eigenvalue", num(pr.levi.min_eigenvalue)}});
    }
    r.csv_rows.push_back({std::to_string(i), pr.non_regular ? "true" : "false", fmt(pr.hessian.min_eigenvalue),
                          pr.levi_done ? fmt(pr.levi.min_eigenvalue) : "", pr.levi_done ? fmt(pr.cross_residual) : ""});
  }
  int diverged = 0, monotone = 0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto ray = exhaustion_ray(d, rays[i]);
    diverged += ray.diverges;
    monotone += ray.monotone;
    if (!ray.diverges || !ray.monotone)
      failures.push_back({{"kind", "exhaustion"}, {"index", i}, {"direction", nums(rays[i])}, {"u_last", num(ray.values.back())}});
  }

  int non_regular = 0;
  for (bool w : walls) non_regular += w;
  r.json["space"] = s.label();
  r.json["samples"] = samples;
  r.json["seed"] = ctx.opt.seed;
  r.json["non_regular_samples"] = non_regular;
  const double overall = std::min(min_h, min_l);
  r.json["min_eigenvalue_overall"] = samples ? num(overall) : Json(nullptr);
  r.json["hessian"] = {{"min_eigenvalue", samples ? num(min_h) : Json(nullptr)}};
  if (alg)
    r.json["levi"] = {{"min_eigenvalue", samples ? num(min_l) : Json(nullptr)}, {"max_cross_residual", num(cross)}};
  else
    r.json["levi"] = {{"unsupported", levi_note}};
  r.json["rays"] = {{"count", rays.size()}, {"diverged", diverged}, {"monotone", monotone}, {"threshold", num(kExhaustionThreshold)}};
  r.json["failures"] = failures;
  if (!failures.empty()) r.status = kExitVerification;

  std::ostringstream t;
  t << s.label() << ": " << samples << " points (" << non_regular << " non-regular), seed " << ctx.opt.seed << "\n"
    << "hessian_u: smallest eigenvalue " << fmt(min_h) << "\n";
  if (alg)
    t << "levi matrix: smallest eigenvalue " << fmt(min_l) << ", cross-block residual " << fmt(cross) << "\n";
  else
    t << "levi matrix: unsupported (" << levi_note << ")\n";
  t << "exhaustion: " << diverged << "/" << rays.size() << " rays pass " << fmt(kExhaustionThreshold) << ", " << monotone
    << " monotone\n"
    << failures.size() << " failures\n";
  r.text = t.str();
  return r;
}

Report cmd_audit(const Context& ctx) {
  const auto a = audit(ctx.catalog());
  Report r;
  r.json["spaces"] = a.spaces;
  r.json["violations"] = a.violations;
  r.csv_header = {"violation"};
  for (const auto& v : a.violations) r.csv_rows.push_back({v});
  std::ostringstream t;
  t << "audited " << a.spaces << " spaces: " << a.violations.size() << " violations\n";
  for (const auto& v : a.violations) t << "  " << v << "\n";
  r.text = t.str();
  if (!a.ok()) r.status = kExitVerification;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grauert tube and crown domain toolkit for Riemannian symmetric spaces", "grauert"};
  app.require_subcommand(1);
  Options opt;

  using Handler = Report (*)(const Context&);
  struct Command {
    const char* name;
    const char* help;
    Handler handler;
  };
  const Command commands[] = {
      {"info", "Describe a space and its restricted roots", cmd_info},
      {"omega", "Constraints and vertices of the crown polytope", cmd_omega},
      {"radius", "Maximal tube radius and boundary parameters", cmd_radius},
      {"classify", "Rigid, product or Hermitian envelope", cmd_classify},
      {"table", "Reproduce the classification table", cmd_table},
      {"adapted", "Jacobi spectrum, singular parameters and adapted blocks", cmd_adapted},
      {"psh-check", "Positivity of the exhaustion Hessian and Levi matrix", cmd_psh_check},
      {"audit", "Consistency checks of the shipped data", cmd_audit},
  };
  Handler chosen = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--space", opt.space, "Space label, e.g. AIII:p=2,q=1");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", opt.out, "Write the report to this file");
    sub->add_option("--seed", opt.seed, "Random seed (default 0)");
    sub->add_option("--samples", opt.samples, "Sample or grid count");
    sub->add_option("--tol", opt.tol, "Verification tolerance");
    sub->add_option("--jobs", opt.jobs, "Worker threads (default: processors)");
    sub->add_option("--data-dir", opt.data_dir, "Directory with the catalog JSON files");
    if (std::string(c.name) == "radius" || std::string(c.name) == "adapted")
      sub->add_option("--direction", opt.direction, "H as comma-separated rationals in the catalog frame");
    if (std::string(c.name) == "classify")
      sub->add_flag("--check", opt.check, "Also run the exact vertex check against the envelope");
    sub->callback([&chosen, h = c.handler] { chosen = h; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Context ctx(opt);
    const Report report = chosen(ctx);
    if (opt.out.empty()) {
      emit(report, opt.format, out);
    } else {
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) throw InvalidArgument("cannot write " + opt.out);
      emit(report, opt.format, f);
    }
    return report.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace grauert::cli
