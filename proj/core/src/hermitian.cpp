#include "grauert/hermitian.hpp"

#include <map>
#include <set>

#include "grauert/error.hpp"

namespace grauert {

namespace {

const Rational kHalf(1, 2);

bool first_nonzero_positive(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

// Pulled-back constraint beta = iota^T alpha' for each root alpha' of N, keyed by beta.
std::map<RationalVector, RootVector, std::greater<>> pulled_back(const RestrictedRootDatum& dn, const RationalMatrix& iota,
                                                                 std::size_t source_dim) {
  std::map<RationalVector, RootVector, std::greater<>> rows;
  for (const auto& r : dn.root_system.roots()) {
    RationalVector beta(source_dim, Rational(0));
    for (std::size_t k = 0; k < iota.size(); ++k)
      for (std::size_t i = 0; i < source_dim; ++i) beta[i] += iota[k][i] * r.vector.coords[k];
    if (is_zero(beta) || !first_nonzero_positive(beta)) continue;
    rows.emplace(beta, r.vector);
  }
  return rows;
}

}  // namespace

bool rank_condition(const SpaceDescriptor& m, const SpaceDescriptor& n) {
  if (!n.hermitian) throw InvalidArgument(n.label() + " is not Hermitian");
  return n.rank == 2 * m.rank;
}

Theorem7Result theorem7_check(const Catalog& catalog, const EmbeddingData& emb) {
  const auto dm = catalog.restricted_datum(emb.source);
  const auto dn = catalog.restricted_datum(emb.target);
  if (dm.root_system.rank() > kMaxVertexRank)
    throw Unsupported("vertex enumeration is limited to rank " + std::to_string(kMaxVertexRank));
  const auto source_dim = static_cast<std::size_t>(dm.root_system.ambient_dim());
  const auto rows = pulled_back(dn, emb.iota, source_dim);
  const OmegaPolytope omega = omega_polytope(dm);

  Theorem7Result out;
  for (const auto& v : omega.vertices) {
    VertexRecord rec{v, {}};
    for (const auto& [beta, root] : rows) {
      const Rational value = abs(dot(beta, v));
      if (value > kHalf) {
        out.separating_vertex = v;
        out.separating_root = root;
        out.separating_value = value;
        out.reason = "a vertex of omega_M violates a pulled-back constraint of N";
        out.certificate.clear();
        return out;
      }
      if (value == kHalf) rec.saturating.push_back(root);
    }
    if (rec.saturating.empty()) {
      out.separating_vertex = v;
      out.reason = "a vertex of omega_M lies strictly inside the pulled-back polytope of N";
      out.certificate.clear();
      return out;
    }
    out.certificate.push_back(std::move(rec));
  }

  std::vector<RationalVector> beta_rows;
  for (const auto& [beta, root] : rows) beta_rows.push_back(beta);
  RationalMatrix span = beta_rows;
  for (const auto& e : omega.equalities) span.push_back(e);
  if (exact::rank(span) < source_dim) {
    out.certificate.clear();
    out.reason = "the pulled-back polytope of N is unbounded on a";
    return out;
  }
  for (const auto& w : enumerate_vertices(beta_rows, omega.equalities, static_cast<int>(source_dim))) {
    if (omega.contains(w)) continue;
    out.certificate.clear();
    out.separating_vertex = w;
    out.reason = "a vertex of the pulled-back polytope of N lies outside omega_M";
    for (const auto& h : omega.halfspaces) {
      const Rational value = abs(dot(h.coords, w));
      if (value > kHalf) {
        out.separating_root = h;
        out.separating_value = value;
        break;
      }
    }
    return out;
  }
  out.holds = true;
  return out;
}

Classification classify(const Catalog& catalog, const SpaceDescriptor& m) {
  Classification c;
  c.space = m;
  const auto& pairs = catalog.jaffee_pairs();
  if (m.hermitian) {
    c.verdict = Verdict::product;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].envelope.product && pairs[i].real_form.matches(m)) {
        const auto n = catalog.product_descriptor(m);
        c.evidence.push_back({i, n.label(), true, "", m.rank, n.rank, rank_condition(m, n), pairs[i].source});
      }
    return c;
  }

  std::vector<SpaceDescriptor> passing;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pair = pairs[i];
    if (!pair.real_form.matches(m)) continue;
    PairEvidence ev{i, "", false, "", m.rank, 0, false, pair.source};
    try {
      const SpaceDescriptor n = catalog.lookup(pair.envelope.instantiate(m));
      ev.envelope = n.label();
      ev.rank_n = n.rank;
      if (!n.hermitian) {
        ev.reason = n.label() + " is not Hermitian";
      } else {
        ev.applicable = true;
        ev.passes = rank_condition(m, n);
        ev.reason = "rank " + std::to_string(n.rank) + (ev.passes ? " = " : " != ") + "2 x " + std::to_string(m.rank);
        if (ev.passes) passing.push_back(n);
      }
    } catch (const InvalidArgument& e) {
      ev.reason = std::string("envelope not in catalog: ") + e.what();
    }
    c.evidence.push_back(std::move(ev));
  }
  if (!passing.empty()) {
    c.verdict = Verdict::envelope;
    c.envelope_space = passing.front();
    if (passing.size() > 1) c.remarks.push_back("several Jaffee pairs pass the rank condition; the first is used");
  }

  if (m.cartan_label == CartanLabel::BDI && m.param("p") % 2 == 0 && m.param("q") % 2 == 0) {
    const int p = m.param("p"), q = m.param("q");
    c.remarks.push_back("p and q even: AIII:p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                        " is the envelope of CII:p=" + std::to_string(p / 2) + ",q=" + std::to_string(q / 2) +
                        "; rank " + std::to_string(q) + " != 2 x " + std::to_string(q) +
                        " for this space, table verdict kept");
  }
  return c;
}

std::size_t GoldenReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& i : instances) n += i.match ? 0 : 1;
  return n;
}

GoldenReport reproduce_golden_table(const Catalog& catalog, const ParameterGrid& grid) {
  GoldenReport report;
  const auto& table = catalog.paper_table();
  for (std::size_t row = 0; row < table.size(); ++row) {
    const auto& r = table[row];
    bool ok = true;
    const auto spaces = catalog.instantiate(r.space, grid);
    if (spaces.empty()) ok = false;
    for (const auto& s : spaces) {
      const auto c = classify(catalog, s);
      GoldenInstance inst{row, s.label(), r.verdict, c.verdict, "", "", false};
      if (r.envelope) inst.expected_envelope = catalog.lookup(r.envelope->instantiate(s)).label();
      if (c.envelope_space) inst.got_envelope = c.envelope_space->label();
      inst.match = inst.expected == inst.got && inst.expected_envelope == inst.got_envelope;
      ok = ok && inst.match;
      report.instances.push_back(std::move(inst));
    }
    report.row_ok.push_back(ok);
  }
  return report;
}

AuditReport audit(const Catalog& catalog, const ParameterGrid& grid) {
  AuditReport a;
  for (const auto& s : catalog.all_spaces(grid)) {
    ++a.spaces;
    const auto c = classify(catalog, s);
    int passing = 0;
    for (const auto& e : c.evidence) passing += e.passes ? 1 : 0;
    if (!s.hermitian && passing > 1)
      a.violations.push_back(s.label() + ": " + std::to_string(passing) + " Jaffee pairs pass the rank condition");
    if (c.verdict == Verdict::product && !s.hermitian) a.violations.push_back(s.label() + ": product verdict for a non-Hermitian space");
    if (c.verdict == Verdict::envelope) {
      const auto& n = *c.envelope_space;
      if (!n.hermitian || n.rank != 2 * s.rank)
        a.violations.push_back(s.label() + ": envelope " + n.label() + " fails the rank relation");
    }
  }
  return a;
}

std::vector<EmbeddingData> supported_embeddings(const Catalog& catalog, const ParameterGrid& grid) {
  std::vector<EmbeddingData> out;
  std::set<std::string> seen;
  auto add_pair = [&](const SpaceDescriptor& m, const SpaceDescriptor& n) {
    if (m.rank > kMaxVertexRank || !seen.insert(m.label() + ">" + n.label()).second) return;
    try {
      out.push_back(embedding_map(catalog, m, n));
    } catch (const Unsupported&) {
    }
  };
  for (const auto& s : catalog.all_spaces(grid)) {
    for (const auto& pair : catalog.jaffee_pairs()) {
      if (!pair.real_form.matches(s)) continue;
      if (pair.envelope.product) {
        add_pair(s, catalog.product_descriptor(s));
        continue;
      }
      try {
        add_pair(s, catalog.lookup(pair.envelope.instantiate(s)));
      } catch (const InvalidArgument&) {
      }
    }
  }
  return out;
}

}  // namespace grauert
