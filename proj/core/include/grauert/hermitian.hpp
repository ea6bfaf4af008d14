#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grauert/catalog.hpp"
#include "grauert/domain.hpp"
#include "grauert/matrix_oracle.hpp"

namespace grauert {

/// rank(N) = 2 rank(M). Throws InvalidArgument unless N is Hermitian.
bool rank_condition(const SpaceDescriptor& m, const SpaceDescriptor& n);

struct VertexRecord {
  /// Vertex of omega_M, units of pi.
  RationalVector vertex;
  /// Roots of N with |alpha'(iota vertex)| = 1/2.
  std::vector<RootVector> saturating;
};

struct Theorem7Result {
  bool holds = false;
  /// One record per vertex of omega_M when the check passes.
  std::vector<VertexRecord> certificate;
  /// On failure: a vertex of one polytope that is not in the other.
  std::optional<RationalVector> separating_vertex;
  /// Root of N (or M) whose constraint separates, with its value at the vertex in units of pi.
  std::optional<RootVector> separating_root;
  Rational separating_value = 0;
  std::string reason;
};

/// Exact decision whether omega_M = iota^{-1}(omega_N), by vertex enumeration in both
/// directions. Throws Unsupported when rank(M) > kMaxVertexRank.
Theorem7Result theorem7_check(const Catalog& catalog, const EmbeddingData& emb);

struct PairEvidence {
  std::size_t pair_index = 0;
  std::string envelope;  // instantiated label; empty when not applicable
  bool applicable = false;
  std::string reason;
  int rank_m = 0;
  int rank_n = 0;
  bool passes = false;
  std::string source;
};

struct Classification {
  SpaceDescriptor space;
  Verdict verdict = Verdict::rigid;
  /// Set for verdict envelope.
  std::optional<SpaceDescriptor> envelope_space;
  std::vector<PairEvidence> evidence;
  std::vector<std::string> remarks;
};

Classification classify(const Catalog& catalog, const SpaceDescriptor& m);

struct GoldenInstance {
  std::size_t row = 0;
  std::string space;
  Verdict expected = Verdict::rigid;
  Verdict got = Verdict::rigid;
  std::string expected_envelope;
  std::string got_envelope;
  bool match = false;
};

struct GoldenReport {
  std::vector<GoldenInstance> instances;
  /// Per table row: every instance matched.
  std::vector<bool> row_ok;
  std::size_t mismatches() const;
};

/// Classifies every instance of every table row over the grid.
GoldenReport reproduce_golden_table(const Catalog& catalog, const ParameterGrid& grid = {});

struct AuditReport {
  std::size_t spaces = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Data checks: at most one Jaffee pair passes per non-Hermitian space, envelopes are
/// Hermitian with twice the rank, and products only arise from Hermitian inputs.
AuditReport audit(const Catalog& catalog, const ParameterGrid& grid = {});

/// Every classical Jaffee pair instance over the grid with a matrix inclusion and
/// rank(M) <= kMaxVertexRank, plus M -> product(M) for Hermitian M of that rank.
std::vector<EmbeddingData> supported_embeddings(const Catalog& catalog, const ParameterGrid& grid = {});

}  // namespace grauert
