#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grauert/rational.hpp"
#include "grauert/rootkit.hpp"

namespace grauert {

inline constexpr int kSchemaVersion = 1;

// Helgason's labels for irreducible noncompact Riemannian symmetric spaces; the c* labels
// are complex groups G_C/U. Product marks the reducible M x conj(M) used as an envelope.
enum class CartanLabel {
  AI, AII, AIII, BDI, DIII, CI, CII,
  EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX, FI, FII, G,
  cA, cB, cC, cD, cE6, cE7, cE8, cF4, cG2,
  Product
};

std::string to_string(CartanLabel l);
std::optional<CartanLabel> parse_cartan_label(const std::string& s);
bool is_classical(CartanLabel l);

struct SpaceDescriptor {
  CartanLabel cartan_label = CartanLabel::AI;
  std::vector<std::pair<std::string, int>> params;
  std::string display_name;
  int rank = 0;
  int dim = 0;
  bool hermitian = false;
  std::string factor;  // canonical label of M when cartan_label == Product

  /// Canonical label, e.g. "AIII:p=2,q=4", "FII", "product(CI:n=2)".
  std::string label() const;
  int param(const std::string& name) const;
  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) { return a.label() == b.label(); }
};

struct RestrictedRootDatum {
  SpaceDescriptor space;
  RootSystem root_system;
  /// <H,H> = metric_scale * |H|^2 in the ambient frame of root_system.
  Rational metric_scale = 1;
  /// "curvature" (rank one: longest root has unit length) or "killing".
  std::string metric_convention;
};

/// "n>2", "q=1", "p>=q": a comparison between a parameter and an integer or parameter.
struct Guard {
  std::string lhs;
  std::string op;
  std::string rhs;

  static Guard parse(const std::string& text);
  bool holds(const SpaceDescriptor& s) const;
  std::string text() const { return lhs + op + rhs; }
};

/// Pattern over spaces: a set of labels plus guards, or the "any Hermitian space" wildcard.
struct SpaceTemplate {
  std::vector<CartanLabel> labels;
  std::vector<Guard> guards;
  bool any_hermitian = false;

  bool matches(const SpaceDescriptor& s) const;
};

/// Parameter map from a real form to its envelope, e.g. CII(p,q) -> AIII(2p,2q).
struct EnvelopeTemplate {
  CartanLabel label = CartanLabel::AI;
  std::vector<std::pair<std::string, std::string>> params;  // name -> "p", "2", "2*p"
  bool product = false;

  /// Label string of the envelope for a matching real form.
  std::string instantiate(const SpaceDescriptor& real_form) const;
};

struct JaffeePair {
  SpaceTemplate real_form;
  EnvelopeTemplate envelope;
  std::string source;  // "paper" or "secondary-source"
  std::string note;
};

enum class Verdict { rigid, product, envelope };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct GoldenTableRow {
  std::string space_text;
  SpaceTemplate space;
  Verdict verdict = Verdict::rigid;
  std::string envelope_text;
  std::optional<EnvelopeTemplate> envelope;
};

/// Parameter grid used to instantiate golden rows: p,q <= 6 and n <= 8 by default.
struct ParameterGrid {
  int max_pq = 6;
  int max_n = 8;
};

/// Static descriptors of the irreducible symmetric spaces of noncompact type.
///
/// Classical families compute their restricted roots from closed-form rules; exceptional
/// spaces, display patterns, Jaffee pairs and the golden classification table come from
/// catalog.json, jaffee_pairs.json and golden_table.json in the data directory.
class Catalog {
 public:
  /// Loads all three data files; throws DataError on a missing file or schema mismatch.
  static Catalog load(const std::filesystem::path& data_dir);
  /// $GRAUERT_DATA_DIR, else the source tree data/, else the installed share/grauert/data.
  static std::filesystem::path default_data_dir();
  /// Shared instance loaded from default_data_dir().
  static const Catalog& instance();

  /// "AI:n=3", "CII:p=1,q=2", "FII" or a display-name alias like "SL(3,R)/SO(3)".
  SpaceDescriptor lookup(const std::string& label) const;
  RestrictedRootDatum restricted_datum(const SpaceDescriptor& space) const;
  RestrictedRootDatum restricted_datum(const std::string& label) const { return restricted_datum(lookup(label)); }
  SpaceDescriptor product_descriptor(const SpaceDescriptor& m) const;

  const std::vector<GoldenTableRow>& paper_table() const { return table_; }
  const std::vector<JaffeePair>& jaffee_pairs() const { return pairs_; }

  /// Every space matched by the template over the grid; invalid instances are skipped.
  std::vector<SpaceDescriptor> instantiate(const SpaceTemplate& t, const ParameterGrid& grid = {}) const;
  /// Catalog spaces of the grid: every classical family instance plus every exceptional space.
  std::vector<SpaceDescriptor> all_spaces(const ParameterGrid& grid = {}) const;
  /// Label templates for error messages, e.g. "AIII:p=<int>,q=<int>".
  std::vector<std::string> label_forms() const;
  /// Closest label forms to a misspelled label.
  std::vector<std::string> suggestions(const std::string& bad_label) const;

 private:
  struct ClassicalEntry {
    CartanLabel label;
    std::vector<std::string> params;
    std::string display;
    std::vector<Guard> guards;
    std::string source;
  };
  struct ExceptionalEntry {
    CartanLabel label;
    std::string display;
    std::vector<std::string> aliases;
    Family family = Family::A;
    int rank = 0;
    int dim = 0;
    bool hermitian = false;
    std::map<Rational, int> multiplicities;  // squared root length -> multiplicity
  };

  SpaceDescriptor make_classical(const ClassicalEntry& e, std::vector<std::pair<std::string, int>> params) const;
  SpaceDescriptor make_exceptional(const ExceptionalEntry& e) const;
  std::optional<SpaceDescriptor> lookup_alias(const std::string& text) const;

  std::vector<ClassicalEntry> classical_;
  std::vector<ExceptionalEntry> exceptional_;
  std::vector<JaffeePair> pairs_;
  std::vector<GoldenTableRow> table_;
};

}  // namespace grauert
