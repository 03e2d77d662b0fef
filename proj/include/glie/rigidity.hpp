#ifndef GLIE_RIGIDITY_HPP
#define GLIE_RIGIDITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glie/algebra.hpp"
#include "glie/graph.hpp"

namespace glie {

enum class Provenance { DegreeOne, EqualLabel, Search, IsolatedVertex };

std::string_view provenance_name(Provenance p);

/// Witness of the corank-one condition: a nonzero x in g_{-1} and a
/// hyperplane of g_{-1} on which ad_x vanishes. The hyperplane is the computed
/// kernel of ad_x (truncated to n-1 vectors when ad_x = 0).
struct CorankOneCertificate {
  RationalVector x;
  std::vector<RationalVector> hyperplane_basis;
  Provenance provenance = Provenance::Search;
};

/// Packages x with its kernel hyperplane; none if rank(ad_x) > 1 or x = 0.
std::optional<CorankOneCertificate> make_certificate(const TwoStepAlgebra& alg, const RationalVector& x,
                                                     Provenance provenance);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> reasons;  // empty when ok
};

/// x != 0, rank(ad_x) <= 1, and the hyperplane basis is independent, inside
/// ker ad_x and of size n - 1.
CertificateCheck verify_certificate(const TwoStepAlgebra& alg, const CorankOneCertificate& cert);

struct Witness {
  std::size_t vertex;
  CorankOneCertificate certificate;
};

/// First vertex (input order) of degree one, with x = that vertex.
std::optional<Witness> degree_one_witness(const LabeledDigraph& g);

/// First vertex of degree k >= 2 whose incident edges all carry one label.
std::optional<Witness> equal_label_witness(const LabeledDigraph& g);

/// First vertex of degree zero (only when n >= 2 or the graph is a single
/// vertex); ad_x = 0 there.
std::optional<Witness> isolated_vertex_witness(const LabeledDigraph& g);

struct SearchBudget {
  enum class Kind { BasisOnly, SignedPairs, Exhaustive } kind = Kind::SignedPairs;
  std::vector<Rational> coefficients;  // Exhaustive only
  std::size_t max_support = 0;         // Exhaustive only
  std::size_t max_candidates = 5'000'000;

  static SearchBudget basis_only() { return {Kind::BasisOnly, {}, 0}; }
  static SearchBudget signed_pairs() { return {Kind::SignedPairs, {}, 0}; }
  static SearchBudget exhaustive(std::vector<Rational> coefficients, std::size_t max_support) {
    return {Kind::Exhaustive, std::move(coefficients), max_support};
  }
};

/// "basis-only", "signed-pairs" or "exhaustive:C1,C2,...:SUPPORT".
SearchBudget parse_search_budget(std::string_view text);
std::string to_string(const SearchBudget& budget);

struct SearchResult {
  std::optional<CorankOneCertificate> certificate;
  std::size_t candidates_tried = 0;
  bool budget_exhausted = false;  // stopped at max_candidates
};

/// Candidate order: basis vectors; then x_i + x_j, x_i - x_j for i < j
/// (signed-pairs); or, for exhaustive, vectors by support size, support
/// subsets lexicographically, nonzero coefficients in the given order. The
/// first candidate with rank(ad_x) <= 1 wins, whatever the worker count.
SearchResult certificate_search(const TwoStepAlgebra& alg, const SearchBudget& budget, unsigned workers = 1);

struct RigidityVerdict {
  enum class Kind { Finite, Infinite, Undetermined };

  Kind kind = Kind::Undetermined;
  std::optional<CorankOneCertificate> certificate;  // Infinite
  std::optional<std::size_t> vanishing_degree;      // Finite
  std::optional<std::size_t> explored_to;           // Undetermined
  std::vector<std::string> reasoning;
  /// Dimensions of the levels computed along the way, if any.
  std::vector<std::size_t> level_dims;
};

std::string_view kind_name(RigidityVerdict::Kind kind);

struct ClassifyOptions {
  int max_prolongation_degree = 10;
  SearchBudget search_budget = SearchBudget::signed_pairs();
  unsigned workers = 1;
};

/// Throws std::invalid_argument for an invalid graph.
RigidityVerdict classify(const LabeledDigraph& g, const ClassifyOptions& options = {});

}  // namespace glie

#endif
