#ifndef GLIE_PROLONGATION_HPP
#define GLIE_PROLONGATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "glie/algebra.hpp"
#include "glie/matrix.hpp"

namespace glie {

// Tanaka prolongation of a graded 2-step algebra m = g_{-2} + g_{-1}.
//
// An element u of degree k >= 0 is a degree-k map on m, stored by its values
// on the basis: u(x_i) in g_{k-1} and u(c_l) in g_{k-2}. Values in g_{-1} and
// g_{-2} use native coordinates; values in g_j, j >= 0, are coordinates in the
// basis of the already computed level j. For k = 0 this is the pair (A, C) of
// a grading-preserving derivation.
//
// g_k is the space of such u with
//     u([a, b]) = [u(a), b] + [a, u(b)]   for all a, b in m,
// where [v, z] := v(z) for v in g_j (j >= 0) and z in m.

struct LevelElement {
  std::vector<SparseVector> on_generators;  // u(x_i), i < n
  std::vector<SparseVector> on_labels;      // u(c_l), l < m

  friend bool operator==(const LevelElement&, const LevelElement&) = default;
};

struct ProlongationLevel {
  int degree = 0;
  std::vector<LevelElement> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Basis vector of the negative part: generator x_index or label c_index.
struct NegativeBasis {
  enum Kind { Generator, Label } kind;
  std::size_t index;
};

/// Dimension of g_degree: native for -1 and -2, from `levels` otherwise.
/// Throws std::out_of_range when the level is missing or degree < -2.
std::size_t level_dim(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree);

/// Degree-0 level: solutions (A, C) of C[x_i, x_j] = [A x_i, x_j] + [x_i, A x_j].
ProlongationLevel compute_g0(const TwoStepAlgebra& alg, unsigned workers = 1);

/// Level k >= 1 from levels 0..k-1 (`lower[j].degree == j`). Throws
/// std::invalid_argument when a lower level is missing.
ProlongationLevel compute_level(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> lower, int k,
                                unsigned workers = 1);

/// [u, z] = u(z) for u of the given degree, as coordinates in g_{degree-1}
/// (z a generator) or g_{degree-2} (z a label).
RationalVector evaluate(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree,
                        const LevelElement& u, NegativeBasis z);

/// Linear extension of evaluate to z = sum y_i x_i in g_{-1}.
RationalVector evaluate_on_g1(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree,
                              const LevelElement& u, const RationalVector& y);

/// A for a degree-0 element (column i = u(x_i)).
RationalMatrix generator_action(const TwoStepAlgebra& alg, const LevelElement& u);
/// C for a degree-0 element (column l = u(c_l)).
RationalMatrix label_action(const TwoStepAlgebra& alg, const LevelElement& u);

/// Substitutes every basis element of level k back into the derivation
/// identities, evaluating element by element. `levels` must hold 0..k.
bool satisfies_derivation_identity(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int k);

/// The restriction u -> u|g_{-1} is injective on the level.
bool restriction_is_injective(const TwoStepAlgebra& alg, const ProlongationLevel& level);

struct ProlongationReport {
  enum class Termination { Vanished, MaxDegree };

  std::vector<std::pair<int, std::size_t>> level_dims;
  Termination termination = Termination::MaxDegree;
  int terminated_at = 0;
  /// m + n + sum of the nonzero level dimensions, when some level vanished.
  std::optional<std::size_t> total_dim_if_finite;
  std::size_t g_minus_1 = 0;
  std::size_t g_minus_2 = 0;
};

struct ProlongationResult {
  ProlongationReport report;
  std::vector<ProlongationLevel> levels;
};

/// Levels 0, 1, ... up to the first k with g_k = 0, or up to max_degree
/// inclusive. Throws std::invalid_argument when max_degree < 0.
ProlongationResult prolong(const TwoStepAlgebra& alg, int max_degree, unsigned workers = 1);

}  // namespace glie

#endif
