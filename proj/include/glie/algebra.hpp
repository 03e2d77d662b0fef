#ifndef GLIE_ALGEBRA_HPP
#define GLIE_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "glie/graph.hpp"
#include "glie/matrix.hpp"
#include "glie/rational.hpp"

namespace glie {

/// Graded 2-step nilpotent algebra g = g_{-2} + g_{-1} given by integer
/// structure constants [x_i, x_j] = sum_l B^l_{ij} c_l. The generators x_i span
/// g_{-1}, the labels c_l span g_{-2}, and g_{-2} is central.
class TwoStepAlgebra {
 public:
  /// One nonzero entry of the bracket on g_{-1}.
  struct Term {
    std::size_t other;  // j in [x_i, x_j]
    std::size_t label;
    int coefficient;
  };

  TwoStepAlgebra() = default;
  /// Zero bracket; fill with set_constant(). No invariant is enforced here,
  /// see check_structure().
  TwoStepAlgebra(std::vector<std::string> gen_names, std::vector<std::string> lab_names);

  std::size_t generator_count() const { return gen_names_.size(); }
  std::size_t label_count() const { return lab_names_.size(); }
  const std::vector<std::string>& gen_names() const { return gen_names_; }
  const std::vector<std::string>& lab_names() const { return lab_names_; }

  int constant(std::size_t label, std::size_t i, std::size_t j) const {
    return table_[(label * n() + i) * n() + j];
  }
  void set_constant(std::size_t label, std::size_t i, std::size_t j, int value);

  /// Nonzero B^l_{ij} for fixed i, ordered by (j, l).
  const std::vector<Term>& terms(std::size_t i) const { return terms_[i]; }

 private:
  std::size_t n() const { return gen_names_.size(); }
  void rebuild_terms(std::size_t i);

  std::vector<std::string> gen_names_;
  std::vector<std::string> lab_names_;
  std::vector<int> table_;
  std::vector<std::vector<Term>> terms_;
};

/// Element of the algebra in graded coordinates.
struct Element {
  RationalVector neg1;
  RationalVector neg2;

  static Element zero(const TwoStepAlgebra& alg);
  static Element generator(const TwoStepAlgebra& alg, std::size_t i);
  static Element label(const TwoStepAlgebra& alg, std::size_t l);

  friend bool operator==(const Element&, const Element&) = default;
};

/// Lie(G): B^l_{ij} = +1 for the edge x_i -> x_j labeled c_l, -1 for the
/// reverse orientation. Throws std::invalid_argument for an invalid graph.
TwoStepAlgebra build_lie_algebra(const LabeledDigraph& g);

/// Throws std::invalid_argument on dimension mismatch.
Element bracket(const TwoStepAlgebra& alg, const Element& a, const Element& b);

/// Matrix of ad_x restricted to g_{-1} -> g_{-2}: entry (l, j) = sum_i x_i B^l_{ij}.
RationalMatrix ad_matrix(const TwoStepAlgebra& alg, const RationalVector& x);

struct KernelInfo {
  std::vector<RationalVector> basis;
  std::size_t dim = 0;
};

/// ker ad_x intersected with g_{-1}.
KernelInfo kernel_in_g1(const TwoStepAlgebra& alg, const RationalVector& x);

struct CenterInfo {
  std::vector<Element> basis;          // Z: (Z ∩ g_{-1}) followed by g_{-2}
  std::vector<RationalVector> in_g1;   // basis of Z ∩ g_{-1}
};

CenterInfo center(const TwoStepAlgebra& alg);

/// Antisymmetry, grading and the Jacobi identity on all basis triples.
bool check_structure(const TwoStepAlgebra& alg);

}  // namespace glie

#endif
