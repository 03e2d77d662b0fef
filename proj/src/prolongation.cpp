#include "glie/prolongation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace glie {

std::size_t level_dim(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree) {
  if (degree == -2) return alg.label_count();
  if (degree == -1) return alg.generator_count();
  if (degree < -2 || static_cast<std::size_t>(degree) >= levels.size())
    throw std::out_of_range("level g_" + std::to_string(degree) + " is not available");
  return levels[static_cast<std::size_t>(degree)].dim();
}

namespace {

using Table = std::vector<std::vector<SparseVector>>;  // [basis vector][negative basis index]

// Brackets [e_p, x_i] for the basis of g_degree, as vectors in g_{degree-1}.
Table generator_brackets(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree) {
  const std::size_t n = alg.generator_count();
  Table table;
  if (degree == -2) {
    table.assign(alg.label_count(), std::vector<SparseVector>(n));
  } else if (degree == -1) {
    table.assign(n, std::vector<SparseVector>(n));
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& t : alg.terms(p)) table[p][t.other].push_back({t.label, Rational(t.coefficient)});
    for (auto& row : table)
      for (auto& v : row) v = normalize(std::move(v));
  } else {
    for (const auto& u : levels[static_cast<std::size_t>(degree)].basis) table.push_back(u.on_generators);
  }
  return table;
}

// Brackets [e_p, c_l] for the basis of g_degree, as vectors in g_{degree-2}.
Table label_brackets(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree) {
  const std::size_t m = alg.label_count();
  Table table;
  if (degree < 0) {
    table.assign(level_dim(alg, levels, degree), std::vector<SparseVector>(m));
  } else {
    for (const auto& u : levels[static_cast<std::size_t>(degree)].basis) table.push_back(u.on_labels);
  }
  return table;
}

// One independent group of constraint rows.
struct ConstraintGroup {
  enum Kind { GeneratorPair, Mixed, LabelPair } kind;
  std::size_t a;
  std::size_t b;
};

class LevelAssembler {
 public:
  LevelAssembler(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> lower, int k)
      : alg_(alg), k_(k), n_(alg.generator_count()), m_(alg.label_count()) {
    d1_ = level_dim(alg, lower, k - 1);
    d2_ = level_dim(alg, lower, k - 2);
    gen1_ = generator_brackets(alg, lower, k - 1);
    lab1_ = label_brackets(alg, lower, k - 1);
    gen2_ = generator_brackets(alg, lower, k - 2);
    lab2_ = label_brackets(alg, lower, k - 2);
    target_c1_ = d2_;
    target_c2_ = k - 3 >= -2 ? level_dim(alg, lower, k - 3) : 0;
    target_c3_ = k - 4 >= -2 ? level_dim(alg, lower, k - 4) : 0;

    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) groups_.push_back({ConstraintGroup::GeneratorPair, i, j});
    if (k - 3 >= -2)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t l = 0; l < m_; ++l) groups_.push_back({ConstraintGroup::Mixed, i, l});
    if (k - 4 >= -2)
      for (std::size_t l = 0; l < m_; ++l)
        for (std::size_t l2 = l + 1; l2 < m_; ++l2) groups_.push_back({ConstraintGroup::LabelPair, l, l2});
  }

  std::size_t unknowns() const { return n_ * d1_ + m_ * d2_; }
  std::size_t on_generator(std::size_t i, std::size_t p) const { return i * d1_ + p; }
  std::size_t on_label(std::size_t l, std::size_t q) const { return n_ * d1_ + l * d2_ + q; }

  SparseSystem assemble(unsigned workers) const {
    std::vector<std::vector<SparseVector>> rows(groups_.size());
    auto build = [&](std::size_t g) { rows[g] = group_rows(groups_[g]); };
    const std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(workers, groups_.size()));
    if (nthreads == 1) {
      for (std::size_t g = 0; g < groups_.size(); ++g) build(g);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t g = t; g < groups_.size(); g += nthreads) build(g);
        });
    }
    SparseSystem system(unknowns());
    for (auto& group : rows)
      for (auto& row : group) system.add_row(std::move(row));
    return system;
  }

  LevelElement unpack(const SparseVector& solution) const {
    LevelElement u{std::vector<SparseVector>(n_), std::vector<SparseVector>(m_)};
    for (const auto& e : solution) {
      if (e.col < n_ * d1_)
        u.on_generators[e.col / d1_].push_back({e.col % d1_, e.value});
      else {
        const auto off = e.col - n_ * d1_;
        u.on_labels[off / d2_].push_back({off % d2_, e.value});
      }
    }
    return u;
  }

 private:
  // acc[t] += sign * var for every coordinate t of the vector.
  static void scatter(std::vector<std::vector<SparseEntry>>& acc, const SparseVector& v, std::size_t var, int sign) {
    for (const auto& e : v) acc[e.col].push_back({var, sign > 0 ? e.value : Rational(-e.value)});
  }

  std::vector<SparseVector> group_rows(const ConstraintGroup& g) const {
    std::vector<std::vector<SparseEntry>> acc;
    switch (g.kind) {
      case ConstraintGroup::GeneratorPair: {
        // [u(x_i), x_j] - [u(x_j), x_i] - u([x_i, x_j]) = 0 in g_{k-2}
        const auto i = g.a, j = g.b;
        acc.resize(target_c1_);
        for (std::size_t p = 0; p < d1_; ++p) {
          scatter(acc, gen1_[p][j], on_generator(i, p), +1);
          scatter(acc, gen1_[p][i], on_generator(j, p), -1);
        }
        for (const auto& t : alg_.terms(i)) {
          if (t.other != j) continue;
          for (std::size_t q = 0; q < d2_; ++q) acc[q].push_back({on_label(t.label, q), Rational(-t.coefficient)});
        }
        break;
      }
      case ConstraintGroup::Mixed: {
        // [u(x_i), c_l] - [u(c_l), x_i] = 0 in g_{k-3}
        const auto i = g.a, l = g.b;
        acc.resize(target_c2_);
        for (std::size_t p = 0; p < d1_; ++p) scatter(acc, lab1_[p][l], on_generator(i, p), +1);
        for (std::size_t q = 0; q < d2_; ++q) scatter(acc, gen2_[q][i], on_label(l, q), -1);
        break;
      }
      case ConstraintGroup::LabelPair: {
        // [u(c_l), c_l2] - [u(c_l2), c_l] = 0 in g_{k-4}
        const auto l = g.a, l2 = g.b;
        acc.resize(target_c3_);
        for (std::size_t q = 0; q < d2_; ++q) {
          scatter(acc, lab2_[q][l2], on_label(l, q), +1);
          scatter(acc, lab2_[q][l], on_label(l2, q), -1);
        }
        break;
      }
    }
    std::vector<SparseVector> out;
    out.reserve(acc.size());
    for (auto& entries : acc)
      if (auto row = normalize(std::move(entries)); !row.empty()) out.push_back(std::move(row));
    return out;
  }

  const TwoStepAlgebra& alg_;
  int k_;
  std::size_t n_, m_;
  std::size_t d1_ = 0, d2_ = 0;
  std::size_t target_c1_ = 0, target_c2_ = 0, target_c3_ = 0;
  Table gen1_, lab1_, gen2_, lab2_;
  std::vector<ConstraintGroup> groups_;
};

void check_lower(std::span<const ProlongationLevel> lower, int k) {
  if (k < 0) throw std::invalid_argument("prolongation degree must be nonnegative");
  if (lower.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("level g_" + std::to_string(lower.size()) + " is missing for degree " +
                                std::to_string(k));
  for (int j = 0; j < k; ++j)
    if (lower[static_cast<std::size_t>(j)].degree != j)
      throw std::invalid_argument("lower levels must be ordered by degree");
}

}  // namespace

ProlongationLevel compute_level(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> lower, int k,
                                unsigned workers) {
  check_lower(lower, k);
  lower = lower.first(static_cast<std::size_t>(k));
  const LevelAssembler assembler(alg, lower, k);
  const auto kernel = sparse_kernel(assembler.assemble(workers), workers);

  ProlongationLevel level;
  level.degree = k;
  level.basis.reserve(kernel.basis.size());
  for (const auto& v : kernel.basis) level.basis.push_back(assembler.unpack(v));
  return level;
}

ProlongationLevel compute_g0(const TwoStepAlgebra& alg, unsigned workers) { return compute_level(alg, {}, 0, workers); }

RationalVector evaluate(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree,
                        const LevelElement& u, NegativeBasis z) {
  if (z.kind == NegativeBasis::Generator) {
    const auto dim = level_dim(alg, levels, degree - 1);
    return to_dense(u.on_generators.at(z.index), dim);
  }
  const auto dim = level_dim(alg, levels, degree - 2);
  return to_dense(u.on_labels.at(z.index), dim);
}

RationalVector evaluate_on_g1(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int degree,
                              const LevelElement& u, const RationalVector& y) {
  if (y.size() != alg.generator_count()) throw std::invalid_argument("evaluate_on_g1: vector length mismatch");
  auto out = zero_vector(level_dim(alg, levels, degree - 1));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    for (const auto& e : u.on_generators.at(i)) out[e.col] += y[i] * e.value;
  }
  return out;
}

RationalMatrix generator_action(const TwoStepAlgebra& alg, const LevelElement& u) {
  const auto n = alg.generator_count();
  std::vector<RationalVector> cols;
  for (const auto& v : u.on_generators) cols.push_back(to_dense(v, n));
  return RationalMatrix::from_columns(n, cols);
}

RationalMatrix label_action(const TwoStepAlgebra& alg, const LevelElement& u) {
  const auto m = alg.label_count();
  std::vector<RationalVector> cols;
  for (const auto& v : u.on_labels) cols.push_back(to_dense(v, m));
  return RationalMatrix::from_columns(m, cols);
}

namespace {

// [v, z] for v in g_degree given by dense coordinates and z a negative basis
// vector. The result lives in g_{degree-1} or g_{degree-2}; an empty vector
// stands for "below g_{-2}", where every bracket is zero.
RationalVector bracket_with_negative(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels,
                                     int degree, const RationalVector& v, NegativeBasis z) {
  const int target = degree - (z.kind == NegativeBasis::Generator ? 1 : 2);
  if (target < -2) return {};
  auto out = zero_vector(level_dim(alg, levels, target));
  if (degree == -1) {
    // [sum v_p x_p, x_i] = sum_p v_p B^l_{p i} c_l; brackets with labels vanish.
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (sgn(v[p]) == 0) continue;
      for (const auto& t : alg.terms(p))
        if (t.other == z.index) out[t.label] += t.coefficient * v[p];
    }
    return out;
  }
  const auto& basis = levels[static_cast<std::size_t>(degree)].basis;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (sgn(v[p]) == 0) continue;
    const auto value = evaluate(alg, levels, degree, basis[p], z);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += v[p] * value[t];
  }
  return out;
}

bool is_zero_or_empty(const RationalVector& v) { return v.empty() || is_zero(v); }

RationalVector difference(RationalVector a, const RationalVector& b) {
  if (a.empty()) return a;
  for (std::size_t t = 0; t < a.size(); ++t) a[t] -= b[t];
  return a;
}

}  // namespace

bool satisfies_derivation_identity(const TwoStepAlgebra& alg, std::span<const ProlongationLevel> levels, int k) {
  if (k < 0 || levels.size() <= static_cast<std::size_t>(k)) throw std::invalid_argument("level k is missing");
  const std::size_t n = alg.generator_count();
  const std::size_t m = alg.label_count();
  const auto gen = [](std::size_t i) { return NegativeBasis{NegativeBasis::Generator, i}; };
  const auto lab = [](std::size_t l) { return NegativeBasis{NegativeBasis::Label, l}; };

  for (const auto& u : levels[static_cast<std::size_t>(k)].basis) {
    std::vector<RationalVector> ux(n), uc(m);
    for (std::size_t i = 0; i < n; ++i) ux[i] = evaluate(alg, levels, k, u, gen(i));
    for (std::size_t l = 0; l < m; ++l) uc[l] = evaluate(alg, levels, k, u, lab(l));

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        // u([x_i, x_j]) = sum_l B^l_{ij} u(c_l)
        auto lhs = zero_vector(level_dim(alg, levels, k - 2));
        for (std::size_t l = 0; l < m; ++l)
          if (int c = alg.constant(l, i, j); c != 0)
            for (std::size_t t = 0; t < lhs.size(); ++t) lhs[t] += c * uc[l][t];
        const auto rhs = difference(bracket_with_negative(alg, levels, k - 1, ux[i], gen(j)),
                                    bracket_with_negative(alg, levels, k - 1, ux[j], gen(i)));
        if (lhs != rhs) return false;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < m; ++l) {
        const auto r = difference(bracket_with_negative(alg, levels, k - 1, ux[i], lab(l)),
                                  bracket_with_negative(alg, levels, k - 2, uc[l], gen(i)));
        if (!is_zero_or_empty(r)) return false;
      }
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t l2 = l + 1; l2 < m; ++l2) {
        const auto r = difference(bracket_with_negative(alg, levels, k - 2, uc[l], lab(l2)),
                                  bracket_with_negative(alg, levels, k - 2, uc[l2], lab(l)));
        if (!is_zero_or_empty(r)) return false;
      }
  }
  return true;
}

bool restriction_is_injective(const TwoStepAlgebra& alg, const ProlongationLevel& level) {
  const std::size_t n = alg.generator_count();
  std::size_t width = 0;
  for (const auto& u : level.basis)
    for (const auto& v : u.on_generators)
      if (!v.empty()) width = std::max(width, v.back().col + 1);

  // Rows are the flattened restrictions; injective iff they are independent.
  SparseSystem system(n * width);
  std::size_t nonzero_rows = 0;
  for (const auto& u : level.basis) {
    std::vector<SparseEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : u.on_generators[i]) entries.push_back({i * width + e.col, e.value});
    auto row = normalize(std::move(entries));
    if (row.empty()) return false;
    system.add_row(std::move(row));
    ++nonzero_rows;
  }
  return sparse_rref(system).size() == nonzero_rows;
}

ProlongationResult prolong(const TwoStepAlgebra& alg, int max_degree, unsigned workers) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  ProlongationResult result;
  auto& report = result.report;
  report.g_minus_1 = alg.generator_count();
  report.g_minus_2 = alg.label_count();

  std::size_t total = report.g_minus_1 + report.g_minus_2;
  for (int k = 0; k <= max_degree; ++k) {
    result.levels.push_back(compute_level(alg, result.levels, k, workers));
    const auto dim = result.levels.back().dim();
    report.level_dims.emplace_back(k, dim);
    report.terminated_at = k;
    if (dim == 0) {
      report.termination = ProlongationReport::Termination::Vanished;
      report.total_dim_if_finite = total;
      break;
    }
    total += dim;
  }
  return result;
}

}  // namespace glie
