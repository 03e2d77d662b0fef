#include "glie/algebra.hpp"

#include <stdexcept>

namespace glie {

TwoStepAlgebra::TwoStepAlgebra(std::vector<std::string> gen_names, std::vector<std::string> lab_names)
    : gen_names_(std::move(gen_names)),
      lab_names_(std::move(lab_names)),
      table_(lab_names_.size() * gen_names_.size() * gen_names_.size(), 0),
      terms_(gen_names_.size()) {}

void TwoStepAlgebra::set_constant(std::size_t label, std::size_t i, std::size_t j, int value) {
  if (label >= label_count() || i >= n() || j >= n()) throw std::out_of_range("structure constant index");
  table_[(label * n() + i) * n() + j] = value;
  rebuild_terms(i);
}

void TwoStepAlgebra::rebuild_terms(std::size_t i) {
  auto& row = terms_[i];
  row.clear();
  for (std::size_t j = 0; j < n(); ++j)
    for (std::size_t l = 0; l < label_count(); ++l)
      if (int c = constant(l, i, j); c != 0) row.push_back({j, l, c});
}

Element Element::zero(const TwoStepAlgebra& alg) {
  return {zero_vector(alg.generator_count()), zero_vector(alg.label_count())};
}

Element Element::generator(const TwoStepAlgebra& alg, std::size_t i) {
  auto e = zero(alg);
  e.neg1.at(i) = 1;
  return e;
}

Element Element::label(const TwoStepAlgebra& alg, std::size_t l) {
  auto e = zero(alg);
  e.neg2.at(l) = 1;
  return e;
}

TwoStepAlgebra build_lie_algebra(const LabeledDigraph& g) {
  const auto report = validate(g);
  if (!report.ok)
    throw std::invalid_argument("invalid graph: " + report.violations.front().rule + ": " +
                                report.violations.front().message);
  TwoStepAlgebra alg(g.vertices, g.labels);
  for (const auto& e : g.edges) {
    alg.set_constant(e.label, e.source, e.target, +1);
    alg.set_constant(e.label, e.target, e.source, -1);
  }
  return alg;
}

namespace {

void check_element(const TwoStepAlgebra& alg, const Element& e) {
  if (e.neg1.size() != alg.generator_count() || e.neg2.size() != alg.label_count())
    throw std::invalid_argument("element dimension does not match the algebra");
}

}  // namespace

Element bracket(const TwoStepAlgebra& alg, const Element& a, const Element& b) {
  check_element(alg, a);
  check_element(alg, b);
  auto out = Element::zero(alg);
  for (std::size_t i = 0; i < alg.generator_count(); ++i) {
    if (sgn(a.neg1[i]) == 0) continue;
    for (const auto& t : alg.terms(i))
      if (sgn(b.neg1[t.other]) != 0) out.neg2[t.label] += t.coefficient * a.neg1[i] * b.neg1[t.other];
  }
  return out;
}

RationalMatrix ad_matrix(const TwoStepAlgebra& alg, const RationalVector& x) {
  if (x.size() != alg.generator_count()) throw std::invalid_argument("ad_matrix: vector length mismatch");
  RationalMatrix m(alg.label_count(), alg.generator_count());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (const auto& t : alg.terms(i)) m(t.label, t.other) += t.coefficient * x[i];
  }
  return m;
}

KernelInfo kernel_in_g1(const TwoStepAlgebra& alg, const RationalVector& x) {
  KernelInfo info;
  info.basis = kernel_basis(ad_matrix(alg, x));
  info.dim = info.basis.size();
  return info;
}

CenterInfo center(const TwoStepAlgebra& alg) {
  const std::size_t n = alg.generator_count();
  std::vector<RationalMatrix> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(ad_matrix(alg, unit_vector(n, i)));

  CenterInfo info;
  info.in_g1 = solve_homogeneous(blocks, n);
  for (const auto& v : info.in_g1) info.basis.push_back({v, zero_vector(alg.label_count())});
  for (std::size_t l = 0; l < alg.label_count(); ++l) info.basis.push_back(Element::label(alg, l));
  return info;
}

bool check_structure(const TwoStepAlgebra& alg) {
  const std::size_t n = alg.generator_count();
  const std::size_t m = alg.label_count();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t i = 0; i < n; ++i) {
      if (alg.constant(l, i, i) != 0) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (alg.constant(l, i, j) != -alg.constant(l, j, i)) return false;
    }

  std::vector<Element> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Element::generator(alg, i));
  for (std::size_t l = 0; l < m; ++l) basis.push_back(Element::label(alg, l));

  // Grading: brackets of generators land in g_{-2}; brackets with g_{-2} vanish.
  const auto zero = Element::zero(alg);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto ab = bracket(alg, basis[a], basis[b]);
      if (!is_zero(ab.neg1)) return false;
      if ((a >= n || b >= n) && ab != zero) return false;
    }

  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis) {
        auto sum = bracket(alg, bracket(alg, u, v), w);
        const auto t2 = bracket(alg, bracket(alg, v, w), u);
        const auto t3 = bracket(alg, bracket(alg, w, u), v);
        for (std::size_t l = 0; l < m; ++l) sum.neg2[l] += t2.neg2[l] + t3.neg2[l];
        if (sum != zero) return false;
      }
  return true;
}

}  // namespace glie
