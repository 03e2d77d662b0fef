#include "glie/rigidity.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "glie/prolongation.hpp"

namespace glie {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::DegreeOne: return "degree-one";
    case Provenance::EqualLabel: return "equal-label";
    case Provenance::Search: return "search";
    case Provenance::IsolatedVertex: return "isolated-vertex";
  }
  return "unknown";
}

std::string_view kind_name(RigidityVerdict::Kind kind) {
  switch (kind) {
    case RigidityVerdict::Kind::Finite: return "Finite";
    case RigidityVerdict::Kind::Infinite: return "Infinite";
    case RigidityVerdict::Kind::Undetermined: return "Undetermined";
  }
  return "unknown";
}

namespace {

// rank(M) <= 1: every nonzero row is a multiple of the first nonzero row.
bool rank_at_most_one(const RationalMatrix& m) {
  std::optional<std::size_t> first;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    auto nz = std::find_if(row.begin(), row.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == row.end()) continue;
    if (!first) {
      first = r;
      lead = static_cast<std::size_t>(nz - row.begin());
      continue;
    }
    const auto base = m.row(*first);
    const Rational factor = row[lead] / base[lead];
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (row[c] != factor * base[c]) return false;
  }
  return true;
}

}  // namespace

std::optional<CorankOneCertificate> make_certificate(const TwoStepAlgebra& alg, const RationalVector& x,
                                                     Provenance provenance) {
  if (x.size() != alg.generator_count() || is_zero(x)) return std::nullopt;
  const auto ad = ad_matrix(alg, x);
  if (!rank_at_most_one(ad)) return std::nullopt;
  CorankOneCertificate cert{x, kernel_basis(ad), provenance};
  // ad_x = 0: any n-1 kernel vectors span a hyperplane annihilated by x.
  if (!x.empty() && cert.hyperplane_basis.size() == x.size()) cert.hyperplane_basis.pop_back();
  return cert;
}

CertificateCheck verify_certificate(const TwoStepAlgebra& alg, const CorankOneCertificate& cert) {
  CertificateCheck check;
  const std::size_t n = alg.generator_count();
  auto fail = [&](std::string reason) { check.reasons.push_back(std::move(reason)); };

  if (cert.x.size() != n) {
    fail("x has length " + std::to_string(cert.x.size()) + ", expected " + std::to_string(n));
    return check;
  }
  if (is_zero(cert.x)) fail("x is zero");
  const auto ad = ad_matrix(alg, cert.x);
  const auto ad_rank = rank(ad);
  if (ad_rank > 1) fail("rank(ad_x) = " + std::to_string(ad_rank) + " > 1");

  if (cert.hyperplane_basis.size() + 1 != n)
    fail("hyperplane has " + std::to_string(cert.hyperplane_basis.size()) + " vectors, expected " +
         std::to_string(n == 0 ? 0 : n - 1));
  bool shapes_ok = true;
  for (std::size_t k = 0; k < cert.hyperplane_basis.size(); ++k) {
    const auto& y = cert.hyperplane_basis[k];
    if (y.size() != n) {
      fail("hyperplane vector " + std::to_string(k) + " has wrong length");
      shapes_ok = false;
      continue;
    }
    if (!is_zero(ad.apply(y))) fail("hyperplane vector " + std::to_string(k) + " is not in ker ad_x");
  }
  if (shapes_ok && !cert.hyperplane_basis.empty()) {
    RationalMatrix rows(cert.hyperplane_basis.size(), n);
    for (std::size_t k = 0; k < cert.hyperplane_basis.size(); ++k)
      for (std::size_t c = 0; c < n; ++c) rows(k, c) = cert.hyperplane_basis[k][c];
    if (rank(rows) != cert.hyperplane_basis.size()) fail("hyperplane vectors are linearly dependent");
  }
  check.ok = check.reasons.empty();
  return check;
}

namespace {

std::optional<Witness> vertex_witness(const LabeledDigraph& g, std::size_t v, Provenance provenance) {
  const auto alg = build_lie_algebra(g);
  auto cert = make_certificate(alg, unit_vector(g.vertex_count(), v), provenance);
  if (!cert) return std::nullopt;
  return Witness{v, std::move(*cert)};
}

}  // namespace

std::optional<Witness> degree_one_witness(const LabeledDigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (degree(g, v) == 1) return vertex_witness(g, v, Provenance::DegreeOne);
  return std::nullopt;
}

std::optional<Witness> equal_label_witness(const LabeledDigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto nbs = neighbors(g, v);
    if (nbs.size() < 2) continue;
    const bool shared = std::all_of(nbs.begin(), nbs.end(), [&](const Neighbor& nb) { return nb.label == nbs[0].label; });
    if (shared) return vertex_witness(g, v, Provenance::EqualLabel);
  }
  return std::nullopt;
}

std::optional<Witness> isolated_vertex_witness(const LabeledDigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (degree(g, v) == 0) return vertex_witness(g, v, Provenance::IsolatedVertex);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Search

SearchBudget parse_search_budget(std::string_view text) {
  if (text == "basis-only") return SearchBudget::basis_only();
  if (text == "signed-pairs") return SearchBudget::signed_pairs();
  constexpr std::string_view prefix = "exhaustive:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto rest = text.substr(prefix.size());
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("exhaustive budget needs ':SUPPORT'");
    std::vector<Rational> coefficients;
    auto list = rest.substr(0, colon);
    while (!list.empty()) {
      const auto comma = list.find(',');
      coefficients.push_back(parse_rational(list.substr(0, comma)));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    const auto support = std::string(rest.substr(colon + 1));
    if (support.empty() || !std::all_of(support.begin(), support.end(), ::isdigit))
      throw std::invalid_argument("bad support bound '" + support + "'");
    return SearchBudget::exhaustive(std::move(coefficients), std::stoul(support));
  }
  throw std::invalid_argument("unknown search budget '" + std::string(text) + "'");
}

std::string to_string(const SearchBudget& budget) {
  switch (budget.kind) {
    case SearchBudget::Kind::BasisOnly: return "basis-only";
    case SearchBudget::Kind::SignedPairs: return "signed-pairs";
    case SearchBudget::Kind::Exhaustive: {
      std::string out = "exhaustive:";
      for (std::size_t k = 0; k < budget.coefficients.size(); ++k)
        out += (k ? "," : "") + to_string(budget.coefficients[k]);
      return out + ":" + std::to_string(budget.max_support);
    }
  }
  return "unknown";
}

namespace {

// Streams candidate vectors in the documented order.
class CandidateStream {
 public:
  CandidateStream(std::size_t n, const SearchBudget& budget) : n_(n), budget_(budget) {
    for (const auto& c : budget.coefficients)
      if (sgn(c) != 0 && std::find(nonzero_.begin(), nonzero_.end(), c) == nonzero_.end()) nonzero_.push_back(c);
    if (budget.kind != SearchBudget::Kind::Exhaustive) nonzero_ = {Rational(1)};
  }

  std::optional<RationalVector> next() {
    switch (budget_.kind) {
      case SearchBudget::Kind::BasisOnly:
        if (index_ < n_) return unit_vector(n_, index_++);
        return std::nullopt;
      case SearchBudget::Kind::SignedPairs: {
        if (index_ < n_) return unit_vector(n_, index_++);
        // Pairs (i, j, sign) after the basis vectors.
        while (pair_i_ < n_) {
          if (pair_j_ <= pair_i_) pair_j_ = pair_i_ + 1;
          if (pair_j_ >= n_) {
            ++pair_i_;
            pair_j_ = 0;
            continue;
          }
          auto v = unit_vector(n_, pair_i_);
          v[pair_j_] = minus_ ? -1 : 1;
          if (minus_) ++pair_j_;
          minus_ = !minus_;
          return v;
        }
        return std::nullopt;
      }
      case SearchBudget::Kind::Exhaustive:
        return next_exhaustive();
    }
    return std::nullopt;
  }

 private:
  std::optional<RationalVector> next_exhaustive() {
    if (nonzero_.empty()) return std::nullopt;
    const std::size_t max_support = std::min(budget_.max_support, n_);
    while (true) {
      if (support_.empty()) {
        if (size_ >= max_support) return std::nullopt;
        ++size_;
        support_.resize(size_);
        for (std::size_t k = 0; k < size_; ++k) support_[k] = k;
        digits_.assign(size_, 0);
      } else if (!advance_digits() && !advance_subset()) {
        support_.clear();
        continue;
      }
      auto v = zero_vector(n_);
      for (std::size_t k = 0; k < size_; ++k) v[support_[k]] = nonzero_[digits_[k]];
      return v;
    }
  }

  // Odometer over coefficient choices, first support position most significant.
  bool advance_digits() {
    for (std::size_t k = size_; k-- > 0;) {
      if (++digits_[k] < nonzero_.size()) return true;
      digits_[k] = 0;
    }
    return false;
  }

  // Next subset of size_ in lexicographic order.
  bool advance_subset() {
    for (std::size_t k = size_; k-- > 0;) {
      if (support_[k] < n_ - size_ + k) {
        ++support_[k];
        for (std::size_t r = k + 1; r < size_; ++r) support_[r] = support_[r - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  const SearchBudget& budget_;
  std::vector<Rational> nonzero_;
  std::size_t index_ = 0;
  std::size_t pair_i_ = 0, pair_j_ = 0;
  bool minus_ = false;
  std::size_t size_ = 0;
  std::vector<std::size_t> support_;
  std::vector<std::size_t> digits_;
};

}  // namespace

SearchResult certificate_search(const TwoStepAlgebra& alg, const SearchBudget& budget, unsigned workers) {
  SearchResult result;
  CandidateStream stream(alg.generator_count(), budget);
  constexpr std::size_t batch_size = 1024;
  const std::size_t nthreads = std::max(1U, workers);

  while (true) {
    std::vector<RationalVector> batch;
    while (batch.size() < batch_size && result.candidates_tried + batch.size() < budget.max_candidates) {
      auto next = stream.next();
      if (!next) break;
      batch.push_back(std::move(*next));
    }
    if (batch.empty()) {
      result.budget_exhausted = result.candidates_tried >= budget.max_candidates;
      return result;
    }

    // Each worker scans a strided slice; the lowest hit index wins.
    std::vector<std::size_t> first_hit(nthreads, batch.size());
    auto scan = [&](std::size_t t) {
      for (std::size_t k = t; k < batch.size(); k += nthreads)
        if (rank_at_most_one(ad_matrix(alg, batch[k]))) {
          first_hit[t] = k;
          return;
        }
    };
    if (nthreads == 1) {
      scan(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(scan, t);
    }
    const auto hit = *std::min_element(first_hit.begin(), first_hit.end());
    if (hit < batch.size()) {
      result.candidates_tried += hit + 1;
      result.certificate = make_certificate(alg, batch[hit], Provenance::Search);
      return result;
    }
    result.candidates_tried += batch.size();
  }
}

// ---------------------------------------------------------------------------

namespace {

void infinite(RigidityVerdict& verdict, CorankOneCertificate cert, std::string tag) {
  verdict.kind = RigidityVerdict::Kind::Infinite;
  verdict.certificate = std::move(cert);
  verdict.reasoning.push_back(std::move(tag));
}

void run_prolongation(RigidityVerdict& verdict, const TwoStepAlgebra& alg, const ClassifyOptions& options) {
  const auto result = prolong(alg, options.max_prolongation_degree, options.workers);
  for (const auto& [degree, dim] : result.report.level_dims) verdict.level_dims.push_back(dim);
  if (result.report.termination == ProlongationReport::Termination::Vanished) {
    verdict.kind = RigidityVerdict::Kind::Finite;
    verdict.vanishing_degree = static_cast<std::size_t>(result.report.terminated_at);
    verdict.reasoning.push_back("prolongation-vanished");
  } else {
    verdict.kind = RigidityVerdict::Kind::Undetermined;
    verdict.explored_to = static_cast<std::size_t>(result.report.terminated_at);
    verdict.reasoning.push_back("prolongation-max-degree");
  }
}

}  // namespace

RigidityVerdict classify(const LabeledDigraph& g, const ClassifyOptions& options) {
  const auto report = validate(g);
  if (!report.ok) throw std::invalid_argument("invalid graph: " + report.violations.front().message);
  const auto alg = build_lie_algebra(g);
  RigidityVerdict verdict;

  if (auto w = isolated_vertex_witness(g)) {
    infinite(verdict, std::move(w->certificate), "isolated-vertex");
    return verdict;
  }

  if (report.stats.satisfies_h) {
    verdict.reasoning.push_back("hypothesis-H");
    if (auto w = degree_one_witness(g)) {
      infinite(verdict, std::move(w->certificate), "degree-one");
      return verdict;
    }
    verdict.reasoning.push_back("no-degree-one-vertex");
    run_prolongation(verdict, alg, options);
    return verdict;
  }

  verdict.reasoning.push_back("hypothesis-H-fails");
  if (auto w = degree_one_witness(g)) {
    infinite(verdict, std::move(w->certificate), "degree-one");
    return verdict;
  }
  if (auto w = equal_label_witness(g)) {
    infinite(verdict, std::move(w->certificate), "equal-label");
    return verdict;
  }
  auto search = certificate_search(alg, options.search_budget, options.workers);
  if (search.certificate) {
    infinite(verdict, std::move(*search.certificate), "search:" + to_string(options.search_budget));
    return verdict;
  }
  verdict.reasoning.push_back("search-exhausted:" + to_string(options.search_budget));
  run_prolongation(verdict, alg, options);
  return verdict;
}

}  // namespace glie
