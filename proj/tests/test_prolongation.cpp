#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "glie/prolongation.hpp"
#include "oracles.hpp"

using namespace glie;

namespace {

TwoStepAlgebra algebra(const char* text) { return build_lie_algebra(parse_graph(text)); }

std::vector<std::size_t> dims(const ProlongationResult& r) {
  std::vector<std::size_t> out;
  for (const auto& [k, d] : r.report.level_dims) out.push_back(d);
  return out;
}

// dim g_0 from scratch: unknowns A (n x n, column-major by generator) and
// C (m x m); one equation per pair i < j and label l, with structure
// constants read straight off the edge list.
std::size_t g0_oracle(const std::vector<oracle::RawEdge>& edges, std::size_t n, std::size_t m) {
  std::vector<std::vector<std::vector<int>>> b(m, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (const auto& e : edges) {
    b[e.label][e.source][e.target] = 1;
    b[e.label][e.target][e.source] = -1;
  }
  const std::size_t unknowns = n * n + m * m;
  auto a_var = [&](std::size_t p, std::size_t i) { return i * n + p; };       // A x_i has coordinate p
  auto c_var = [&](std::size_t l, std::size_t l2) { return n * n + l2 * m + l; };  // C c_l2 has coordinate l
  oracle::Dense rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        std::vector<Rational> row(unknowns, Rational(0));
        for (std::size_t l2 = 0; l2 < m; ++l2) row[c_var(l, l2)] += b[l2][i][j];
        for (std::size_t p = 0; p < n; ++p) {
          row[a_var(p, i)] -= b[l][p][j];
          row[a_var(p, j)] -= b[l][i][p];
        }
        rows.push_back(std::move(row));
      }
  return unknowns - oracle::reverse_order_rank(rows);
}

std::vector<oracle::RawEdge> complete_edges(std::size_t n) {
  std::vector<oracle::RawEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, edges.size()});
  return edges;
}

}  // namespace

TEST_CASE("weighted monomial oracle") {
  CHECK(oracle::weighted_monomials(0) == 4);
  CHECK(oracle::weighted_monomials(1) == 6);
  CHECK(oracle::weighted_monomials(6) == 25);
}

TEST_CASE("K2: Heisenberg growth") {
  const auto result = prolong(algebra(oracle::kK2), 6);
  REQUIRE(result.report.level_dims.size() == 7);
  for (int k = 0; k <= 6; ++k) {
    CHECK(result.report.level_dims[k].first == k);
    CHECK(result.report.level_dims[k].second == oracle::weighted_monomials(k));
  }
  CHECK(result.report.termination == ProlongationReport::Termination::MaxDegree);
  CHECK(result.report.terminated_at == 6);
  CHECK_FALSE(result.report.total_dim_if_finite);
}

TEST_CASE("K3 is finite with total dimension 21") {
  const auto result = prolong(algebra(oracle::kK3), 10);
  CHECK(dims(result) == std::vector<std::size_t>{9, 3, 3, 0});
  CHECK(result.report.termination == ProlongationReport::Termination::Vanished);
  CHECK(result.report.terminated_at == 3);
  REQUIRE(result.report.total_dim_if_finite);
  CHECK(*result.report.total_dim_if_finite == 21);
  CHECK(result.report.g_minus_1 == 3);
  CHECK(result.report.g_minus_2 == 3);
}

TEST_CASE("C4 regression") {
  const auto result = prolong(algebra(oracle::kC4), 10);
  CHECK(dims(result) == std::vector<std::size_t>{8, 4, 4, 0});
  CHECK(*result.report.total_dim_if_finite == 24);
}

TEST_CASE("g0 of K_n has dimension n^2 and matches the edge-list oracle") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto alg = build_lie_algebra(generate_family(Family::Complete, n));
    const auto g0 = compute_g0(alg);
    CHECK(g0.dim() == n * n);
    CHECK(g0_oracle(complete_edges(n), n, n * (n - 1) / 2) == n * n);
  }
  for (const auto& [text, edges, n, m] :
       {std::tuple{oracle::kC4, std::vector<oracle::RawEdge>{{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 0, 3}}, 4, 4},
        std::tuple{oracle::kP3, std::vector<oracle::RawEdge>{{0, 1, 0}, {1, 2, 1}}, 3, 2},
        std::tuple{oracle::kPath3Same, std::vector<oracle::RawEdge>{{0, 1, 0}, {0, 2, 0}}, 3, 1},
        std::tuple{oracle::kStar3Same, std::vector<oracle::RawEdge>{{0, 1, 0}, {0, 2, 0}, {0, 3, 0}}, 4, 1}}) {
    CAPTURE(text);
    CHECK(compute_g0(algebra(text)).dim() == g0_oracle(edges, n, m));
  }
  CHECK(compute_g0(algebra(oracle::kPath3Same)).dim() == 7);
}

TEST_CASE("the grading element lies in g0") {
  for (const char* text : {oracle::kK2, oracle::kK3, oracle::kC4, oracle::kStar3Same}) {
    const auto alg = algebra(text);
    const auto g0 = compute_g0(alg);
    const std::size_t n = alg.generator_count(), m = alg.label_count();
    // Coordinates of the basis elements as (A, C) flattened; the grading
    // element is (I, 2I) and must be in their span.
    std::vector<RationalVector> cols;
    for (const auto& u : g0.basis) {
      RationalVector flat;
      const auto a = generator_action(alg, u), c = label_action(alg, u);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) flat.push_back(a(r, s));
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) flat.push_back(c(r, s));
      cols.push_back(std::move(flat));
    }
    RationalVector grading;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) grading.emplace_back(r == s ? 1 : 0);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) grading.emplace_back(r == s ? 2 : 0);
    const auto base = rank(RationalMatrix::from_columns(n * n + m * m, cols));
    cols.push_back(grading);
    CHECK(rank(RationalMatrix::from_columns(n * n + m * m, cols)) == base);
  }
}

TEST_CASE("every computed level satisfies the derivation identity and restricts injectively") {
  for (const auto& [text, degree] : {std::pair{oracle::kK2, 4}, std::pair{oracle::kK3, 3}, std::pair{oracle::kC4, 3},
                                     std::pair{oracle::kPath3Same, 4}, std::pair{oracle::kStar3Same, 3}}) {
    CAPTURE(text);
    const auto alg = algebra(text);
    const auto result = prolong(alg, degree);
    for (std::size_t k = 0; k < result.levels.size(); ++k) {
      CHECK(satisfies_derivation_identity(alg, result.levels, static_cast<int>(k)));
      CHECK(restriction_is_injective(alg, result.levels[k]));
    }
  }
}

TEST_CASE("corrupted elements fail the derivation identity") {
  const auto alg = algebra(oracle::kK3);
  auto levels = prolong(alg, 2).levels;
  REQUIRE(levels[1].dim() > 0);
  levels[1].basis[0].on_labels[0] = normalize({{0, Rational(1)}});
  CHECK_FALSE(satisfies_derivation_identity(alg, levels, 1));
}

TEST_CASE("vanishing propagates") {
  for (const char* text : {oracle::kK3, oracle::kC4}) {
    const auto alg = algebra(text);
    auto result = prolong(alg, 10);
    REQUIRE(result.report.termination == ProlongationReport::Termination::Vanished);
    const int k = result.report.terminated_at;
    const auto next = compute_level(alg, result.levels, k + 1);
    CHECK(next.dim() == 0);
  }
}

TEST_CASE("worker count does not change the bases") {
  for (const char* text : {oracle::kK3, oracle::kStar3Same}) {
    const auto alg = algebra(text);
    const auto one = prolong(alg, 4, 1);
    const auto four = prolong(alg, 4, 4);
    REQUIRE(one.levels.size() == four.levels.size());
    for (std::size_t k = 0; k < one.levels.size(); ++k) CHECK(one.levels[k].basis == four.levels[k].basis);
  }
}

TEST_CASE("evaluate") {
  const auto alg = algebra(oracle::kK2);
  const auto result = prolong(alg, 1);
  const auto& g0 = result.levels[0].basis;
  for (const auto& u : g0) {
    // u(c) = [u(a), b] + [a, u(b)] on the single label.
    const auto ua = evaluate(alg, result.levels, 0, u, {NegativeBasis::Generator, 0});
    const auto ub = evaluate(alg, result.levels, 0, u, {NegativeBasis::Generator, 1});
    const auto uc = evaluate(alg, result.levels, 0, u, {NegativeBasis::Label, 0});
    REQUIRE(ua.size() == 2);
    REQUIRE(uc.size() == 1);
    CHECK(uc[0] == ua[0] + ub[1]);
    // Linearity of the extension to g_{-1}.
    const auto sum = evaluate_on_g1(alg, result.levels, 0, u, {Rational(2), Rational(-3)});
    CHECK(sum[0] == 2 * ua[0] - 3 * ub[0]);
    CHECK(sum[1] == 2 * ua[1] - 3 * ub[1]);
  }
  // Degree one: u(x_i) lies in g_0, u(c) in g_{-1}.
  for (const auto& u : result.levels[1].basis) {
    CHECK(evaluate(alg, result.levels, 1, u, {NegativeBasis::Generator, 0}).size() == 4);
    CHECK(evaluate(alg, result.levels, 1, u, {NegativeBasis::Label, 0}).size() == 2);
  }
  CHECK_THROWS_AS(evaluate_on_g1(alg, result.levels, 0, g0[0], {Rational(1)}), std::invalid_argument);
}

TEST_CASE("argument errors") {
  const auto alg = algebra(oracle::kK3);
  const auto g0 = compute_g0(alg);
  std::vector<ProlongationLevel> only_g0{g0};
  CHECK_THROWS_AS(compute_level(alg, only_g0, 2), std::invalid_argument);
  CHECK_THROWS_AS(prolong(alg, -1), std::invalid_argument);
  CHECK_THROWS_AS(level_dim(alg, only_g0, 1), std::out_of_range);
  CHECK(level_dim(alg, only_g0, -1) == 3);
  CHECK(level_dim(alg, only_g0, -2) == 3);
  CHECK(level_dim(alg, only_g0, 0) == 9);
}
