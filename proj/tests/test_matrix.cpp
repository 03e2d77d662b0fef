#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "glie/matrix.hpp"
#include "oracles.hpp"

using namespace glie;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      // Mostly small integers, some zeros, some fractions.
      const auto pick = rng() % 7;
      if (pick < 3) continue;
      Rational q(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

// Low-rank product so that kernels are nontrivial.
RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  return random_matrix(rng, rows, inner) * random_matrix(rng, inner, cols);
}

oracle::Dense dense_rows(const RationalMatrix& m) {
  oracle::Dense out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

}  // namespace

TEST_CASE("rational rendering and parsing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rref examples") {
  SUBCASE("identity") {
    const auto r = rref(RationalMatrix::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == RationalMatrix::identity(2));
  }
  SUBCASE("proportional rows") {
    const auto r = rref(RationalMatrix{{1, 2}, {2, 4}});
    CHECK(r.rank == 1);
    CHECK(r.reduced == RationalMatrix{{1, 2}, {0, 0}});
  }
  SUBCASE("empty") {
    const auto r = rref(RationalMatrix(0, 5));
    CHECK(r.rank == 0);
    CHECK(r.pivot_cols.empty());
  }
  SUBCASE("fractions") {
    const auto r = rref(RationalMatrix{{2, 1, 0}, {0, 3, 1}});
    CHECK(r.reduced == RationalMatrix{{1, 0, Rational(-1, 6)}, {0, 1, Rational(1, 3)}});
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).empty());

  const auto k = kernel_basis(RationalMatrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RationalVector{-1, 1});

  const auto z = kernel_basis(RationalMatrix(2, 3));
  REQUIRE(z.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(z[i] == unit_vector(3, i));
}

TEST_CASE("solve_homogeneous examples") {
  std::vector<RationalMatrix> full{RationalMatrix{{1, 0}}, RationalMatrix{{0, 1}}};
  CHECK(solve_homogeneous(full, 2).empty());

  std::vector<RationalMatrix> twice{RationalMatrix{{1, -1}}, RationalMatrix{{1, -1}}};
  const auto k = solve_homogeneous(twice, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RationalVector{1, 1});

  CHECK(solve_homogeneous({}, 4).size() == 4);

  std::vector<RationalMatrix> mismatch{RationalMatrix{{1, 0}}, RationalMatrix{{1, 0, 0}}};
  CHECK_THROWS_AS(solve_homogeneous(mismatch, 2), std::invalid_argument);
}

TEST_CASE("kernel and rref properties on random matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = rng() % 7, cols = 1 + rng() % 7;
    const auto m = trial % 2 ? random_matrix(rng, rows, cols) : random_low_rank(rng, rows, cols, 1 + rng() % 3);
    CAPTURE(trial);

    const auto r = rref(m);
    const auto kernel = kernel_basis(m);
    CHECK(r.rank + kernel.size() == cols);
    for (const auto& v : kernel) CHECK(is_zero(m.apply(v)));

    // Idempotent, and the rank agrees with an independent elimination order.
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank == oracle::reverse_order_rank(dense_rows(m)));

    // RREF is canonical for the row space: permuting rows changes nothing.
    if (rows > 1) {
      RationalMatrix permuted(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) permuted(i, c) = m(rows - 1 - i, c);
      CHECK(rref(permuted).reduced == r.reduced);
    }
  }
}

TEST_CASE("exact arithmetic") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Rational q(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 997) + 1);
    q.canonicalize();
    if (sgn(q) == 0) continue;
    CHECK(q * (1 / q) == 1);
  }
  // No rounding: (1/3)*3 - 1 is exactly zero after many steps.
  Rational acc = 0;
  for (int k = 0; k < 300; ++k) acc += Rational(1, 3);
  CHECK(acc == 100);
}

TEST_CASE("sparse engine matches dense kernel and is independent of workers") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    // Block-diagonal structure exercises the component split.
    const std::size_t cols = 12;
    RationalMatrix m(10, cols);
    const auto a = random_low_rank(rng, 5, 6, 2);
    const auto b = random_matrix(rng, 5, 6);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        m(r, 2 * c) = a(r, c);
        m(5 + r, 2 * c + 1) = b(r, c);
      }
    SparseSystem system(cols);
    system.append(m);
    const auto one = sparse_kernel(system, 1);
    const auto four = sparse_kernel(system, 4);
    CHECK(one.basis == four.basis);
    CHECK(one.rank == four.rank);

    std::vector<RationalVector> dense;
    for (const auto& v : one.basis) dense.push_back(to_dense(v, cols));
    CHECK(dense == kernel_basis(m));
    CHECK(one.rank == oracle::reverse_order_rank(dense_rows(m)));
  }
}

TEST_CASE("normalize merges and drops zeros") {
  const auto v = normalize({{3, Rational(1)}, {1, Rational(2)}, {3, Rational(-1)}, {0, Rational(0)}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].col == 1);
  CHECK(v[0].value == 2);
}
