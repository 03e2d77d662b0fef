#include "glie/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace glie {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<RationalVector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// ---------------------------------------------------------------------------

SparseVector normalize(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseVector out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
      if (sgn(out.back().value) == 0) out.pop_back();
    } else if (sgn(e.value) != 0) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (sgn(dense[c]) != 0) out.push_back({c, dense[c]});
  return out;
}

RationalVector to_dense(const SparseVector& v, std::size_t n) {
  auto out = zero_vector(n);
  for (const auto& e : v) out.at(e.col) = e.value;
  return out;
}

void SparseSystem::add_row(SparseVector row) {
  if (row.empty()) return;
  if (row.back().col >= cols_) throw std::out_of_range("sparse row column out of range");
  rows_.push_back(std::move(row));
}

void SparseSystem::append(const RationalMatrix& block) {
  if (block.cols() != cols_)
    throw std::invalid_argument("block has " + std::to_string(block.cols()) + " columns, expected " +
                                std::to_string(cols_));
  for (std::size_t r = 0; r < block.rows(); ++r) add_row(to_sparse(block.row(r)));
}

namespace {

// row <- row - factor * pivot_row, where both are sorted sparse vectors.
SparseVector subtract_multiple(const SparseVector& row, const Rational& factor, const SparseVector& pivot_row) {
  SparseVector out;
  out.reserve(row.size() + pivot_row.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot_row.size()) {
    if (b == pivot_row.size() || (a < row.size() && row[a].col < pivot_row[b].col)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot_row[b].col < row[a].col) {
      out.push_back({pivot_row[b].col, -factor * pivot_row[b].value});
      ++b;
    } else {
      Rational v = row[a].value - factor * pivot_row[b].value;
      if (sgn(v) != 0) out.push_back({row[a].col, std::move(v)});
      ++a;
      ++b;
    }
  }
  return out;
}

// Gauss-Jordan on rows whose columns are local indices 0..ncols-1.
std::vector<SparseVector> reduce_block(std::vector<SparseVector> rows, std::size_t ncols) {
  std::vector<SparseVector> echelon;
  std::vector<long> pivot_row(ncols, -1);

  // Eliminates entries at pivot columns, starting at position `start`.
  auto eliminate = [&](SparseVector& row, std::size_t start) {
    std::size_t pos = start;
    while (pos < row.size()) {
      const long pr = pivot_row[row[pos].col];
      if (pr < 0) {
        ++pos;
        continue;
      }
      const Rational factor = row[pos].value;
      row = subtract_multiple(row, factor, echelon[static_cast<std::size_t>(pr)]);
    }
  };

  for (auto& row : rows) {
    eliminate(row, 0);
    if (row.empty()) continue;
    const Rational lead = row.front().value;
    if (lead != 1)
      for (auto& e : row) e.value /= lead;
    pivot_row[row.front().col] = static_cast<long>(echelon.size());
    echelon.push_back(std::move(row));
  }

  // Back substitution, highest pivot first, so that each row only meets
  // fully reduced rows.
  std::vector<std::size_t> order(echelon.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return echelon[a].front().col > echelon[b].front().col; });
  for (auto idx : order) eliminate(echelon[idx], 1);

  std::reverse(order.begin(), order.end());
  std::vector<SparseVector> out;
  out.reserve(echelon.size());
  for (auto idx : order) out.push_back(std::move(echelon[idx]));
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<SparseVector> sparse_rref(const SparseSystem& system, unsigned workers) {
  const std::size_t ncols = system.cols();
  const auto& rows = system.rows();

  DisjointSets sets(ncols);
  for (const auto& row : rows)
    for (std::size_t k = 1; k < row.size(); ++k) sets.unite(row[0].col, row[k].col);

  // Components that carry at least one row, ordered by smallest column.
  std::vector<long> component_of_root(ncols, -1);
  std::vector<std::vector<std::size_t>> component_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto root = sets.find(rows[r][0].col);
    if (component_of_root[root] < 0) {
      component_of_root[root] = static_cast<long>(component_rows.size());
      component_rows.emplace_back();
    }
    component_rows[static_cast<std::size_t>(component_of_root[root])].push_back(r);
  }
  std::vector<std::vector<std::size_t>> component_cols(component_rows.size());
  for (std::size_t c = 0; c < ncols; ++c) {
    const long comp = component_of_root[sets.find(c)];
    if (comp >= 0) component_cols[static_cast<std::size_t>(comp)].push_back(c);
  }

  std::vector<std::vector<SparseVector>> reduced(component_rows.size());
  auto solve_component = [&](std::size_t comp) {
    const auto& cols = component_cols[comp];
    std::vector<SparseVector> local;
    local.reserve(component_rows[comp].size());
    for (auto r : component_rows[comp]) {
      SparseVector row = rows[r];
      for (auto& e : row) e.col = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), e.col) - cols.begin());
      local.push_back(std::move(row));
    }
    auto result = reduce_block(std::move(local), cols.size());
    for (auto& row : result)
      for (auto& e : row) e.col = cols[e.col];
    reduced[comp] = std::move(result);
  };

  const std::size_t nthreads = std::max<std::size_t>(1, std::min<std::size_t>(workers, component_rows.size()));
  if (nthreads == 1) {
    for (std::size_t comp = 0; comp < component_rows.size(); ++comp) solve_component(comp);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t comp = t; comp < component_rows.size(); comp += nthreads) solve_component(comp);
      });
  }

  std::vector<SparseVector> out;
  for (auto& block : reduced)
    for (auto& row : block) out.push_back(std::move(row));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front().col < b.front().col; });
  return out;
}

SparseKernel sparse_kernel(const SparseSystem& system, unsigned workers) {
  const auto reduced = sparse_rref(system, workers);
  const std::size_t ncols = system.cols();

  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : reduced) is_pivot[row.front().col] = true;

  // For each free column f: the entries -R[r][f] placed at pivot(r).
  std::vector<std::vector<SparseEntry>> pivot_entries(ncols);
  for (const auto& row : reduced)
    for (std::size_t k = 1; k < row.size(); ++k)
      pivot_entries[row[k].col].push_back({row.front().col, -row[k].value});

  SparseKernel kernel;
  kernel.rank = reduced.size();
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    auto entries = std::move(pivot_entries[f]);
    entries.push_back({f, Rational(1)});
    kernel.basis.push_back(normalize(std::move(entries)));
  }
  return kernel;
}

RrefResult rref(const RationalMatrix& m) {
  SparseSystem system(m.cols());
  system.append(m);
  const auto reduced = sparse_rref(system);

  RrefResult result{RationalMatrix(m.rows(), m.cols()), reduced.size(), {}};
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    result.pivot_cols.push_back(reduced[r].front().col);
    for (const auto& e : reduced[r]) result.reduced(r, e.col) = e.value;
  }
  return result;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  SparseSystem system(m.cols());
  system.append(m);
  std::vector<RationalVector> out;
  for (const auto& v : sparse_kernel(system).basis) out.push_back(to_dense(v, m.cols()));
  return out;
}

std::vector<RationalVector> solve_homogeneous(std::span<const RationalMatrix> blocks, std::size_t cols) {
  SparseSystem system(cols);
  for (const auto& block : blocks) system.append(block);
  std::vector<RationalVector> out;
  for (const auto& v : sparse_kernel(system).basis) out.push_back(to_dense(v, cols));
  return out;
}

}  // namespace glie
