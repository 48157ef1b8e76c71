#include "lieqr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieqr/kernels.hpp"

namespace lieqr {

int rank_exact(RatMatrix m) {
  if (m.empty()) return 0;
  const size_t nrows = m.size();
  const size_t ncols = m[0].size();
  for (const auto& r : m) {
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
  }

  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Int>> a(nrows, std::vector<Int>(ncols));
  for (size_t i = 0; i < nrows; ++i) {
    Int l(1);
    for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denom(q).get_mpz_t());
    for (size_t j = 0; j < ncols; ++j) a[i][j] = numer(m[i][j]) * (l / denom(m[i][j]));
  }

  Int prev(1);
  size_t r = 0;
  int rank = 0;
  for (size_t col = 0; col < ncols && r < nrows; ++col) {
    // Pivot: smallest |entry| among nonzero candidates, lowest row on ties.
    size_t best = nrows;
    for (size_t i = r; i < nrows; ++i) {
      if (a[i][col] == 0) continue;
      if (best == nrows || mpz_cmpabs(a[i][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == nrows) continue;
    std::swap(a[r], a[best]);

    const Int& piv = a[r][col];
    for (size_t i = r + 1; i < nrows; ++i) {
      for (size_t j = col + 1; j < ncols; ++j) {
        Int num = a[i][j] * piv - a[i][col] * a[r][j];
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("bareiss: inexact division");
        a[i][j] = q;
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<uint64_t> reduce_row_mod(const std::vector<Rat>& row, uint64_t p) {
  std::vector<uint64_t> out(row.size());
  for (size_t i = 0; i < row.size(); ++i) out[i] = reduce_mod(row[i], p);
  return out;
}

int rank_modular(const RatMatrix& m, uint64_t p) {
  if (m.empty()) return 0;
  ModularRref rref(static_cast<int>(m[0].size()), p);
  for (const auto& row : m) {
    if (row.size() != m[0].size()) throw std::invalid_argument("ragged matrix");
    rref.consume(reduce_row_mod(row, p));
  }
  return rref.rank();
}

bool ModularRref::consume(std::vector<uint64_t> row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
  const auto& k = kernels::active();
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint64_t f = row[pivots_[r]];
    if (f) k.addmul(row.data(), rows_[r].data(), row.size(), p_ - f, p_);
  }
  int pc = -1;
  for (int j = 0; j < cols_; ++j) {
    if (row[j]) {
      pc = j;
      break;
    }
  }
  if (pc < 0) return false;
  if (row[pc] != 1) k.scale(row.data(), row.size(), invmod(row[pc], p_), p_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint64_t f = rows_[r][pc];
    if (f) k.addmul(rows_[r].data(), row.data(), row.size(), p_ - f, p_);
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pc);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

std::vector<uint64_t> ModularRref::null_vector() const {
  if (full()) throw std::logic_error("null_vector: matrix has full column rank");
  int free_col = -1;
  for (int j = 0, r = 0; j < cols_; ++j) {
    if (r < rank() && pivots_[r] == j) {
      ++r;
      continue;
    }
    free_col = j;
    break;
  }
  std::vector<uint64_t> c(cols_, 0);
  c[free_col] = 1;
  for (int r = 0; r < rank(); ++r) {
    uint64_t v = rows_[r][free_col];
    if (v) c[pivots_[r]] = p_ - v;
  }
  return c;
}

bool ExactRref::consume(std::vector<Rat> row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = row[pivots_[r]];
    if (f == 0) continue;
    for (int j = 0; j < cols_; ++j) {
      if (rows_[r][j] != 0) row[j] -= f * rows_[r][j];
    }
  }
  int pc = -1;
  for (int j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      pc = j;
      break;
    }
  }
  if (pc < 0) return false;
  if (row[pc] != 1) {
    Rat inv = 1 / row[pc];
    for (auto& v : row) v *= inv;
  }
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = rows_[r][pc];
    if (f == 0) continue;
    for (int j = 0; j < cols_; ++j) {
      if (row[j] != 0) rows_[r][j] -= f * row[j];
    }
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pc);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

std::vector<Rat> ExactRref::null_vector() const {
  if (full()) throw std::logic_error("null_vector: matrix has full column rank");
  int free_col = -1;
  for (int j = 0, r = 0; j < cols_; ++j) {
    if (r < rank() && pivots_[r] == j) {
      ++r;
      continue;
    }
    free_col = j;
    break;
  }
  std::vector<Rat> c(cols_, Rat(0));
  c[free_col] = 1;
  for (int r = 0; r < rank(); ++r) {
    if (rows_[r][free_col] != 0) c[pivots_[r]] = -rows_[r][free_col];
  }
  return c;
}

}  // namespace lieqr
