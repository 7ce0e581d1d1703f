#include "rbt/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace rbt {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

void axpy(IntVec& y, std::int64_t q, const IntVec& x) {
  if (q == 0)
    return;
  for (std::size_t j = 0; j < y.size(); ++j)
    y[j] = checked::sub(y[j], checked::mul(q, x[j]));
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::vector<IntVec> hermite_basis(std::vector<IntVec> rows, int n) {
  for (const IntVec& r : rows)
    if (static_cast<int>(r.size()) != n)
      throw DimensionError("hermite_basis: generator length mismatch");
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size())
        break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
        if (rows[i][col] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (rows[r][col] == 0)
      continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r])
        x = -x;
    for (std::size_t i = 0; i < r; ++i)
      axpy(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    ++r;
  }
  rows.resize(r);
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
  return rows;
}

LatticeReducer::LatticeReducer(const std::vector<IntVec>& generators, int n)
    : n_(n), basis_(hermite_basis(generators, n)) {
  if (static_cast<int>(basis_.size()) != n)
    throw std::invalid_argument("LatticeReducer: lattice is not of full rank");
  for (int i = 0; i < n; ++i) {
    if (basis_[i][i] <= 0)
      throw std::logic_error("LatticeReducer: unexpected Hermite shape");
    index_ = checked::mul(index_, basis_[i][i]);
  }
}

void LatticeReducer::reduce(IntVec& x) const {
  for (int i = 0; i < n_; ++i)
    axpy(x, floor_div(x[i], basis_[i][i]), basis_[i]);
}

std::int64_t LatticeReducer::code(const IntVec& x) const {
  std::int64_t c = 0;
  for (int i = 0; i < n_; ++i)
    c = c * basis_[i][i] + x[i];
  return c;
}

bool LatticeReducer::contains(IntVec x) const {
  reduce(x);
  return is_zero(x);
}

SmithResult smith_invariants(std::vector<IntVec> m, int cols) {
  for (const IntVec& r : m)
    if (static_cast<int>(r.size()) != cols)
      throw DimensionError("smith_invariants: relation length mismatch");
  const int rows = static_cast<int>(m.size());
  std::vector<std::int64_t> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // pick the smallest nonzero entry of the remaining block as pivot
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr < 0 || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0)
      break;
    std::swap(m[t], m[pr]);
    for (auto& row : m)
      std::swap(row[t], row[pc]);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        axpy(m[i], floor_div(m[i][t], m[t][t]), m[t]);
        if (m[i][t] != 0)
          clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        std::int64_t q = floor_div(m[t][j], m[t][t]);
        if (q != 0)
          for (int i = 0; i < rows; ++i)
            m[i][j] = checked::sub(m[i][j], checked::mul(q, m[i][t]));
        if (m[t][j] != 0)
          clean = false;
      }
      if (!clean) {
        // move the smallest remaining entry in row/column t onto the pivot
        int br = t, bc = t;
        for (int i = t + 1; i < rows; ++i)
          if (m[i][t] != 0 && std::llabs(m[i][t]) < std::llabs(m[br][bc])) {
            br = i;
            bc = t;
          }
        for (int j = t + 1; j < cols; ++j)
          if (m[t][j] != 0 && std::llabs(m[t][j]) < std::llabs(m[br][bc])) {
            br = t;
            bc = j;
          }
        std::swap(m[t], m[br]);
        for (auto& row : m)
          std::swap(row[t], row[bc]);
        continue;
      }
      // divisibility: the pivot must divide the rest of the block
      int bad_r = -1;
      for (int i = t + 1; i < rows && bad_r < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad_r = i;
            break;
          }
      if (bad_r < 0)
        break;
      for (int j = t; j < cols; ++j)
        m[t][j] = checked::add(m[t][j], m[bad_r][j]);
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  SmithResult res;
  res.free_rank = cols - static_cast<int>(diag.size());
  std::sort(diag.begin(), diag.end());
  for (std::int64_t d : diag)
    if (d != 1)
      res.torsion.push_back(d);
  return res;
}

}  // namespace rbt
