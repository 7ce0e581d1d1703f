#include "rbt/affine.hpp"

#include <sstream>

namespace rbt {

namespace {

void require_same(int a, int b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

}  // namespace

DyVec to_dyvec(std::span<const std::int64_t> v) { return DyVec(v.begin(), v.end()); }

DyVec operator+(const DyVec& a, const DyVec& b) {
  require_same(static_cast<int>(a.size()), static_cast<int>(b.size()), "vector sum");
  DyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

DyVec operator-(const DyVec& a, const DyVec& b) {
  require_same(static_cast<int>(a.size()), static_cast<int>(b.size()), "vector difference");
  DyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] - b[i];
  return r;
}

DyVec operator-(const DyVec& a) {
  DyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

DyVec scaled(const DyVec& a, const Dyadic& c) {
  DyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] * c;
  return r;
}

bool is_integral(const DyVec& v) {
  for (const Dyadic& d : v)
    if (!d.is_integer())
      return false;
  return true;
}

IntVec to_intvec(const DyVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer())
      throw std::domain_error("vector entry " + v[i].str() + " is not an integer");
    r[i] = v[i].numerator();
  }
  return r;
}

DyVec unit(int n, int i, Dyadic c) {
  DyVec r(n);
  r.at(i) = c;
  return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    require_same(static_cast<int>(row.size()), n_, "matrix row");
    int j = 0;
    for (std::int64_t x : row)
      (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n_; ++i) {
    require_same(static_cast<int>(rows[i].size()), m.n_, "matrix row");
    for (int j = 0; j < m.n_; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const std::int64_t> d) {
  IntMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i)
    m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::sign_diagonal(int n, std::uint32_t neg_mask) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    m(i, i) = (neg_mask >> i & 1u) ? -1 : 1;
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> r(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      r[i][j] = (*this)(i, j);
  return r;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0)
        return false;
  return true;
}

bool IntMatrix::is_sign_diagonal() const {
  if (!is_diagonal())
    return false;
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) != 1 && (*this)(i, i) != -1)
      return false;
  return true;
}

std::uint32_t IntMatrix::neg_mask() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < n_; ++i)
    if ((*this)(i, i) < 0)
      mask |= 1u << i;
  return mask;
}

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
std::int64_t IntMatrix::determinant() const {
  if (n_ == 0)
    return 1;
  std::vector<std::int64_t> m = a_;
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<std::size_t>(i) * n_ + j]; };
  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n_ && at(p, k) == 0)
        ++p;
      if (p == n_)
        return 0;
      for (int j = 0; j < n_; ++j)
        std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j)
        at(i, j) = checked::sub(checked::mul(at(i, j), at(k, k)), checked::mul(at(i, k), at(k, j))) / prev;
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

bool IntMatrix::is_unimodular() const {
  std::int64_t d = determinant();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::inverse() const {
  std::int64_t det = determinant();
  if (det != 1 && det != -1)
    throw std::domain_error("matrix is not unimodular (det = " + std::to_string(det) + ")");
  IntMatrix inv(n_);
  if (n_ == 1) {
    inv(0, 0) = det;
    return inv;
  }
  IntMatrix minor(n_ - 1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      for (int r = 0, mr = 0; r < n_; ++r) {
        if (r == i)
          continue;
        for (int c = 0, mc = 0; c < n_; ++c) {
          if (c == j)
            continue;
          minor(mr, mc++) = (*this)(r, c);
        }
        ++mr;
      }
      std::int64_t cof = minor.determinant();
      if ((i + j) % 2)
        cof = -cof;
      inv(j, i) = cof * det;
    }
  return inv;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_same(a.n_, b.n_, "matrix product");
  IntMatrix r(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0)
        continue;
      for (int j = 0; j < a.n_; ++j)
        r(i, j) = checked::add(r(i, j), checked::mul(x, b(k, j)));
    }
  return r;
}

DyVec operator*(const IntMatrix& m, const DyVec& v) {
  require_same(m.n(), static_cast<int>(v.size()), "matrix-vector product");
  DyVec r(v.size());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      if (m(i, j) != 0)
        r[i] += Dyadic(m(i, j)) * v[j];
  return r;
}

IntVec operator*(const IntMatrix& m, const IntVec& v) {
  require_same(m.n(), static_cast<int>(v.size()), "matrix-vector product");
  IntVec r(v.size(), 0);
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j)
      r[i] = checked::add(r[i], checked::mul(m(i, j), v[j]));
  return r;
}

AffineMap::AffineMap(DyVec b, IntMatrix B) : translation(std::move(b)), linear(std::move(B)) {
  require_same(static_cast<int>(translation.size()), linear.n(), "affine map");
}

AffineMap AffineMap::identity(int n) { return {DyVec(n), IntMatrix::identity(n)}; }

AffineMap AffineMap::pure_translation(DyVec b) {
  int n = static_cast<int>(b.size());
  return {std::move(b), IntMatrix::identity(n)};
}

DyVec apply(const AffineMap& f, const DyVec& x) { return f.linear * x + f.translation; }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  require_same(f.n(), g.n(), "compose");
  return {f.linear * g.translation + f.translation, f.linear * g.linear};
}

AffineMap inverse(const AffineMap& f) {
  IntMatrix inv = f.linear.inverse();
  return {-(inv * f.translation), inv};
}

AffineMap conjugate(const AffineMap& f, const AffineMap& g) {
  return compose(compose(f, g), inverse(f));
}

std::pair<IntMatrix, DyVec> decompose(const AffineMap& f) { return {f.linear, f.translation}; }

std::string to_string(const DyVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const AffineMap& f) {
  std::ostringstream os;
  os << '(' << to_string(f.translation) << ", [";
  for (int i = 0; i < f.n(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < f.n(); ++j)
      os << (j ? " " : "") << f.linear(i, j);
  }
  os << "])";
  return os.str();
}

}  // namespace rbt
