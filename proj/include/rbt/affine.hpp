// Affine motions of R^n with dyadic translation and integer linear part.
//
// An AffineMap (b, B) acts by x -> B x + b. Composition follows the usual
// rule (s, M)(t, N) = (M t + s, M N); all arithmetic is exact.

#ifndef RBT_AFFINE_HPP_
#define RBT_AFFINE_HPP_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbt/dyadic.hpp"

namespace rbt {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using DyVec = std::vector<Dyadic>;
using IntVec = std::vector<std::int64_t>;

DyVec to_dyvec(std::span<const std::int64_t> v);
DyVec operator+(const DyVec& a, const DyVec& b);
DyVec operator-(const DyVec& a, const DyVec& b);
DyVec operator-(const DyVec& a);
DyVec scaled(const DyVec& a, const Dyadic& c);
bool is_integral(const DyVec& v);
// Componentwise integer conversion; throws if some entry is not an integer.
IntVec to_intvec(const DyVec& v);
// e_i of length n scaled by c
DyVec unit(int n, int i, Dyadic c = Dyadic(1));

// Dense square integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(int n);
  static IntMatrix diagonal(std::span<const std::int64_t> d);
  // diag(+-1) with -1 exactly at the coordinates set in neg_mask (bit j = coordinate j)
  static IntMatrix sign_diagonal(int n, std::uint32_t neg_mask);

  int n() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[idx(i, j)]; }
  std::int64_t& operator()(int i, int j) { return a_[idx(i, j)]; }
  std::vector<std::vector<std::int64_t>> rows() const;

  bool is_identity() const;
  bool is_diagonal() const;
  // True iff the matrix is diagonal with entries +-1.
  bool is_sign_diagonal() const;
  // For a sign diagonal matrix: bit j set iff entry (j,j) is -1.
  std::uint32_t neg_mask() const;

  std::int64_t determinant() const;
  bool is_unimodular() const;
  // Exact inverse; throws std::domain_error unless det = +-1.
  IntMatrix inverse() const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

DyVec operator*(const IntMatrix& m, const DyVec& v);
IntVec operator*(const IntMatrix& m, const IntVec& v);

struct AffineMap {
  DyVec translation;
  IntMatrix linear;

  AffineMap() = default;
  AffineMap(DyVec b, IntMatrix B);

  static AffineMap identity(int n);
  static AffineMap pure_translation(DyVec b);

  int n() const { return linear.n(); }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// x -> M x + s
DyVec apply(const AffineMap& f, const DyVec& x);
// f o g: (M t + s, M N)
AffineMap compose(const AffineMap& f, const AffineMap& g);
// (-M^{-1} s, M^{-1}); throws std::domain_error if M is not unimodular.
AffineMap inverse(const AffineMap& f);
// f g f^{-1}
AffineMap conjugate(const AffineMap& f, const AffineMap& g);
// The rotational part L(f) and the translation part T(f).
std::pair<IntMatrix, DyVec> decompose(const AffineMap& f);

std::string to_string(const DyVec& v);
std::string to_string(const AffineMap& f);

}  // namespace rbt

#endif
