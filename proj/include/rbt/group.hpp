// The Bott group Gamma(A) generated by the lifted generators g~_1..g~_n.
//
// Every element is written uniquely as (v, s) with v in Z^n and s in F_2^n:
// the rigid motion t_v o g~_1^{s_1} ... g~_n^{s_n}. Writing D(s) and t(s)
// for the linear and translation parts of the ordered product, the group law
// is
//
//   (v, s)(w, u) = (v + D(s) w + f(s, u), s xor u),
//   f(s, u) = t(s) + D(s) t(u) - t(s xor u)  (an integer vector).
//
// Selectors s are bit masks: bit i is s_{i+1}. Sign diagonals D(s) are stored
// as masks of their -1 coordinates.

#ifndef RBT_GROUP_HPP_
#define RBT_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbt/affine.hpp"
#include "rbt/bott.hpp"

namespace rbt {

struct GroupElement {
  IntVec v;
  std::uint32_t s = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string selector_string(std::uint32_t s, int n);
std::uint32_t parse_selector(const std::string& bits);

// Finitely generated abelian group Z^free_rank + sum Z/torsion[i], with
// torsion[i] dividing torsion[i+1].
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::string str() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  friend auto operator<=>(const AbelianInvariants&, const AbelianInvariants&) = default;
};

struct CenterDescription {
  int rank = 0;
  std::vector<GroupElement> generators;
};

struct Holonomy {
  int rank = 0;
  // -1 masks of the distinct sign diagonals, ascending
  std::vector<std::uint32_t> elements;
};

// Coset data of a section Q -> Gamma for Q = (Z_2)^n with diagonal holonomy:
// for every selector, the -1 mask of its linear part and twice its
// translation part.
struct SectionTable {
  int n = 0;
  std::vector<std::uint32_t> neg;
  std::vector<IntVec> doubled_translation;
};

// True iff every nontrivial coset contains no element of finite order: for
// each s != 0 some coordinate fixed by D(s) carries a non-integral translation.
bool cosets_torsion_free(const SectionTable& table);

class BottGroup {
public:
  // Dense 2^n x 2^n cocycle tables bound the usable dimension.
  static constexpr int max_n = 10;

  explicit BottGroup(const BottMatrix& a);

  const BottMatrix& matrix() const { return a_; }
  int n() const { return n_; }
  std::uint32_t num_selectors() const { return 1u << n_; }

  std::uint32_t holonomy_mask(std::uint32_t s) const { return neg_[s]; }
  IntMatrix holonomy_matrix(std::uint32_t s) const { return IntMatrix::sign_diagonal(n_, neg_[s]); }
  // 2 t(s), entries in {-1, 0, 1}
  const IntVec& doubled_translation(std::uint32_t s) const { return t2_[s]; }
  DyVec section_translation(std::uint32_t s) const;
  const IntVec& cocycle(std::uint32_t s, std::uint32_t u) const { return f_[(std::size_t{s} << n_) | u]; }
  SectionTable section_table() const { return {n_, neg_, t2_}; }

  // The ordered product g~_1^{s_1} ... g~_n^{s_n} = (t(s), D(s)).
  AffineMap representative(std::uint32_t s) const;
  AffineMap realize(const GroupElement& x) const;

  GroupElement identity() const { return {IntVec(n_, 0), 0}; }
  // g~_{i+1}
  GroupElement generator(int i) const;
  GroupElement translation(IntVec v) const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(GroupElement x, std::int64_t k) const;

  // The (v, s) realizing m, if m lies in the group. Every selector whose
  // holonomy matches the linear part is tried, since s -> D(s) need not be
  // injective.
  std::optional<GroupElement> canonicalize(const AffineMap& m) const;
  bool contains(const AffineMap& m) const { return canonicalize(m).has_value(); }

  // (v, s) . x = v + D(s) x + t(s)
  DyVec act(const GroupElement& g, const DyVec& x) const;

  Holonomy holonomy() const;
  // Number of -1 eigenvalues of each holonomy element, ascending.
  std::vector<int> neg_count_multiset() const;
  bool torsion_free_check() const;
  // Smith form of the relations read off from g_i g_j g_i^{-1} for i < j.
  AbelianInvariants abelianization() const;
  // The center is the lattice of pure translations fixed by every holonomy
  // element; generators are returned in Hermite order.
  CenterDescription center_basis() const;

private:
  BottMatrix a_;
  int n_;
  std::vector<std::uint32_t> neg_;
  std::vector<IntVec> t2_;
  std::vector<IntVec> f_;
};

}  // namespace rbt

#endif
