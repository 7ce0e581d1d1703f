// Finite quotients Gamma / L of a Bott group and their isomorphism
// fingerprints.
//
// L is m Z^n, optionally enlarged by the center of Gamma. Z^n is the subgroup
// generated by all squares in Gamma, and the center is characteristic, so any
// abstract isomorphism Gamma -> Gamma' carries L onto L' and induces an
// isomorphism of the quotients. Every field of the fingerprint is therefore
// an isomorphism invariant of Gamma.

#ifndef RBT_FINITE_QUOTIENT_HPP_
#define RBT_FINITE_QUOTIENT_HPP_

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rbt/group.hpp"
#include "rbt/lattice.hpp"

namespace rbt {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// value -> multiplicity, ascending by value
using Multiset = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct Fingerprint {
  std::int64_t order = 0;
  Multiset element_orders;
  std::int64_t center_order = 0;
  std::int64_t commutator_order = 0;
  AbelianInvariants abelianization;
  Multiset class_sizes;
  // Abelianizations of all index-2 subgroups, ascending.
  std::vector<AbelianInvariants> index_two;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

class FiniteQuotient {
public:
  static constexpr std::int64_t default_budget = std::int64_t{1} << 20;

  // Throws std::invalid_argument unless modulus is 2 or 4, BudgetExceeded if
  // the quotient could exceed `budget` elements.
  FiniteQuotient(const BottGroup& g, int modulus, bool mod_center, std::int64_t budget = default_budget);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  const std::vector<int>& generators() const { return generators_; }

  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[a]; }
  // index of the image of a group element
  int image(const GroupElement& x) const;

  int element_order(int a) const;
  std::vector<int> center() const;
  std::vector<int> commutator_subgroup() const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  // Membership bitmaps of the kernels of all surjections onto Z_2.
  std::vector<std::vector<char>> index_two_subgroups() const;
  // Q' when `subgroup` is empty, otherwise the derived subgroup of the given
  // subgroup (as membership bitmap).
  std::vector<char> derived_subgroup(const std::vector<char>& subgroup) const;
  // Invariant factors of H / H' for a subgroup H (all of Q when empty).
  AbelianInvariants abelianization(const std::vector<char>& subgroup = {}) const;
  Fingerprint fingerprint() const;

private:
  struct Element {
    IntVec x;  // doubled translation, reduced modulo the lattice
    std::uint32_t neg = 0;
  };
  int lookup(IntVec x, std::uint32_t neg) const;
  std::vector<int> closure(const std::vector<int>& gens) const;
  std::vector<int> generating_set(const std::vector<char>& subgroup) const;

  int n_;
  SectionTable section_;
  LatticeReducer lattice_;
  std::vector<Element> elements_;
  std::vector<int> index_;  // code * 2^n + neg -> element, or -1
  std::vector<int> inverse_;
  std::vector<int> generators_;
  int identity_ = 0;
  bool two_group_ = false;
};

Fingerprint finite_quotient_fingerprint(const BottGroup& g, int modulus, bool mod_center);

}  // namespace rbt

#endif
