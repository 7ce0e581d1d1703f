// Group extensions 0 -> Z^n -> E -> (Z_2)^n -> 1 with diagonal action,
// written additively: (v, s)(w, u) = (v + phi(s) w + f(s, u), s + u).

#ifndef RBT_EXTENSION_HPP_
#define RBT_EXTENSION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rbt/affine.hpp"
#include "rbt/group.hpp"

namespace rbt {

// s -> phi(s), stored as -1 masks of diagonal sign matrices.
struct ActionTable {
  int n = 0;
  std::vector<std::uint32_t> neg;

  std::uint32_t operator()(std::uint32_t s) const { return neg[s]; }
  // phi(0) = I and phi(s + u) = phi(s) phi(u)
  bool is_homomorphism() const;

  static ActionTable trivial(int n);
  static ActionTable of(const BottGroup& g);
};

// Dense table of f(s, u), indexed by (s << n) | u.
template <class T>
struct CocycleTableOf {
  int n = 0;
  std::vector<std::vector<T>> values;

  static CocycleTableOf zero(int n) {
    return {n, std::vector<std::vector<T>>(std::size_t{1} << (2 * n), std::vector<T>(n, T{}))};
  }
  std::vector<T>& at(std::uint32_t s, std::uint32_t u) { return values[(std::size_t{s} << n) | u]; }
  const std::vector<T>& at(std::uint32_t s, std::uint32_t u) const { return values[(std::size_t{s} << n) | u]; }

  friend bool operator==(const CocycleTableOf&, const CocycleTableOf&) = default;
};

using CocycleTable = CocycleTableOf<std::int64_t>;
using RealCocycleTable = CocycleTableOf<Dyadic>;

CocycleTable cocycle_of(const BottGroup& g);

// Normalization f(s, 0) = f(0, s) = 0 and the cocycle identity
// phi(s) f(u, w) + f(s, u + w) = f(s, u) + f(s + u, w), checked exhaustively.
bool check_cocycle(const ActionTable& phi, const CocycleTable& f);

// (delta lambda)(s, u) = phi(s) lambda(u) + lambda(s) - lambda(s + u).
// Throws std::invalid_argument unless lambda(0) = 0.
RealCocycleTable coboundary(const ActionTable& phi, const std::vector<DyVec>& lambda);
CocycleTable coboundary(const ActionTable& phi, const std::vector<IntVec>& lambda);

RealCocycleTable to_real(const CocycleTable& f);

// The abstract extension defined by (phi, f).
class Extension {
public:
  Extension(ActionTable phi, CocycleTable f);

  int n() const { return phi_.n; }
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement identity() const { return {IntVec(n(), 0), 0}; }
    // Some x != 1 with x^2 = 1, if one exists. For x = (v, s) the square is
  // (v + phi(s) v + f(s, s), 0), so this is decided coset by coset.
  std::optional<GroupElement> find_involution() const;

private:
  ActionTable phi_;
  CocycleTable f_;
};

// Compares the extension law with the group law on all pairs with
// translation entries in [-radius, radius].
bool extension_equals_group(const ActionTable& phi, const CocycleTable& f, const BottGroup& g, int radius = 1);

// Checks that (v, s) -> (v + lambda(s), s) is an isomorphism from the
// extension with cocycle f to the one with cocycle f - delta lambda, on the
// same box.
bool coboundary_shift_is_isomorphism(const ActionTable& phi, const CocycleTable& f,
                                     const std::vector<IntVec>& lambda, int radius = 1);

}  // namespace rbt

#endif
