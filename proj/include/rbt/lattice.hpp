// Integer lattice utilities: Hermite basis, coset reduction, Smith form.

#ifndef RBT_LATTICE_HPP_
#define RBT_LATTICE_HPP_

#include <cstdint>
#include <vector>

#include "rbt/affine.hpp"

namespace rbt {

// Row-style Hermite normal form of the lattice spanned by `generators`
// (vectors of length n). Rows are returned in pivot order; each pivot is
// positive and entries above a pivot are reduced into [0, pivot).
std::vector<IntVec> hermite_basis(std::vector<IntVec> generators, int n);

// Full-rank sublattice L of Z^n, used to pick canonical coset
// representatives of Z^n / L.
class LatticeReducer {
public:
  // Throws std::invalid_argument unless the generators span a rank-n lattice.
  LatticeReducer(const std::vector<IntVec>& generators, int n);

  int n() const { return n_; }
  // Index [Z^n : L] (product of the pivots).
  std::int64_t index() const { return index_; }
  const std::vector<IntVec>& basis() const { return basis_; }
  // Returns the representative with 0 <= x_i < pivot_i.
  void reduce(IntVec& x) const;
  // Mixed-radix code of a reduced vector, in [0, index()).
  std::int64_t code(const IntVec& reduced) const;
  bool contains(IntVec x) const;

private:
  int n_;
  std::int64_t index_ = 1;
  std::vector<IntVec> basis_;
};

// Invariant factors of Z^cols / (row lattice of `relations`), listed as
// (free rank, nontrivial torsion factors d_1 | d_2 | ...).
struct SmithResult {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;
};
SmithResult smith_invariants(std::vector<IntVec> relations, int cols);

}  // namespace rbt

#endif
