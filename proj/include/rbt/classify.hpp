// Classification of real Bott manifolds up to diffeomorphism: invariants
// separate classes, verified affine conjugators merge them.

#ifndef RBT_CLASSIFY_HPP_
#define RBT_CLASSIFY_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbt/affine.hpp"
#include "rbt/bott.hpp"
#include "rbt/finite_quotient.hpp"
#include "rbt/group.hpp"

namespace rbt {

// Where conjugators (b, B) are looked for: integer B with entries in
// [-entry_bound, entry_bound], each b_j taken from `translations`.
struct SearchSpace {
  int entry_bound = 1;
  std::vector<Dyadic> translations = {Dyadic(0), Dyadic::from_parts(1, 2), Dyadic::from_parts(1, 1),
                                      Dyadic::from_parts(3, 2)};

  bool contains(const AffineMap& gamma) const;
  std::string str() const;
};

struct InvariantVector {
  int n = 0;
  int holonomy_rank = 0;
  bool orientable = true;
  int torus_rank = 0;
  std::vector<int> neg_counts;
  AbelianInvariants abelianization;
  int center_rank = 0;
  Fingerprint m2, m2_center, m4, m4_center;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  friend auto operator<=>(const InvariantVector&, const InvariantVector&) = default;
};

// Field names in comparison order.
const std::vector<std::string>& invariant_fields();
// First field in which the two vectors differ, or nullopt if equal.
std::optional<std::string> first_difference(const InvariantVector& x, const InvariantVector& y);

InvariantVector invariant_vector(const BottMatrix& a);

struct Witness {
  BottMatrix source;
  BottMatrix target;
  AffineMap gamma;

  int n() const { return source.n(); }
};

// gamma Gamma(source) gamma^{-1} = Gamma(target), decided by two-sided
// generator membership.
bool verify_witness(const Witness& w);
Witness compose(const Witness& second, const Witness& first);
Witness inverse(const Witness& w);

std::optional<Witness> conjugator_search(const BottMatrix& a, const BottMatrix& target, const SearchSpace& space);

struct PartitionClass {
  std::vector<BottMatrix> members;  // ascending id
  bool orientable = true;
  int torus_rank = 0;
  std::vector<Witness> witnesses;  // spanning tree
};

struct Separation {
  BottMatrix first;
  BottMatrix second;
  std::string field;
};

struct Partition {
  int n = 0;
  SearchSpace space;
  std::vector<PartitionClass> classes;  // ordered by smallest id
  std::vector<Separation> separations;  // one per pair of classes, by representatives

  // Index of the class containing a.
  int class_of(const BottMatrix& a) const;
};

// Report name of the class at `index`: "(i)", "(ii)", ...
std::string class_name(std::size_t index);

// Two matrices share every invariant but the search space holds no
// conjugator between them.
struct Undetermined : std::runtime_error {
  Undetermined(BottMatrix a, BottMatrix b, const std::string& what)
      : std::runtime_error(what), first(a), second(b) {}
  BottMatrix first;
  BottMatrix second;
};

// threads <= 0 reads BOTT_THREADS, falling back to the hardware count.
Partition classify(int n, const SearchSpace& space = {}, int threads = 0);

// A published class table: label lists with annotations.
struct ReferenceClass {
  std::string name;
  bool orientable = true;
  int torus_rank = 0;
  std::vector<std::string> labels;
};

struct Reference {
  int n = 0;
  std::vector<ReferenceClass> classes;
};

struct Comparison {
  bool match = true;
  std::vector<std::string> lines;
};

Comparison compare_with_reference(const Partition& p, const Reference& ref, const LabelTable& labels);

// Connected components of the bounded GL(n, Z) conjugacy relation among
// the given matrices (matrix_conjugacy with the given bound).
std::vector<std::vector<BottMatrix>> matrix_conjugacy_components(const std::vector<BottMatrix>& members,
                                                                  int bound = 1);

}  // namespace rbt

#endif
