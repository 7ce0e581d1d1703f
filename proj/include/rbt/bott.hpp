// Bott matrices: upper unitriangular 0/1 matrices describing free
// (Z_2)^n actions on the n-torus.

#ifndef RBT_BOTT_HPP_
#define RBT_BOTT_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbt/affine.hpp"

namespace rbt {

// Coordinates are 0-based in code: entry(i, j) is a_{i+1, j+1}.
class BottMatrix {
public:
  // Largest dimension for which ids fit into 64 bits.
  static constexpr int max_n = 11;

  static BottMatrix identity(int n);
  // id is the strict upper part read as a binary numeral, row-major, first
  // entry most significant.
  static BottMatrix from_id(int n, std::uint64_t id);
  // Strict upper bits in row-major order, e.g. "010011" for n = 4.
  static BottMatrix from_bits(int n, std::string_view bits);
  // Full 0/1 rows; validates the unitriangular shape.
  static BottMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  // "n=4;bits=010011"
  static BottMatrix parse_compact(std::string_view text);

  int n() const { return n_; }
  std::uint64_t id() const { return id_; }
  int num_bits() const { return n_ * (n_ - 1) / 2; }
  bool entry(int i, int j) const;
  std::string bits() const;
  std::string compact() const;
  IntMatrix to_int_matrix() const;
  std::vector<std::vector<std::int64_t>> rows() const;
  // Bit j set iff a_{ij} = 1 for j > i (the coordinates g_i conjugates).
  std::uint32_t row_mask(int i) const;
  // Bit i set iff a_{ij} = 1 for i < j (the generators conjugating coordinate j).
  std::uint32_t column_mask(int j) const;

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;
  friend auto operator<=>(const BottMatrix&, const BottMatrix&) = default;

private:
  int n_ = 1;
  std::uint64_t id_ = 0;
};

// All Bott matrices of size n in ascending id order.
std::vector<BottMatrix> enumerate(int n);

// The lifts g~_i = (e_i / 2, D_i) of the generators of (Z_2)^n to R^n,
// where D_i negates exactly the coordinates j > i with a_ij = 1.
std::vector<AffineMap> lift_generators(const BottMatrix& a);

// Rank of the maximal torus action: number of coordinates that no generator
// conjugates (zero columns of the strict upper part).
int torus_rank(const BottMatrix& a);

// Every holonomy generator has determinant +1, i.e. every row of the strict
// upper part has an even number of ones.
bool orientable(const BottMatrix& a);

// Search for P with entries in [-bound, bound], det P = +-1 and P A P^{-1} = A'.
// Absence means only that the bounded search space contains no such P.
std::optional<IntMatrix> matrix_conjugacy(const BottMatrix& a, const BottMatrix& b, int bound = 1);

// Conventional names (I3, A1, ..., Aa32) for Bott matrices, loaded from data.
// Labels are unique per dimension only (A1 exists for n = 3 and n = 4).
class LabelTable {
public:
  LabelTable() = default;
  // JSON object {"3": {"A1": "100", ...}, "4": {...}}
  static LabelTable from_json_text(std::string_view text);
  static LabelTable load(const std::string& path);

  void add(const std::string& label, const BottMatrix& a);
  // n = 0 searches all dimensions and fails if the label is ambiguous.
  std::optional<BottMatrix> find(std::string_view label, int n = 0) const;
  std::optional<std::string> label_of(const BottMatrix& a) const;
  // Label if known, otherwise the compact form.
  std::string name(const BottMatrix& a) const;
  std::size_t size() const { return by_label_.size(); }
  bool empty() const { return by_label_.empty(); }
  // Labels for dimension n, ordered by matrix id.
  std::vector<std::string> labels(int n) const;

private:
  std::map<std::pair<int, std::string>, BottMatrix> by_label_;
  std::map<std::pair<int, std::uint64_t>, std::string> by_matrix_;
};

// Accepts, in order: a label from `table`, a compact "n=..;bits=.." string,
// a plain bit string (requires n_hint), or JSON {"n":..,"rows":[[..]]}.
BottMatrix parse_matrix_spec(std::string_view text, const LabelTable& table, int n_hint = 0);

}  // namespace rbt

#endif
