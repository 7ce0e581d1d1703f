#include "rbt/bott.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace rbt {

namespace {

void check_n(int n) {
  if (n < 1 || n > BottMatrix::max_n)
    throw DimensionError("Bott matrix dimension must be in [1, " + std::to_string(BottMatrix::max_n) +
                         "], got " + std::to_string(n));
}

// position of a_ij (i < j) in the row-major strict upper list
int bit_position(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

BottMatrix BottMatrix::identity(int n) { return from_id(n, 0); }

BottMatrix BottMatrix::from_id(int n, std::uint64_t id) {
  check_n(n);
  BottMatrix a;
  a.n_ = n;
  int nb = a.num_bits();
  if (nb < 64 && id >> nb != 0)
    throw std::invalid_argument("Bott matrix id out of range");
  a.id_ = id;
  return a;
}

BottMatrix BottMatrix::from_bits(int n, std::string_view bits) {
  check_n(n);
  if (static_cast<int>(bits.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("expected " + std::to_string(n * (n - 1) / 2) + " bits for n=" +
                                std::to_string(n) + ", got '" + std::string(bits) + "'");
  std::uint64_t id = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may only contain 0 and 1: '" + std::string(bits) + "'");
    id = id << 1 | static_cast<std::uint64_t>(c == '1');
  }
  return from_id(n, id);
}

BottMatrix BottMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  int n = static_cast<int>(rows.size());
  check_n(n);
  std::string bits;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw DimensionError("Bott matrix rows must be square");
    for (int j = 0; j < n; ++j) {
      std::int64_t x = rows[i][j];
      if (i == j && x != 1)
        throw std::invalid_argument("Bott matrix diagonal must be 1");
      if (i > j && x != 0)
        throw std::invalid_argument("Bott matrix must be upper triangular");
      if (i < j) {
        if (x != 0 && x != 1)
          throw std::invalid_argument("Bott matrix entries must be 0 or 1");
        bits.push_back(x ? '1' : '0');
      }
    }
  }
  return from_bits(n, bits);
}

BottMatrix BottMatrix::parse_compact(std::string_view text) {
  auto semi = text.find(';');
  if (!text.starts_with("n=") || semi == std::string_view::npos ||
      text.substr(semi + 1, 5) != "bits=")
    throw std::invalid_argument("expected 'n=<dim>;bits=<bits>', got '" + std::string(text) + "'");
  int n = 0;
  try {
    n = std::stoi(std::string(text.substr(2, semi - 2)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad dimension in '" + std::string(text) + "'");
  }
  return from_bits(n, text.substr(semi + 6));
}

bool BottMatrix::entry(int i, int j) const {
  if (i == j)
    return true;
  if (i > j)
    return false;
  int pos = bit_position(n_, i, j);
  return (id_ >> (num_bits() - 1 - pos)) & 1u;
}

std::string BottMatrix::bits() const {
  std::string s;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      s.push_back(entry(i, j) ? '1' : '0');
  return s;
}

std::string BottMatrix::compact() const { return "n=" + std::to_string(n_) + ";bits=" + bits(); }

IntMatrix BottMatrix::to_int_matrix() const { return IntMatrix::from_rows(rows()); }

std::vector<std::vector<std::int64_t>> BottMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> r(n_, std::vector<std::int64_t>(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      r[i][j] = entry(i, j) ? 1 : 0;
  return r;
}

std::uint32_t BottMatrix::row_mask(int i) const {
  std::uint32_t m = 0;
  for (int j = i + 1; j < n_; ++j)
    if (entry(i, j))
      m |= 1u << j;
  return m;
}

std::uint32_t BottMatrix::column_mask(int j) const {
  std::uint32_t m = 0;
  for (int i = 0; i < j; ++i)
    if (entry(i, j))
      m |= 1u << i;
  return m;
}

std::vector<BottMatrix> enumerate(int n) {
  check_n(n);
  std::vector<BottMatrix> out;
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  out.reserve(count);
  for (std::uint64_t id = 0; id < count; ++id)
    out.push_back(BottMatrix::from_id(n, id));
  return out;
}

std::vector<AffineMap> lift_generators(const BottMatrix& a) {
  std::vector<AffineMap> gens;
  for (int i = 0; i < a.n(); ++i)
    gens.emplace_back(unit(a.n(), i, Dyadic::pow2_inverse(1)), IntMatrix::sign_diagonal(a.n(), a.row_mask(i)));
  return gens;
}

int torus_rank(const BottMatrix& a) {
  int k = 0;
  for (int j = 0; j < a.n(); ++j)
    if (a.column_mask(j) == 0)
      ++k;
  return k;
}

bool orientable(const BottMatrix& a) {
  for (int i = 0; i < a.n(); ++i)
    if (__builtin_popcount(a.row_mask(i)) % 2 != 0)
      return false;
  return true;
}

// P A = A' P, filled row by row from the bottom: row i of P must satisfy
// P_i (A - I) = sum_{k > i} A'_{ik} P_k, which only involves rows already chosen.
std::optional<IntMatrix> matrix_conjugacy(const BottMatrix& a, const BottMatrix& b, int bound) {
  if (a.n() != b.n())
    throw DimensionError("matrix_conjugacy: dimension mismatch");
  if (bound < 0)
    throw std::invalid_argument("matrix_conjugacy: bound must be non-negative");
  const int n = a.n();
  const IntMatrix am = a.to_int_matrix();
  std::vector<IntVec> candidates;
  IntVec v(n, -bound);
  for (;;) {
    candidates.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[k] == bound)
      v[k--] = -bound;
    if (k < 0)
      break;
    ++v[k];
  }
  std::vector<IntVec> p(n);
  std::optional<IntMatrix> found;
  std::function<void(int)> fill = [&](int i) {
    if (found)
      return;
    if (i < 0) {
      IntMatrix m = IntMatrix::from_rows(p);
      if (m.is_unimodular())
        found = m;
      return;
    }
    IntVec rhs(n, 0);
    for (int k = i + 1; k < n; ++k)
      if (b.entry(i, k))
        for (int j = 0; j < n; ++j)
          rhs[j] += p[k][j];
    for (const IntVec& c : candidates) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        std::int64_t lhs = -c[j];
        for (int r = 0; r < n; ++r)
          lhs += c[r] * am(r, j);
        ok = lhs == rhs[j];
      }
      if (!ok)
        continue;
      p[i] = c;
      fill(i - 1);
      if (found)
        return;
    }
  };
  fill(n - 1);
  return found;
}

LabelTable LabelTable::from_json_text(std::string_view text) {
  LabelTable t;
  auto j = nlohmann::json::parse(text);
  for (auto& [dim, entries] : j.items()) {
    int n = std::stoi(dim);
    for (auto& [label, bits] : entries.items())
      t.add(label, BottMatrix::from_bits(n, bits.get<std::string>()));
  }
  return t;
}

LabelTable LabelTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open label table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void LabelTable::add(const std::string& label, const BottMatrix& a) {
  auto key = std::make_pair(a.n(), a.id());
  if (by_label_.count({a.n(), label}) || by_matrix_.count(key))
    throw std::invalid_argument("label table is not bijective at '" + label + "'");
  by_label_.emplace(std::make_pair(a.n(), label), a);
  by_matrix_.emplace(key, label);
}

std::optional<BottMatrix> LabelTable::find(std::string_view label, int n) const {
  if (n > 0) {
    auto it = by_label_.find({n, std::string(label)});
    if (it == by_label_.end())
      return std::nullopt;
    return it->second;
  }
  std::optional<BottMatrix> hit;
  for (const auto& [key, a] : by_label_)
    if (key.second == label) {
      if (hit)
        throw std::invalid_argument("label '" + std::string(label) + "' is ambiguous; give a dimension");
      hit = a;
    }
  return hit;
}

std::optional<std::string> LabelTable::label_of(const BottMatrix& a) const {
  auto it = by_matrix_.find({a.n(), a.id()});
  if (it == by_matrix_.end())
    return std::nullopt;
  return it->second;
}

std::string LabelTable::name(const BottMatrix& a) const {
  if (auto l = label_of(a))
    return *l;
  return a.compact();
}

std::vector<std::string> LabelTable::labels(int n) const {
  std::vector<std::string> out;
  for (const auto& [key, label] : by_matrix_)
    if (key.first == n)
      out.push_back(label);
  return out;
}

BottMatrix parse_matrix_spec(std::string_view text, const LabelTable& table, int n_hint) {
  if (auto a = table.find(text, n_hint))
    return *a;
  if (text.starts_with("n="))
    return BottMatrix::parse_compact(text);
  if (!text.empty() && text.find_first_not_of("01") == std::string_view::npos) {
    if (n_hint <= 0)
      throw std::invalid_argument("bit string '" + std::string(text) + "' needs a dimension (-n)");
    return BottMatrix::from_bits(n_hint, text);
  }
  if (!text.empty() && text.front() == '{') {
    auto j = nlohmann::json::parse(text);
    auto a = BottMatrix::from_rows(j.at("rows").get<std::vector<std::vector<std::int64_t>>>());
    if (j.contains("n") && j.at("n").get<int>() != a.n())
      throw DimensionError("matrix JSON: 'n' does not match the rows");
    return a;
  }
  throw std::invalid_argument("unrecognized matrix '" + std::string(text) + "'");
}

}  // namespace rbt
