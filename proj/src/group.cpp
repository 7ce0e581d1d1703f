#include "rbt/group.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rbt/lattice.hpp"

namespace rbt {

std::string selector_string(std::uint32_t s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i)
    out.push_back((s >> i & 1u) ? '1' : '0');
  return out;
}

std::uint32_t parse_selector(const std::string& bits) {
  if (bits.size() > 32)
    throw std::invalid_argument("selector too long");
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      s |= 1u << i;
    else if (bits[i] != '0')
      throw std::invalid_argument("selector may only contain 0 and 1: '" + bits + "'");
  }
  return s;
}

std::string AbelianInvariants::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z^" << free_rank;
    first = false;
  }
  // group equal torsion factors: Z2^3 rather than Z2 + Z2 + Z2
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i])
      ++j;
    os << (first ? "" : " + ") << "Z" << torsion[i];
    if (j - i > 1)
      os << "^" << (j - i);
    first = false;
    i = j;
  }
  if (first)
    os << "0";
  return os.str();
}

bool cosets_torsion_free(const SectionTable& table) {
  const std::uint32_t count = 1u << table.n;
  for (std::uint32_t s = 1; s < count; ++s) {
    bool witness = false;
    for (int j = 0; j < table.n && !witness; ++j)
      witness = !(table.neg[s] >> j & 1u) && (table.doubled_translation[s][j] % 2 != 0);
    if (!witness)
      return false;
  }
  return true;
}

BottGroup::BottGroup(const BottMatrix& a) : a_(a), n_(a.n()) {
  if (n_ > max_n)
    throw DimensionError("BottGroup supports n <= " + std::to_string(max_n));
  const std::uint32_t count = num_selectors();
  neg_.assign(count, 0);
  t2_.assign(count, IntVec(n_, 0));
  for (std::uint32_t s = 0; s < count; ++s)
    for (int i = 0; i < n_; ++i) {
      if (!(s >> i & 1u))
        continue;
      neg_[s] ^= a.row_mask(i);
      t2_[s][i] = (__builtin_popcount(s & a.column_mask(i)) % 2) ? -1 : 1;
    }
  f_.assign(std::size_t{count} * count, IntVec(n_, 0));
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t u = 0; u < count; ++u) {
      IntVec& f = f_[(std::size_t{s} << n_) | u];
      for (int j = 0; j < n_; ++j) {
        std::int64_t d = (neg_[s] >> j & 1u) ? -1 : 1;
        std::int64_t twice = t2_[s][j] + d * t2_[u][j] - t2_[s ^ u][j];
        if (twice % 2 != 0)
          throw std::logic_error("cocycle is not integral");
        f[j] = twice / 2;
      }
    }
}

DyVec BottGroup::section_translation(std::uint32_t s) const {
  DyVec t(n_);
  for (int j = 0; j < n_; ++j)
    t[j] = Dyadic::from_parts(t2_[s][j], 1);
  return t;
}

AffineMap BottGroup::representative(std::uint32_t s) const {
  return {section_translation(s), holonomy_matrix(s)};
}

AffineMap BottGroup::realize(const GroupElement& x) const {
  if (static_cast<int>(x.v.size()) != n_)
    throw DimensionError("group element has wrong dimension");
  return {to_dyvec(x.v) + section_translation(x.s), holonomy_matrix(x.s)};
}

GroupElement BottGroup::generator(int i) const {
  if (i < 0 || i >= n_)
    throw std::out_of_range("generator index out of range");
  return {IntVec(n_, 0), 1u << i};
}

GroupElement BottGroup::translation(IntVec v) const {
  if (static_cast<int>(v.size()) != n_)
    throw DimensionError("translation has wrong dimension");
  return {std::move(v), 0};
}

GroupElement BottGroup::multiply(const GroupElement& x, const GroupElement& y) const {
  const IntVec& f = cocycle(x.s, y.s);
  GroupElement r{IntVec(n_), x.s ^ y.s};
  for (int j = 0; j < n_; ++j) {
    std::int64_t w = (neg_[x.s] >> j & 1u) ? -y.v[j] : y.v[j];
    r.v[j] = checked::add(checked::add(x.v[j], w), f[j]);
  }
  return r;
}

// (v, s)^{-1} = (-D(s)(v + f(s, s)), s), since D(s) is an involution.
GroupElement BottGroup::inverse(const GroupElement& x) const {
  const IntVec& f = cocycle(x.s, x.s);
  GroupElement r{IntVec(n_), x.s};
  for (int j = 0; j < n_; ++j) {
    std::int64_t w = checked::add(x.v[j], f[j]);
    r.v[j] = (neg_[x.s] >> j & 1u) ? w : -w;
  }
  return r;
}

GroupElement BottGroup::power(GroupElement x, std::int64_t k) const {
  if (k < 0) {
    x = inverse(x);
    k = -k;
  }
  GroupElement r = identity();
  while (k > 0) {
    if (k & 1)
      r = multiply(r, x);
    x = multiply(x, x);
    k >>= 1;
  }
  return r;
}

std::optional<GroupElement> BottGroup::canonicalize(const AffineMap& m) const {
  if (m.n() != n_)
    throw DimensionError("canonicalize: dimension mismatch");
  if (!m.linear.is_sign_diagonal())
    return std::nullopt;
  const std::uint32_t mask = m.linear.neg_mask();
  for (std::uint32_t s = 0; s < num_selectors(); ++s) {
    if (neg_[s] != mask)
      continue;
    DyVec diff = m.translation - section_translation(s);
    if (is_integral(diff))
      return GroupElement{to_intvec(diff), s};
  }
  return std::nullopt;
}

DyVec BottGroup::act(const GroupElement& g, const DyVec& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw DimensionError("act: dimension mismatch");
  return to_dyvec(g.v) + holonomy_matrix(g.s) * x + section_translation(g.s);
}

Holonomy BottGroup::holonomy() const {
  std::set<std::uint32_t> elems(neg_.begin(), neg_.end());
  Holonomy h;
  h.elements.assign(elems.begin(), elems.end());
  h.rank = std::countr_zero(static_cast<std::uint32_t>(h.elements.size()));
  return h;
}

std::vector<int> BottGroup::neg_count_multiset() const {
  std::vector<int> out;
  for (std::uint32_t m : holonomy().elements)
    out.push_back(__builtin_popcount(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool BottGroup::torsion_free_check() const { return cosets_torsion_free(section_table()); }

AbelianInvariants BottGroup::abelianization() const {
  std::vector<IntVec> relations;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      GroupElement gi = generator(i), gj = generator(j);
      GroupElement c = multiply(multiply(gi, gj), inverse(gi));
      IntVec rel(n_, 0);
      if (c == gj)
        continue;
      if (c != inverse(gj))
        throw std::logic_error("generator conjugation is not of Bott type");
      rel[j] = 2;  // g_j = g_j^{-1} in the abelianization
      relations.push_back(rel);
    }
  SmithResult snf = smith_invariants(relations, n_);
  return {snf.free_rank, snf.torsion};
}

CenterDescription BottGroup::center_basis() const {
  std::uint32_t moved = 0;
  for (int i = 0; i < n_; ++i)
    moved |= a_.row_mask(i);
  std::vector<IntVec> gens;
  for (int j = 0; j < n_; ++j)
    if (!(moved >> j & 1u)) {
      IntVec e(n_, 0);
      e[j] = 2;
      gens.push_back(e);
    }
  for (std::uint32_t s = 1; s < num_selectors(); ++s) {
    if (neg_[s] != 0)
      continue;
    bool fixed = true;
    for (int j = 0; j < n_; ++j)
      if ((moved >> j & 1u) && t2_[s][j] != 0)
        fixed = false;
    if (fixed)
      gens.push_back(t2_[s]);
  }
  CenterDescription c;
  for (const IntVec& x : hermite_basis(gens, n_)) {
    DyVec half(n_);
    for (int j = 0; j < n_; ++j)
      half[j] = Dyadic::from_parts(x[j], 1);
    auto g = canonicalize(AffineMap::pure_translation(half));
    if (!g)
      throw std::logic_error("center translation is not a group element");
    c.generators.push_back(*g);
  }
  c.rank = static_cast<int>(c.generators.size());
  return c;
}

}  // namespace rbt
