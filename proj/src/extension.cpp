#include "rbt/extension.hpp"

#include <stdexcept>

namespace rbt {

namespace {

template <class T>
T signed_entry(std::uint32_t neg, int j, const T& x) {
  return (neg >> j & 1u) ? -x : x;
}

void check_sizes(const ActionTable& phi, std::size_t entries, int n) {
  if (phi.n != n || phi.neg.size() != (std::size_t{1} << n))
    throw DimensionError("action table does not match dimension");
  if (entries != (std::size_t{1} << (2 * n)))
    throw DimensionError("cocycle table is incomplete");
}

// All vectors in [-radius, radius]^n.
std::vector<IntVec> box(int n, int radius) {
  std::vector<IntVec> out;
  IntVec v(n, -radius);
  for (;;) {
    out.push_back(v);
    int k = 0;
    while (k < n && v[k] == radius)
      v[k++] = -radius;
    if (k == n)
      return out;
    ++v[k];
  }
}

}  // namespace

bool ActionTable::is_homomorphism() const {
  const std::uint32_t count = 1u << n;
  if (neg.size() != count || neg[0] != 0)
    return false;
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t u = 0; u < count; ++u)
      if (neg[s ^ u] != (neg[s] ^ neg[u]))
        return false;
  return true;
}

ActionTable ActionTable::trivial(int n) { return {n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)}; }

ActionTable ActionTable::of(const BottGroup& g) { return {g.n(), g.section_table().neg}; }

CocycleTable cocycle_of(const BottGroup& g) {
  CocycleTable f = CocycleTable::zero(g.n());
  for (std::uint32_t s = 0; s < g.num_selectors(); ++s)
    for (std::uint32_t u = 0; u < g.num_selectors(); ++u)
      f.at(s, u) = g.cocycle(s, u);
  return f;
}

bool check_cocycle(const ActionTable& phi, const CocycleTable& f) {
  const int n = f.n;
  check_sizes(phi, f.values.size(), n);
  const std::uint32_t count = 1u << n;
  const IntVec zero(n, 0);
  for (std::uint32_t s = 0; s < count; ++s)
    if (f.at(s, 0) != zero || f.at(0, s) != zero)
      return false;
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t u = 0; u < count; ++u)
      for (std::uint32_t w = 0; w < count; ++w)
        for (int j = 0; j < n; ++j) {
          std::int64_t lhs = signed_entry(phi(s), j, f.at(u, w)[j]) + f.at(s, u ^ w)[j];
          std::int64_t rhs = f.at(s, u)[j] + f.at(s ^ u, w)[j];
          if (lhs != rhs)
            return false;
        }
  return true;
}

template <class T>
static CocycleTableOf<T> coboundary_impl(const ActionTable& phi, const std::vector<std::vector<T>>& lambda) {
  const int n = phi.n;
  const std::uint32_t count = 1u << n;
  if (lambda.size() != count)
    throw DimensionError("coboundary: lambda must be defined on all of (Z_2)^n");
  for (const auto& x : lambda)
    if (static_cast<int>(x.size()) != n)
      throw DimensionError("coboundary: lambda has wrong dimension");
  for (const T& x : lambda[0])
    if (x != T{})
      throw std::invalid_argument("coboundary: lambda(0) must be 0");
  auto out = CocycleTableOf<T>::zero(n);
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t u = 0; u < count; ++u)
      for (int j = 0; j < n; ++j)
        out.at(s, u)[j] = signed_entry(phi(s), j, lambda[u][j]) + lambda[s][j] - lambda[s ^ u][j];
  return out;
}

RealCocycleTable coboundary(const ActionTable& phi, const std::vector<DyVec>& lambda) {
  return coboundary_impl(phi, lambda);
}

CocycleTable coboundary(const ActionTable& phi, const std::vector<IntVec>& lambda) {
  return coboundary_impl(phi, lambda);
}

RealCocycleTable to_real(const CocycleTable& f) {
  RealCocycleTable r{f.n, {}};
  r.values.reserve(f.values.size());
  for (const IntVec& x : f.values)
    r.values.push_back(to_dyvec(x));
  return r;
}

Extension::Extension(ActionTable phi, CocycleTable f) : phi_(std::move(phi)), f_(std::move(f)) {
  check_sizes(phi_, f_.values.size(), f_.n);
}

GroupElement Extension::multiply(const GroupElement& x, const GroupElement& y) const {
  const IntVec& f = f_.at(x.s, y.s);
  GroupElement r{IntVec(n()), x.s ^ y.s};
  for (int j = 0; j < n(); ++j)
    r.v[j] = x.v[j] + signed_entry(phi_(x.s), j, y.v[j]) + f[j];
  return r;
}

std::optional<GroupElement> Extension::find_involution() const {
  for (std::uint32_t s = 1; s < (1u << n()); ++s) {
    const IntVec& f = f_.at(s, s);
    GroupElement x{IntVec(n(), 0), s};
    bool ok = true;
    for (int j = 0; j < n() && ok; ++j) {
      if (phi_(s) >> j & 1u)
        ok = f[j] == 0;
      else if (f[j] % 2 != 0)
        ok = false;
      else
        x.v[j] = -f[j] / 2;
    }
    if (ok)
      return x;
  }
  return std::nullopt;
}

bool extension_equals_group(const ActionTable& phi, const CocycleTable& f, const BottGroup& g, int radius) {
  if (phi.n != g.n())
    throw DimensionError("extension_equals_group: dimension mismatch");
  if (phi.neg != g.section_table().neg)
    return false;
  Extension e(phi, f);
  const std::vector<IntVec> vs = box(g.n(), radius);
  for (std::uint32_t s = 0; s < g.num_selectors(); ++s)
    for (std::uint32_t u = 0; u < g.num_selectors(); ++u)
      for (const IntVec& v : vs)
        for (const IntVec& w : vs) {
          GroupElement x{v, s}, y{w, u};
          if (e.multiply(x, y) != g.multiply(x, y))
            return false;
        }
  return true;
}

bool coboundary_shift_is_isomorphism(const ActionTable& phi, const CocycleTable& f,
                                     const std::vector<IntVec>& lambda, int radius) {
  const int n = f.n;
  CocycleTable shifted = f;
  CocycleTable d = coboundary(phi, lambda);
  for (std::size_t k = 0; k < shifted.values.size(); ++k)
    for (int j = 0; j < n; ++j)
      shifted.values[k][j] -= d.values[k][j];
  Extension src(phi, f), dst(phi, shifted);
  auto psi = [&](const GroupElement& x) {
    GroupElement r = x;
    for (int j = 0; j < n; ++j)
      r.v[j] += lambda[x.s][j];
    return r;
  };
  const std::vector<IntVec> vs = box(n, radius);
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    for (std::uint32_t u = 0; u < (1u << n); ++u)
      for (const IntVec& v : vs)
        for (const IntVec& w : vs) {
          GroupElement x{v, s}, y{w, u};
          if (psi(src.multiply(x, y)) != dst.multiply(psi(x), psi(y)))
            return false;
        }
  return true;
}

}  // namespace rbt
