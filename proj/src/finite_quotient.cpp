#include "rbt/finite_quotient.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rbt {

namespace {

std::vector<IntVec> quotient_lattice(const BottGroup& g, int m, bool mod_center) {
  const int n = g.n();
  std::vector<IntVec> gens;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 2 * m;
    gens.push_back(e);
  }
  if (mod_center)
    for (const GroupElement& c : g.center_basis().generators) {
      IntVec x(n);
      for (int j = 0; j < n; ++j)
        x[j] = 2 * c.v[j] + g.doubled_translation(c.s)[j];
      gens.push_back(x);
    }
  return gens;
}

Multiset to_multiset(std::vector<std::int64_t> values) {
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t v : values)
    ++counts[v];
  return Multiset(counts.begin(), counts.end());
}

}  // namespace

FiniteQuotient::FiniteQuotient(const BottGroup& g, int modulus, bool mod_center, std::int64_t budget)
    : n_(g.n()), section_(g.section_table()), lattice_([&] {
        if (modulus != 2 && modulus != 4)
          throw std::invalid_argument("fingerprint modulus must be 2 or 4, got " + std::to_string(modulus));
        std::int64_t bound = std::int64_t{1} << g.n();
        for (int i = 0; i < g.n(); ++i)
          bound = checked::mul(bound, modulus);
        if (bound > budget)
          throw BudgetExceeded("finite quotient may have " + std::to_string(bound) +
                               " elements, budget is " + std::to_string(budget));
        return LatticeReducer(quotient_lattice(g, modulus, mod_center), g.n());
      }()) {
  const std::int64_t slots = lattice_.index() << n_;
  index_.assign(static_cast<std::size_t>(slots), -1);
  IntVec v(n_, 0);
  for (std::uint32_t s = 0; s < g.num_selectors(); ++s) {
    std::fill(v.begin(), v.end(), 0);
    for (;;) {
      IntVec x(n_);
      for (int j = 0; j < n_; ++j)
        x[j] = 2 * v[j] + g.doubled_translation(s)[j];
      lattice_.reduce(x);
      std::int64_t slot = (lattice_.code(x) << n_) | g.holonomy_mask(s);
      if (index_[slot] < 0) {
        index_[slot] = static_cast<int>(elements_.size());
        elements_.push_back({std::move(x), g.holonomy_mask(s)});
      }
      int k = 0;
      while (k < n_ && v[k] == modulus - 1)
        v[k++] = 0;
      if (k == n_)
        break;
      ++v[k];
    }
  }
  identity_ = lookup(IntVec(n_, 0), 0);
  for (int i = 0; i < n_; ++i)
    generators_.push_back(image(g.generator(i)));
  inverse_.resize(elements_.size());
  for (int a = 0; a < size(); ++a) {
    // (x, D)^{-1} = (-D x, D)
    IntVec y(n_);
    for (int j = 0; j < n_; ++j)
      y[j] = (elements_[a].neg >> j & 1u) ? elements_[a].x[j] : -elements_[a].x[j];
    inverse_[a] = lookup(std::move(y), elements_[a].neg);
  }
  const auto sz = static_cast<std::uint64_t>(size());
  two_group_ = (sz & (sz - 1)) == 0;
}

int FiniteQuotient::lookup(IntVec x, std::uint32_t neg) const {
  lattice_.reduce(x);
  int r = index_[static_cast<std::size_t>((lattice_.code(x) << n_) | neg)];
  if (r < 0)
    throw std::logic_error("finite quotient is not closed under the group law");
  return r;
}

int FiniteQuotient::multiply(int a, int b) const {
  const Element& p = elements_[a];
  const Element& q = elements_[b];
  IntVec x(n_);
  for (int j = 0; j < n_; ++j)
    x[j] = p.x[j] + ((p.neg >> j & 1u) ? -q.x[j] : q.x[j]);
  return lookup(std::move(x), p.neg ^ q.neg);
}

int FiniteQuotient::image(const GroupElement& g) const {
  if (static_cast<int>(g.v.size()) != n_)
    throw DimensionError("image: dimension mismatch");
  IntVec x(n_);
  for (int j = 0; j < n_; ++j)
    x[j] = checked::add(checked::mul(2, g.v[j]), section_.doubled_translation[g.s][j]);
  return lookup(std::move(x), section_.neg[g.s]);
}

int FiniteQuotient::element_order(int a) const {
  if (a == identity_)
    return 1;
  int order = 1;
  int c = a;
  if (two_group_) {
    while (c != identity_) {
      c = multiply(c, c);
      order *= 2;
    }
    return order;
  }
  while (c != identity_) {
    c = multiply(c, a);
    ++order;
  }
  return order;
}

std::vector<int> FiniteQuotient::center() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool central = true;
    for (int g : generators_)
      if (multiply(a, g) != multiply(g, a)) {
        central = false;
        break;
      }
    if (central)
      out.push_back(a);
  }
  return out;
}

std::vector<int> FiniteQuotient::closure(const std::vector<int>& gens) const {
  std::vector<char> in(size(), 0);
  std::vector<int> h{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (int g : gens) {
      int p = multiply(h[i], g);
      if (!in[p]) {
        in[p] = 1;
        h.push_back(p);
      }
    }
  return h;
}

std::vector<int> FiniteQuotient::generating_set(const std::vector<char>& subgroup) const {
  if (subgroup.empty())
    return generators_;
  std::vector<int> gens;
  std::vector<char> reached(size(), 0);
  reached[identity_] = 1;
  for (int a = 0; a < size(); ++a) {
    if (!subgroup[a] || reached[a])
      continue;
    gens.push_back(a);
    for (int b : closure(gens))
      reached[b] = 1;
  }
  return gens;
}

std::vector<char> FiniteQuotient::derived_subgroup(const std::vector<char>& subgroup) const {
  const std::vector<int> gens = generating_set(subgroup);
  std::vector<char> in_x(size(), 0);
  std::vector<int> x;
  auto add_x = [&](int c) {
    if (!in_x[c]) {
      in_x[c] = 1;
      x.push_back(c);
    }
  };
  for (int g : gens)
    for (int h : gens)
      add_x(multiply(multiply(g, h), multiply(inverse(g), inverse(h))));
  // normal closure inside the subgroup
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int g : gens)
      add_x(multiply(multiply(g, x[i]), inverse(g)));
  std::vector<char> out(size(), 0);
  for (int h : closure(x))
    out[h] = 1;
  return out;
}

std::vector<int> FiniteQuotient::commutator_subgroup() const {
  std::vector<char> in = derived_subgroup({});
  std::vector<int> h;
  for (int a = 0; a < size(); ++a)
    if (in[a])
      h.push_back(a);
  return h;
}

std::vector<std::vector<int>> FiniteQuotient::conjugacy_classes() const {
  std::vector<char> seen(size(), 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < size(); ++a) {
    if (seen[a])
      continue;
    std::vector<int> orbit{a};
    seen[a] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int g : generators_) {
        int c = multiply(multiply(g, orbit[i]), inverse(g));
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

std::vector<std::vector<char>> FiniteQuotient::index_two_subgroups() const {
  std::vector<std::vector<char>> out;
  const int k = static_cast<int>(generators_.size());
  for (std::uint32_t c = 1; c < (1u << k); ++c) {
    // try to extend generator parities c to a homomorphism onto Z_2
    std::vector<int> parity(size(), -1);
    parity[identity_] = 0;
    std::vector<int> queue{identity_};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        int p = multiply(queue[i], generators_[j]);
        int want = parity[queue[i]] ^ static_cast<int>(c >> j & 1u);
        if (parity[p] < 0) {
          parity[p] = want;
          queue.push_back(p);
        } else {
          ok = parity[p] == want;
        }
      }
    if (!ok)
      continue;
    std::vector<char> kernel(size());
    for (int a = 0; a < size(); ++a)
      kernel[a] = parity[a] == 0;
    out.push_back(std::move(kernel));
  }
  return out;
}

// Invariant factors of H / H' from the sizes of its p^k-torsion subgroups:
// #{h : h^(p^k) in H'} / |H'| is the order of the p^k-torsion of H / H'.
AbelianInvariants FiniteQuotient::abelianization(const std::vector<char>& subgroup) const {
  const std::vector<char> derived = derived_subgroup(subgroup);
  std::vector<int> members;
  for (int a = 0; a < size(); ++a)
    if (subgroup.empty() || subgroup[a])
      members.push_back(a);
  const auto derived_order = static_cast<std::int64_t>(std::count(derived.begin(), derived.end(), 1));
  const std::int64_t abel_order = static_cast<std::int64_t>(members.size()) / derived_order;

  std::vector<std::vector<std::int64_t>> prime_parts;
  std::int64_t rest = abel_order;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0)
      continue;
    std::int64_t p_part = 1;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }
    // ranks[k-1] = number of cyclic factors of order >= p^k
    std::vector<int> ranks;
    std::int64_t prev = 1, pk = 1;
    while (prev < p_part) {
      pk *= p;
      std::int64_t hits = 0;
      for (int a : members) {
        int r = identity_, base = a;
        for (std::int64_t e = pk; e > 0; e >>= 1) {
          if (e & 1)
            r = multiply(r, base);
          base = multiply(base, base);
        }
        hits += derived[r];
      }
      std::int64_t cur = hits / derived_order;
      int r = 0;
      for (std::int64_t q = cur / prev; q > 1; q /= p)
        ++r;
      ranks.push_back(r);
      prev = cur;
    }
    std::vector<std::int64_t> factors;
    std::int64_t order_k = 1;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      order_k *= p;
      int exact = ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0);
      for (int i = 0; i < exact; ++i)
        factors.push_back(order_k);
    }
    std::sort(factors.rbegin(), factors.rend());
    prime_parts.push_back(std::move(factors));
  }
  std::vector<std::int64_t> invariant;
  for (std::size_t i = 0;; ++i) {
    std::int64_t d = 1;
    bool any = false;
    for (const auto& part : prime_parts)
      if (i < part.size()) {
        d *= part[i];
        any = true;
      }
    if (!any)
      break;
    invariant.push_back(d);
  }
  std::reverse(invariant.begin(), invariant.end());
  return {0, invariant};
}

Fingerprint FiniteQuotient::fingerprint() const {
  Fingerprint fp;
  fp.order = size();
  std::vector<std::int64_t> orders(size());
  for (int a = 0; a < size(); ++a)
    orders[a] = element_order(a);
  fp.element_orders = to_multiset(orders);
  fp.center_order = static_cast<std::int64_t>(center().size());
  fp.commutator_order = static_cast<std::int64_t>(commutator_subgroup().size());
  fp.abelianization = abelianization();

  std::vector<std::int64_t> class_sizes;
  for (const auto& c : conjugacy_classes())
    class_sizes.push_back(static_cast<std::int64_t>(c.size()));
  fp.class_sizes = to_multiset(class_sizes);

  for (const auto& k : index_two_subgroups())
    fp.index_two.push_back(abelianization(k));
  std::sort(fp.index_two.begin(), fp.index_two.end());
  return fp;
}

Fingerprint finite_quotient_fingerprint(const BottGroup& g, int modulus, bool mod_center) {
  return FiniteQuotient(g, modulus, mod_center).fingerprint();
}

}  // namespace rbt
