#include "rbt/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace rbt {

namespace {

int worker_count(int requested, std::size_t tasks) {
  int t = requested;
  if (t <= 0) {
    if (const char* env = std::getenv("BOTT_THREADS"))
      t = std::atoi(env);
    if (t <= 0)
      t = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(1, std::min<int>(t, static_cast<int>(std::max<std::size_t>(tasks, 1))));
}

// Runs body(0..count-1) on up to `threads` workers. Each index writes only
// its own slot, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const int workers = worker_count(threads, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // keeps the smaller root
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

AffineMap identity_map(int n) { return AffineMap::identity(n); }

// Translation values up to the equivalence b ~ b' iff 2b = 2b' mod 1, which
// is all that matters on coordinates some holonomy element negates.
std::vector<Dyadic> half_period_representatives(const std::vector<Dyadic>& grid) {
  std::vector<Dyadic> reps;
  std::set<Dyadic> seen;
  std::vector<Dyadic> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  for (const Dyadic& t : sorted)
    if (seen.insert((t * 2).frac()).second)
      reps.push_back(t);
  return reps;
}

}  // namespace

bool SearchSpace::contains(const AffineMap& gamma) const {
  for (int i = 0; i < gamma.linear.n(); ++i)
    for (int j = 0; j < gamma.linear.n(); ++j)
      if (std::abs(gamma.linear(i, j)) > entry_bound)
        return false;
  for (const Dyadic& b : gamma.translation)
    if (std::find(translations.begin(), translations.end(), b) == translations.end())
      return false;
  return true;
}

std::string SearchSpace::str() const {
  std::ostringstream os;
  os << "entries in [-" << entry_bound << ", " << entry_bound << "], translations {";
  for (std::size_t i = 0; i < translations.size(); ++i)
    os << (i ? ", " : "") << translations[i].str();
  os << "}";
  return os.str();
}

const std::vector<std::string>& invariant_fields() {
  static const std::vector<std::string> fields = {
      "holonomy_rank", "orientable", "torus_rank",         "neg_count_multiset",
      "abelianization", "center_rank", "fingerprint_m2",   "fingerprint_m2_center",
      "fingerprint_m4", "fingerprint_m4_center"};
  return fields;
}

std::optional<std::string> first_difference(const InvariantVector& x, const InvariantVector& y) {
  const auto& f = invariant_fields();
  if (x.n != y.n)
    return std::string("n");
  if (x.holonomy_rank != y.holonomy_rank)
    return f[0];
  if (x.orientable != y.orientable)
    return f[1];
  if (x.torus_rank != y.torus_rank)
    return f[2];
  if (x.neg_counts != y.neg_counts)
    return f[3];
  if (x.abelianization != y.abelianization)
    return f[4];
  if (x.center_rank != y.center_rank)
    return f[5];
  if (x.m2 != y.m2)
    return f[6];
  if (x.m2_center != y.m2_center)
    return f[7];
  if (x.m4 != y.m4)
    return f[8];
  if (x.m4_center != y.m4_center)
    return f[9];
  return std::nullopt;
}

InvariantVector invariant_vector(const BottMatrix& a) {
  BottGroup g(a);
  InvariantVector v;
  v.n = a.n();
  v.holonomy_rank = g.holonomy().rank;
  v.orientable = orientable(a);
  v.torus_rank = torus_rank(a);
  v.neg_counts = g.neg_count_multiset();
  v.abelianization = g.abelianization();
  v.center_rank = g.center_basis().rank;
  v.m2 = finite_quotient_fingerprint(g, 2, false);
  v.m2_center = finite_quotient_fingerprint(g, 2, true);
  v.m4 = finite_quotient_fingerprint(g, 4, false);
  v.m4_center = finite_quotient_fingerprint(g, 4, true);
  return v;
}

bool verify_witness(const Witness& w) {
  if (w.source.n() != w.target.n() || w.gamma.n() != w.source.n())
    throw DimensionError("verify_witness: dimension mismatch");
  if (!w.gamma.linear.is_unimodular())
    return false;
  const BottGroup src(w.source), dst(w.target);
  const AffineMap g = w.gamma;
  const AffineMap g_inv = inverse(g);
  for (int i = 0; i < src.n(); ++i)
    if (!dst.contains(conjugate(g, src.realize(src.generator(i)))))
      return false;
  for (int j = 0; j < dst.n(); ++j)
    if (!src.contains(conjugate(g_inv, dst.realize(dst.generator(j)))))
      return false;
  return true;
}

Witness compose(const Witness& second, const Witness& first) {
  if (first.target != second.source)
    throw std::invalid_argument("compose: witnesses do not chain");
  return {first.source, second.target, rbt::compose(second.gamma, first.gamma)};
}

Witness inverse(const Witness& w) { return {w.target, w.source, rbt::inverse(w.gamma)}; }

// Rows of B are chosen one at a time. B D B^{-1} is diagonal for every
// holonomy element D exactly when each row is supported on coordinates that
// every generator treats alike (same column mask of the source matrix).
std::optional<Witness> conjugator_search(const BottMatrix& a, const BottMatrix& target, const SearchSpace& space) {
  if (a.n() != target.n())
    throw DimensionError("conjugator_search: dimension mismatch");
  const int n = a.n();
  if (a == target) {
    Witness w{a, target, identity_map(n)};
    if (space.contains(w.gamma))
      return w;
  }
  if (space.translations.empty())
    return std::nullopt;

  const BottGroup dst(target);
  const std::vector<std::uint32_t> target_holonomy = dst.holonomy().elements;
  auto in_target_holonomy = [&](std::uint32_t m) {
    return std::binary_search(target_holonomy.begin(), target_holonomy.end(), m);
  };

  struct Row {
    IntVec entries;
    std::uint32_t kind;  // column mask shared by the support
  };
  std::map<std::uint32_t, std::vector<int>> kinds;
  for (int j = 0; j < n; ++j)
    kinds[a.column_mask(j)].push_back(j);
  std::vector<Row> rows;
  const int bound = space.entry_bound;
  for (const auto& [kind, coords] : kinds) {
    const int k = static_cast<int>(coords.size());
    IntVec digits(k, -bound);
    for (;;) {
      if (std::any_of(digits.begin(), digits.end(), [](std::int64_t x) { return x != 0; })) {
        Row r{IntVec(n, 0), kind};
        for (int t = 0; t < k; ++t)
          r.entries[coords[t]] = digits[t];
        rows.push_back(std::move(r));
      }
      int t = 0;
      while (t < k && digits[t] == bound)
        digits[t++] = -bound;
      if (t == k)
        break;
      ++digits[t];
    }
  }

  const std::vector<Dyadic> reps = half_period_representatives(space.translations);
  const Dyadic filler = std::find(space.translations.begin(), space.translations.end(), Dyadic(0)) !=
                                space.translations.end()
                            ? Dyadic(0)
                            : *std::min_element(space.translations.begin(), space.translations.end());

  std::map<std::uint32_t, int> used;
  std::vector<const Row*> chosen(n, nullptr);
  std::optional<Witness> found;

  auto try_matrix = [&]() {
    std::vector<IntVec> m(n);
    for (int r = 0; r < n; ++r)
      m[r] = chosen[r]->entries;
    IntMatrix b = IntMatrix::from_rows(m);
    if (!b.is_unimodular())
      return;
    // image of generator i negates target coordinate r iff i negates row r's kind
    std::uint32_t negated = 0;
    for (int i = 0; i < n; ++i) {
      std::uint32_t image = 0;
      for (int r = 0; r < n; ++r)
        if (chosen[r]->kind >> i & 1u)
          image |= 1u << r;
      if (!in_target_holonomy(image))
        return;
      negated |= image;
    }
    std::vector<int> free_coords;
    for (int r = 0; r < n; ++r)
      if (negated >> r & 1u)
        free_coords.push_back(r);
    std::vector<std::size_t> pick(free_coords.size(), 0);
    for (;;) {
      DyVec shift(n, filler);
      for (std::size_t c = 0; c < free_coords.size(); ++c)
        shift[free_coords[c]] = reps[pick[c]];
      Witness w{a, target, AffineMap(shift, b)};
      if (verify_witness(w)) {
        found = std::move(w);
        return;
      }
      std::size_t c = 0;
      while (c < pick.size() && pick[c] + 1 == reps.size())
        pick[c++] = 0;
      if (c == pick.size())
        return;
      ++pick[c];
    }
  };

  std::function<void(int)> fill = [&](int r) {
    if (found)
      return;
    if (r == n) {
      try_matrix();
      return;
    }
    // a coordinate no target generator negates needs a row of the same kind
    const bool fixed_target = target.column_mask(r) == 0;
    for (const Row& row : rows) {
      if ((row.kind == 0) != fixed_target)
        continue;
      if (used[row.kind] == static_cast<int>(kinds[row.kind].size()))
        continue;
      ++used[row.kind];
      chosen[r] = &row;
      fill(r + 1);
      --used[row.kind];
      if (found)
        return;
    }
  };
  fill(0);
  return found;
}

int Partition::class_of(const BottMatrix& a) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), a))
      return static_cast<int>(c);
  return -1;
}

std::string class_name(std::size_t index) {
  static const std::pair<int, const char*> numerals[] = {{1000, "m"}, {900, "cm"}, {500, "d"}, {400, "cd"},
                                                         {100, "c"},  {90, "xc"},  {50, "l"},  {40, "xl"},
                                                         {10, "x"},   {9, "ix"},   {5, "v"},   {4, "iv"},
                                                         {1, "i"}};
  std::string out = "(";
  auto k = static_cast<int>(index + 1);
  for (const auto& [value, text] : numerals)
    for (; k >= value; k -= value)
      out += text;
  return out + ")";
}

Partition classify(int n, const SearchSpace& space, int threads) {
  const std::vector<BottMatrix> mats = enumerate(n);
  std::vector<InvariantVector> inv(mats.size());
  parallel_for(mats.size(), threads, [&](std::size_t i) { inv[i] = invariant_vector(mats[i]); });

  std::map<InvariantVector, std::vector<std::size_t>> by_vector;
  for (std::size_t i = 0; i < mats.size(); ++i)
    by_vector[inv[i]].push_back(i);
  std::vector<std::vector<std::size_t>> buckets;
  for (auto& [v, members] : by_vector)
    buckets.push_back(std::move(members));
  std::sort(buckets.begin(), buckets.end());

  struct BucketResult {
    std::vector<Witness> witnesses;
    std::optional<std::pair<std::size_t, std::size_t>> undetermined;
  };
  std::vector<BucketResult> results(buckets.size());
  parallel_for(buckets.size(), threads, [&](std::size_t b) {
    const auto& members = buckets[b];
    UnionFind uf(members.size());
    for (std::size_t j = 1; j < members.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (uf.find(i) == uf.find(j))
          continue;
        if (auto w = conjugator_search(mats[members[i]], mats[members[j]], space)) {
          uf.unite(i, j);
          results[b].witnesses.push_back(std::move(*w));
        }
      }
    for (std::size_t j = 1; j < members.size(); ++j)
      if (uf.find(j) != 0) {
        results[b].undetermined = {members[0], members[j]};
        break;
      }
  });

  for (std::size_t b = 0; b < buckets.size(); ++b)
    if (auto pair = results[b].undetermined) {
      const BottMatrix& x = mats[pair->first];
      const BottMatrix& y = mats[pair->second];
      throw Undetermined(x, y,
                         "undetermined: " + x.compact() + " and " + y.compact() +
                             " share every invariant but no conjugator lies in the search space (" +
                             space.str() + ")");
    }

  Partition p;
  p.n = n;
  p.space = space;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    PartitionClass c;
    for (std::size_t i : buckets[b])
      c.members.push_back(mats[i]);
    c.orientable = inv[buckets[b][0]].orientable;
    c.torus_rank = inv[buckets[b][0]].torus_rank;
    c.witnesses = std::move(results[b].witnesses);
    p.classes.push_back(std::move(c));
  }
  for (std::size_t x = 0; x < buckets.size(); ++x)
    for (std::size_t y = x + 1; y < buckets.size(); ++y) {
      auto field = first_difference(inv[buckets[x][0]], inv[buckets[y][0]]);
      if (!field)
        throw std::logic_error("distinct buckets with equal invariants");
      p.separations.push_back({mats[buckets[x][0]], mats[buckets[y][0]], *field});
    }
  return p;
}

Comparison compare_with_reference(const Partition& p, const Reference& ref, const LabelTable& labels) {
  Comparison cmp;
  if (p.n != ref.n) {
    cmp.match = false;
    cmp.lines.push_back("dimension mismatch: partition n=" + std::to_string(p.n) +
                        ", reference n=" + std::to_string(ref.n));
    return cmp;
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs)
      s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  std::vector<char> claimed(p.classes.size(), 0);
  for (const ReferenceClass& rc : ref.classes) {
    std::vector<BottMatrix> expected;
    std::vector<std::string> unknown;
    for (const auto& l : rc.labels) {
      if (auto a = labels.find(l, ref.n))
        expected.push_back(*a);
      else
        unknown.push_back(l);
    }
    std::sort(expected.begin(), expected.end());
    if (!unknown.empty() || expected.empty()) {
      cmp.match = false;
      cmp.lines.push_back("class " + rc.name + ": unknown labels " + join(unknown));
      continue;
    }
    const int c = p.class_of(expected.front());
    const PartitionClass& pc = p.classes.at(c);
    claimed[c] = 1;
    std::vector<std::string> missing, extra;
    for (const auto& a : expected)
      if (!std::binary_search(pc.members.begin(), pc.members.end(), a))
        missing.push_back(labels.name(a));
    for (const auto& a : pc.members)
      if (!std::binary_search(expected.begin(), expected.end(), a))
        extra.push_back(labels.name(a));
    std::string line = "class " + rc.name + " (" + std::to_string(expected.size()) + " matrices): ";
    bool ok = missing.empty() && extra.empty();
    if (!missing.empty())
      line += "computed class lacks " + join(missing) + "; ";
    if (!extra.empty())
      line += "computed class also contains " + join(extra) + "; ";
    if (pc.orientable != rc.orientable || pc.torus_rank != rc.torus_rank) {
      ok = false;
      line += "annotation differs; ";
    }
    if (ok)
      line += "match";
    else
      line.resize(line.size() - 2);
    cmp.match = cmp.match && ok;
    cmp.lines.push_back(line);
  }
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    if (!claimed[c]) {
      std::vector<std::string> names;
      for (const auto& a : p.classes[c].members)
        names.push_back(labels.name(a));
      cmp.match = false;
      cmp.lines.push_back("computed class {" + join(names) + "} has no reference counterpart");
    }
  if (p.classes.size() != ref.classes.size()) {
    cmp.match = false;
    cmp.lines.push_back("class count: computed " + std::to_string(p.classes.size()) + ", reference " +
                        std::to_string(ref.classes.size()));
  }
  return cmp;
}

std::vector<std::vector<BottMatrix>> matrix_conjugacy_components(const std::vector<BottMatrix>& members,
                                                                  int bound) {
  UnionFind uf(members.size());
  for (std::size_t j = 1; j < members.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (uf.find(i) != uf.find(j) && matrix_conjugacy(members[i], members[j], bound))
        uf.unite(i, j);
  std::map<std::size_t, std::vector<BottMatrix>> comps;
  for (std::size_t i = 0; i < members.size(); ++i)
    comps[uf.find(i)].push_back(members[i]);
  std::vector<std::vector<BottMatrix>> out;
  for (auto& [root, c] : comps)
    out.push_back(std::move(c));
  return out;
}

}  // namespace rbt
