#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rbt/classify.hpp"
#include "rbt/extension.hpp"
#include "rbt/serialize.hpp"

using namespace rbt;

namespace {

const std::string fixtures = RBT_DEFAULT_FIXTURES;

const LabelTable& labels() {
  static const LabelTable t = LabelTable::load(fixtures + "/labels.json");
  return t;
}

BottMatrix m3(const char* label) { return *labels().find(label, 3); }
BottMatrix m4(const char* label) { return *labels().find(label, 4); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& xs, const char* sep = "; ") {
  std::string out;
  for (const auto& x : xs)
    out += (out.empty() ? "" : sep) + x;
  return out;
}

std::vector<IntVec> box(int n, int r) {
  std::vector<IntVec> out;
  IntVec v(n, -r);
  for (;;) {
    out.push_back(v);
    int k = 0;
    while (k < n && v[k] == r)
      v[k++] = -r;
    if (k == n)
      return out;
    ++v[k];
  }
}

std::vector<BottMatrix> all_upto(int n) {
  std::vector<BottMatrix> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& a : enumerate(k))
      out.push_back(a);
  return out;
}

std::vector<Witness> reference_witnesses(int n) {
  std::vector<Witness> out;
  for (const auto& j : Json::parse(read_file(fixtures + "/witnesses_n" + std::to_string(n) + ".json")))
    out.push_back(witness_from_json(j, labels()));
  return out;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome enumeration_counts() {
  const auto c3 = enumerate(3).size(), c4 = enumerate(4).size();
  return {c3 == 8 && c4 == 64, "enumerate(3) = " + std::to_string(c3) + ", enumerate(4) = " + std::to_string(c4)};
}

Outcome classify_against(int n, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const Partition p = classify(n);
  const double dt = seconds_since(t0);
  const Comparison cmp =
      compare_with_reference(p, load_reference(fixtures + "/theorem_n" + std::to_string(n) + ".json"), labels());
  std::ostringstream os;
  os << p.classes.size() << " classes, sizes [";
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    os << (i ? "," : "") << p.classes[i].members.size();
  os << "], " << dt << " s";
  bool ok = cmp.match && (limit <= 0 || dt < limit);
  if (!cmp.match)
    os << "; " << join(cmp.lines);
  return {ok, os.str()};
}

Outcome witnesses_verify() {
  const auto t0 = std::chrono::steady_clock::now();
  int total = 0, good = 0;
  std::vector<std::string> bad;
  for (int n : {3, 4})
    for (const Witness& w : reference_witnesses(n)) {
      ++total;
      if (verify_witness(w))
        ++good;
      else
        bad.push_back(labels().name(w.source) + "->" + labels().name(w.target));
    }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << good << "/" << total << " verified in " << dt << " s";
  if (!bad.empty())
    os << "; failing " << join(bad, ", ");
  return {good == total && total > 0 && dt < 5.0, os.str()};
}

Outcome holonomy_examples() {
  const BottGroup a1(m3("A1")), a5(m3("A5")), a7(m3("A7"));
  const int r1 = a1.holonomy().rank, r5 = a5.holonomy().rank;
  const auto n1 = a1.neg_count_multiset(), n7 = a7.neg_count_multiset();
  std::ostringstream os;
  os << "rank(A1) = " << r1 << ", rank(A5) = " << r5 << ", negs(A1) = {";
  for (std::size_t i = 0; i < n1.size(); ++i)
    os << (i ? "," : "") << n1[i];
  os << "}, negs(A7) = {";
  for (std::size_t i = 0; i < n7.size(); ++i)
    os << (i ? "," : "") << n7[i];
  os << "}";
  return {r1 == 1 && r5 == 2 && n1 == std::vector<int>{0, 1} && n7 == std::vector<int>{0, 2}, os.str()};
}

std::vector<IntVec> doubled_lattice(const BottGroup& g, const CenterDescription& c) {
  std::vector<IntVec> rows;
  for (const auto& x : c.generators) {
    IntVec r(g.n());
    for (int j = 0; j < g.n(); ++j)
      r[j] = 2 * x.v[j] + g.doubled_translation(x.s)[j];
    rows.push_back(r);
  }
  return oracle::hermite(rows, g.n());
}

Outcome center_examples() {
  const BottGroup a3(m4("Aa3")), a13(m4("Aa13"));
  const CenterDescription c3 = a3.center_basis(), c13 = a13.center_basis();
  // (e1, 0) doubles to 2 e1, (0, e3 selector) is the translation e3 / 2
  const bool l3 = doubled_lattice(a3, c3) == oracle::hermite({{2, 0, 0, 0}, {0, 0, 1, 0}}, 4);
  const bool l13 = doubled_lattice(a13, c13) == oracle::hermite({{2, 0, 0, 0}}, 4);
  std::ostringstream os;
  os << "rank Z(Aa3) = " << c3.rank << (l3 ? " with expected generators" : " with wrong generators")
     << ", rank Z(Aa13) = " << c13.rank << (l13 ? " with expected generators" : " with wrong generators");
  return {c3.rank == 2 && c13.rank == 1 && l3 && l13, os.str()};
}

Outcome property_suites() {
  std::vector<std::string> failed;
  long checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed.size() < 5)
      failed.push_back(what);
  };

  for (const auto& a : all_upto(3)) {
    const BottGroup g(a);
    const auto vs = box(a.n(), 1);
    for (std::uint32_t s = 0; s < g.num_selectors(); ++s)
      for (std::uint32_t u = 0; u < g.num_selectors(); ++u)
        for (const IntVec& v : vs)
          for (const IntVec& w : vs) {
            const GroupElement x{v, s}, y{w, u};
            expect(g.realize(g.multiply(x, y)) == compose(oracle::motion(a, x), oracle::motion(a, y)),
                   "group law " + a.compact());
          }
  }

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick(0, 63), sel(0, 15), coord(-2, 2), num(-16, 16);
  const auto mats = enumerate(4);
  int samples = 0;
  for (int trial = 0; trial < 10000; ++trial, ++samples) {
    const BottMatrix& a = mats[pick(rng)];
    const BottGroup g(a);
    GroupElement x{IntVec(4), static_cast<std::uint32_t>(sel(rng))};
    GroupElement y{IntVec(4), static_cast<std::uint32_t>(sel(rng))};
    DyVec p(4);
    for (int j = 0; j < 4; ++j) {
      x.v[j] = coord(rng);
      y.v[j] = coord(rng);
      p[j] = Dyadic::from_parts(num(rng), 2);
    }
    expect(g.realize(g.multiply(x, y)) == compose(oracle::motion(a, x), oracle::motion(a, y)),
           "group law " + a.compact());
    expect(g.act(x, p) == rbt::apply(oracle::motion(a, x), p), "action " + a.compact());
  }

  int groups = 0;
  for (const auto& a : all_upto(4)) {
    if (a.n() < 3)
      continue;
    ++groups;
    const BottGroup g(a);
    const ActionTable phi = ActionTable::of(g);
    const CocycleTable f = cocycle_of(g);
    std::vector<DyVec> t;
    for (std::uint32_t s = 0; s < g.num_selectors(); ++s)
      t.push_back(g.section_translation(s));
    expect(phi.is_homomorphism(), "action homomorphism " + a.compact());
    expect(check_cocycle(phi, f), "cocycle identity " + a.compact());
    expect(coboundary(phi, t) == to_real(f), "f = delta t " + a.compact());
    expect(g.torsion_free_check(), "torsion free " + a.compact());
    expect(!Extension(phi, f).find_involution(), "no involution " + a.compact());
    expect(g.abelianization() == oracle::abelianization_closed_form(a), "abelianization " + a.compact());
  }

  for (int n : {3, 4})
    for (const Witness& w : reference_witnesses(n)) {
      expect(oracle::conjugates(w.source, w.target, w.gamma), "oracle conjugacy " + w.source.compact());
      expect(invariant_vector(w.source) == invariant_vector(w.target), "invariant audit " + w.source.compact());
    }

  std::ostringstream os;
  os << checks << " checks, n <= 3 exhaustive, " << samples << " samples for n = 4, " << groups
     << " groups for the cocycle and torsion suites";
  if (!failed.empty())
    os << "; failing " << join(failed, ", ");
  return {failed.empty() && samples >= 10000 && groups == 72, os.str()};
}

Outcome shrunken_space_undetermined() {
  SearchSpace halves;
  halves.translations = {Dyadic(0), Dyadic::from_parts(1, 1)};
  try {
    classify(3, halves);
    return {false, "classify(3) with translations {0, 1/2} returned a partition"};
  } catch (const Undetermined& e) {
    return {true, std::string("undetermined: ") + labels().name(e.first) + " and " + labels().name(e.second)};
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"enumeration counts", enumeration_counts},
      {"classification n = 3 within 10 s", [] { return classify_against(3, 10.0); }},
      {"classification n = 4", [] { return classify_against(4, 0.0); }},
      {"reference witnesses verify within 5 s", witnesses_verify},
      {"holonomy ranks and negation counts", holonomy_examples},
      {"centers", center_examples},
      {"property suites", property_suites},
      {"undetermined with half translations only", shrunken_space_undetermined},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
