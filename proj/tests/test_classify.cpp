#include <doctest.h>

#include "oracles.hpp"
#include "rbt/classify.hpp"
#include "rbt/serialize.hpp"

using namespace rbt;

namespace {

const std::string fixtures = RBT_DEFAULT_FIXTURES;

const LabelTable& labels() {
  static const LabelTable t = LabelTable::load(fixtures + "/labels.json");
  return t;
}

BottMatrix m3(const char* label) { return *labels().find(label, 3); }

std::vector<Witness> reference_witnesses(int n) {
  std::vector<Witness> out;
  for (const auto& j : Json::parse(read_file(fixtures + "/witnesses_n" + std::to_string(n) + ".json")))
    out.push_back(witness_from_json(j, labels()));
  return out;
}

const Partition& partition3() {
  static const Partition p = classify(3);
  return p;
}

std::vector<std::vector<std::string>> names(const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : p.classes) {
    out.emplace_back();
    for (const auto& a : c.members)
      out.back().push_back(labels().name(a));
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

TEST_CASE("invariant vectors") {
  const InvariantVector a7 = invariant_vector(m3("A7"));
  CHECK(a7.orientable);
  CHECK(a7.torus_rank == 1);
  CHECK(a7.holonomy_rank == 1);
  CHECK(a7.neg_counts == std::vector<int>{0, 2});
  const InvariantVector i4 = invariant_vector(BottMatrix::identity(4));
  CHECK(i4.holonomy_rank == 0);
  CHECK(i4.orientable);
  CHECK(i4.torus_rank == 4);
  CHECK(i4.center_rank == 4);
  CHECK(first_difference(invariant_vector(m3("A5")), a7) == std::optional<std::string>("holonomy_rank"));
  CHECK_FALSE(first_difference(invariant_vector(m3("A5")), invariant_vector(m3("A6"))));
  CHECK(invariant_fields().size() == 10);
}

TEST_CASE("reference witnesses verify") {
  const auto w3 = reference_witnesses(3);
  const auto w4 = reference_witnesses(4);
  CHECK(w3.size() == 4);
  CHECK(w4.size() == 52);
  const SearchSpace space;
  for (const auto* list : {&w3, &w4})
    for (const Witness& w : *list) {
      CAPTURE(labels().name(w.source));
      CAPTURE(labels().name(w.target));
      CHECK(verify_witness(w));
      CHECK(oracle::conjugates(w.source, w.target, w.gamma));
      CHECK(space.contains(w.gamma));
    }
}

TEST_CASE("verify_witness rejects non-conjugators") {
  CHECK_FALSE(verify_witness({m3("A1"), m3("A5"), AffineMap::identity(3)}));
  CHECK_FALSE(verify_witness({m3("A5"), m3("A6"), AffineMap::identity(3)}));
  // the item c conjugator with the wrong quarter
  CHECK_FALSE(verify_witness({m3("A5"), m3("A6"), AffineMap({Dyadic::from_parts(1, 2), 0, 0}, IntMatrix::identity(3))}));
  CHECK_FALSE(verify_witness({m3("A1"), m3("A2"), AffineMap({0, 0, 0}, IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})}));
  CHECK_THROWS_AS(verify_witness({m3("A1"), BottMatrix::identity(4), AffineMap::identity(3)}), DimensionError);
}

TEST_CASE("conjugator search") {
  auto w = conjugator_search(m3("A1"), m3("A4"), {});
  REQUIRE(w);
  CHECK(verify_witness(*w));
  CHECK(oracle::conjugates(w->source, w->target, w->gamma));
  auto id = conjugator_search(m3("A6"), m3("A6"), {});
  REQUIRE(id);
  CHECK(id->gamma == AffineMap::identity(3));
  CHECK_FALSE(conjugator_search(m3("A1"), m3("A7"), {}));
  auto c = conjugator_search(m3("A5"), m3("A6"), {});
  REQUIRE(c);
  CHECK(verify_witness(*c));
  SearchSpace halves;
  halves.translations = {Dyadic(0), Dyadic::from_parts(1, 1)};
  CHECK_FALSE(conjugator_search(m3("A5"), m3("A6"), halves));
  CHECK(conjugator_search(m3("A1"), m3("A3"), halves));
}

TEST_CASE("witnesses compose and invert") {
  const auto w3 = reference_witnesses(3);
  const Witness& ab = w3[0];  // A1 -> A2
  const Witness& ac = w3[1];  // A1 -> A3
  const Witness ba = inverse(ab);
  CHECK(verify_witness(ba));
  const Witness bc = compose(ac, ba);
  CHECK(bc.source == m3("A2"));
  CHECK(bc.target == m3("A3"));
  CHECK(verify_witness(bc));
  CHECK_THROWS_AS(compose(ab, ab), std::invalid_argument);
  for (const auto& w : reference_witnesses(4)) {
    CHECK(verify_witness(inverse(w)));
    CHECK(verify_witness(compose(inverse(w), w)));
  }
}

TEST_CASE("classify small dimensions") {
  CHECK(classify(1).classes.size() == 1);
  const Partition p2 = classify(2);
  REQUIRE(p2.classes.size() == 2);
  CHECK(p2.classes[1].orientable == false);
  CHECK(p2.separations.size() == 1);
}

TEST_CASE("classify n = 3") {
  const Partition& p = partition3();
  using V = std::vector<std::vector<std::string>>;
  CHECK(names(p) == V{{"I3"}, {"A1", "A2", "A3", "A4"}, {"A5", "A6"}, {"A7"}});
  CHECK(p.classes[0].orientable);
  CHECK(p.classes[0].torus_rank == 3);
  CHECK_FALSE(p.classes[1].orientable);
  CHECK(p.classes[1].torus_rank == 2);
  CHECK_FALSE(p.classes[2].orientable);
  CHECK(p.classes[2].torus_rank == 1);
  CHECK(p.classes[3].orientable);
  CHECK(p.classes[3].torus_rank == 1);
  CHECK(p.separations.size() == 6);
  for (const auto& c : p.classes) {
    CHECK(c.witnesses.size() + 1 == c.members.size());
    for (const auto& w : c.witnesses) {
      CHECK(verify_witness(w));
      CHECK(invariant_vector(w.source) == invariant_vector(w.target));
    }
  }
  CHECK(p.class_of(m3("A6")) == 2);
}

TEST_CASE("classify is deterministic across thread counts") {
  const Json one = to_json(classify(3, {}, 1), labels());
  const Json four = to_json(classify(3, {}, 4), labels());
  CHECK(one.dump() == four.dump());
}

TEST_CASE("shrunken search space is reported as undetermined") {
  SearchSpace halves;
  halves.translations = {Dyadic(0), Dyadic::from_parts(1, 1)};
  try {
    classify(3, halves);
    FAIL("expected Undetermined");
  } catch (const Undetermined& e) {
    CHECK(labels().name(e.first) == "A5");
    CHECK(labels().name(e.second) == "A6");
  }
}

TEST_CASE("comparison with reference tables") {
  const Reference ref = load_reference(fixtures + "/theorem_n3.json");
  const Comparison ok = compare_with_reference(partition3(), ref, labels());
  CHECK(ok.match);
  CHECK(ok.lines.size() == 4);

  Reference merged = ref;
  merged.classes[2].labels.push_back("A7");
  merged.classes.pop_back();
  const Comparison bad = compare_with_reference(partition3(), merged, labels());
  CHECK_FALSE(bad.match);
  bool named = false;
  for (const auto& line : bad.lines)
    named = named || line.find("A7") != std::string::npos;
  CHECK(named);

  Reference flipped = ref;
  flipped.classes[0].orientable = false;
  CHECK_FALSE(compare_with_reference(partition3(), flipped, labels()).match);
}

TEST_CASE("search space membership") {
  const SearchSpace space;
  CHECK(space.contains(AffineMap::identity(3)));
  CHECK_FALSE(space.contains(AffineMap({Dyadic::from_parts(1, 3), 0, 0}, IntMatrix::identity(3))));
  CHECK_FALSE(space.contains(AffineMap({0, 0, 0}, IntMatrix{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(space.str() == "entries in [-1, 1], translations {0, 1/4, 1/2, 3/4}");
}

TEST_CASE("matrix conjugacy components") {
  const auto comps = matrix_conjugacy_components(partition3().classes[1].members);
  std::size_t total = 0;
  for (const auto& c : comps)
    total += c.size();
  CHECK(total == 4);
}
