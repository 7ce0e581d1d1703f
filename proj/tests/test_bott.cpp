#include <doctest.h>

#include <set>

#include "rbt/bott.hpp"
#include "rbt/group.hpp"

using namespace rbt;

namespace {

const LabelTable& labels() {
  static const LabelTable t = LabelTable::load(std::string(RBT_DEFAULT_FIXTURES) + "/labels.json");
  return t;
}

BottMatrix m3(const char* label) { return *labels().find(label, 3); }
BottMatrix m4(const char* label) { return *labels().find(label, 4); }

}  // namespace

TEST_CASE("enumeration") {
  CHECK(enumerate(1).size() == 1);
  CHECK(enumerate(3).size() == 8);
  CHECK(enumerate(4).size() == 64);
  CHECK(enumerate(5).size() == 1024);
  CHECK_THROWS_AS(enumerate(0), DimensionError);
  std::set<std::uint64_t> ids;
  for (const auto& a : enumerate(4)) {
    ids.insert(a.id());
    CHECK(BottMatrix::parse_compact(a.compact()) == a);
    CHECK(BottMatrix::from_rows(a.rows()) == a);
    CHECK(BottMatrix::from_bits(4, a.bits()) == a);
  }
  CHECK(ids.size() == 64);
  CHECK(BottMatrix::parse_compact("n=4;bits=010011").bits() == "010011");
  CHECK_THROWS(BottMatrix::from_bits(3, "0101"));
  CHECK_THROWS(BottMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK_THROWS(BottMatrix::from_rows({{1, 2}, {0, 1}}));
}

TEST_CASE("label table") {
  CHECK(labels().labels(3).size() == 8);
  CHECK(labels().labels(4).size() == 64);
  CHECK(m3("A1").bits() == "100");
  CHECK(m3("A7").bits() == "110");
  CHECK(m4("Aa3").bits() == "100010");
  CHECK(labels().name(m3("A5")) == "A5");
  // A2 exists in both dimensions
  CHECK_THROWS_AS(labels().find("A2"), std::invalid_argument);
  CHECK(labels().find("I4")->n() == 4);
  CHECK(parse_matrix_spec("A2", labels(), 4) == m4("A2"));
  CHECK(parse_matrix_spec("011", labels(), 3) == m3("A2"));
  CHECK(parse_matrix_spec("n=3;bits=011", labels()) == m3("A2"));
  CHECK(parse_matrix_spec(R"({"n":3,"rows":[[1,0,1],[0,1,1],[0,0,1]]})", labels()) == m3("A2"));
  CHECK_THROWS(parse_matrix_spec("011", labels()));
  LabelTable t;
  t.add("X", m3("A1"));
  CHECK_THROWS(t.add("Y", m3("A1")));
}

TEST_CASE("lifted generators") {
  const BottMatrix eq2 = BottMatrix::from_bits(3, "011");  // a13 = a23 = 1
  auto g = lift_generators(eq2);
  CHECK(g[0].translation == DyVec{Dyadic::from_parts(1, 1), 0, 0});
  CHECK(g[0].linear == IntMatrix::sign_diagonal(3, 0b100));
  CHECK(g[1].linear == IntMatrix::sign_diagonal(3, 0b100));
  CHECK(g[2].linear.is_identity());
  for (const auto& x : lift_generators(BottMatrix::identity(3)))
    CHECK(x.linear.is_identity());
  auto a1 = lift_generators(m3("A1"));
  CHECK(a1[0].linear == IntMatrix::sign_diagonal(3, 0b010));
  CHECK(a1[1].linear.is_identity());
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : enumerate(n))
      for (const auto& gi : lift_generators(a)) {
        AffineMap sq = compose(gi, gi);
        CHECK(sq.linear.is_identity());
        CHECK(is_integral(sq.translation));
      }
}

TEST_CASE("torus rank and orientability") {
  CHECK(torus_rank(m3("I3")) == 3);
  CHECK(torus_rank(m3("A1")) == 2);
  CHECK(torus_rank(m3("A5")) == 1);
  CHECK(torus_rank(m3("A7")) == 1);
  CHECK(torus_rank(m4("Aa15")) == 1);
  CHECK(orientable(m3("A7")));
  CHECK_FALSE(orientable(m3("A1")));
  CHECK(orientable(BottMatrix::identity(4)));
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : enumerate(n)) {
      // brute force: coordinate j admits a circle action iff every lifted generator fixes it
      int k = 0;
      bool det_one = true;
      for (int j = 0; j < n; ++j) {
        bool fixed = true;
        for (const auto& g : lift_generators(a))
          fixed = fixed && g.linear(j, j) == 1;
        k += fixed;
      }
      for (const auto& g : lift_generators(a))
        det_one = det_one && g.linear.determinant() == 1;
      CHECK(torus_rank(a) == k);
      CHECK(orientable(a) == det_one);
    }
}

TEST_CASE("bounded matrix conjugacy") {
  auto p = matrix_conjugacy(m3("A1"), m3("A3"), 1);
  REQUIRE(p);
  const IntMatrix a = m3("A1").to_int_matrix(), b = m3("A3").to_int_matrix();
  CHECK(*p * a == b * *p);
  CHECK(p->is_unimodular());
  CHECK_FALSE(matrix_conjugacy(m3("I3"), m3("A1"), 1));
  CHECK(matrix_conjugacy(m3("A5"), m3("A6"), 1));
  // a conjugator inverts to one for the reverse pair
  for (const auto& x : enumerate(3))
    for (const auto& y : enumerate(3))
      if (auto q = matrix_conjugacy(x, y, 1)) {
        const IntMatrix qi = q->inverse();
        CHECK(qi * y.to_int_matrix() == x.to_int_matrix() * qi);
      }
}
