#include <doctest.h>

#include "rbt/affine.hpp"
#include "rbt/dyadic.hpp"

using namespace rbt;

namespace {

Dyadic q(std::int64_t num, int exp) { return Dyadic::from_parts(num, exp); }

}  // namespace

TEST_CASE("dyadic normal form and text") {
  CHECK(q(2, 2) == q(1, 1));
  CHECK(q(4, 2) == Dyadic(1));
  CHECK(q(1, 2).str() == "1/4");
  CHECK(q(-3, 1).str() == "-3/2");
  CHECK(Dyadic(7).str() == "7");
  CHECK(Dyadic::parse("1/4") == q(1, 2));
  CHECK(Dyadic::parse("-3/2^3") == q(-3, 3));
  CHECK(Dyadic::parse("6/8") == q(3, 2));
  CHECK(Dyadic::parse("-5") == Dyadic(-5));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::parse("x"), std::invalid_argument);
  for (std::int64_t num = -20; num <= 20; ++num)
    for (int e = 0; e < 5; ++e)
      CHECK(Dyadic::parse(q(num, e).str()) == q(num, e));
}

TEST_CASE("dyadic arithmetic, floor and frac") {
  CHECK(q(1, 1) + q(1, 2) == q(3, 2));
  CHECK(q(1, 1) - q(3, 2) == q(-1, 2));
  CHECK(q(3, 1) * q(1, 1) == q(3, 2));
  CHECK(q(-1, 2).floor() == -1);
  CHECK(q(-1, 2).frac() == q(3, 2));
  CHECK(q(5, 1).floor() == 2);
  CHECK(q(-1, 1) < q(1, 2));
  CHECK_THROWS_AS(Dyadic(std::int64_t{1} << 62) * Dyadic(4), OverflowError);
}

TEST_CASE("affine application and composition") {
  const IntMatrix flip3 = IntMatrix::sign_diagonal(3, 0b100);
  const AffineMap g1(unit(3, 0, q(1, 1)), flip3);
  // image of the origin is the translation part
  CHECK(apply(g1, DyVec(3, Dyadic(0))) == DyVec{q(1, 1), 0, 0});
  CHECK(apply(g1, DyVec{0, 0, 1}) == DyVec{q(1, 1), 0, -1});
  // the generator squares to a unit translation
  const AffineMap sq = compose(g1, g1);
  CHECK(sq.linear.is_identity());
  CHECK(sq.translation == DyVec{1, 0, 0});

  const AffineMap f({q(1, 2), 0, 1}, IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  const AffineMap g({0, q(-1, 1), 3}, IntMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const DyVec x{q(1, 3), -2, q(5, 1)};
  CHECK(apply(compose(f, g), x) == apply(f, apply(g, x)));
  CHECK(apply(inverse(f), apply(f, x)) == x);
  CHECK(compose(f, inverse(f)) == AffineMap::identity(3));
  CHECK(conjugate(f, g) == compose(compose(f, g), inverse(f)));

  auto [lin, tr] = decompose(compose(f, g));
  CHECK(lin == f.linear * g.linear);
  CHECK(tr == f.linear * g.translation + f.translation);
}

TEST_CASE("integer matrices") {
  const IntMatrix b{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
  CHECK(b.determinant() == 1);
  CHECK(b.is_unimodular());
  CHECK(b * b.inverse() == IntMatrix::identity(3));
  CHECK(b.transpose().transpose() == b);
  const IntMatrix two{{2, 0}, {0, 1}};
  CHECK_FALSE(two.is_unimodular());
  CHECK_THROWS_AS(two.inverse(), std::domain_error);
  CHECK(IntMatrix::sign_diagonal(4, 0b1010).neg_mask() == 0b1010u);
  CHECK(IntMatrix::sign_diagonal(4, 0b1010).is_sign_diagonal());
  CHECK_FALSE(b.is_diagonal());
  CHECK_THROWS_AS(compose(AffineMap::identity(2), AffineMap::identity(3)), DimensionError);
}
