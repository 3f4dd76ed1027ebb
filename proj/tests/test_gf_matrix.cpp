#include "doctest.h"

#include "declass/exact_matrix.hpp"
#include "declass/gf.hpp"
#include "declass/rational.hpp"

using namespace declass;

TEST_CASE("prime field arithmetic satisfies the field axioms") {
  for (auto p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    GfField f(p, 1);
    const auto elems = f.all_elements();
    REQUIRE(elems.size() == p);
    for (const auto& a : elems)
      for (const auto& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    for (const auto& a : elems) {
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(a.pow(p - 1).is_one());
      }
    }
  }
}

TEST_CASE("extension fields have the right order and multiplicative structure") {
  for (auto [p, k] : {std::pair<std::uint64_t, int>{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    GfField f(p, k);
    const std::uint64_t q = f.order();
    const auto elems = f.all_elements();
    REQUIRE(elems.size() == q);
    // distinct elements
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) CHECK_FALSE(elems[i] == elems[j]);
    // x^(q-1) = 1 for x != 0, and the Frobenius is additive
    for (const auto& a : elems) {
      if (!a.is_zero()) {
        CHECK(a.pow(q - 1).is_one());
        CHECK((a * a.inverse()).is_one());
      }
      for (const auto& b : elems) CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("mixing elements of different fields is rejected") {
  GfField f2(2, 1), f3(3, 1);
  CHECK_THROWS_AS((void)(f2.one() + f3.one()), std::invalid_argument);
}

TEST_CASE("rational matrix rank and kernel") {
  auto q = [](long long v) { return Rational(v); };
  // rank 2: third row is the sum of the first two
  auto m = Mat<Rational>::from_rows({{q(1), q(2), q(3)},
                                     {q(4), q(5), q(6)},
                                     {q(5), q(7), q(9)}});
  CHECK(m.rank() == 2);
  CHECK(m.kernel_dim() == 1);
  auto basis = m.kernel_basis();
  REQUIRE(basis.size() == 1);
  // the kernel vector really solves m v = 0
  for (std::size_t i = 0; i < 3; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < 3; ++j) acc = acc + m.at(i, j) * basis[0][j];
    CHECK(acc == Rational(0));
  }
  CHECK(Mat<Rational>::identity(4, q(1)).rank() == 4);
  CHECK(Mat<Rational>(3, 3, q(0)).rank() == 0);
}

TEST_CASE("rank over small prime fields sees characteristic effects") {
  GfField f2(2, 1);
  // over F_2 this matrix drops rank: [[1,1],[1,1]]
  auto m = Mat<GfElem>::from_rows({{f2.one(), f2.one()}, {f2.one(), f2.one()}});
  CHECK(m.rank() == 1);
  // the same entries over Q after replacing 1 -> 1 keep rank 1 too, so use
  // [[2,0],[0,2]]: invertible over Q, zero over F_2
  auto z = f2.from_int(2);
  auto m2 = Mat<GfElem>::from_rows({{z, f2.zero()}, {f2.zero(), z}});
  CHECK(m2.rank() == 0);
}

TEST_CASE("characteristic polynomial of small known matrices") {
  auto q = [](long long v) { return Rational(v); };
  SUBCASE("identity") {
    auto cp = Mat<Rational>::identity(2, q(1)).charpoly();
    // (t-1)^2 = t^2 - 2t + 1
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == q(1));
    CHECK(cp[1] == q(-2));
    CHECK(cp[2] == q(1));
  }
  SUBCASE("nilpotent Jordan block") {
    Mat<Rational> j(3, 3, q(0));
    j.at(0, 1) = q(1);
    j.at(1, 2) = q(1);
    auto cp = j.charpoly();
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == q(1));
    CHECK(cp[1] == q(0));
    CHECK(cp[2] == q(0));
    CHECK(cp[3] == q(0));
  }
  SUBCASE("2x2 with known trace and determinant") {
    auto m = Mat<Rational>::from_rows({{q(3), q(1)}, {q(2), q(4)}});
    auto cp = m.charpoly();  // t^2 - 7t + 10
    REQUIRE(cp.size() == 3);
    CHECK(cp[1] == q(-7));
    CHECK(cp[2] == q(10));
  }
}

TEST_CASE("companion matrix over F_7 reproduces its defining polynomial") {
  // p(t) = (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2
  GfField f(7, 1);
  auto c = [&](long long v) { return f.from_int(v); };
  auto m = Mat<GfElem>::from_rows({{c(0), c(0), c(2)},
                                   {c(1), c(0), c(-5)},
                                   {c(0), c(1), c(4)}});
  auto cp = m.charpoly();
  REQUIRE(cp.size() == 4);
  CHECK(cp[0] == c(1));
  CHECK(cp[1] == c(-4));
  CHECK(cp[2] == c(5));
  CHECK(cp[3] == c(-2));
}

TEST_CASE("charpoly constant term is the determinant up to sign") {
  // det(tI - A) at t = 0 is (-1)^n det A
  auto q = [](long long v) { return Rational(v); };
  auto m = Mat<Rational>::from_rows({{q(2), q(1), q(0)},
                                     {q(0), q(3), q(1)},
                                     {q(1), q(0), q(1)}});
  auto cp = m.charpoly();
  // det = 2*3*1 + 1*1*1 - 0 ... = 7
  CHECK(cp.back() == q(-7));
}
