#include "doctest.h"

#include <random>

#include "declass/exact_matrix.hpp"
#include "declass/oracle.hpp"
#include "declass/partition.hpp"

using namespace declass;

namespace {

// Independent count of {X : JX = XJ} for the nilpotent Jordan matrix of
// shape lambda, by exact kernel computation on the n^2-dimensional operator
// X -> JX - XJ.  This is the brute-force ground truth for centralizer_dim.
long long commutant_dim(const Partition& lambda) {
  const std::size_t n = static_cast<std::size_t>(lambda.size());
  JordanType<Rational> t;
  t.spectrum.emplace(Rational(0), lambda);
  const Mat<Rational> j = matrix_of_type(t);
  Mat<Rational> op(n * n, n * n, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t col = a * n + b;
      // image of the matrix unit E_ab: J E_ab - E_ab J
      for (std::size_t i = 0; i < n; ++i) {
        // (J E_ab)(i, b) = J(i, a)
        op.at(i * n + b, col) = op.at(i * n + b, col) + j.at(i, a);
      }
      for (std::size_t jj = 0; jj < n; ++jj) {
        // (E_ab J)(a, jj) = J(b, jj)
        op.at(a * n + jj, col) = op.at(a * n + jj, col) - j.at(b, jj);
      }
    }
  return static_cast<long long>(op.kernel_dim());
}

}  // namespace

TEST_CASE("transpose of a partition") {
  CHECK(transpose(Partition({3})) == Partition({1, 1, 1}));
  CHECK(transpose(Partition({2, 1})) == Partition({2, 1}));
  CHECK(transpose(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(transpose(Partition()) == Partition());
}

TEST_CASE("transpose is an involution") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto all = partitions_of(n);
    const Partition lambda = all[rng() % all.size()];
    CHECK(transpose(transpose(lambda)) == lambda);
  }
}

TEST_CASE("dominance order examples") {
  CHECK(dominance_leq(Partition({1, 1, 1}), Partition({3})));
  CHECK_FALSE(dominance_leq(Partition({3}), Partition({1, 1, 1})));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})));
  CHECK_THROWS_AS((void)dominance_leq(Partition({2}), Partition({1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("the (2,2) vs (3,1) comparison agrees with the matrix rank criterion") {
  // Decide the same comparison with no partition combinatorics: nilpotent
  // 4x4 Jordan matrices and the rank test.
  auto nilpotent = [](const Partition& lambda) {
    JordanType<Rational> t;
    t.spectrum.emplace(Rational(0), lambda);
    return matrix_of_type(t);
  };
  CHECK(orbit_closure_leq(nilpotent(Partition({2, 2})), nilpotent(Partition({3, 1}))));
  CHECK_FALSE(orbit_closure_leq(nilpotent(Partition({3, 1})), nilpotent(Partition({2, 2}))));
}

TEST_CASE("dominance is a partial order") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
  }
}

TEST_CASE("transpose reverses dominance") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto& a : all)
      for (const auto& b : all)
        CHECK(dominance_leq(a, b) == dominance_leq(transpose(b), transpose(a)));
  }
}

TEST_CASE("centralizer dimension formula") {
  CHECK(centralizer_dim(Partition({1, 1})) == 4);
  CHECK(centralizer_dim(Partition({2})) == 2);
  CHECK(centralizer_dim(Partition({2, 1})) == 5);
  CHECK(centralizer_dim(Partition({1})) == 1);
  CHECK(centralizer_dim(Partition({3, 2, 1})) == 14);  // transpose (3,2,1): 9+4+1
}

TEST_CASE("centralizer dimension matches the brute-force commutant") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) CHECK(centralizer_dim(lambda) == commutant_dim(lambda));
}

TEST_CASE("induction of partitions") {
  CHECK(induce({Partition({1, 1}), Partition({1})}) == Partition({2, 1}));
  CHECK(induce({Partition({2}), Partition({1})}) == Partition({3}));
  CHECK(induce({Partition({2, 1})}) == Partition({2, 1}));
  CHECK(induce({Partition({2, 2}), Partition({3, 1})}) == Partition({5, 3}));
  CHECK(induce({}).empty());
}

TEST_CASE("richardson case: inducing zero orbits transposes the block sizes") {
  auto trivial = [](int m) { return Partition(std::vector<int>(m, 1)); };
  CHECK(induce({trivial(2), trivial(1)}) == transpose(Partition({2, 1})));
  CHECK(induce({trivial(1), trivial(1), trivial(1)}) == Partition({3}));
  CHECK(induce({trivial(3), trivial(3), trivial(2)}) == transpose(Partition({3, 3, 2})));
}

TEST_CASE("induced dimension identity") {
  // n^2 - cdim(induce) = sum of block orbit dimensions + twice the radical
  for (int n = 1; n <= 6; ++n) {
    // enumerate all block multisets with all partition choices
    std::vector<std::vector<Partition>> tuples;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int remaining, int max_size) -> void {
      if (remaining == 0) {
        tuples.push_back(current);
        return;
      }
      for (int s = std::min(remaining, max_size); s >= 1; --s)
        for (const auto& lambda : partitions_of(s)) {
          current.push_back(lambda);
          self(self, remaining - s, s);
          current.pop_back();
        }
    };
    rec(rec, n, n);
    for (const auto& tuple : tuples) {
      long long rhs = static_cast<long long>(n) * n;
      for (const auto& lambda : tuple) rhs -= centralizer_dim(lambda);
      const long long lhs = static_cast<long long>(n) * n - centralizer_dim(induce(tuple));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("induction is transitive under nested grouping") {
  // exhaustive two-stage groupings for small tuples
  const std::vector<std::vector<Partition>> tuples = {
      {Partition({1}), Partition({1}), Partition({1})},
      {Partition({2}), Partition({1, 1})},
      {Partition({2, 1}), Partition({1}), Partition({1})},
      {Partition({1, 1}), Partition({1, 1}), Partition({1})},
  };
  for (const auto& tuple : tuples) {
    const Partition flat = induce(tuple);
    const std::size_t m = tuple.size();
    for (std::size_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<Partition> left, right, staged;
      for (std::size_t i = 0; i < m; ++i) (mask >> i & 1 ? left : right).push_back(tuple[i]);
      if (!left.empty()) staged.push_back(induce(left));
      if (!right.empty()) staged.push_back(induce(right));
      CHECK(induce(staged) == flat);
    }
  }
}

TEST_CASE("partition enumeration counts") {
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("3.1.1") == Partition({3, 1, 1}));
  CHECK(parse_partition("2") == Partition({2}));
  CHECK_THROWS_AS((void)parse_partition(""), parse_error);
  CHECK_THROWS_AS((void)parse_partition("2.x"), parse_error);
  CHECK_THROWS_AS((void)parse_partition("0.1"), parse_error);
  CHECK_THROWS_AS((void)parse_partition("99999999999999999999"), parse_error);
}

TEST_CASE("partition string form") {
  CHECK(Partition({3, 1, 1}).str() == "3.1.1");
  CHECK(Partition().str() == "-");
}
