#include "cyclic_slope/examples.hpp"

#include <set>

#include "cyclic_slope/error.hpp"
#include "doctest.h"

using namespace cyclic_slope;

TEST_CASE("product examples") {
  {
    const auto res = product_example({2, 1, 3, 4});
    CHECK(res.g == 5);
    CHECK(res.Kf2 == Rational(48));
    CHECK(res.chif == Rational(12));
    CHECK(res.slope == Rational(4));
  }
  {
    const auto res = product_example({3, 2, 1, 2});
    CHECK(res.g == 10);
    CHECK(res.Kf2 == Rational(72));
    CHECK(res.chif == Rational(13));
    CHECK(res.slope == Rational(72, 13));
  }
  for (long long n = 2; n <= 6; ++n) {
    const auto res = product_example({n, 1, 2, 3});
    CHECK(res.slope == Rational(12 * (n - 1), 2 * n - 1));
  }
  // h = 0, n = 2, M = 1 gives g = 0.
  CHECK_THROWS_AS(product_example({2, 0, 1, 1}), Error);
}

TEST_CASE("enumeration counts match the hand count") {
  EnumerationBudget b;
  b.max_nodes = 2;
  b.max_mult = 6;
  CHECK(enumerate_germs(2, 6, b).size() == 7);
  CHECK(enumerate_germs(3, 6, b).size() == 5);

  b.max_nodes = 1;
  b.max_mult = 3;
  const auto small = enumerate_germs(2, 6, b);
  REQUIRE(small.size() == 2);  // the empty germ and the simple double point
  CHECK(small[0].nodes.empty());
  REQUIRE(small[1].nodes.size() == 1);
  CHECK(small[1].nodes[0].mult == 2);

  b.max_mult = 4;
  const auto small3 = enumerate_germs(3, 6, b);
  REQUIRE(small3.size() == 2);  // the empty germ and the ordinary triple point
  CHECK(small3[1].nodes.size() == 1);
  CHECK(small3[1].nodes[0].mult == 3);

  b.max_nodes = 0;
  CHECK(enumerate_germs(2, 6, b).size() == 1);  // only the empty germ
}

TEST_CASE("every enumerated germ is valid and standardized") {
  EnumerationBudget b;
  b.max_nodes = 4;
  for (const auto& [n, r] : std::vector<std::pair<long long, long long>>{
           {2, 6}, {2, 8}, {3, 6}, {3, 9}, {4, 8}, {5, 10}}) {
    for (const auto& g : enumerate_germs(n, r, b)) {
      CHECK(validate_germ(g).empty());
      CHECK(g.horizontal_contacts.empty());
      GermView view(g);
      const bool even_strict = n == 2 && ((r - 2) / 2) % 2 == 0;
      for (int root : view.roots()) {
        const long long limit = even_strict ? r / 2 : r / 2 + (g.gamma_in_branch ? 1 : 0);
        CHECK(view.node(root).mult <= limit);
      }
    }
  }
}

TEST_CASE("enumeration is deterministic and free of duplicates") {
  EnumerationBudget b;
  b.max_nodes = 4;
  const auto first = enumerate_germs(2, 8, b);
  const auto second = enumerate_germs(2, 8, b);
  REQUIRE(first.size() == second.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(germ_to_json(first[i]) == germ_to_json(second[i]));
    CHECK(seen.insert(germ_to_json(first[i]).dump()).second);
  }
}

TEST_CASE("enumerate rejects bad parameters") {
  EnumerationBudget b;
  CHECK_THROWS_AS(enumerate_germs(2, 7, b), Error);
  CHECK_THROWS_AS(enumerate_germs(2, 4, b), Error);  // g = 1
}
