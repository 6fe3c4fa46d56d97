#include "doctest.h"

#include <functional>

#include "corpus.hpp"
#include "example97.hpp"
#include "fan.hpp"

using namespace fanmat;
using fans::Fan;
using fans::SquarefreeMonomialIdeal;
using la::IntMatrix;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("validate_fan accepts the fixtures") {
  CHECK(corpus::p2_fan().max_cones == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(corpus::p1p1_fan().max_cones.size() == 4);
  CHECK(corpus::p3_fan().max_cones.size() == 4);
  CHECK(corpus::octant_fan().max_cones.size() == 8);
  CHECK(ex97::fan().max_cones.size() == 14);
}

TEST_CASE("validate_fan accepts a single cone and a non-complete fan") {
  Fan f = fans::validate_fan(IntMatrix{{1, 0, -1}, {0, 1, -1}}, {{0}});
  CHECK(f.max_cones == std::vector<std::vector<int>>{{0}});
  Fan g = fans::validate_fan(IntMatrix{{1, 0}, {0, 1}}, {{0, 1}});
  CHECK(g.max_cones == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("validate_fan rejections") {
  SUBCASE("cones must intersect in a common face") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0, 1}, {0, 1, 1}}, {{0, 1}, {2}});
          }) == Errc::bad_intersection);
  }
  SUBCASE("overlapping 2-cones without a shared face") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0, 1}, {0, 1, 1}}, {{0, 1}, {1, 2}, {0, 2}});
          }) == Errc::bad_intersection);
  }
  SUBCASE("rank deficient ray matrix") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0, -1}, {0, 0, 0}}, {{0}, {1}});
          }) == Errc::rank_deficient);
  }
  SUBCASE("index out of range") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0}, {0, 1}}, {{0, 2}});
          }) == Errc::index_out_of_range);
  }
  SUBCASE("not an antichain") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0}, {0, 1}}, {{0}, {0, 1}});
          }) == Errc::not_maximal);
  }
  SUBCASE("non simplicial cone") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0, -1}, {0, 1, -1}}, {{0, 1, 2}});
          }) == Errc::not_simplicial);
  }
  SUBCASE("duplicate index inside a cone") {
    CHECK(code_of([] {
            fans::validate_fan(IntMatrix{{1, 0}, {0, 1}}, {{0, 0}});
          }) == Errc::parse);
  }
}

TEST_CASE("completeness") {
  CHECK(fans::is_complete(corpus::p2_fan()));
  CHECK(fans::is_complete(corpus::p1p1_fan()));
  CHECK(fans::is_complete(corpus::quotient_p1p1_fan()));
  CHECK(fans::is_complete(corpus::hirzebruch1_fan()));
  CHECK(fans::is_complete(corpus::p3_fan()));
  CHECK(fans::is_complete(corpus::octant_fan()));
  CHECK(!fans::is_complete(ex97::fan()));
  CHECK(!fans::is_complete(fans::validate_fan(IntMatrix{{1, 0}, {0, 1}}, {{0, 1}})));
  // mixed cone dimensions are never complete
  CHECK(!fans::is_complete(fans::validate_fan(IntMatrix{{1, 0, -1}, {0, 1, -1}}, {{0, 1}, {2}})));
}

TEST_CASE("random complete fans are complete and survive subdivision") {
  std::mt19937_64 rng(555);
  for (int it = 0; it < 60; ++it) {
    Fan f = corpus::random_complete_fan2(rng, static_cast<int>(rng() % 5));
    CHECK(fans::is_complete(f));
    Fan g = corpus::stellar_subdivide(f, rng() % f.max_cones.size());
    CHECK(fans::is_complete(g));
  }
  for (int it = 0; it < 15; ++it) {
    Fan f = corpus::random_complete_fan3(rng, static_cast<int>(rng() % 4));
    CHECK(fans::is_complete(f));
  }
}

TEST_CASE("irrelevant ideal, fixed cases") {
  SUBCASE("projective plane") {
    SquarefreeMonomialIdeal ideal = fans::irrelevant_ideal(corpus::p2_fan());
    CHECK(ideal.num_vars == 3);
    CHECK(ideal.supports == std::vector<std::vector<int>>{{0}, {1}, {2}});
  }
  SUBCASE("product of two lines") {
    SquarefreeMonomialIdeal ideal = fans::irrelevant_ideal(corpus::p1p1_fan());
    CHECK(ideal.supports == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  }
  SUBCASE("database entry no. 97") {
    SquarefreeMonomialIdeal ideal = fans::irrelevant_ideal(ex97::fan());
    CHECK(ideal.supports == ex97::irrelevant_ideal().supports);
  }
}

TEST_CASE("fan from irrelevant ideal, fixed cases") {
  SUBCASE("coordinate ideal over the projective plane rays") {
    SquarefreeMonomialIdeal ideal{3, {{0}, {1}, {2}}};
    Fan f = fans::fan_from_irrelevant(IntMatrix{{1, 0, -1}, {0, 1, -1}}, ideal);
    CHECK(f.max_cones == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  }
  SUBCASE("database entry no. 97 has eight 5-cones and six 4-cones") {
    Fan f = ex97::fan();
    int five = 0, four = 0;
    for (const auto& c : f.max_cones) {
      if (c.size() == 5) ++five;
      if (c.size() == 4) ++four;
    }
    CHECK(five == 8);
    CHECK(four == 6);
  }
}

TEST_CASE("fan and irrelevant ideal are inverse on the corpus") {
  std::mt19937_64 rng(808);
  std::vector<Fan> fixtures = {corpus::p2_fan(),          corpus::p1p1_fan(),
                               corpus::quotient_p1p1_fan(), corpus::hirzebruch1_fan(),
                               corpus::p3_fan(),          corpus::octant_fan(),
                               ex97::fan()};
  for (int it = 0; it < 25; ++it) fixtures.push_back(corpus::random_complete_fan2(rng, it % 5));
  for (int it = 0; it < 8; ++it) fixtures.push_back(corpus::random_complete_fan3(rng, it % 3));
  for (const Fan& f : fixtures) {
    SquarefreeMonomialIdeal ideal = fans::irrelevant_ideal(f);
    Fan g = fans::fan_from_irrelevant(f.V, ideal);
    CHECK(g.V == f.V);
    CHECK(g.max_cones == f.max_cones);
    // supports of the ideal are an antichain, sorted
    for (std::size_t i = 0; i + 1 < ideal.supports.size(); ++i)
      CHECK(ideal.supports[i] < ideal.supports[i + 1]);
  }
}

TEST_CASE("codimension of the irrelevant locus") {
  SUBCASE("coordinate ideal") {
    CHECK(fans::irrelevant_locus_codim({3, {{0}, {1}, {2}}}) == 3);
  }
  SUBCASE("product of two lines") {
    CHECK(fans::irrelevant_locus_codim(fans::irrelevant_ideal(corpus::p1p1_fan())) == 2);
  }
  SUBCASE("database entry no. 97") {
    CHECK(fans::irrelevant_locus_codim(ex97::irrelevant_ideal()) == 3);
  }
  SUBCASE("unit ideal has empty locus") {
    CHECK(fans::irrelevant_locus_codim({4, {{}}}) == 5);
  }
  SUBCASE("no generators is an error") {
    CHECK(code_of([] { fans::irrelevant_locus_codim({4, {}}); }) == Errc::empty_ideal);
  }
}

TEST_CASE("codimension agrees with subset scan") {
  std::mt19937_64 rng(246);
  for (int it = 0; it < 150; ++it) {
    int m = 2 + static_cast<int>(rng() % 9);
    int gens = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> supports;
    for (int g = 0; g < gens; ++g) {
      std::vector<int> s;
      for (int v = 0; v < m; ++v)
        if (rng() % 3 == 0) s.push_back(v);
      supports.push_back(std::move(s));
    }
    SquarefreeMonomialIdeal ideal{static_cast<std::size_t>(m), supports};
    CHECK(fans::irrelevant_locus_codim(ideal) == corpus::min_hitting_set_bruteforce(m, supports));
  }
}

TEST_CASE("primal neighborliness, fixed cases") {
  CHECK(fans::k_neighborly_primal(corpus::p2_fan(), 2));
  CHECK(!fans::k_neighborly_primal(corpus::p1p1_fan(), 2));
  CHECK(fans::k_neighborly_primal(ex97::fan(), 2));
  CHECK(fans::k_neighborly_primal(corpus::p1p1_fan(), 1));
  CHECK(!fans::k_neighborly_primal(ex97::fan(), 3));
}

TEST_CASE("neighborliness matches a direct face scan") {
  std::mt19937_64 rng(1212);
  auto face_of_some_cone = [](const Fan& f, const std::vector<int>& s) {
    for (const auto& c : f.max_cones)
      if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
    return false;
  };
  for (int it = 0; it < 40; ++it) {
    Fan f = it % 2 ? corpus::random_complete_fan2(rng, static_cast<int>(rng() % 4))
                   : corpus::random_complete_fan3(rng, static_cast<int>(rng() % 3));
    for (int k = 1; k <= static_cast<int>(f.m()); ++k) {
      // enumerate all k-subsets
      std::vector<int> idx(k);
      bool all = true;
      std::function<void(int, int)> rec = [&](int start, int at) {
        if (!all) return;
        if (at == k) {
          if (!face_of_some_cone(f, idx)) all = false;
          return;
        }
        for (int v = start; v < static_cast<int>(f.m()); ++v) {
          idx[at] = v;
          rec(v + 1, at + 1);
        }
      };
      rec(0, 0);
      CHECK(fans::k_neighborly_primal(f, k) == all);
    }
  }
}
