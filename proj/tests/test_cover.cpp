#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclocover/cover.hpp"
#include "cyclocover/residue.hpp"
#include "test_support.hpp"

using namespace cyclo;

TEST_CASE("family parsing and validation") {
  CoverFamily f = parse_family("5:1,3,3,3");
  CHECK(f.degree == 5);
  CHECK(f.indices == std::vector<long>{1, 3, 3, 3});
  CHECK(family_literal(f) == "5:1,3,3,3");
  CHECK(family_display(f) == "(5; 1,3,3,3)");
  CHECK(mu(f, 2) == make_rational(3, 5));

  CHECK_THROWS_AS(make_cover_family(1, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_cover_family(5, {1, 4}), std::invalid_argument);       // too few slots
  CHECK_THROWS_AS(make_cover_family(5, {1, 3, 3, 5}), std::invalid_argument); // index out of range
  CHECK_THROWS_AS(make_cover_family(5, {1, 3, 3, 4}), std::invalid_argument); // sum not divisible
  CHECK_THROWS_AS(make_cover_family(6, {2, 2, 4, 4}), std::invalid_argument); // gcd 2
  CHECK_THROWS_AS(parse_family("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("5:1,3,3"), std::invalid_argument);
  CHECK(parse_family(" 5 : 1 , 3 , 3 , 3 ").degree == 5);
}

TEST_CASE("pinned eigenspace profiles") {
  CoverFamily f = parse_family("5:1,3,3,3");
  EigenspaceProfile p1 = eigenspace_profile(f, 1);
  CHECK(p1.support == std::vector<int>{1, 2, 3, 4});
  CHECK(p1.local_data ==
        std::vector<Rational>{make_rational(1, 5), make_rational(3, 5), make_rational(3, 5),
                              make_rational(3, 5)});
  CHECK(p1.hodge_p == 1);
  CHECK(p1.hodge_q == 1);

  // Frozen by direct evaluation: [2*mu] = (2/5, 1/5, 1/5, 1/5), sum 1.
  EigenspaceProfile p2 = eigenspace_profile(f, 2);
  CHECK(p2.hodge_p == 0);
  CHECK(p2.hodge_q == 2);

  EigenspaceProfile q2 = eigenspace_profile(parse_family("4:1,1,1,1"), 2);
  CHECK(q2.support.size() == 4);
  CHECK(q2.hodge_p == 1);
  CHECK(q2.hodge_q == 1);

  // Support can be proper: (4;1,2,2,3) at j=2 keeps only slots 1 and 4.
  EigenspaceProfile s2 = eigenspace_profile(parse_family("4:1,2,2,3"), 2);
  CHECK(s2.support == std::vector<int>{1, 4});
  CHECK(s2.hodge_p == 0);
  CHECK(s2.hodge_q == 0);

  CHECK_THROWS_AS(eigenspace_profile(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(eigenspace_profile(f, 5), std::invalid_argument);
}

TEST_CASE("conjugation symmetry and support size on random families") {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 300; ++trial) {
    CoverFamily f = random_family(rng, 30);
    for (long j = 1; j < f.degree; ++j) {
      EigenspaceProfile a = eigenspace_profile(f, j);
      EigenspaceProfile b = eigenspace_profile(f, f.degree - j);
      CHECK(a.hodge_p == b.hodge_q);
      CHECK(a.hodge_q == b.hodge_p);
      CHECK(a.support == b.support);
      CHECK(a.support.size() != 1);
      CHECK(a.hodge_p + a.hodge_q ==
            (a.support.empty() ? 0 : static_cast<long>(a.support.size()) - 2));
    }
  }
}

TEST_CASE("pinned genera") {
  CHECK(genus(parse_family("2:1,1,1,1")) == 1);
  CHECK(genus(parse_family("7:2,4,4,4")) == 6);
  CHECK(genus(parse_family("3:1,1,1,1,1,1")) == 4);
  CHECK(genus(parse_family("4:1,1,1,1")) == 3);
  CHECK(genus(parse_family("12:4,7,7,6")) == 7);
}

TEST_CASE("genus equals the Hodge sums on random families") {
  std::mt19937_64 rng(test_seed() + 1);
  for (int trial = 0; trial < 300; ++trial) {
    CoverFamily f = random_family(rng, 40);
    long sum_p = 0, sum_q = 0;
    for (long j = 1; j < f.degree; ++j) {
      EigenspaceProfile p = eigenspace_profile(f, j);
      sum_p += p.hodge_p;
      sum_q += p.hodge_q;
    }
    long g = genus(f);
    CHECK(g == sum_p);
    CHECK(g == sum_q);
  }
}

TEST_CASE("pinned quotients") {
  QuotientResult a = quotient_family(parse_family("4:1,1,1,1"), 2);
  REQUIRE(std::holds_alternative<CoverFamily>(a));
  CHECK(family_literal(std::get<CoverFamily>(a)) == "2:1,1,1,1");

  QuotientResult b = quotient_family(parse_family("6:1,2,2,1"), 2);
  REQUIRE(std::holds_alternative<CoverFamily>(b));
  CHECK(family_literal(std::get<CoverFamily>(b)) == "3:1,2,2,1");

  QuotientResult c = quotient_family(parse_family("6:2,2,2,3,3"), 3);
  REQUIRE(std::holds_alternative<DegenerateQuotient>(c));
  CHECK(std::get<DegenerateQuotient>(c).remaining_points == 2);

  CHECK_THROWS_AS(quotient_family(parse_family("6:1,2,2,1"), 4), std::invalid_argument);
  CHECK_THROWS_AS(quotient_family(parse_family("6:1,2,2,1"), 1), std::invalid_argument);
  CHECK_THROWS_AS(quotient_family(parse_family("6:1,2,2,1"), 6), std::invalid_argument);
}

TEST_CASE("quotient profiles match the source at multiplied characters") {
  std::mt19937_64 rng(test_seed() + 2);
  int seen = 0;
  while (seen < 100) {
    CoverFamily f = random_family(rng, 36);
    for (long r = 2; r < f.degree; ++r) {
      if (f.degree % r != 0) continue;
      QuotientResult qr = quotient_family(f, r);
      if (!std::holds_alternative<CoverFamily>(qr)) continue;
      const CoverFamily& q = std::get<CoverFamily>(qr);
      ++seen;
      // Slot renumbering: surviving slots of f, in order.
      long mq = f.degree / r;
      std::vector<int> kept;
      for (int k = 0; k < point_count(f); ++k)
        if (f.indices[k] % mq != 0) kept.push_back(k + 1);
      for (long j = 1; j < mq; ++j) {
        EigenspaceProfile pq = eigenspace_profile(q, j);
        EigenspaceProfile pf = eigenspace_profile(f, r * j);
        CHECK(pq.hodge_p == pf.hodge_p);
        CHECK(pq.hodge_q == pf.hodge_q);
        CHECK(pq.local_data == pf.local_data);
        std::vector<int> mapped;
        for (int s : pq.support) mapped.push_back(kept[s - 1]);
        CHECK(mapped == pf.support);
      }
    }
  }
}

TEST_CASE("pinned canonical forms") {
  CHECK(family_literal(canonical_form(parse_family("5:2,2,2,2,2"))) == "5:1,1,1,1,1");
  CHECK(family_literal(canonical_form(parse_family("2:1,1,1,1"))) == "2:1,1,1,1");
  // Orbit of (12;5,5,6,8) under units {1,5,7,11}: sorted tuples (5,5,6,8),
  // (1,1,4,6), (6,8,11,11), (4,6,7,7); least is (1,1,4,6).
  CHECK(family_literal(canonical_form(parse_family("12:5,5,6,8"))) == "12:1,1,4,6");
  CHECK(canonical_form(parse_family("12:5,5,6,8")).indices ==
        canonical_form(parse_family("12:4,6,7,7")).indices);
  CHECK(family_literal(canonical_form(parse_family("5:1,3,3,3"))) == "5:1,1,1,2");
}

TEST_CASE("canonical form is constant on orbits and idempotent") {
  std::mt19937_64 rng(test_seed() + 3);
  for (int trial = 0; trial < 200; ++trial) {
    CoverFamily f = random_family(rng, 24);
    CoverFamily base = canonical_form(f);
    CHECK(canonical_form(base).indices == base.indices);

    std::vector<long> units = unit_residues(f.degree);
    long v = units[rand_range(rng, 0, static_cast<long>(units.size()) - 1)];
    std::vector<long> moved;
    for (long d : f.indices) moved.push_back((d * v) % f.degree);
    std::shuffle(moved.begin(), moved.end(), rng);
    CoverFamily g = make_cover_family(f.degree, moved);
    CHECK(canonical_form(g).indices == base.indices);
    CHECK(canonical_form(g).degree == base.degree);
  }
}

TEST_CASE("stable partitions") {
  CoverFamily f = parse_family("4:1,2,2,3");
  CHECK(is_stable_partition(f, Partition{{{1}, {2}, {3}, {4}}}));
  CHECK_FALSE(is_stable_partition(parse_family("2:1,1,1,1"), Partition{{{1, 2}, {3, 4}}}));
  CHECK(is_stable_partition(parse_family("5:1,3,3,3"), Partition{{{1, 2}, {3}, {4}}}));

  CHECK_THROWS_AS(is_stable_partition(f, Partition{{{1, 2}, {2, 3}, {4}}}),
                  std::invalid_argument);  // overlap
  CHECK_THROWS_AS(is_stable_partition(f, Partition{{{1}, {2}, {3}}}),
                  std::invalid_argument);  // slot 4 missing
  CHECK_THROWS_AS(is_stable_partition(f, Partition{{{0}, {1}, {2}, {3}, {4}}}),
                  std::invalid_argument);  // out of range
}

TEST_CASE("collision of points") {
  CoverFamily f = parse_family("4:1,1,2,2,2");
  CoverFamily merged = collide(f, Partition{{{1, 2}, {3}, {4}, {5}}});
  CHECK(family_literal(merged) == "2:1,1,1,1");

  CoverFamily same = collide(f, Partition{{{1}, {2}, {3}, {4}, {5}}});
  CHECK(family_literal(same) == family_literal(f));

  CoverFamily six = parse_family("3:1,1,1,1,1,1");
  CHECK(family_literal(collide(six, Partition{{{1, 2}, {3}, {4}, {5}, {6}}})) == "3:2,1,1,1,1");

  CHECK_THROWS_AS(collide(parse_family("2:1,1,1,1"), Partition{{{1, 2}, {3}, {4}}}),
                  std::invalid_argument);  // block datum would vanish
}

TEST_CASE("fermat cm fiber criterion") {
  CHECK(has_fermat_cm_fiber(parse_family("5:1,3,3,3")));
  CHECK(has_fermat_cm_fiber(parse_family("5:1,1,1,1,1")));
  CHECK(has_fermat_cm_fiber(parse_family("12:4,6,7,7")));
  CHECK_FALSE(has_fermat_cm_fiber(parse_family("12:5,1,11,7")));
}
