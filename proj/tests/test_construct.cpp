#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qpart/codec.hpp"
#include "qpart/construct.hpp"
#include "qpart/counting.hpp"

using namespace qpart;

namespace {

// census of tight irreducible partitions, for the seed fixtures
std::vector<Partition> tight_irreducible(int d) {
  std::vector<Partition> out;
  enumerate_partitions(d, DimSet::full(d), [&](const Partition& p) {
    if (is_tight(p) && is_irreducible(p)) out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("Q_2 has no tight irreducible partition; Q_3 has eight") {
  CHECK(tight_irreducible(2).empty());
  auto ti3 = tight_irreducible(3);
  CHECK(ti3.size() == 8);
  // each consists of three edges and the two leftover antipodal vertices
  for (const auto& p : ti3)
    CHECK(spectrum(p).counts == std::map<int, long long>{{0, 2}, {1, 3}});
}

TEST_CASE("seed discovery fails at d0 = 2 and d0 = 3") {
  CHECK_THROWS_AS(find_seed(2), seed_not_found_error);
  try {
    find_seed(3);
    FAIL("find_seed(3) should not succeed");
  } catch (const seed_not_found_error& e) {
    CHECK(e.tight_irreducible == 8);
    CHECK(e.max_group == 2);  // every subcube lies in exactly two of the eight
  }
}

TEST_CASE("the fallback seed lives at d0 = 4") {
  SeedFamily seed = default_seed();
  CHECK(seed.d0 == 4);
  CHECK(seed.anchor.str() == "0000");
  CHECK(seed.members.size() == 108);
  for (const auto& p : seed.members) {
    CHECK(validate(p).ok());
    CHECK(p.contains_part(seed.anchor));
    CHECK(is_tight(p));
    CHECK(is_irreducible(p));
  }
  // deterministic
  SeedFamily again = default_seed();
  CHECK(again.anchor == seed.anchor);
  CHECK(again.members == seed.members);
}

TEST_CASE("d = 4 census fixture") {
  CHECK(tight_irreducible(4).size() == 824);
}

TEST_CASE("doubling rejects equal inputs and honors the part-count identity") {
  SeedFamily seed = default_seed();
  const Partition& b1 = seed.members[0];
  const Partition& b2 = seed.members[1];
  CHECK_THROWS_AS(double_partitions(b1, b1, seed.anchor), std::invalid_argument);

  std::vector<Subcube> common;
  std::set_intersection(b1.cubes.begin(), b1.cubes.end(), b2.cubes.begin(),
                        b2.cubes.end(), std::back_inserter(common));
  CHECK(!common.empty());

  auto [dbl, anchor5] = double_partitions(b1, b2, seed.anchor);
  CHECK(dbl.size() == b1.size() + b2.size() - common.size());
  CHECK(validate(dbl).ok());
  CHECK(is_tight(dbl));
  CHECK(is_irreducible(dbl));
  CHECK(is_irreducible(dbl) == oracle::is_irreducible_subfamily(dbl));
  CHECK(dbl.contains_part(anchor5));
  CHECK(anchor5.str() == "0000*");
}

TEST_CASE("two fully expanded levels obey x_{d+1} = x_d (x_d - 1)") {
  SeedFamily seed = default_seed();
  std::vector<Partition> level(seed.members.begin(), seed.members.begin() + 3);
  Subcube anchor = seed.anchor;
  int d_level = seed.d0;

  for (int step = 0; step < 2; ++step) {
    size_t expect = level.size() * (level.size() - 1);
    auto [next, next_anchor] = expand_level(level, anchor);
    ++d_level;
    CHECK(next.size() == expect);
    std::set<Partition> uniq(next.begin(), next.end());
    CHECK(uniq.size() == expect);  // the ordered-pair map is injective
    for (const auto& p : next) {
      CHECK(validate(p).ok());
      CHECK(p.contains_part(next_anchor));
      CHECK(is_tight(p));
      if (d_level <= 5) CHECK(is_irreducible(p));
      auto back = decode(encode(p), DimSet::full(d_level));
      REQUIRE(back);
      CHECK(*back == p);
    }
    level = std::move(next);
    anchor = next_anchor;
  }
  CHECK(d_level == 6);
  CHECK(level.size() == 30);
}

TEST_CASE("generate produces valid tight irreducible partitions at d = 5") {
  SeedFamily seed = default_seed();
  auto batch = generate(5, 100, seed);
  REQUIRE(batch.size() == 100);
  std::set<Partition> uniq(batch.begin(), batch.end());
  CHECK(uniq.size() == batch.size());
  for (const auto& p : batch) {
    CHECK(validate(p).ok());
    CHECK(is_tight(p));
    CHECK(is_irreducible(p));
  }
  CHECK(generate(5, 100, seed) == batch);  // deterministic
}

TEST_CASE("generate exhausts only when the level is genuinely smaller") {
  SeedFamily seed = default_seed();
  SeedFamily prefix;
  prefix.d0 = seed.d0;
  prefix.anchor = seed.anchor;
  prefix.members.assign(seed.members.begin(), seed.members.begin() + 3);
  // from three members the next level has exactly six
  CHECK(generate(5, 1000, prefix).size() == 6);
  CHECK(generate(6, 1000, prefix).size() == 30);
  CHECK_THROWS_AS(generate(4, 10, seed), std::invalid_argument);
  CHECK_THROWS_AS(generate(5, 0, seed), std::invalid_argument);
}

}  // TEST_SUITE
