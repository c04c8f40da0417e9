#include <doctest.h>

#include "qpart/codec.hpp"
#include "qpart/sampler.hpp"

using namespace qpart;

TEST_SUITE("sampler") {

TEST_CASE("alpha = 0 selects nothing") {
  SamplerConfig cfg;
  cfg.d = 10;
  cfg.alpha = 0.0;
  cfg.seed = 1;
  C4Family fam = sample_c4_family(cfg, 0);
  CHECK(fam.chosen == 0);
  CHECK(fam.kept.empty());
}

TEST_CASE("sampled family is disjoint 2-cubes") {
  SamplerConfig cfg;
  cfg.d = 10;
  cfg.alpha = 0.05;
  cfg.seed = 42;
  C4Family fam = sample_c4_family(cfg, 0);
  CHECK(fam.chosen >= fam.kept.size());
  CHECK(!fam.kept.empty());
  for (size_t i = 0; i < fam.kept.size(); ++i) {
    CHECK(fam.kept[i].dimension() == 2);
    CHECK(parity(lex_first_odd_vertex(fam.kept[i])) == Parity::odd);
    for (size_t j = i + 1; j < fam.kept.size(); ++j)
      CHECK(!fam.kept[i].overlaps(fam.kept[j]));
  }
}

TEST_CASE("empty family completes to a perfect matching") {
  for (int d : {3, 4, 6}) {
    SampleReport rep = complete_partition({}, d);
    CHECK(rep.zero_cubes == 0);
    CHECK(rep.matched == (uint64_t{1} << (d - 1)));
    CHECK(validate(rep.partition).ok());
    CHECK(rep.degree_outlier_fraction == 0.0);  // J contains d when beta = 0
  }
}

TEST_CASE("single 2-cube completions at d = 3, all positions") {
  size_t positions = 0;
  for (const Subcube& c : all_subcubes(3)) {
    if (c.dimension() != 2) continue;
    ++positions;
    SampleReport rep = complete_partition({c}, 3);
    CHECK(validate(rep.partition).ok());
    CHECK(rep.matched >= 1);
    CHECK(spectrum(rep.partition).within(DimSet::up_to(2)));
  }
  CHECK(positions == 6);
}

TEST_CASE("trial reports are reproducible and spectrum stays within {0,1,2}") {
  SamplerConfig cfg;
  cfg.d = 8;
  cfg.alpha = 0.03;
  cfg.seed = 7;
  for (int t = 0; t < 10; ++t) {
    SampleReport a = run_two_cubes_trial(cfg, t);
    SampleReport b = run_two_cubes_trial(cfg, t);
    CHECK(a.partition == b.partition);
    CHECK(a.chosen == b.chosen);
    CHECK(a.removal_fraction == b.removal_fraction);
    CHECK(a.degree_outlier_fraction == b.degree_outlier_fraction);
    CHECK(validate(a.partition).ok());
    CHECK(spectrum(a.partition).within(DimSet::up_to(2)));
    CHECK(a.matching_exact);
    CHECK(a.removal_fraction >= 0.0);
    CHECK(a.removal_fraction <= 1.0);
  }
}

TEST_CASE("sampled partitions survive the codec roundtrip") {
  SamplerConfig cfg;
  cfg.alpha = 0.02;
  cfg.seed = 11;
  for (int d : {6, 8, 10}) {
    cfg.d = d;
    SampleReport rep = run_two_cubes_trial(cfg, 0);
    auto back = decode(encode(rep.partition), DimSet::full(d));
    REQUIRE(back);
    CHECK(*back == rep.partition);
  }
}

TEST_CASE("degree statistics") {
  CHECK(degree_stats({}, 6, 0.0) == 0.0);
  SamplerConfig cfg;
  cfg.d = 10;
  cfg.alpha = 0.05;
  cfg.seed = 3;
  C4Family fam = sample_c4_family(cfg, 0);
  double beta = double(fam.kept.size()) / double(1 << (cfg.d - 1));
  double frac = degree_stats(fam.kept, cfg.d, beta);
  CHECK(frac >= 0.0);
  CHECK(frac <= 1.0);
}

TEST_CASE("mean removal fraction stays O(alpha) at modest scale") {
  SamplerConfig cfg;
  cfg.d = 10;
  cfg.alpha = 0.02;
  cfg.seed = 1234;
  double total = 0.0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) total += run_two_cubes_trial(cfg, t).removal_fraction;
  CHECK(total / trials <= 10.0 * cfg.alpha);
}

TEST_CASE("nibble with r = d covers in one cube") {
  SamplerConfig cfg;
  cfg.seed = 5;
  NibbleResult r = nibble_cover(6, 6, cfg);
  CHECK(r.coverage == 1.0);
  CHECK(r.cubes.size() == 1);
  CHECK(r.partition.size() == 1);
}

TEST_CASE("nibble covers at least 90% at d = 10, r = 2") {
  SamplerConfig cfg;
  cfg.seed = 42;
  NibbleResult r = nibble_cover(10, 2, cfg);
  CHECK(r.coverage >= 0.9);
  CHECK(validate(r.partition).ok());
  CHECK(spectrum(r.partition).within(DimSet::of({0, 2})));
  for (size_t i = 0; i < r.cubes.size(); ++i) {
    CHECK(r.cubes[i].dimension() == 2);
    for (size_t j = i + 1; j < r.cubes.size(); ++j)
      CHECK(!r.cubes[i].overlaps(r.cubes[j]));
  }
  NibbleResult again = nibble_cover(10, 2, cfg);
  CHECK(again.partition == r.partition);
  CHECK(again.coverage == r.coverage);
}

TEST_CASE("nibble partitions decode back to themselves") {
  SamplerConfig cfg;
  cfg.seed = 21;
  for (int r : {2, 3}) {
    NibbleResult nib = nibble_cover(9, r, cfg, r);
    auto back = decode(encode(nib.partition), DimSet::full(9));
    REQUIRE(back);
    CHECK(*back == nib.partition);
  }
}

TEST_CASE("config validation") {
  SamplerConfig cfg;
  cfg.d = 4;
  cfg.alpha = 0.7;
  CHECK_THROWS_AS(sample_c4_family(cfg, 0), std::invalid_argument);
  cfg.alpha = 0.1;
  CHECK_THROWS_AS(nibble_cover(4, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(nibble_cover(4, 5, cfg), std::invalid_argument);
  CHECK_THROWS_AS(complete_partition({Subcube::parse("0***")}, 4), std::invalid_argument);
}

}  // TEST_SUITE
