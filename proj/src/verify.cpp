#include "qpart/verify.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "qpart/bounds.hpp"
#include "qpart/codec.hpp"
#include "qpart/construct.hpp"

namespace qpart {

namespace {

constexpr double kLogTol = 1e-9;

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

double log2_big(const BigCount& v) { return std::log2(v.convert_to<double>()); }

void bounds_rows(VerifyReport& rep) {
  using namespace bounds;
  for (int d = 2; d <= 5; ++d) {
    int64_t n = int64_t{1} << (d - 1);
    double log2m = log2_big(*known_value(Quantity::perfect_matchings, d));
    SandwichBounds pm = prop_pm_bounds(d);
    bool ok = pm.lower.log2 <= log2m + kLogTol && log2m <= pm.upper.log2 + kLogTol;
    rep.add({"pm_sandwich", d,
             fmt6(pm.lower.log2) + "<=" + fmt6(log2m) + "<=" + fmt6(pm.upper.log2),
             "computed", ok ? "pass" : "fail", ok});

    double vdw = vdw_log({d, n}).log2;
    bool vok = vdw <= log2m + kLogTol;
    rep.add({"vdw_lower", d, fmt6(vdw) + "<=" + fmt6(log2m), "computed",
             vok ? "pass" : "fail", vok});

    double sch = schrijver_log({d, n}).log2;
    bool sok = sch <= log2m + kLogTol;
    rep.add({"schrijver_lower", d, fmt6(sch) + "<=" + fmt6(log2m), "computed",
             sok ? "pass" : "fail", sok});
  }
  for (int d = 1; d <= 5; ++d) {
    double log2f = log2_big(*known_value(Quantity::partition_count, d));
    double up = f_upper_log(d).log2;
    bool ok = log2f <= up + kLogTol;
    rep.add({"f_upper", d, fmt6(log2f) + "<=" + fmt6(up), "computed",
             ok ? "pass" : "fail", ok});
  }
}

void codec_rows(VerifyReport& rep, int d_max, const CountOptions& copt) {
  for (int d = 1; d <= std::min(d_max, 3); ++d) {
    uint64_t total = 0, good = 0;
    enumerate_partitions(d, DimSet::full(d), [&](const Partition& p) {
      ++total;
      auto back = decode(encode(p), DimSet::full(d));
      if (back && *back == p) ++good;
      return true;
    });
    bool ok = total == good;
    rep.add({"codec_roundtrip", d, std::to_string(good) + "/" + std::to_string(total),
             "computed", ok ? "pass" : "fail", ok});

    const DimSet sets[4] = {DimSet::of({1}), DimSet::of({0, 1}), DimSet::up_to(2),
                            DimSet::full(d)};
    for (const auto& dims : sets) {
      BigCount a = count_partitions(d, dims, copt);
      BigCount b(count_valid_encodings(d, dims));
      bool eq = a == b;
      std::string label = dims.str();
      for (auto& c : label)
        if (c == ',') c = '+';
      rep.add({"codec_count{" + label + "}", d, a.str() + "==" + b.str(),
               "computed", eq ? "pass" : "fail", eq});
    }
  }
}

void construct_rows(VerifyReport& rep) {
  SeedFamily seed = default_seed();
  rep.add({"construct_seed", seed.d0,
           "anchor=" + seed.anchor.str() + ";members=" + std::to_string(seed.members.size()),
           "computed", seed.members.size() >= 3 ? "pass" : "fail",
           seed.members.size() >= 3});

  // x_{d+1} = x_d (x_d - 1), two levels of full expansion from a prefix
  // subfamily small enough to expand (the full level-5 family is 108*107).
  std::vector<Partition> level(seed.members.begin(),
                               seed.members.begin() + std::min<size_t>(7, seed.members.size()));
  Subcube anchor = seed.anchor;
  int d_level = seed.d0;
  for (int step = 0; step < 2; ++step) {
    size_t expect = level.size() * (level.size() - 1);
    auto [next, next_anchor] = expand_level(level, anchor);
    ++d_level;
    std::set<Partition> uniq(next.begin(), next.end());
    bool ok = next.size() == expect && uniq.size() == expect;
    for (const auto& p : next) {
      if (!ok) break;
      ok = validate(p).ok() && p.contains_part(next_anchor) && is_tight(p) &&
           (d_level > 5 || is_irreducible(p));
    }
    rep.add({"construct_recurrence", d_level,
             std::to_string(next.size()) + "=" + std::to_string(level.size()) + "*" +
                 std::to_string(level.size() - 1),
             "computed", ok ? "pass" : "fail", ok});
    level = std::move(next);
    anchor = next_anchor;
  }

  if (seed.d0 + 1 <= 5) {
    auto batch = generate(5, 100, seed);
    size_t good = 0;
    for (const auto& p : batch)
      if (validate(p).ok() && is_tight(p) && is_irreducible(p) ) ++good;
    bool ok = batch.size() == 100 && good == batch.size();
    rep.add({"construct_d5_batch", 5, std::to_string(good) + "/" + std::to_string(batch.size()),
             "computed", ok ? "pass" : "fail", ok});
  }
}

void long_rows(VerifyReport& rep, const CountOptions& copt) {
  {
    std::cerr << "[long] computing m(6) by Ryser inclusion-exclusion (2^32 subsets)...\n";
    BigCount m6 = count_pm_permanent(6, copt);
    BigCount want = *known_value(Quantity::perfect_matchings, 6);
    bool ok = m6 == want;
    rep.add({"m", 6, m6.str(), "paper", ok ? "pass" : "fail", ok});
  }
  {
    std::cerr << "[long] counting f(5) with the memoized backtracker...\n";
    CountOptions opt = copt;
    if (opt.node_limit == 0) opt.node_limit = uint64_t{1} << 36;
    try {
      BigCount f5 = count_partitions(5, DimSet::full(5), opt);
      BigCount want = *known_value(Quantity::partition_count, 5);
      bool ok = f5 == want;
      rep.add({"f", 5, f5.str(), "paper", ok ? "pass" : "fail", ok});
    } catch (const resource_limit_error&) {
      rep.add({"f", 5, "resource limit", "paper", "skipped", true});
    }
  }
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& opt) {
  VerifyReport rep = verify_known(opt.d_max, opt.count);
  bounds_rows(rep);
  codec_rows(rep, opt.d_max, opt.count);
  construct_rows(rep);
  if (opt.long_run) long_rows(rep, opt.count);
  return rep;
}

void write_verify_csv(const VerifyReport& rep, std::ostream& os) {
  os << "quantity,d,value,source,status\n";
  for (const auto& r : rep.rows)
    os << r.quantity << ',' << r.d << ',' << r.value << ',' << r.source << ','
       << r.status << "\n";
}

}  // namespace qpart
