#include "qpart/construct.hpp"

#include <algorithm>
#include <map>

#include "qpart/counting.hpp"

namespace qpart {

SeedFamily find_seed(int d0) {
  if (d0 < 2 || d0 > 4) throw std::invalid_argument("find_seed supports 2 <= d0 <= 4");
  std::vector<Partition> ti;
  enumerate_partitions(d0, DimSet::full(d0), [&](const Partition& p) {
    if (is_tight(p) && is_irreducible(p)) ti.push_back(p);
    return true;
  });
  std::map<Subcube, std::vector<size_t>> groups;
  for (size_t i = 0; i < ti.size(); ++i)
    for (const auto& c : ti[i].cubes) groups[c].push_back(i);

  size_t best = 0;
  for (const auto& [c, idx] : groups) best = std::max(best, idx.size());
  if (best < 3)
    throw seed_not_found_error(
        d0, ti.size(), best,
        "Q_" + std::to_string(d0) + " has " + std::to_string(ti.size()) +
            " tight irreducible partitions but no subcube shared by 3 of them "
            "(largest family: " + std::to_string(best) + ")");

  SeedFamily out;
  out.d0 = d0;
  for (const auto& [c, idx] : groups) {
    if (idx.size() == best) {  // std::map order makes this the lex-smallest
      out.anchor = c;
      for (size_t i : idx) out.members.push_back(ti[i]);
      break;
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

SeedFamily default_seed() {
  try {
    return find_seed(3);
  } catch (const seed_not_found_error&) {
    return find_seed(4);
  }
}

namespace {

Subcube shift_fix(const Subcube& c, uint32_t last_bit_value) {
  return Subcube((c.fixed_mask << 1) | 1u, (c.fixed_vals << 1) | last_bit_value,
                 c.dim_ambient + 1);
}

Subcube shift_free(const Subcube& c) {
  return Subcube(c.fixed_mask << 1, c.fixed_vals << 1, c.dim_ambient + 1);
}

}  // namespace

std::pair<Partition, Subcube> double_partitions(const Partition& b1,
                                                const Partition& b2,
                                                const Subcube& anchor) {
  if (b1.d != b2.d) throw std::invalid_argument("double_partitions: dimension mismatch");
  if (b1 == b2) throw std::invalid_argument("double_partitions: the two partitions must differ");
  if (!b1.contains_part(anchor) || !b2.contains_part(anchor))
    throw std::invalid_argument("double_partitions: both partitions must contain the anchor");
  if (!validate(b1).ok() || !validate(b2).ok())
    throw std::invalid_argument("double_partitions: invalid input partition");

  std::vector<Subcube> common;
  std::set_intersection(b1.cubes.begin(), b1.cubes.end(), b2.cubes.begin(),
                        b2.cubes.end(), std::back_inserter(common));

  std::vector<Subcube> out;
  out.reserve(b1.size() + b2.size() - common.size());
  for (const auto& c : b1.cubes)
    if (!std::binary_search(common.begin(), common.end(), c)) out.push_back(shift_fix(c, 0));
  for (const auto& c : b2.cubes)
    if (!std::binary_search(common.begin(), common.end(), c)) out.push_back(shift_fix(c, 1));
  for (const auto& c : common) out.push_back(shift_free(c));

  return {Partition(b1.d + 1, std::move(out)), shift_free(anchor)};
}

std::pair<std::vector<Partition>, Subcube> expand_level(
    const std::vector<Partition>& members, const Subcube& anchor) {
  if (members.size() < 2)
    throw std::invalid_argument("expand_level needs at least two members");
  std::vector<Partition> next;
  next.reserve(members.size() * (members.size() - 1));
  Subcube next_anchor = shift_free(anchor);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      next.push_back(double_partitions(members[i], members[j], anchor).first);
    }
  return {std::move(next), next_anchor};
}

std::vector<Partition> generate(int d_target, size_t limit, const SeedFamily& seed) {
  if (limit < 1) throw std::invalid_argument("generate: limit must be >= 1");
  if (d_target <= seed.d0)
    throw std::invalid_argument("generate: d_target must exceed the seed dimension");

  std::vector<Partition> level = seed.members;
  Subcube anchor = seed.anchor;
  for (int d = seed.d0 + 1; d <= d_target; ++d) {
    size_t need = (d == d_target) ? limit : limit + 1;
    std::vector<Partition> next;
    for (size_t i = 0; i < level.size() && next.size() < need; ++i)
      for (size_t j = 0; j < level.size() && next.size() < need; ++j) {
        if (i == j) continue;
        next.push_back(double_partitions(level[i], level[j], anchor).first);
      }
    anchor = shift_free(anchor);
    level = std::move(next);
  }
  if (level.size() > limit) level.resize(limit);
  return level;
}

}  // namespace qpart
