#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

// Length-n sequence over {0, 1, ..., d}, n = 2^(d-1); entry i corresponds to
// the i-th even vertex in lexicographic order.
struct Encoding {
  int d = 0;
  std::vector<uint8_t> symbols;

  // "d=<int>;s1,s2,...,sn"
  std::string str() const;
  static Encoding parse(const std::string& s);

  friend bool operator==(const Encoding&, const Encoding&) = default;
  friend auto operator<=>(const Encoding&, const Encoding&) = default;
};

// For each even vertex v_i: if v_i lies in a part D of positive dimension
// and is a neighbor of the lexicographically first odd vertex u of D, the
// symbol is the coordinate in which v_i and u differ; otherwise 0.
Encoding encode(const Partition& p);

// Inverse map. For each odd vertex u, the set C(u) of coordinates j such
// that the even neighbor u^e_j carries symbol j determines a subcube with
// free coordinates exactly C(u); leftover vertices become 0-cubes. Returns
// nothing if the result does not validate, some anchor u is not the
// lexicographically first odd vertex of its cube, re-encoding does not
// reproduce the sequence, or a part dimension falls outside dims.
std::optional<Partition> decode(const Encoding& e, DimSet dims);

// Number of sequences accepted by decode; equals the partition count for
// the same dimension set. Enumerates all (d+1)^n sequences, so d <= 3.
uint64_t count_valid_encodings(int d, DimSet dims);

}  // namespace qpart
