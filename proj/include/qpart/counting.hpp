#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpart/kernels.hpp"
#include "qpart/partition.hpp"

namespace qpart {

// Exact nonnegative counts. Engines accumulate in fixed widths that are
// provably sufficient for their supported ranges (checked), and convert at
// this boundary; values like m(7) exceed 64 bits.
using BigCount = boost::multiprecision::cpp_int;

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CountOptions {
  int threads = 1;         // top-level branch split; engaged at d == 5
  int memo_bits = 22;      // lossy memo capacity (log2 slots) at d == 5
  uint64_t node_limit = 0; // 0 = unlimited; else resource_limit_error
  kernels::Kernel kernel = kernels::Kernel::auto_pick;
};

// Exact f_dims(d): number of partitions of Q_d into subcubes with all
// dimensions in dims. Backtracks on the lexicographically smallest
// uncovered vertex with a memo keyed by the covered-vertex bitmask (sound
// because the branch vertex is a function of the covered set). d <= 5;
// the d = 5 memo is lossy (eviction only costs recomputation, never
// correctness). f(0) = 1 handled as a special case.
BigCount count_partitions(int d, DimSet dims, const CountOptions& opt = {});

// Emits every partition of Q_d with dimensions in dims, in the
// deterministic order of the backtracker. Callback returns false to stop.
// d <= 4 (enumeration at d = 5 would walk 7.1e10 partitions).
void enumerate_partitions(int d, DimSet dims,
                          const std::function<bool(const Partition&)>& cb);

// Exact m(d) via Ryser inclusion-exclusion over the n x n biadjacency
// matrix of the even/odd classes, n = 2^(d-1). 1 <= d <= 6 (d = 6 walks
// 2^32 subsets).
BigCount count_pm_permanent(int d, const CountOptions& opt = {});

// ---- known values ------------------------------------------------------

enum class Quantity { partition_count, perfect_matchings };

// Published values: f(d) for d = 0..5 (OEIS A018926) and m(d) for d = 1..7
// (Graham-Harary; Ostergard-Pettersson).
std::optional<BigCount> known_value(Quantity q, int d);

// ---- verification ------------------------------------------------------

struct VerifyRow {
  std::string quantity;
  int d = 0;
  std::string value;
  std::string source;  // "paper" or "computed"
  std::string status;  // "pass", "fail", "skipped"
  bool pass = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool pass = true;

  void add(VerifyRow row) {
    pass = pass && (row.pass || row.status == "skipped");
    rows.push_back(std::move(row));
  }
};

// Recomputes m, m', f_{<=2}, f for d <= d_max, compares against the known
// values where present (m via both engines), and checks the chain
// m(d) <= m'(d) <= f_{<=2}(d) <= f(d). d_max <= 4.
VerifyReport verify_known(int d_max, const CountOptions& opt = {});

}  // namespace qpart
