#pragma once

#include <iosfwd>

#include "qpart/counting.hpp"

namespace qpart {

struct VerifyOptions {
  int d_max = 3;
  bool long_run = false;  // adds the m(6) permanent and the f(5) count
  CountOptions count;
};

// Known-value table, bound sandwiches, codec roundtrips and count
// equalities, and the doubling-construction checks, as one pass/fail table.
VerifyReport verify_all(const VerifyOptions& opt);

void write_verify_csv(const VerifyReport& rep, std::ostream& os);

}  // namespace qpart
