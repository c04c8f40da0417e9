#include "qpart/cube.hpp"

#include <sstream>

namespace qpart {

std::vector<Vertex> enumerate_even(int d) {
  check_dim(d);
  std::vector<Vertex> out;
  out.reserve(size_t{1} << (d - 1));
  for (uint32_t b = 0; b <= full_mask(d); ++b)
    if (is_even(b)) out.emplace_back(b, d);
  return out;
}

std::vector<Vertex> enumerate_odd(int d) {
  check_dim(d);
  std::vector<Vertex> out;
  out.reserve(size_t{1} << (d - 1));
  for (uint32_t b = 0; b <= full_mask(d); ++b)
    if (!is_even(b)) out.emplace_back(b, d);
  return out;
}

std::vector<Vertex> vertices_of(const Subcube& c) {
  std::vector<Vertex> out;
  int k = c.dimension();
  out.reserve(size_t{1} << k);
  uint32_t fm = c.free_mask();
  for (uint32_t x = 0; x < (1u << k); ++x)
    out.emplace_back(c.fixed_vals | spread_bits(x, fm), c.dim_ambient);
  return out;
}

std::vector<Subcube> subcubes_through(Vertex v, DimSet dims) {
  if (dims.empty()) throw std::invalid_argument("empty dimension set");
  int d = v.dim;
  std::vector<Subcube> out;
  uint32_t full = full_mask(d);
  for (int k = 0; k <= d; ++k) {
    if (!dims.contains(k)) continue;
    // free-coordinate masks with exactly k bits, ascending
    if (k == 0) {
      out.emplace_back(full, v.bits, d);
      continue;
    }
    uint32_t fm = (1u << k) - 1;
    while (fm <= full) {
      out.emplace_back(full & ~fm, v.bits & ~fm, d);
      // Gosper's hack: next mask with the same popcount
      uint32_t c = fm & (~fm + 1);
      uint32_t r = fm + c;
      if (r > full) break;
      fm = (((r ^ fm) >> 2) / c) | r;
    }
  }
  return out;
}

std::string DimSet::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= kMaxDim; ++k) {
    if (!contains(k)) continue;
    if (!first) os << ',';
    os << k;
    first = false;
  }
  return os.str();
}

DimSet DimSet::parse(const std::string& s) {
  DimSet out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int k = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad dimension list: " + s);
    out.insert(k);
  }
  if (out.empty()) throw std::invalid_argument("empty dimension list: " + s);
  return out;
}

}  // namespace qpart
