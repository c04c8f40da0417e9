#include "qpart/codec.hpp"

#include <algorithm>
#include <sstream>

namespace qpart {

std::string Encoding::str() const {
  std::ostringstream os;
  os << "d=" << d << ";";
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (i) os << ',';
    os << int(symbols[i]);
  }
  return os.str();
}

Encoding Encoding::parse(const std::string& s) {
  auto semi = s.find(';');
  if (s.rfind("d=", 0) != 0 || semi == std::string::npos)
    throw std::invalid_argument("encoding must look like \"d=<int>;s1,s2,...\"");
  Encoding e;
  e.d = std::stoi(s.substr(2, semi - 2));
  check_dim(e.d);
  std::istringstream is(s.substr(semi + 1));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 0 || v > e.d)
      throw std::invalid_argument("encoding symbol out of range: " + tok);
    e.symbols.push_back(static_cast<uint8_t>(v));
  }
  size_t n = size_t{1} << (e.d - 1);
  if (e.symbols.size() != n)
    throw std::invalid_argument("encoding length must be 2^(d-1)");
  return e;
}

Encoding encode(const Partition& p) {
  ValidationReport r = validate(p);
  if (!r.ok()) throw std::invalid_argument("encode: invalid partition: " + r.message());
  const int d = p.d;
  Encoding e;
  e.d = d;
  e.symbols.reserve(size_t{1} << (d - 1));
  for (uint32_t v = 0; v <= full_mask(d); ++v) {
    if (!is_even(v)) continue;
    const Subcube* part = nullptr;
    for (const auto& c : p.cubes)
      if (c.contains_bits(v)) {
        part = &c;
        break;
      }
    uint8_t sym = 0;
    if (part->dimension() >= 1) {
      uint32_t u = lex_first_odd_vertex(*part).bits;
      uint32_t diff = v ^ u;
      if (std::popcount(diff) == 1)
        sym = static_cast<uint8_t>(d - std::countr_zero(diff));
    }
    e.symbols.push_back(sym);
  }
  return e;
}

std::optional<Partition> decode(const Encoding& e, DimSet dims) {
  const int d = e.d;
  check_dim(d);
  const size_t n = size_t{1} << (d - 1);
  if (e.symbols.size() != n)
    throw std::invalid_argument("decode: encoding length must be 2^(d-1)");
  for (uint8_t s : e.symbols)
    if (s > d) throw std::invalid_argument("decode: symbol out of range");
  if (dims.empty()) throw std::invalid_argument("decode: empty dimension set");

  // rank of each even vertex in the lexicographic enumeration
  std::vector<int32_t> even_rank(size_t{1} << d, -1);
  {
    int32_t idx = 0;
    for (uint32_t v = 0; v <= full_mask(d); ++v)
      if (is_even(v)) even_rank[v] = idx++;
  }

  std::vector<Subcube> cubes;
  std::vector<bool> covered(size_t{1} << d, false);
  for (uint32_t u = 0; u <= full_mask(d); ++u) {
    if (is_even(u)) continue;
    uint32_t free = 0;
    for (int j = 1; j <= d; ++j) {
      uint32_t b = coord_bit(d, j);
      if (e.symbols[static_cast<size_t>(even_rank[u ^ b])] == j) free |= b;
    }
    if (!free) continue;
    Subcube c(full_mask(d) & ~free, u & ~free, d);
    if (lex_first_odd_vertex(c).bits != u) return std::nullopt;
    // overlap with an earlier reconstructed cube means the sequence lied
    for (uint32_t x = 0; x < c.vertex_count(); ++x) {
      uint32_t v = c.fixed_vals | spread_bits(x, free);
      if (covered[v]) return std::nullopt;
      covered[v] = true;
    }
    cubes.push_back(c);
  }
  for (uint32_t v = 0; v <= full_mask(d); ++v)
    if (!covered[v]) cubes.emplace_back(full_mask(d), v, d);

  Partition p(d, std::move(cubes));
  if (!validate(p).ok()) return std::nullopt;
  if (!spectrum(p).within(dims)) return std::nullopt;
  if (encode(p) != e) return std::nullopt;
  return p;
}

uint64_t count_valid_encodings(int d, DimSet dims) {
  check_dim(d);
  if (d > 3)
    throw std::invalid_argument("count_valid_encodings enumerates (d+1)^n sequences; d <= 3 required");
  const size_t n = size_t{1} << (d - 1);
  Encoding e;
  e.d = d;
  e.symbols.assign(n, 0);
  uint64_t count = 0;
  // odometer over {0..d}^n
  while (true) {
    if (decode(e, dims)) ++count;
    size_t i = 0;
    while (i < n && e.symbols[i] == d) e.symbols[i++] = 0;
    if (i == n) break;
    e.symbols[i]++;
  }
  return count;
}

}  // namespace qpart
