#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Bit-level representation of hypercube vertices and subcubes of Q_d.
//
// Convention: coordinate i (1-based, 1 <= i <= d) is stored in bit (d - i),
// i.e. coordinate 1 is the most significant of the d used bits. With this
// placement, lexicographic order on coordinate tuples (x_1, ..., x_d)
// coincides with numeric order of the bit words.

namespace qpart {

inline constexpr int kMaxDim = 20;

inline void check_dim(int d) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("dimension d must be in [1, " +
                                std::to_string(kMaxDim) + "], got " +
                                std::to_string(d));
}

// bit position of coordinate i in ambient dimension d
inline constexpr uint32_t coord_bit(int d, int i) {
  return 1u << (d - i);
}

inline constexpr uint32_t full_mask(int d) {
  return (d >= 32) ? ~0u : ((1u << d) - 1);
}

enum class Parity { even, odd };

struct Vertex {
  uint32_t bits = 0;
  int dim = 0;

  Vertex() = default;
  Vertex(uint32_t b, int d) : bits(b), dim(d) {
    check_dim(d);
    if (b & ~full_mask(d))
      throw std::invalid_argument("vertex bits outside the low d positions");
  }

  // value of coordinate i (1-based)
  int coord(int i) const { return (bits >> (dim - i)) & 1u; }

  std::string str() const {
    std::string s(static_cast<size_t>(dim), '0');
    for (int i = 1; i <= dim; ++i)
      if (bits & coord_bit(dim, i)) s[static_cast<size_t>(i - 1)] = '1';
    return s;
  }

  static Vertex parse(const std::string& s) {
    int d = static_cast<int>(s.size());
    check_dim(d);
    uint32_t b = 0;
    for (int i = 1; i <= d; ++i) {
      char c = s[static_cast<size_t>(i - 1)];
      if (c == '1')
        b |= coord_bit(d, i);
      else if (c != '0')
        throw std::invalid_argument("vertex string must be over {0,1}: " + s);
    }
    return Vertex(b, d);
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

inline Parity parity(Vertex v) {
  return (std::popcount(v.bits) & 1) ? Parity::odd : Parity::even;
}

inline bool is_even(uint32_t bits) { return (std::popcount(bits) & 1) == 0; }

// All n = 2^(d-1) even vertices of Q_d in lexicographic (= numeric) order.
std::vector<Vertex> enumerate_even(int d);
std::vector<Vertex> enumerate_odd(int d);

// A subcube given by (fixed_mask, fixed_vals): vertex v belongs to the cube
// iff (v & fixed_mask) == fixed_vals. Dimension = d - popcount(fixed_mask).
struct Subcube {
  uint32_t fixed_mask = 0;
  uint32_t fixed_vals = 0;
  int dim_ambient = 0;

  Subcube() = default;
  Subcube(uint32_t mask, uint32_t vals, int d)
      : fixed_mask(mask), fixed_vals(vals), dim_ambient(d) {
    check_dim(d);
    if (mask & ~full_mask(d))
      throw std::invalid_argument("fixed_mask outside the low d positions");
    if (vals & ~mask)
      throw std::invalid_argument("fixed_vals set off the fixed mask");
  }

  int dimension() const { return dim_ambient - std::popcount(fixed_mask); }
  uint32_t free_mask() const { return full_mask(dim_ambient) & ~fixed_mask; }
  uint64_t vertex_count() const { return uint64_t{1} << dimension(); }

  bool contains(Vertex v) const {
    if (v.dim != dim_ambient)
      throw std::invalid_argument("vertex/subcube dimension mismatch");
    return (v.bits & fixed_mask) == fixed_vals;
  }
  bool contains_bits(uint32_t bits) const {
    return (bits & fixed_mask) == fixed_vals;
  }

  // c is a (non-strict) subset of this cube
  bool contains_cube(const Subcube& c) const {
    return (c.fixed_mask & fixed_mask) == fixed_mask &&
           ((c.fixed_vals ^ fixed_vals) & fixed_mask) == 0;
  }

  bool overlaps(const Subcube& c) const {
    return ((fixed_vals ^ c.fixed_vals) & fixed_mask & c.fixed_mask) == 0;
  }

  std::string str() const {
    std::string s(static_cast<size_t>(dim_ambient), '*');
    for (int i = 1; i <= dim_ambient; ++i) {
      uint32_t b = coord_bit(dim_ambient, i);
      if (fixed_mask & b) s[static_cast<size_t>(i - 1)] = (fixed_vals & b) ? '1' : '0';
    }
    return s;
  }

  static Subcube parse(const std::string& s) {
    int d = static_cast<int>(s.size());
    check_dim(d);
    uint32_t mask = 0, vals = 0;
    for (int i = 1; i <= d; ++i) {
      char c = s[static_cast<size_t>(i - 1)];
      uint32_t b = coord_bit(d, i);
      if (c == '0') {
        mask |= b;
      } else if (c == '1') {
        mask |= b;
        vals |= b;
      } else if (c != '*') {
        throw std::invalid_argument("subcube string must be over {0,1,*}: " + s);
      }
    }
    return Subcube(mask, vals, d);
  }

  friend bool operator==(const Subcube&, const Subcube&) = default;
  // canonical order: (fixed_mask, fixed_vals) numeric
  friend auto operator<=>(const Subcube& a, const Subcube& b) {
    if (auto c = a.fixed_mask <=> b.fixed_mask; c != 0) return c;
    if (auto c = a.fixed_vals <=> b.fixed_vals; c != 0) return c;
    return a.dim_ambient <=> b.dim_ambient;
  }
};

// Deposits the low bits of x into the set positions of free_mask, lowest bit
// of x going to the lowest set position. Monotone in x, so enumerating
// x = 0..2^k-1 yields the cube's vertices in lexicographic order.
inline uint32_t spread_bits(uint32_t x, uint32_t free_mask) {
  uint32_t out = 0;
  while (free_mask) {
    uint32_t b = free_mask & (~free_mask + 1);
    if (x & 1u) out |= b;
    x >>= 1;
    free_mask ^= b;
  }
  return out;
}

// Vertices of c in lexicographic order.
std::vector<Vertex> vertices_of(const Subcube& c);

// Lexicographically first odd vertex of a subcube of dimension >= 1.
// The smallest vertex is fixed_vals itself; flipping the lowest free bit
// toggles parity, so the answer is O(1).
inline Vertex lex_first_odd_vertex(const Subcube& c) {
  if (c.dimension() < 1)
    throw std::invalid_argument("lex_first_odd_vertex requires dimension >= 1");
  uint32_t base = c.fixed_vals;
  if (!is_even(base)) return Vertex(base, c.dim_ambient);
  uint32_t fm = c.free_mask();
  return Vertex(base | (fm & (~fm + 1)), c.dim_ambient);
}

// Set of allowed part dimensions S, a bitmask over {0, 1, ..., d}.
struct DimSet {
  uint32_t mask = 0;

  static DimSet full(int d) { return DimSet{(2u << d) - 1}; }
  static DimSet of(std::initializer_list<int> dims) {
    DimSet s;
    for (int k : dims) s.insert(k);
    return s;
  }
  static DimSet up_to(int k) { return DimSet{(2u << k) - 1}; }

  void insert(int k) {
    if (k < 0 || k > kMaxDim) throw std::invalid_argument("dimension out of range");
    mask |= 1u << k;
  }
  bool contains(int k) const { return k >= 0 && k <= kMaxDim && (mask >> k) & 1u; }
  bool empty() const { return mask == 0; }
  int max_dim() const { return mask ? 31 - std::countl_zero(mask) : -1; }
  bool subset_of(DimSet o) const { return (mask & ~o.mask) == 0; }

  std::string str() const;
  // comma-separated list, e.g. "0,1,2"
  static DimSet parse(const std::string& s);

  friend bool operator==(const DimSet&, const DimSet&) = default;
};

// Every subcube containing v whose dimension lies in dims; grouped by
// dimension ascending, combinations of free coordinates in lexicographic
// order of the free-position mask.
std::vector<Subcube> subcubes_through(Vertex v, DimSet dims);

// Lazy range over all 3^d subcubes of Q_d (fixed_mask ascending, fixed_vals
// ascending within each mask).
class AllSubcubes {
 public:
  explicit AllSubcubes(int d) : d_(d) { check_dim(d); }

  class iterator {
   public:
    iterator() = default;
    iterator(int d, uint32_t mask, uint32_t vals, bool end)
        : d_(d), mask_(mask), vals_(vals), end_(end) {}

    Subcube operator*() const { return Subcube(mask_, vals_, d_); }

    iterator& operator++() {
      // next submask of mask_ in increasing order; wrap advances the mask
      vals_ = (vals_ - mask_) & mask_;
      if (vals_ == 0) {
        if (mask_ == full_mask(d_)) {
          end_ = true;
        } else {
          ++mask_;
        }
      }
      return *this;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.end_ == b.end_ && (a.end_ || (a.mask_ == b.mask_ && a.vals_ == b.vals_));
    }

   private:
    int d_ = 0;
    uint32_t mask_ = 0;
    uint32_t vals_ = 0;
    bool end_ = true;
  };

  iterator begin() const { return iterator(d_, 0, 0, false); }
  iterator end() const { return iterator(d_, 0, 0, true); }

 private:
  int d_;
};

inline AllSubcubes all_subcubes(int d) { return AllSubcubes(d); }

}  // namespace qpart
