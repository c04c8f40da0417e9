#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpart/cube.hpp"

namespace qpart {

// Ordered collection of pairwise disjoint subcubes covering {0,1}^d.
// Cubes are kept in canonical (fixed_mask, fixed_vals) order so that equal
// partitions compare equal and generated sets can be deduplicated.
struct Partition {
  int d = 0;
  std::vector<Subcube> cubes;

  Partition() = default;
  Partition(int dim, std::vector<Subcube> parts);

  size_t size() const { return cubes.size(); }
  bool contains_part(const Subcube& c) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.cubes <=> b.cubes;
  }
};

struct ValidationReport {
  enum class Kind { ok, ambient_mismatch, overlap, uncovered, mass_mismatch };
  Kind kind = Kind::ok;
  int cube_a = -1;            // offending cube indices for overlap
  int cube_b = -1;
  uint32_t vertex = 0;        // first uncovered vertex, when applicable
  bool ok() const { return kind == Kind::ok; }
  std::string message() const;
};

// Disjointness is checked pairwise; with the cube sizes summing to 2^d,
// disjointness already implies covering, so the vertex scan only runs to
// name a witness for undercovered inputs.
ValidationReport validate(const Partition& p);

// every coordinate fixed in at least one part
bool is_tight(const Partition& p);

// True iff no subcube C of Q_d is partitioned by a proper subfamily of
// size >= 2. Scans all 3^d candidate subcubes; a subfamily whose union is a
// subcube C is necessarily the set of parts contained in C, so the scan is
// equivalent to the subfamily definition.
bool is_irreducible(const Partition& p);

struct DimSpectrum {
  std::map<int, long long> counts;

  bool within(DimSet dims) const {
    for (auto& [k, c] : counts)
      if (c > 0 && !dims.contains(k)) return false;
    return true;
  }
  friend bool operator==(const DimSpectrum&, const DimSpectrum&) = default;
};

DimSpectrum spectrum(const Partition& p);

// ---- file formats ----------------------------------------------------
//
// Text: header line "d=<int>", then one {0,1,*} string per line.
// JSON: array of cube strings, d inferred from the string length.

void write_partition_text(const Partition& p, std::ostream& os);
std::string partition_to_text(const Partition& p);
std::string partition_to_json(const Partition& p);

// Auto-detects JSON (leading '[') vs text.
Partition parse_partition(const std::string& content);
Partition read_partition_file(const std::string& path);
void write_partition_file(const Partition& p, const std::string& path);

}  // namespace qpart
