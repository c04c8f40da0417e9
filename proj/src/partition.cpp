#include "qpart/partition.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qpart {

Partition::Partition(int dim, std::vector<Subcube> parts)
    : d(dim), cubes(std::move(parts)) {
  check_dim(d);
  for (const auto& c : cubes)
    if (c.dim_ambient != d)
      throw std::invalid_argument("subcube ambient dimension mismatch");
  std::sort(cubes.begin(), cubes.end());
}

bool Partition::contains_part(const Subcube& c) const {
  return std::binary_search(cubes.begin(), cubes.end(), c);
}

std::string ValidationReport::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ok:
      os << "ok";
      break;
    case Kind::ambient_mismatch:
      os << "cube " << cube_a << " has a different ambient dimension";
      break;
    case Kind::overlap:
      os << "cubes " << cube_a << " and " << cube_b << " overlap";
      break;
    case Kind::uncovered:
      os << "vertex " << vertex << " is uncovered";
      break;
    case Kind::mass_mismatch:
      os << "cube sizes do not sum to 2^d";
      break;
  }
  return os.str();
}

ValidationReport validate(const Partition& p) {
  ValidationReport r;
  for (size_t i = 0; i < p.cubes.size(); ++i) {
    if (p.cubes[i].dim_ambient != p.d) {
      r.kind = ValidationReport::Kind::ambient_mismatch;
      r.cube_a = static_cast<int>(i);
      return r;
    }
  }
  for (size_t i = 0; i < p.cubes.size(); ++i)
    for (size_t j = i + 1; j < p.cubes.size(); ++j)
      if (p.cubes[i].overlaps(p.cubes[j])) {
        r.kind = ValidationReport::Kind::overlap;
        r.cube_a = static_cast<int>(i);
        r.cube_b = static_cast<int>(j);
        return r;
      }
  uint64_t mass = 0;
  for (const auto& c : p.cubes) mass += c.vertex_count();
  uint64_t want = uint64_t{1} << p.d;
  if (mass == want) return r;
  if (mass < want) {
    // disjoint but undercovered: name the first uncovered vertex
    for (uint32_t v = 0; v <= full_mask(p.d); ++v) {
      bool hit = false;
      for (const auto& c : p.cubes)
        if (c.contains_bits(v)) {
          hit = true;
          break;
        }
      if (!hit) {
        r.kind = ValidationReport::Kind::uncovered;
        r.vertex = v;
        return r;
      }
    }
  }
  r.kind = ValidationReport::Kind::mass_mismatch;
  return r;
}

static void require_valid(const Partition& p, const char* what) {
  ValidationReport r = validate(p);
  if (!r.ok())
    throw std::invalid_argument(std::string(what) + ": invalid partition: " + r.message());
}

bool is_tight(const Partition& p) {
  require_valid(p, "is_tight");
  uint32_t acc = 0;
  for (const auto& c : p.cubes) acc |= c.fixed_mask;
  return acc == full_mask(p.d);
}

bool is_irreducible(const Partition& p) {
  require_valid(p, "is_irreducible");
  const size_t total = p.cubes.size();
  for (const Subcube& cand : all_subcubes(p.d)) {
    size_t members = 0;
    uint64_t mass = 0;
    for (const auto& part : p.cubes) {
      if (cand.contains_cube(part)) {
        ++members;
        mass += part.vertex_count();
      }
    }
    if (members >= 2 && members < total && mass == cand.vertex_count())
      return false;
  }
  return true;
}

DimSpectrum spectrum(const Partition& p) {
  require_valid(p, "spectrum");
  DimSpectrum s;
  for (const auto& c : p.cubes) s.counts[c.dimension()]++;
  return s;
}

void write_partition_text(const Partition& p, std::ostream& os) {
  os << "d=" << p.d << "\n";
  for (const auto& c : p.cubes) os << c.str() << "\n";
}

std::string partition_to_text(const Partition& p) {
  std::ostringstream os;
  write_partition_text(p, os);
  return os.str();
}

std::string partition_to_json(const Partition& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.cubes) arr.push_back(c.str());
  return arr.dump();
}

static Partition parse_partition_text(const std::string& content) {
  std::istringstream is(content);
  std::string line;
  int d = -1;
  std::vector<Subcube> cubes;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("d=", 0) == 0) {
      d = std::stoi(line.substr(2));
      continue;
    }
    cubes.push_back(Subcube::parse(line));
  }
  if (d < 0) {
    if (cubes.empty()) throw std::invalid_argument("empty partition file");
    d = cubes.front().dim_ambient;
  }
  return Partition(d, std::move(cubes));
}

static Partition parse_partition_json(const std::string& content) {
  nlohmann::json j = nlohmann::json::parse(content);
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("partition JSON must be a nonempty array of cube strings");
  std::vector<Subcube> cubes;
  for (const auto& e : j) cubes.push_back(Subcube::parse(e.get<std::string>()));
  int d = cubes.front().dim_ambient;
  return Partition(d, std::move(cubes));
}

Partition parse_partition(const std::string& content) {
  for (char c : content) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (c == '[') return parse_partition_json(content);
    break;
  }
  return parse_partition_text(content);
}

Partition read_partition_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_partition(ss.str());
}

void write_partition_file(const Partition& p, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  if (path.size() > 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    f << partition_to_json(p) << "\n";
  else
    write_partition_text(p, f);
}

}  // namespace qpart
