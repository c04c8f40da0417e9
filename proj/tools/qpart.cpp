// qpart: exact counts, bounds, codecs, constructions and samplers for
// subcube partitions of the hypercube Q_d.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpart/bounds.hpp"
#include "qpart/codec.hpp"
#include "qpart/construct.hpp"
#include "qpart/counting.hpp"
#include "qpart/sampler.hpp"
#include "qpart/verify.hpp"

namespace {

using namespace qpart;

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// multiple partitions in one text file: records separated by blank lines
std::vector<Partition> read_partition_records(const std::string& path) {
  std::string content = read_file(path);
  for (char c : content) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (c == '[') return {parse_partition(content)};
    break;
  }
  std::vector<Partition> out;
  std::istringstream is(content);
  std::string line, record;
  auto flush = [&] {
    bool blank = true;
    for (char c : record)
      if (!isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_partition(record));
    record.clear();
  };
  while (std::getline(is, line)) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank)
      flush();
    else
      record += line + "\n";
  }
  flush();
  if (out.empty()) throw std::runtime_error("no partitions in " + path);
  return out;
}

kernels::Kernel parse_kernel(const std::string& s) {
  if (s == "auto") return kernels::Kernel::auto_pick;
  if (s == "scalar") return kernels::Kernel::scalar;
  if (s == "avx2") return kernels::Kernel::avx2;
  throw CLI::ValidationError("--kernel must be auto, scalar or avx2");
}

int cmd_count(int d, const std::string& dims_str, const CountOptions& copt) {
  DimSet dims = dims_str.empty() ? DimSet::full(std::max(d, 1)) : DimSet::parse(dims_str);
  std::cout << count_partitions(d, dims, copt).str() << "\n";
  return 0;
}

int cmd_matchings(int d, const std::string& engine, const CountOptions& copt) {
  if (engine == "permanent") {
    std::cout << count_pm_permanent(d, copt).str() << "\n";
    return 0;
  }
  if (engine == "backtrack") {
    std::cout << count_partitions(d, DimSet::of({1}), copt).str() << "\n";
    return 0;
  }
  BigCount a = count_partitions(d, DimSet::of({1}), copt);
  BigCount b = count_pm_permanent(d, copt);
  if (a != b) {
    std::cerr << "engine mismatch: backtrack=" << a.str() << " permanent=" << b.str() << "\n";
    return 1;
  }
  std::cout << a.str() << "\n";
  return 0;
}

int cmd_bounds(int d, const CountOptions& copt) {
  using namespace bounds;
  const int64_t n = int64_t{1} << (d - 1);
  std::cout << "quantity,d,log2_value,exact_log2,note\n";
  auto row = [&](const std::string& q, double v, const std::string& exact,
                 const std::string& note) {
    std::cout << q << ',' << d << ',' << fmt6(v) << ',' << exact << ',' << note << "\n";
  };
  auto exact_log = [](std::optional<BigCount> v) {
    return v ? fmt6(std::log2(v->convert_to<double>())) : std::string();
  };

  std::string log2m = exact_log(known_value(Quantity::perfect_matchings, d));
  std::string log2f = exact_log(known_value(Quantity::partition_count, d));

  row("log_N", log_N(d).log2, "", "(d/e)^n");
  SandwichBounds pm = prop_pm_bounds(d);
  row("pm_lower", pm.lower.log2, log2m, "e^(n/2d)*N");
  row("pm_upper_bregman_minc", pm.upper.log2, log2m, "(d!)^(n/d)");
  row("vdw_lower", vdw_log({d, n}).log2, log2m, "b!/b^b*a^b");
  if (d >= 2) row("schrijver_lower", schrijver_log({d, n}).log2, log2m, "");
  row("f_upper", f_upper_log(d).log2, log2f, "(d+1)^n");
  row("approx_upper_no_2_cubes", approx_upper_log(d).log2, "", "exp(20n/d^(1/4))*N");
  for (int r = 2; r <= std::min(d, 4); ++r) {
    SandwichBounds fr = f0r_bounds_log(d, r);
    row("f0r_lower(r=" + std::to_string(r) + ")", fr.lower.log2, "", "N^(r/2^(r-1))");
    row("f0r_upper_sum(r=" + std::to_string(r) + ")", fr.upper.log2, "", "sum C(n,j)d^j");
  }
  if (d <= 4) {
    BigCount m = count_pm_permanent(d, copt);
    BigCount mp = count_partitions(d, DimSet::of({0, 1}), copt);
    double e = matching_envelope_exponent(d, std::log2(m.convert_to<double>()),
                                          std::log2(mp.convert_to<double>()));
    row("matching_envelope_exponent", e, "", "(log2 m'-log2 m)*sqrt(d)/n; report only");
  }
  return 0;
}

int cmd_encode(const std::string& in) {
  Partition p = read_partition_file(in);
  std::cout << encode(p).str() << "\n";
  return 0;
}

int cmd_decode(const std::string& in, const std::string& dims_str, const std::string& out) {
  std::string content = read_file(in);
  // strip trailing whitespace
  while (!content.empty() && isspace(static_cast<unsigned char>(content.back())))
    content.pop_back();
  Encoding e = Encoding::parse(content);
  DimSet dims = dims_str.empty() ? DimSet::full(e.d) : DimSet::parse(dims_str);
  auto p = decode(e, dims);
  if (!p) {
    std::cerr << "not a valid encoding\n";
    return 1;
  }
  if (out.empty())
    std::cout << partition_to_text(*p);
  else
    write_partition_file(*p, out);
  return 0;
}

int cmd_irreducible_gen(int d, int limit, const std::string& out) {
  SeedFamily seed = default_seed();
  std::cerr << "seed: d0=" << seed.d0 << " anchor=" << seed.anchor.str() << " members="
            << seed.members.size() << "\n";
  auto batch = generate(d, static_cast<size_t>(limit), seed);
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out + " for writing");
  for (size_t i = 0; i < batch.size(); ++i) {
    if (i) f << "\n";
    write_partition_text(batch[i], f);
  }
  std::cerr << "wrote " << batch.size() << " partitions to " << out << "\n";
  return 0;
}

int cmd_irreducible_check(const std::string& in) {
  auto parts = read_partition_records(in);
  bool all_ok = true;
  for (size_t i = 0; i < parts.size(); ++i) {
    ValidationReport v = validate(parts[i]);
    bool tight = false, irred = false;
    if (v.ok()) {
      tight = is_tight(parts[i]);
      irred = is_irreducible(parts[i]);
    }
    std::cout << "partition " << i << ": valid=" << (v.ok() ? "yes" : v.message())
              << " tight=" << (tight ? "yes" : "no")
              << " irreducible=" << (irred ? "yes" : "no") << "\n";
    all_ok = all_ok && v.ok() && tight && irred;
  }
  return all_ok ? 0 : 1;
}

int cmd_sample_two_cubes(const SamplerConfig& cfg, const std::string& emit) {
  std::cout << "trial,chosen,kept,removal_fraction,matched,zero_cubes,"
               "degree_outlier_fraction,matching_exact\n";
  for (int t = 0; t < cfg.trials; ++t) {
    SampleReport r = run_two_cubes_trial(cfg, t);
    std::cout << t << ',' << r.chosen << ',' << r.kept << ',' << fmt6(r.removal_fraction)
              << ',' << r.matched << ',' << r.zero_cubes << ','
              << fmt6(r.degree_outlier_fraction) << ',' << (r.matching_exact ? 1 : 0)
              << "\n";
    if (!emit.empty()) {
      std::filesystem::create_directories(emit);
      write_partition_file(r.partition, emit + "/trial_" + std::to_string(t) + ".txt");
    }
  }
  return 0;
}

int cmd_sample_nibble(const SamplerConfig& cfg, const std::string& emit) {
  std::cout << "trial,cubes,coverage,parts,zero_cubes\n";
  for (int t = 0; t < cfg.trials; ++t) {
    NibbleResult r = nibble_cover(cfg.d, cfg.r, cfg, t);
    uint64_t zero = r.partition.size() - r.cubes.size();
    std::cout << t << ',' << r.cubes.size() << ',' << fmt6(r.coverage) << ','
              << r.partition.size() << ',' << zero << "\n";
    if (!emit.empty()) {
      std::filesystem::create_directories(emit);
      write_partition_file(r.partition, emit + "/trial_" + std::to_string(t) + ".txt");
    }
  }
  return 0;
}

int cmd_verify(int d_max, bool long_run, const CountOptions& copt) {
  VerifyOptions opt;
  opt.d_max = d_max;
  opt.long_run = long_run;
  opt.count = copt;
  VerifyReport rep = verify_all(opt);
  write_verify_csv(rep, std::cout);
  if (!rep.pass) {
    std::cerr << "verification FAILED\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of subcube partitions of the hypercube"};
  app.require_subcommand(1);
  app.fallthrough();

  CountOptions copt;
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware)");

  // count
  int d = 3, limit = 100, r = 2, d_max = 3;
  std::string dims_str, engine = "both", kernel = "auto", in, out, emit;
  bool long_run = false;

  auto* count = app.add_subcommand("count", "exact number of subcube partitions f_S(d)");
  count->add_option("--d", d, "dimension")->required();
  count->add_option("--dims", dims_str, "allowed part dimensions, e.g. 0,1,2 (default all)");
  count->add_option("--memo-bits", copt.memo_bits, "log2 memo slots at d=5");
  count->add_option("--node-limit", copt.node_limit, "abort after this many search nodes");

  auto* match = app.add_subcommand("matchings", "perfect matchings m(d)");
  match->add_option("--d", d, "dimension")->required();
  match->add_option("--engine", engine, "both|backtrack|permanent");
  match->add_option("--kernel", kernel, "auto|scalar|avx2");

  auto* bnd = app.add_subcommand("bounds", "bound evaluators in log2 space");
  bnd->add_option("--d", d, "dimension")->required();

  auto* enc = app.add_subcommand("encode", "partition file -> sequence encoding");
  enc->add_option("--in", in, "partition file")->required();

  auto* dec = app.add_subcommand("decode", "sequence encoding -> partition");
  dec->add_option("--in", in, "encoding file")->required();
  dec->add_option("--dims", dims_str, "allowed part dimensions");
  dec->add_option("--out", out, "output partition file (default stdout)");

  auto* irr = app.add_subcommand("irreducible", "irreducible tight partitions");
  irr->require_subcommand(1);
  auto* gen = irr->add_subcommand("gen", "generate by recursive doubling");
  gen->add_option("--d", d, "target dimension")->required();
  gen->add_option("--limit", limit, "number of partitions")->required();
  gen->add_option("--out", out, "output file")->required();
  auto* chk = irr->add_subcommand("check", "validate/tight/irreducible verdicts");
  chk->add_option("--in", in, "partition file")->required();

  auto* smp = app.add_subcommand("sample", "seeded randomized constructions");
  smp->require_subcommand(1);
  SamplerConfig scfg;
  auto* two = smp->add_subcommand("two-cubes", "disjoint C4 family + matching completion");
  two->add_option("--d", scfg.d, "dimension")->required();
  two->add_option("--alpha", scfg.alpha, "selection probability");
  two->add_option("--seed", scfg.seed, "RNG seed")->required();
  two->add_option("--trials", scfg.trials, "number of trials");
  two->add_option("--emit", emit, "directory for per-trial partition files");
  auto* nib = smp->add_subcommand("nibble", "semi-random disjoint r-cube cover");
  nib->add_option("--d", scfg.d, "dimension")->required();
  nib->add_option("--r", scfg.r, "cube dimension")->required();
  nib->add_option("--seed", scfg.seed, "RNG seed")->required();
  nib->add_option("--trials", scfg.trials, "number of trials");
  nib->add_option("--emit", emit, "directory for per-trial partition files");

  auto* ver = app.add_subcommand("verify", "recompute known values and invariants");
  ver->add_option("--d-max", d_max, "verify quantities up to this dimension");
  ver->add_flag("--long", long_run, "include m(6) and f(5) stretch runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  copt.threads = threads;
  try {
    if (*count) return cmd_count(d, dims_str, copt);
    if (*match) {
      copt.kernel = parse_kernel(kernel);
      return cmd_matchings(d, engine, copt);
    }
    if (*bnd) return cmd_bounds(d, copt);
    if (*enc) return cmd_encode(in);
    if (*dec) return cmd_decode(in, dims_str, out);
    if (*gen) return cmd_irreducible_gen(d, limit, out);
    if (*chk) return cmd_irreducible_check(in);
    if (*two) return cmd_sample_two_cubes(scfg, emit);
    if (*nib) {
      return cmd_sample_nibble(scfg, emit);
    }
    if (*ver) return cmd_verify(d_max, long_run, copt);
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
