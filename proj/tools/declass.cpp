#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "declass/decomp.hpp"
#include "declass/error.hpp"
#include "declass/oracle.hpp"
#include "declass/partition.hpp"
#include "declass/render.hpp"
#include "declass/root_datum.hpp"

namespace {

using namespace declass;

struct Outcome {
  std::string payload;
  int code = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream is(s);
  while (std::getline(is, piece, sep)) out.push_back(piece);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw parse_error(what + ": trailing characters in '" + s + "'");
    return v;
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error(what + ": expected an integer, got '" + s + "'");
  }
}

// Blocks grammar: comma-separated "size:part.part.part", e.g. "2:1.1,1:1".
std::vector<std::pair<int, Partition>> parse_blocks(const std::string& s) {
  if (s.empty()) throw parse_error("blocks: empty specification");
  std::vector<std::pair<int, Partition>> out;
  for (const std::string& piece : split(s, ',')) {
    const auto colon = piece.find(':');
    if (colon == std::string::npos)
      throw parse_error("blocks: expected size:partition, got '" + piece + "'");
    const int size = parse_int(piece.substr(0, colon), "blocks");
    const Partition part = parse_partition(piece.substr(colon + 1));
    if (part.size() != size)
      throw parse_error("blocks: partition " + part.str() + " does not fill a block of size " +
                        std::to_string(size));
    out.push_back({size, part});
  }
  return out;
}

void check_enumeration_bound(int n) {
  if (n > 12)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " exceeds the supported closure-order bound (n <= 12); refusing");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome run_classes(const std::string& group, int n, const std::string& format) {
  check_enumeration_bound(n);
  auto infos = classes_with_sheets(n);
  if (group == "pgl") infos = pgl_transport(std::move(infos));
  if (format == "table") return {classes_table(group, n, infos), 0};
  return {dump_json(classes_json(group, n, infos)), 0};
}

Outcome run_hasse(const std::string& group, int n, const std::string& format) {
  check_enumeration_bound(n);
  HasseDiagram diagram = hasse(n);
  if (group == "pgl") diagram = pgl_transport(std::move(diagram));
  if (format == "json") return {dump_json(hasse_json(diagram)), 0};
  return {hasse_dot(diagram), 0};
}

Outcome run_sheets(const std::string& group, int n, const std::string& format) {
  check_enumeration_bound(n);
  auto levels = sheets(n);
  if (group == "pgl")
    for (auto& level : levels) level.classes = pgl_transport(std::move(level.classes));
  if (format == "json") return {dump_json(sheets_json(group, n, levels)), 0};
  return {sheets_table(group, n, levels), 0};
}

Outcome run_induce(const std::string& blocks_str, const std::string& tags_str,
                   const std::string& format) {
  const auto blocks = parse_blocks(blocks_str);
  std::vector<std::string> tags;
  if (tags_str.empty())
    tags.assign(blocks.size(), "a");
  else
    tags = split(tags_str, ',');
  if (tags.size() != blocks.size())
    throw parse_error("tags: got " + std::to_string(tags.size()) + " tags for " +
                      std::to_string(blocks.size()) + " blocks");
  std::vector<std::pair<std::string, Partition>> labelled;
  for (std::size_t i = 0; i < blocks.size(); ++i) labelled.push_back({tags[i], blocks[i].second});
  const auto induced = induce_orbit(labelled);
  if (format == "table") {
    std::ostringstream os;
    for (const auto& [tag, part] : induced) os << tag << ": " << part.str() << "\n";
    return {os.str(), 0};
  }
  return {dump_json(induced_json(labelled, induced)), 0};
}

Outcome run_stabtype(const std::string& builtin, int n, std::uint64_t p,
                     const std::string& levi_str, const std::string& datum_path) {
  const Characteristic ch(p);
  std::ostringstream os;
  if (!datum_path.empty()) {
    const RootDatum rd = load_root_datum(slurp(datum_path));
    if (levi_str.empty())
      throw std::invalid_argument("--levi with root indices is required together with --datum");
    LeviDescriptor levi;
    for (const std::string& piece : split(levi_str, ','))
      levi.root_indices.push_back(parse_int(piece, "levi"));
    std::sort(levi.root_indices.begin(), levi.root_indices.end());
    validate_levi(rd, levi);
    os << rd.label << ", characteristic " << p << "\n";
    os << "levi {";
    for (std::size_t i = 0; i < levi.root_indices.size(); ++i)
      os << (i ? "," : "") << levi.root_indices[i];
    os << "}: " << (is_stabiliser_type(rd, ch, levi) ? "stabiliser-type" : "not stabiliser-type")
       << "\n";
    return {os.str(), 0};
  }
  if (builtin.empty()) throw std::invalid_argument("one of --builtin or --datum is required");
  if (n < 1) throw std::invalid_argument("--n is required with --builtin");
  const RootDatum rd = builtin == "gl" ? build_gl(n) : builtin == "sl" ? build_sl(n) : build_pgl(n);
  os << rd.label << ", characteristic " << p << "\n";
  auto report_blocks = [&](const std::vector<int>& sizes) {
    const LeviDescriptor levi = levi_from_blocks(n, sizes);
    os << "levi [" << Partition(sizes).str() << "]: "
       << (is_stabiliser_type(rd, ch, levi) ? "stabiliser-type" : "not stabiliser-type") << "\n";
  };
  if (!levi_str.empty()) {
    std::vector<int> sizes;
    int total = 0;
    for (const std::string& piece : split(levi_str, ',')) {
      sizes.push_back(parse_int(piece, "levi"));
      total += sizes.back();
    }
    if (total != n)
      throw std::invalid_argument("levi block sizes must sum to n = " + std::to_string(n));
    report_blocks(sizes);
  } else {
    for (const Partition& shape : partitions_of(n)) report_blocks(shape.parts());
  }
  return {os.str(), 0};
}

Outcome run_verify_closure(int n, std::uint64_t seed) {
  if (n > 6)
    throw std::invalid_argument("verify closure is supported for n <= 6 (oracle cost); refusing");
  const auto classes = enumerate_classes(n);
  std::ostringstream os;
  long pairs = 0;
  int mismatches = 0;
  for (const auto& lo : classes)
    for (const auto& hi : classes) {
      const bool engine = closure_leq(lo, hi);
      const bool oracle = class_closure_member_oracle(lo, hi, seed);
      ++pairs;
      if (engine != oracle) {
        ++mismatches;
        os << "mismatch: " << lo.str() << " vs " << hi.str() << ": engine says "
           << (engine ? "below" : "not below") << ", matrix oracle says "
           << (oracle ? "below" : "not below") << "\n";
      }
    }
  os << "closure order on gl_" << n << ": " << classes.size() << " classes, " << pairs
     << " ordered pairs, " << mismatches << " mismatches\n";
  return {os.str(), mismatches ? 3 : 0};
}

Outcome run_verify_induction(int n, std::uint64_t seed) {
  if (n > 8)
    throw std::invalid_argument("verify induction is supported for n <= 8 (oracle cost); refusing");
  const auto classes = enumerate_classes(n);
  std::ostringstream os;
  int mismatches = 0;
  std::uint64_t salt = 0;
  for (const auto& d : classes) {
    std::vector<Partition> parts;
    std::vector<LabelledBlock> blocks;
    long long rhs = static_cast<long long>(n) * n;
    for (const auto& b : d.blocks()) {
      parts.push_back(b.nil);
      blocks.push_back({Rational(0), b.nil});
      rhs -= centralizer_dim(b.nil);  // orbit dims within the blocks + radical term
    }
    const Partition engine = induce(parts);
    const auto oracle = generic_induced_type(blocks, 24, seed + ++salt);
    const Partition& sampled = oracle.spectrum.begin()->second;
    if (!(engine == sampled)) {
      ++mismatches;
      os << "mismatch: " << d.str() << ": formula gives " << engine.str()
         << ", generic sampling gives " << sampled.str() << "\n";
    }
    const long long lhs = static_cast<long long>(n) * n - centralizer_dim(engine);
    if (lhs != rhs) {
      ++mismatches;
      os << "dimension law broken at " << d.str() << ": " << lhs << " != " << rhs << "\n";
    }
  }
  os << "induction on gl_" << n << ": " << classes.size()
     << " block tuples checked against generic sampling\n";

  // Transitivity: inducing in two stages through a random intermediate
  // grouping must agree with inducing in one step.
  std::mt19937_64 rng(seed);
  const int runs = 100;
  for (int r = 0; r < runs; ++r) {
    std::vector<Partition> flat;
    int remaining = n;
    while (remaining > 0) {
      const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(remaining));
      const auto shapes = partitions_of(size);
      flat.push_back(shapes[rng() % shapes.size()]);
      remaining -= size;
    }
    std::vector<std::vector<Partition>> groups(1 + rng() % 3);
    for (const auto& part : flat) groups[rng() % groups.size()].push_back(part);
    std::vector<Partition> staged;
    for (const auto& group : groups)
      if (!group.empty()) staged.push_back(induce(group));
    if (!(induce(staged) == induce(flat))) {
      ++mismatches;
      os << "transitivity broken on a staged grouping (run " << r << ")\n";
    }
  }
  os << "transitivity: " << runs << " staged groupings agree with one-step induction\n";
  if (mismatches) os << mismatches << " mismatches\n";
  return {os.str(), mismatches ? 3 : 0};
}

Outcome run_micro(std::uint64_t p, int k, const std::string& format) {
  const MicroReport report = pgl2_micro(p, k);
  if (format == "table") return {micro_table(report), 0};
  return {dump_json(micro_json(report)), 0};
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw parse_error("cannot write file '" + out_path + "'");
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decomposition classes of reductive Lie algebras, exactly"};
  app.require_subcommand(1);

  std::string group = "gl", format, blocks_str, tags_str, levi_str, datum_path, builtin, out_path;
  int n = 0, k = 1;
  std::uint64_t p = 0, seed = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path, "write the result to a file instead of stdout");
  };

  CLI::App* classes = app.add_subcommand("classes", "enumerate decomposition classes");
  classes->add_option("--group", group, "gl or pgl")->check(CLI::IsMember({"gl", "pgl"}));
  classes->add_option("--n", n, "rank of the matrix algebra")->required();
  classes->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  add_common(classes);

  CLI::App* hasse_cmd = app.add_subcommand("hasse", "closure order as a Hasse diagram");
  hasse_cmd->add_option("--group", group, "gl or pgl")->check(CLI::IsMember({"gl", "pgl"}));
  hasse_cmd->add_option("--n", n, "rank of the matrix algebra")->required();
  hasse_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  add_common(hasse_cmd);

  CLI::App* sheets_cmd = app.add_subcommand("sheets", "level sets, sheets and isolated classes");
  sheets_cmd->add_option("--group", group, "gl or pgl")->check(CLI::IsMember({"gl", "pgl"}));
  sheets_cmd->add_option("--n", n, "rank of the matrix algebra")->required();
  sheets_cmd->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  add_common(sheets_cmd);

  CLI::App* induce_cmd = app.add_subcommand("induce", "induce labelled nilpotent block data");
  induce_cmd->add_option("--blocks", blocks_str, "comma list of size:partition, e.g. 2:1.1,1:1")
      ->required();
  induce_cmd->add_option("--tags", tags_str, "comma list of eigenvalue tags, one per block");
  induce_cmd->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  add_common(induce_cmd);

  CLI::App* stabtype_cmd =
      app.add_subcommand("stabtype", "stabiliser-type verdicts for Levi subgroups");
  stabtype_cmd->add_option("--builtin", builtin, "gl, sl or pgl")
      ->check(CLI::IsMember({"gl", "sl", "pgl"}));
  stabtype_cmd->add_option("--n", n, "rank for the builtin datum");
  stabtype_cmd->add_option("--p", p, "field characteristic (0 or a prime)")->required();
  stabtype_cmd->add_option("--levi", levi_str,
                           "block sizes for a builtin, or root indices with --datum");
  stabtype_cmd->add_option("--datum", datum_path, "root datum file");
  add_common(stabtype_cmd);

  CLI::App* verify = app.add_subcommand("verify", "cross-check the engine against the oracle");
  verify->require_subcommand(1);
  CLI::App* vclosure = verify->add_subcommand("closure", "closure order vs matrix sampling");
  vclosure->add_option("--n", n, "rank of the matrix algebra")->required();
  vclosure->add_option("--seed", seed, "sampling seed")->envname("DECLASS_SEED");
  add_common(vclosure);
  CLI::App* vinduction =
      verify->add_subcommand("induction", "induction formula vs generic sampling");
  vinduction->add_option("--n", n, "rank of the matrix algebra")->required();
  vinduction->add_option("--seed", seed, "sampling seed")->envname("DECLASS_SEED");
  add_common(vinduction);

  CLI::App* micro = app.add_subcommand("micro", "small finite-field models");
  micro->require_subcommand(1);
  CLI::App* micro_pgl2 =
      micro->add_subcommand("pgl2", "pgl_2 centraliser vs stabiliser dimensions");
  micro_pgl2->add_option("--p", p, "field characteristic")->required();
  micro_pgl2->add_option("--k", k, "field degree over the prime field")->check(CLI::Range(1, 6));
  micro_pgl2->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  add_common(micro_pgl2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome outcome;
    if (*classes)
      outcome = run_classes(group, n, format.empty() ? "json" : format);
    else if (*hasse_cmd)
      outcome = run_hasse(group, n, format.empty() ? "dot" : format);
    else if (*sheets_cmd)
      outcome = run_sheets(group, n, format.empty() ? "table" : format);
    else if (*induce_cmd)
      outcome = run_induce(blocks_str, tags_str, format.empty() ? "json" : format);
    else if (*stabtype_cmd)
      outcome = run_stabtype(builtin, n, p, levi_str, datum_path);
    else if (*vclosure)
      outcome = run_verify_closure(n, seed);
    else if (*vinduction)
      outcome = run_verify_induction(n, seed);
    else if (*micro_pgl2)
      outcome = run_micro(p, k, format.empty() ? "json" : format);
    emit(outcome.payload, out_path);
    if (outcome.code == 3) std::cerr << "verification mismatch\n";
    return outcome.code;
  } catch (const inconclusive_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 4;
  } catch (const verification_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  } catch (const spectrum_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
