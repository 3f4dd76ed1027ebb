#include "declass/decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace declass {

DecompDatum::DecompDatum(std::vector<GLBlock> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("DecompDatum: at least one block required");
  for (const auto& b : blocks_) {
    if (b.size < 1) throw std::invalid_argument("DecompDatum: block sizes must be positive");
    if (b.nil.size() != b.size)
      throw std::invalid_argument("DecompDatum: block partition size differs from block size");
  }
  std::sort(blocks_.begin(), blocks_.end(), std::greater<GLBlock>());
}

int DecompDatum::n() const {
  int total = 0;
  for (const auto& b : blocks_) total += b.size;
  return total;
}

std::string DecompDatum::str() const {
  std::ostringstream os;
  for (const auto& b : blocks_) os << "(" << b.size << "," << b.nil.str() << ")";
  return os.str();
}

std::vector<DecompDatum> enumerate_classes(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_classes: n must be positive");
  if (n > 30) throw std::invalid_argument("enumerate_classes: n larger than supported bound 30");
  // All possible blocks, canonically ordered: size descending, partition
  // lexicographically descending (partitions_of already emits that order).
  std::vector<GLBlock> pool;
  for (int s = n; s >= 1; --s)
    for (const auto& p : partitions_of(s)) pool.push_back({s, p});
  std::vector<DecompDatum> out;
  std::vector<GLBlock> acc;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int rest) {
    if (rest == 0) {
      out.push_back(DecompDatum(acc));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].size > rest) continue;
      acc.push_back(pool[i]);
      rec(i, rest - pool[i].size);
      acc.pop_back();
    }
  };
  rec(0, n);
  return out;
}

int class_dim(const DecompDatum& d) {
  const int n = d.n();
  long long dim = static_cast<long long>(d.blocks().size()) + static_cast<long long>(n) * n;
  for (const auto& b : d.blocks()) dim -= centralizer_dim(b.nil);
  return static_cast<int>(dim);
}

int level_of(const DecompDatum& d) {
  long long level = 0;
  for (const auto& b : d.blocks()) level += centralizer_dim(b.nil);
  return static_cast<int>(level);
}

Partition sheet_nilpotent(const DecompDatum& d) {
  std::vector<Partition> parts;
  for (const auto& b : d.blocks()) parts.push_back(b.nil);
  return induce(parts);
}

LeviShape levi_shape_of(const DecompDatum& d) {
  LeviShape shape;
  long long squares = 0;
  for (const auto& b : d.blocks()) {
    shape.block_sizes.push_back(b.size);
    squares += static_cast<long long>(b.size) * b.size;
  }
  const long long n = d.n();
  shape.dim_levi = static_cast<int>(squares);
  shape.dim_center = static_cast<int>(d.blocks().size());
  shape.dim_unipotent_radical = static_cast<int>((n * n - squares) / 2);
  return shape;
}

namespace {

// Search for a map from hi's blocks onto lo's blocks matching sizes exactly
// and satisfying the per-block dominance condition.
bool fiber_map_exists(const DecompDatum& lo, const DecompDatum& hi) {
  const auto& lo_blocks = lo.blocks();
  const auto& hi_blocks = hi.blocks();
  const std::size_t nj = lo_blocks.size(), ni = hi_blocks.size();
  if (ni < nj) return false;
  std::vector<int> rem(nj);
  for (std::size_t j = 0; j < nj; ++j) rem[j] = lo_blocks[j].size;
  std::vector<std::vector<Partition>> fibers(nj);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == ni) {
      for (std::size_t j = 0; j < nj; ++j) {
        if (rem[j] != 0) return false;
        if (!dominance_leq(lo_blocks[j].nil, induce(fibers[j]))) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < nj; ++j) {
      if (rem[j] < hi_blocks[i].size) continue;
      // Identical remaining capacity and identical lo block partition make
      // two targets interchangeable; trying the first is enough.
      bool duplicate_target = false;
      for (std::size_t j2 = 0; j2 < j; ++j2)
        if (rem[j2] == rem[j] && lo_blocks[j2].nil == lo_blocks[j].nil &&
            fibers[j2] == fibers[j]) {
          duplicate_target = true;
          break;
        }
      if (duplicate_target) continue;
      rem[j] -= hi_blocks[i].size;
      fibers[j].push_back(hi_blocks[i].nil);
      if (rec(i + 1)) return true;
      fibers[j].pop_back();
      rem[j] += hi_blocks[i].size;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool closure_leq(const DecompDatum& lo, const DecompDatum& hi) {
  if (lo.n() != hi.n())
    throw std::invalid_argument("closure_leq: data with different total sizes");
  static std::map<std::pair<DecompDatum, DecompDatum>, bool> cache;
  static std::mutex cache_mutex;
  const std::pair<DecompDatum, DecompDatum> key{lo, hi};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const bool result = fiber_map_exists(lo, hi);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, result);
  }
  return result;
}

std::vector<ClassInfo> classes_with_sheets(int n) {
  std::vector<ClassInfo> infos;
  for (const auto& d : enumerate_classes(n)) {
    ClassInfo info;
    info.datum = d;
    info.dim = class_dim(d);
    info.level = level_of(d);
    infos.push_back(std::move(info));
  }
  std::map<int, std::vector<std::size_t>> by_level;
  for (std::size_t i = 0; i < infos.size(); ++i) by_level[infos[i].level].push_back(i);
  for (const auto& [level, group] : by_level) {
    (void)level;
    for (std::size_t a : group) {
      bool maximal = true, minimal = true;
      for (std::size_t b : group) {
        if (a == b) continue;
        if (closure_leq(infos[a].datum, infos[b].datum)) maximal = false;
        if (closure_leq(infos[b].datum, infos[a].datum)) minimal = false;
      }
      infos[a].sheet_dense = maximal;
      infos[a].isolated = maximal && minimal;
      if (maximal) infos[a].sheet_nil = sheet_nilpotent(infos[a].datum);
    }
  }
  std::sort(infos.begin(), infos.end(), [](const ClassInfo& x, const ClassInfo& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.datum < y.datum;
  });
  return infos;
}

HasseDiagram hasse(int n) {
  HasseDiagram diagram;
  diagram.group = "gl";
  diagram.n = n;
  diagram.nodes = classes_with_sheets(n);
  const std::size_t count = diagram.nodes.size();
  std::vector<std::vector<char>> strict(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      strict[a][b] = closure_leq(diagram.nodes[a].datum, diagram.nodes[b].datum) ? 1 : 0;
    }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      if (!strict[a][b]) continue;
      bool covered = false;
      for (std::size_t c = 0; c < count && !covered; ++c)
        if (strict[a][c] && strict[c][b]) covered = true;
      if (!covered) diagram.covers.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  std::sort(diagram.covers.begin(), diagram.covers.end());
  return diagram;
}

std::vector<LevelSet> sheets(int n) {
  std::map<int, LevelSet> by_level;
  for (const auto& info : classes_with_sheets(n)) {
    auto& set = by_level[info.level];
    set.level = info.level;
    set.classes.push_back(info);
  }
  std::vector<LevelSet> out;
  for (auto& [level, set] : by_level) {
    (void)level;
    out.push_back(std::move(set));
  }
  return out;
}

std::vector<ClassInfo> pgl_transport(std::vector<ClassInfo> infos) {
  for (auto& info : infos) info.dim -= 1;
  return infos;
}

HasseDiagram pgl_transport(HasseDiagram gl_diagram) {
  if (gl_diagram.group != "gl")
    throw std::invalid_argument("pgl_transport: expected a gl diagram");
  gl_diagram.group = "pgl";
  gl_diagram.nodes = pgl_transport(std::move(gl_diagram.nodes));
  return gl_diagram;
}

std::vector<std::pair<std::string, Partition>> induce_orbit(
    const std::vector<std::pair<std::string, Partition>>& labelled) {
  std::map<std::string, std::vector<Partition>> groups;
  for (const auto& [tag, part] : labelled) groups[tag].push_back(part);
  std::vector<std::pair<std::string, Partition>> out;
  for (const auto& [tag, parts] : groups) out.push_back({tag, induce(parts)});
  return out;
}

}  // namespace declass
