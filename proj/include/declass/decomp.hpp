#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "declass/partition.hpp"

namespace declass {

/// One diagonal block of a decomposition datum: block size plus the Jordan
/// type of the nilpotent carried on that block.
struct GLBlock {
  int size = 0;
  Partition nil;
  auto operator<=>(const GLBlock&) const = default;
};

/// Decomposition class datum for gl_n: a multiset of blocks, stored in
/// canonical order (size descending, then partition lexicographically
/// descending).  Two data describe the same class exactly when their
/// canonical forms agree.
class DecompDatum {
 public:
  DecompDatum() = default;
  explicit DecompDatum(std::vector<GLBlock> blocks);  // checks |nil| == size per block

  int n() const;  // total size
  const std::vector<GLBlock>& blocks() const { return blocks_; }

  auto operator<=>(const DecompDatum&) const = default;

  std::string str() const;  // "(2,1.1)(1,1)"

 private:
  std::vector<GLBlock> blocks_;
};

/// Every decomposition class of gl_n, one canonical datum each.
std::vector<DecompDatum> enumerate_classes(int n);

/// Dimension of the class: number of blocks + n^2 - sum of block centralizer
/// dimensions.
int class_dim(const DecompDatum& d);

/// Centralizer dimension of any member of the class: the sum of block
/// centralizer dimensions.
int level_of(const DecompDatum& d);

/// Closure order: lo lies in the closure of hi.  Decided by searching for a
/// fiber map from hi's blocks onto lo's blocks that matches block sizes and
/// satisfies the dominance condition per lo block.  Memoized.
bool closure_leq(const DecompDatum& lo, const DecompDatum& hi);

/// Jordan type of the nilpotent orbit attached to the whole datum.
Partition sheet_nilpotent(const DecompDatum& d);

/// Shape of the block-diagonal subalgebra underlying a datum.
struct LeviShape {
  std::vector<int> block_sizes;      // descending
  int dim_levi = 0;                  // sum of squared sizes
  int dim_center = 0;                // number of blocks
  int dim_unipotent_radical = 0;     // (n^2 - sum of squares) / 2
};
LeviShape levi_shape_of(const DecompDatum& d);

struct ClassInfo {
  DecompDatum datum;
  int dim = 0;
  int level = 0;
  bool sheet_dense = false;  // maximal in its level set
  bool isolated = false;     // both maximal and minimal in its level set
  std::optional<Partition> sheet_nil;  // present when sheet_dense
};

/// Every class with dimension, level and sheet flags, ordered by (dim,
/// datum).  Sheet flags compare classes inside one level set only.
std::vector<ClassInfo> classes_with_sheets(int n);

struct HasseDiagram {
  std::string group;  // "gl" or "pgl"
  int n = 0;
  std::vector<ClassInfo> nodes;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) indices into nodes
};

/// Closure order on all classes of gl_n, transitively reduced.
HasseDiagram hasse(int n);

struct LevelSet {
  int level = 0;
  std::vector<ClassInfo> classes;
};

/// Classes grouped by level, ascending; the sheet flags mark the dense
/// (maximal) and isolated classes of each group.
std::vector<LevelSet> sheets(int n);

/// The same classes read inside pgl_n: the poset is carried across
/// unchanged and every dimension drops by one (the central line).
std::vector<ClassInfo> pgl_transport(std::vector<ClassInfo> infos);
HasseDiagram pgl_transport(HasseDiagram gl_diagram);

/// Group labelled nilpotent data by tag and induce each group; one output
/// pair per distinct tag, ordered by tag.
std::vector<std::pair<std::string, Partition>> induce_orbit(
    const std::vector<std::pair<std::string, Partition>>& labelled);

}  // namespace declass
