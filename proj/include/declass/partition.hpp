#pragma once

#include <compare>
#include <string>
#include <vector>

namespace declass {

/// Integer partition: weakly decreasing positive parts.  The constructor
/// sorts its input, so every instance is in normal form; the default
/// instance is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // rejects entries < 1

  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const;  // zero beyond the end
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

  std::string str() const;  // dot-separated parts: "3.1.1"; "-" when empty

 private:
  std::vector<int> parts_;
};

/// Conjugate partition (columns of the Young diagram).
Partition transpose(const Partition& p);

/// Dominance order on partitions of the same size: every prefix sum of a is
/// at most the matching prefix sum of b.  Throws on a size mismatch.
bool dominance_leq(const Partition& a, const Partition& b);

/// Dimension of the full matrix centralizer of a nilpotent matrix with these
/// Jordan block sizes: the sum of squared transpose parts.
long long centralizer_dim(const Partition& p);

/// Componentwise sum after padding with zeros; the Jordan type of a generic
/// element built from the given types on a block diagonal.
Partition induce(const std::vector<Partition>& ps);

/// All partitions of n in decreasing lexicographic order; n = 0 gives the
/// empty partition only.
std::vector<Partition> partitions_of(int n);

/// Parse "3.1.1" (dot-separated positive parts).
Partition parse_partition(const std::string& text);

}  // namespace declass
