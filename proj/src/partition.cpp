#include "declass/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "declass/error.hpp"

namespace declass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 0) throw std::invalid_argument("Partition: negative index");
  return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << '.';
    os << parts_[i];
  }
  return os.str();
}

Partition transpose(const Partition& p) {
  std::vector<int> t;
  // Column j of the diagram has one cell per part of size > j.
  for (int j = 0; j < p.part(0); ++j) {
    int col = 0;
    for (int part : p.parts())
      if (part > j) ++col;
    t.push_back(col);
  }
  return Partition(t);
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance_leq: partitions of different sizes");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

long long centralizer_dim(const Partition& p) {
  Partition t = transpose(p);
  long long d = 0;
  for (int c : t.parts()) d += static_cast<long long>(c) * c;
  return d;
}

Partition induce(const std::vector<Partition>& ps) {
  int len = 0;
  for (const auto& p : ps) len = std::max(len, p.length());
  std::vector<int> sum;
  for (int i = 0; i < len; ++i) {
    int s = 0;
    for (const auto& p : ps) s += p.part(i);
    sum.push_back(s);
  }
  return Partition(sum);
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  // First part largest, parts weakly decreasing: that emits decreasing
  // lexicographic order directly.
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(Partition(acc));
      return;
    }
    for (int next = std::min(rest, cap); next >= 1; --next) {
      acc.push_back(next);
      rec(rest - next, next);
      acc.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition parse_partition(const std::string& text) {
  if (text.empty()) throw parse_error("partition: empty text");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string piece = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("partition: expected positive integers separated by '.' in \"" + text + "\"");
    try {
      parts.push_back(std::stoi(piece));
    } catch (const std::out_of_range&) {
      throw parse_error("partition: part out of range in \"" + text + "\"");
    }
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; }))
    throw parse_error("partition: parts must be positive in \"" + text + "\"");
  return Partition(parts);
}

}  // namespace declass
