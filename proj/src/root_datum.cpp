#include "declass/root_datum.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "declass/error.hpp"
#include "declass/exact_matrix.hpp"

namespace declass {

Characteristic::Characteristic(std::uint64_t p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("Characteristic: must be zero or a prime");
}

void validate_root_datum(const RootDatum& rd) {
  if (rd.rank < 0) throw parse_error("root datum: negative rank");
  if (rd.roots.size() != rd.coroots.size())
    throw parse_error("root datum: roots and coroots lists have different lengths");
  for (const auto& v : rd.roots)
    if (static_cast<int>(v.size()) != rd.rank)
      throw parse_error("root datum: root vector length differs from rank");
  for (const auto& v : rd.coroots)
    if (static_cast<int>(v.size()) != rd.rank)
      throw parse_error("root datum: coroot vector length differs from rank");
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    long long pairing = 0;
    for (int k = 0; k < rd.rank; ++k)
      pairing += rd.roots[i][static_cast<std::size_t>(k)] * rd.coroots[i][static_cast<std::size_t>(k)];
    if (pairing != 2) {
      std::ostringstream os;
      os << "root datum: pairing of root " << i << " with its coroot is " << pairing
         << ", expected 2";
      throw parse_error(os.str());
    }
  }
  std::map<std::vector<long long>, int> seen;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    if (std::all_of(rd.roots[i].begin(), rd.roots[i].end(), [](long long x) { return x == 0; }))
      throw parse_error("root datum: zero root");
    if (++seen[rd.roots[i]] > 1) {
      std::ostringstream os;
      os << "root datum: duplicate root at index " << i;
      throw parse_error(os.str());
    }
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    std::vector<long long> neg = rd.roots[i];
    for (auto& x : neg) x = -x;
    if (!seen.count(neg)) {
      std::ostringstream os;
      os << "root datum: root list not closed under negation (missing negative of root " << i
         << ")";
      throw parse_error(os.str());
    }
  }
}

int type_a_root_index(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("type_a_root_index: bad pair");
  return i * (n - 1) + (j > i ? j - 1 : j);
}

namespace {

void check_type_a_n(int n) {
  if (n < 1) throw std::invalid_argument("type A builder: n must be at least 1");
}

}  // namespace

RootDatum build_gl(int n) {
  check_type_a_n(n);
  RootDatum rd;
  rd.label = "gl" + std::to_string(n);
  rd.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<long long> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(j)] = -1;
      rd.roots.push_back(v);
      rd.coroots.push_back(v);
    }
  validate_root_datum(rd);
  return rd;
}

RootDatum build_sl(int n) {
  check_type_a_n(n);
  RootDatum rd;
  rd.label = "sl" + std::to_string(n);
  rd.rank = n - 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Root coordinates against the cocharacter basis f_k = e_k - e_{k+1}:
      // (e_i - e_j) evaluated at f_k.
      std::vector<long long> root(static_cast<std::size_t>(n - 1), 0);
      for (int k = 0; k < n - 1; ++k) {
        long long v = 0;
        if (i == k) v += 1;
        if (i == k + 1) v -= 1;
        if (j == k) v -= 1;
        if (j == k + 1) v += 1;
        root[static_cast<std::size_t>(k)] = v;
      }
      // Coroot e_i - e_j expanded in the f_k: the interval between i and j.
      std::vector<long long> coroot(static_cast<std::size_t>(n - 1), 0);
      int lo = std::min(i, j), hi = std::max(i, j);
      for (int k = lo; k < hi; ++k) coroot[static_cast<std::size_t>(k)] = (i < j) ? 1 : -1;
      rd.roots.push_back(root);
      rd.coroots.push_back(coroot);
    }
  validate_root_datum(rd);
  return rd;
}

RootDatum build_pgl(int n) {
  check_type_a_n(n);
  RootDatum rd;
  rd.label = "pgl" + std::to_string(n);
  rd.rank = n - 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Characters of PGL_n are the sum-zero vectors; against the basis
      // image-of-e_0..e_{n-2} the coordinates of e_i - e_j are simply its
      // first n-1 entries.
      std::vector<long long> root(static_cast<std::size_t>(n - 1), 0);
      if (i < n - 1) root[static_cast<std::size_t>(i)] += 1;
      if (j < n - 1) root[static_cast<std::size_t>(j)] -= 1;
      // Coroot e_i - e_j modulo the diagonal line, in the same basis: when
      // j == n-1 use e_j = diag - e_0 - ... - e_{n-2}.
      std::vector<long long> coroot(static_cast<std::size_t>(n - 1), 0);
      if (i < n - 1 && j < n - 1) {
        coroot[static_cast<std::size_t>(i)] = 1;
        coroot[static_cast<std::size_t>(j)] = -1;
      } else if (j == n - 1) {
        for (int k = 0; k < n - 1; ++k) coroot[static_cast<std::size_t>(k)] = 1;
        coroot[static_cast<std::size_t>(i)] = 2;
      } else {  // i == n-1
        for (int k = 0; k < n - 1; ++k) coroot[static_cast<std::size_t>(k)] = -1;
        coroot[static_cast<std::size_t>(j)] = -2;
      }
      rd.roots.push_back(root);
      rd.coroots.push_back(coroot);
    }
  validate_root_datum(rd);
  return rd;
}

namespace {

std::vector<long long> parse_int_row(const std::string& line, int rank, const char* what) {
  std::istringstream is(line);
  std::vector<long long> row;
  long long v;
  while (is >> v) row.push_back(v);
  if (!is.eof()) throw parse_error(std::string("root datum: bad integer row in ") + what);
  if (static_cast<int>(row.size()) != rank)
    throw parse_error(std::string("root datum: ") + what + " row length differs from rank");
  return row;
}

}  // namespace

RootDatum load_root_datum(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = raw.find_last_not_of(" \t\r");
    lines.push_back(raw.substr(begin, end - begin + 1));
  }
  std::size_t at = 0;
  auto need = [&](const char* what) -> std::string {
    if (at >= lines.size()) throw parse_error(std::string("root datum: missing ") + what);
    return lines[at++];
  };
  RootDatum rd;
  std::string label_line = need("LABEL line");
  if (label_line.rfind("LABEL ", 0) != 0) throw parse_error("root datum: missing LABEL line");
  rd.label = label_line.substr(6);
  std::string rank_line = need("RANK line");
  if (rank_line.rfind("RANK ", 0) != 0) throw parse_error("root datum: missing RANK line");
  try {
    rd.rank = std::stoi(rank_line.substr(5));
  } catch (const std::exception&) {
    throw parse_error("root datum: bad RANK value");
  }
  if (need("ROOTS section") != "ROOTS") throw parse_error("root datum: missing ROOTS section");
  while (at < lines.size() && lines[at] != "COROOTS")
    rd.roots.push_back(parse_int_row(lines[at++], rd.rank, "ROOTS"));
  if (need("COROOTS section") != "COROOTS")
    throw parse_error("root datum: missing COROOTS section");
  while (at < lines.size()) rd.coroots.push_back(parse_int_row(lines[at++], rd.rank, "COROOTS"));
  validate_root_datum(rd);
  return rd;
}

std::string format_root_datum(const RootDatum& rd) {
  validate_root_datum(rd);
  std::ostringstream os;
  os << "LABEL " << rd.label << "\n";
  os << "RANK " << rd.rank << "\n";
  os << "ROOTS\n";
  for (const auto& row : rd.roots) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << "\n";
  }
  os << "COROOTS\n";
  for (const auto& row : rd.coroots) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
    os << "\n";
  }
  return os.str();
}

void validate_levi(const RootDatum& rd, const LeviDescriptor& levi) {
  const int nroots = static_cast<int>(rd.roots.size());
  std::map<std::vector<long long>, int> index_of;
  for (int i = 0; i < nroots; ++i) index_of[rd.roots[static_cast<std::size_t>(i)]] = i;
  std::vector<int> sorted = levi.root_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("levi: duplicate root index");
  if (sorted != levi.root_indices)
    throw std::invalid_argument("levi: root indices must be sorted");
  for (int idx : levi.root_indices) {
    if (idx < 0 || idx >= nroots) throw std::invalid_argument("levi: root index out of range");
    std::vector<long long> neg = rd.roots[static_cast<std::size_t>(idx)];
    for (auto& x : neg) x = -x;
    auto it = index_of.find(neg);
    if (it == index_of.end() ||
        !std::binary_search(levi.root_indices.begin(), levi.root_indices.end(), it->second))
      throw std::invalid_argument("levi: root set not closed under negation");
  }
}

LeviDescriptor levi_full(const RootDatum& rd) {
  LeviDescriptor levi;
  for (int i = 0; i < static_cast<int>(rd.roots.size()); ++i) levi.root_indices.push_back(i);
  return levi;
}

LeviDescriptor levi_from_blocks(int n, const std::vector<int>& block_sizes) {
  int total = 0;
  for (int b : block_sizes) {
    if (b < 1) throw std::invalid_argument("levi_from_blocks: block sizes must be positive");
    total += b;
  }
  if (total != n) throw std::invalid_argument("levi_from_blocks: block sizes must sum to n");
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  int pos = 0, label = 0;
  for (int b : block_sizes) {
    for (int t = 0; t < b; ++t) block_of[static_cast<std::size_t>(pos++)] = label;
    ++label;
  }
  LeviDescriptor levi;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(j)])
        continue;
      levi.root_indices.push_back(type_a_root_index(n, i, j));
    }
  std::sort(levi.root_indices.begin(), levi.root_indices.end());
  return levi;
}

namespace {

// Rank of an integer matrix over Q or over F_p.
int integer_rows_rank(const std::vector<std::vector<long long>>& rows, int ncols,
                      Characteristic ch) {
  if (rows.empty() || ncols == 0) return 0;
  if (ch.zero()) {
    Mat<Rational> m(rows.size(), static_cast<std::size_t>(ncols), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < ncols; ++j)
        m.at(i, static_cast<std::size_t>(j)) = Rational(rows[i][static_cast<std::size_t>(j)]);
    return static_cast<int>(m.rank());
  }
  GfField f(ch.value(), 1);
  Mat<GfElem> m(rows.size(), static_cast<std::size_t>(ncols), f.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < ncols; ++j)
      m.at(i, static_cast<std::size_t>(j)) = f.from_int(rows[i][static_cast<std::size_t>(j)]);
  return static_cast<int>(m.rank());
}

// Image of a (small) integer inside the scalar field of the exemplar.
template <class K>
K int_in_field(long long c, const K& exemplar) {
  K acc = scalar_zero(exemplar);
  const K one = scalar_one(exemplar);
  for (long long t = 0; t < (c < 0 ? -c : c); ++t) acc = acc + one;
  return c < 0 ? scalar_zero(exemplar) - acc : acc;
}

template <class K>
std::vector<int> phi_y_at(const RootDatum& rd, const std::vector<K>& y) {
  if (static_cast<int>(y.size()) != rd.rank)
    throw std::invalid_argument("phi_y: point length differs from rank");
  std::vector<int> out;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    // A rank zero datum has no roots, so y is nonempty here.
    K acc = scalar_zero(y[0]);
    for (int k = 0; k < rd.rank; ++k) {
      long long c = rd.roots[i][static_cast<std::size_t>(k)];
      if (c == 0) continue;
      acc = acc + int_in_field(c, y[0]) * y[static_cast<std::size_t>(k)];
    }
    if (acc.is_zero()) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::vector<int> phi_y(const RootDatum& rd, Characteristic p,
                       const std::vector<long long>& y) {
  if (static_cast<int>(y.size()) != rd.rank)
    throw std::invalid_argument("phi_y: point length differs from rank");
  std::vector<int> out;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    BigInt acc = 0;
    for (int k = 0; k < rd.rank; ++k)
      acc += BigInt(rd.roots[i][static_cast<std::size_t>(k)]) * y[static_cast<std::size_t>(k)];
    bool zero = p.zero() ? acc.is_zero() : (acc % BigInt(p.value())).is_zero();
    if (zero) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> phi_y(const RootDatum& rd, const std::vector<Rational>& y) {
  return phi_y_at(rd, y);
}

std::vector<int> phi_y(const RootDatum& rd, const std::vector<GfElem>& y) {
  return phi_y_at(rd, y);
}

SubspaceDescriptor center_of_levi(const RootDatum& rd, const LeviDescriptor& levi) {
  validate_levi(rd, levi);
  SubspaceDescriptor s;
  s.ambient_rank = rd.rank;
  for (int idx : levi.root_indices) s.equations.push_back(rd.roots[static_cast<std::size_t>(idx)]);
  return s;
}

int subspace_dim(const SubspaceDescriptor& s, Characteristic p) {
  return s.ambient_rank - integer_rows_rank(s.equations, s.ambient_rank, p);
}

std::vector<int> generic_phi(const RootDatum& rd, Characteristic p,
                             const SubspaceDescriptor& s) {
  if (s.ambient_rank != rd.rank)
    throw std::invalid_argument("generic_phi: ambient rank differs from datum rank");
  const int base = integer_rows_rank(s.equations, s.ambient_rank, p);
  std::vector<int> out;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    auto extended = s.equations;
    extended.push_back(rd.roots[i]);
    if (integer_rows_rank(extended, s.ambient_rank, p) == base) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool is_stabiliser_type(const RootDatum& rd, Characteristic p, const LeviDescriptor& levi) {
  validate_levi(rd, levi);
  std::vector<int> generic = generic_phi(rd, p, center_of_levi(rd, levi));
  return generic == levi.root_indices;
}

}  // namespace declass
