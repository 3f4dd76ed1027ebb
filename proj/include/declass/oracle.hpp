#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "declass/decomp.hpp"
#include "declass/error.hpp"
#include "declass/exact_matrix.hpp"
#include "declass/gf.hpp"
#include "declass/partition.hpp"
#include "declass/rational.hpp"

namespace declass {

inline std::string scalar_str(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
inline std::string scalar_str(const GfElem& x) { return x.str(); }

/// Jordan structure of a square matrix: eigenvalue -> partition listing the
/// sizes of its Jordan blocks.
template <class K>
struct JordanType {
  std::map<K, Partition> spectrum;

  int total_size() const {
    int t = 0;
    for (const auto& [value, part] : spectrum) {
      (void)value;
      t += part.size();
    }
    return t;
  }

  bool operator==(const JordanType&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [value, part] : spectrum) {
      if (!first) os << ", ";
      os << scalar_str(value) << ": " << part.str();
      first = false;
    }
    os << "}";
    return os.str();
  }
};

/// Jordan data at one eigenvalue from the rank sequence of powers of
/// (a - tI): the number of blocks of size exactly j is
/// r[j-1] - 2 r[j] + r[j+1].  The sequence must be weakly decreasing and
/// stable at the matrix dimension; both are asserted.
template <class K>
Partition jordan_partition_at(const Mat<K>& a, const K& t) {
  const std::size_t n = a.rows();
  Mat<K> b = a.shifted(t);
  std::vector<long long> r{static_cast<long long>(n)};
  Mat<K> power = b;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    if (r.size() >= 2 && r[r.size() - 1] == r[r.size() - 2]) {
      r.push_back(r.back());  // the kernel chain has stabilized
      continue;
    }
    r.push_back(static_cast<long long>(power.rank()));
    if (j <= n) power = power * b;
  }
  for (std::size_t j = 1; j < r.size(); ++j)
    if (r[j] > r[j - 1]) throw verification_error("jordan_type: rank sequence increased");
  if (r[n + 1] != r[n])
    throw verification_error("jordan_type: rank sequence not stable at the dimension");
  std::vector<int> parts;
  for (std::size_t j = 1; j <= n; ++j) {
    long long mult = r[j - 1] - 2 * r[j] + r[j + 1];
    if (mult < 0) throw verification_error("jordan_type: negative block multiplicity");
    for (long long m = 0; m < mult; ++m) parts.push_back(static_cast<int>(j));
  }
  return Partition(parts);
}

/// Jordan type given trusted eigenvalue candidates (duplicates are fine).
/// Throws spectrum_error when the candidates do not account for the whole
/// matrix.
template <class K>
JordanType<K> jordan_type_with_spectrum(const Mat<K>& a, const std::vector<K>& candidates) {
  if (a.rows() != a.cols()) throw std::invalid_argument("jordan_type: square matrix required");
  JordanType<K> out;
  for (const K& t : candidates) {
    if (out.spectrum.count(t)) continue;
    Partition part = jordan_partition_at(a, t);
    if (!part.empty()) out.spectrum.emplace(t, part);
  }
  if (out.total_size() != static_cast<int>(a.rows()))
    throw spectrum_error("jordan_type: spectrum not fully contained in the scalar field");
  return out;
}

/// Eigenvalue discovery: rational (necessarily integer after clearing
/// denominators) roots of the characteristic polynomial, or an exhaustive
/// root search for a finite field.  Throws spectrum_error when roots are
/// missing or out of reach.
std::vector<Rational> discover_spectrum(const Mat<Rational>& a);
std::vector<GfElem> discover_spectrum(const Mat<GfElem>& a);

JordanType<Rational> jordan_type(const Mat<Rational>& a);
JordanType<GfElem> jordan_type(const Mat<GfElem>& a);

/// Does the conjugation orbit of a lie in the closure of the orbit of b?
/// Decided with no partition combinatorics at all: equal characteristic
/// polynomials plus the rank comparisons rank((a-t)^k) <= rank((b-t)^k) for
/// every eigenvalue t and every power k.
bool orbit_closure_leq(const Mat<Rational>& a, const Mat<Rational>& b);
bool orbit_closure_leq(const Mat<GfElem>& a, const Mat<GfElem>& b);

/// Canonical member of a class: one scalar-plus-Jordan block per datum
/// block.  Eigenvalues are caller-chosen, one per block, pairwise distinct.
Mat<Rational> representative(const DecompDatum& d, const std::vector<Rational>& eigenvalues);

/// Matrix with exactly the given Jordan structure.
Mat<Rational> matrix_of_type(const JordanType<Rational>& t);

/// One labelled block for induction sampling: eigenvalue plus Jordan type.
struct LabelledBlock {
  Rational eigenvalue;
  Partition nil;
};

/// Jordan type of a generic element of (block data + strictly upper block
/// triangle): fills the upper region with seeded random integers and reads
/// the Jordan type off, accepting once two consecutive samples agree on a
/// unique dominance-maximal type.  Throws inconclusive_error when the trial
/// budget (>= 2) runs out, and verification_error if the run contradicts the
/// centralizer-dimension conservation law: no sample may land below the law's
/// dimension, and the accepted answer must meet it exactly.
JordanType<Rational> generic_induced_type(const std::vector<LabelledBlock>& blocks, int trials,
                                          std::uint64_t seed);

/// Matrix-side closure test between class data: tries every way of matching
/// eigenvalues of lo to block groups of hi (the characteristic polynomial
/// constraint), samples the induced type for each, and compares
/// representatives with orbit_closure_leq.  Completely independent of
/// closure_leq.
bool class_closure_member_oracle(const DecompDatum& lo, const DecompDatum& hi, std::uint64_t seed,
                                 int trials = 24);

/// Finite-dimensional algebra given by structure constants; validates that
/// the bracket is alternating, antisymmetric and satisfies Jacobi.
template <class K>
class StructureConstantAlgebra {
 public:
  /// table[i][j] = coordinates of [e_i, e_j].
  explicit StructureConstantAlgebra(std::vector<std::vector<std::vector<K>>> table)
      : c_(std::move(table)) {
    n_ = c_.size();
    if (n_ == 0) throw std::invalid_argument("StructureConstantAlgebra: empty basis");
    for (const auto& row : c_) {
      if (row.size() != n_) throw std::invalid_argument("StructureConstantAlgebra: ragged table");
      for (const auto& v : row)
        if (v.size() != n_) throw std::invalid_argument("StructureConstantAlgebra: ragged table");
    }
    const K zero = scalar_zero(c_[0][0][0]);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (!c_[i][i][k].is_zero())
          throw std::invalid_argument("StructureConstantAlgebra: bracket not alternating");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (!(c_[i][j][k] + c_[j][i][k]).is_zero())
            throw std::invalid_argument("StructureConstantAlgebra: bracket not antisymmetric");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t l = j + 1; l < n_; ++l) {
          std::vector<K> sum(n_, zero);
          auto add_term = [&](std::size_t x, std::size_t y, std::size_t z) {
            // [[e_x, e_y], e_z]
            std::vector<K> inner = c_[x][y];
            std::vector<K> outer = bracket_coords(inner, basis_vector(z, zero));
            for (std::size_t k = 0; k < n_; ++k) sum[k] = sum[k] + outer[k];
          };
          add_term(i, j, l);
          add_term(j, l, i);
          add_term(l, i, j);
          for (std::size_t k = 0; k < n_; ++k)
            if (!sum[k].is_zero())
              throw std::invalid_argument("StructureConstantAlgebra: Jacobi identity fails");
        }
  }

  int dim() const { return static_cast<int>(n_); }

  std::vector<K> bracket(const std::vector<K>& x, const std::vector<K>& y) const {
    if (x.size() != n_ || y.size() != n_)
      throw std::invalid_argument("StructureConstantAlgebra: bad vector length");
    return bracket_coords(x, y);
  }

  /// Matrix of ad(x) acting on coordinates.
  Mat<K> ad(const std::vector<K>& x) const {
    if (x.size() != n_) throw std::invalid_argument("StructureConstantAlgebra: bad vector length");
    const K zero = scalar_zero(c_[0][0][0]);
    Mat<K> m(n_, n_, zero);
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<K> col = bracket_coords(x, basis_vector(j, zero));
      for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
    }
    return m;
  }

  int centralizer_dim(const std::vector<K>& x) const {
    return static_cast<int>(ad(x).kernel_dim());
  }

 private:
  std::vector<K> basis_vector(std::size_t j, const K& zero) const {
    std::vector<K> v(n_, zero);
    v[j] = scalar_one(zero);
    return v;
  }

  std::vector<K> bracket_coords(const std::vector<K>& x, const std::vector<K>& y) const {
    const K zero = scalar_zero(c_[0][0][0]);
    std::vector<K> out(n_, zero);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (y[j].is_zero()) continue;
        const K f = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) out[k] = out[k] + f * c_[i][j][k];
      }
    }
    return out;
  }

  std::size_t n_;
  std::vector<std::vector<std::vector<K>>> c_;
};

/// dim ker(ad x) by exact kernel computation.
template <class K>
int centralizer_dim_lie(const StructureConstantAlgebra<K>& alg, const std::vector<K>& x) {
  return alg.centralizer_dim(x);
}

/// pgl_2 over F_{p^k} in the basis (image of E11, image of E12, image of
/// E21): [h,e] = e, [h,f] = -f, [e,f] = 2h.
StructureConstantAlgebra<GfElem> pgl2_algebra(const GfField& field);

struct MicroRow {
  std::string element;
  int centralizer_dim = 0;
  int stabilizer_dim = 0;
  bool nilpotent = false;  // a known nilpotent representative
};

/// Direct finite-field study of pgl_2: centralizer dimensions from the
/// structure constants versus group stabilizer dimensions from the
/// conjugation-up-to-scalar-shift sweep.
struct MicroReport {
  std::uint64_t p = 0;
  int k = 1;
  std::vector<MicroRow> rows;
  bool centralizers_equal_stabilizers = true;
  bool nilpotent_centralizer_exceeds_stabilizer = false;
  bool level_one_nilpotent_free = true;
};

MicroReport pgl2_micro(std::uint64_t p, int k);

}  // namespace declass
