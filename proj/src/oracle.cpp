#include "declass/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

namespace declass {

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// All positive divisors of |m|, m != 0, by trial division.  A cofactor with
// no prime factor below a million is treated as prime; if it is not, some
// divisors are missed and the spectrum completeness check reports it.
std::vector<BigInt> positive_divisors(BigInt m) {
  if (m < 0) m = -m;
  std::vector<std::pair<BigInt, int>> factors;
  for (BigInt d = 2; d * d <= m && d <= 1000000; ++d) {
    if (!(m % d).is_zero()) continue;
    int e = 0;
    while ((m % d).is_zero()) {
      m /= d;
      ++e;
    }
    factors.push_back({d, e});
  }
  if (m > 1) factors.push_back({m, 1});
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [prime, count] : factors) {
    std::vector<BigInt> next;
    BigInt power = 1;
    for (int e = 0; e <= count; ++e) {
      for (const auto& d : divisors) {
        next.push_back(d * power);
        if (next.size() > 200000)
          throw spectrum_error("discover_spectrum: too many divisor candidates");
      }
      power *= prime;
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Horner evaluation; coefficients are highest degree first.
BigInt eval_poly(const std::vector<BigInt>& c, const BigInt& v) {
  BigInt acc = 0;
  for (const auto& coeff : c) acc = acc * v + coeff;
  return acc;
}

// Synthetic division of a monic polynomial by (t - v); the caller only asks
// when the remainder is zero.
std::vector<BigInt> deflate(const std::vector<BigInt>& c, const BigInt& v) {
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    carry = i == 0 ? c[0] : c[i] + carry * v;
    q[i] = carry;
  }
  return q;
}

// All distinct integer roots of a monic integer polynomial, with deflation
// so repeated roots cost nothing extra.
std::vector<BigInt> integer_roots(std::vector<BigInt> poly) {
  std::vector<BigInt> roots;
  auto push_root = [&](const BigInt& r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  };
  while (poly.size() > 1) {
    if (poly.back().is_zero()) {
      push_root(BigInt(0));
      poly.pop_back();
      continue;
    }
    bool found = false;
    for (const auto& d : positive_divisors(poly.back())) {
      for (int sign = 0; sign < 2 && !found; ++sign) {
        BigInt v = sign ? -d : d;
        if (eval_poly(poly, v).is_zero()) {
          push_root(v);
          poly = deflate(poly, v);
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) break;  // no further roots in Z
  }
  return roots;
}

template <class K>
std::vector<long long> rank_chain(const Mat<K>& m, const K& t) {
  const std::size_t n = m.rows();
  Mat<K> b = m.shifted(t);
  std::vector<long long> r;
  Mat<K> power = b;
  for (std::size_t j = 1; j <= n; ++j) {
    if (r.size() >= 2 && r[r.size() - 1] == r[r.size() - 2]) {
      r.push_back(r.back());
      continue;
    }
    r.push_back(static_cast<long long>(power.rank()));
    if (j < n) power = power * b;
  }
  return r;
}

template <class K>
bool orbit_closure_leq_impl(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("orbit_closure_leq: square matrices required");
  if (a.rows() != b.rows()) throw std::invalid_argument("orbit_closure_leq: sizes differ");
  if (!(a.charpoly() == b.charpoly())) return false;
  const long long n = static_cast<long long>(a.rows());
  long long covered = 0;
  for (const K& t : discover_spectrum(a)) {
    const auto chain_a = rank_chain(a, t), chain_b = rank_chain(b, t);
    covered += n - chain_a.back();
    for (std::size_t k = 0; k < chain_a.size(); ++k)
      if (chain_a[k] > chain_b[k]) return false;
  }
  if (covered != n)
    throw spectrum_error("orbit_closure_leq: spectrum not fully contained in the scalar field");
  return true;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<Rational> discover_spectrum(const Mat<Rational>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("discover_spectrum: square matrix required");
  // Clear denominators: integer roots of the scaled matrix are the only
  // possible rational eigenvalues of the original.
  BigInt scale = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      BigInt den = denominator(a.at(i, j));
      scale = scale / gcd_big(scale, den) * den;
    }
  Mat<Rational> scaled = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) scaled.at(i, j) = a.at(i, j) * Rational(scale);
  std::vector<BigInt> poly;
  for (const auto& coeff : scaled.charpoly()) {
    if (denominator(coeff) != 1)
      throw verification_error("discover_spectrum: non-integral charpoly of an integer matrix");
    poly.push_back(numerator(coeff));
  }
  std::vector<Rational> out;
  for (const auto& root : integer_roots(poly)) out.push_back(Rational(root) / Rational(scale));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GfElem> discover_spectrum(const Mat<GfElem>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("discover_spectrum: square matrix required");
  GfField field = a.at(0, 0).field();
  if (field.order() > 1000000)
    throw spectrum_error("discover_spectrum: field too large for exhaustive root search");
  const auto poly = a.charpoly();
  std::vector<GfElem> out;
  for (const auto& t : field.all_elements()) {
    GfElem acc = field.zero();
    for (const auto& coeff : poly) acc = acc * t + coeff;
    if (acc.is_zero()) out.push_back(t);
  }
  return out;
}

JordanType<Rational> jordan_type(const Mat<Rational>& a) {
  return jordan_type_with_spectrum(a, discover_spectrum(a));
}

JordanType<GfElem> jordan_type(const Mat<GfElem>& a) {
  return jordan_type_with_spectrum(a, discover_spectrum(a));
}

bool orbit_closure_leq(const Mat<Rational>& a, const Mat<Rational>& b) {
  return orbit_closure_leq_impl(a, b);
}

bool orbit_closure_leq(const Mat<GfElem>& a, const Mat<GfElem>& b) {
  return orbit_closure_leq_impl(a, b);
}

namespace {

// Writes z I + J_part into the diagonal square at the given offset.
void place_block(Mat<Rational>& m, std::size_t offset, const Rational& z, const Partition& part) {
  std::size_t at = offset;
  for (int piece : part.parts()) {
    for (int i = 0; i < piece; ++i) {
      m.at(at + static_cast<std::size_t>(i), at + static_cast<std::size_t>(i)) = z;
      if (i + 1 < piece)
        m.at(at + static_cast<std::size_t>(i), at + static_cast<std::size_t>(i) + 1) = Rational(1);
    }
    at += static_cast<std::size_t>(piece);
  }
}

}  // namespace

Mat<Rational> representative(const DecompDatum& d, const std::vector<Rational>& eigenvalues) {
  if (eigenvalues.size() != d.blocks().size())
    throw std::invalid_argument("representative: one eigenvalue per block required");
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j])
        throw std::invalid_argument("representative: eigenvalues must be pairwise distinct");
  const std::size_t n = static_cast<std::size_t>(d.n());
  Mat<Rational> m(n, n, Rational(0));
  std::size_t offset = 0;
  for (std::size_t i = 0; i < d.blocks().size(); ++i) {
    place_block(m, offset, eigenvalues[i], d.blocks()[i].nil);
    offset += static_cast<std::size_t>(d.blocks()[i].size);
  }
  return m;
}

Mat<Rational> matrix_of_type(const JordanType<Rational>& t) {
  const std::size_t n = static_cast<std::size_t>(t.total_size());
  if (n == 0) throw std::invalid_argument("matrix_of_type: empty type");
  Mat<Rational> m(n, n, Rational(0));
  std::size_t offset = 0;
  for (const auto& [value, part] : t.spectrum) {
    place_block(m, offset, value, part);
    offset += static_cast<std::size_t>(part.size());
  }
  return m;
}

JordanType<Rational> generic_induced_type(const std::vector<LabelledBlock>& blocks, int trials,
                                          std::uint64_t seed) {
  if (blocks.empty()) throw std::invalid_argument("generic_induced_type: no blocks");
  if (trials < 2) throw std::invalid_argument("generic_induced_type: at least two trials required");
  std::size_t n = 0;
  long long law_target = 0;  // conserved sum of centralizer dimensions
  for (const auto& b : blocks) {
    if (b.nil.empty()) throw std::invalid_argument("generic_induced_type: empty block");
    n += static_cast<std::size_t>(b.nil.size());
    law_target += centralizer_dim(b.nil);
  }
  Mat<Rational> base(n, n, Rational(0));
  std::vector<std::size_t> offsets;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    offsets.push_back(offset);
    place_block(base, offset, b.eigenvalue, b.nil);
    offset += static_cast<std::size_t>(b.nil.size());
  }
  offsets.push_back(offset);
  std::vector<Rational> spectrum;
  for (const auto& b : blocks) spectrum.push_back(b.eigenvalue);

  auto law_of = [](const JordanType<Rational>& t) {
    long long law = 0;
    for (const auto& [value, part] : t.spectrum) {
      (void)value;
      law += centralizer_dim(part);
    }
    return law;
  };
  // Dominance between sampled types.  All samples share one characteristic
  // polynomial, so the spectra always match up; a defensive false keeps
  // genuinely incomparable types apart.
  auto type_leq = [](const JordanType<Rational>& s, const JordanType<Rational>& t) {
    if (s.spectrum.size() != t.spectrum.size()) return false;
    for (const auto& [value, part] : s.spectrum) {
      auto it = t.spectrum.find(value);
      if (it == t.spectrum.end() || it->second.size() != part.size()) return false;
      if (!dominance_leq(part, it->second)) return false;
    }
    return true;
  };

  std::mt19937_64 rng(seed);
  std::vector<JordanType<Rational>> antichain, previous;
  for (int trial = 0; trial < trials; ++trial) {
    Mat<Rational> m = base;
    for (std::size_t bi = 0; bi + 1 < offsets.size(); ++bi)
      for (std::size_t bj = bi + 1; bj + 1 < offsets.size(); ++bj)
        for (std::size_t r = offsets[bi]; r < offsets[bi + 1]; ++r)
          for (std::size_t c = offsets[bj]; c < offsets[bj + 1]; ++c)
            m.at(r, c) = Rational(static_cast<long long>(rng() % 2000001) - 1000000);
    JordanType<Rational> sampled = jordan_type_with_spectrum(m, spectrum);
    // Every sample degenerates the dense orbit, so its centralizer dimension
    // can only exceed the conserved value, never undercut it.
    if (law_of(sampled) < law_target)
      throw verification_error("generic_induced_type: centralizer dimension fell below the law");
    bool dominated = false;
    for (const auto& kept : antichain)
      if (type_leq(sampled, kept)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      std::vector<JordanType<Rational>> next;
      for (auto& kept : antichain)
        if (!type_leq(kept, sampled)) next.push_back(std::move(kept));
      next.push_back(std::move(sampled));
      antichain = std::move(next);
    }
    if (antichain.size() == 1 && previous.size() == 1 && antichain[0] == previous[0]) {
      if (law_of(antichain[0]) != law_target)
        throw verification_error("generic_induced_type: accepted type violates the dimension law");
      return antichain[0];
    }
    previous = antichain;
  }
  throw inconclusive_error("generic_induced_type: samples did not stabilize within the budget");
}

bool class_closure_member_oracle(const DecompDatum& lo, const DecompDatum& hi, std::uint64_t seed,
                                 int trials) {
  if (lo.n() != hi.n())
    throw std::invalid_argument("class_closure_member_oracle: data of different total sizes");
  static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  constexpr std::size_t max_blocks = sizeof(primes) / sizeof(primes[0]);
  if (lo.blocks().size() > max_blocks)
    throw std::invalid_argument(
        "class_closure_member_oracle: too many blocks for the eigenvalue table");
  const long long s = static_cast<long long>(seed % 97) + 1;
  std::vector<Rational> eigenvalues;
  for (std::size_t j = 0; j < lo.blocks().size(); ++j)
    eigenvalues.push_back(Rational(primes[j] * s));
  const Mat<Rational> a = representative(lo, eigenvalues);

  const auto& lo_blocks = lo.blocks();
  const auto& hi_blocks = hi.blocks();
  std::vector<int> rem(lo_blocks.size());
  for (std::size_t j = 0; j < lo_blocks.size(); ++j) rem[j] = lo_blocks[j].size;
  std::vector<std::size_t> assign(hi_blocks.size(), 0);
  std::uint64_t counter = 0;
  bool found = false;

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == hi_blocks.size()) {
      std::vector<LabelledBlock> labelled;
      for (std::size_t t = 0; t < hi_blocks.size(); ++t)
        labelled.push_back({eigenvalues[assign[t]], hi_blocks[t].nil});
      JordanType<Rational> induced =
          generic_induced_type(labelled, trials, mix_seed(seed, ++counter));
      if (orbit_closure_leq(a, matrix_of_type(induced))) found = true;
      return;
    }
    for (std::size_t j = 0; j < lo_blocks.size() && !found; ++j) {
      if (rem[j] < hi_blocks[i].size) continue;
      rem[j] -= hi_blocks[i].size;
      assign[i] = j;
      rec(i + 1);
      rem[j] += hi_blocks[i].size;
    }
  };
  rec(0);
  return found;
}

StructureConstantAlgebra<GfElem> pgl2_algebra(const GfField& field) {
  const GfElem zero = field.zero();
  std::vector<std::vector<std::vector<GfElem>>> table(
      3, std::vector<std::vector<GfElem>>(3, std::vector<GfElem>(3, zero)));
  auto set = [&](int i, int j, int k, long long v) {
    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
        field.from_int(v);
  };
  // Basis (h, e, f) = images of (E11, E12, E21).
  set(0, 1, 1, 1);   // [h, e] = e
  set(1, 0, 1, -1);
  set(0, 2, 2, -1);  // [h, f] = -f
  set(2, 0, 2, 1);
  set(1, 2, 0, 2);   // [e, f] = 2h
  set(2, 1, 0, -2);
  return StructureConstantAlgebra<GfElem>(std::move(table));
}

namespace {

using Mat2 = std::array<GfElem, 4>;  // row major: (0,0) (0,1) (1,0) (1,1)

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

bool invertible(const Mat2& g) { return !(g[0] * g[3] - g[1] * g[2]).is_zero(); }

// Dimension of the stabilizer, under conjugation, of the image of x in
// pgl_2: the scalar-shift sweep solves g x - x g = mu g for every mu in the
// field and records the best (solution dimension - 1) over the shifts whose
// solution space contains an invertible matrix.
int stabilizer_dim_2x2(const GfField& field, const Mat2& x) {
  const GfElem zero = field.zero();
  int best = 0;
  const auto elements = field.all_elements();
  for (const auto& mu : elements) {
    Mat<GfElem> op(4, 4, zero);
    for (std::size_t b = 0; b < 4; ++b) {
      Mat2 g{zero, zero, zero, zero};
      g[b] = field.one();
      Mat2 image = mat2_mul(g, x);
      Mat2 xg = mat2_mul(x, g);
      for (std::size_t t = 0; t < 4; ++t) image[t] = image[t] - xg[t] - mu * g[t];
      for (std::size_t t = 0; t < 4; ++t) op.at(t, b) = image[t];
    }
    const auto basis = op.kernel_basis();
    const std::size_t d = basis.size();
    if (d == 0 || static_cast<int>(d) - 1 <= best) continue;
    // The solution space only counts if it reaches the group, i.e. contains
    // an invertible matrix.
    bool found = false;
    double combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= static_cast<double>(field.order());
    if (combos <= 200000) {
      std::vector<std::size_t> idx(d, 0);
      while (true) {
        Mat2 g{zero, zero, zero, zero};
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t t = 0; t < 4; ++t) g[t] = g[t] + elements[idx[i]] * basis[i][t];
        if (invertible(g)) {
          found = true;
          break;
        }
        std::size_t at = 0;
        while (at < d && ++idx[at] == elements.size()) idx[at++] = 0;
        if (at == d) break;
      }
    } else {
      // Large field: try the basis itself, then seeded random combinations.
      for (std::size_t i = 0; i < d && !found; ++i)
        found = invertible({basis[i][0], basis[i][1], basis[i][2], basis[i][3]});
      std::mt19937_64 rng(0x5eedba11ULL ^ static_cast<std::uint64_t>(field.order()));
      for (int t = 0; t < 2000 && !found; ++t) {
        Mat2 g{zero, zero, zero, zero};
        for (std::size_t i = 0; i < d; ++i) {
          const GfElem c = elements[rng() % elements.size()];
          for (std::size_t u = 0; u < 4; ++u) g[u] = g[u] + c * basis[i][u];
        }
        found = invertible(g);
      }
    }
    if (found) best = static_cast<int>(d) - 1;
  }
  return best;
}

}  // namespace

MicroReport pgl2_micro(std::uint64_t p, int k) {
  const GfField field(p, k);
  const auto algebra = pgl2_algebra(field);
  MicroReport report;
  report.p = p;
  report.k = k;

  struct Rep {
    std::string label;
    std::vector<GfElem> lie;  // coordinates in the basis (h, e, f)
    Mat2 lift;                // a 2x2 matrix mapping onto it
    bool nilpotent;
  };
  const GfElem zero = field.zero(), one = field.one();
  std::vector<Rep> reps;
  reps.push_back({"0", {zero, zero, zero}, {zero, zero, zero, zero}, true});
  reps.push_back({"pi(E11)", {one, zero, zero}, {one, zero, zero, zero}, false});
  reps.push_back({"pi(E12)", {zero, one, zero}, {zero, one, zero, zero}, true});
  for (const auto& lambda : field.all_elements()) {
    // diag(1,0) and diag(1,1) already appear as pi(E11) and 0.
    if (lambda.is_zero() || lambda.is_one()) continue;
    // diag(1, lambda) = E11 + lambda E22, and the image of E22 is -h.
    reps.push_back({"pi(diag(1," + lambda.str() + "))",
                    {one - lambda, zero, zero},
                    {one, zero, zero, lambda},
                    false});
  }

  for (const auto& rep : reps) {
    MicroRow row;
    row.element = rep.label;
    row.centralizer_dim = algebra.centralizer_dim(rep.lie);
    row.stabilizer_dim = stabilizer_dim_2x2(field, rep.lift);
    row.nilpotent = rep.nilpotent;
    if (row.centralizer_dim != row.stabilizer_dim) report.centralizers_equal_stabilizers = false;
    if (row.nilpotent && row.centralizer_dim > row.stabilizer_dim)
      report.nilpotent_centralizer_exceeds_stabilizer = true;
    if (row.nilpotent && row.centralizer_dim == 1) report.level_one_nilpotent_free = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace declass
