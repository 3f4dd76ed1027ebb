#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace declass {

bool is_prime(std::uint64_t n);

constexpr int kGfMaxDegree = 6;

class GfElem;

/// F_{p^k} presented as F_p[x] modulo a fixed monic irreducible polynomial;
/// k == 1 degenerates to plain arithmetic mod p.  The reduction polynomial
/// comes from a small published table for p in {2,3,5,7}, k in {2,3}; other
/// shapes fall back to the first monic irreducible in counting order, so the
/// choice is deterministic either way.
class GfField {
 public:
  GfField(std::uint64_t p, int k);

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t order() const;  // p^k

  /// Non-leading coefficients of the reduction polynomial, low degree first:
  /// the field is F_p[x] / (x^k + m[k-1] x^{k-1} + ... + m[0]).
  std::vector<std::uint64_t> modulus() const;

  GfElem zero() const;
  GfElem one() const;
  GfElem from_int(long long v) const;
  GfElem element(const std::vector<std::uint64_t>& coeffs) const;  // low degree first
  /// All field elements in a fixed counting order (base-p digits, low first).
  std::vector<GfElem> all_elements() const;

  bool operator==(const GfField& o) const = default;

 private:
  std::uint64_t p_ = 0;
  int k_ = 0;
  std::array<std::uint64_t, kGfMaxDegree> mod_{};
};

/// Value type: an element of some F_{p^k}.  Each element carries its field
/// description, so copies are always coherent; arithmetic between elements of
/// different fields throws std::invalid_argument.  A default-constructed
/// element belongs to no field and may not be used in arithmetic.
class GfElem {
 public:
  GfElem() = default;

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  GfField field() const;

  bool is_zero() const;
  bool is_one() const;
  std::uint64_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  GfElem zero_like() const;  // 0 and 1 of this element's field, cheaply
  GfElem one_like() const;

  GfElem operator+(const GfElem& o) const;
  GfElem operator-(const GfElem& o) const;
  GfElem operator-() const;
  GfElem operator*(const GfElem& o) const;
  GfElem operator/(const GfElem& o) const;
  GfElem inverse() const;
  GfElem pow(std::uint64_t e) const;

  bool operator==(const GfElem& o) const;
  bool operator!=(const GfElem& o) const { return !(*this == o); }
  /// Total order (field description, then coefficients); usable as a map key.
  bool operator<(const GfElem& o) const;

  /// Readable form: "0", "1", "x^2+2*x+1", or the residue for k == 1.
  std::string str() const;

 private:
  friend class GfField;
  void check_usable() const;
  void check_same(const GfElem& o) const;
  std::uint64_t p_ = 0;
  int k_ = 0;
  std::array<std::uint64_t, kGfMaxDegree> mod_{};
  std::array<std::uint64_t, kGfMaxDegree> c_{};
};

inline GfElem scalar_zero(const GfElem& x) { return x.zero_like(); }
inline GfElem scalar_one(const GfElem& x) { return x.one_like(); }

}  // namespace declass
