#include "declass/gf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace declass {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p, low degree first, no trailing-zero guarantee.
using Poly = std::vector<std::uint64_t>;

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and a != 0 mod p.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Poly pmul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

Poly psub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
  return a;
}

// Division with remainder by a polynomial with invertible leading coefficient.
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, std::uint64_t p) {
  int db = degree(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  std::uint64_t lead_inv = mod_inverse(b[static_cast<std::size_t>(db)], p);
  int da = degree(a);
  Poly q(da >= db ? static_cast<std::size_t>(da - db + 1) : 1, 0);
  while (da >= db) {
    std::uint64_t f = a[static_cast<std::size_t>(da)] * lead_inv % p;
    q[static_cast<std::size_t>(da - db)] = f;
    for (int i = 0; i <= db; ++i) {
      auto ai = static_cast<std::size_t>(da - db + i);
      a[ai] = (a[ai] + p - f * b[static_cast<std::size_t>(i)] % p) % p;
    }
    da = degree(a);
  }
  return {q, a};
}

Poly pmod(const Poly& a, const Poly& m, std::uint64_t p) { return pdivmod(a, m, p).second; }

// Bezout coefficient u with u*a = gcd(a, m) mod m; used with irreducible m
// and a != 0, so the gcd is a nonzero constant.
Poly pinvert(const Poly& a, const Poly& m, std::uint64_t p) {
  Poly r0 = m, r1 = pmod(a, m, p);
  Poly s0 = {0}, s1 = {1};
  while (degree(r1) >= 0) {
    auto [q, r] = pdivmod(r0, r1, p);
    r0 = r1;
    r1 = r;
    Poly s2 = psub(s0, pmul(q, s1, p), p);
    s0 = s1;
    s1 = s2;
  }
  int d = degree(r0);
  if (d != 0) throw std::invalid_argument("element not invertible (reducible modulus?)");
  std::uint64_t c = mod_inverse(r0[0], p);
  Poly u = s0;
  for (auto& x : u) x = x * c % p;
  return pmod(u, m, p);
}

// Full modulus polynomial (monic, degree k) from the non-leading coefficients.
Poly full_modulus(const std::array<std::uint64_t, kGfMaxDegree>& mod, int k) {
  Poly m(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)] = mod[static_cast<std::size_t>(i)];
  m[static_cast<std::size_t>(k)] = 1;
  return m;
}

// A monic polynomial of degree k >= 2 is reducible iff some monic polynomial
// of degree 1..k/2 divides it; fields here are tiny, so test them all.
bool is_irreducible(const Poly& f, int k, std::uint64_t p) {
  if (f[0] == 0) return false;  // divisible by x
  for (int d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (degree(pmod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

// Published reduction polynomials (non-leading coefficients, low degree
// first).  Everything else is found by the deterministic search below.
const std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>>& modulus_table() {
  static const std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> table = {
      {{2, 2}, {1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0}},  // x^3 + x + 1
      {{3, 2}, {1, 0}},     // x^2 + 1
      {{3, 3}, {1, 2, 0}},  // x^3 + 2x + 1
      {{5, 2}, {2, 0}},     // x^2 + 2
      {{5, 3}, {1, 1, 0}},  // x^3 + x + 1
      {{7, 2}, {1, 0}},     // x^2 + 1
      {{7, 3}, {1, 1, 0}},  // x^3 + x + 1
  };
  return table;
}

}  // namespace

GfField::GfField(std::uint64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("GfField: p must be prime");
  if (k < 1 || k > kGfMaxDegree) throw std::invalid_argument("GfField: k out of range");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > (std::uint64_t(1) << 40) / p) throw std::invalid_argument("GfField: p^k too large");
    q *= p;
  }
  if (k == 1) return;
  auto it = modulus_table().find({p, k});
  if (it != modulus_table().end()) {
    for (int i = 0; i < k; ++i) mod_[static_cast<std::size_t>(i)] = it->second[static_cast<std::size_t>(i)];
    return;
  }
  // First irreducible in counting order over the non-leading coefficients.
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::array<std::uint64_t, kGfMaxDegree> cand{};
    std::uint64_t v = idx;
    for (int i = 0; i < k; ++i) {
      cand[static_cast<std::size_t>(i)] = v % p;
      v /= p;
    }
    if (is_irreducible(full_modulus(cand, k), k, p)) {
      mod_ = cand;
      return;
    }
  }
  throw std::logic_error("GfField: no irreducible polynomial found");  // unreachable
}

std::uint64_t GfField::order() const {
  std::uint64_t q = 1;
  for (int i = 0; i < k_; ++i) q *= p_;
  return q;
}

std::vector<std::uint64_t> GfField::modulus() const {
  return std::vector<std::uint64_t>(mod_.begin(), mod_.begin() + k_);
}

GfElem GfField::zero() const { return from_int(0); }

GfElem GfField::one() const { return from_int(1); }

GfElem GfField::from_int(long long v) const {
  GfElem e;
  e.p_ = p_;
  e.k_ = k_;
  e.mod_ = mod_;
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  e.c_[0] = static_cast<std::uint64_t>(r);
  return e;
}

GfElem GfField::element(const std::vector<std::uint64_t>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(k_))
    throw std::invalid_argument("GfField::element: too many coefficients");
  GfElem e = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = coeffs[i] % p_;
  return e;
}

std::vector<GfElem> GfField::all_elements() const {
  std::vector<GfElem> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::uint64_t idx = 0; idx < order(); ++idx) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(k_), 0);
    std::uint64_t v = idx;
    for (int i = 0; i < k_; ++i) {
      coeffs[static_cast<std::size_t>(i)] = v % p_;
      v /= p_;
    }
    out.push_back(element(coeffs));
  }
  return out;
}

GfField GfElem::field() const {
  check_usable();
  GfField f(p_, k_);
  // Rebuild deterministically; the modulus of a valid element always matches.
  return f;
}

GfElem GfElem::zero_like() const {
  check_usable();
  GfElem r = *this;
  r.c_.fill(0);
  return r;
}

GfElem GfElem::one_like() const {
  GfElem r = zero_like();
  r.c_[0] = 1;
  return r;
}

void GfElem::check_usable() const {
  if (p_ == 0) throw std::invalid_argument("GfElem: default-constructed element used");
}

void GfElem::check_same(const GfElem& o) const {
  check_usable();
  o.check_usable();
  if (p_ != o.p_ || k_ != o.k_ || mod_ != o.mod_)
    throw std::invalid_argument("GfElem: mixed fields in one expression");
}

bool GfElem::is_zero() const {
  check_usable();
  for (int i = 0; i < k_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool GfElem::is_one() const {
  check_usable();
  if (c_[0] != 1) return false;
  for (int i = 1; i < k_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

GfElem GfElem::operator+(const GfElem& o) const {
  check_same(o);
  GfElem r = *this;
  for (int i = 0; i < k_; ++i) {
    auto s = static_cast<std::size_t>(i);
    r.c_[s] = (c_[s] + o.c_[s]) % p_;
  }
  return r;
}

GfElem GfElem::operator-(const GfElem& o) const {
  check_same(o);
  GfElem r = *this;
  for (int i = 0; i < k_; ++i) {
    auto s = static_cast<std::size_t>(i);
    r.c_[s] = (c_[s] + p_ - o.c_[s]) % p_;
  }
  return r;
}

GfElem GfElem::operator-() const {
  check_usable();
  GfElem r = *this;
  for (int i = 0; i < k_; ++i) {
    auto s = static_cast<std::size_t>(i);
    r.c_[s] = (p_ - c_[s]) % p_;
  }
  return r;
}

GfElem GfElem::operator*(const GfElem& o) const {
  check_same(o);
  Poly a(c_.begin(), c_.begin() + k_), b(o.c_.begin(), o.c_.begin() + k_);
  Poly prod = pmod(pmul(a, b, p_), full_modulus(mod_, k_), p_);
  GfElem r = *this;
  r.c_.fill(0);
  for (std::size_t i = 0; i < prod.size() && i < static_cast<std::size_t>(k_); ++i) r.c_[i] = prod[i];
  return r;
}

GfElem GfElem::inverse() const {
  check_usable();
  if (is_zero()) throw std::invalid_argument("GfElem: inverse of zero");
  Poly a(c_.begin(), c_.begin() + k_);
  Poly inv = pinvert(a, full_modulus(mod_, k_), p_);
  GfElem r = *this;
  r.c_.fill(0);
  for (std::size_t i = 0; i < inv.size() && i < static_cast<std::size_t>(k_); ++i) r.c_[i] = inv[i];
  return r;
}

GfElem GfElem::operator/(const GfElem& o) const { return *this * o.inverse(); }

GfElem GfElem::pow(std::uint64_t e) const {
  check_usable();
  GfElem base = *this;
  GfElem r = field().one();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool GfElem::operator==(const GfElem& o) const {
  return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_ && c_ == o.c_;
}

bool GfElem::operator<(const GfElem& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  if (k_ != o.k_) return k_ < o.k_;
  if (mod_ != o.mod_) return mod_ < o.mod_;
  return c_ < o.c_;
}

std::string GfElem::str() const {
  check_usable();
  if (k_ == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    std::uint64_t v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << v;
    } else {
      if (v != 1) os << v << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace declass
