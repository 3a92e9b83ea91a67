#include "odac/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "odac/intutil.hpp"

namespace odac {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p: little-endian coefficient vectors, reduced mod p.
// ---------------------------------------------------------------------------

using Poly = std::vector<std::uint64_t>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod_u64(a[i], c, p);
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  return poly_trim(std::move(r));
}

// remainder of a modulo b, b nonzero
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  a = poly_trim(std::move(a));
  std::uint64_t lead_inv = invmod_u64(b.back(), p);
  while (poly_deg(a) >= poly_deg(b)) {
    std::uint64_t c = mulmod_u64(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t s = mulmod_u64(c, b[i], p);
      a[i + shift] = (a[i + shift] + p - s) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = poly_scale(a, invmod_u64(a.back(), p), p);  // monic
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// x^(p^d) mod f, by iterating d applications of the p-th power
Poly frobenius_iter(unsigned d, const Poly& f, std::uint64_t p) {
  Poly t{0, 1};  // x
  for (unsigned i = 0; i < d; ++i) t = poly_powmod(std::move(t), p, f, p);
  return t;
}

// Rabin's irreducibility test for a monic f of degree k >= 1 over F_p.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
  int k = poly_deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  Poly x{0, 1};
  // x^(p^k) == x (mod f)
  Poly xpk = frobenius_iter(static_cast<unsigned>(k), f, p);
  if (poly_trim(poly_add(xpk, poly_scale(x, p - 1, p), p)) != Poly{}) return false;
  for (auto [q, e] : factorize_u64(static_cast<std::uint64_t>(k))) {
    (void)e;
    Poly xpd = frobenius_iter(static_cast<unsigned>(k / q), f, p);
    Poly diff = poly_add(xpd, poly_scale(x, p - 1, p), p);
    Poly g = poly_gcd(f, diff, p);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

Poly default_modulus_poly(std::uint64_t p, std::uint32_t k) {
  // least irreducible x^k + c_{k-1} x^{k-1} + ... + c_0, comparing the tuple
  // (c_{k-1}, ..., c_0); equivalently counting v = sum c_i p^i upward
  std::uint64_t total = pow_u64(p, k);
  for (std::uint64_t v = 0; v < total; ++v) {
    Poly f(k + 1, 0);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < k; ++i) { f[i] = t % p; t /= p; }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  fail("internal", "no irreducible polynomial found");  // unreachable for k >= 1
}

constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 62;
constexpr std::uint64_t kMaxPrime = std::uint64_t(1) << 31;

}  // namespace

// ---------------------------------------------------------------------------
// Ring construction
// ---------------------------------------------------------------------------

RingPtr Ring::zm(std::uint64_t modulus) {
  if (modulus < 2) fail("invalid-ring", "Z_m requires m >= 2");
  if (modulus > kMaxModulus) fail("invalid-ring", "modulus too large");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Zm;
  r->modulus_ = modulus;
  return r;
}

RingPtr Ring::gf(std::uint64_t p, std::uint32_t k) {
  if (!is_prime_u64(p)) fail("invalid-ring", "GF characteristic must be prime");
  if (p > kMaxPrime) fail("invalid-ring", "GF characteristic too large");
  if (k < 1 || k > 62) fail("invalid-ring", "GF degree out of range");
  return gf(p, k, default_modulus_poly(p, k));
}

RingPtr Ring::gf(std::uint64_t p, std::uint32_t k, std::vector<std::uint64_t> poly) {
  if (!is_prime_u64(p)) fail("invalid-ring", "GF characteristic must be prime");
  if (p > kMaxPrime) fail("invalid-ring", "GF characteristic too large");
  if (k < 1 || k > 62) fail("invalid-ring", "GF degree out of range");
  if (poly.size() != static_cast<std::size_t>(k) + 1 || poly[k] != 1)
    fail("invalid-ring", "modulus polynomial must be monic of degree k");
  for (auto& c : poly) c %= p;
  poly[k] = 1;
  if (!poly_irreducible(poly, p)) fail("invalid-ring", "modulus polynomial is reducible");
  double bits = k * std::log2(double(p));
  if (bits > 62) fail("invalid-ring", "field too large");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::GF;
  r->p_ = p;
  r->k_ = k;
  r->poly_ = std::move(poly);
  return r;
}

RingPtr Ring::product(std::vector<RingPtr> factors) {
  if (factors.size() < 2) fail("invalid-ring", "product needs at least two factors");
  for (const auto& f : factors)
    if (f->is_product()) fail("invalid-ring", "product factors must not be products");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Product;
  r->factors_ = std::move(factors);
  return r;
}

// ---------------------------------------------------------------------------
// Basic queries
// ---------------------------------------------------------------------------

std::uint64_t Ring::characteristic() const {
  switch (kind_) {
    case Kind::Zm: return modulus_;
    case Kind::GF: return p_;
    case Kind::Product: {
      std::uint64_t c = 1;
      for (const auto& f : factors_) c = std::lcm(c, f->characteristic());
      return c;
    }
  }
  return 0;
}

std::uint64_t Ring::size() const {
  switch (kind_) {
    case Kind::Zm: return modulus_;
    case Kind::GF: return pow_u64(p_, k_);
    case Kind::Product: {
      std::uint64_t s = 1;
      for (const auto& f : factors_) s *= f->size();
      return s;
    }
  }
  return 0;
}

bool Ring::is_local() const {
  switch (kind_) {
    case Kind::GF: return true;
    case Kind::Zm: return factorize_u64(modulus_).size() == 1;
    case Kind::Product: return false;
  }
  return false;
}

bool Ring::is_field() const {
  return kind_ == Kind::GF || (kind_ == Kind::Zm && is_prime_u64(modulus_));
}

std::uint64_t Ring::residue_char() const {
  switch (kind_) {
    case Kind::GF: return p_;
    case Kind::Zm: {
      auto f = factorize_u64(modulus_);
      if (f.size() != 1) fail("invalid-ring", "residue_char on a non-local ring");
      return f[0].first;
    }
    case Kind::Product: fail("invalid-ring", "residue_char on a product ring");
  }
  return 0;
}

bool Ring::same(const Ring& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Zm: return modulus_ == o.modulus_;
    case Kind::GF: return p_ == o.p_ && k_ == o.k_ && poly_ == o.poly_;
    case Kind::Product: {
      if (factors_.size() != o.factors_.size()) return false;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->same(*o.factors_[i])) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Element construction
// ---------------------------------------------------------------------------

void Ring::check_mine(const RingElem& a) const {
  if (!a.valid() || (a.ring().get() != this && !a.ring()->same(*this)))
    fail("ring-mismatch", "element does not belong to this ring");
}

RingElem Ring::make_zm(std::uint64_t v) const {
  if (kind_ != Kind::Zm) fail("ring-mismatch", "make_zm on a non-Zm ring");
  return RingElem(self(), RingElem::Payload(std::in_place_index<0>, v % modulus_));
}

RingElem Ring::make_gf(const std::vector<std::uint64_t>& coeffs) const {
  if (kind_ != Kind::GF) fail("ring-mismatch", "make_gf on a non-GF ring");
  if (coeffs.size() > k_) fail("invalid-elem", "too many coefficients");
  RingElem::GfCoeffs c(k_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
  return RingElem(self(), RingElem::Payload(std::in_place_index<1>, std::move(c)));
}

RingElem Ring::make_tuple(std::vector<RingElem> parts) const {
  if (kind_ != Kind::Product) fail("ring-mismatch", "make_tuple on a non-product ring");
  if (parts.size() != factors_.size()) fail("invalid-elem", "wrong tuple arity");
  for (std::size_t i = 0; i < parts.size(); ++i) factors_[i]->check_mine(parts[i]);
  return RingElem(self(), RingElem::Payload(std::in_place_index<2>, std::move(parts)));
}

RingElem Ring::zero() const { return from_int(0); }
RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(std::int64_t v) const {
  switch (kind_) {
    case Kind::Zm: {
      std::int64_t m = static_cast<std::int64_t>(modulus_);
      std::int64_t r = v % m;
      if (r < 0) r += m;
      return make_zm(static_cast<std::uint64_t>(r));
    }
    case Kind::GF: {
      std::int64_t m = static_cast<std::int64_t>(p_);
      std::int64_t r = v % m;
      if (r < 0) r += m;
      return make_gf({static_cast<std::uint64_t>(r)});
    }
    case Kind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (const auto& f : factors_) parts.push_back(f->from_int(v));
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

RingElem Ring::elem_at(std::uint64_t index) const {
  switch (kind_) {
    case Kind::Zm: return make_zm(index % modulus_);
    case Kind::GF: {
      std::vector<std::uint64_t> c(k_);
      for (std::uint32_t i = 0; i < k_; ++i) { c[i] = index % p_; index /= p_; }
      return make_gf(c);
    }
    case Kind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (const auto& f : factors_) {
        std::uint64_t s = f->size();
        parts.push_back(f->elem_at(index % s));
        index /= s;
      }
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

namespace {
const std::uint64_t& zm_of(const RingElem& a) { return std::get<0>(a.payload()); }
const RingElem::GfCoeffs& gf_of(const RingElem& a) { return std::get<1>(a.payload()); }
const RingElem::Tuple& tup_of(const RingElem& a) { return std::get<2>(a.payload()); }
}  // namespace

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  check_mine(a); check_mine(b);
  switch (kind_) {
    case Kind::Zm: return make_zm(zm_of(a) + zm_of(b) >= modulus_ ? zm_of(a) + zm_of(b) - modulus_
                                                                  : zm_of(a) + zm_of(b));
    case Kind::GF: {
      const auto& x = gf_of(a); const auto& y = gf_of(b);
      std::vector<std::uint64_t> c(k_);
      for (std::uint32_t i = 0; i < k_; ++i) c[i] = (x[i] + y[i]) % p_;
      return make_gf(c);
    }
    case Kind::Product: {
      const auto& x = tup_of(a); const auto& y = tup_of(b);
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->add(x[i], y[i]));
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

RingElem Ring::neg(const RingElem& a) const {
  check_mine(a);
  switch (kind_) {
    case Kind::Zm: return make_zm(zm_of(a) == 0 ? 0 : modulus_ - zm_of(a));
    case Kind::GF: {
      const auto& x = gf_of(a);
      std::vector<std::uint64_t> c(k_);
      for (std::uint32_t i = 0; i < k_; ++i) c[i] = x[i] == 0 ? 0 : p_ - x[i];
      return make_gf(c);
    }
    case Kind::Product: {
      const auto& x = tup_of(a);
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->neg(x[i]));
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  check_mine(a); check_mine(b);
  switch (kind_) {
    case Kind::Zm: return make_zm(mulmod_u64(zm_of(a), zm_of(b), modulus_));
    case Kind::GF: {
      const auto& x = gf_of(a); const auto& y = gf_of(b);
      Poly prod(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i) {
        if (x[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + mulmod_u64(x[i], y[j], p_)) % p_;
      }
      Poly red = poly_mod(std::move(prod), poly_, p_);
      red.resize(k_, 0);
      return make_gf(red);
    }
    case Kind::Product: {
      const auto& x = tup_of(a); const auto& y = tup_of(b);
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->mul(x[i], y[i]));
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

bool Ring::is_unit(const RingElem& a) const {
  check_mine(a);
  switch (kind_) {
    case Kind::Zm: return std::gcd(zm_of(a), modulus_) == 1;
    case Kind::GF: return !a.is_zero();
    case Kind::Product: {
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->is_unit(tup_of(a)[i])) return false;
      return true;
    }
  }
  return false;
}

RingElem Ring::inv(const RingElem& a) const {
  if (!is_unit(a)) fail("non-unit", "inverse of a non-unit: " + a.str());
  switch (kind_) {
    case Kind::Zm: return make_zm(invmod_u64(zm_of(a), modulus_));
    case Kind::GF: {
      // extended Euclid in F_p[x]: u*a + v*f = 1
      Poly r0(poly_), r1(gf_of(a).begin(), gf_of(a).end());
      r1 = poly_trim(std::move(r1));
      Poly s0{}, s1{1};
      while (!r1.empty() && poly_deg(r1) > 0) {
        // r0 = q*r1 + r2
        Poly q{}, rem = r0;
        std::uint64_t lead_inv = invmod_u64(r1.back(), p_);
        q.assign(rem.size() > r1.size() - 1 ? rem.size() - r1.size() + 1 : 1, 0);
        while (poly_deg(rem) >= poly_deg(r1)) {
          std::uint64_t c = mulmod_u64(rem.back(), lead_inv, p_);
          std::size_t shift = rem.size() - r1.size();
          q[shift] = c;
          for (std::size_t i = 0; i < r1.size(); ++i) {
            std::uint64_t s = mulmod_u64(c, r1[i], p_);
            rem[i + shift] = (rem[i + shift] + p_ - s) % p_;
          }
          rem = poly_trim(std::move(rem));
        }
        Poly s2 = poly_add(s0, poly_scale(poly_mul(q, s1, p_), p_ - 1, p_), p_);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
      }
      // r1 is a nonzero constant; scale s1 by its inverse
      std::uint64_t c = invmod_u64(r1.empty() ? 1 : r1[0], p_);
      Poly res = poly_scale(s1, c, p_);
      res.resize(k_, 0);
      return make_gf(res);
    }
    case Kind::Product: {
      std::vector<RingElem> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->inv(tup_of(a)[i]));
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

// ---------------------------------------------------------------------------
// RingElem forwarding
// ---------------------------------------------------------------------------

bool RingElem::is_zero() const {
  switch (payload_.index()) {
    case 0: return std::get<0>(payload_) == 0;
    case 1: {
      for (std::uint64_t c : std::get<1>(payload_))
        if (c != 0) return false;
      return true;
    }
    default: {
      for (const RingElem& p : std::get<2>(payload_))
        if (!p.is_zero()) return false;
      return true;
    }
  }
}

bool RingElem::is_one() const {
  switch (payload_.index()) {
    case 0: return std::get<0>(payload_) == 1;
    case 1: {
      const auto& c = std::get<1>(payload_);
      if (c.empty() || c[0] != 1) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
      return true;
    }
    default: {
      for (const RingElem& p : std::get<2>(payload_))
        if (!p.is_one()) return false;
      return true;
    }
  }
}
bool RingElem::is_unit() const { return ring_->is_unit(*this); }
RingElem RingElem::inv() const { return ring_->inv(*this); }
RingElem RingElem::operator-() const { return ring_->neg(*this); }

RingElem operator+(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  return a.ring()->add(a, b);
}
RingElem operator-(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  return a.ring()->sub(a, b);
}
RingElem operator*(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  return a.ring()->mul(a, b);
}

std::uint64_t RingElem::index() const {
  switch (ring_->kind()) {
    case Ring::Kind::Zm: return std::get<0>(payload_);
    case Ring::Kind::GF: {
      const auto& c = std::get<1>(payload_);
      std::uint64_t idx = 0;
      for (std::size_t i = c.size(); i-- > 0;) idx = idx * ring_->gf_p() + c[i];
      return idx;
    }
    case Ring::Kind::Product: {
      const auto& parts = std::get<2>(payload_);
      std::uint64_t idx = 0;
      for (std::size_t i = parts.size(); i-- > 0;)
        idx = idx * ring_->factors()[i]->size() + parts[i].index();
      return idx;
    }
  }
  return 0;
}

std::string RingElem::str() const {
  switch (ring_->kind()) {
    case Ring::Kind::Zm: return std::to_string(std::get<0>(payload_));
    case Ring::Kind::GF: {
      const auto& c = std::get<1>(payload_);
      std::string s;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
      }
      return s;
    }
    case Ring::Kind::Product: {
      const auto& parts = std::get<2>(payload_);
      std::string s = "[";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i].str();
      }
      return s + "]";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Text forms
// ---------------------------------------------------------------------------

std::string Ring::descriptor() const {
  switch (kind_) {
    case Kind::Zm: return "Z" + std::to_string(modulus_);
    case Kind::GF: {
      std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ");poly=";
      for (std::size_t i = 0; i < poly_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(poly_[i]);
      }
      return s;
    }
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += factors_[i]->descriptor();
      }
      return s;
    }
  }
  return {};
}

namespace {

std::string strip_spaces(std::string_view sv) {
  std::string s;
  for (char c : sv)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

std::uint64_t parse_u64(std::string_view sv, const char* what) {
  if (sv.empty()) fail("parse-error", std::string("expected a number in ") + what);
  std::uint64_t v = 0;
  for (char c : sv) {
    if (c < '0' || c > '9') fail("parse-error", std::string("bad number in ") + what);
    if (v > (std::uint64_t(-1) - 9) / 10) fail("parse-error", "number overflow");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

RingPtr parse_atom(const std::string& s) {
  if (s.size() >= 2 && s[0] == 'Z')
    return Ring::zm(parse_u64(std::string_view(s).substr(1), "Z<m>"));
  if (s.rfind("GF(", 0) == 0) {
    std::size_t close = s.find(')');
    if (close == std::string::npos) fail("parse-error", "unterminated GF(...)");
    std::string inner = s.substr(3, close - 3);
    std::size_t caret = inner.find('^');
    if (caret == std::string::npos) fail("parse-error", "GF descriptor needs p^k");
    std::uint64_t p = parse_u64(std::string_view(inner).substr(0, caret), "GF(p^k)");
    std::uint64_t k = parse_u64(std::string_view(inner).substr(caret + 1), "GF(p^k)");
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return Ring::gf(p, static_cast<std::uint32_t>(k));
    if (rest.rfind(";poly=", 0) != 0) fail("parse-error", "unexpected text after GF(...)");
    std::vector<std::uint64_t> poly;
    for (const auto& tok : split_on(rest.substr(6), ','))
      poly.push_back(parse_u64(tok, "poly"));
    return Ring::gf(p, static_cast<std::uint32_t>(k), std::move(poly));
  }
  fail("parse-error", "unrecognized ring descriptor: " + s);
}

}  // namespace

RingPtr parse_ring(std::string_view descriptor) {
  std::string s = strip_spaces(descriptor);
  if (s.empty()) fail("parse-error", "empty ring descriptor");
  std::vector<std::string> parts = split_on(s, 'x');
  if (parts.size() == 1) return parse_atom(parts[0]);
  std::vector<RingPtr> factors;
  factors.reserve(parts.size());
  for (const auto& part : parts) {
    if (part.empty()) fail("parse-error", "empty factor in product descriptor");
    factors.push_back(parse_atom(part));
  }
  return Ring::product(std::move(factors));
}

RingElem Ring::parse_elem(std::string_view text) const {
  std::string s = strip_spaces(text);
  switch (kind_) {
    case Kind::Zm: return make_zm(parse_u64(s, "Z_m element"));
    case Kind::GF: {
      auto toks = split_on(s, ',');
      if (toks.size() != k_) fail("parse-error", "GF element needs k coefficients");
      std::vector<std::uint64_t> c;
      c.reserve(k_);
      for (const auto& t : toks) c.push_back(parse_u64(t, "GF coefficient"));
      return make_gf(c);
    }
    case Kind::Product: {
      if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail("parse-error", "product element needs [ ... ]");
      auto toks = split_on(s.substr(1, s.size() - 2), ',');
      // each Zm factor consumes one token, each GF(p,k) factor k tokens
      std::vector<RingElem> parts;
      std::size_t pos = 0;
      for (const auto& f : factors_) {
        std::size_t need = f->is_gf() ? f->gf_degree() : 1;
        if (pos + need > toks.size()) fail("parse-error", "short product element tuple");
        std::string joined;
        for (std::size_t i = 0; i < need; ++i) {
          if (i) joined += ',';
          joined += toks[pos + i];
        }
        pos += need;
        parts.push_back(f->parse_elem(joined));
      }
      if (pos != toks.size()) fail("parse-error", "trailing tokens in product element");
      return make_tuple(std::move(parts));
    }
  }
  fail("internal", "bad ring kind");
}

// ---------------------------------------------------------------------------
// Local factorization
// ---------------------------------------------------------------------------

LocalFactorization::LocalFactorization(RingPtr original) : original_(std::move(original)) {
  switch (original_->kind()) {
    case Ring::Kind::GF:
      factors_ = {original_};
      break;
    case Ring::Kind::Zm: {
      std::uint64_t m = original_->zm_modulus();
      auto primes = factorize_u64(m);  // ascending primes = ascending residue char
      if (primes.size() == 1) {
        factors_ = {original_};
        break;
      }
      for (auto [p, e] : primes) {
        std::uint64_t q = pow_u64(p, e);
        crt_moduli_.push_back(q);
        factors_.push_back(Ring::zm(q));
      }
      for (std::uint64_t q : crt_moduli_) {
        std::uint64_t rest = m / q;
        crt_mult_.push_back(mulmod_u64(rest % m, invmod_u64(rest % q, q), m));
      }
      break;
    }
    case Ring::Kind::Product: {
      struct Slot {
        std::uint64_t p, size;
        std::size_t flat;
      };
      std::vector<Slot> slots;
      std::size_t flat = 0;
      for (const auto& f : original_->factors()) {
        children_.emplace_back(f);
        for (const auto& lf : children_.back().factors()) {
          slots.push_back({lf->residue_char(), lf->size(), flat++});
        }
      }
      std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.size < b.size;
      });
      for (const auto& s : slots) perm_.push_back(s.flat);
      for (const auto& s : slots) {
        // locate the child factor behind flattened slot s.flat
        std::size_t idx = s.flat;
        for (const auto& child : children_) {
          if (idx < child.count()) { factors_.push_back(child.factors()[idx]); break; }
          idx -= child.count();
        }
      }
      break;
    }
  }
}

std::vector<RingElem> LocalFactorization::to_components(const RingElem& a) const {
  switch (original_->kind()) {
    case Ring::Kind::GF: return {a};
    case Ring::Kind::Zm: {
      if (factors_.size() == 1) return {a};
      std::uint64_t v = std::get<0>(a.payload());
      std::vector<RingElem> out;
      out.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        out.push_back(factors_[i]->make_zm(v % crt_moduli_[i]));
      return out;
    }
    case Ring::Kind::Product: {
      const auto& parts = std::get<2>(a.payload());
      std::vector<RingElem> flat;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        auto sub = children_[i].to_components(parts[i]);
        flat.insert(flat.end(), sub.begin(), sub.end());
      }
      std::vector<RingElem> out;
      out.reserve(flat.size());
      for (std::size_t slot : perm_) out.push_back(flat[slot]);
      return out;
    }
  }
  fail("internal", "bad ring kind");
}

RingElem LocalFactorization::from_components(const std::vector<RingElem>& parts) const {
  if (parts.size() != factors_.size())
    fail("factor-mismatch", "component count does not match factorization");
  switch (original_->kind()) {
    case Ring::Kind::GF: return parts[0];
    case Ring::Kind::Zm: {
      if (factors_.size() == 1) return parts[0];
      std::uint64_t m = original_->zm_modulus();
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::uint64_t vi = std::get<0>(parts[i].payload());
        v = (v + mulmod_u64(vi, crt_mult_[i], m)) % m;
      }
      return original_->make_zm(v);
    }
    case Ring::Kind::Product: {
      std::vector<RingElem> flat(parts.size());
      for (std::size_t i = 0; i < perm_.size(); ++i) flat[perm_[i]] = parts[i];
      std::vector<RingElem> tuple;
      std::size_t pos = 0;
      for (const auto& child : children_) {
        std::vector<RingElem> sub(flat.begin() + pos, flat.begin() + pos + child.count());
        pos += child.count();
        tuple.push_back(child.from_components(sub));
      }
      return original_->make_tuple(std::move(tuple));
    }
  }
  fail("internal", "bad ring kind");
}

LocalFactorization decompose_local(const RingPtr& ring) { return LocalFactorization(ring); }

}  // namespace odac
