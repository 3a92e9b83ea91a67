#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "odac/errors.hpp"

namespace odac {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element of a finite commutative ring with identity, always held as the
/// canonical representative: Z_m values in [0, m); GF coefficient vectors
/// reduced mod p (little-endian in powers of the generator); product tuples
/// componentwise canonical. Immutable after construction.
class RingElem {
public:
  using GfCoeffs = boost::container::small_vector<std::uint64_t, 4>;
  using Tuple = std::vector<RingElem>;
  using Payload = std::variant<std::uint64_t, GfCoeffs, Tuple>;

  RingElem() = default;  // invalid; for container resizing only

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  RingElem inv() const;  // throws Error("non-unit") when !is_unit()

  std::uint64_t index() const;  // position in [0, |R|) under the canonical enumeration
  std::string str() const;      // text encoding used in certificates

  const Payload& payload() const { return payload_; }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

  bool operator==(const RingElem& o) const { return payload_ == o.payload_; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }

private:
  friend class Ring;
  RingElem(RingPtr r, Payload p) : ring_(std::move(r)), payload_(std::move(p)) {}

  RingPtr ring_;
  Payload payload_;
};

/// A finite commutative ring with identity: Z_m (m >= 2), GF(p^k) presented by
/// a monic irreducible modulus polynomial over F_p, or a finite product of
/// non-product rings. Instances are immutable and shared via RingPtr.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  enum class Kind { Zm, GF, Product };

  static RingPtr zm(std::uint64_t modulus);
  /// GF with the default modulus polynomial: the least monic irreducible of
  /// degree k, coefficient tuples compared from the highest degree downward.
  static RingPtr gf(std::uint64_t p, std::uint32_t k);
  /// GF with an explicit monic modulus polynomial c0..ck (ck = 1), checked
  /// irreducible over F_p.
  static RingPtr gf(std::uint64_t p, std::uint32_t k, std::vector<std::uint64_t> poly);
  static RingPtr product(std::vector<RingPtr> factors);

  Kind kind() const { return kind_; }
  bool is_zm() const { return kind_ == Kind::Zm; }
  bool is_gf() const { return kind_ == Kind::GF; }
  bool is_product() const { return kind_ == Kind::Product; }

  std::uint64_t zm_modulus() const { return modulus_; }
  std::uint64_t gf_p() const { return p_; }
  std::uint32_t gf_degree() const { return k_; }
  const std::vector<std::uint64_t>& gf_poly() const { return poly_; }
  const std::vector<RingPtr>& factors() const { return factors_; }

  std::uint64_t characteristic() const;  // additive order of 1
  std::uint64_t size() const;
  /// Local = has a unique maximal ideal: GF fields and Z_{p^a}.
  bool is_local() const;
  bool is_field() const;
  /// Residue characteristic of a local ring (p for both Z_{p^a} and GF(p^k)).
  std::uint64_t residue_char() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(std::int64_t v) const;
  RingElem make_zm(std::uint64_t v) const;
  RingElem make_gf(const std::vector<std::uint64_t>& coeffs) const;
  RingElem make_tuple(std::vector<RingElem> parts) const;
  RingElem elem_at(std::uint64_t index) const;

  bool same(const Ring& o) const;  // structural equality
  std::string descriptor() const;  // canonical text form, parse_ring-compatible
  RingElem parse_elem(std::string_view text) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  bool is_unit(const RingElem& a) const;
  RingElem inv(const RingElem& a) const;

private:
  Ring() = default;
  RingPtr self() const { return shared_from_this(); }
  void check_mine(const RingElem& a) const;

  Kind kind_ = Kind::Zm;
  std::uint64_t modulus_ = 0;          // Zm
  std::uint64_t p_ = 0;                // GF
  std::uint32_t k_ = 0;                // GF
  std::vector<std::uint64_t> poly_;    // GF modulus, c0..ck monic
  std::vector<RingPtr> factors_;       // Product
};

inline void check_same_ring(const RingElem& a, const RingElem& b) {
  if (!a.valid() || !b.valid()) fail("ring-mismatch", "operation on invalid ring element");
  if (a.ring().get() != b.ring().get() && !a.ring()->same(*b.ring()))
    fail("ring-mismatch", "operands belong to different rings");
}

/// Parses the ring descriptor grammar: `Z<m>`, `GF(<p>^<k>)` optionally
/// followed by `;poly=<c0,c1,...,ck>`, and products `R1 x R2 x ...`.
RingPtr parse_ring(std::string_view descriptor);

/// Decomposition of a ring into local factors with both element maps.
/// Factors are ordered ascending by (residue characteristic, size), stable in
/// construction order; to/from are mutually inverse ring isomorphisms.
class LocalFactorization {
public:
  explicit LocalFactorization(RingPtr original);

  const RingPtr& original() const { return original_; }
  const std::vector<RingPtr>& factors() const { return factors_; }
  std::size_t count() const { return factors_.size(); }

  std::vector<RingElem> to_components(const RingElem& a) const;
  RingElem from_components(const std::vector<RingElem>& parts) const;

private:
  RingPtr original_;
  std::vector<RingPtr> factors_;
  // flattened CRT plumbing for a Zm original
  std::vector<std::uint64_t> crt_moduli_;
  std::vector<std::uint64_t> crt_mult_;  // (m/mi) * inv(m/mi mod mi), mod m
  // plumbing for a Product original: one nested factorization per input
  // factor plus the permutation applied when sorting the flattened list
  std::vector<LocalFactorization> children_;
  std::vector<std::size_t> perm_;  // output slot -> flattened input slot
};

LocalFactorization decompose_local(const RingPtr& ring);

inline std::uint64_t ring_char(const RingPtr& ring) { return ring->characteristic(); }

}  // namespace odac
