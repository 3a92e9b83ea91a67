#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odac/errors.hpp"

namespace odac {

/// The binary field F_{2^(m+1)}. Elements are uint64 bitmasks, bit i holding
/// the coefficient of x^i in the polynomial basis 1, x, ..., x^m. All values
/// are immutable; operations are pure.
class BinaryField {
public:
  /// m is capped at 6 unless allow_large is set (|W| grows as 4^(m+1)).
  explicit BinaryField(unsigned m, bool allow_large = false);

  unsigned m() const { return degree_ - 1; }
  unsigned degree() const { return degree_; }  // m + 1
  std::uint64_t modulus() const { return poly_; }
  std::uint64_t size() const { return std::uint64_t(1) << degree_; }
  std::uint64_t mask() const { return size() - 1; }

  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Field trace to F_2: a + a^2 + ... + a^(2^m).
  unsigned trace(std::uint64_t a) const;

  /// Least irreducible polynomial of the given degree over F_2 (coefficient
  /// tuples compared from the highest degree downward); includes the x^degree bit.
  static std::uint64_t least_irreducible(unsigned degree);

  std::string bits(std::uint64_t a) const;  // little-endian bit string, length m+1

  bool operator==(const BinaryField& o) const = default;

private:
  unsigned degree_ = 1;
  std::uint64_t poly_ = 0;
};

/// A vector w = (alpha; beta) of W = F_{2^(m+1)} + F_{2^(m+1)}.
struct SympVector {
  std::uint64_t alpha = 0, beta = 0;
  friend auto operator<=>(const SympVector&, const SympVector&) = default;
};

/// <w, w'> = Tr(alpha*beta' + alpha'*beta); bilinear and alternating.
unsigned symp_form(const BinaryField& f, SympVector w, SympVector w2);

/// Index of a line W_alpha: a field element, or the distinguished infinity.
class LineIndex {
public:
  static LineIndex at(std::uint64_t alpha) { return LineIndex(false, alpha); }
  static LineIndex infinity() { return LineIndex(true, 0); }
  bool is_infinity() const { return inf_; }
  std::uint64_t value() const { return alpha_; }
  std::string str(const BinaryField& f) const;  // little-endian bits, or "inf"
  bool operator==(const LineIndex&) const = default;

private:
  LineIndex(bool inf, std::uint64_t a) : inf_(inf), alpha_(a) {}
  bool inf_;
  std::uint64_t alpha_;
};

std::vector<LineIndex> all_line_indices(const BinaryField& f);  // field order, then inf

/// Symplectic basis (e_1...e_{m+1}; f_1...f_{m+1}) of W: e_i = x^(i-1) and f_j
/// the trace-dual basis with Tr(e_i f_j) = delta_ij, so that in coordinates
/// the form is sum(a_i b'_i - a'_i b_i) over F_2.
class SympBasis {
public:
  explicit SympBasis(BinaryField field);

  const BinaryField& field() const { return field_; }
  std::uint64_t e(unsigned i) const { return e_[i]; }  // 0-based: e(i) = e_{i+1}
  std::uint64_t f(unsigned i) const { return f_[i]; }

  struct Coords {
    std::uint32_t a = 0, b = 0;  // bit i holds a_{i+1} / b_{i+1}
    friend auto operator<=>(const Coords&, const Coords&) = default;
  };

  Coords coords(SympVector w) const;        // a_i = Tr(alpha f_i), b_i = Tr(beta e_i)
  SympVector reconstruct(Coords c) const;   // alpha = sum a_i e_i, beta = sum b_i f_i
  /// q(w) = sum a_i b_i + (a_1 + b_1).
  unsigned qform(SympVector w) const;
  /// Canonical enumeration key: the coordinate string a_1..a_{m+1} b_1..b_{m+1},
  /// a_1 most significant.
  std::uint64_t lex_key(SympVector w) const;

private:
  BinaryField field_;
  std::vector<std::uint64_t> e_, f_;
};

/// All of W in lex_key order.
std::vector<SympVector> enumerate_W(const SympBasis& basis);
/// Q = { w : q(w) = 1 } in lex_key order.
std::vector<SympVector> enumerate_Q(const SympBasis& basis);
/// W_alpha = {(lambda; alpha*lambda) : lambda != 0} (W_inf = {(0; lambda)}),
/// in lex_key order; excludes (0;0).
std::vector<SympVector> line_W(const SympBasis& basis, LineIndex alpha);
/// Q_alpha = W_alpha intersected with Q.
std::vector<SympVector> line_Q(const SympBasis& basis, LineIndex alpha);
/// Partition of Q into Omega_0 .. Omega_{m+1} by the leading a-coordinates:
/// Omega_0 has a_1 = 0; Omega_1 has a_1 = 1 and a_2 = ... = a_{m+1} = 0;
/// Omega_j (j >= 2) has a_1 = 1, a_2 = ... = a_{j-1} = 0, a_j = 1.
std::vector<std::vector<SympVector>> omega_partition(const SympBasis& basis);

std::string to_string(const BinaryField& f, SympVector w);  // "(<alpha-bits>;<beta-bits>)"

}  // namespace odac
