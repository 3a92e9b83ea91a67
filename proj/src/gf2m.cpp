#include "odac/gf2m.hpp"

#include <algorithm>
#include <bit>

namespace odac {

namespace {

// carry-less multiply then reduce by poly (which includes the top bit)
std::uint64_t clmul_reduce(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned degree) {
  unsigned __int128 acc = 0;
  for (unsigned i = 0; a >> i; ++i)
    if ((a >> i) & 1) acc ^= static_cast<unsigned __int128>(b) << i;
  for (int bit = 2 * static_cast<int>(degree) - 2; bit >= static_cast<int>(degree); --bit)
    if ((acc >> bit) & 1) acc ^= static_cast<unsigned __int128>(poly) << (bit - degree);
  return static_cast<std::uint64_t>(acc) & ((std::uint64_t(1) << degree) - 1);
}

bool gf2_poly_irreducible(std::uint64_t f, unsigned degree) {
  if (degree == 1) return true;
  // trial division by all polynomials of degree 1 .. degree/2
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    for (std::uint64_t low = 0; low < (std::uint64_t(1) << d); ++low) {
      std::uint64_t g = (std::uint64_t(1) << d) | low;
      // remainder of f mod g
      std::uint64_t r = f;
      while (std::bit_width(r) > d) {
        r ^= g << (std::bit_width(r) - d - 1);
      }
      if (r == 0) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t BinaryField::least_irreducible(unsigned degree) {
  for (std::uint64_t low = 0; low < (std::uint64_t(1) << degree); ++low) {
    std::uint64_t f = (std::uint64_t(1) << degree) | low;
    if (gf2_poly_irreducible(f, degree)) return f;
  }
  fail("internal", "no irreducible binary polynomial found");
}

BinaryField::BinaryField(unsigned m, bool allow_large) {
  if (m > 6 && !allow_large)
    fail("unsupported-size", "m > 6 requires the allow-large flag");
  if (m > 29) fail("unsupported-size", "m out of range");
  degree_ = m + 1;
  poly_ = least_irreducible(degree_);
}

std::uint64_t BinaryField::mul(std::uint64_t a, std::uint64_t b) const {
  return clmul_reduce(a & mask(), b & mask(), poly_, degree_);
}

std::uint64_t BinaryField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a &= mask();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned BinaryField::trace(std::uint64_t a) const {
  std::uint64_t t = a & mask(), acc = t;
  for (unsigned i = 1; i < degree_; ++i) {
    t = mul(t, t);
    acc ^= t;
  }
  // the trace lies in F_2
  if (acc > 1) fail("internal", "trace left the prime field");
  return static_cast<unsigned>(acc);
}

std::string BinaryField::bits(std::uint64_t a) const {
  std::string s(degree_, '0');
  for (unsigned i = 0; i < degree_; ++i)
    if ((a >> i) & 1) s[i] = '1';
  return s;
}

unsigned symp_form(const BinaryField& f, SympVector w, SympVector w2) {
  // minus equals plus in characteristic 2
  return f.trace(f.add(f.mul(w.alpha, w2.beta), f.mul(w2.alpha, w.beta)));
}

std::string LineIndex::str(const BinaryField& f) const {
  return inf_ ? std::string("inf") : f.bits(alpha_);
}

std::vector<LineIndex> all_line_indices(const BinaryField& f) {
  std::vector<LineIndex> out;
  out.reserve(f.size() + 1);
  for (std::uint64_t a = 0; a < f.size(); ++a) out.push_back(LineIndex::at(a));
  out.push_back(LineIndex::infinity());
  return out;
}

SympBasis::SympBasis(BinaryField field) : field_(field) {
  unsigned d = field_.degree();
  e_.resize(d);
  for (unsigned i = 0; i < d; ++i) e_[i] = std::uint64_t(1) << i;  // x^(i-1), 1-based

  // trace-dual basis: invert the Gram matrix Tr(x^(i+j)) over F_2.
  // rows as bitmasks; augmented with the identity.
  std::vector<std::uint64_t> gram(d), inv(d);
  for (unsigned i = 0; i < d; ++i) {
    std::uint64_t row = 0;
    for (unsigned j = 0; j < d; ++j)
      if (field_.trace(field_.mul(e_[i], e_[j]))) row |= std::uint64_t(1) << j;
    gram[i] = row;
    inv[i] = std::uint64_t(1) << i;
  }
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = col;
    while (piv < d && !((gram[piv] >> col) & 1)) ++piv;
    if (piv == d) fail("internal", "trace form degenerate");
    std::swap(gram[col], gram[piv]);
    std::swap(inv[col], inv[piv]);
    for (unsigned r = 0; r < d; ++r) {
      if (r != col && ((gram[r] >> col) & 1)) {
        gram[r] ^= gram[col];
        inv[r] ^= inv[col];
      }
    }
  }
  // column j of the inverse gives f_j = sum_i inv[i][j] e_i
  f_.assign(d, 0);
  for (unsigned j = 0; j < d; ++j) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < d; ++i)
      if ((inv[i] >> j) & 1) v ^= e_[i];
    f_[j] = v;
  }
}

SympBasis::Coords SympBasis::coords(SympVector w) const {
  Coords c;
  unsigned d = field_.degree();
  for (unsigned i = 0; i < d; ++i) {
    if (field_.trace(field_.mul(w.alpha, f_[i]))) c.a |= std::uint32_t(1) << i;
    if (field_.trace(field_.mul(w.beta, e_[i]))) c.b |= std::uint32_t(1) << i;
  }
  return c;
}

SympVector SympBasis::reconstruct(Coords c) const {
  SympVector w;
  unsigned d = field_.degree();
  for (unsigned i = 0; i < d; ++i) {
    if ((c.a >> i) & 1) w.alpha ^= e_[i];
    if ((c.b >> i) & 1) w.beta ^= f_[i];
  }
  return w;
}

unsigned SympBasis::qform(SympVector w) const {
  Coords c = coords(w);
  unsigned s = std::popcount(c.a & c.b) + (c.a & 1u) + (c.b & 1u);
  return s & 1u;
}

std::uint64_t SympBasis::lex_key(SympVector w) const {
  Coords c = coords(w);
  unsigned d = field_.degree();
  std::uint64_t key = 0;
  for (unsigned i = 0; i < d; ++i) key = (key << 1) | ((c.a >> i) & 1);
  for (unsigned i = 0; i < d; ++i) key = (key << 1) | ((c.b >> i) & 1);
  return key;
}

std::vector<SympVector> enumerate_W(const SympBasis& basis) {
  unsigned d = basis.field().degree();
  std::vector<SympVector> out;
  out.reserve(std::size_t(1) << (2 * d));
  for (std::uint64_t key = 0; key < (std::uint64_t(1) << (2 * d)); ++key) {
    SympBasis::Coords c;
    for (unsigned i = 0; i < d; ++i) {
      if ((key >> (2 * d - 1 - i)) & 1) c.a |= std::uint32_t(1) << i;
      if ((key >> (d - 1 - i)) & 1) c.b |= std::uint32_t(1) << i;
    }
    out.push_back(basis.reconstruct(c));
  }
  return out;
}

std::vector<SympVector> enumerate_Q(const SympBasis& basis) {
  std::vector<SympVector> out;
  for (SympVector w : enumerate_W(basis))
    if (basis.qform(w) == 1) out.push_back(w);
  return out;
}

std::vector<SympVector> line_W(const SympBasis& basis, LineIndex alpha) {
  const BinaryField& f = basis.field();
  std::vector<SympVector> out;
  out.reserve(f.size() - 1);
  for (std::uint64_t lam = 1; lam < f.size(); ++lam) {
    if (alpha.is_infinity())
      out.push_back({0, lam});
    else
      out.push_back({lam, f.mul(alpha.value(), lam)});
  }
  std::sort(out.begin(), out.end(), [&](SympVector x, SympVector y) {
    return basis.lex_key(x) < basis.lex_key(y);
  });
  return out;
}

std::vector<SympVector> line_Q(const SympBasis& basis, LineIndex alpha) {
  std::vector<SympVector> out;
  for (SympVector w : line_W(basis, alpha))
    if (basis.qform(w) == 1) out.push_back(w);
  return out;
}

std::vector<std::vector<SympVector>> omega_partition(const SympBasis& basis) {
  unsigned d = basis.field().degree();  // m + 1
  std::vector<std::vector<SympVector>> omega(d + 1);
  for (SympVector w : enumerate_Q(basis)) {
    SympBasis::Coords c = basis.coords(w);
    if ((c.a & 1u) == 0) {
      omega[0].push_back(w);
      continue;
    }
    unsigned j = 0;  // least j >= 2 with a_j = 1
    for (unsigned i = 1; i < d; ++i) {
      if ((c.a >> i) & 1) { j = i + 1; break; }
    }
    omega[j == 0 ? 1 : j].push_back(w);
  }
  return omega;
}

std::string to_string(const BinaryField& f, SympVector w) {
  return "(" + f.bits(w.alpha) + ";" + f.bits(w.beta) + ")";
}

}  // namespace odac
