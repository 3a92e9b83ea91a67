#include "odac/liealg.hpp"

#include <algorithm>
#include <bit>


namespace odac {

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::sp: return "sp";
    case Family::so: return "so";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "gl") return Family::gl;
  if (name == "sl") return Family::sl;
  if (name == "sp") return Family::sp;
  if (name == "so") return Family::so;
  return std::nullopt;
}

AlgebraSpec::AlgebraSpec(Family f, std::size_t size, RingPtr r)
    : family(f), n(size), ring(std::move(r)) {
  if (n < 1) fail("unsupported-size", "matrix size must be positive");
  if (family == Family::sp && n % 2 != 0)
    fail("unsupported-size", "sp requires an even matrix size");
  if ((family == Family::sp || family == Family::so) && ring->characteristic() % 2 == 0)
    fail("even-characteristic", family_name(family) + " requires odd characteristic");
}

std::size_t AlgebraSpec::rank() const {
  switch (family) {
    case Family::gl: return n * n;
    case Family::sl: return n * n - 1;
    case Family::sp: return (n / 2) * (n + 1);
    case Family::so: return n * (n - 1) / 2;
  }
  return 0;
}

bool AlgebraSpec::same(const AlgebraSpec& o) const {
  return family == o.family && n == o.n && ring->same(*o.ring);
}

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

Matrix unit_matrix(const RingPtr& ring, std::size_t n, std::size_t i, std::size_t j,
                   std::int64_t v = 1) {
  Matrix m(ring, n, n);
  m.at(i, j) = ring->from_int(v);
  return m;
}

}  // namespace

Matrix jw_matrix(const SympBasis& basis, SympVector w, const RingPtr& ring) {
  if (ring->characteristic() % 2 == 0)
    fail("even-characteristic", "generalized Pauli matrices need odd characteristic");
  SympBasis::Coords c = basis.coords(w);
  unsigned d = basis.field().degree();
  RingElem one = ring->one(), mone = ring->from_int(-1);
  Matrix acc = Matrix::identity(ring, 1);
  for (unsigned i = 0; i < d; ++i) {
    unsigned a = (c.a >> i) & 1, b = (c.b >> i) & 1;
    Matrix j(ring, 2, 2);  // D^a P^b
    if (a == 0 && b == 0) { j.at(0, 0) = one; j.at(1, 1) = one; }
    if (a == 1 && b == 0) { j.at(0, 0) = one; j.at(1, 1) = mone; }
    if (a == 0 && b == 1) { j.at(0, 1) = one; j.at(1, 0) = one; }
    if (a == 1 && b == 1) { j.at(0, 1) = one; j.at(1, 0) = mone; }
    acc = kron(acc, j);
  }
  return acc;
}

bool in_sp(const Matrix& x) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0)
    fail("shape-mismatch", "in_sp needs an even square matrix");
  std::size_t k = x.rows() / 2;
  const RingPtr& ring = x.ring();
  Matrix kmat(ring, 2 * k, 2 * k);
  RingElem one = ring->one(), mone = ring->from_int(-1);
  for (std::size_t i = 0; i < k; ++i) {
    kmat.at(i, k + i) = one;
    kmat.at(k + i, i) = mone;
  }
  return (x * kmat + kmat * x.transpose()).is_zero();
}

RingElem trace_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    fail("shape-mismatch", "trace_product shape mismatch");
  RingElem s = a.ring()->zero();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero() || b.at(j, i).is_zero()) continue;
      s += a.at(i, j) * b.at(j, i);
    }
  return s;
}

std::vector<Matrix> standard_basis(const AlgebraSpec& spec) {
  const RingPtr& ring = spec.ring;
  std::size_t n = spec.n;
  std::vector<Matrix> basis;
  basis.reserve(spec.rank());
  switch (spec.family) {
    case Family::gl:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.push_back(unit_matrix(ring, n, i, j));
      break;
    case Family::sl: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) basis.push_back(unit_matrix(ring, n, i, j));
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Matrix h(ring, n, n);
        h.at(i, i) = ring->one();
        h.at(i + 1, i + 1) = ring->from_int(-1);
        basis.push_back(std::move(h));
      }
      break;
    }
    case Family::so:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Matrix x(ring, n, n);
          x.at(i, j) = ring->one();
          x.at(j, i) = ring->from_int(-1);
          basis.push_back(std::move(x));
        }
      break;
    case Family::sp: {
      if (is_pow2(n)) {
        unsigned m = static_cast<unsigned>(std::bit_width(n) - 2);  // n = 2^(m+1)
        SympBasis sb{BinaryField(m, /*allow_large=*/true)};
        for (SympVector w : enumerate_Q(sb)) basis.push_back(jw_matrix(sb, w, ring));
        break;
      }
      std::size_t k = n / 2;
      RingElem one = ring->one(), mone = ring->from_int(-1);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Matrix x(ring, n, n);
          x.at(i, j) = one;
          x.at(k + j, k + i) = mone;
          basis.push_back(std::move(x));
        }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          Matrix x(ring, n, n);
          x.at(i, k + j) = one;
          x.at(j, k + i) = one;  // coincides with the first write when i == j
          basis.push_back(std::move(x));
        }
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          Matrix x(ring, n, n);
          x.at(k + i, j) = one;
          x.at(k + j, i) = one;
          basis.push_back(std::move(x));
        }
      break;
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Coordinates
// ---------------------------------------------------------------------------

namespace {

// read-off without membership validation; exact whenever m lies in the span
std::vector<RingElem> coords_read_off(const AlgebraSpec& spec, const std::vector<Matrix>& basis,
                                      const Matrix& m) {
  const RingPtr& ring = spec.ring;
  std::size_t n = spec.n;
  std::vector<RingElem> c;
  c.reserve(spec.rank());
  switch (spec.family) {
    case Family::gl:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.push_back(m.at(i, j));
      break;
    case Family::sl: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) c.push_back(m.at(i, j));
      RingElem acc = ring->zero();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        acc += m.at(i, i);  // partial sums of the diagonal
        c.push_back(acc);
      }
      break;
    }
    case Family::so:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c.push_back(m.at(i, j));
      break;
    case Family::sp: {
      if (is_pow2(n)) {
        // the Pauli basis is trace-orthogonal: c_i = tr(m b_i) / tr(b_i^2)
        for (const Matrix& b : basis)
          c.push_back(trace_product(m, b) * trace_product(b, b).inv());
        break;
      }
      std::size_t k = n / 2;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) c.push_back(m.at(i, j));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) c.push_back(m.at(i, k + j));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) c.push_back(m.at(k + i, j));
      break;
    }
  }
  return c;
}

}  // namespace

Matrix from_coords(const AlgebraSpec& spec, const std::vector<Matrix>& basis,
                   const std::vector<RingElem>& coords) {
  if (coords.size() != basis.size()) fail("shape-mismatch", "coordinate vector length");
  Matrix m(spec.ring, spec.n, spec.n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t r = 0; r < spec.n; ++r)
      for (std::size_t c = 0; c < spec.n; ++c) {
        const RingElem& b = basis[i].at(r, c);
        if (!b.is_zero()) m.at(r, c) += coords[i] * b;
      }
  }
  return m;
}

std::optional<std::vector<RingElem>> matrix_coords(const AlgebraSpec& spec,
                                                   const std::vector<Matrix>& basis,
                                                   const Matrix& m) {
  if (m.rows() != spec.n || m.cols() != spec.n) return std::nullopt;
  std::vector<RingElem> c = coords_read_off(spec, basis, m);
  if (!(from_coords(spec, basis, c) == m)) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

StructureConstants::StructureConstants(const AlgebraSpec& spec)
    : spec_(spec), rank_(spec.rank()), basis_(standard_basis(spec)) {
  table_.resize(rank_ * rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j) {
      Matrix br = bracket(basis_[i], basis_[j]);
      Terms terms;
      if (!br.is_zero()) {
        // brackets of basis elements stay in the span for every supported
        // family; the read-off is exact there
        std::vector<RingElem> c = coords_read_off(spec_, basis_, br);
        for (std::size_t k = 0; k < rank_; ++k)
          if (!c[k].is_zero()) terms.emplace_back(static_cast<std::uint32_t>(k), c[k]);
      }
      Terms neg;
      for (const auto& [k, v] : terms) neg.emplace_back(k, -v);
      table_[i * rank_ + j] = std::move(terms);
      table_[j * rank_ + i] = std::move(neg);
    }
  }
}

RingElem StructureConstants::c(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, v] : terms(i, j))
    if (kk == k) return v;
  return spec_.ring->zero();
}

std::vector<RingElem> StructureConstants::bracket_coords(const std::vector<RingElem>& x,
                                                         const std::vector<RingElem>& y) const {
  std::vector<RingElem> out(rank_, spec_.ring->zero());
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j].is_zero()) continue;
      RingElem xy = x[i] * y[j];
      for (const auto& [k, v] : terms(i, j)) out[k] += xy * v;
    }
  }
  return out;
}

Matrix StructureConstants::ad(const std::vector<RingElem>& x) const {
  Matrix m(spec_.ring, rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      for (const auto& [k, v] : terms(i, j)) m.at(k, j) += x[i] * v;
  }
  return m;
}

RingElem StructureConstants::killing_from_ad(const Matrix& adx, const Matrix& ady) const {
  return trace_product(adx, ady);
}

RingElem StructureConstants::killing(const std::vector<RingElem>& x,
                                     const std::vector<RingElem>& y) const {
  return killing_from_ad(ad(x), ad(y));
}

RingElem killing_closed(Family family, std::size_t size, const Matrix& a, const Matrix& b) {
  std::int64_t coeff = 0;
  switch (family) {
    case Family::sp: coeff = static_cast<std::int64_t>(size) + 2; break;
    case Family::so: coeff = static_cast<std::int64_t>(size) - 2; break;
    default: fail("unsupported-family", "no closed-form Killing coefficient for gl/sl");
  }
  return a.ring()->from_int(coeff) * trace_product(a, b);
}

// ---------------------------------------------------------------------------
// Product isomorphism, entrywise
// ---------------------------------------------------------------------------

std::vector<Matrix> phi_decompose(const LocalFactorization& lf, const Matrix& m) {
  std::vector<Matrix> out;
  out.reserve(lf.count());
  for (std::size_t i = 0; i < lf.count(); ++i)
    out.emplace_back(lf.factors()[i], m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto parts = lf.to_components(m.at(r, c));
      for (std::size_t i = 0; i < lf.count(); ++i) out[i].at(r, c) = parts[i];
    }
  return out;
}

Matrix phi_compose(const LocalFactorization& lf, const std::vector<Matrix>& parts) {
  if (parts.size() != lf.count()) fail("factor-mismatch", "wrong number of matrix components");
  Matrix m(lf.original(), parts[0].rows(), parts[0].cols());
  std::vector<RingElem> comp(lf.count());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t i = 0; i < lf.count(); ++i) comp[i] = parts[i].at(r, c);
      m.at(r, c) = lf.from_components(comp);
    }
  return m;
}

// ---------------------------------------------------------------------------
// Submodules
// ---------------------------------------------------------------------------

Matrix generator_matrix(const Submodule& s) {
  Matrix g(s.ambient.ring, s.generators.size(), s.ambient.rank());
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (s.generators[i].size() != s.ambient.rank())
      fail("shape-mismatch", "generator length does not match the ambient rank");
    for (std::size_t j = 0; j < s.generators[i].size(); ++j) g.at(i, j) = s.generators[i][j];
  }
  return g;
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
  if (!a.ambient.same(b.ambient)) return false;
  return howell_form(generator_matrix(a)) == howell_form(generator_matrix(b));
}

}  // namespace odac
