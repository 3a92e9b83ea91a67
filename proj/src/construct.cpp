#include "odac/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "odac/intutil.hpp"

namespace odac {

namespace {

void require_odd_char(const RingPtr& ring, const char* what) {
  if (ring->characteristic() % 2 == 0)
    fail("even-characteristic", std::string(what) + " needs a ring of odd characteristic");
}

std::vector<RingElem> coords_of(const AlgebraSpec& spec, const std::vector<Matrix>& basis,
                                const Matrix& m) {
  auto c = matrix_coords(spec, basis, m);
  if (!c) fail("not-closed", "matrix lies outside the ambient algebra");
  return *c;
}

}  // namespace

OneFactorization one_factorization(std::size_t two_n) {
  if (two_n % 2 != 0) fail("odd-size", "1-factorization needs an even vertex count");
  if (two_n < 4) fail("unsupported-size", "1-factorization needs at least 4 vertices");
  std::size_t n = two_n / 2;
  auto wrap = [&](std::size_t x) { return (x - 1) % (two_n - 1) + 1; };
  OneFactorization f{n, {}};
  for (std::size_t k = 1; k <= two_n - 1; ++k) {
    std::vector<std::pair<int, int>> cls;
    cls.emplace_back(static_cast<int>(k), static_cast<int>(two_n));
    for (std::size_t i = 1; i <= n - 1; ++i) {
      std::size_t a = wrap(k + i);
      std::size_t b = wrap(k + (two_n - 1) - i);  // k - i cyclically
      cls.emplace_back(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
    }
    std::sort(cls.begin(), cls.end());
    f.classes.push_back(std::move(cls));
  }
  return f;
}

SlNecessaryCheck necessary_check_sl(std::size_t n, const RingPtr& ring) {
  if (n == 0) fail("unsupported-size", "sl_n needs n >= 1");
  SlNecessaryCheck res;
  res.gcd = std::gcd(ring->characteristic(), static_cast<std::uint64_t>(n));
  res.pass = res.gcd == 1;
  if (res.pass) return res;

  std::uint64_t p = factorize_u64(res.gcd)[0].first;  // smallest shared prime
  res.prime = p;
  auto vp = [&](std::uint64_t v) {
    unsigned e = 0;
    while (v % p == 0) { v /= p; ++e; }
    return e;
  };
  unsigned a = vp(ring->characteristic());
  unsigned b = vp(static_cast<std::uint64_t>(n));

  LocalFactorization lf = decompose_local(ring);
  std::size_t pick = lf.count();
  for (std::size_t i = 0; i < lf.count(); ++i) {
    const RingPtr& f = lf.factors()[i];
    if (f->residue_char() == p && vp(f->characteristic()) == a) { pick = i; break; }
  }
  res.factor_index = pick;
  res.factor = lf.factors()[pick];
  std::int64_t scalar = b >= a ? 1 : static_cast<std::int64_t>(pow_u64(p, a - b));
  res.witness_scalar = std::to_string(scalar);
  res.witness = Matrix::identity(res.factor, n).scaled(res.factor->from_int(scalar));
  return res;
}

Decomposition construct_sl_pauli(unsigned m, const RingPtr& ring) {
  require_odd_char(ring, "the sl construction");
  BinaryField field(m);
  SympBasis basis(field);
  AlgebraSpec spec(Family::sl, std::size_t(1) << (m + 1), ring);
  std::vector<Matrix> sl_basis = standard_basis(spec);

  Decomposition d{spec, {}, {"sl-pauli", {{"m", std::to_string(m)},
                                          {"alpha-order", "field-ascending,inf-last"}}}};
  for (LineIndex alpha : all_line_indices(field)) {
    Submodule h{spec, {}, "H_" + alpha.str(field)};
    for (SympVector w : line_W(basis, alpha))
      h.generators.push_back(coords_of(spec, sl_basis, jw_matrix(basis, w, ring)));
    d.components.push_back(std::move(h));
  }
  return d;
}

Decomposition construct_sp_restricted(unsigned m, const RingPtr& ring) {
  if (m < 1) fail("unsupported-size", "the sp construction needs m >= 1");
  require_odd_char(ring, "the sp construction");
  BinaryField field(m);
  SympBasis basis(field);
  AlgebraSpec spec(Family::sp, std::size_t(1) << (m + 1), ring);
  std::vector<Matrix> sp_basis = standard_basis(spec);

  Decomposition d{spec, {}, {"sp-restricted", {{"m", std::to_string(m)},
                                               {"alpha-order", "field-ascending,inf-last"}}}};
  for (LineIndex alpha : all_line_indices(field)) {
    Submodule h{spec, {}, "H_" + alpha.str(field)};
    for (SympVector w : line_Q(basis, alpha))
      h.generators.push_back(coords_of(spec, sp_basis, jw_matrix(basis, w, ring)));
    d.components.push_back(std::move(h));
  }
  return d;
}

namespace {

// index of X_(i,j), i < j 1-based, in the so_n basis order
std::size_t so_index(std::size_t n, std::size_t i, std::size_t j) {
  // 0-based row i0 = i-1 contributes (n-1) + (n-2) + ... down to its offset
  std::size_t i0 = i - 1, j0 = j - 1;
  return i0 * n - i0 * (i0 + 1) / 2 + (j0 - i0 - 1);
}

Decomposition construct_so(std::size_t n, const RingPtr& ring, bool odd) {
  std::size_t size = odd ? 2 * n - 1 : 2 * n;
  AlgebraSpec spec(Family::so, size, ring);
  OneFactorization fac = one_factorization(2 * n);
  std::size_t rank = spec.rank();

  Decomposition d{spec,
                  {},
                  {odd ? "so-odd" : "so-even",
                   {{"n", std::to_string(n)}, {"one-factorization", "round-robin"}}}};
  for (std::size_t k = 0; k < fac.classes.size(); ++k) {
    Submodule h{spec, {}, "H_" + std::to_string(k + 1)};
    for (auto [i, j] : fac.classes[k]) {
      if (odd && static_cast<std::size_t>(j) == 2 * n) continue;  // drop {k, 2n}
      std::vector<RingElem> gen(rank, ring->zero());
      gen[so_index(size, static_cast<std::size_t>(i), static_cast<std::size_t>(j))] =
          ring->one();
      h.generators.push_back(std::move(gen));
    }
    d.components.push_back(std::move(h));
  }
  return d;
}

}  // namespace

Decomposition construct_so_even(std::size_t n, const RingPtr& ring) {
  require_odd_char(ring, "the so construction");
  return construct_so(n, ring, false);
}

Decomposition construct_so_odd(std::size_t n, const RingPtr& ring) {
  if (n < 2) fail("unsupported-size", "the odd so construction needs n >= 2");
  require_odd_char(ring, "the so construction");
  return construct_so(n, ring, true);
}

Decomposition lift_product(const std::vector<Decomposition>& per_factor, const RingPtr& ring) {
  if (per_factor.empty()) fail("factor-mismatch", "no factor decompositions given");
  LocalFactorization lf = decompose_local(ring);
  if (lf.count() != per_factor.size())
    fail("factor-mismatch", "factor count does not match the ring decomposition");
  Family family = per_factor[0].algebra.family;
  std::size_t n = per_factor[0].algebra.n;
  for (std::size_t i = 0; i < per_factor.size(); ++i) {
    const AlgebraSpec& a = per_factor[i].algebra;
    if (a.family != family || a.n != n)
      fail("factor-mismatch", "factor decompositions disagree on the algebra");
    if (!a.ring->same(*lf.factors()[i]))
      fail("factor-mismatch", "factor ring does not match the ring decomposition");
  }

  AlgebraSpec spec(family, n, ring);
  std::size_t rank = spec.rank();
  std::size_t count = 0;
  for (const auto& d : per_factor) count = std::max(count, d.components.size());

  std::string factor_list;
  for (std::size_t i = 0; i < lf.count(); ++i) {
    if (i) factor_list += " x ";
    factor_list += lf.factors()[i]->descriptor();
  }
  std::string tags;
  for (std::size_t i = 0; i < per_factor.size(); ++i) {
    if (i) tags += ",";
    tags += per_factor[i].provenance.tag;
  }
  Decomposition out{spec,
                    {},
                    {"product-lift",
                     {{"factors", factor_list}, {"factor-provenance", tags}}}};

  std::vector<RingElem> comp(lf.count());
  for (std::size_t j = 0; j < count; ++j) {
    Submodule h{spec, {}, "H_" + std::to_string(j + 1)};
    for (std::size_t i = 0; i < lf.count(); ++i) {
      if (j >= per_factor[i].components.size()) continue;  // zero-submodule padding
      for (const auto& gen : per_factor[i].components[j].generators) {
        std::vector<RingElem> lifted(rank);
        for (std::size_t c = 0; c < rank; ++c) {
          for (std::size_t t = 0; t < lf.count(); ++t)
            comp[t] = (t == i) ? gen[c] : lf.factors()[t]->zero();
          lifted[c] = lf.from_components(comp);
        }
        h.generators.push_back(std::move(lifted));
      }
    }
    out.components.push_back(std::move(h));
  }
  return out;
}

Decomposition project_decomposition(const Decomposition& d, std::size_t factor_index) {
  LocalFactorization lf = decompose_local(d.algebra.ring);
  if (factor_index >= lf.count()) fail("factor-mismatch", "factor index out of range");
  AlgebraSpec spec(d.algebra.family, d.algebra.n, lf.factors()[factor_index]);
  Decomposition out{spec, {}, d.provenance};
  out.provenance.params.emplace_back("projected-factor", std::to_string(factor_index));
  for (const auto& comp : d.components) {
    Submodule h{spec, {}, comp.label};
    for (const auto& gen : comp.generators) {
      std::vector<RingElem> proj(gen.size());
      for (std::size_t c = 0; c < gen.size(); ++c)
        proj[c] = lf.to_components(gen[c])[factor_index];
      h.generators.push_back(std::move(proj));
    }
    out.components.push_back(std::move(h));
  }
  return out;
}

}  // namespace odac
