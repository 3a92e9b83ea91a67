#include "odac/cartan.hpp"

#include <algorithm>

namespace odac {

namespace {

std::vector<RingElem> unit_vector(const RingPtr& ring, std::size_t len, std::size_t k) {
  std::vector<RingElem> v(len, ring->zero());
  v[k] = ring->one();
  return v;
}

bool all_zero(const std::vector<RingElem>& v) {
  return std::all_of(v.begin(), v.end(), [](const RingElem& e) { return e.is_zero(); });
}

std::string coords_str(const std::vector<RingElem>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Submodule full_module(const AlgebraSpec& spec) {
  Submodule s{spec, {}, ""};
  for (std::size_t i = 0; i < spec.rank(); ++i)
    s.generators.push_back(unit_vector(spec.ring, spec.rank(), i));
  return s;
}

}  // namespace

bool is_abelian(const Submodule& h, const StructureConstants& sc) {
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      if (!all_zero(sc.bracket_coords(h.generators[i], h.generators[j]))) return false;
  return true;
}

Submodule normalizer(const Submodule& h, const StructureConstants& sc) {
  const AlgebraSpec& spec = h.ambient;
  const RingPtr& ring = spec.ring;
  std::size_t rank = sc.rank();
  std::size_t g = h.generators.size();
  if (g == 0) return full_module(spec);  // [x, 0] = 0 vacuously

  // unknowns (x; y_1; ...; y_g): for each generator g_i the block equation
  // [x, g_i] - sum_j y_ij h_j = 0; the x-projection of the kernel is N.
  Matrix m(ring, g * rank, rank + g * g);
  for (std::size_t i = 0; i < g; ++i) {
    // column l of the x-block: coords of [v_l, g_i]
    for (std::size_t l = 0; l < rank; ++l) {
      std::vector<RingElem> br =
          sc.bracket_coords(unit_vector(ring, rank, l), h.generators[i]);
      for (std::size_t k = 0; k < rank; ++k)
        if (!br[k].is_zero()) m.at(i * rank + k, l) = br[k];
    }
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < rank; ++k)
        m.at(i * rank + k, rank + i * g + j) = -h.generators[j][k];
  }

  Submodule n{spec, {}, ""};
  for (const auto& ker : kernel(m)) {
    std::vector<RingElem> x(ker.begin(), ker.begin() + static_cast<std::ptrdiff_t>(rank));
    if (!all_zero(x)) n.generators.push_back(std::move(x));
  }
  Matrix canon = howell_form(generator_matrix(n));
  n.generators.clear();
  for (std::size_t i = 0; i < canon.rows(); ++i) {
    std::vector<RingElem> row;
    row.reserve(rank);
    for (std::size_t j = 0; j < rank; ++j) row.push_back(canon.at(i, j));
    n.generators.push_back(std::move(row));
  }
  return n;
}

bool is_nilpotent(const Submodule& h, const StructureConstants& sc) {
  std::size_t rank = sc.rank();
  RowSpace hspace(generator_matrix(h));
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    for (std::size_t j = i + 1; j < h.generators.size(); ++j)
      if (!hspace.contains(sc.bracket_coords(h.generators[i], h.generators[j])))
        fail("not-closed", "submodule is not closed under the bracket");

  // lower central series in coordinates; monotone, so stabilizing nonzero
  // means not nilpotent
  Matrix current = howell_form(generator_matrix(h));
  for (std::size_t step = 0; step <= rank; ++step) {
    if (current.rows() == 0) return true;
    std::vector<std::vector<RingElem>> next;
    for (std::size_t i = 0; i < current.rows(); ++i) {
      std::vector<RingElem> s;
      s.reserve(rank);
      for (std::size_t c = 0; c < rank; ++c) s.push_back(current.at(i, c));
      for (const auto& g : h.generators) {
        auto br = sc.bracket_coords(s, g);
        if (!all_zero(br)) next.push_back(std::move(br));
      }
    }
    Submodule nextmod{h.ambient, std::move(next), ""};
    Matrix reduced = howell_form(generator_matrix(nextmod));
    if (reduced == current) return false;
    current = std::move(reduced);
  }
  return false;
}

bool is_cartan(const Submodule& h, const StructureConstants& sc) {
  if (!is_nilpotent(h, sc)) return false;
  return submodule_equal(normalizer(h, sc), h);
}

OdacReport verify_odac(const std::vector<Submodule>& components, const StructureConstants& sc,
                       KillingKind killing) {
  const AlgebraSpec& spec = sc.spec();
  std::size_t rank = sc.rank();
  OdacReport report;
  if (components.empty()) fail("invalid-decomposition", "a decomposition needs components");
  for (const auto& comp : components) {
    if (!comp.ambient.same(spec))
      fail("invalid-decomposition", "components live in different ambient algebras");
    for (const auto& gen : comp.generators)
      if (gen.size() != rank) fail("shape-mismatch", "generator length mismatch");
  }

  // (a) abelian
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& gens = components[i].generators;
    bool done = false;
    for (std::size_t a = 0; a < gens.size() && !done; ++a)
      for (std::size_t b = a + 1; b < gens.size() && !done; ++b) {
        auto br = sc.bracket_coords(gens[a], gens[b]);
        if (!all_zero(br)) {
          OdacFailure f{OdacFailure::Kind::NotAbelian, i, i, a, b, br, ""};
          f.detail = "not-abelian component=" + std::to_string(i) + " generators=(" +
                     std::to_string(a) + "," + std::to_string(b) + ") bracket=" + coords_str(br);
          report.failures.push_back(std::move(f));
          done = true;
        }
      }
  }

  // (b) self-normalizing (abelian components are nilpotent already)
  for (std::size_t i = 0; i < components.size(); ++i) {
    Submodule n = normalizer(components[i], sc);
    if (!submodule_equal(n, components[i])) {
      RowSpace hspace(generator_matrix(components[i]));
      std::vector<RingElem> witness;
      for (const auto& gen : n.generators)
        if (!hspace.contains(gen)) { witness = gen; break; }
      OdacFailure f{OdacFailure::Kind::NotSelfNormalizing, i, i, 0, 0, witness, ""};
      f.detail = "not-self-normalizing component=" + std::to_string(i) +
                 " witness=" + coords_str(witness);
      report.failures.push_back(std::move(f));
    }
  }

  // (c) pairwise orthogonality on generator pairs
  std::vector<std::vector<Matrix>> ads(components.size());
  if (killing == KillingKind::Generic)
    for (std::size_t i = 0; i < components.size(); ++i)
      for (const auto& gen : components[i].generators) ads[i].push_back(sc.ad(gen));
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      bool done = false;
      for (std::size_t a = 0; a < components[i].generators.size() && !done; ++a)
        for (std::size_t b = 0; b < components[j].generators.size() && !done; ++b) {
          RingElem k = killing == KillingKind::Generic
                           ? sc.killing_from_ad(ads[i][a], ads[j][b])
                           : killing_closed(spec.family, spec.n,
                                            from_coords(spec, sc.basis(),
                                                        components[i].generators[a]),
                                            from_coords(spec, sc.basis(),
                                                        components[j].generators[b]));
          if (!k.is_zero()) {
            OdacFailure f{OdacFailure::Kind::NotOrthogonal, i, j, a, b, {}, ""};
            f.detail = "not-orthogonal components=(" + std::to_string(i) + "," +
                       std::to_string(j) + ") generators=(" + std::to_string(a) + "," +
                       std::to_string(b) + ") killing=" + k.str();
            report.failures.push_back(std::move(f));
            done = true;
          }
        }
    }

  // (d) spanning: the stacked generators must span the whole module
  std::size_t total = 0;
  for (const auto& comp : components) total += comp.generators.size();
  Matrix stacked(spec.ring, total, rank);
  std::size_t row = 0;
  for (const auto& comp : components)
    for (const auto& gen : comp.generators) {
      for (std::size_t c = 0; c < rank; ++c) stacked.at(row, c) = gen[c];
      ++row;
    }
  RowSpace all(stacked);
  if (!(all.canonical() == Matrix::identity(spec.ring, rank))) {
    std::vector<RingElem> witness;
    for (std::size_t k = 0; k < rank; ++k) {
      auto e = unit_vector(spec.ring, rank, k);
      if (!all.contains(e)) { witness = e; break; }
    }
    OdacFailure f{OdacFailure::Kind::SumNotSpanning, 0, 0, 0, 0, witness, ""};
    f.detail = "sum-not-spanning missing=" + coords_str(witness);
    report.failures.push_back(std::move(f));
  }

  // (e) directness: H_i meets the sum of the others trivially
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::size_t gi = components[i].generators.size();
    std::size_t grest = total - gi;
    if (gi == 0 || grest == 0) continue;
    Matrix m(spec.ring, rank, gi + grest);
    for (std::size_t a = 0; a < gi; ++a)
      for (std::size_t c = 0; c < rank; ++c) m.at(c, a) = components[i].generators[a][c];
    std::size_t col = gi;
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j == i) continue;
      for (const auto& gen : components[j].generators) {
        for (std::size_t c = 0; c < rank; ++c) m.at(c, col) = gen[c];
        ++col;
      }
    }
    for (const auto& ker : kernel(m)) {
      std::vector<RingElem> elem(rank, spec.ring->zero());
      for (std::size_t a = 0; a < gi; ++a)
        for (std::size_t c = 0; c < rank; ++c)
          elem[c] += ker[a] * components[i].generators[a][c];
      if (!all_zero(elem)) {
        OdacFailure f{OdacFailure::Kind::SumNotDirect, i, i, 0, 0, elem, ""};
        f.detail = "sum-not-direct component=" + std::to_string(i) +
                   " witness=" + coords_str(elem);
        report.failures.push_back(std::move(f));
        break;
      }
    }
  }

  report.is_odac = report.failures.empty();
  return report;
}

}  // namespace odac
