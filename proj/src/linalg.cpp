#include "odac/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "odac/intutil.hpp"

namespace odac {

namespace {

// ---------------------------------------------------------------------------
// Echelon / Howell elimination over a local ring (Z_{p^a} or a GF field).
// Rows keep unique, strictly usable pivot columns; over Z_m the form is
// closed under stabilizer rows, which is what makes membership testing by
// successive pivot division exact.
// ---------------------------------------------------------------------------

using Row = std::vector<RingElem>;

struct Echelon {
  std::vector<Row> rows;              // sorted by pivot column
  std::vector<std::size_t> pivots;    // pivot column per row
  RingPtr ring;
  std::size_t width = 0;
  bool zm = false;                    // Z_m path (xgcd transforms + stabilizers)
  std::uint64_t modulus = 0;

  std::size_t lead_of(const Row& r) const {
    for (std::size_t c = 0; c < width; ++c)
      if (!r[c].is_zero()) return c;
    return width;
  }

  int find_pivot_row(std::size_t col) const {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), col);
    if (it != pivots.end() && *it == col) return static_cast<int>(it - pivots.begin());
    return -1;
  }

  // Reduces `row` into the echelon; returns true if the echelon changed.
  bool process(Row row) {
    bool changed = false;
    for (;;) {
      std::size_t lead = lead_of(row);
      if (lead == width) return changed;
      int pr = find_pivot_row(lead);
      if (pr < 0) {
        auto it = std::lower_bound(pivots.begin(), pivots.end(), lead);
        std::size_t at = static_cast<std::size_t>(it - pivots.begin());
        pivots.insert(it, lead);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
        return true;
      }
      Row& prow = rows[static_cast<std::size_t>(pr)];
      const RingElem& a = prow[lead];
      const RingElem& b = row[lead];
      if (!zm) {
        // field: subtract (b/a) * pivot row
        RingElem q = b * a.inv();
        for (std::size_t c = lead; c < width; ++c) row[c] -= q * prow[c];
      } else {
        std::uint64_t ar = std::get<0>(a.payload());
        std::uint64_t br = std::get<0>(b.payload());
        if (br % ar == 0) {
          RingElem q = ring->from_int(static_cast<std::int64_t>(br / ar));
          for (std::size_t c = lead; c < width; ++c) row[c] -= q * prow[c];
        } else {
          auto [g, s, t] = xgcd_i64(static_cast<std::int64_t>(ar), static_cast<std::int64_t>(br));
          RingElem es = ring->from_int(s), et = ring->from_int(t);
          RingElem ea = ring->from_int(static_cast<std::int64_t>(ar / static_cast<std::uint64_t>(g)));
          RingElem eb = ring->from_int(static_cast<std::int64_t>(br / static_cast<std::uint64_t>(g)));
          for (std::size_t c = lead; c < width; ++c) {
            RingElem np = es * prow[c] + et * row[c];
            RingElem nr = ea * row[c] - eb * prow[c];
            prow[c] = np;
            row[c] = nr;
          }
          changed = true;  // pivot value dropped to a proper divisor
        }
      }
    }
  }

  // Adds (m/d) * row for every pivot with a zero divisor as value until no
  // new structure appears (no-op over fields).
  void close_stabilizers() {
    if (!zm) return;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t piv = std::get<0>(rows[i][pivots[i]].payload());
        std::uint64_t d = std::gcd(piv, modulus);
        std::uint64_t ann = modulus / d;
        if (ann == 1) continue;
        RingElem c = ring->from_int(static_cast<std::int64_t>(ann % modulus));
        Row stab(rows[i]);
        for (auto& e : stab) e = e * c;
        if (process(std::move(stab))) changed = true;
      }
    }
  }

  // Scales pivots to their canonical associates and reduces entries above.
  void normalize() {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      RingElem& piv = rows[i][pivots[i]];
      RingElem unit = ring->one();
      if (!zm) {
        unit = piv.inv();
      } else {
        std::uint64_t a = std::get<0>(piv.payload());
        std::uint64_t d = std::gcd(a, modulus);
        if (a != d) {
          // u*a = d (mod m) for a unit u: lift the inverse of a/d mod m/d
          std::uint64_t u0 = invmod_u64((a / d) % (modulus / d), modulus / d);
          std::uint64_t u = u0;
          while (std::gcd(u, modulus) != 1) u += modulus / d;
          unit = ring->from_int(static_cast<std::int64_t>(u % modulus));
        }
      }
      if (!unit.is_one())
        for (std::size_t c = pivots[i]; c < width; ++c) rows[i][c] = rows[i][c] * unit;
    }
    // entries above each pivot
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t col = pivots[i];
      for (std::size_t r = 0; r < i; ++r) {
        const RingElem& e = rows[r][col];
        if (e.is_zero()) continue;
        RingElem q;
        if (!zm) {
          q = e * rows[i][col].inv();
        } else {
          std::uint64_t d = std::get<0>(rows[i][col].payload());
          q = ring->from_int(static_cast<std::int64_t>(std::get<0>(e.payload()) / d));
        }
        if (q.is_zero()) continue;
        for (std::size_t c = col; c < width; ++c) rows[r][c] -= q * rows[i][c];
      }
    }
  }
};

Echelon local_echelon(std::vector<Row> input, std::size_t width, const RingPtr& ring) {
  Echelon e;
  e.ring = ring;
  e.width = width;
  e.zm = ring->is_zm();
  e.modulus = e.zm ? ring->zm_modulus() : 0;
  for (auto& row : input) e.process(std::move(row));
  e.close_stabilizers();
  e.normalize();
  return e;
}

std::vector<Row> matrix_rows(const Matrix& m) {
  std::vector<Row> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
  }
  return rows;
}

Matrix rows_to_matrix(const RingPtr& ring, const std::vector<Row>& rows, std::size_t cols) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Matrix map_matrix(const Matrix& m, const RingPtr& target,
                  const std::function<RingElem(const RingElem&)>& f) {
  Matrix out(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = f(m.at(i, j));
  return out;
}

}  // namespace

Matrix howell_form(const Matrix& m) {
  const RingPtr& ring = m.ring();
  if (ring->is_local()) {
    Echelon e = local_echelon(matrix_rows(m), m.cols(), ring);
    return rows_to_matrix(ring, e.rows, m.cols());
  }
  // componentwise over the local factors, recombined with zero-row padding
  auto lf = decompose_local(ring);
  std::vector<Matrix> forms;
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < lf.count(); ++i) {
    Matrix mi(lf.factors()[i], m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        mi.at(r, c) = lf.to_components(m.at(r, c))[i];
    forms.push_back(howell_form(mi));
    nrows = std::max(nrows, forms.back().rows());
  }
  Matrix out(ring, nrows, m.cols());
  std::vector<RingElem> parts(lf.count());
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t i = 0; i < lf.count(); ++i)
        parts[i] = r < forms[i].rows() ? forms[i].at(r, c) : lf.factors()[i]->zero();
      out.at(r, c) = lf.from_components(parts);
    }
  return out;
}

// ---------------------------------------------------------------------------
// LinearSolver
// ---------------------------------------------------------------------------

LinearSolver::LinearSolver(const Matrix& a)
    : ring_(a.ring()), rows_(a.rows()), cols_(a.cols()) {
  if (ring_->is_local()) {
    local_ = true;
    // echelon of [A^T | I]: rows with pivots in the first block solve against
    // the column space of A, rows beyond it generate the right kernel
    std::vector<Row> rows(cols_);
    for (std::size_t i = 0; i < cols_; ++i) {
      rows[i].reserve(rows_ + cols_);
      for (std::size_t j = 0; j < rows_; ++j) rows[i].push_back(a.at(j, i));
      for (std::size_t j = 0; j < cols_; ++j)
        rows[i].push_back(i == j ? ring_->one() : ring_->zero());
    }
    Echelon e = local_echelon(std::move(rows), rows_ + cols_, ring_);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (e.pivots[i] < rows_) {
        EngineRow er;
        er.a.assign(e.rows[i].begin(), e.rows[i].begin() + static_cast<std::ptrdiff_t>(rows_));
        er.u.assign(e.rows[i].begin() + static_cast<std::ptrdiff_t>(rows_), e.rows[i].end());
        er.pivot = e.pivots[i];
        image_rows_.push_back(std::move(er));
      } else {
        kernel_.emplace_back(e.rows[i].begin() + static_cast<std::ptrdiff_t>(rows_),
                             e.rows[i].end());
      }
    }
    return;
  }
  local_ = false;
  lf_ = std::make_shared<LocalFactorization>(ring_);
  for (std::size_t i = 0; i < lf_->count(); ++i) {
    const RingPtr& fr = lf_->factors()[i];
    parts_.push_back(LinearSolver(map_matrix(a, fr, [&](const RingElem& x) {
      return lf_->to_components(x)[i];
    })));
  }
  // lift the factor kernels: factor i's generator occupies component i, the
  // other components are zero
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (const auto& gen : parts_[i].kernel()) {
      std::vector<RingElem> lifted(cols_);
      std::vector<RingElem> comp(lf_->count());
      for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t j = 0; j < lf_->count(); ++j)
          comp[j] = (j == i) ? gen[c] : lf_->factors()[j]->zero();
        lifted[c] = lf_->from_components(comp);
      }
      kernel_.push_back(std::move(lifted));
    }
  }
}

std::optional<std::vector<RingElem>> LinearSolver::solve(const std::vector<RingElem>& b) const {
  if (b.size() != rows_) fail("shape-mismatch", "right-hand side has the wrong length");
  if (!local_) {
    std::vector<std::vector<RingElem>> xs;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      std::vector<RingElem> bi(rows_);
      for (std::size_t j = 0; j < rows_; ++j) bi[j] = lf_->to_components(b[j])[i];
      auto xi = parts_[i].solve(bi);
      if (!xi) return std::nullopt;
      xs.push_back(std::move(*xi));
    }
    std::vector<RingElem> x(cols_);
    std::vector<RingElem> comp(parts_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t i = 0; i < parts_.size(); ++i) comp[i] = xs[i][c];
      x[c] = lf_->from_components(comp);
    }
    return x;
  }

  std::vector<RingElem> y = b;
  std::vector<RingElem> x(cols_, ring_->zero());
  const bool zm = ring_->is_zm();
  for (const auto& row : image_rows_) {
    const RingElem& e = y[row.pivot];
    if (e.is_zero()) continue;
    RingElem q;
    if (zm) {
      std::uint64_t d = std::get<0>(row.a[row.pivot].payload());
      std::uint64_t er = std::get<0>(e.payload());
      if (er % d != 0) return std::nullopt;
      q = ring_->from_int(static_cast<std::int64_t>(er / d));
    } else {
      q = e * row.a[row.pivot].inv();
    }
    for (std::size_t c = row.pivot; c < rows_; ++c) y[c] -= q * row.a[c];
    for (std::size_t c = 0; c < cols_; ++c) x[c] += q * row.u[c];
  }
  for (const auto& e : y)
    if (!e.is_zero()) return std::nullopt;
  return x;
}

std::vector<std::vector<RingElem>> kernel(const Matrix& m) { return LinearSolver(m).kernel(); }

std::optional<std::vector<RingElem>> solve(const Matrix& m, const std::vector<RingElem>& b) {
  return LinearSolver(m).solve(b);
}

RowSpace::RowSpace(const Matrix& generators)
    : canonical_(howell_form(generators)), solver_(generators.transpose()) {}

bool RowSpace::contains(const std::vector<RingElem>& v) const {
  return solver_.solve(v).has_value();
}

}  // namespace odac
