#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "odac/linalg.hpp"

using namespace odac;

namespace {

Matrix random_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = ring->elem_at(rng() % ring->size());
  return m;
}

std::vector<RingElem> index_vector(const RingPtr& ring, std::size_t len, std::uint64_t idx) {
  std::vector<RingElem> v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = ring->elem_at(idx % ring->size());
    idx /= ring->size();
  }
  return v;
}

std::uint64_t pow_sz(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<RingElem> mat_vec(const Matrix& m, const std::vector<RingElem>& x) {
  std::vector<RingElem> y(m.rows(), m.ring()->zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

bool is_zero_vec(const std::vector<RingElem>& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("kernel of [2] over Z4 is generated by (2)") {
  RingPtr z4 = Ring::zm(4);
  Matrix m(z4, 1, 1);
  m.at(0, 0) = z4->from_int(2);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == z4->from_int(2));
}

TEST_CASE("kernel of the identity is trivial") {
  for (const auto& ring : {Ring::zm(9), Ring::gf(2, 2), parse_ring("Z6")}) {
    CHECK(kernel(Matrix::identity(ring, 3)).empty());
  }
}

TEST_CASE("howell form examples") {
  RingPtr z4 = Ring::zm(4);
  Matrix m(z4, 2, 2);
  m.at(0, 0) = z4->from_int(2);
  m.at(0, 1) = z4->from_int(1);
  m.at(1, 0) = z4->from_int(0);
  m.at(1, 1) = z4->from_int(2);
  // the row space contains (2,1),(0,2) and the stabilizer structure
  Matrix h = howell_form(m);
  CHECK(howell_form(h) == h);  // idempotent
}

TEST_CASE("howell form is canonical under row operations") {
  std::mt19937_64 rng(7);
  for (const auto& ring :
       {Ring::zm(4), Ring::zm(8), Ring::zm(9), Ring::gf(2, 2), Ring::zm(6), Ring::zm(12)}) {
    std::vector<RingElem> units;
    for (std::uint64_t u = 1; u < ring->size(); ++u)
      if (ring->elem_at(u).is_unit()) units.push_back(ring->elem_at(u));
    for (int t = 0; t < 30; ++t) {
      Matrix m = random_matrix(ring, 3, 4, rng);
      Matrix h = howell_form(m);
      CHECK(howell_form(h) == h);
      // a long chain of random elementary row operations preserves the form
      Matrix m2 = m;
      for (int op = 0; op < 20; ++op) {
        std::size_t a = rng() % 3, b = rng() % 3;
        switch (rng() % 3) {
          case 0:
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m2.at(a, j), m2.at(b, j));
            break;
          case 1: {
            RingElem u = units[rng() % units.size()];
            for (std::size_t j = 0; j < m.cols(); ++j) m2.at(a, j) = m2.at(a, j) * u;
            break;
          }
          case 2: {
            if (a == b) break;
            RingElem c = ring->elem_at(rng() % ring->size());
            for (std::size_t j = 0; j < m.cols(); ++j) m2.at(a, j) += c * m2.at(b, j);
            break;
          }
        }
      }
      CHECK(howell_form(m2) == h);
      // appending redundant rows (random combinations) changes nothing
      Matrix m3(ring, 5, 4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) m3.at(i, j) = m.at(i, j);
      for (std::size_t extra = 3; extra < 5; ++extra) {
        RingElem c0 = ring->elem_at(rng() % ring->size());
        RingElem c1 = ring->elem_at(rng() % ring->size());
        std::size_t src = rng() % 3;
        for (std::size_t j = 0; j < 4; ++j)
          m3.at(extra, j) = c0 * m.at(0, j) + c1 * m.at(src, j);
      }
      CHECK(howell_form(m3) == h);
    }
  }
}

TEST_CASE("howell form is a complete rowspace invariant (exhaustive)") {
  // two matrices have the same howell form exactly when they span the same
  // set of rows; checked over every 2x2 matrix
  for (const auto& ring : {Ring::zm(4), Ring::zm(6), Ring::gf(2, 2), Ring::zm(5)}) {
    std::uint64_t q = ring->size();
    std::map<std::set<std::pair<std::uint64_t, std::uint64_t>>, Matrix> forms;
    for (std::uint64_t code = 0; code < q * q * q * q; ++code) {
      Matrix m(ring, 2, 2);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          m.at(i, j) = ring->elem_at(c % q);
          c /= q;
        }
      std::set<std::pair<std::uint64_t, std::uint64_t>> space;
      for (std::uint64_t y0 = 0; y0 < q; ++y0)
        for (std::uint64_t y1 = 0; y1 < q; ++y1) {
          RingElem a = ring->elem_at(y0) * m.at(0, 0) + ring->elem_at(y1) * m.at(1, 0);
          RingElem b = ring->elem_at(y0) * m.at(0, 1) + ring->elem_at(y1) * m.at(1, 1);
          space.insert({a.index(), b.index()});
        }
      Matrix h = howell_form(m);
      auto [it, fresh] = forms.emplace(std::move(space), h);
      if (!fresh) CHECK(it->second == h);
    }
    // distinct rowspaces must disagree somewhere: forms is keyed by the space,
    // so injectivity means no two keys share a form
    std::set<std::string> rendered;
    for (const auto& [space, h] : forms) {
      std::string key;
      for (const auto& e : h.entries()) key += e.str() + ";";
      key += std::to_string(h.rows());
      CHECK(rendered.insert(key).second);
    }
  }
}

TEST_CASE("membership agrees with exhaustive enumeration") {
  std::mt19937_64 rng(42);
  for (const auto& ring : {Ring::zm(4), Ring::zm(9), Ring::gf(2, 2), Ring::zm(6)}) {
    for (int t = 0; t < 10; ++t) {
      Matrix g = random_matrix(ring, 2, 3, rng);
      RowSpace space(g);
      // enumerate the actual row space: all combinations y^T G
      std::set<std::vector<std::uint64_t>> members;
      for (std::uint64_t c = 0; c < ring->size() * ring->size(); ++c) {
        auto y = index_vector(ring, 2, c);
        auto v = mat_vec(g.transpose(), y);
        std::vector<std::uint64_t> key;
        for (const auto& e : v) key.push_back(e.index());
        members.insert(key);
      }
      for (std::uint64_t c = 0; c < pow_sz(ring->size(), 3); ++c) {
        auto v = index_vector(ring, 3, c);
        std::vector<std::uint64_t> key;
        for (const auto& e : v) key.push_back(e.index());
        CHECK(space.contains(v) == (members.count(key) > 0));
      }
    }
  }
}

TEST_CASE("solve returns a valid solution exactly when one exists") {
  std::mt19937_64 rng(4242);
  for (const auto& ring : {Ring::zm(4), Ring::zm(9), Ring::gf(3, 1), Ring::zm(12),
                           parse_ring("Z4 x Z3")}) {
    for (int t = 0; t < 10; ++t) {
      Matrix m = random_matrix(ring, 3, 2, rng);
      LinearSolver solver(m);
      // exhaustive truth over all x
      std::set<std::vector<std::uint64_t>> image;
      for (std::uint64_t c = 0; c < pow_sz(ring->size(), 2); ++c) {
        auto x = index_vector(ring, 2, c);
        auto y = mat_vec(m, x);
        std::vector<std::uint64_t> key;
        for (const auto& e : y) key.push_back(e.index());
        image.insert(key);
      }
      int checked = 0;
      for (std::uint64_t c = 0; c < pow_sz(ring->size(), 3) && checked < 200; ++c, ++checked) {
        auto b = index_vector(ring, 3, c);
        std::vector<std::uint64_t> key;
        for (const auto& e : b) key.push_back(e.index());
        auto x = solver.solve(b);
        CHECK(x.has_value() == (image.count(key) > 0));
        if (x) {
          auto y = mat_vec(m, *x);
          CHECK(y == b);
        }
      }
    }
  }
}

TEST_CASE("kernel generators annihilate and generate the whole kernel") {
  std::mt19937_64 rng(99);
  for (const auto& ring : {Ring::zm(8), Ring::zm(9), Ring::gf(2, 3), Ring::zm(6)}) {
    for (int t = 0; t < 8; ++t) {
      Matrix m = random_matrix(ring, 2, 3, rng);
      auto ker = kernel(m);
      for (const auto& k : ker) CHECK(is_zero_vec(mat_vec(m, k)));
      // every kernel element is in the row space of the generators
      Matrix gens(ring, ker.size(), 3);
      for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) gens.at(i, j) = ker[i][j];
      RowSpace span(gens);
      std::size_t count = 0;
      for (std::uint64_t c = 0; c < pow_sz(ring->size(), 3); ++c) {
        auto x = index_vector(ring, 3, c);
        if (is_zero_vec(mat_vec(m, x))) {
          ++count;
          CHECK(span.contains(x));
        }
      }
      CHECK(count >= 1);  // at least the zero vector
    }
  }
}

TEST_CASE("row space is preserved by the howell form") {
  std::mt19937_64 rng(2024);
  for (const auto& ring : {Ring::zm(4), Ring::zm(9), Ring::zm(6), Ring::gf(5, 1)}) {
    for (int t = 0; t < 10; ++t) {
      Matrix m = random_matrix(ring, 3, 3, rng);
      RowSpace before(m);
      RowSpace after(howell_form(m));
      for (int s = 0; s < 50; ++s) {
        auto v = index_vector(ring, 3, rng() % pow_sz(ring->size(), 3));
        CHECK(before.contains(v) == after.contains(v));
      }
    }
  }
}

TEST_CASE("zero-sized systems") {
  RingPtr z9 = Ring::zm(9);
  Matrix empty_rows(z9, 0, 3);
  auto ker = kernel(empty_rows);
  CHECK(ker.size() == 3);  // everything
  LinearSolver s(empty_rows);
  auto x = s.solve({});
  REQUIRE(x.has_value());
  CHECK(x->size() == 3);

  Matrix empty_cols(z9, 3, 0);
  LinearSolver s2(empty_cols);
  CHECK(s2.solve({z9->zero(), z9->zero(), z9->zero()}).has_value());
  CHECK_FALSE(s2.solve({z9->one(), z9->zero(), z9->zero()}).has_value());
}
