#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "odac/gf2m.hpp"

using namespace odac;

TEST_CASE("trace on F4") {
  BinaryField f4(1);
  CHECK(f4.modulus() == 0b111);  // x^2 + x + 1
  CHECK(f4.trace(0) == 0);
  CHECK(f4.trace(1) == 0);       // 1 + 1^2 = 0 in characteristic 2
  CHECK(f4.trace(0b10) == 1);    // x + x^2 = x + (x+1) = 1
  CHECK(f4.trace(0b11) == 1);
}

TEST_CASE("trace is additive and not identically zero") {
  for (unsigned m = 0; m <= 4; ++m) {
    BinaryField f(m);
    bool nonzero = false;
    for (std::uint64_t a = 0; a < f.size(); ++a) {
      nonzero |= f.trace(a) == 1;
      for (std::uint64_t b = 0; b < f.size(); ++b)
        CHECK(f.trace(a ^ b) == (f.trace(a) ^ f.trace(b)));
    }
    CHECK(nonzero);
  }
}

TEST_CASE("symplectic form examples over F4") {
  BinaryField f4(1);
  CHECK(symp_form(f4, {1, 0}, {0, 1}) == 0);        // Tr(1) = 0
  CHECK(symp_form(f4, {0b10, 0}, {0, 0b10}) == 1);  // Tr(x^2) = 1
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) CHECK(symp_form(f4, {a, b}, {a, b}) == 0);
}

TEST_CASE("symplectic basis is trace-dual") {
  for (unsigned m = 0; m <= 4; ++m) {
    BinaryField f(m);
    SympBasis basis(f);
    for (unsigned i = 0; i < f.degree(); ++i)
      for (unsigned j = 0; j < f.degree(); ++j)
        CHECK(f.trace(f.mul(basis.e(i), basis.f(j))) == (i == j ? 1 : 0));
  }
}

TEST_CASE("coordinates round-trip and reproduce the form") {
  std::mt19937_64 rng(12345);
  for (unsigned m = 0; m <= 4; ++m) {
    BinaryField f(m);
    SympBasis basis(f);
    auto check_pair = [&](SympVector w, SympVector v) {
      SympBasis::Coords cw = basis.coords(w), cv = basis.coords(v);
      unsigned in_coords =
          std::popcount(std::uint32_t(cw.a & cv.b)) + std::popcount(std::uint32_t(cv.a & cw.b));
      CHECK(symp_form(f, w, v) == (in_coords & 1));
    };
    if (m <= 2) {
      for (std::uint64_t a = 0; a < f.size(); ++a)
        for (std::uint64_t b = 0; b < f.size(); ++b) {
          SympVector w{a, b};
          CHECK(basis.reconstruct(basis.coords(w)) == w);
          for (std::uint64_t a2 = 0; a2 < f.size(); ++a2)
            for (std::uint64_t b2 = 0; b2 < f.size(); ++b2) check_pair(w, {a2, b2});
        }
    } else {
      for (int t = 0; t < 500; ++t) {
        SympVector w{rng() & f.mask(), rng() & f.mask()};
        SympVector v{rng() & f.mask(), rng() & f.mask()};
        CHECK(basis.reconstruct(basis.coords(w)) == w);
        check_pair(w, v);
      }
    }
  }
}

TEST_CASE("coordinates of basis vectors are unit strings") {
  BinaryField f(2);
  SympBasis basis(f);
  SympBasis::Coords c = basis.coords({basis.e(0), 0});
  CHECK(c.a == 1);
  CHECK(c.b == 0);
  c = basis.coords({0, basis.f(1)});
  CHECK(c.a == 0);
  CHECK(c.b == 2);
  c = basis.coords({0, 0});
  CHECK(c.a == 0);
  CHECK(c.b == 0);
}

TEST_CASE("qform examples and the polar identity") {
  std::mt19937_64 rng(99);
  for (unsigned m = 0; m <= 4; ++m) {
    BinaryField f(m);
    SympBasis basis(f);
    CHECK(basis.qform({0, 0}) == 0);
    CHECK(basis.qform({basis.e(0), 0}) == 1);  // a = (1,0,..), b = 0
    auto polar = [&](SympVector w, SympVector v) {
      unsigned lhs = symp_form(f, w, v);
      unsigned rhs = basis.qform(w) ^ basis.qform(v) ^
                     basis.qform({w.alpha ^ v.alpha, w.beta ^ v.beta});
      CHECK(lhs == rhs);
    };
    if (m <= 2) {
      for (std::uint64_t a = 0; a < f.size(); ++a)
        for (std::uint64_t b = 0; b < f.size(); ++b)
          for (std::uint64_t a2 = 0; a2 < f.size(); ++a2)
            for (std::uint64_t b2 = 0; b2 < f.size(); ++b2) polar({a, b}, {a2, b2});
    } else {
      for (int t = 0; t < 1000; ++t)
        polar({rng() & f.mask(), rng() & f.mask()}, {rng() & f.mask(), rng() & f.mask()});
    }
  }
}

TEST_CASE("Q counts match 2^m (2^(m+1) + 1)") {
  for (unsigned m = 0; m <= 3; ++m) {
    SympBasis basis{BinaryField(m)};
    std::uint64_t expected = (std::uint64_t(1) << m) * ((std::uint64_t(1) << (m + 1)) + 1);
    CHECK(enumerate_Q(basis).size() == expected);
  }
  CHECK(enumerate_Q(SympBasis(BinaryField(1))).size() == 10);
  CHECK(enumerate_Q(SympBasis(BinaryField(2))).size() == 36);
  CHECK(enumerate_Q(SympBasis(BinaryField(3))).size() == 136);
}

TEST_CASE("enumeration order is lexicographic on coordinates") {
  for (unsigned m = 0; m <= 2; ++m) {
    SympBasis basis{BinaryField(m)};
    auto w = enumerate_W(basis);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      CHECK(basis.lex_key(w[i]) < basis.lex_key(w[i + 1]));
  }
}

TEST_CASE("lines W_alpha partition W minus the origin") {
  for (unsigned m = 0; m <= 3; ++m) {
    BinaryField f(m);
    SympBasis basis(f);
    std::set<SympVector> seen;
    std::uint64_t line_count = 0;
    for (LineIndex alpha : all_line_indices(f)) {
      auto line = line_W(basis, alpha);
      ++line_count;
      CHECK(line.size() == f.size() - 1);  // nonzero lambda count
      for (SympVector w : line) {
        CHECK(w != SympVector{0, 0});
        CHECK(seen.insert(w).second);  // pairwise disjoint
      }
    }
    CHECK(line_count == f.size() + 1);
    CHECK(seen.size() == f.size() * f.size() - 1);  // union is W minus the origin
  }
}

TEST_CASE("Q_alpha has 2^m points spanning the full line") {
  for (unsigned m = 0; m <= 3; ++m) {
    BinaryField f(m);
    SympBasis basis(f);
    for (LineIndex alpha : all_line_indices(f)) {
      auto qline = line_Q(basis, alpha);
      CHECK(qline.size() == std::uint64_t(1) << m);
      // F_2-span via xor closure equals the line plus the origin
      std::set<SympVector> span{{0, 0}};
      bool grew = true;
      while (grew) {
        grew = false;
        for (SympVector w : qline)
          for (SympVector s : std::set<SympVector>(span)) {
            SympVector nw{w.alpha ^ s.alpha, w.beta ^ s.beta};
            if (span.insert(nw).second) grew = true;
          }
      }
      std::set<SympVector> dotted{{0, 0}};
      for (SympVector w : line_W(basis, alpha)) dotted.insert(w);
      CHECK(span == dotted);
      // inside the dotted line, the q = 0 part is totally isotropic and
      // stays within the 2^m bound
      std::vector<SympVector> qc;
      for (SympVector w : dotted)
        if (basis.qform(w) == 0) qc.push_back(w);
      CHECK(qc.size() <= std::uint64_t(1) << m);
      for (SympVector w1 : qc)
        for (SympVector w2 : qc) CHECK(symp_form(f, w1, w2) == 0);
    }
  }
}

TEST_CASE("omega partition sizes") {
  {
    auto omegas = omega_partition(SympBasis(BinaryField(1)));
    REQUIRE(omegas.size() == 3);
    CHECK(omegas[0].size() == 4);
    CHECK(omegas[1].size() == 4);
    CHECK(omegas[2].size() == 2);
  }
  {
    auto omegas = omega_partition(SympBasis(BinaryField(2)));
    REQUIRE(omegas.size() == 4);
    CHECK(omegas[0].size() == 16);
    CHECK(omegas[1].size() == 8);
    CHECK(omegas[2].size() == 8);
    CHECK(omegas[3].size() == 4);
  }
  for (unsigned m = 0; m <= 3; ++m) {
    SympBasis basis{BinaryField(m)};
    auto omegas = omega_partition(basis);
    auto q = enumerate_Q(basis);
    std::set<SympVector> all;
    std::size_t total = 0;
    for (const auto& o : omegas) {
      total += o.size();
      for (SympVector w : o) CHECK(all.insert(w).second);
    }
    CHECK(total == q.size());
    CHECK(all == std::set<SympVector>(q.begin(), q.end()));
  }
}

TEST_CASE("nondegeneracy: every nonzero vector has a partner") {
  for (unsigned m = 0; m <= 2; ++m) {
    BinaryField f(m);
    for (std::uint64_t a = 0; a < f.size(); ++a)
      for (std::uint64_t b = 0; b < f.size(); ++b) {
        if (a == 0 && b == 0) continue;
        bool found = false;
        for (std::uint64_t a2 = 0; a2 < f.size() && !found; ++a2)
          for (std::uint64_t b2 = 0; b2 < f.size() && !found; ++b2)
            found = symp_form(f, {a, b}, {a2, b2}) == 1;
        CHECK(found);
      }
  }
}

TEST_CASE("m cap") {
  CHECK_THROWS_AS(BinaryField(7), Error);
  CHECK_NOTHROW(BinaryField(7, true));
}

TEST_CASE("vector text form") {
  BinaryField f(1);
  CHECK(to_string(f, {0b01, 0b10}) == "(10;01)");
  CHECK(LineIndex::infinity().str(f) == "inf");
  CHECK(LineIndex::at(0b10).str(f) == "01");
}
