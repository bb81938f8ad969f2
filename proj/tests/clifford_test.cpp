#include <algorithm>
#include <bit>
#include <random>

#include "cliffalg/clifford/multiplication.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/exactla/subspace.hpp"
#include "cliffalg/partitions/schur.hpp"
#include "doctest.h"

using namespace cliffalg;
using namespace cliffalg::clifford;
using exactla::Rational;

namespace {

FamilyPtr share(QuadricFamily f) { return std::make_shared<const QuadricFamily>(std::move(f)); }

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Rational>(n, 0)); }

// Toric squares plus a small symmetric rational perturbation.
FamilyPtr perturbed_toric(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Matrix> basis;
  for (int c = 0; c < n; ++c) {
    Matrix m = zero_matrix(n);
    m[c][c] = 1;
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        m[a][b] += r;
        if (a != b) m[b][a] = m[a][b];
      }
    }
    basis.push_back(m);
  }
  return share(QuadricFamily::create(n, basis, "perturbed"));
}

FamilyPtr zero_family(int n, int k) {
  return share(QuadricFamily::unchecked(n, std::vector<Matrix>(k, zero_matrix(n)), "zero"));
}

CliffordElement random_element(const FamilyPtr& f, int degree, std::mt19937_64& rng) {
  const SectionBasis basis(f, degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  CliffordElement x(f);
  for (const auto& key : basis.keys()) {
    if (rng() % 3 == 0) x.add_term(key, coeff(rng));
  }
  if (x.is_zero() && basis.size() > 0) x.add_term(basis.key(rng() % basis.size()), 1);
  return x;
}

// Independent model of the Clifford algebra: monomials are products of
// generators in nondecreasing-free sorted order, reduced by
//   e_b e_a = -e_a e_b + 2 q(a,b)   (a < b)   and   e_a e_a = q(a,a).
using Word = std::vector<int>;
using OracleKey = std::pair<Word, std::vector<int>>;
using Oracle = std::map<OracleKey, Rational>;

void oracle_add(Oracle& out, const Word& w, const std::vector<int>& e, const Rational& c, const QuadricFamily& f) {
  if (c == 0) return;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1]) continue;
    Word rest = w;
    rest.erase(rest.begin() + i, rest.begin() + i + 2);
    const auto q = q_pair(f, w[i], w[i + 1]);
    const Rational factor = w[i] == w[i + 1] ? Rational(1) : Rational(2);
    for (int k = 0; k < f.k(); ++k) {
      if (q[k] == 0) continue;
      auto e2 = e;
      ++e2[k];
      oracle_add(out, rest, e2, c * factor * q[k], f);
    }
    if (w[i] != w[i + 1]) {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      oracle_add(out, swapped, e, -c, f);
    }
    return;
  }
  auto& slot = out[{w, e}];
  slot += c;
  if (slot == 0) out.erase({w, e});
}

Oracle oracle_mul(const Oracle& x, const Oracle& y, const QuadricFamily& f) {
  Oracle out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      Word w = kx.first;
      w.insert(w.end(), ky.first.begin(), ky.first.end());
      std::vector<int> e = kx.second;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += ky.second[i];
      oracle_add(out, w, e, cx * cy, f);
    }
  }
  return out;
}

// The wedge e_S is the antisymmetrized Clifford product of its letters.
Oracle to_oracle(const CliffordElement& x) {
  const QuadricFamily& f = *x.family();
  Oracle out;
  for (const auto& [key, value] : x.terms()) {
    Word letters;
    for (int a = 0; a < f.n(); ++a) {
      if ((key.subset >> a) & 1) letters.push_back(a);
    }
    Rational norm = 1;
    for (std::size_t m = 2; m <= letters.size(); ++m) norm *= static_cast<long>(m);
    Word perm = letters;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
      }
      const Rational sign = inversions % 2 ? Rational(-1) : Rational(1);
      oracle_add(out, perm, key.exponents, sign * value / norm, f);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("universal and toric families") {
  CHECK(universal_family(1)->k() == 1);
  CHECK(universal_family(2)->k() == 3);
  CHECK(universal_family(3)->k() == 6);
  const auto t = toric_family(3);
  CHECK(q_pair(*t, 0, 0) == std::vector<Rational>{1, 0, 0});
  CHECK(q_pair(*t, 0, 1) == std::vector<Rational>{0, 0, 0});
  const auto u = universal_family(2);
  CHECK(q_pair(*u, 0, 1) == std::vector<Rational>{0, 0, 1});
  CHECK(q_pair(*u, 1, 0) == q_pair(*u, 0, 1));
  CHECK(u->coefficient_weights()->at(2) == Weight{1, 1});
  CHECK(t->coefficient_weights()->at(1) == Weight{0, 2, 0});
}

TEST_CASE("family validation") {
  Matrix asym = zero_matrix(2);
  asym[0][1] = 1;
  CHECK_THROWS_AS(QuadricFamily::create(2, {asym}), ValidationError);
  Matrix sq = zero_matrix(2);
  sq[0][0] = 1;
  CHECK_THROWS_AS(QuadricFamily::create(2, {sq, sq}), ValidationError);
  CHECK_THROWS_AS(QuadricFamily::create(2, {}), ValidationError);
  CHECK_THROWS_AS(QuadricFamily::create(2, {Matrix(3, std::vector<Rational>(3, 0))}), ValidationError);
  Matrix singular = {{1, 1}, {1, 1}};
  CHECK_THROWS_AS(toric_family(2)->with_basis_change(singular), ValidationError);
  Matrix swap = {{0, 1}, {1, 0}};
  const auto swapped = toric_family(2)->with_basis_change(swap);
  CHECK(swapped.basis()[0] == toric_family(2)->basis()[1]);
  CHECK_FALSE(perturbed_toric(3, *std::make_unique<std::mt19937_64>(1))->coefficient_weights().has_value());
}

TEST_CASE("displayed small products") {
  const auto u2 = universal_family(2);
  const auto v0 = CliffordElement::generator(u2, 0);
  const auto v1 = CliffordElement::generator(u2, 1);
  // v_1 v_2 = v_1 ^ v_2 + q(v_1, v_2), and q(e_0, e_1) is the mixed coordinate y2
  CliffordElement expected(u2);
  expected.add_term({0b11, {0, 0, 0}}, 1);
  expected.add_term({0, {0, 0, 1}}, 1);
  CHECK(clifford_mul(v0, v1) == expected);
  CHECK(clifford_mul(v0, v1).to_string() == "y2 + e0^e1");
  // a square is a pure coefficient
  CHECK(clifford_mul(v0, v0) == CliffordElement::basis(u2, {0, {1, 0, 0}}));

  const auto u3 = universal_family(3);
  const auto e0 = CliffordElement::generator(u3, 0);
  const auto e1 = CliffordElement::generator(u3, 1);
  const auto e2 = CliffordElement::generator(u3, 2);
  // v1 v2 v3 = v1^v2^v3 + q(v2,v3) v1 - q(v1,v3) v2 + q(v1,v2) v3 with
  // coordinates y3 = (0,1), y4 = (0,2), y5 = (1,2)
  CliffordElement cubic(u3);
  cubic.add_term({0b111, {0, 0, 0, 0, 0, 0}}, 1);
  cubic.add_term({0b001, {0, 0, 0, 0, 0, 1}}, 1);
  cubic.add_term({0b010, {0, 0, 0, 0, 1, 0}}, -1);
  cubic.add_term({0b100, {0, 0, 0, 1, 0, 0}}, 1);
  CHECK(clifford_mul(clifford_mul(e0, e1), e2) == cubic);
  CHECK(clifford_mul(e0, clifford_mul(e1, e2)) == cubic);
  CHECK(cubic.degree() == 3);
}

TEST_CASE("element plumbing") {
  const auto u2 = universal_family(2);
  const auto t2 = toric_family(2);
  const auto x = CliffordElement::generator(u2, 0);
  CHECK_THROWS_AS(clifford_mul(x, CliffordElement::generator(t2, 0)), InvalidInput);
  CHECK_THROWS_AS(CliffordElement::generator(u2, 2), InvalidInput);
  CHECK_THROWS_AS(CliffordElement::basis(u2, {0, {1}}), InvalidInput);
  CHECK((x - x).is_zero());
  CHECK((x + x) == x.scaled(2));
  CHECK_FALSE((x + CliffordElement::scalar(u2, 1)).degree().has_value());
  CHECK(x.scaled(Rational(-3, 2)).to_string() == "-3/2*e0");
  CHECK(CliffordElement(u2).to_string() == "0");
}

TEST_CASE("property: products agree with the word-reduction model") {
  std::mt19937_64 rng(20240611);
  std::vector<FamilyPtr> families = {universal_family(2), universal_family(3), toric_family(3), perturbed_toric(3, rng)};
  for (const auto& f : families) {
    for (int trial = 0; trial < 12; ++trial) {
      const int dx = static_cast<int>(rng() % 4);
      const int dy = static_cast<int>(rng() % 4);
      const auto x = random_element(f, dx, rng);
      const auto y = random_element(f, dy, rng);
      const auto xy = clifford_mul(x, y);
      CHECK(to_oracle(xy) == oracle_mul(to_oracle(x), to_oracle(y), *f));
      CHECK(xy.degree() == std::optional<int>(dx + dy));
    }
  }
}

TEST_CASE("property: associativity and bilinearity on random homogeneous triples") {
  std::mt19937_64 rng(7);
  std::vector<FamilyPtr> families = {universal_family(2), universal_family(3), universal_family(4),
                                     toric_family(2),     toric_family(3),     toric_family(4),
                                     perturbed_toric(2, rng), perturbed_toric(3, rng), perturbed_toric(4, rng)};
  int cases = 0;
  for (const auto& f : families) {
    for (int trial = 0; trial < 24; ++trial) {
      const auto x = random_element(f, static_cast<int>(rng() % 4), rng);
      const auto y = random_element(f, static_cast<int>(rng() % 4), rng);
      const auto z = random_element(f, static_cast<int>(rng() % 3), rng);
      CHECK(clifford_mul(clifford_mul(x, y), z) == clifford_mul(x, clifford_mul(y, z)));
      const auto w = random_element(f, y.degree().value_or(0), rng);
      CHECK(clifford_mul(x, y + w.scaled(3)) == clifford_mul(x, y) + clifford_mul(x, w).scaled(3));
      ++cases;
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("Clifford relation v w + w v = 2 q(v, w)") {
  std::mt19937_64 rng(11);
  for (const auto& f : {universal_family(3), toric_family(4), perturbed_toric(3, rng)}) {
    for (int a = 0; a < f->n(); ++a) {
      for (int b = 0; b < f->n(); ++b) {
        const auto va = CliffordElement::generator(f, a);
        const auto vb = CliffordElement::generator(f, b);
        CliffordElement q(f);
        const auto coords = q_pair(*f, a, b);
        for (int c = 0; c < f->k(); ++c) {
          std::vector<int> e(f->k(), 0);
          e[c] = 1;
          q.add_term({0, e}, 2 * coords[c]);
        }
        CHECK(clifford_mul(va, vb) + clifford_mul(vb, va) == q);
      }
    }
  }
}

TEST_CASE("zero family degenerates to the exterior algebra") {
  const auto z = zero_family(4, 2);
  std::mt19937_64 rng(3);
  for (int a = 0; a < 4; ++a) {
    const auto v = CliffordElement::generator(z, a);
    CHECK(clifford_mul(v, v).is_zero());
  }
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t s = rng() % 16;
    const std::uint32_t t = rng() % 16;
    const auto x = CliffordElement::basis(z, {s, {0, 0}});
    const auto y = CliffordElement::basis(z, {t, {0, 0}});
    const auto xy = clifford_mul(x, y);
    if (s & t) {
      CHECK(xy.is_zero());
    } else {
      int inversions = 0;
      for (int a = 0; a < 4; ++a) {
        if ((s >> a) & 1) inversions += std::popcount(t & ((1u << a) - 1));
      }
      CHECK(xy == CliffordElement::basis(z, {s | t, {0, 0}}, inversions % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("section dimensions") {
  const auto u2 = universal_family(2);
  CHECK(section_dim(*u2, 1, 0) == 2);
  CHECK(section_dim(*u2, 0, 0) == 1);
  CHECK(section_dim(*u2, -1, 0) == 0);
  for (int n = 2; n <= 5; ++n) {
    const auto t = toric_family(n);
    CHECK(section_dim(*t, -n, n) == 1);
    CHECK(section_dim(*t, -n, 0) == 0);
    CHECK(section_dim(*t, 0, 0) == 1);
    for (int i = 0; i <= 10; ++i) {
      CHECK(section_dim(*t, i, 0) == binomial(n + i - 1, i));
      CHECK(SectionBasis(t, i).size() == static_cast<std::size_t>(section_dim(*t, i, 0)));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    const auto u = universal_family(n);
    for (int i = 0; i <= 6; ++i) {
      std::int64_t schur_total = 0;
      for (const auto& alpha : partitions::enumerate_diagrams(n, i)) schur_total += partitions::schur_dim(alpha, n);
      CHECK(section_dim(*u, i, 0) == schur_total);
      CHECK(SectionBasis(u, i).size() == static_cast<std::size_t>(schur_total));
    }
  }
  // universal family, n = 3: k = 6 so the top branch needs i <= -9
  CHECK(section_dim(*universal_family(3), -9, 6) == 1);
}

TEST_CASE("section basis characters") {
  const auto u = universal_family(3);
  for (int i = 0; i <= 4; ++i) {
    partitions::SymmetricPolynomial expected(3);
    for (const auto& alpha : partitions::enumerate_diagrams(3, i)) expected = expected + partitions::schur_polynomial(alpha, 3);
    CHECK(partitions::SymmetricPolynomial::from_polynomial(SectionBasis(u, i).character()) == expected);
  }
  const SectionBasis b1(u, 1);
  CHECK(b1.key(2) == BasisKey{0b100, {0, 0, 0, 0, 0, 0}});
  CHECK_THROWS_AS(b1.index_of(BasisKey{0, {1, 0, 0, 0, 0, 0}}), InvalidInput);
  std::mt19937_64 rng(5);
  CHECK_THROWS_AS(SectionBasis(perturbed_toric(2, rng), 2).character(), InvalidInput);
}

TEST_CASE("Ext table") {
  for (int n : {2, 3}) {
    const auto t = toric_family(n);
    const auto table = ext_table(*t, -2 * n, 2 * n);
    for (int i = table.lo(); i <= table.hi(); ++i) {
      for (int j = table.lo(); j <= table.hi(); ++j) {
        const auto& entry = table.at(i, j);
        if (j - i == -n) CHECK(entry == ExtEntry{{n, 1}});
        if (j >= i) {
          CHECK(entry.size() == 1);
          CHECK(entry.begin()->first == 0);
        }
      }
    }
    CHECK(table.at(0, 1) == ExtEntry{{0, n}});
  }
  CHECK(ext_table(*universal_family(2), 0, 1).at(0, 1) == ExtEntry{{0, 2}});
  CHECK_THROWS_AS(ext_table(*toric_family(2), 1, 0), InvalidInput);
}

TEST_CASE("multiplication matrices") {
  const auto u2 = universal_family(2);
  CHECK(multiplication_matrix(u2, 1) == exactla::SparseMatrix::identity(2));
  const auto m22 = multiplication_matrix(u2, 2);
  CHECK(m22.rows() == 4);
  CHECK(exactla::rank(m22) == 4);
  CHECK(exactla::kernel_basis(multiplication_matrix(u2, 3)).dim() == 2);
  const auto m33 = multiplication_matrix(universal_family(3), 3);
  CHECK(m33.cols() == 27);
  CHECK(exactla::rank(m33) == 19);
  CHECK(exactla::kernel_basis(m33).dim() == 8);
  CHECK_THROWS_AS(multiplication_matrix(u2, 0), InvalidInput);
}

TEST_CASE("word kernels agree with the word-reduction model") {
  std::mt19937_64 rng(99);
  for (const auto& f : {universal_family(2), universal_family(3), perturbed_toric(3, rng)}) {
    const int n = f->n();
    const int d = 3;
    // oracle word images, written in a common coordinate list
    std::vector<Oracle> images;
    std::map<OracleKey, exactla::Index> coord;
    for (int w = 0; w < n * n * n; ++w) {
      Oracle o;
      oracle_add(o, {w / (n * n), (w / n) % n, w % n}, std::vector<int>(f->k(), 0), 1, *f);
      for (const auto& [key, value] : o) coord.emplace(key, static_cast<exactla::Index>(coord.size()));
      images.push_back(o);
    }
    std::vector<exactla::SparseVector> columns;
    for (const auto& o : images) {
      std::vector<exactla::SparseVector::Entry> e;
      for (const auto& [key, value] : o) e.emplace_back(coord.at(key), value);
      columns.push_back(exactla::SparseVector::from_entries(e));
    }
    const auto oracle_matrix = exactla::SparseMatrix::from_columns(coord.size(), columns);
    CHECK(exactla::kernel_basis(oracle_matrix) == exactla::kernel_basis(multiplication_matrix(f, d)));
  }
}

TEST_CASE("serial and parallel matrices agree") {
  std::mt19937_64 rng(17);
  for (const auto& f : {universal_family(3), perturbed_toric(3, rng)}) {
    CHECK(multiplication_matrix(f, 4) == serial::multiplication_matrix(f, 4));
    CHECK(product_matrix(f, 2, 3) == serial::product_matrix(f, 2, 3));
  }
  // column x * dim B_j + y of product_matrix is basis(x) * basis(y)
  const auto u = universal_family(2);
  const SectionBasis b1(u, 1), b2(u, 2), b3(u, 3);
  const auto m = product_matrix(u, 1, 2);
  const auto cols = m.columns();
  for (std::size_t x = 0; x < b1.size(); ++x) {
    for (std::size_t y = 0; y < b2.size(); ++y) {
      const auto prod = clifford_mul(CliffordElement::basis(u, b1.key(x)), CliffordElement::basis(u, b2.key(y)));
      CHECK(element(b3, cols[x * b2.size() + y]) == prod);
      CHECK(coordinates(b3, prod) == cols[x * b2.size() + y]);
    }
  }
}
