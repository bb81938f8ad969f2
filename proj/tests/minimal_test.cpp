#include <random>

#include "cliffalg/clifford/sections.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/minimal/algebra.hpp"
#include "cliffalg/minimal/basepoint.hpp"
#include "cliffalg/minimal/reports.hpp"
#include "cliffalg/minimal/toric.hpp"
#include "cliffalg/quadalg/duality.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"
#include "doctest.h"

using namespace cliffalg;
using namespace cliffalg::minimal;
using exactla::Rational;

namespace {

FamilyPtr degenerate_family() {
  clifford::Matrix x2 = {{1, 0}, {0, 0}};
  clifford::Matrix xy = {{0, Rational(1, 2)}, {Rational(1, 2), 0}};
  return std::make_shared<const clifford::QuadricFamily>(clifford::QuadricFamily::create(2, {x2, xy}, "x^2, xy"));
}

std::vector<std::size_t> polynomial_dims(int n, int D) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= D; ++i) out.push_back(static_cast<std::size_t>(binomial(n + i - 1, i)));
  return out;
}

std::vector<std::size_t> dims_of(const quadalg::QuotientAlgebra& a) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= a.cap(); ++d) out.push_back(a.dim(d));
  return out;
}

}  // namespace

TEST_CASE("basepoint certification") {
  const auto t2 = basepoint_check(clifford::toric_family(2));
  CHECK(t2.status == BasepointStatus::empty_intersection);
  CHECK(t2.witness_degree == 3);
  for (int cap : {2, 6, 10}) {
    const auto d = basepoint_check(degenerate_family(), cap);
    CHECK(d.status == BasepointStatus::inconclusive);
    CHECK(d.witness_degree == 0);
  }
  for (int n = 1; n <= 5; ++n) {
    const auto c = basepoint_check(clifford::toric_family(n));
    CHECK(c.status == BasepointStatus::empty_intersection);
    CHECK(c.witness_degree <= 2 * n);
  }
  CHECK_THROWS_AS(basepoint_check(clifford::universal_family(2)), WrongFamilyShape);
  CHECK(std::string(to_string(BasepointStatus::inconclusive)) == "inconclusive");
}

TEST_CASE("B_U dimensions") {
  CHECK(build_BU(clifford::toric_family(2), 6).dims() == polynomial_dims(2, 6));
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto f = random_certified_family(3, seed);
    const auto t = build_BU(f, 8);
    CHECK(t.dim(2) == 6);
    CHECK(t.dims() == polynomial_dims(3, 8));
    CHECK(t.dim(0) == 1);
  }
  for (int n = 2; n <= 4; ++n) CHECK(build_BU(clifford::toric_family(n), 8).dims() == polynomial_dims(n, 8));
  CHECK_THROWS_AS(build_BU(degenerate_family(), 3), NotCertified);
  // with the override the degenerate family still has C(n+i-1, i) sections
  CHECK(build_BU(degenerate_family(), 3, true).dims() == polynomial_dims(2, 3));
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i <= 12; ++i) CHECK(binomial_identity(n, i));
  }
}

TEST_CASE("quadratic presentation") {
  const auto m2 = presentation_match(clifford::toric_family(2), 6);
  CHECK(m2.relations.dim() == 1);
  CHECK(m2.quotient_dims == polynomial_dims(2, 6));
  CHECK(m2.dims_match());
  CHECK(m2.relations_are_kernel);
  CHECK(m2.structure_constants_match);
  for (std::uint64_t seed : {5, 6, 7}) {
    const auto f = random_certified_family(3, seed);
    const auto m = presentation_match(f, 6);
    CHECK(m.dims_match());
    CHECK(m.relations_are_kernel);
    CHECK(m.structure_constants_match);
    CHECK(m.relations.dim() == 3);
  }
  CHECK_THROWS_AS(presentation_match(clifford::universal_family(2), 3), WrongFamilyShape);
  CHECK_THROWS_AS(presentation_match(degenerate_family(), 3), NotCertified);
}

TEST_CASE("property: presentation match is independent of the basis of U") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto f = random_certified_family(3, 9);
  const auto base = presentation_match(f, 4);
  int tried = 0;
  while (tried < 3) {
    clifford::Matrix change(3, std::vector<Rational>(3, 0));
    for (auto& row : change) {
      for (auto& x : row) x = entry(rng);
    }
    try {
      const auto g = std::make_shared<const clifford::QuadricFamily>(f->with_basis_change(change));
      const auto m = presentation_match(g, 4);
      CHECK(m.relations == base.relations);
      CHECK(m.quotient_dims == base.quotient_dims);
      CHECK(m.clifford_dims == base.clifford_dims);
      CHECK(m.structure_constants_match);
      ++tried;
    } catch (const ValidationError&) {
    }
  }
}

TEST_CASE("duals of the quadratic presentation") {
  for (int n = 2; n <= 4; ++n) {
    const auto perp = u_perp(*clifford::toric_family(n));
    const auto dual = quadalg::quadratic_dual(perp, n);
    CHECK(dual.dim() == static_cast<std::size_t>(n * (n - 1) / 2 + n));
    quadalg::AlgebraPresentation p(n);
    p.add_relations(2, dual);
    const quadalg::QuotientAlgebra a(p, 8);
    for (int i = 0; i <= 8; ++i) CHECK(a.dim(i) == static_cast<std::size_t>(binomial(n, i)));
    CHECK(quadalg::frobenius_check(a.table(n), n));
    CHECK(quadalg::koszul_series_check(build_BU(clifford::toric_family(n), 8).hilbert(), a.hilbert()));
  }
  const auto f = random_certified_family(3, 4);
  quadalg::AlgebraPresentation p(3);
  p.add_relations(2, quadalg::quadratic_dual(u_perp(*f), 3));
  const quadalg::QuotientAlgebra a(p, 8);
  CHECK(quadalg::koszul_series_check(build_BU(f, 8).hilbert(), a.hilbert()));
  CHECK(quadalg::frobenius_check(a.table(3), 3));
}

TEST_CASE("toric family") {
  for (const Rational& q : {Rational(1), Rational(-1), Rational(5), Rational(-1, 2)}) {
    for (int n = 2; n <= 3; ++n) {
      const auto r = toric_family({n, q}, 6);
      CHECK(r.hilbert == quadalg::HilbertSeries::polynomial(n, 6));
      std::vector<std::size_t> ext;
      for (int i = 0; i <= n + 1; ++i) ext.push_back(static_cast<std::size_t>(binomial(n, i)));
      CHECK(r.dual_dims == ext);
      CHECK(pbw_check({n, q}, 6));
    }
  }
  CHECK(toric_presentation({3, -1}).relations()[0].space == u_perp(*clifford::toric_family(3)));
  CHECK(toric_family({3, 1}, 3).dual_dims == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK_THROWS_AS(pbw_check({2, 0}, 3), NotApplicable);
  // q = 0 still computes; v_i v_j = 0 for i < j leaves the decreasing words
  const auto zero = toric_family({2, 0}, 4);
  CHECK(zero.hilbert.coefficients() == std::vector<std::int64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("PBW mutation") {
  auto p = toric_presentation({3, -1});
  CHECK(pbw_check(p, 6));
  auto mutated = p;
  mutated.add_relations(2, quadalg::Subspace::span(9, std::vector{exactla::SparseVector::unit(0)}));
  CHECK_FALSE(pbw_check(mutated, 4));
  CHECK(pbw_check(toric_presentation({2, 1}), 5));
}

TEST_CASE("q = 5 normal forms by rewriting") {
  // rewriting v_j v_i -> v_i v_j / q for i < j sorts every word, so the
  // sorted words span; independence gives the polynomial count
  const quadalg::QuotientAlgebra a(toric_presentation({2, 5}), 6);
  CHECK(dims_of(a) == polynomial_dims(2, 6));
  for (int d = 0; d <= 6; ++d) {
    for (const auto& w : a.basis_words(d)) CHECK(std::is_sorted(w.begin(), w.end()));
  }
  CHECK(a.normal_form({1, 1, 0}) == a.normal_form({0, 1, 1}).scaled(Rational(1, 25)));
}

TEST_CASE("helix Ext table") {
  for (int n = 2; n <= 3; ++n) {
    const auto h = helix_ext_check(clifford::toric_family(n), 6);
    CHECK(h.serre_ok);
    CHECK(h.strong_ok);
    CHECK(h.violations.empty());
  }
  const auto t2 = clifford::toric_family(2);
  CHECK(clifford::section_dim(*t2, -2, 2) == 1);
  CHECK(clifford::section_dim(*t2, -2, 0) == 0);
  CHECK(clifford::ext_table(*t2, 0, 1).at(0, 1) == clifford::ExtEntry{{0, 2}});
  CHECK_THROWS_AS(helix_ext_check(clifford::universal_family(2), 3), WrongFamilyShape);
}

TEST_CASE("Koszul resolution series") {
  CHECK(mck_identity(clifford::toric_family(3), 8));
  CHECK(mck_identity(quadalg::HilbertSeries::polynomial(2, 8), 2));
  auto c = quadalg::HilbertSeries::polynomial(3, 6).coefficients();
  c[4] += 1;
  CHECK_FALSE(mck_identity(quadalg::HilbertSeries(c), 3));
}

TEST_CASE("minimal suites") {
  for (const auto& f : {clifford::toric_family(2), clifford::toric_family(3), random_certified_family(3, 11)}) {
    for (const auto& r : run_suite(f, 6, 42)) {
      INFO(r.name, " observed ", r.observed, " expected ", r.expected);
      CHECK(r.status == Status::pass);
    }
  }
  const auto degenerate = run_suite(degenerate_family(), 6, 42);
  REQUIRE(degenerate.size() == 2);
  CHECK(degenerate[0].status == Status::inconclusive);
  CHECK(run_suite(clifford::universal_family(2), 4, 1)[0].status == Status::fail);
  for (const Rational& q : {Rational(1), Rational(-1), Rational(5), Rational(-1, 2)}) {
    for (const auto& r : toric_suite({3, q}, 6)) {
      INFO(r.name, " observed ", r.observed, " expected ", r.expected);
      CHECK(r.status == Status::pass);
    }
  }
  for (const auto& r : toric_suite({2, 0}, 4)) CHECK(r.status == Status::inconclusive);
}
