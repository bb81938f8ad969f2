#include "cliffalg/minimal/algebra.hpp"

#include <random>

#include "cliffalg/clifford/multiplication.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/minimal/basepoint.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"

namespace cliffalg::minimal {

using clifford::CliffordElement;
using clifford::SectionBasis;
using quadalg::SparseVector;
using quadalg::Subspace;

namespace {

void require_certified(const FamilyPtr& family) {
  const auto cert = basepoint_check(family);
  if (cert.status != BasepointStatus::empty_intersection) {
    throw NotCertified("the quadrics are not certified to have no common zero (" + std::string(to_string(cert.status)) +
                       " up to degree " + std::to_string(cert.cap) + ")");
  }
}

CliffordElement word_product(const FamilyPtr& family, const quadalg::Word& w) {
  CliffordElement x = CliffordElement::scalar(family, 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = clifford::left_generator_action(*it, x);
  return x;
}

}  // namespace

GradedAlgebraTable build_BU(const FamilyPtr& family, int D, bool override_certification, int pair_cap) {
  if (!override_certification) require_certified(family);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= D; ++d) dims.push_back(SectionBasis(family, d).size());
  GradedAlgebraTable t(dims);
  if (family->coefficient_weights()) {
    for (int d = 0; d <= D; ++d) t.set_weights(d, SectionBasis(family, d).weights());
  }
  for (int d = 0; d < D; ++d) t.set_mult(1, d, clifford::product_matrix(family, 1, d));
  for (int i = 0; i <= std::min(pair_cap, D); ++i) {
    for (int j = 0; i + j <= std::min(pair_cap, D); ++j) {
      if (!t.has_mult(i, j)) t.set_mult(i, j, clifford::product_matrix(family, i, j));
    }
  }
  return t;
}

Subspace u_perp(const clifford::QuadricFamily& family) {
  const int n = family.n();
  std::vector<SparseVector> forms;
  for (const auto& m : family.basis()) {
    std::vector<SparseVector::Entry> e;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) e.emplace_back(static_cast<exactla::Index>(a * n + b), m[a][b]);
    }
    forms.push_back(SparseVector::from_entries(std::move(e)));
  }
  // Lambda^2 V^dual kills the antisymmetric tensors
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      forms.push_back(SparseVector::from_entries({{static_cast<exactla::Index>(a * n + b), 1},
                                                  {static_cast<exactla::Index>(b * n + a), -1}}));
    }
  }
  return exactla::annihilator(Subspace::span(n * n, forms));
}

PresentationMatch presentation_match(const FamilyPtr& family, int D) {
  const int n = family->n();
  if (family->k() != n) throw WrongFamilyShape("presentation match needs dim U = dim V");
  require_certified(family);
  PresentationMatch out;
  out.relations = u_perp(*family);

  quadalg::AlgebraPresentation p(n);
  p.add_relations(2, out.relations);
  const quadalg::QuotientAlgebra a(p, D);
  std::vector<SectionBasis> bases;
  for (int d = 0; d <= D; ++d) {
    bases.emplace_back(family, d);
    out.clifford_dims.push_back(bases.back().size());
    out.quotient_dims.push_back(a.dim(d));
  }
  out.relations_are_kernel =
      exactla::kernel_basis(clifford::multiplication_matrix(family, 2)) == out.relations;
  if (!out.dims_match()) return out;

  // phi: normal word -> Clifford product of its letters
  std::vector<std::vector<CliffordElement>> phi(D + 1);
  bool ok = true;
  for (int d = 0; d <= D && ok; ++d) {
    std::vector<SparseVector> columns;
    for (const auto& w : a.basis_words(d)) {
      phi[d].push_back(word_product(family, w));
      columns.push_back(clifford::coordinates(bases[d], phi[d].back()));
    }
    ok = exactla::rank(exactla::SparseMatrix::from_columns(bases[d].size(), columns)) == bases[d].size();
  }
  for (int i = 0; i <= D && ok; ++i) {
    for (int j = 0; i + j <= D && ok; ++j) {
      const auto m = a.mult_matrix(i, j).columns();
      for (std::size_t x = 0; x < phi[i].size() && ok; ++x) {
        for (std::size_t y = 0; y < phi[j].size() && ok; ++y) {
          CliffordElement rhs(family);
          for (const auto& [z, c] : m[x * phi[j].size() + y].entries()) rhs = rhs + phi[i + j][z].scaled(c);
          ok = clifford::clifford_mul(phi[i][x], phi[j][y]) == rhs;
        }
      }
    }
  }
  out.structure_constants_match = ok;
  return out;
}

HelixReport helix_ext_check(const FamilyPtr& family, int D) {
  const int n = family->n();
  if (family->k() != n) throw WrongFamilyShape("helix check needs dim U = dim V");
  HelixReport report;
  const auto table = clifford::ext_table(*family, -n, D);
  for (int i = 0; i <= D; ++i) {
    const auto& serre = table.at(i, i - n);
    if (serre != clifford::ExtEntry{{n, 1}}) {
      report.serre_ok = false;
      report.violations.push_back("Ext(B_" + std::to_string(i) + ", B_" + std::to_string(i - n) + ")");
    }
    for (int j = i; j <= D; ++j) {
      const auto& forward = table.at(i, j);
      if (forward.size() != 1 || forward.begin()->first != 0) {
        report.strong_ok = false;
        report.violations.push_back("Ext(B_" + std::to_string(i) + ", B_" + std::to_string(j) + ")");
      }
    }
  }
  return report;
}

bool mck_identity(const HilbertSeries& h, int n) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= h.cap(); ++i) c.push_back((i % 2 ? -1 : 1) * binomial(n, i));
  return (HilbertSeries(c) * h).is_one();
}

bool mck_identity(const FamilyPtr& family, int D) {
  std::vector<std::int64_t> dims;
  for (int d = 0; d <= D; ++d) dims.push_back(clifford::section_dim(*family, d, 0));
  return mck_identity(HilbertSeries(dims), family->n());
}

bool binomial_identity(int n, int i) {
  std::int64_t total = 0;
  for (int s = 0; 2 * s <= i; ++s) total += binomial(n, i - 2 * s) * binomial(n + s - 1, s);
  return total == binomial(n + i - 1, i);
}

FamilyPtr random_certified_family(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  for (;;) {
    std::vector<clifford::Matrix> basis;
    for (int c = 0; c < n; ++c) {
      clifford::Matrix m(n, std::vector<exactla::Rational>(n, 0));
      m[c][c] = 1;
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
          exactla::Rational r(num(rng), den(rng));
          r.canonicalize();
          m[a][b] += r;
          m[b][a] = m[a][b];
        }
      }
      basis.push_back(std::move(m));
    }
    try {
      auto family = std::make_shared<const clifford::QuadricFamily>(
          clifford::QuadricFamily::create(n, std::move(basis), "perturbed toric"));
      if (basepoint_check(family).status == BasepointStatus::empty_intersection) return family;
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace cliffalg::minimal
