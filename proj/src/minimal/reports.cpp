#include "cliffalg/minimal/reports.hpp"

#include <random>
#include <sstream>

#include "cliffalg/clifford/sections.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/minimal/algebra.hpp"
#include "cliffalg/minimal/basepoint.hpp"
#include "cliffalg/quadalg/duality.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"

namespace cliffalg::minimal {
namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  s << ")";
  return s.str();
}

std::vector<std::size_t> polynomial_dims(int n, int D) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= D; ++i) out.push_back(static_cast<std::size_t>(binomial(n + i - 1, i)));
  return out;
}

std::vector<std::size_t> exterior_dims(int n, int D) {
  std::vector<std::size_t> out;
  for (int i = 0; i <= D; ++i) out.push_back(static_cast<std::size_t>(binomial(n, i)));
  return out;
}

clifford::QuadricFamily random_basis_change(const clifford::QuadricFamily& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    clifford::Matrix change(f.k(), std::vector<exactla::Rational>(f.k(), 0));
    for (auto& row : change) {
      for (auto& x : row) x = entry(rng);
    }
    try {
      return f.with_basis_change(change, f.label() + " (basis changed)");
    } catch (const ValidationError&) {
    }
  }
}

// dims of T(V^dual)/<(U^perp)^perp> through degree cap, plus its Frobenius check
struct DualCheck {
  std::vector<std::size_t> dims;
  quadalg::HilbertSeries series;
  bool frobenius = false;
};

DualCheck dual_check(const quadalg::Subspace& relations, int n, int cap) {
  quadalg::AlgebraPresentation dual(n);
  dual.add_relations(2, quadalg::quadratic_dual(relations, n));
  const quadalg::QuotientAlgebra a(dual, std::max(cap, n + 1));
  DualCheck out;
  for (int d = 0; d <= std::max(cap, n + 1); ++d) out.dims.push_back(a.dim(d));
  std::vector<std::int64_t> series(out.dims.begin(), out.dims.begin() + cap + 1);
  out.series = quadalg::HilbertSeries(series);
  out.frobenius = quadalg::frobenius_check(a.table(n), n);
  return out;
}

void presentation_records(Suite& suite, const PresentationMatch& m, const std::string& suffix) {
  suite.push_back(check("U^perp = kernel of V (x) V -> B_U,2" + suffix, m.relations_are_kernel,
                        m.relations_are_kernel ? "equal" : "different", "equal", "quadratic-presentation"));
  suite.push_back(check("T(V)/<U^perp> dims = B_U dims" + suffix, m.dims_match(), join(m.quotient_dims),
                        join(m.clifford_dims), "quadratic-presentation"));
  suite.push_back(check("structure constants agree" + suffix, m.structure_constants_match,
                        m.structure_constants_match ? "agree" : "differ", "agree", "quadratic-presentation"));
}

}  // namespace

Suite run_suite(const clifford::FamilyPtr& family, int D, std::uint64_t seed) {
  if (D < 1) throw InvalidInput("degree cap must be at least 1");
  Suite suite;
  const int n = family->n();
  if (family->k() != n) {
    suite.push_back(check("family shape dim U = dim V", false, "k = " + std::to_string(family->k()),
                          "k = " + std::to_string(n), "minimal-family-shape"));
    return suite;
  }
  const auto cert = basepoint_check(family);
  if (cert.status != BasepointStatus::empty_intersection) {
    suite.push_back(Record{"basepoint certification", Status::inconclusive,
                           std::string(to_string(cert.status)) + " up to degree " + std::to_string(cert.cap),
                           "empty-intersection", "empty-base-locus"});
    suite.push_back(Record{"minimal suite", Status::inconclusive, "skipped: family not certified", "certified family",
                           "empty-base-locus"});
    return suite;
  }
  suite.push_back(check("basepoint certification", true,
                        "empty-intersection at degree " + std::to_string(cert.witness_degree), "empty-intersection",
                        "empty-base-locus"));

  const auto t = build_BU(family, D);
  const auto poly = polynomial_dims(n, D);
  suite.push_back(check("B_U dims = C(n+i-1, i)", t.dims() == poly, join(t.dims()), join(poly), "minimal-hilbert-series"));
  bool binomial_ok = true;
  for (int m = 1; m <= 6; ++m) {
    for (int i = 0; i <= 12; ++i) binomial_ok = binomial_ok && binomial_identity(m, i);
  }
  suite.push_back(check("binomial identity for n <= 6, i <= 12", binomial_ok, binomial_ok ? "holds" : "fails", "holds",
                        "binomial-identity"));
  std::vector<std::size_t> ranks{1};
  for (int d = 1; d <= D; ++d) ranks.push_back(exactla::rank(t.mult(1, d - 1)));
  suite.push_back(check("B_U generated in degree 1", ranks == t.dims(), join(ranks), join(t.dims()),
                        "quadratic-presentation"));

  const int dp = std::min(D, 6);
  const auto match = presentation_match(family, dp);
  const std::size_t perp_expected = static_cast<std::size_t>(n * (n - 1) / 2);
  suite.push_back(check("dim U^perp = n(n-1)/2", match.relations.dim() == perp_expected,
                        std::to_string(match.relations.dim()), std::to_string(perp_expected), "quadratic-presentation"));
  presentation_records(suite, match, "");
  const auto changed = std::make_shared<const clifford::QuadricFamily>(random_basis_change(*family, seed));
  const auto match2 = presentation_match(changed, dp);
  presentation_records(suite, match2, " (basis of U changed)");
  suite.push_back(check("U^perp independent of the basis of U", match2.relations == match.relations,
                        match2.relations == match.relations ? "equal" : "different", "equal", "quadratic-presentation"));

  const auto dual = dual_check(match.relations, n, D);
  const auto ext = exterior_dims(n, std::max(D, n + 1));
  suite.push_back(check("dual dims = C(n, i)", dual.dims == ext, join(dual.dims), join(ext), "frobenius-dual"));
  suite.push_back(check("dual is Frobenius of index n", dual.frobenius, dual.frobenius ? "perfect pairing" : "fails",
                        "perfect pairing", "frobenius-dual"));
  const bool koszul = quadalg::koszul_series_check(t.hilbert(), dual.series);
  suite.push_back(check("h_B_U(z) h_dual(-z) = 1", koszul, koszul ? "1" : "not 1", "1", "koszul-series"));

  const auto helix = helix_ext_check(family, D);
  std::string violations = helix.violations.empty() ? "none" : "";
  for (const auto& v : helix.violations) violations += (violations.empty() ? "" : ", ") + v;
  suite.push_back(check("Ext(B_i, B_{i-n}) one-dimensional in degree n", helix.serre_ok, violations, "none",
                        "helix-serre-condition"));
  suite.push_back(check("Ext(B_i, B_j) in degree 0 for j >= i", helix.strong_ok, violations, "none",
                        "helix-strong-condition"));
  const bool mck = mck_identity(family, D);
  suite.push_back(check("(1-z)^n h_B_U(z) = 1", mck, mck ? "1" : "not 1", "1", "koszul-resolution-series"));
  return suite;
}

Suite toric_suite(const ToricParameters& p, int D) {
  if (p.n < 1 || D < 1) throw InvalidInput("toric suite needs n >= 1 and D >= 1");
  Suite suite;
  const int n = p.n;
  const auto result = toric_family(p, D);
  const auto poly = quadalg::HilbertSeries::polynomial(n, D);
  const bool degenerate = p.q == 0;
  if (degenerate) {
    suite.push_back(Record{"Hilbert series at q = 0", Status::inconclusive, result.hilbert.to_string(),
                           poly.to_string(), "toric-flat-family"});
    suite.push_back(Record{"PBW basis", Status::inconclusive, "not applicable at q = 0", "sorted monomial basis",
                           "toric-pbw-basis"});
    return suite;
  }
  suite.push_back(check("Hilbert series = 1/(1-z)^n", result.hilbert == poly, result.hilbert.to_string(),
                        poly.to_string(), "toric-flat-family"));
  const bool pbw = pbw_check(p, D);
  suite.push_back(check("PBW basis of sorted monomials", pbw, pbw ? "basis" : "not a basis", "basis",
                        "toric-pbw-basis"));
  const auto ext = exterior_dims(n, n + 1);
  suite.push_back(check("dual dims = C(n, i)", result.dual_dims == ext, join(result.dual_dims), join(ext),
                        "toric-dual"));
  const auto dual = dual_check(result.presentation.relations()[0].space, n, D);
  suite.push_back(check("dual is Frobenius of index n", dual.frobenius, dual.frobenius ? "perfect pairing" : "fails",
                        "perfect pairing", "frobenius-dual"));
  const bool koszul = quadalg::koszul_series_check(result.hilbert, dual.series);
  suite.push_back(check("h_A(z) h_dual(-z) = 1", koszul, koszul ? "1" : "not 1", "1", "koszul-series"));
  if (p.q == -1) {
    const bool same = result.presentation.relations()[0].space == u_perp(*clifford::toric_family(n));
    suite.push_back(check("q = -1 relations = U^perp of the coordinate squares", same, same ? "equal" : "different",
                          "equal", "toric-clifford-identification"));
  }
  return suite;
}

}  // namespace cliffalg::minimal
