#include "cliffalg/maximal/reports.hpp"

#include <sstream>

#include "cliffalg/error.hpp"
#include "cliffalg/exactla/elimination.hpp"
#include "cliffalg/maximal/algebra.hpp"
#include "cliffalg/maximal/resolution.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"

namespace cliffalg::maximal {
namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  s << ")";
  return s.str();
}

std::string term_labels(const ResolutionTermTable& table) {
  std::string s;
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < table.terms[i].size(); ++j) {
      if (j) s += " + ";
      s += table.terms[i][j].sheaf_label;
    }
  }
  return s;
}

void dimension_checks(Suite& suite, int n, int D, const GradedAlgebraTable& t) {
  std::vector<std::int64_t> sections, diagrams, computed;
  for (int i = 0; i <= D; ++i) {
    sections.push_back(dim_from_sections(n, i));
    diagrams.push_back(dim_from_diagrams(n, i));
    computed.push_back(static_cast<std::int64_t>(t.dim(i)));
  }
  suite.push_back(check("dims: section formula = Schur sum", sections == diagrams, join(diagrams), join(sections),
                        "graded-decomposition"));
  suite.push_back(check("dims: section basis = formula", computed == sections, join(computed), join(sections),
                        "graded-decomposition"));
  std::vector<std::int64_t> ranks{1};
  for (int d = 1; d <= D; ++d) ranks.push_back(static_cast<std::int64_t>(exactla::rank(t.mult(1, d - 1))));
  suite.push_back(check("generation: rank of V (x) B_{d-1} -> B_d", ranks == computed, join(ranks), join(computed),
                        "generated-in-degree-one"));
  if (n == 2) {
    std::vector<std::int64_t> expected;
    for (int i = 0; i <= D; ++i) expected.push_back(((i + 1) / 2 + 1) * (i / 2 + 1));
    suite.push_back(check("n=2 dims (ceil(i/2)+1)(floor(i/2)+1)", computed == expected, join(computed),
                          join(expected), "two-variable-double-cover"));
  }
}

void decomposition_checks(Suite& suite, int n, int D) {
  for (const auto& d : verify_decomposition(n, D)) {
    SchurMultiset expected;
    for (const auto& alpha : partitions::enumerate_diagrams(n, d.degree)) expected.add(alpha, 1);
    suite.push_back(check("decomposition of B_" + std::to_string(d.degree), d.multiplicity_free_and_complete,
                          d.observed.to_string(), expected.to_string(), "graded-decomposition"));
  }
}

void relation_checks(Suite& suite, int n) {
  if (n > 4) {
    suite.push_back(Record{"relations and syzygies", Status::inconclusive, "skipped", "n <= 4", "cubic-relations"});
    return;
  }
  const auto r = relation_and_syzygy_report(n);
  const bool all_generated = std::all_of(r.generated.begin(), r.generated.end(), [](bool b) { return b; });
  suite.push_back(check("generation through degree 4", all_generated, all_generated ? "onto" : "not onto", "onto",
                        "generated-in-degree-one"));
  const auto& d2 = r.degrees[0];
  const auto& d3 = r.degrees[1];
  const auto& d4 = r.degrees[2];
  suite.push_back(check("no quadratic relations", d2.kernel_dim == 0, std::to_string(d2.kernel_dim), "0",
                        "no-quadratic-relations"));
  const SchurMultiset s21 = SchurMultiset{{partitions::YoungDiagram{2, 1}, 1}}.restricted_to_rows(n);
  const auto s21_dim = static_cast<std::size_t>(s21.dimension(n));
  suite.push_back(check("cubic kernel dimension", d3.kernel_dim == s21_dim, std::to_string(d3.kernel_dim),
                        std::to_string(s21_dim), "cubic-relations"));
  suite.push_back(check("cubic kernel character", d3.kernel_schur && *d3.kernel_schur == s21,
                        d3.kernel_schur ? d3.kernel_schur->to_string() : "asymmetric", s21.to_string(),
                        "cubic-relations"));
  suite.push_back(check("cubic kernel = Ker(V (x) Lambda^2 V -> Lambda^3 V)", r.cubic_kernel_matches,
                        r.cubic_kernel_matches ? "equal" : "different", "equal", "cubic-relations"));
  const auto q_dim = static_cast<std::size_t>(r.expected_quartic_kernel.dimension(n));
  suite.push_back(check("quartic kernel", d4.kernel_dim == q_dim && d4.kernel_schur == r.expected_quartic_kernel,
                        std::to_string(d4.kernel_dim) + " = " + (d4.kernel_schur ? d4.kernel_schur->to_string() : "?"),
                        std::to_string(q_dim) + " = " + r.expected_quartic_kernel.to_string(), "quartic-kernel"));
  suite.push_back(check("no new quartic relations", d4.new_dim() == 0, std::to_string(d4.new_dim()), "0",
                        "relations-generated-by-cubics"));
  suite.push_back(check("quartic syzygies", d4.syzygy_schur == r.expected_syzygy,
                        d4.syzygy_schur ? d4.syzygy_schur->to_string() : "?", r.expected_syzygy.to_string(),
                        "quartic-syzygy"));
}

void presentation_checks(Suite& suite, int n, int D, const GradedAlgebraTable& t) {
  if (n > 3) {
    suite.push_back(Record{"T(V)/<cubic relations> dims", Status::inconclusive, "skipped", "n <= 3",
                           "presentation-by-cubics"});
    return;
  }
  const quadalg::QuotientAlgebra a(cubic_presentation(n), D);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= D; ++d) dims.push_back(a.dim(d));
  suite.push_back(check("T(V)/<cubic relations> dims = B dims", dims == t.dims(), join(dims), join(t.dims()),
                        "presentation-by-cubics"));
}

void resolution_checks(Suite& suite, int n, int D) {
  const auto table = resolution_terms(n);
  std::size_t count = 0;
  bool indices_ok = static_cast<int>(table.terms.size()) == n * (n + 1) / 2 + 1;
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    count += table.terms[i].size();
    for (const auto& term : table.terms[i]) {
      indices_ok = indices_ok && term.alpha.size() + term.alpha.diag_length() == static_cast<int>(2 * i);
    }
    indices_ok = indices_ok && !table.terms[i].empty();
  }
  suite.push_back(check("resolution terms: 2^n symmetric diagrams", count == (std::size_t{1} << n),
                        std::to_string(count), std::to_string(std::size_t{1} << n), "resolution-terms"));
  suite.push_back(check("resolution terms: |alpha| + diag = 2i, indices 0..n(n+1)/2", indices_ok,
                        indices_ok ? "consistent" : "inconsistent", "consistent", "resolution-terms"));
  const std::map<int, std::string> displayed = {
      {2, "k⊗B_{-0} | V⊗B_{-1} | S(2,1)⊗B_{-3} | S(2,2)⊗B_{-4}"},
      {3, "k⊗B_{-0} | V⊗B_{-1} | S(2,1)⊗B_{-3} | S(3,1,1)⊗B_{-5} + S(2,2)⊗B_{-4} | S(3,2,1)⊗B_{-6} | "
          "S(3,3,2)⊗B_{-8} | S(3,3,3)⊗B_{-9}"}};
  if (auto it = displayed.find(n); it != displayed.end()) {
    suite.push_back(check("Clifford-Koszul terms match the small cases", term_labels(table) == it->second,
                          term_labels(table), it->second, "clifford-koszul-terms"));
  }
  const bool euler = euler_identity_check(n, D);
  suite.push_back(check("Euler identity P(z) h_B(z) = 1", euler, euler ? "1" : "not 1", "1", "resolution-euler"));
  suite.push_back(Record{"exactness of the resolution", Status::inconclusive,
                         "differentials unknown; terms and Euler identity verified", "exact sequence",
                         "resolution-exactness"});
  const auto dual = dual_table(n);
  const auto& top = dual.back();
  const bool top_ok = top.internal_degree == n * n && top.homological_degree == n * (n + 1) / 2 && top.dim == 1;
  suite.push_back(check("dual table: 2^n entries, top (n^n) at (n^2, n(n+1)/2)",
                        dual.size() == (std::size_t{1} << n) && top_ok,
                        std::to_string(dual.size()) + " entries, top " + top.alpha.to_string(),
                        std::to_string(std::size_t{1} << n) + " entries", "dual-algebra-table"));
}

}  // namespace

Suite run_suite(int n, int D) {
  if (n < 1 || D < 1) throw InvalidInput("maximal suite needs n >= 1 and D >= 1");
  Suite suite;
  const auto t = build_B(n, D);
  dimension_checks(suite, n, D, t);
  decomposition_checks(suite, n, D);
  relation_checks(suite, n);
  presentation_checks(suite, n, D, t);
  resolution_checks(suite, n, D);
  return suite;
}

}  // namespace cliffalg::maximal
