// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cliffalg/clifford/multiplication.hpp"
#include "cliffalg/combinatorics.hpp"
#include "cliffalg/error.hpp"
#include "cliffalg/maximal/algebra.hpp"
#include "cliffalg/maximal/resolution.hpp"
#include "cliffalg/minimal/algebra.hpp"
#include "cliffalg/minimal/basepoint.hpp"
#include "cliffalg/minimal/toric.hpp"
#include "cliffalg/partitions/schur.hpp"
#include "cliffalg/quadalg/duality.hpp"
#include "cliffalg/quadalg/quotient_algebra.hpp"

using namespace cliffalg;
using clifford::CliffordElement;
using clifford::FamilyPtr;
using exactla::Rational;
using partitions::SchurMultiset;
using partitions::YoungDiagram;

namespace {

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("error: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs > limit_s) {
    ok = false;
    note = "over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
  }
  if (!ok) ++failures;
  std::printf("%s  %2d  %s  (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, note.empty() ? "" : "  ",
              note.c_str());
  std::fflush(stdout);
}

// multiply out a * b for integer polynomials truncated at cap
std::vector<std::int64_t> series_product(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                         int cap) {
  std::vector<std::int64_t> out(cap + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(cap); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<FamilyPtr> random_families(int n, int count) {
  std::vector<FamilyPtr> out;
  for (int s = 0; s < count; ++s) out.push_back(minimal::random_certified_family(n, 1000 + s));
  return out;
}

bool certified(const FamilyPtr& f) {
  return minimal::basepoint_check(f).status == minimal::BasepointStatus::empty_intersection;
}

CliffordElement random_element(const FamilyPtr& f, int degree, std::mt19937_64& rng) {
  const clifford::SectionBasis basis(f, degree);
  std::uniform_int_distribution<int> coeff(-4, 4);
  CliffordElement x(f);
  for (const auto& key : basis.keys()) {
    if (rng() % 3 == 0) x.add_term(key, coeff(rng));
  }
  if (x.is_zero() && basis.size() > 0) x.add_term(basis.key(rng() % basis.size()), 1);
  return x;
}

quadalg::QuotientAlgebra dual_algebra(const FamilyPtr& f, int cap) {
  const int n = f->n();
  quadalg::AlgebraPresentation dual(n);
  dual.add_relations(2, quadalg::quadratic_dual(minimal::u_perp(*f), n));
  return quadalg::QuotientAlgebra(dual, cap);
}

}  // namespace

int main() {
  criterion(1, "B_i is the multiplicity-free sum of all Schur functors of size i (n=2,3, i<=6)", 120,
            [](std::string& note) {
              for (int n = 2; n <= 3; ++n) {
                const auto decomposition = maximal::verify_decomposition(n, 6);
                for (const auto& d : decomposition) {
                  SchurMultiset expected;
                  for (const auto& alpha : partitions::enumerate_diagrams(n, d.degree)) expected.add(alpha, 1);
                  if (!(d.observed == expected) || !d.multiplicity_free_and_complete) {
                    note = "n=" + std::to_string(n) + " i=" + std::to_string(d.degree) + ": " + d.observed.to_string();
                    return false;
                  }
                }
                if (decomposition.size() != 7) return false;
              }
              return true;
            });

  criterion(2, "no quadratic relations; cubic relations are S(2,1)V of dim 2, 8, 20 (n=2,3,4)", 60,
            [](std::string& note) {
              const std::size_t cubic[] = {2, 8, 20};
              for (int n = 2; n <= 4; ++n) {
                const auto r = maximal::relation_and_syzygy_report(n);
                const auto& d2 = r.degrees.at(0);
                const auto& d3 = r.degrees.at(1);
                const bool ok = d2.degree == 2 && d2.kernel_dim == 0 && d3.degree == 3 &&
                                d3.kernel_dim == cubic[n - 2] && d3.kernel_schur &&
                                *d3.kernel_schur == SchurMultiset{{YoungDiagram{2, 1}, 1}} && r.cubic_kernel_matches;
                if (!ok) {
                  note = "n=" + std::to_string(n) + ": degree-3 kernel " + std::to_string(d3.kernel_dim);
                  return false;
                }
              }
              return true;
            });

  criterion(3, "quartic kernel for n=3 has dim 42 = 2S(3,1) + S(2,2) + 2S(2,1,1)", 120, [](std::string& note) {
    const auto r = maximal::relation_and_syzygy_report(3);
    const auto& d4 = r.degrees.at(2);
    const SchurMultiset expected{{YoungDiagram{3, 1}, 2}, {YoungDiagram{2, 2}, 1}, {YoungDiagram{2, 1, 1}, 2}};
    note = std::to_string(d4.kernel_dim) + " = " + (d4.kernel_schur ? d4.kernel_schur->to_string() : "?");
    return d4.degree == 4 && d4.kernel_dim == 42 && d4.kernel_schur && *d4.kernel_schur == expected &&
           expected.dimension(3) == 42;
  });

  criterion(4, "T(V)/<S(2,1)V> has the dims of B through degree 6 (n=2,3)", 120, [](std::string& note) {
    for (int n = 2; n <= 3; ++n) {
      const auto h = quadalg::hilbert(maximal::cubic_presentation(n), 6);
      const auto table = maximal::build_B(n, 6);
      for (int i = 0; i <= 6; ++i) {
        if (h[i] != maximal::dim_from_sections(n, i) || h[i] != static_cast<std::int64_t>(table.dim(i))) {
          note = "n=" + std::to_string(n) + " degree " + std::to_string(i);
          return false;
        }
      }
    }
    return true;
  });

  criterion(5, "alternating resolution polynomial times h_B is 1 through degree 8 (n=1,2,3)", 120,
            [](std::string& note) {
              for (int n = 1; n <= 3; ++n) {
                // the polynomial straight from the symmetric diagrams
                std::vector<std::int64_t> poly(n * n + 1, 0);
                for (const auto& alpha : partitions::enumerate_symmetric_diagrams(n)) {
                  const int size = alpha.size();
                  const int sign = ((size + alpha.diag_length()) / 2) % 2 ? -1 : 1;
                  poly[size] += sign * partitions::schur_dim(alpha, n);
                }
                std::vector<std::int64_t> h;
                const auto table = maximal::build_B(n, 8);
                for (int i = 0; i <= 8; ++i) h.push_back(static_cast<std::int64_t>(table.dim(i)));
                const auto prod = series_product(poly, h, 8);
                for (int i = 0; i <= 8; ++i) {
                  if (prod[i] != (i == 0 ? 1 : 0)) {
                    note = "n=" + std::to_string(n) + " coefficient " + std::to_string(i);
                    return false;
                  }
                }
                if (poly != maximal::resolution_terms(n).euler_polynomial() || !maximal::euler_identity_check(n, 8)) {
                  note = "library polynomial differs for n=" + std::to_string(n);
                  return false;
                }
                if (n == 2 && poly != std::vector<std::int64_t>{1, -2, 0, 2, -1}) return false;
              }
              return true;
            });

  criterion(6, "resolution terms for n=2 and n=3 match the displayed complexes; |SYD_n| = 2^n (n<=6)", 60,
            [](std::string& note) {
              using Term = std::vector<std::pair<YoungDiagram, int>>;
              const std::vector<Term> two = {
                  {{YoungDiagram{}, 0}}, {{YoungDiagram{1}, 1}}, {{YoungDiagram{2, 1}, 3}}, {{YoungDiagram{2, 2}, 4}}};
              const std::vector<Term> three = {{{YoungDiagram{}, 0}},
                                               {{YoungDiagram{1}, 1}},
                                               {{YoungDiagram{2, 1}, 3}},
                                               {{YoungDiagram{3, 1, 1}, 5}, {YoungDiagram{2, 2}, 4}},
                                               {{YoungDiagram{3, 2, 1}, 6}},
                                               {{YoungDiagram{3, 3, 2}, 8}},
                                               {{YoungDiagram{3, 3, 3}, 9}}};
              auto matches = [](int n, const std::vector<Term>& expected) {
                const auto table = maximal::resolution_terms(n);
                if (table.terms.size() != expected.size()) return false;
                for (std::size_t i = 0; i < expected.size(); ++i) {
                  if (table.terms[i].size() != expected[i].size()) return false;
                  for (std::size_t j = 0; j < expected[i].size(); ++j) {
                    if (!(table.terms[i][j].alpha == expected[i][j].first) ||
                        table.terms[i][j].shift != expected[i][j].second)
                      return false;
                  }
                }
                return true;
              };
              if (!matches(2, two)) {
                note = "n=2 table differs";
                return false;
              }
              if (!matches(3, three)) {
                note = "n=3 table differs";
                return false;
              }
              for (int n = 1; n <= 6; ++n) {
                if (partitions::enumerate_symmetric_diagrams(n).size() != (std::size_t{1} << n)) {
                  note = "|SYD_" + std::to_string(n) + "|";
                  return false;
                }
              }
              return true;
            });

  criterion(7, "n=2: dim B_i = (ceil(i/2)+1)(floor(i/2)+1) for i<=8", 60, [](std::string& note) {
    const auto table = maximal::build_B(2, 8);
    for (int i = 0; i <= 8; ++i) {
      const std::int64_t expected = ((i + 1) / 2 + 1) * (i / 2 + 1);
      if (static_cast<std::int64_t>(table.dim(i)) != expected || maximal::dim_from_diagrams(2, i) != expected) {
        note = "i=" + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  criterion(8, "h_B_U = (1-z)^-n through degree 8 (toric n=2,3,4; 3 random n=3); binomial identity", 120,
            [](std::string& note) {
              std::vector<FamilyPtr> families = {clifford::toric_family(2), clifford::toric_family(3),
                                                 clifford::toric_family(4)};
              for (const auto& f : random_families(3, 3)) families.push_back(f);
              for (const auto& f : families) {
                if (!certified(f)) {
                  note = f->label() + " not certified";
                  return false;
                }
                const int n = f->n();
                const auto t = minimal::build_BU(f, 8);
                for (int i = 0; i <= 8; ++i) {
                  if (static_cast<std::int64_t>(t.dim(i)) != binomial(n + i - 1, i)) {
                    note = f->label() + " degree " + std::to_string(i);
                    return false;
                  }
                }
                if (!minimal::mck_identity(t.hilbert(), n)) return false;
              }
              for (int n = 1; n <= 6; ++n) {
                for (int i = 0; i <= 12; ++i) {
                  std::int64_t lhs = 0;
                  for (int s = 0; 2 * s <= i; ++s) lhs += binomial(n, i - 2 * s) * binomial(n + s - 1, s);
                  if (lhs != binomial(n + i - 1, i) || !minimal::binomial_identity(n, i)) {
                    note = "binomial identity n=" + std::to_string(n) + " i=" + std::to_string(i);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(9, "T(V)/<U^perp> matches the Clifford sections through degree 6 (toric and random n=3)", 120,
            [](std::string& note) {
              std::vector<FamilyPtr> families = {clifford::toric_family(3)};
              for (const auto& f : random_families(3, 3)) families.push_back(f);
              for (const auto& f : families) {
                const auto m = minimal::presentation_match(f, 6);
                if (!m.relations_are_kernel || !m.dims_match() || !m.structure_constants_match ||
                    m.clifford_dims.size() != 7) {
                  note = f->label();
                  return false;
                }
              }
              return true;
            });

  criterion(10, "Koszul series, dual dims C(n,i) and Frobenius pairing of top degree n (toric n<=4)", 120,
            [](std::string& note) {
              for (int n = 1; n <= 4; ++n) {
                const auto f = clifford::toric_family(n);
                const auto dual = dual_algebra(f, 8);
                std::vector<std::int64_t> dims;
                for (int i = 0; i <= 8; ++i) {
                  dims.push_back(static_cast<std::int64_t>(dual.dim(i)));
                  if (dims.back() != binomial(n, i)) {
                    note = "n=" + std::to_string(n) + " dual degree " + std::to_string(i);
                    return false;
                  }
                }
                const auto h = minimal::build_BU(f, 8).hilbert();
                if (!quadalg::koszul_series_check(h, quadalg::HilbertSeries(dims))) {
                  note = "n=" + std::to_string(n) + " series";
                  return false;
                }
                if (!quadalg::frobenius_check(dual.table(n), n)) {
                  note = "n=" + std::to_string(n) + " pairing";
                  return false;
                }
              }
              return true;
            });

  criterion(11, "A_{T,q} is flat with polynomial dims, PBW and dual dims C(n,i) (q=1,-1,5,-1/2; n=2,3)", 120,
            [](std::string& note) {
              for (int n = 2; n <= 3; ++n) {
                for (const char* qs : {"1", "-1", "5", "-1/2"}) {
                  const minimal::ToricParameters p{n, exactla::parse_rational(qs)};
                  const auto r = minimal::toric_family(p, 6);
                  bool ok = r.hilbert == quadalg::HilbertSeries::polynomial(n, 6) && minimal::pbw_check(p, 6);
                  for (int i = 0; i <= n + 1 && ok; ++i) {
                    ok = static_cast<std::int64_t>(r.dual_dims.at(i)) == binomial(n, i);
                  }
                  if (!ok) {
                    note = "n=" + std::to_string(n) + " q=" + qs;
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(12, "Clifford product: associativity on 216 random triples, v w + w v = 2q(v,w), exterior at q=0", 120,
            [](std::string& note) {
              std::mt19937_64 rng(424242);
              std::vector<FamilyPtr> families;
              for (int n = 2; n <= 4; ++n) {
                families.push_back(clifford::universal_family(n));
                families.push_back(clifford::toric_family(n));
                families.push_back(minimal::random_certified_family(n, 77 + n));
              }
              int triples = 0;
              for (const auto& f : families) {
                for (int t = 0; t < 24; ++t) {
                  const auto x = random_element(f, static_cast<int>(rng() % 4), rng);
                  const auto y = random_element(f, static_cast<int>(rng() % 4), rng);
                  const auto z = random_element(f, static_cast<int>(rng() % 3), rng);
                  if (!(clifford::clifford_mul(clifford::clifford_mul(x, y), z) ==
                        clifford::clifford_mul(x, clifford::clifford_mul(y, z)))) {
                    note = "associativity fails for " + f->label();
                    return false;
                  }
                  ++triples;
                }
                for (int a = 0; a < f->n(); ++a) {
                  for (int b = 0; b < f->n(); ++b) {
                    const auto va = CliffordElement::generator(f, a);
                    const auto vb = CliffordElement::generator(f, b);
                    CliffordElement q(f);
                    const auto coords = clifford::q_pair(*f, a, b);
                    for (int c = 0; c < f->k(); ++c) {
                      std::vector<int> e(f->k(), 0);
                      e[c] = 1;
                      q.add_term({0, e}, 2 * coords[c]);
                    }
                    if (!(clifford::clifford_mul(va, vb) + clifford::clifford_mul(vb, va) == q)) {
                      note = "Clifford relation fails for " + f->label();
                      return false;
                    }
                  }
                }
              }
              if (triples < 200) return false;
              // the zero form: e_S e_T is the signed wedge e_{S u T}, or 0 when S and T meet
              const int n = 4;
              const auto zero = std::make_shared<const clifford::QuadricFamily>(clifford::QuadricFamily::unchecked(
                  n, std::vector<clifford::Matrix>(2, clifford::Matrix(n, std::vector<Rational>(n, 0))), "zero"));
              for (std::uint32_t s = 0; s < 16; ++s) {
                for (std::uint32_t t = 0; t < 16; ++t) {
                  const auto xy = clifford::clifford_mul(CliffordElement::basis(zero, {s, {0, 0}}),
                                                         CliffordElement::basis(zero, {t, {0, 0}}));
                  CliffordElement expected(zero);
                  if (!(s & t)) {
                    int inversions = 0;
                    for (int a = 0; a < n; ++a) {
                      if ((s >> a) & 1) inversions += std::popcount(t & ((1u << a) - 1));
                    }
                    expected.add_term({s | t, {0, 0}}, inversions % 2 ? -1 : 1);
                  }
                  if (!(xy == expected)) {
                    note = "q=0 product differs from the wedge";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(13, "Ext(B_i, B_{i-n}) is k in degree n and Ext(B_i, B_j), j>=i, sits in degree 0 (n=2,3)", 120,
            [](std::string& note) {
              std::vector<FamilyPtr> families = {clifford::toric_family(2), clifford::toric_family(3)};
              for (const auto& f : random_families(3, 2)) families.push_back(f);
              for (const auto& f : families) {
                const auto r = minimal::helix_ext_check(f, 2 * f->n() + 2);
                if (!r.serre_ok || !r.strong_ok) {
                  note = f->label() + (r.violations.empty() ? "" : ": " + r.violations.front());
                  return false;
                }
              }
              return true;
            });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
