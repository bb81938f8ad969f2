#pragma once

#include <cstdint>
#include <vector>

#include "cliffalg/clifford/quadric_family.hpp"
#include "cliffalg/quadalg/graded_algebra_table.hpp"
#include "cliffalg/quadalg/hilbert_series.hpp"

namespace cliffalg::minimal {

using clifford::FamilyPtr;
using quadalg::GradedAlgebraTable;
using quadalg::HilbertSeries;

// B_U through degree D from the Clifford sections, with mult(1, d) and all
// pairs i + j <= pair_cap. Throws NotCertified unless basepoint_check
// certifies the family or the caller overrides.
GradedAlgebraTable build_BU(const FamilyPtr& family, int D, bool override_certification = false, int pair_cap = 0);

// U^perp = Ker(Sym^2 V -> U^dual) inside V (x) V.
quadalg::Subspace u_perp(const clifford::QuadricFamily& family);

struct PresentationMatch {
  quadalg::Subspace relations;
  std::vector<std::size_t> clifford_dims;
  std::vector<std::size_t> quotient_dims;
  // U^perp is the kernel of V (x) V -> B_{U,2}
  bool relations_are_kernel = false;
  // normal words of T(V)/<U^perp> map to a basis of B_U and the products agree
  bool structure_constants_match = false;

  bool dims_match() const { return clifford_dims == quotient_dims; }
};

// Compares T(V)/<U^perp> with B_U through degree D. Throws
// WrongFamilyShape unless k = n and NotCertified unless certified.
PresentationMatch presentation_match(const FamilyPtr& family, int D);

struct HelixReport {
  bool serre_ok = true;
  bool strong_ok = true;
  std::vector<std::string> violations;
};

// Ext^*(B_i, B_{i-n}) is one-dimensional in degree n, and Ext^*(B_i, B_j)
// for j >= i lives in degree 0, for 0 <= i, j <= D. Throws WrongFamilyShape
// unless k = n.
HelixReport helix_ext_check(const FamilyPtr& family, int D);

// (1 - z)^n h(z) = 1 through the cap of h.
bool mck_identity(const HilbertSeries& h, int n);
// The same for the section dims of B_U.
bool mck_identity(const FamilyPtr& family, int D);

// sum_s C(n, i-2s) C(n+s-1, s) = C(n+i-1, i)
bool binomial_identity(int n, int i);

// Toric squares plus a seeded rational perturbation, re-drawn until it is
// certified.
FamilyPtr random_certified_family(int n, std::uint64_t seed);

}  // namespace cliffalg::minimal
