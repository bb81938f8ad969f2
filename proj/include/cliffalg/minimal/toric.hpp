#pragma once

#include <vector>

#include "cliffalg/exactla/rational.hpp"
#include "cliffalg/quadalg/presentation.hpp"

namespace cliffalg::minimal {

struct ToricParameters {
  int n;
  exactla::Rational q;
};

// Relations v_i v_j - q v_j v_i for i < j, with the standard torus weights.
quadalg::AlgebraPresentation toric_presentation(const ToricParameters& p);

struct ToricFamilyResult {
  quadalg::AlgebraPresentation presentation;
  quadalg::HilbertSeries hilbert;
  quadalg::Subspace dual_relations;
  // dims of the quadratic dual through degree n + 1
  std::vector<std::size_t> dual_dims;
};

ToricFamilyResult toric_family(const ToricParameters& p, int D);

// The sorted monomials of each degree d <= D are a basis of A_d. Throws
// NotApplicable for q = 0.
bool pbw_check(const ToricParameters& p, int D);
bool pbw_check(const quadalg::AlgebraPresentation& p, int D);

}  // namespace cliffalg::minimal
