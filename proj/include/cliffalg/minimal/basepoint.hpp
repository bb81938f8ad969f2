#pragma once

#include "cliffalg/clifford/quadric_family.hpp"

namespace cliffalg::minimal {

using clifford::FamilyPtr;

enum class BasepointStatus {
  empty_intersection,
  inconclusive,
  // Reserved: saturation in bounded degree never proves a common zero, so
  // basepoint_check does not produce it.
  common_zero_possible,
};

const char* to_string(BasepointStatus s);

struct BasepointCertificate {
  FamilyPtr family;
  BasepointStatus status = BasepointStatus::inconclusive;
  // first d with U * Sym^{d-2} V^dual = Sym^d V^dual; 0 when none was found
  int witness_degree = 0;
  int cap = 0;
};

// Tests surjectivity of U (x) Sym^{d-2} V^dual -> Sym^d V^dual for d = 2..dcap
// (default 2n + 2). Throws WrongFamilyShape unless k = n.
BasepointCertificate basepoint_check(const FamilyPtr& family, int dcap = 0);

}  // namespace cliffalg::minimal
