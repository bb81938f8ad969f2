#pragma once

#include <cstdint>

#include "cliffalg/clifford/quadric_family.hpp"
#include "cliffalg/minimal/toric.hpp"
#include "cliffalg/report.hpp"

namespace cliffalg::minimal {

// Certification, then every B_U check through degree D. An uncertified
// family yields inconclusive records and nothing else. The seed drives the
// random change of basis of U.
Suite run_suite(const clifford::FamilyPtr& family, int D, std::uint64_t seed);

// Flatness, PBW and duality checks for A_{T,q}.
Suite toric_suite(const ToricParameters& p, int D);

}  // namespace cliffalg::minimal
