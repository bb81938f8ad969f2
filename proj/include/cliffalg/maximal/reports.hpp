#pragma once

#include "cliffalg/report.hpp"

namespace cliffalg::maximal {

// Every check on the algebra B for the given n through degree D. Relation
// and syzygy checks run for n <= 4 and presentation checks for n <= 3.
Suite run_suite(int n, int D);

}  // namespace cliffalg::maximal
