#pragma once

#include <string>
#include <vector>

#include "cliffalg/partitions/young_diagram.hpp"

namespace cliffalg::maximal {

using partitions::YoungDiagram;

struct ResolutionTerm {
  YoungDiagram alpha;
  // internal shift |alpha|: the summand is Sigma^alpha V (x) B(-|alpha|)
  int shift;
  std::int64_t schur_dim;
  // rank of S_{|alpha|} (x) Sigma^alpha U on the isotropic Grassmannian
  std::int64_t spinor_rank;
  // "S(2,1)⊗B(-3)" style labels for the module and sheaf versions
  std::string module_label;
  std::string sheaf_label;
};

// Term i collects the symmetric diagrams in the n x n box with
// |alpha| + diag(alpha) = 2i, for i = 0..n(n+1)/2.
struct ResolutionTermTable {
  int n;
  std::vector<std::vector<ResolutionTerm>> terms;

  // sum of schur_dim * B(-shift) ranks in term i: the free module rank
  std::int64_t module_rank(int i) const;
  // The alternating internal-degree polynomial sum (-1)^i dim Sigma^alpha z^|alpha|.
  std::vector<std::int64_t> euler_polynomial() const;
};

ResolutionTermTable resolution_terms(int n);

// sum over symmetric alpha of (-1)^{(|alpha|+diag)/2} dim Sigma^alpha z^{|alpha|}
// times the Hilbert series of B equals 1 through degree D.
bool euler_identity_check(int n, int D);

struct DualEntry {
  YoungDiagram alpha;
  int internal_degree;
  int homological_degree;
  std::int64_t dim;
};

// The bigraded dimensions of the Koszul dual of B.
std::vector<DualEntry> dual_table(int n);

}  // namespace cliffalg::maximal
