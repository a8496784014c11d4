#pragma once

#include "hecke/report.hpp"

namespace hecke {

// Defining relations of the affine Hecke algebra and its derived operator
// families, each evaluated on all monomials of degree <= max_degree.
SuiteReport relation_suite(int n, int max_degree, unsigned long long seed = 0);

enum class Isomorphism { phi, psi_a };

// Images of the tilde-transformed generators must satisfy the source
// relations; also compares the images of the inverse Cherednik operators.
SuiteReport isomorphism_suite(Isomorphism which, int n, int max_degree, unsigned long long seed = 0);

// Images of the inverse twisted omega under the two maps.
MultiPoly apply_phi_omega(const MultiPoly& f);
MultiPoly apply_psi_omega(const MultiPoly& f);
// Image of the twisted q-Dunkl operator under psi_a.
MultiPoly apply_psi_dunkl(int i, const MultiPoly& f);

}  // namespace hecke
