#pragma once

#include "genus2/intmat.hpp"
#include "genus2/presentation.hpp"

namespace genus2 {

// Relator-by-generator exponent sums.
IntMatrix exponent_matrix(const Presentation& p);

// First homology = abelianization: cokernel of the exponent matrix.
AbelianGroup homology_h1(const Presentation& p);

}  // namespace genus2
