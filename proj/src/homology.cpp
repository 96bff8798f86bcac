#include "genus2/homology.hpp"

namespace genus2 {

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.alphabet().size());
  for (int i = 0; i < p.relator_count(); ++i)
    for (int g = 0; g < p.alphabet().size(); ++g) m.at(i, g) = exponent_sum(p.relator_word(i), g);
  return m;
}

AbelianGroup homology_h1(const Presentation& p) { return cokernel(exponent_matrix(p)); }

}  // namespace genus2
