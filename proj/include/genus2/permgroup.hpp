#pragma once

#include <optional>
#include <vector>

#include "genus2/presentation.hpp"

namespace genus2 {

// Permutation on 0..degree-1 as an image table; p*q acts left to right
// ((p*q)[x] = q[p[x]]), matching how relators are read.
using Permutation = std::vector<int>;

Permutation perm_identity(int degree);
Permutation perm_compose(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);
bool is_permutation(const Permutation& p);

// A finite permutation group with its elements enumerated once and sorted
// lexicographically; search order is the position in `elements`.
struct PermutationGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  size_t order() const { return elements.size(); }
};

// Closure of the generators; throws std::invalid_argument if the order
// exceeds max_order (desk-scale refusal, not truncation).
PermutationGroup enumerate_group(int degree, std::vector<Permutation> generators,
                                 size_t max_order = 20000);

Permutation evaluate_permutation_word(const std::vector<Permutation>& images, const Word& w);

struct QuotientWitness {
  std::vector<Permutation> images;  // one per presentation generator
  bool surjective = false;
};

// Exhaustive search over generator-image tuples in lexicographic element
// order; returns the first witness (all relators map to the identity,
// surjectivity by closure when required). Throws when the tuple space is too
// large to enumerate at desk scale.
std::optional<QuotientWitness> quotient_search(const Presentation& p, const PermutationGroup& target,
                                               bool require_surjective);

// Independent re-check of a witness.
bool verify_quotient_witness(const Presentation& p, const PermutationGroup& target,
                             const QuotientWitness& witness);

}  // namespace genus2
