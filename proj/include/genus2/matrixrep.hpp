#pragma once

#include "genus2/intmat.hpp"
#include "genus2/presentation.hpp"

namespace genus2 {

// One invertible integer matrix per generator, all of the same dimension.
// Inverses exist over the integers (determinant +-1) and are precomputed.
class MatrixAssignment {
 public:
  MatrixAssignment() = default;
  MatrixAssignment(Alphabet alphabet, std::vector<IntMatrix> images);

  const Alphabet& alphabet() const { return alphabet_; }
  int dimension() const { return images_.empty() ? 0 : images_[0].rows(); }
  const IntMatrix& image(int gen) const { return images_.at(static_cast<size_t>(gen)); }
  const IntMatrix& image_inverse(int gen) const { return inverses_.at(static_cast<size_t>(gen)); }

 private:
  Alphabet alphabet_;
  std::vector<IntMatrix> images_;
  std::vector<IntMatrix> inverses_;
};

// Exact product of assigned matrices along the word.
IntMatrix evaluate_word(const MatrixAssignment& assignment, const Word& w);

// True iff every relator evaluates to the identity matrix.
bool check_homomorphism(const Presentation& p, const MatrixAssignment& assignment);

}  // namespace genus2
