#include "genus2/matrixrep.hpp"

#include <stdexcept>

namespace genus2 {

MatrixAssignment::MatrixAssignment(Alphabet alphabet, std::vector<IntMatrix> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.size())
    throw std::invalid_argument("matrix assignment: one matrix per generator required");
  int dim = images_.empty() ? 0 : images_[0].rows();
  inverses_.reserve(images_.size());
  for (const IntMatrix& m : images_) {
    if (m.rows() != m.cols() || m.rows() != dim)
      throw std::invalid_argument("matrix assignment: images must be square and of equal dimension");
    Int det = m.determinant();
    if (det != 1 && det != -1)
      throw std::invalid_argument("matrix assignment: image must be invertible over Z (det +-1)");
    inverses_.push_back(m.inverse_unimodular());
  }
}

IntMatrix evaluate_word(const MatrixAssignment& assignment, const Word& w) {
  if (w.alphabet().names() != assignment.alphabet().names())
    throw std::invalid_argument("evaluate_word: alphabet mismatch");
  IntMatrix acc = IntMatrix::identity(assignment.dimension());
  for (Letter l : w.letters())
    acc = acc * (l.sign > 0 ? assignment.image(l.gen) : assignment.image_inverse(l.gen));
  return acc;
}

bool check_homomorphism(const Presentation& p, const MatrixAssignment& assignment) {
  for (int i = 0; i < p.relator_count(); ++i)
    if (!evaluate_word(assignment, p.relator_word(i)).is_identity()) return false;
  return true;
}

}  // namespace genus2
