#pragma once

#include <optional>
#include <vector>

#include "genus2/word.hpp"

namespace genus2 {

// Generators plus cyclically reduced relators. Relators are stored as
// canonical cyclic forms; a relator that reduces to the empty word is
// rejected at construction.
class Presentation {
 public:
  Presentation() = default;  // invalid placeholder for containers/deserialization
  Presentation(Alphabet alphabet, const std::vector<Word>& relators);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<CyclicWord>& relators() const { return relators_; }
  int relator_count() const { return static_cast<int>(relators_.size()); }
  const Word& relator_word(int i) const { return relators_.at(static_cast<size_t>(i)).representative(); }

  Presentation without_relator(int index) const;
  Presentation with_relator(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<CyclicWord> relators_;
};

// Same alphabet names and equal relator multisets (canonical forms).
bool same_group_presentation(const Presentation& p, const Presentation& q);

// One conjugated relator power u * r[i]^sign * u^-1.
struct ConsequenceFactor {
  Word conjugator;
  int relator = 0;
  int sign = 1;

  friend bool operator==(const ConsequenceFactor&, const ConsequenceFactor&) = default;
};

// Witness that a word lies in the normal closure of the relators: the word
// equals the free product of the factors.
struct ConsequenceCertificate {
  std::vector<ConsequenceFactor> factors;

  friend bool operator==(const ConsequenceCertificate&, const ConsequenceCertificate&) = default;
};

// The free-group product of the factors. Throws std::out_of_range for a bad
// relator index.
Word certificate_product(const Presentation& p, const ConsequenceCertificate& cert);

// Exact free-group equality of the certificate product with w; no implicit
// cyclic rotation.
bool verify_consequence(const Presentation& p, const Word& w, const ConsequenceCertificate& cert);

// Certificate algebra. Products/inverses/conjugates of certified words are
// certified by rewriting the factor list; used to assemble the shipped atlas
// chains and to normalize search output.
ConsequenceCertificate cert_relator(const Presentation& p, int index, int sign = 1);
ConsequenceCertificate cert_concat(ConsequenceCertificate left, const ConsequenceCertificate& right);
ConsequenceCertificate cert_invert(const ConsequenceCertificate& cert);
ConsequenceCertificate cert_conjugate(const ConsequenceCertificate& cert, const Word& u);

// Given a certificate for `proved`, derives one for `target`, provided the
// two are equal as cyclic words (target = some rotation of proved or of its
// inverse, up to conjugation). Returns nullopt otherwise.
std::optional<ConsequenceCertificate> cert_for_cyclic_variant(const Presentation& p,
                                                              const ConsequenceCertificate& cert,
                                                              const Word& proved, const Word& target);

// Bounded search for a consequence certificate: at most maxFactors factors,
// conjugator length at most maxConjLen. Sound (any returned certificate
// verifies) and exhaustive over the bounded space up to the node budget.
struct ConsequenceSearchStats {
  long nodes = 0;
  bool budget_exhausted = false;
};
std::optional<ConsequenceCertificate> search_consequence(const Presentation& p, const Word& w,
                                                         int maxFactors, int maxConjLen,
                                                         long nodeBudget = 2'000'000,
                                                         ConsequenceSearchStats* stats = nullptr);

}  // namespace genus2
