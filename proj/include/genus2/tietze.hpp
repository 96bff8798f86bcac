#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "genus2/presentation.hpp"

namespace genus2 {

// The four elementary moves. Certificates make Add/RemoveRelator checkable;
// RemoveGenerator requires the named generator to occur exactly once in the
// defining relator (after cyclic rotation), which is solved for the
// generator and substituted everywhere.
struct AddRelator {
  Word word;
  ConsequenceCertificate certificate;
};
struct RemoveRelator {
  int index = 0;
  ConsequenceCertificate certificate;  // over the remaining relators
};
struct AddGenerator {
  char name = 0;
  Word definition;  // over the old alphabet
};
struct RemoveGenerator {
  char name = 0;
  int relator = 0;  // defining relator index
};

using TietzeStep = std::variant<AddRelator, RemoveRelator, AddGenerator, RemoveGenerator>;

// Throws std::invalid_argument when the step does not apply (failed
// certificate, occurrence count, name collision, bad index).
Presentation apply_tietze_step(const Presentation& p, const TietzeStep& step);

// A replayable chain from source to target. The final presentation is
// compared to the target after applying `renaming` to generator names
// (identity when empty); relator order is ignored, words are compared as
// canonical cyclic forms under the target alphabet.
struct TietzeCertificate {
  Presentation source;
  Presentation target;
  std::vector<TietzeStep> steps;
  std::map<char, char> renaming;
};

struct TietzeFailure {
  int step = -1;  // -1: final comparison failed
  std::string message;
};

bool verify_tietze_certificate(const TietzeCertificate& cert, TietzeFailure* failure = nullptr);

// Repeatedly eliminates any generator occurring exactly once in some
// relator; candidate order: shortest defining relator, then generator order,
// then relator index. Returns the fixed point and the replayable chain.
struct GreedyResult {
  Presentation presentation;
  TietzeCertificate certificate;
};
GreedyResult simplify_greedy(const Presentation& p);

}  // namespace genus2
