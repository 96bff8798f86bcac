#pragma once

#include <string>
#include <vector>

#include "genus2/presentation.hpp"

namespace genus2 {

enum class TcStrategy { Hlt, Felsch };

struct EnumerationResult {
  enum class Kind { Index, Exhausted };
  Kind kind = Kind::Exhausted;
  int index = 0;       // set when kind == Index
  int max_cosets = 0;  // the bound that was hit when kind == Exhausted

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

// A completed, standardized coset table: cosets are 1-based and contiguous,
// coset 1 is the subgroup, rows are in breadth-first discovery order.
class CosetTable {
 public:
  int index() const { return static_cast<int>(rows_.size()); }
  int generator_count() const { return ngens_; }

  // Action of g^sign on a coset; both are 1-based and always defined.
  int entry(int coset, int gen, int sign) const {
    return rows_.at(static_cast<size_t>(coset - 1))[static_cast<size_t>(2 * gen + (sign > 0 ? 0 : 1))];
  }

  // Independent re-check: inverse consistency, every relator closed at every
  // coset, subgroup generators fix coset 1, action transitive.
  bool validate(const Presentation& p, const std::vector<Word>& subgroup_words,
                std::string* why = nullptr) const;

 private:
  friend class TcWorker;
  int ngens_ = 0;
  std::vector<std::vector<int>> rows_;
};

// Enumerates cosets of the subgroup generated by subgroup_words. The
// returned index is independent of the strategy; Exhausted is reported when
// more than max_cosets rows would be needed.
EnumerationResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                               int max_cosets = 200000, TcStrategy strategy = TcStrategy::Hlt,
                               CosetTable* table_out = nullptr);

}  // namespace genus2
