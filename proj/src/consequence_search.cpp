#include <algorithm>
#include <unordered_map>

#include "genus2/presentation.hpp"

namespace genus2 {

namespace {

// One candidate insertion: splice a rotated relator power into the current
// word so that the removed factor is u * r^sign * u^-1 with |u| bounded.
struct Move {
  Word result;
  ConsequenceFactor factor;
};

struct Searcher {
  const Presentation& p;
  int max_factors;
  int max_conj_len;
  long budget;
  ConsequenceSearchStats stats;
  int max_relator_len = 0;
  std::unordered_map<Word, int, WordHash> seen;  // word -> least depth expanded at
  std::vector<ConsequenceFactor> path;

  Searcher(const Presentation& pres, int mf, int mcl, long nodes)
      : p(pres), max_factors(mf), max_conj_len(mcl), budget(nodes) {
    for (int i = 0; i < p.relator_count(); ++i)
      max_relator_len = std::max(max_relator_len, p.relator_word(i).size());
  }

  std::vector<Move> moves_from(const Word& w) {
    std::vector<Move> out;
    const Alphabet& a = p.alphabet();
    for (int pos = 0; pos <= w.size(); ++pos) {
      Word prefix(a, std::vector<Letter>(w.letters().begin(), w.letters().begin() + pos));
      Word suffix(a, std::vector<Letter>(w.letters().begin() + pos, w.letters().end()));
      for (int rel = 0; rel < p.relator_count(); ++rel) {
        const Word& r = p.relator_word(rel);
        for (int inserted_sign : {1, -1}) {
          for (int rot = 0; rot < r.size(); ++rot) {
            Word cut(a, std::vector<Letter>(r.letters().begin(), r.letters().begin() + rot));
            Word conj = concat(prefix, invert(cut));
            if (conj.size() > max_conj_len) continue;
            Word piece = rotated(r, rot);
            if (inserted_sign < 0) piece = invert(piece);
            Word next = concat(prefix, concat(piece, suffix));
            out.push_back({std::move(next), {std::move(conj), rel, -inserted_sign}});
          }
        }
      }
    }
    // shorter remainders first; stable order keeps the search deterministic
    std::stable_sort(out.begin(), out.end(),
                     [](const Move& x, const Move& y) { return x.result.size() < y.result.size(); });
    return out;
  }

  bool dfs(const Word& w, int depth) {
    if (w.empty()) return true;
    if (depth == max_factors) return false;
    // any completion writes w as at most (max_factors - depth) factors, each
    // of reduced length at most |r| + 2 * maxConjLen
    if (static_cast<long>(w.size()) >
        static_cast<long>(max_factors - depth) * (max_relator_len + 2L * max_conj_len))
      return false;
    auto it = seen.find(w);
    if (it != seen.end() && it->second <= depth) return false;
    seen[w] = depth;
    if (stats.nodes++ >= budget) {
      stats.budget_exhausted = true;
      return false;
    }
    for (Move& m : moves_from(w)) {
      path.push_back(m.factor);
      if (dfs(m.result, depth + 1)) return true;
      if (stats.budget_exhausted) return false;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<ConsequenceCertificate> search_consequence(const Presentation& p, const Word& w,
                                                         int maxFactors, int maxConjLen,
                                                         long nodeBudget,
                                                         ConsequenceSearchStats* stats) {
  if (maxFactors <= 0 || maxConjLen < 0) throw std::invalid_argument("search_consequence: bounds must be positive");
  Word target = remap(w, p.alphabet());
  Searcher s(p, maxFactors, maxConjLen, nodeBudget);
  bool found = s.dfs(target, 0);
  if (stats) *stats = s.stats;
  if (!found) return std::nullopt;
  ConsequenceCertificate cert{std::move(s.path)};
  if (!verify_consequence(p, target, cert)) return std::nullopt;  // safety net, not expected
  return cert;
}

}  // namespace genus2
