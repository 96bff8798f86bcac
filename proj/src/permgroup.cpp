#include "genus2/permgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace genus2 {

Permutation perm_identity(int degree) {
  Permutation p(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
  Permutation out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = q[static_cast<size_t>(p[i])];
  return out;
}

Permutation perm_inverse(const Permutation& p) {
  Permutation out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<size_t>(x) >= p.size() || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

namespace {

size_t closure_order(int degree, const std::vector<Permutation>& gens, size_t cap,
                     std::vector<Permutation>* out) {
  std::set<Permutation> elements{perm_identity(degree)};
  std::vector<Permutation> frontier{perm_identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Permutation c = perm_compose(e, g);
        if (elements.insert(c).second) {
          if (elements.size() > cap) return cap + 1;
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  if (out) out->assign(elements.begin(), elements.end());
  return elements.size();
}

}  // namespace

PermutationGroup enumerate_group(int degree, std::vector<Permutation> generators, size_t max_order) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw std::invalid_argument("enumerate_group: generator is not a permutation of the stated degree");
  PermutationGroup group;
  group.degree = degree;
  group.generators = std::move(generators);
  if (closure_order(degree, group.generators, max_order, &group.elements) > max_order)
    throw std::invalid_argument("enumerate_group: order exceeds the desk-scale bound");
  return group;  // std::set iteration already yields lexicographic order
}

Permutation evaluate_permutation_word(const std::vector<Permutation>& images, const Word& w) {
  if (images.empty()) throw std::invalid_argument("evaluate_permutation_word: no images");
  Permutation cur = perm_identity(static_cast<int>(images[0].size()));
  for (Letter l : w.letters()) {
    const Permutation& g = images.at(static_cast<size_t>(l.gen));
    cur = perm_compose(cur, l.sign > 0 ? g : perm_inverse(g));
  }
  return cur;
}

std::optional<QuotientWitness> quotient_search(const Presentation& p, const PermutationGroup& target,
                                               bool require_surjective) {
  size_t n = target.order();
  int k = p.alphabet().size();
  double tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= static_cast<double>(n);
  if (tuples > 2e8)
    throw std::invalid_argument("quotient_search: target too large for exhaustive tuple search");

  Permutation id = perm_identity(target.degree);
  std::vector<size_t> idx(static_cast<size_t>(k), 0);
  std::vector<Permutation> images(static_cast<size_t>(k));
  for (;;) {
    for (int i = 0; i < k; ++i) images[static_cast<size_t>(i)] = target.elements[idx[static_cast<size_t>(i)]];
    bool all_closed = true;
    for (int i = 0; all_closed && i < p.relator_count(); ++i)
      all_closed = evaluate_permutation_word(images, p.relator_word(i)) == id;
    if (all_closed) {
      bool surjective = closure_order(target.degree, images, n, nullptr) == n;
      if (!require_surjective || surjective) return QuotientWitness{images, surjective};
    }
    // lexicographic tuple increment, last position fastest
    int pos = k - 1;
    while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == n) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

bool verify_quotient_witness(const Presentation& p, const PermutationGroup& target,
                             const QuotientWitness& witness) {
  if (static_cast<int>(witness.images.size()) != p.alphabet().size()) return false;
  for (const auto& g : witness.images)
    if (static_cast<int>(g.size()) != target.degree || !is_permutation(g)) return false;
  // every image must actually lie in the target group
  for (const auto& g : witness.images)
    if (!std::binary_search(target.elements.begin(), target.elements.end(), g)) return false;
  Permutation id = perm_identity(target.degree);
  for (int i = 0; i < p.relator_count(); ++i)
    if (evaluate_permutation_word(witness.images, p.relator_word(i)) != id) return false;
  if (witness.surjective && closure_order(target.degree, witness.images, target.order(), nullptr) != target.order())
    return false;
  return true;
}

}  // namespace genus2
