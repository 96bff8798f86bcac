#include "genus2/tietze.hpp"

#include <algorithm>
#include <stdexcept>

namespace genus2 {

namespace {

int occurrence_count(const Word& w, int gen) {
  int n = 0;
  for (Letter l : w.letters())
    if (l.gen == gen) ++n;
  return n;
}

Presentation apply_add_relator(const Presentation& p, const AddRelator& s) {
  Word w = remap(s.word, p.alphabet());
  if (cyclic_normal_form(w).empty()) throw std::invalid_argument("add relator: word is trivial");
  if (!verify_consequence(p, w, s.certificate))
    throw std::invalid_argument("add relator: certificate does not verify");
  return p.with_relator(w);
}

Presentation apply_remove_relator(const Presentation& p, const RemoveRelator& s) {
  if (s.index < 0 || s.index >= p.relator_count())
    throw std::invalid_argument("remove relator: index out of range");
  Presentation rest = p.without_relator(s.index);
  if (!verify_consequence(rest, p.relator_word(s.index), s.certificate))
    throw std::invalid_argument("remove relator: certificate does not verify");
  return rest;
}

Presentation apply_add_generator(const Presentation& p, const AddGenerator& s) {
  if (p.alphabet().contains(s.name))
    throw std::invalid_argument(std::string("add generator: name collision on '") + s.name + "'");
  Alphabet bigger = p.alphabet().with(s.name);
  std::vector<Word> relators;
  for (int i = 0; i < p.relator_count(); ++i) relators.push_back(remap(p.relator_word(i), bigger));
  Word definition = remap(s.definition, bigger);
  Word name_letter(bigger, {{static_cast<std::int8_t>(*bigger.index(s.name)), 1}});
  relators.push_back(concat(name_letter, invert(definition)));
  return Presentation(bigger, relators);
}

Presentation apply_remove_generator(const Presentation& p, const RemoveGenerator& s) {
  auto gen = p.alphabet().index(s.name);
  if (!gen) throw std::invalid_argument("remove generator: unknown generator");
  if (s.relator < 0 || s.relator >= p.relator_count())
    throw std::invalid_argument("remove generator: relator index out of range");
  const Word& defining = p.relator_word(s.relator);
  if (occurrence_count(defining, *gen) != 1)
    throw std::invalid_argument("remove generator: generator must occur exactly once in defining relator");

  int at = 0;
  while (defining.at(at).gen != *gen) ++at;
  Word rot = rotated(defining, at);  // g^e * v = 1
  Word tail(p.alphabet(),
            std::vector<Letter>(rot.letters().begin() + 1, rot.letters().end()));
  Word definition = rot.at(0).sign > 0 ? invert(tail) : tail;  // g = ...

  Alphabet smaller = p.alphabet().without(s.name);
  Word definition_small = remap(definition, smaller);
  std::vector<Word> relators;
  for (int i = 0; i < p.relator_count(); ++i) {
    if (i == s.relator) continue;
    Word image = substitute(p.relator_word(i), s.name, definition_small);
    if (cyclic_normal_form(image).empty()) continue;  // trivialized by the substitution
    relators.push_back(image);
  }
  return Presentation(smaller, relators);
}

}  // namespace

Presentation apply_tietze_step(const Presentation& p, const TietzeStep& step) {
  return std::visit(
      [&](const auto& s) -> Presentation {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AddRelator>) return apply_add_relator(p, s);
        if constexpr (std::is_same_v<T, RemoveRelator>) return apply_remove_relator(p, s);
        if constexpr (std::is_same_v<T, AddGenerator>) return apply_add_generator(p, s);
        if constexpr (std::is_same_v<T, RemoveGenerator>) return apply_remove_generator(p, s);
      },
      step);
}

bool verify_tietze_certificate(const TietzeCertificate& cert, TietzeFailure* failure) {
  auto fail = [&](int step, std::string message) {
    if (failure) *failure = {step, std::move(message)};
    return false;
  };

  Presentation current = cert.source;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    try {
      current = apply_tietze_step(current, cert.steps[i]);
    } catch (const std::exception& e) {
      return fail(static_cast<int>(i), e.what());
    }
  }

  // rename final generators, then compare against the target
  std::string renamed;
  for (char c : current.alphabet().names()) {
    auto it = cert.renaming.find(c);
    renamed += (it == cert.renaming.end()) ? c : it->second;
  }
  std::string sorted_renamed = renamed, sorted_target = cert.target.alphabet().names();
  std::sort(sorted_renamed.begin(), sorted_renamed.end());
  std::sort(sorted_target.begin(), sorted_target.end());
  if (sorted_renamed != sorted_target)
    return fail(-1, "final alphabet {" + renamed + "} does not match target {" +
                        cert.target.alphabet().names() + "}");

  if (current.relator_count() != cert.target.relator_count())
    return fail(-1, "final relator count " + std::to_string(current.relator_count()) +
                        " != target " + std::to_string(cert.target.relator_count()));

  std::vector<Word> final_relators, target_relators;
  for (int i = 0; i < current.relator_count(); ++i) {
    std::vector<Letter> letters;
    for (Letter l : current.relator_word(i).letters()) {
      char name = renamed[static_cast<size_t>(l.gen)];
      letters.push_back({static_cast<std::int8_t>(*cert.target.alphabet().index(name)), l.sign});
    }
    Word image(cert.target.alphabet(), std::move(letters));
    final_relators.push_back(cyclic_normal_form(image).representative());
  }
  for (int i = 0; i < cert.target.relator_count(); ++i)
    target_relators.push_back(cert.target.relator_word(i));
  std::sort(final_relators.begin(), final_relators.end(), word_less);
  std::sort(target_relators.begin(), target_relators.end(), word_less);
  if (final_relators != target_relators) return fail(-1, "final relators do not match target");
  return true;
}

GreedyResult simplify_greedy(const Presentation& p) {
  GreedyResult out;
  out.certificate.source = p;
  Presentation current = p;
  for (;;) {
    // shortest defining relator wins; ties prefer the latest generator (so
    // auxiliary generators like the c of c(ab)^-1 go first), then the
    // earliest relator
    int best_gen = -1, best_rel = -1, best_len = 0;
    for (int i = 0; i < current.relator_count(); ++i) {
      int len = current.relator_word(i).size();
      for (int g = 0; g < current.alphabet().size(); ++g) {
        if (occurrence_count(current.relator_word(i), g) != 1) continue;
        bool better = best_gen < 0 || len < best_len ||
                      (len == best_len && (g > best_gen || (g == best_gen && i < best_rel)));
        if (better) {
          best_gen = g;
          best_rel = i;
          best_len = len;
        }
      }
    }
    if (best_gen < 0) break;
    RemoveGenerator step{current.alphabet().name(best_gen), best_rel};
    current = apply_tietze_step(current, step);
    out.certificate.steps.emplace_back(step);
  }
  out.presentation = current;
  out.certificate.target = current;
  return out;
}

}  // namespace genus2
