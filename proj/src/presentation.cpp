#include "genus2/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace genus2 {

Presentation::Presentation(Alphabet alphabet, const std::vector<Word>& relators)
    : alphabet_(std::move(alphabet)) {
  relators_.reserve(relators.size());
  for (const Word& w : relators) {
    if (w.alphabet() != alphabet_)
      throw std::invalid_argument("presentation: relator over a different alphabet");
    CyclicWord c = cyclic_normal_form(w);
    if (c.empty()) throw std::invalid_argument("presentation: empty relator");
    relators_.push_back(std::move(c));
  }
}

Presentation Presentation::without_relator(int index) const {
  if (index < 0 || index >= relator_count()) throw std::out_of_range("without_relator: bad index");
  std::vector<Word> rest;
  for (int i = 0; i < relator_count(); ++i)
    if (i != index) rest.push_back(relator_word(i));
  return Presentation(alphabet_, rest);
}

Presentation Presentation::with_relator(const Word& w) const {
  std::vector<Word> all;
  all.reserve(relators_.size() + 1);
  for (int i = 0; i < relator_count(); ++i) all.push_back(relator_word(i));
  all.push_back(w);
  return Presentation(alphabet_, all);
}

bool same_group_presentation(const Presentation& p, const Presentation& q) {
  if (p.alphabet().names() != q.alphabet().names()) return false;
  if (p.relator_count() != q.relator_count()) return false;
  std::vector<Word> a, b;
  for (int i = 0; i < p.relator_count(); ++i) {
    a.push_back(p.relator_word(i));
    b.push_back(q.relator_word(i));
  }
  std::sort(a.begin(), a.end(), word_less);
  std::sort(b.begin(), b.end(), word_less);
  return a == b;
}

Word certificate_product(const Presentation& p, const ConsequenceCertificate& cert) {
  Word product(p.alphabet());
  for (const ConsequenceFactor& f : cert.factors) {
    if (f.relator < 0 || f.relator >= p.relator_count())
      throw std::out_of_range("certificate: relator index out of range");
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("certificate: sign must be +-1");
    Word u = remap(f.conjugator, p.alphabet());
    Word r = p.relator_word(f.relator);
    if (f.sign < 0) r = invert(r);
    product = concat(product, concat(u, concat(r, invert(u))));
  }
  return product;
}

bool verify_consequence(const Presentation& p, const Word& w, const ConsequenceCertificate& cert) {
  return certificate_product(p, cert) == remap(w, p.alphabet());
}

ConsequenceCertificate cert_relator(const Presentation& p, int index, int sign) {
  if (index < 0 || index >= p.relator_count()) throw std::out_of_range("cert_relator: bad index");
  return {{ConsequenceFactor{Word(p.alphabet()), index, sign}}};
}

ConsequenceCertificate cert_concat(ConsequenceCertificate left, const ConsequenceCertificate& right) {
  left.factors.insert(left.factors.end(), right.factors.begin(), right.factors.end());
  return left;
}

ConsequenceCertificate cert_invert(const ConsequenceCertificate& cert) {
  ConsequenceCertificate out;
  out.factors.reserve(cert.factors.size());
  for (auto it = cert.factors.rbegin(); it != cert.factors.rend(); ++it)
    out.factors.push_back({it->conjugator, it->relator, -it->sign});
  return out;
}

ConsequenceCertificate cert_conjugate(const ConsequenceCertificate& cert, const Word& u) {
  ConsequenceCertificate out;
  out.factors.reserve(cert.factors.size());
  for (const ConsequenceFactor& f : cert.factors)
    out.factors.push_back({concat(u, remap(f.conjugator, u.alphabet())), f.relator, f.sign});
  return out;
}

std::optional<ConsequenceCertificate> cert_for_cyclic_variant(const Presentation& p,
                                                              const ConsequenceCertificate& cert,
                                                              const Word& proved, const Word& target) {
  if (cyclic_normal_form(proved) != cyclic_normal_form(target)) return std::nullopt;

  // target = conj * rho * conj^-1 where rho is a rotation of the cyclically
  // reduced core of proved, or of its inverse.
  auto reduction_t = cyclically_reduce_with_conjugator(remap(target, p.alphabet()));
  auto reduction_p = cyclically_reduce_with_conjugator(remap(proved, p.alphabet()));

  // certificate for the core of proved
  ConsequenceCertificate core_cert = cert_conjugate(cert, invert(reduction_p.conjugator));

  for (int flip = 0; flip < 2; ++flip) {
    Word core = flip ? invert(reduction_p.core) : reduction_p.core;
    ConsequenceCertificate c = flip ? cert_invert(core_cert) : core_cert;
    int n = std::max(core.size(), 1);
    for (int k = 0; k < n; ++k) {
      if (rotated(core, k) == reduction_t.core) {
        // rotated(core, k) = prefix^-1 * core * prefix
        Word prefix(p.alphabet(), std::vector<Letter>(core.letters().begin(),
                                                      core.letters().begin() + k));
        ConsequenceCertificate rotated_cert = cert_conjugate(c, invert(prefix));
        ConsequenceCertificate final_cert = cert_conjugate(rotated_cert, reduction_t.conjugator);
        if (verify_consequence(p, target, final_cert)) return final_cert;
      }
    }
  }
  return std::nullopt;
}

}  // namespace genus2
