#include <doctest.h>

#include <random>

#include "genus2/homology.hpp"
#include "genus2/presentation.hpp"
#include "genus2/tietze.hpp"
#include "test_oracles.hpp"

using namespace genus2;

namespace {

const Alphabet& AB = Alphabet::ab();
Word W(const char* s) { return parse_word(s, AB); }

Presentation pres(const Alphabet& a, std::initializer_list<const char*> relators) {
  std::vector<Word> ws;
  for (const char* r : relators) ws.push_back(parse_word(r, a));
  return Presentation(a, ws);
}

// Seifert fibration presentation displayed for the Sl~(2,R) record.
Presentation brieskorn_source() {
  Alphabet abcd("abcd");
  return pres(abcd, {"abc", "ada^-1d^-1", "bdb^-1d^-1", "cdc^-1d^-1", "a^2d", "b^3d^-1", "c^7d^-1"});
}

}  // namespace

TEST_SUITE_BEGIN("presentation");

TEST_CASE("construction canonicalizes and rejects empty relators") {
  Presentation p = pres(AB, {"ba"});
  CHECK(p.relator_word(0) == W("ab"));
  CHECK_THROWS(pres(AB, {"aa^-1"}));
  CHECK_THROWS(Presentation(AB, {parse_word("c", Alphabet("abc"))}));
}

TEST_CASE("verify_consequence basics") {
  Presentation p = pres(AB, {"a^2", "b^2"});

  CHECK(verify_consequence(p, p.relator_word(0), cert_relator(p, 0)));

  // w = a r0 a^-1 * r1 by construction
  Word w = concat(concat(W("a"), concat(p.relator_word(0), W("a^-1"))), p.relator_word(1));
  ConsequenceCertificate cert{{{W("a"), 0, 1}, {Word(AB), 1, 1}}};
  CHECK(verify_consequence(p, w, cert));
  CHECK_FALSE(verify_consequence(p, W("ab"), cert));
  CHECK_THROWS_AS(certificate_product(p, ConsequenceCertificate{{{Word(AB), 7, 1}}}), std::out_of_range);
}

TEST_CASE("certificate combinators agree with word algebra") {
  Presentation p = pres(AB, {"a^2b^3", "ab^-1a^-1b^-1"});
  std::mt19937 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    ConsequenceCertificate c1{{{oracles::random_word(rng, AB, 3), static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1}}};
    ConsequenceCertificate c2{{{oracles::random_word(rng, AB, 4), static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1}}};
    Word w1 = certificate_product(p, c1), w2 = certificate_product(p, c2);

    CHECK(certificate_product(p, cert_concat(c1, c2)) == concat(w1, w2));
    CHECK(certificate_product(p, cert_invert(c1)) == invert(w1));
    Word u = oracles::random_word(rng, AB, 3);
    CHECK(certificate_product(p, cert_conjugate(c1, u)) == concat(u, concat(w1, invert(u))));

    // transport to a cyclic variant
    Word proved = concat(w1, w2);
    ConsequenceCertificate both = cert_concat(c1, c2);
    Word core = cyclically_reduce(proved);
    if (!core.empty()) {
      Word target = rotated(core, static_cast<int>(rng() % static_cast<unsigned>(core.size())));
      if (rng() % 2) target = invert(target);
      auto moved = cert_for_cyclic_variant(p, both, proved, target);
      REQUIRE(moved.has_value());
      CHECK(verify_consequence(p, target, *moved));
    }
  }
}

TEST_CASE("search_consequence finds small certificates") {
  Presentation p = pres(AB, {"a^2b^3", "ab^-1a^-1b^-1"});

  auto direct = search_consequence(p, p.relator_word(0), 1, 0);
  REQUIRE(direct.has_value());
  CHECK(verify_consequence(p, p.relator_word(0), *direct));

  Word conj = concat(W("a"), concat(p.relator_word(0), W("a^-1")));
  auto found = search_consequence(p, conj, 1, 1);
  REQUIRE(found.has_value());
  CHECK(verify_consequence(p, conj, *found));

  // not a consequence: exponent sums already fail
  CHECK_FALSE(search_consequence(p, W("a"), 3, 2).has_value());
}

TEST_CASE("seifert-h2xr: first relation is a consequence of the second") {
  Presentation intermediate = pres(AB, {"b^5a^-5", "b^-1a^4b^-1a^4b^-1a^4b^-1a^4b^-1a^-11"});
  Word first = W("ba^5b^-1a^-5");
  auto cert = search_consequence(intermediate, first, 4, 3);
  REQUIRE(cert.has_value());
  CHECK(verify_consequence(intermediate, first, *cert));
  // the certificate should only need the b^5 a^-5 relator (index 0)
  for (const auto& f : cert->factors) CHECK(f.relator == 0);
}

TEST_CASE("apply_tietze_step: generator elimination on the nilmanifold presentation") {
  Alphabet abc("abc");
  Presentation p5 = pres(abc, {"cbab^-1a^-1", "aca^-1c^-1", "bcb^-1c^-1"});
  Presentation reduced = apply_tietze_step(p5, RemoveGenerator{'c', 0});
  CHECK(reduced.alphabet().names() == "ab");
  REQUIRE(reduced.relator_count() == 2);
  // first commutation relator becomes the first caption relator (up to cyclic form)
  CHECK(reduced.relators()[0] == cyclic_normal_form(W("aba^-1b^-1a^-1bab^-1")));
  CHECK(homology_h1(reduced) == AbelianGroup{2, {}});
}

TEST_CASE("apply_tietze_step: add generator, remove duplicate relator") {
  Presentation free2(AB, {});
  Presentation with_c = apply_tietze_step(free2, AddGenerator{'c', W("ab")});
  CHECK(with_c.alphabet().names() == "abc");
  REQUIRE(with_c.relator_count() == 1);
  CHECK(same_group_presentation(with_c, pres(Alphabet("abc"), {"c(ab)^-1"})));

  Presentation dup = pres(AB, {"ab", "ba"});  // same canonical relator twice
  Presentation removed = apply_tietze_step(dup, RemoveRelator{1, cert_relator(dup.without_relator(1), 0)});
  CHECK(removed.relator_count() == 1);

  CHECK_THROWS(apply_tietze_step(with_c, AddGenerator{'a', W("b")}));
  Presentation twice = pres(AB, {"a^2b"});
  CHECK_THROWS(apply_tietze_step(twice, RemoveGenerator{'a', 0}));  // two occurrences
}

TEST_CASE("add then remove a generator is the identity") {
  Presentation p = pres(AB, {"a^4ba^-1b", "b^-2a^-1ba^-1"});
  Presentation added = apply_tietze_step(p, AddGenerator{'z', W("ab^-1a")});
  Presentation back = apply_tietze_step(added, RemoveGenerator{'z', added.relator_count() - 1});
  CHECK(same_group_presentation(p, back));
}

TEST_CASE("simplify_greedy") {
  // one eliminable generator
  Presentation simple = pres(Alphabet("abc"), {"c(ab)^-1"});
  GreedyResult r = simplify_greedy(simple);
  CHECK(r.presentation.alphabet().names() == "ab");
  CHECK(r.presentation.relator_count() == 0);
  CHECK(verify_tietze_certificate(r.certificate));

  // nothing to do
  Presentation stuck = pres(AB, {"a^2", "b^2"});
  GreedyResult r2 = simplify_greedy(stuck);
  CHECK(r2.certificate.steps.empty());
  CHECK(same_group_presentation(r2.presentation, stuck));

  // Seifert fibration presentation: reduces to two generators, homology intact
  Presentation p7 = brieskorn_source();
  GreedyResult r7 = simplify_greedy(p7);
  CHECK(r7.presentation.alphabet().size() == 2);
  CHECK(verify_tietze_certificate(r7.certificate));
  CHECK(homology_h1(r7.presentation) == homology_h1(p7));
  CHECK(homology_h1(r7.presentation) == AbelianGroup{0, {}});
  // caption presentation has the same homology
  CHECK(homology_h1(pres(AB, {"a^2b^3", "a(b^-1a^-1)^6b^-1"})) == AbelianGroup{0, {}});
}

TEST_CASE("verify_tietze_certificate") {
  Presentation p = pres(AB, {"a^2", "b^2"});

  TietzeCertificate idcert{p, p, {}, {}};
  CHECK(verify_tietze_certificate(idcert));

  // wrong target
  TietzeCertificate bad{p, pres(AB, {"a^2", "b^3"}), {}, {}};
  TietzeFailure why;
  CHECK_FALSE(verify_tietze_certificate(bad, &why));
  CHECK(why.step == -1);

  // invalid step is reported with its index
  TietzeCertificate badstep{p, p, {RemoveGenerator{'a', 0}}, {}};
  CHECK_FALSE(verify_tietze_certificate(badstep, &why));
  CHECK(why.step == 0);

  // renaming: swap generator names through a chain with none -> detected
  Presentation q = pres(Alphabet("xy"), {"x^2", "y^2"});
  TietzeCertificate renamed{p, q, {}, {{'a', 'x'}, {'b', 'y'}}};
  CHECK(verify_tietze_certificate(renamed));
  TietzeCertificate misnamed{p, q, {}, {}};
  CHECK_FALSE(verify_tietze_certificate(misnamed));
}

TEST_CASE("homology of caption presentations") {
  CHECK(homology_h1(pres(AB, {"a^4ba^-1b", "b^-2a^-1ba^-1"})) == AbelianGroup{0, {}});
  CHECK(homology_h1(pres(AB, {"a^2", "b^2"})) == AbelianGroup{0, {2, 2}});
  CHECK(homology_h1(pres(AB, {"a^2b^2a^-1ba^-1b^2", "ab^2a^2b^-1ab^-1a"})) == AbelianGroup{0, {5, 5}});
  CHECK(homology_h1(pres(AB, {"ab^2a^-1b^2", "a^-1ba^-2b^-1a^-1"})) == AbelianGroup{0, {4, 4}});
  CHECK(homology_h1(pres(AB, {"aba^-1b^-1a^-1bab^-1", "ba^-1bab^-1a^-1b^-1a"})) == AbelianGroup{2, {}});
  CHECK(homology_h1(pres(AB, {"ab^-1a^-1b^-1aba^-1b", "aba^-2bab^-3"})) == AbelianGroup{1, {}});
  CHECK(homology_h1(pres(AB, {"a^2b^3", "a(b^-1a^-1)^6b^-1"})) == AbelianGroup{0, {}});
  CHECK(homology_h1(pres(AB, {"b^-1a^4b^-1a^-1b^-1a^4b^-1a^-1b^-1a^-1", "b^5a^-5"})) == AbelianGroup{1, {5}});

  // torus-bundle cross-check: H1 = Z + coker(L - I), det(L - I) = -1
  auto l_minus_i = IntMatrix::from_rows({{2, -1}, {1, -1}});
  CHECK(l_minus_i.determinant() == -1);
  CHECK(cokernel(l_minus_i) == AbelianGroup{0, {}});
}

TEST_SUITE_END();
