#include <doctest.h>

#include <functional>

#include "genus2/coset.hpp"
#include "tc_oracle.hpp"

using namespace genus2;

namespace {

const Alphabet& AB = Alphabet::ab();
Word W(const char* s) { return parse_word(s, AB); }

Presentation pres(std::initializer_list<const char*> relators) {
  std::vector<Word> ws;
  for (const char* r : relators) ws.push_back(parse_word(r, AB));
  return Presentation(AB, ws);
}

const Presentation poincare = pres({"a^4ba^-1b", "b^-2a^-1ba^-1"});
const Presentation rp3rp3 = pres({"a^2", "b^2"});

int expect_index(const Presentation& p, const std::vector<Word>& sub, TcStrategy strat,
                 int max_cosets = 200000) {
  CosetTable table;
  EnumerationResult r = todd_coxeter(p, sub, max_cosets, strat, &table);
  REQUIRE(r.kind == EnumerationResult::Kind::Index);
  std::string why;
  bool valid = table.validate(p, sub, &why);
  INFO(why);
  REQUIRE(valid);
  CHECK(table.index() == r.index);
  return r.index;
}

void agree_with_oracle(const Presentation& p, const std::vector<Word>& sub) {
  int hlt = expect_index(p, sub, TcStrategy::Hlt);
  int felsch = expect_index(p, sub, TcStrategy::Felsch);
  CHECK(hlt == felsch);
  auto naive = oracles::NaiveCosetEnumerator(p, sub).run();
  REQUIRE(naive.has_value());
  CHECK(*naive == hlt);
}

}  // namespace

TEST_SUITE_BEGIN("coset");

TEST_CASE("spherical caption presentation has order 120") {
  CHECK(expect_index(poincare, {}, TcStrategy::Hlt) == 120);
  CHECK(expect_index(poincare, {}, TcStrategy::Felsch) == 120);
}

TEST_CASE("rp3rp3 over its translation subgroup") { agree_with_oracle(rp3rp3, {W("ab")}); }

TEST_CASE("small known groups") {
  CHECK(expect_index(pres({"a", "b"}), {}, TcStrategy::Hlt) == 1);
  agree_with_oracle(pres({"a^2", "b^2", "abab"}), {});        // Klein four
  agree_with_oracle(pres({"a^3", "b^2", "abab"}), {});        // S3
  agree_with_oracle(pres({"a^3", "b^2", "abab"}), {W("a")});  // index 2
  agree_with_oracle(pres({"a^5", "b^2", "(ab)^3"}), {});      // order 60
}

TEST_CASE("infinite index is reported as exhaustion") {
  // Z/2 * Z/2 over the order-2 subgroup <a>
  EnumerationResult r = todd_coxeter(rp3rp3, {W("a")}, 2000, TcStrategy::Hlt);
  CHECK(r.kind == EnumerationResult::Kind::Exhausted);
}

TEST_CASE("index invariant under rotation and inversion of relators") {
  Presentation rotated_pres =
      Presentation(AB, {rotated(poincare.relator_word(0), 3), invert(poincare.relator_word(1))});
  CHECK(expect_index(rotated_pres, {}, TcStrategy::Hlt) == 120);
  CHECK(expect_index(rotated_pres, {}, TcStrategy::Felsch) == 120);
}

TEST_CASE("exhaustion is a value") {
  EnumerationResult r = todd_coxeter(pres({}), {}, 50, TcStrategy::Hlt);
  CHECK(r.kind == EnumerationResult::Kind::Exhausted);
  CHECK(r.max_cosets == 50);
  EnumerationResult rf = todd_coxeter(pres({}), {}, 50, TcStrategy::Felsch);
  CHECK(rf.kind == EnumerationResult::Kind::Exhausted);
}

TEST_CASE("coincidence-heavy cases agree across strategies") {
  agree_with_oracle(pres({"a^2b", "b^3", "abab^-1"}), {});
  agree_with_oracle(pres({"ab", "a^7"}), {});
  agree_with_oracle(pres({"a^6", "b^4", "abab^-1", "a^3b^2"}), {});
  agree_with_oracle(poincare, {W("a")});
  agree_with_oracle(poincare, {W("ab")});
}

TEST_SUITE_END();
