#include <doctest.h>

#include <random>

#include "diagroup/presentation.hpp"

using namespace diagroup;

TEST_CASE("parsing the file format") {
  auto p = parse_presentation("letters x\nrule x = x x\n");
  CHECK(p->alphabet().size() == 1);
  REQUIRE(p->num_relations() == 1);
  CHECK(p->word_to_string(p->relation(0).right) == "x x");

  auto q = parse_presentation(
      "# three-cycle\nletters a b c\nrule a = b\nrule b = c\nrule c = a\n");
  CHECK(q->num_relations() == 3);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("letters a a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters a\nrule a = b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters a\nrule a = a\n"), ParseError);
  CHECK_THROWS_AS(
      parse_presentation("letters a b\nrule a = b\nrule b = a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("letters a\nrule a = \n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rule a = b\n"), ParseError);
  try {
    parse_presentation("letters a\nrule a = q\n");
    CHECK(false);
  } catch (ParseError const& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
}

TEST_CASE("file format round trip") {
  std::string text = "letters a b c\nrule a = b\nrule b c = c a\n";
  auto p = parse_presentation(text);
  CHECK(to_file_format(*p) == text);
}

TEST_CASE("shortlex basics") {
  // ranks: a=0 < b=1
  CHECK(shortlex_compare(Letters{0}, Letters{0, 0}) == Ordering::Less);
  CHECK(shortlex_compare(Letters{0, 1}, Letters{1, 0}) == Ordering::Less);
  CHECK(shortlex_compare(Letters{0}, Letters{0}) == Ordering::Equal);
}

TEST_CASE("shortlex is a total order on random triples") {
  std::mt19937_64 rng(7);
  auto random_word = [&]() {
    Letters w(1 + rng() % 5);
    for (auto& l : w) {
      l = static_cast<Letter>(rng() % 3);
    }
    return w;
  };
  for (int i = 0; i < 500; ++i) {
    Letters a = random_word(), b = random_word(), c = random_word();
    int lt = (shortlex_compare(a, b) == Ordering::Less) +
             (shortlex_compare(b, a) == Ordering::Less) +
             (shortlex_compare(a, b) == Ordering::Equal);
    CHECK(lt == 1);  // trichotomy
    if (shortlex_compare(a, b) == Ordering::Less &&
        shortlex_compare(b, c) == Ordering::Less) {
      CHECK(shortlex_compare(a, c) == Ordering::Less);
    }
  }
}

TEST_CASE("empty words are rejected at the type level") {
  CHECK_THROWS_AS(Word(Letters{}), std::invalid_argument);
}
