#include <doctest.h>

#include <deque>
#include <random>
#include <set>
#include <unordered_set>

#include "diagroup/rewrite.hpp"

using namespace diagroup;

namespace {

PresentationPtr three_powers() {
  // complete: a^3 = a, a^3 = a^2, b a^3 = a^3 b
  return parse_presentation(
      "letters a b\nrule a a a = a\nrule a a a = a a\n"
      "rule b a a a = a a a b\n");
}

// Breadth-first closure oracle, independent from normal forms.
std::set<Letters> class_oracle(Letters const& w, Presentation const& p,
                               std::size_t cap) {
  std::set<Letters> seen{w};
  std::deque<Letters> queue{w};
  while (!queue.empty() && seen.size() < cap) {
    Letters cur = queue.front();
    queue.pop_front();
    for (auto const& app : rewrite_step(cur, p, Direction::Both)) {
      if (seen.insert(app.result).second) {
        queue.push_back(app.result);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("rewrite_step enumerates matches") {
  auto p = parse_presentation("letters x\nrule x x = x\n");
  auto w = p->parse_word("x x");
  auto steps = rewrite_step(w, *p, Direction::Forward);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].position == 0);
  CHECK(steps[0].forward);
  CHECK(steps[0].result == Letters{0});
}

TEST_CASE("rewrite_step finds the worked step of the three-powers system") {
  auto p = three_powers();
  auto w = p->parse_word("a b a a a b a a a a");
  auto target = p->parse_word("a a a a b b a a a a").letters();
  bool found = false;
  for (auto const& app : rewrite_step(w, *p, Direction::Forward)) {
    if (app.result == target) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("rewrite_step returns nothing when no forward rule applies") {
  auto p = parse_presentation(
      "letters a b c x y\nrule a = b\nrule x = y\nrule c = a x\n"
      "rule c = b x\n");
  CHECK(rewrite_step(p->parse_word("b y"), *p, Direction::Forward).empty());
}

TEST_CASE("completeness of the power presentation") {
  auto report = check_completeness(
      *parse_presentation("letters x\nrule x x = x\n"));
  CHECK(report.complete());
}

TEST_CASE("x = x^2 does not terminate") {
  auto report = check_completeness(
      *parse_presentation("letters x\nrule x = x x\n"));
  CHECK(report.terminating == Certainty::Disproven);
  REQUIRE(!report.nontermination_witness.empty());
  CHECK(report.nontermination_witness.front() == Letters{0});
  CHECK_FALSE(report.complete());
}

TEST_CASE("the five-letter system is complete; its critical pair joins") {
  auto p = parse_presentation(
      "letters a b c x y\nrule a = b\nrule x = y\nrule c = a x\n"
      "rule c = b x\n");
  auto report = check_completeness(*p);
  CHECK(report.terminating == Certainty::Proven);
  CHECK(report.locally_confluent == Certainty::Proven);
  CHECK(report.complete());
}

TEST_CASE("three-powers presentation is complete") {
  CHECK(check_completeness(*three_powers()).complete());
}

TEST_CASE("a genuinely non-confluent system is disproven") {
  // b <- a -> c with b, c irreducible.
  auto p = parse_presentation("letters a b c\nrule a = b\nrule a = c\n");
  auto report = check_completeness(*p);
  CHECK(report.locally_confluent == Certainty::Disproven);
  REQUIRE(report.confluence_witness.has_value());
}

TEST_CASE("worked normal form trace of the three-powers system") {
  auto p = three_powers();
  NormalFormer nf(p);
  auto trace = nf.trace(p->parse_word("a b a a a b a a a a"));
  std::vector<std::string> expect = {
      "a b a a a b a a a a", "a a a a b b a a a a", "a a b b a a a a",
      "a a b a a a b a",     "a a a a a b b a",     "a a a b b a",
      "a b b a",
  };
  REQUIRE(trace.size() == expect.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(p->word_to_string(trace[i]) == expect[i]);
  }
}

TEST_CASE("irreducible words have empty traces") {
  auto p = three_powers();
  NormalFormer nf(p);
  auto w = p->parse_word("a b b a");
  CHECK(nf.trace(w).size() == 1);
  CHECK(nf.reduce(w) == w);
}

TEST_CASE("normal form agrees with a breadth-first oracle") {
  auto p = parse_presentation("letters x\nrule x x = x\n");
  NormalFormer nf(p);
  CHECK(p->word_to_string(nf.reduce(p->parse_word("x x x x x"))) == "x");
  // All rewrite orders end at the same irreducible word.
  auto cls = class_oracle(p->parse_word("x x x x x").letters(), *p, 100);
  Letters least = *cls.begin();
  for (auto const& m : cls) {
    bool reduced = rewrite_step(m, *p, Direction::Forward).empty();
    if (reduced) {
      CHECK(m == nf.reduce(p->parse_word("x x x x x")).letters());
    }
  }
  (void)least;
}

TEST_CASE("normal form is idempotent") {
  auto p = three_powers();
  NormalFormer nf(p);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Letters w(1 + rng() % 8);
    for (auto& l : w) {
      l = static_cast<Letter>(rng() % 2);
    }
    Word r = nf.reduce(Word(w));
    CHECK(nf.reduce(r) == r);
  }
}

TEST_CASE("the principal trace replayed through rewrite_step") {
  auto p = three_powers();
  NormalFormer nf(p);
  auto trace = nf.trace(p->parse_word("a b a a a b a a a a"));
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    bool reachable = false;
    for (auto const& app :
         rewrite_step(trace[i].letters(), *p, Direction::Forward)) {
      if (app.result == trace[i + 1].letters()) {
        reachable = true;
      }
    }
    CHECK(reachable);
  }
}

TEST_CASE("normal_former refuses incomplete presentations") {
  auto p = parse_presentation("letters x\nrule x = x x\n");
  CHECK_THROWS_AS(NormalFormer{p}, std::invalid_argument);
}

TEST_CASE("word equality by class intersection") {
  auto p = parse_presentation(
      "letters a b c x y\nrule a = b\nrule b = c\nrule c = a\nrule x = y\n");
  CHECK(words_equal_mod(p->parse_word("a"), p->parse_word("x"), *p) ==
        EqualityResult::Distinct);
  CHECK(words_equal_mod(p->parse_word("a"), p->parse_word("c"), *p) ==
        EqualityResult::Equal);
  CHECK(words_equal_mod(p->parse_word("a"), p->parse_word("a"), *p) ==
        EqualityResult::Equal);
}

TEST_CASE("equality in the commutator-of-F presentation") {
  // x = x^2, a1 = a2 x, b1 = x b2 (truncation at 2).
  auto p = parse_presentation(
      "letters x a1 a2 b1 b2\nrule x = x x\nrule a1 = a2 x\n"
      "rule b1 = x b2\n");
  CHECK(words_equal_mod(p->parse_word("a1 x"), p->parse_word("a1"), *p) ==
        EqualityResult::Equal);
}

TEST_CASE("normal forms and equality agree on small classes") {
  auto p = three_powers();
  NormalFormer nf(p);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    Letters u(1 + rng() % 5), v(1 + rng() % 5);
    for (auto& l : u) {
      l = static_cast<Letter>(rng() % 2);
    }
    for (auto& l : v) {
      l = static_cast<Letter>(rng() % 2);
    }
    auto oracle_u = class_oracle(u, *p, 200);
    bool same_class = oracle_u.size() < 200 && oracle_u.count(v) > 0;
    bool nf_equal = nf.reduce(Word(u)) == nf.reduce(Word(v));
    if (oracle_u.size() < 200) {
      CHECK(same_class == nf_equal);
    }
    CHECK((words_equal_mod(Word(u), Word(v), *p) == EqualityResult::Equal) ==
          nf_equal);
  }
}

TEST_CASE("enumerate_word_class reports truncation") {
  auto p = parse_presentation("letters x\nrule x = x x\n");
  Budget small;
  small.max_words = 20;
  auto cls = enumerate_word_class(Letters{0}, *p, small);
  CHECK_FALSE(cls.closed);
  CHECK(cls.words.size() <= 20);

  auto q = parse_presentation("letters a b c\nrule a = b\nrule b = c\nrule c = a\n");
  auto cls2 = enumerate_word_class(Letters{0}, *q);
  CHECK(cls2.closed);
  CHECK(cls2.words.size() == 3);
}
