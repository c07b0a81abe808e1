#include "diagroup/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "diagroup/simplex.hpp"

namespace diagroup {

namespace {

bool matches_at(Letters const& w, Letters const& pattern, std::size_t pos) {
  if (pos + pattern.size() > w.size()) {
    return false;
  }
  return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

Letters splice(Letters const& w, std::size_t pos, std::size_t len,
               Letters const& replacement) {
  Letters out;
  out.reserve(w.size() - len + replacement.size());
  out.insert(out.end(), w.begin(), w.begin() + pos);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

bool contains_factor(Letters const& w, Letters const& f) {
  if (f.size() > w.size()) {
    return false;
  }
  for (std::size_t pos = 0; pos + f.size() <= w.size(); ++pos) {
    if (matches_at(w, f, pos)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<RewriteApplication> rewrite_step(Letters const& w,
                                             Presentation const& p,
                                             Direction dir) {
  std::vector<RewriteApplication> out;
  for (std::size_t r = 0; r < p.num_relations(); ++r) {
    auto const& rel = p.relation(r);
    if (dir != Direction::Backward) {
      auto const& pat = rel.left.letters();
      for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
        if (matches_at(w, pat, pos)) {
          out.push_back({pos, r, true,
                         splice(w, pos, pat.size(), rel.right.letters())});
        }
      }
    }
    if (dir != Direction::Forward) {
      auto const& pat = rel.right.letters();
      for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
        if (matches_at(w, pat, pos)) {
          out.push_back({pos, r, false,
                         splice(w, pos, pat.size(), rel.left.letters())});
        }
      }
    }
  }
  return out;
}

namespace {

// A rule is ShortLex-decreasing when its right side precedes its left side.
bool all_rules_shortlex_decreasing(Presentation const& p) {
  for (auto const& rel : p.relations()) {
    if (shortlex_compare(rel.right, rel.left) != Ordering::Less) {
      return false;
    }
  }
  return true;
}

// Weighted ShortLex: positive letter weights, compare total weight, then
// length, then lexicographic rank. Rules with equal letter multisets can
// only decrease via the final tiebreak; the others must lose weight
// strictly. The weights come from an exact phase-one simplex.
bool weighted_shortlex_decreasing(Presentation const& p) {
  std::size_t n = p.alphabet().size();
  auto counts = [&](Letters const& w) {
    std::vector<std::int64_t> c(n, 0);
    for (Letter l : w) {
      ++c[l];
    }
    return c;
  };

  std::vector<LinearConstraint> constraints;
  std::vector<std::size_t> weighted_rules;
  for (std::size_t r = 0; r < p.num_relations(); ++r) {
    auto const& rel = p.relation(r);
    auto cl = counts(rel.left.letters());
    auto cr = counts(rel.right.letters());
    if (cl == cr) {
      // Weight and length always tie; the lex tiebreak must already hold.
      bool lex_less = false;
      for (std::size_t i = 0; i < rel.left.size(); ++i) {
        if (rel.right[i] != rel.left[i]) {
          lex_less = rel.right[i] < rel.left[i];
          break;
        }
      }
      if (!lex_less) {
        return false;
      }
      continue;
    }
    weighted_rules.push_back(r);
    LinearConstraint c;
    c.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.coeffs[i] = Rational(cl[i] - cr[i]);
    }
    c.rel = LinearConstraint::Relation::Ge;
    c.rhs = Rational(1);
    constraints.push_back(std::move(c));
  }
  if (weighted_rules.empty()) {
    return true;
  }
  // Solve for w = 1 + x with x >= 0, i.e. shift the lower bound into rhs.
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    Rational shift(0);
    for (auto const& coef : constraints[k].coeffs) {
      shift += coef;
    }
    constraints[k].rhs = Rational(1) - shift;
  }
  auto sol = lp_feasible_point(n, constraints);
  if (!sol) {
    return false;
  }
  // Verify exactly against the original strict inequalities.
  for (std::size_t r : weighted_rules) {
    auto const& rel = p.relation(r);
    Rational lhs(0), rhs(0);
    for (Letter l : rel.left) {
      lhs += (*sol)[l] + Rational(1);
    }
    for (Letter l : rel.right) {
      rhs += (*sol)[l] + Rational(1);
    }
    if (!(rhs < lhs)) {
      return false;
    }
  }
  return true;
}

// Bounded forward search for a non-terminating derivation: a word deriving
// a word that contains it as a factor (equality included).
std::optional<std::vector<Letters>> find_nontermination(
    Presentation const& p, Budget const& budget) {
  std::size_t steps = 0;
  for (auto const& rel : p.relations()) {
    Letters const start = rel.left.letters();
    std::deque<std::vector<Letters>> queue;
    queue.push_back({start});
    std::unordered_set<Letters, LettersHash> seen{start};
    while (!queue.empty() && steps < budget.max_steps) {
      auto chain = std::move(queue.front());
      queue.pop_front();
      for (auto const& app :
           rewrite_step(chain.back(), p, Direction::Forward)) {
        ++steps;
        auto next = chain;
        next.push_back(app.result);
        if (contains_factor(app.result, start)) {
          return next;
        }
        if (seen.insert(app.result).second &&
            seen.size() < budget.max_words) {
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return std::nullopt;
}

// Forward-reachable words, capped.
std::optional<std::unordered_set<Letters, LettersHash>> forward_closure(
    Letters const& w, Presentation const& p, Budget const& budget,
    std::size_t& steps) {
  std::unordered_set<Letters, LettersHash> seen{w};
  std::deque<Letters> queue{w};
  while (!queue.empty()) {
    Letters cur = std::move(queue.front());
    queue.pop_front();
    for (auto const& app : rewrite_step(cur, p, Direction::Forward)) {
      if (++steps > budget.max_steps) {
        return std::nullopt;
      }
      if (seen.size() >= budget.max_words) {
        return std::nullopt;
      }
      if (seen.insert(app.result).second) {
        queue.push_back(app.result);
      }
    }
  }
  return seen;
}

// Knuth-Bendix critical pairs: overlaps and containments of left sides.
std::vector<std::pair<Letters, Letters>> critical_pairs(
    Presentation const& p) {
  std::vector<std::pair<Letters, Letters>> pairs;
  auto emit = [&](Letters const& word, std::size_t pos1, std::size_t r1,
                  std::size_t pos2, std::size_t r2) {
    Letters a = splice(word, pos1, p.relation(r1).left.size(),
                       p.relation(r1).right.letters());
    Letters b = splice(word, pos2, p.relation(r2).left.size(),
                       p.relation(r2).right.letters());
    if (!(a == b)) {
      pairs.emplace_back(std::move(a), std::move(b));
    }
  };
  for (std::size_t r1 = 0; r1 < p.num_relations(); ++r1) {
    for (std::size_t r2 = 0; r2 < p.num_relations(); ++r2) {
      auto const& l1 = p.relation(r1).left.letters();
      auto const& l2 = p.relation(r2).left.letters();
      // Proper overlap: a suffix of l1 is a prefix of l2.
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (std::equal(l1.end() - k, l1.end(), l2.begin())) {
          Letters word(l1.begin(), l1.end());
          word.insert(word.end(), l2.begin() + k, l2.end());
          emit(word, 0, r1, l1.size() - k, r2);
        }
      }
      // Containment: l2 inside l1 (distinct applications only).
      if (r1 != r2 || l1.size() != l2.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (r1 == r2 && pos == 0 && l1.size() == l2.size()) {
            continue;
          }
          if (std::equal(l2.begin(), l2.end(), l1.begin() + pos)) {
            emit(l1, 0, r1, pos, r2);
          }
        }
      }
    }
  }
  return pairs;
}

}  // namespace

CompletenessReport check_completeness(Presentation const& p,
                                      Budget const& budget) {
  CompletenessReport report;
  if (all_rules_shortlex_decreasing(p) || weighted_shortlex_decreasing(p)) {
    report.terminating = Certainty::Proven;
  } else if (auto witness = find_nontermination(p, budget)) {
    report.terminating = Certainty::Disproven;
    report.nontermination_witness = std::move(*witness);
  }

  report.locally_confluent = Certainty::Proven;
  std::size_t steps = 0;
  for (auto const& [a, b] : critical_pairs(p)) {
    auto ca = forward_closure(a, p, budget, steps);
    if (!ca) {
      report.locally_confluent = Certainty::Unknown;
      break;
    }
    // Joinable iff some reduct of b lands in a's closure.
    std::unordered_set<Letters, LettersHash> seen{b};
    std::deque<Letters> queue{b};
    bool joined = ca->count(b) > 0;
    bool decided = true;
    while (!queue.empty() && !joined) {
      Letters cur = std::move(queue.front());
      queue.pop_front();
      for (auto const& app : rewrite_step(cur, p, Direction::Forward)) {
        if (++steps > budget.max_steps || seen.size() >= budget.max_words) {
          decided = false;
          queue.clear();
          break;
        }
        if (ca->count(app.result)) {
          joined = true;
          break;
        }
        if (seen.insert(app.result).second) {
          queue.push_back(app.result);
        }
      }
    }
    if (joined) {
      continue;
    }
    if (!decided) {
      report.locally_confluent = Certainty::Unknown;
    } else {
      report.locally_confluent = Certainty::Disproven;
      report.confluence_witness = {a, b};
    }
    break;
  }
  return report;
}

NormalFormer::NormalFormer(PresentationPtr p, CompletenessReport report)
    : p_(std::move(p)) {
  if (!report.complete()) {
    throw std::invalid_argument(
        "NormalFormer: presentation not proven complete");
  }
}

NormalFormer::NormalFormer(PresentationPtr p, Budget const& budget)
    : NormalFormer(p, check_completeness(*p, budget)) {}

bool NormalFormer::is_reduced(Letters const& w) const {
  for (auto const& rel : p_->relations()) {
    auto const& pat = rel.left.letters();
    for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
      if (matches_at(w, pat, pos)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<RewriteApplication> NormalFormer::principal_step(
    Letters const& w) const {
  // Shortest non-reduced prefix: the first position where some left side
  // ends. Then the longest matching suffix, then the ShortLex-least right
  // side (declaration order on exact ties).
  for (std::size_t end = 1; end <= w.size(); ++end) {
    std::size_t best_len = 0;
    std::size_t best_rel = 0;
    bool found = false;
    for (std::size_t r = 0; r < p_->num_relations(); ++r) {
      auto const& pat = p_->relation(r).left.letters();
      if (pat.size() > end || !matches_at(w, pat, end - pat.size())) {
        continue;
      }
      if (!found || pat.size() > best_len ||
          (pat.size() == best_len &&
           shortlex_less(p_->relation(r).right.letters(),
                         p_->relation(best_rel).right.letters()))) {
        found = true;
        best_len = pat.size();
        best_rel = r;
      }
    }
    if (found) {
      std::size_t pos = end - best_len;
      return RewriteApplication{
          pos, best_rel, true,
          splice(w, pos, best_len, p_->relation(best_rel).right.letters())};
    }
  }
  return std::nullopt;
}

std::vector<Word> NormalFormer::trace(Word const& w) const {
  std::vector<Word> out{w};
  Letters cur = w.letters();
  while (auto step = principal_step(cur)) {
    cur = step->result;
    out.push_back(Word(cur));
  }
  return out;
}

Word NormalFormer::reduce(Word const& w) const {
  Letters cur = w.letters();
  while (auto step = principal_step(cur)) {
    cur = std::move(step->result);
  }
  return Word(std::move(cur));
}

WordClass enumerate_word_class(Letters const& w, Presentation const& p,
                               Budget const& budget) {
  WordClass out;
  out.words.push_back(w);
  std::unordered_set<Letters, LettersHash> seen{w};
  std::size_t head = 0;
  std::size_t steps = 0;
  out.closed = true;
  while (head < out.words.size()) {
    Letters cur = out.words[head++];
    for (auto const& app : rewrite_step(cur, p, Direction::Both)) {
      if (++steps > budget.max_steps) {
        out.closed = false;
        return out;
      }
      if (!seen.count(app.result)) {
        if (out.words.size() >= budget.max_words) {
          out.closed = false;
          return out;
        }
        seen.insert(app.result);
        out.words.push_back(app.result);
      }
    }
  }
  return out;
}

EqualityResult words_equal_mod(Word const& u, Word const& v,
                               Presentation const& p, Budget const& budget) {
  if (u == v) {
    return EqualityResult::Equal;
  }
  auto report = check_completeness(p, budget);
  if (report.complete()) {
    NormalFormer nf(make_presentation(p.alphabet(), p.relations()), report);
    return nf.reduce(u) == nf.reduce(v) ? EqualityResult::Equal
                                        : EqualityResult::Distinct;
  }
  // Bidirectional BFS: grow both classes in lockstep.
  std::unordered_set<Letters, LettersHash> cu{u.letters()}, cv{v.letters()};
  std::deque<Letters> qu{u.letters()}, qv{v.letters()};
  bool u_closed = false, v_closed = false;
  std::size_t steps = 0;
  while (!(u_closed && v_closed)) {
    for (auto* side : {&qu, &qv}) {
      auto& mine = (side == &qu) ? cu : cv;
      auto& other = (side == &qu) ? cv : cu;
      auto& closed = (side == &qu) ? u_closed : v_closed;
      if (side->empty()) {
        closed = true;
        continue;
      }
      Letters cur = std::move(side->front());
      side->pop_front();
      for (auto const& app : rewrite_step(cur, p, Direction::Both)) {
        if (++steps > budget.max_steps || mine.size() >= budget.max_words) {
          return EqualityResult::Unknown;
        }
        if (other.count(app.result)) {
          return EqualityResult::Equal;
        }
        if (mine.insert(app.result).second) {
          side->push_back(app.result);
        }
      }
    }
  }
  return EqualityResult::Distinct;
}

}  // namespace diagroup
