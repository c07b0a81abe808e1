#include "diagroup/semigroup.hpp"

#include <algorithm>
#include <deque>

#include "diagroup/simplex.hpp"

namespace diagroup {

namespace {

// Reorient every rule so the right side is ShortLex-smaller. Classes are
// unchanged; if the result is complete its normal forms are canonical class
// representatives for the original presentation too.
PresentationPtr shortlex_reorientation(Presentation const& p) {
  std::vector<Relation> rels;
  for (auto const& rel : p.relations()) {
    if (shortlex_less(rel.right.letters(), rel.left.letters())) {
      rels.push_back(rel);
    } else {
      rels.push_back({rel.right, rel.left});
    }
  }
  return make_presentation(p.alphabet(), std::move(rels));
}

}  // namespace

ClassResolver::ClassResolver(PresentationPtr p, Budget budget)
    : p_(std::move(p)), budget_(budget) {
  auto report = check_completeness(*p_, budget_);
  if (report.complete()) {
    normal_former_.emplace(p_, std::move(report));
    return;
  }
  auto flipped = shortlex_reorientation(*p_);
  auto flipped_report = check_completeness(*flipped, budget_);
  if (flipped_report.complete()) {
    normal_former_.emplace(flipped, std::move(flipped_report));
  }
}

WordClass const& ClassResolver::word_class(Letters const& w) {
  auto it = class_cache_.find(w);
  if (it != class_cache_.end()) {
    return *it->second;
  }
  auto cls = std::make_shared<WordClass>(enumerate_word_class(w, *p_, budget_));
  if (cls->closed) {
    for (auto const& member : cls->words) {
      class_cache_.emplace(member, cls);
    }
  } else {
    class_cache_.emplace(w, cls);
  }
  return *class_cache_.at(w);
}

SemigroupElement ClassResolver::element(Letters const& w) {
  if (w.empty()) {
    return SemigroupElement{};
  }
  if (normal_former_) {
    return SemigroupElement{normal_former_->reduce(Word(w)).letters(), true};
  }
  auto const& cls = word_class(w);
  Letters best = cls.words.front();
  for (auto const& m : cls.words) {
    if (shortlex_less(m, best)) {
      best = m;
    }
  }
  return SemigroupElement{std::move(best), cls.closed};
}

EqualityResult ClassResolver::equal(Letters const& u, Letters const& v) {
  if (u == v) {
    return EqualityResult::Equal;
  }
  if (u.empty() || v.empty()) {
    return EqualityResult::Distinct;  // adjoined identity is its own class
  }
  if (normal_former_) {
    return normal_former_->reduce(Word(u)) == normal_former_->reduce(Word(v))
               ? EqualityResult::Equal
               : EqualityResult::Distinct;
  }
  // Lockstep bidirectional search with early exit.
  std::unordered_set<Letters, LettersHash> cu{u}, cv{v};
  std::deque<Letters> qu{u}, qv{v};
  std::size_t steps = 0;
  while (!qu.empty() || !qv.empty()) {
    for (auto* q : {&qu, &qv}) {
      if (q->empty()) {
        continue;
      }
      auto& mine = (q == &qu) ? cu : cv;
      auto& other = (q == &qu) ? cv : cu;
      Letters cur = std::move(q->front());
      q->pop_front();
      for (auto const& app : rewrite_step(cur, *p_, Direction::Both)) {
        if (++steps > budget_.max_steps || mine.size() >= budget_.max_words) {
          return EqualityResult::Unknown;
        }
        if (other.count(app.result)) {
          return EqualityResult::Equal;
        }
        if (mine.insert(app.result).second) {
          q->push_back(app.result);
        }
      }
    }
  }
  return EqualityResult::Distinct;
}

bool ClassResolver::class_is_trivial(Letters const& w) const {
  for (auto const& rel : p_->relations()) {
    for (auto const* side : {&rel.left, &rel.right}) {
      auto const& pat = side->letters();
      if (pat.size() > w.size()) {
        continue;
      }
      for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
        if (std::equal(pat.begin(), pat.end(), w.begin() + pos)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<std::vector<Rational>> const& ClassResolver::positive_invariant(
    Letter c) {
  auto it = invariant_cache_.find(c);
  if (it != invariant_cache_.end()) {
    return it->second;
  }
  std::size_t n = p_->alphabet().size();
  std::vector<LinearConstraint> constraints;
  for (auto const& rel : p_->relations()) {
    LinearConstraint eq;
    eq.coeffs.assign(n, Rational(0));
    for (Letter l : rel.left) {
      eq.coeffs[l] += Rational(1);
    }
    for (Letter l : rel.right) {
      eq.coeffs[l] -= Rational(1);
    }
    eq.rel = LinearConstraint::Relation::Eq;
    eq.rhs = Rational(0);
    constraints.push_back(std::move(eq));
  }
  LinearConstraint pos;
  pos.coeffs.assign(n, Rational(0));
  pos.coeffs[c] = Rational(1);
  pos.rel = LinearConstraint::Relation::Ge;
  pos.rhs = Rational(1);
  constraints.push_back(std::move(pos));
  auto point = lp_feasible_point(n, constraints);
  return invariant_cache_.emplace(c, std::move(point)).first->second;
}

std::set<Letter> ClassResolver::positively_weighted_letters() {
  std::set<Letter> out;
  for (Letter c = 0; c < p_->alphabet().size(); ++c) {
    if (positive_invariant(c)) {
      out.insert(c);
    }
  }
  return out;
}

namespace {

std::set<Letter> letter_closure(Letters const& w, Presentation const& p,
                                bool first) {
  std::set<Letter> out{first ? w.front() : w.back()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto const& rel : p.relations()) {
      auto const& l = rel.left.letters();
      auto const& r = rel.right.letters();
      Letter from_l = first ? l.front() : l.back();
      Letter from_r = first ? r.front() : r.back();
      if (out.count(from_l) && !out.count(from_r)) {
        out.insert(from_r);
        grew = true;
      }
      if (out.count(from_r) && !out.count(from_l)) {
        out.insert(from_l);
        grew = true;
      }
    }
  }
  return out;
}

}  // namespace

std::set<Letter> ClassResolver::first_letter_closure(Letters const& w) const {
  return letter_closure(w, *p_, true);
}

std::set<Letter> ClassResolver::last_letter_closure(Letters const& w) const {
  return letter_closure(w, *p_, false);
}

}  // namespace diagroup
