#ifndef DIAGROUP_SEMIGROUP_HPP
#define DIAGROUP_SEMIGROUP_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>

#include "diagroup/rational.hpp"
#include "diagroup/rewrite.hpp"

namespace diagroup {

/// An element of the semigroup given by a presentation, or the adjoined
/// identity (empty rep). Stored as the class representative: the normal
/// form when the presentation is complete, else the ShortLex-least word of
/// the enumerated class. When the enumeration was truncated at the budget
/// the representative is still deterministic for that budget, but not
/// canonical across budgets; `canonical` records which case holds.
struct SemigroupElement {
  Letters rep;  // empty = adjoined identity
  bool canonical = true;

  bool is_identity() const { return rep.empty(); }
  friend bool operator==(SemigroupElement const& a, SemigroupElement const& b) {
    return a.rep == b.rep;
  }
  friend bool operator<(SemigroupElement const& a, SemigroupElement const& b) {
    return a.rep < b.rep;
  }
};

/// Budgeted oracle for semigroup-element queries over one presentation.
/// Classes do not depend on rule orientation, so when either the
/// presentation itself or its ShortLex reorientation is complete, queries
/// go through normal forms; otherwise bounded searches are used, with
/// Unknown rather than guesses past the budget. Enumerations are cached
/// and all answers are deterministic for a fixed budget.
class ClassResolver {
 public:
  ClassResolver(PresentationPtr p, Budget budget = {});

  Presentation const& presentation() const { return *p_; }
  PresentationPtr presentation_ptr() const { return p_; }
  Budget const& budget() const { return budget_; }
  bool has_normal_forms() const { return normal_former_.has_value(); }

  /// Representative of [w]; empty input is the adjoined identity.
  SemigroupElement element(Letters const& w);

  EqualityResult equal(Letters const& u, Letters const& v);

  /// The enumerated class of `w` (never the identity), cached.
  WordClass const& word_class(Letters const& w);

  /// Whether [w] = {w}, i.e. no relation side occurs in w. Exact.
  bool class_is_trivial(Letters const& w) const;

  // --- sound refutation helpers (used by the conspiciality check) ---

  /// A nonnegative letter-count invariant of the presentation that is
  /// strictly positive at c, if one exists. Any word p admitting a with
  /// a = ap mod P has phi(p) = 0 for every such phi, hence cannot contain c.
  std::optional<std::vector<Rational>> const& positive_invariant(Letter c);

  /// Letters with a positive invariant (see above).
  std::set<Letter> positively_weighted_letters();

  /// Over-approximation of the first letters of words in [w].
  std::set<Letter> first_letter_closure(Letters const& w) const;
  /// Over-approximation of the last letters of words in [w].
  std::set<Letter> last_letter_closure(Letters const& w) const;

 private:
  PresentationPtr p_;
  Budget budget_;
  std::optional<NormalFormer> normal_former_;
  std::unordered_map<Letters, std::shared_ptr<WordClass>, LettersHash>
      class_cache_;
  std::map<Letter, std::optional<std::vector<Rational>>> invariant_cache_;
};

}  // namespace diagroup

#endif
