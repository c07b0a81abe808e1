#ifndef DIAGROUP_REWRITE_HPP
#define DIAGROUP_REWRITE_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "diagroup/presentation.hpp"

namespace diagroup {

/// Search budgets. Every bounded search in the library takes one of these
/// and reports Unknown (or a truncation flag) instead of running on.
struct Budget {
  std::size_t max_words = 10'000;     // words enumerated per class
  std::size_t max_steps = 100'000;    // rewrite applications
  std::size_t max_frontier = 10'000;  // closure frontier entries
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(std::string const& what) : std::runtime_error(what) {}
};

enum class Direction { Forward, Backward, Both };

/// One applicable rewrite: the rule `relation` matched at `position`,
/// applied forward (left->right) or backward, giving `result`.
struct RewriteApplication {
  std::size_t position;
  std::size_t relation;
  bool forward;
  Letters result;
};

/// All single-step successors of `w`.
std::vector<RewriteApplication> rewrite_step(Letters const& w,
                                             Presentation const& p,
                                             Direction dir = Direction::Both);
inline std::vector<RewriteApplication> rewrite_step(
    Word const& w, Presentation const& p, Direction dir = Direction::Both) {
  return rewrite_step(w.letters(), p, dir);
}

enum class Certainty { Proven, Disproven, Unknown };

struct CompletenessReport {
  Certainty terminating = Certainty::Unknown;
  Certainty locally_confluent = Certainty::Unknown;
  /// Forward derivation exhibiting non-termination: the final word repeats
  /// or properly contains an earlier one.
  std::vector<Letters> nontermination_witness;
  /// Critical pair that could not be joined.
  std::optional<std::pair<Letters, Letters>> confluence_witness;

  bool complete() const {
    return terminating == Certainty::Proven &&
           locally_confluent == Certainty::Proven;
  }
};

/// Termination by reduction order (ShortLex, falling back to a weighted
/// ShortLex with weights found by linear programming), non-termination by a
/// bounded search for looping or self-embedding derivations, local
/// confluence by Knuth-Bendix critical pairs joined within the budget.
CompletenessReport check_completeness(Presentation const& p,
                                      Budget const& budget = {});

/// Canonical principal-left reduction: at each step the shortest
/// non-reduced prefix, the longest applicable suffix of it, and the
/// ShortLex-least right side (declaration order breaking exact ties).
/// Termination must be proven for the strategy to halt; when the
/// presentation is also locally confluent (`unique()`), the result is the
/// unique reduced form of the class.
class NormalFormer {
 public:
  /// Throws std::invalid_argument unless termination is Proven.
  NormalFormer(PresentationPtr p, CompletenessReport report);
  /// Convenience: runs check_completeness itself.
  explicit NormalFormer(PresentationPtr p, Budget const& budget = {});

  Presentation const& presentation() const { return *p_; }
  /// Whether reduced forms are unique (the presentation is complete).
  bool unique() const { return unique_; }

  Word reduce(Word const& w) const;
  /// The full derivation, starting with `w` itself.
  std::vector<Word> trace(Word const& w) const;
  bool is_reduced(Letters const& w) const;

  /// The principal-left-edge step from `w`, if `w` is reducible.
  std::optional<RewriteApplication> principal_step(Letters const& w) const;

 private:
  PresentationPtr p_;
  bool unique_;
};

enum class EqualityResult { Equal, Distinct, Unknown };

/// The set of words equal to `w` modulo `p`, grown by breadth-first search
/// in both rewrite directions. `closed` is true when the class was fully
/// enumerated within the budget.
struct WordClass {
  std::vector<Letters> words;  // discovery (BFS) order, deterministic
  bool closed = false;
};

WordClass enumerate_word_class(Letters const& w, Presentation const& p,
                               Budget const& budget = {});

/// Equal iff a common word is reachable; Distinct only via normal forms of a
/// complete presentation or two fully enumerated disjoint classes.
EqualityResult words_equal_mod(Word const& u, Word const& v,
                               Presentation const& p,
                               Budget const& budget = {});

}  // namespace diagroup

#endif
