#ifndef DIAGROUP_HYPERPLANE_HPP
#define DIAGROUP_HYPERPLANE_HPP

#include <optional>
#include <tuple>

#include "diagroup/diagram.hpp"
#include "diagroup/semigroup.hpp"

namespace diagroup {

/// Oriented hyperplane [a, u -> v, b] of the Squier cube complex: the left
/// and right coordinates are semigroup elements (possibly the adjoined
/// identity), u -> v is the relation as declared.
struct HyperplaneLabel {
  SemigroupElement left;
  std::size_t relation;
  SemigroupElement right;

  friend bool operator==(HyperplaneLabel const& a, HyperplaneLabel const& b) {
    return a.left == b.left && a.relation == b.relation && a.right == b.right;
  }
  friend bool operator<(HyperplaneLabel const& a, HyperplaneLabel const& b) {
    return std::tie(a.relation, a.left.rep, a.right.rep) <
           std::tie(b.relation, b.left.rep, b.right.rep);
  }
};

struct SignedHyperplane {
  HyperplaneLabel label;
  bool positive;
};

/// The word in oriented hyperplanes traced by the canonical cell sequence:
/// the image of the diagram under the morphism into the right-angled Artin
/// group of the crossing graph.
std::vector<SignedHyperplane> hyperplane_word(Diagram const& d,
                                              ClassResolver& resolver);

/// All hyperplane labels of the component of `w`, deduplicated; sorted.
/// The enumeration is truncated along with the class when the budget runs
/// out (the `complete` flag of the underlying class applies).
std::vector<HyperplaneLabel> component_hyperplanes(Word const& w,
                                                   ClassResolver& resolver);

enum class Transversality { Yes, No, Unknown };

struct TransversalityResult {
  Transversality value = Transversality::Unknown;
  std::optional<Word> witness;  // the word y of the crossing criterion
};

/// Criterion: [a,u->v,b] and [c,p->q,d] cross iff for some y either
/// c = auy and b = ypd, or d = yub and a = cpy, all modulo P. A hyperplane
/// never crosses itself.
TransversalityResult hyperplanes_transverse(HyperplaneLabel const& h1,
                                            HyperplaneLabel const& h2,
                                            ClassResolver& resolver,
                                            std::size_t max_witness_len = 3);

enum class Conspiciality { Conspicial, NotConspicial, Unknown };

struct ConspicialityReport {
  Conspiciality value = Conspiciality::Unknown;
  /// Why the definite answer holds: "finite class", "witness", or
  /// "invariant exclusion".
  std::string reason;
  /// Condition-1 witness (a, b, p): w = ab, a = ap, b = pb modulo P with
  /// [p] nontrivial.
  std::optional<std::tuple<Word, Word, Word>> absorbing_witness;
  /// Condition-2 witness (a, u, v, w', b, xi).
  std::optional<std::vector<Word>> osculation_witness;
};

/// Conspiciality of the Squier cube complex at `w`: finite classes are
/// conspicial outright; otherwise witnesses for the two failure conditions
/// are searched up to `max_piece_len`, and their nonexistence is proven
/// where letter-count invariants and first/last-letter closures allow.
ConspicialityReport check_conspicial(Word const& w, ClassResolver& resolver,
                                     std::size_t max_piece_len = 3);

}  // namespace diagroup

#endif
