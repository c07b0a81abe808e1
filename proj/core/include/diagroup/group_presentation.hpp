#ifndef DIAGROUP_GROUP_PRESENTATION_HPP
#define DIAGROUP_GROUP_PRESENTATION_HPP

#include <optional>

#include "diagroup/diagram.hpp"
#include "diagroup/rewrite.hpp"

namespace diagroup {

/// Oriented Squier edge (u, l -> r, v): the word u.l.v rewritten to u.r.v.
/// Either context may be empty.
struct EdgeTriple {
  Letters left_context;
  std::size_t relation;
  Letters right_context;

  friend bool operator==(EdgeTriple const&, EdgeTriple const&) = default;
};

/// All three conditions of the principal-left-edge definition: every proper
/// prefix of u.l reduced, l the longest applicable suffix of u.l, r the
/// ShortLex-least right side for l.
bool is_principal_left_edge(EdgeTriple const& edge, NormalFormer const& nf);

/// Relator g[lhs] = g[rhs] ^ g[*conjugator] (plain g[lhs] = g[rhs] when the
/// conjugating edge is principal).
struct GroupRelator {
  std::size_t lhs;
  std::size_t rhs;
  std::optional<std::size_t> conjugator;

  friend bool operator==(GroupRelator const&, GroupRelator const&) = default;
};

struct GroupPresentation {
  PresentationPtr presentation;
  Word baseword;
  std::vector<EdgeTriple> generators;
  std::vector<GroupRelator> relators;
  bool truncated = false;
};

/// Presentation of the diagram group at `w` over a complete semigroup
/// presentation: generators are the non-principal edges with reduced left
/// context, streamed in ShortLex order of the carrying word; relators
/// relate generators whose right parts differ by one rewrite. With
/// `simplify`, relators with a principal conjugating edge are applied as
/// generator eliminations.
GroupPresentation generate_presentation(PresentationPtr p, Word const& w,
                                        Budget const& budget = {},
                                        bool simplify = false);

/// Rank of the abelianisation (generators minus the rank of the
/// abelianised relator matrix).
std::size_t abelianisation_rank(GroupPresentation const& gp);

/// Embedding of a diagram group over `p` into one over the completed
/// ShortLex system: the completed presentation carries every orientation
/// u -> v (v ShortLex-smaller, u = v mod p) between words up to
/// `max_word_len`; diagrams map in by relation translation and back by
/// replacing completed-only cells with stored witness diagrams.
class CompleteEmbedding {
 public:
  CompleteEmbedding(PresentationPtr p, std::size_t max_word_len,
                    Budget const& budget = {});

  PresentationPtr const& original() const { return original_; }
  PresentationPtr const& completed() const { return completed_; }
  /// True when some class enumeration was truncated, so the harvested rule
  /// set may be incomplete.
  bool partial() const { return partial_; }

  Diagram include(Diagram const& over_original) const;
  Diagram retract(Diagram const& over_completed) const;

 private:
  PresentationPtr original_;
  PresentationPtr completed_;
  bool partial_ = false;
  // For each completed relation: the matching original relation and
  // whether the orientation flipped, or a witness diagram over the
  // original presentation.
  struct RelationImage {
    std::optional<std::pair<std::size_t, bool>> direct;
    std::optional<Diagram> witness;
  };
  std::vector<RelationImage> images_;
  // Original relation -> (completed relation, flipped).
  std::vector<std::pair<std::size_t, bool>> forward_;
};

}  // namespace diagroup

#endif
