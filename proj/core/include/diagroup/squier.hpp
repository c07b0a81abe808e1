#ifndef DIAGROUP_SQUIER_HPP
#define DIAGROUP_SQUIER_HPP

#include <vector>

#include "diagroup/rewrite.hpp"

namespace diagroup {

/// Oriented edge (a, relation, b) of the Squier complex, connecting
/// a.left.b to a.right.b.
struct SquierEdge {
  Letters left_context;
  std::size_t relation;
  Letters right_context;
  std::size_t from;  // index of a.left.b in words
  std::size_t to;    // index of a.right.b in words
};

/// Square (a, r1, b, r2, c): two relation applications at disjoint
/// positions, anchored at the word carrying both left sides.
struct SquierSquare {
  Letters a;
  std::size_t rel1;
  Letters b;
  std::size_t rel2;
  Letters c;
};

/// The connected component [w] of the Squier complex, enumerated breadth
/// first. `complete` is false when the budget truncated the enumeration.
struct SquierComponent {
  PresentationPtr presentation;
  std::vector<Letters> words;
  std::vector<SquierEdge> edges;
  std::vector<SquierSquare> squares;
  bool complete = false;
};

SquierComponent enumerate_class_complex(Word const& w, PresentationPtr p,
                                        Budget const& budget = {});

/// rank H1 = (E - V + 1) - rank(square boundary matrix); meaningful for a
/// completely enumerated component.
std::size_t first_homology_rank(SquierComponent const& component);

}  // namespace diagroup

#endif
