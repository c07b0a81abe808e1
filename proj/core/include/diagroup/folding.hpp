#ifndef DIAGROUP_FOLDING_HPP
#define DIAGROUP_FOLDING_HPP

#include <optional>
#include <random>

#include "diagroup/diagram.hpp"

namespace diagroup {

/// Directed 2-complex labelled over the one-vertex ambient complex of a
/// presentation: edges carry letters, faces carry an oriented relation
/// (relation index + whether the top path spells the left side). Faces come
/// in involution pairs with top and bottom exchanged.
struct Directed2Complex {
  struct Face {
    std::vector<std::size_t> top;  // edge ids
    std::vector<std::size_t> bot;
    std::size_t partner;     // the involution image
    std::size_t relation;
    bool top_is_left;        // orientation of the labelling

    friend bool operator==(Face const&, Face const&) = default;
  };

  PresentationPtr presentation;
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edge_ends;
  std::vector<Letter> edge_label;
  std::vector<Face> faces;
  std::vector<std::size_t> base_path;  // distinguished 1-path, edge ids

  Word base_word() const;
};

/// Structural invariants: the involution is a fixed-point-free pairing
/// exchanging tops and bottoms, all paths are connected edge runs, and each
/// face's paths spell the two sides of its relation.
void validate_complex(Directed2Complex const& x);

/// The ambient complex of a presentation: one vertex, one edge per letter,
/// one involution pair of faces per relation. Its base path spells `w`.
Directed2Complex build_ambient(PresentationPtr p, Word const& w);

/// Spheres of the given spherical diagrams glued along one segment
/// labelled by their common baseword.
Directed2Complex wedge_of_generators(std::vector<Diagram> const& generators,
                                     PresentationPtr p, Word const& base);

/// Identify faces sharing a top or bottom path with equal ambient image
/// until the labelling is locally injective. With `rng`, candidate folds
/// are picked in random order (the result must not depend on it).
Directed2Complex fold(Directed2Complex x, std::mt19937_64* rng = nullptr);

bool locally_injective(Directed2Complex const& x);

/// Membership in the closure: the canonical cell sequence of `d` lifts
/// through the folded complex starting and ending at the base path.
bool accepts(Directed2Complex const& folded, Diagram const& d);

/// Deterministic serialisation of a folded complex reachable from its base
/// path; equal strings for isomorphic complexes.
std::string canonical_serialisation(Directed2Complex const& x);

}  // namespace diagroup

#endif
