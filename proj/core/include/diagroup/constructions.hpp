#ifndef DIAGROUP_CONSTRUCTIONS_HPP
#define DIAGROUP_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "diagroup/presentation.hpp"

namespace diagroup {

/// A presentation together with a baseword: the data defining one diagram
/// group.
struct BasedPresentation {
  PresentationPtr presentation;
  Word baseword;
  /// Letters at the truncation edge of a family that is infinite on paper
  /// (see thompson_commutator); computations touching them may be affected
  /// by the truncation.
  Letters truncation_boundary = {};
};

// Combinators. Alphabets are disjointified automatically by appending
// primes to colliding symbols, deterministically in declaration order.

BasedPresentation free_product(std::vector<BasedPresentation> const& parts);
BasedPresentation direct_sum(std::vector<BasedPresentation> const& parts);

/// Truncated countable direct sum: fresh letter x and relations
/// w1..wn x = w1..w(n+1) x for 0 <= n < N. A single part is reused for
/// every index with one shared alphabet copy; otherwise at least N disjoint
/// parts are required.
BasedPresentation countable_sum(std::vector<BasedPresentation> const& parts,
                                std::size_t N);

/// Wreath product with Z. The separator letter s is dropped exactly when no
/// relation side overlaps the junction of two adjacent copies of the
/// baseword.
BasedPresentation wreath_with_z(BasedPresentation const& part);

BasedPresentation bullet_product(BasedPresentation const& a,
                                 BasedPresentation const& b);
BasedPresentation square_product(BasedPresentation const& a,
                                 BasedPresentation const& b);

/// Right-angled Artin group of the interval graph given by closed integer
/// intervals within 1..n (vertices = intervals, edges = disjointness).
BasedPresentation interval_raag(
    std::vector<std::pair<std::size_t, std::size_t>> const& intervals,
    std::size_t n);

// Built-in presentations.
BasedPresentation builtin_z();
BasedPresentation builtin_trivial();
BasedPresentation builtin_thompson();
BasedPresentation builtin_thompson_n(std::size_t k);
BasedPresentation builtin_thompson_commutator(std::size_t truncation);
BasedPresentation builtin_planar_braid(std::size_t n);
BasedPresentation builtin_colored_braid(std::vector<std::size_t> const& r);

/// Rename all letters to g0, g1, ... in declaration order; used for
/// comparing presentations up to letter names.
BasedPresentation canonical_renaming(BasedPresentation const& bp);

/// Serialise as the presentation file format plus a trailing
/// "# base <word>" comment.
std::string to_file_format(BasedPresentation const& bp);

/// Parse construction expressions for the CLI, e.g. "thompson",
/// "planar_braid(3)", "bullet(z, z)", "wreath(z)", "csum(3, z)",
/// "raag(4, 1-2, 3-4)", "colored_braid(2, 1)".
BasedPresentation parse_construction(std::string const& text);

}  // namespace diagroup

#endif
