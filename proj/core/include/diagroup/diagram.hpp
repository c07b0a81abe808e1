#ifndef DIAGROUP_DIAGRAM_HPP
#define DIAGROUP_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "diagroup/presentation.hpp"

namespace diagroup {

/// One 2-cell application: at `offset` in the current word, rewrite by
/// `relation`, forward (left side replaced by right) or backward.
struct Cell {
  std::uint32_t offset;
  std::uint32_t relation;
  bool forward;

  friend bool operator==(Cell const&, Cell const&) = default;
};

/// A diagram over a semigroup presentation, held as its top word plus a
/// replay-valid cell sequence. Construction always reduces dipoles and
/// normalises the sequence to the canonical trace order, so equal diagrams
/// compare equal structurally. Instances are immutable.
class Diagram {
 public:
  /// Canonical form of an arbitrary replay-valid sequence. Throws
  /// std::invalid_argument (with the step index) on replay failure.
  static Diagram make(PresentationPtr p, Word top, std::vector<Cell> cells);

  /// The diagram with no cells.
  static Diagram identity(PresentationPtr p, Word w);

  /// One-cell diagram with contexts `a`, `b` (either may be empty).
  static Diagram atomic(PresentationPtr p, Letters const& a,
                        std::size_t relation, bool forward, Letters const& b);

  PresentationPtr const& presentation() const { return p_; }
  Word const& top() const { return top_; }
  Word const& bottom() const { return bottom_; }
  std::vector<Cell> const& cells() const { return cells_; }
  std::size_t num_cells() const { return cells_.size(); }
  bool is_identity() const { return cells_.empty(); }
  bool spherical() const { return top_ == bottom_; }

  /// Gluing `other` below this diagram; bottoms and tops must agree
  /// letter-for-letter.
  Diagram concat(Diagram const& other) const;
  /// Side-by-side sum, identifying this sink with the other's source.
  Diagram sum(Diagram const& other) const;
  /// Mirror image along the horizontal axis.
  Diagram inverse() const;
  /// n-th power of a spherical diagram (n may be negative; n = 0 gives the
  /// identity on top()).
  Diagram power(int n) const;

  /// The word before each cell is applied; entry 0 is top(), the last entry
  /// is bottom(). Size num_cells()+1.
  std::vector<Letters> replay_words() const;

  friend bool operator==(Diagram const& a, Diagram const& b);

  std::size_t hash() const;

 private:
  Diagram(PresentationPtr p, Word top, std::vector<Cell> cells, Word bottom);

  friend Diagram canonicalize_with_strategy(PresentationPtr p, Word top,
                                            std::vector<Cell> cells,
                                            std::mt19937_64& rng);

  PresentationPtr p_;
  Word top_;
  std::vector<Cell> cells_;
  Word bottom_;
};

struct DiagramHash {
  std::size_t operator()(Diagram const& d) const { return d.hash(); }
};

/// Canonicalisation with a randomised reduction strategy: random legal
/// transpositions and a random dipole-elimination order before the final
/// deterministic normalisation. Exists so tests can check that every
/// strategy reaches the same canonical form.
Diagram canonicalize_with_strategy(PresentationPtr p, Word top,
                                   std::vector<Cell> cells,
                                   std::mt19937_64& rng);

/// Maximal decomposition of a diagram as a sum of simple diagrams. A top
/// position is a cut iff no cell's support ever covers it strictly during
/// replay.
struct SumDecomposition {
  std::vector<std::size_t> top_cuts;     // interior cut positions in top()
  std::vector<std::size_t> bottom_cuts;  // the same cuts in bottom()
  std::vector<Diagram> components;
};

SumDecomposition sum_decompose(Diagram const& d);

/// Whether the diagram admits no sum decomposition.
bool is_simple(Diagram const& d);

/// Spherical diagram whose simple summands are all spherical.
bool is_normal(Diagram const& d);

/// An atomic step that can be commuted to the front of a diagram's cell
/// sequence: its offset once at the front, the rule, the direction, and the
/// index of the originating cell in the canonical sequence.
struct FrontMove {
  std::uint32_t offset;
  std::uint32_t relation;
  bool forward;
  std::size_t cell_index;

  friend bool operator==(FrontMove const& x, FrontMove const& y) {
    return x.offset == y.offset && x.relation == y.relation &&
           x.forward == y.forward;
  }
};

std::vector<FrontMove> front_moves(Diagram const& d);

/// `phi` is a prefix of `psi` when psi = phi o rest; equivalently
/// #(phi^-1 psi) = #psi - #phi. Tops must agree.
bool is_prefix(Diagram const& phi, Diagram const& psi);

/// The unique biggest common prefix, computed by greedy intersection of
/// front moves.
Diagram greatest_common_prefix(Diagram const& phi, Diagram const& psi);

/// On-the-nose factorisation d = first o second given by a downward-closed
/// set of cells.
struct Factorisation {
  Diagram first;
  Diagram second;
};

/// All factorisations of `d` along order ideals of its cell dependency
/// poset, including the trivial ones. Capped at `max_count` (throws
/// BudgetExceeded beyond it).
std::vector<Factorisation> ideal_factorisations(Diagram const& d,
                                                std::size_t max_count);

/// Edges of the covering relation of the cell dependency poset, as pairs of
/// canonical-sequence indices (earlier, later).
std::vector<std::pair<std::size_t, std::size_t>> dependency_edges(
    Diagram const& d);

}  // namespace diagroup

#endif
