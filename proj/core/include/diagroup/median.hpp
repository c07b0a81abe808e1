#ifndef DIAGROUP_MEDIAN_HPP
#define DIAGROUP_MEDIAN_HPP

#include "diagroup/diagram.hpp"
#include "diagroup/rewrite.hpp"

namespace diagroup {

/// Ball in the median graph of reduced diagrams with a fixed top label,
/// adjacency given by right-multiplication with one atomic diagram.
struct MedianBall {
  Diagram center;
  std::size_t radius;
  std::vector<Diagram> vertices;  // BFS order; vertices[0] is the center
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool complete = true;  // false when the budget truncated the ball
};

MedianBall median_ball(Diagram const& center, std::size_t radius,
                       Budget const& budget = {});

/// Graph distance: the number of cells of the reduction of a^-1 b.
std::size_t median_distance(Diagram const& a, Diagram const& b);

/// The median vertex of three diagrams with a common top label:
/// a o gcp(a^-1 b, a^-1 c).
Diagram median_point(Diagram const& a, Diagram const& b, Diagram const& c);

/// All neighbours of a diagram in the median graph.
std::vector<Diagram> median_neighbours(Diagram const& d);

}  // namespace diagroup

#endif
