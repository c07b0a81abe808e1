#include "diagroup/median.hpp"

#include <unordered_map>

namespace diagroup {

std::vector<Diagram> median_neighbours(Diagram const& d) {
  auto const& p = *d.presentation();
  auto const& bottom = d.bottom().letters();
  std::vector<Diagram> out;
  for (std::size_t r = 0; r < p.num_relations(); ++r) {
    for (bool forward : {true, false}) {
      auto const& rel = p.relation(r);
      auto const& pat = forward ? rel.left.letters() : rel.right.letters();
      for (std::size_t pos = 0; pos + pat.size() <= bottom.size(); ++pos) {
        if (!std::equal(pat.begin(), pat.end(), bottom.begin() + pos)) {
          continue;
        }
        Diagram atom = Diagram::atomic(
            d.presentation(), Letters(bottom.begin(), bottom.begin() + pos),
            r, forward, Letters(bottom.begin() + pos + pat.size(),
                                bottom.end()));
        out.push_back(d.concat(atom));
      }
    }
  }
  return out;
}

MedianBall median_ball(Diagram const& center, std::size_t radius,
                       Budget const& budget) {
  MedianBall ball{center, radius, {center}, {}, true};
  std::unordered_map<Diagram, std::size_t, DiagramHash> index;
  index.emplace(center, 0);
  std::vector<std::size_t> depth{0};
  for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
    if (depth[head] >= radius) {
      continue;
    }
    for (auto const& next : median_neighbours(ball.vertices[head])) {
      auto it = index.find(next);
      if (it == index.end()) {
        if (ball.vertices.size() >= budget.max_frontier) {
          ball.complete = false;
          continue;
        }
        index.emplace(next, ball.vertices.size());
        ball.vertices.push_back(next);
        depth.push_back(depth[head] + 1);
        ball.edges.emplace_back(head, ball.vertices.size() - 1);
      } else if (it->second != head) {
        std::size_t a = std::min(head, it->second);
        std::size_t b = std::max(head, it->second);
        if (std::find(ball.edges.begin(), ball.edges.end(),
                      std::make_pair(a, b)) == ball.edges.end()) {
          ball.edges.emplace_back(a, b);
        }
      }
    }
  }
  return ball;
}

std::size_t median_distance(Diagram const& a, Diagram const& b) {
  if (!(a.top() == b.top())) {
    throw std::invalid_argument("median_distance: top labels differ");
  }
  return a.inverse().concat(b).num_cells();
}

Diagram median_point(Diagram const& a, Diagram const& b, Diagram const& c) {
  if (!(a.top() == b.top()) || !(a.top() == c.top())) {
    throw std::invalid_argument("median_point: top labels differ");
  }
  Diagram ab = a.inverse().concat(b);
  Diagram ac = a.inverse().concat(c);
  return a.concat(greatest_common_prefix(ab, ac));
}

}  // namespace diagroup
