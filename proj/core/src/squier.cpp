#include "diagroup/squier.hpp"

#include <algorithm>
#include <unordered_map>

#include "diagroup/simplex.hpp"

namespace diagroup {

SquierComponent enumerate_class_complex(Word const& w, PresentationPtr p,
                                        Budget const& budget) {
  SquierComponent out;
  out.presentation = p;
  WordClass cls = enumerate_word_class(w.letters(), *p, budget);
  out.words = std::move(cls.words);
  out.complete = cls.closed;

  std::unordered_map<Letters, std::size_t, LettersHash> index;
  for (std::size_t i = 0; i < out.words.size(); ++i) {
    index.emplace(out.words[i], i);
  }

  // Each edge is discovered exactly once, from its left-side endpoint.
  for (std::size_t i = 0; i < out.words.size(); ++i) {
    auto const& m = out.words[i];
    for (std::size_t r = 0; r < p->num_relations(); ++r) {
      auto const& l = p->relation(r).left.letters();
      auto const& rr = p->relation(r).right.letters();
      for (std::size_t pos = 0; pos + l.size() <= m.size(); ++pos) {
        if (!std::equal(l.begin(), l.end(), m.begin() + pos)) {
          continue;
        }
        Letters target(m.begin(), m.begin() + pos);
        target.insert(target.end(), rr.begin(), rr.end());
        target.insert(target.end(), m.begin() + pos + l.size(), m.end());
        auto it = index.find(target);
        if (it == index.end()) {
          continue;  // truncated enumeration
        }
        out.edges.push_back({Letters(m.begin(), m.begin() + pos), r,
                             Letters(m.begin() + pos + l.size(), m.end()), i,
                             it->second});
      }
    }
  }

  // Squares anchored at the corner carrying both left sides, at disjoint
  // positions pos1 < pos2.
  for (auto const& m : out.words) {
    for (std::size_t r1 = 0; r1 < p->num_relations(); ++r1) {
      auto const& l1 = p->relation(r1).left.letters();
      for (std::size_t pos1 = 0; pos1 + l1.size() <= m.size(); ++pos1) {
        if (!std::equal(l1.begin(), l1.end(), m.begin() + pos1)) {
          continue;
        }
        for (std::size_t r2 = 0; r2 < p->num_relations(); ++r2) {
          auto const& l2 = p->relation(r2).left.letters();
          for (std::size_t pos2 = pos1 + l1.size();
               pos2 + l2.size() <= m.size(); ++pos2) {
            if (!std::equal(l2.begin(), l2.end(), m.begin() + pos2)) {
              continue;
            }
            out.squares.push_back(
                {Letters(m.begin(), m.begin() + pos1), r1,
                 Letters(m.begin() + pos1 + l1.size(), m.begin() + pos2), r2,
                 Letters(m.begin() + pos2 + l2.size(), m.end())});
          }
        }
      }
    }
  }
  return out;
}

std::size_t first_homology_rank(SquierComponent const& component) {
  auto const& p = *component.presentation;
  struct KeyHash {
    std::size_t operator()(
        std::tuple<Letters, std::size_t, Letters> const& k) const {
      return LettersHash{}(std::get<0>(k)) * 31 + std::get<1>(k) * 1000003 +
             LettersHash{}(std::get<2>(k));
    }
  };
  std::unordered_map<std::tuple<Letters, std::size_t, Letters>, std::size_t,
                     KeyHash>
      edge_index;
  for (std::size_t i = 0; i < component.edges.size(); ++i) {
    auto const& e = component.edges[i];
    edge_index.emplace(
        std::make_tuple(e.left_context, e.relation, e.right_context), i);
  }

  std::vector<std::vector<Rational>> boundary;
  auto splice3 = [](Letters const& a, Letters const& mid, Letters const& c) {
    Letters out = a;
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
  };
  for (auto const& sq : component.squares) {
    auto const& rel1 = p.relation(sq.rel1);
    auto const& rel2 = p.relation(sq.rel2);
    // Corners: top = a l1 b l2 c. Edges of the 4-cycle:
    //   e1 = (a, r1, b l2 c)        e2 = (a, r1, b r2 c)
    //   e3 = (a l1 b, r2, c)        e4 = (a r1 b, r2, c)
    // boundary: e1 + e4 - e2 - e3.
    Letters bl2c = splice3(sq.b, rel2.left.letters(), sq.c);
    Letters br2c = splice3(sq.b, rel2.right.letters(), sq.c);
    Letters al1b = splice3(sq.a, rel1.left.letters(), sq.b);
    Letters ar1b = splice3(sq.a, rel1.right.letters(), sq.b);
    auto find = [&](Letters const& l, std::size_t r, Letters const& rr)
        -> std::optional<std::size_t> {
      auto it = edge_index.find(std::make_tuple(l, r, rr));
      if (it == edge_index.end()) {
        return std::nullopt;
      }
      return it->second;
    };
    auto e1 = find(sq.a, sq.rel1, bl2c);
    auto e2 = find(sq.a, sq.rel1, br2c);
    auto e3 = find(al1b, sq.rel2, sq.c);
    auto e4 = find(ar1b, sq.rel2, sq.c);
    if (!e1 || !e2 || !e3 || !e4) {
      continue;  // square at the truncation boundary
    }
    std::vector<Rational> row(component.edges.size(), Rational(0));
    row[*e1] += Rational(1);
    row[*e4] += Rational(1);
    row[*e2] -= Rational(1);
    row[*e3] -= Rational(1);
    boundary.push_back(std::move(row));
  }
  std::size_t cycle_rank =
      component.edges.size() - component.words.size() + 1;
  return cycle_rank - matrix_rank(std::move(boundary));
}

}  // namespace diagroup
