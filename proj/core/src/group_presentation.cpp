#include "diagroup/group_presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "diagroup/group_algorithms.hpp"
#include "diagroup/simplex.hpp"

namespace diagroup {

bool is_principal_left_edge(EdgeTriple const& edge, NormalFormer const& nf) {
  auto const& p = nf.presentation();
  auto const& l = p.relation(edge.relation).left.letters();
  Letters ul = edge.left_context;
  ul.insert(ul.end(), l.begin(), l.end());

  for (std::size_t len = 1; len < ul.size(); ++len) {
    if (!nf.is_reduced(Letters(ul.begin(), ul.begin() + len))) {
      return false;
    }
  }
  std::size_t longest = 0;
  for (auto const& rel : p.relations()) {
    auto const& cand = rel.left.letters();
    if (cand.size() <= ul.size() &&
        std::equal(cand.begin(), cand.end(), ul.end() - cand.size())) {
      longest = std::max(longest, cand.size());
    }
  }
  if (longest != l.size()) {
    return false;
  }
  // ShortLex-least right side among relations with this left side,
  // declaration order breaking exact ties.
  for (std::size_t r = 0; r < p.num_relations(); ++r) {
    auto const& rel = p.relation(r);
    if (!(rel.left.letters() == l)) {
      continue;
    }
    auto cmp = shortlex_compare(rel.right.letters(),
                                p.relation(edge.relation).right.letters());
    if (cmp == Ordering::Less ||
        (cmp == Ordering::Equal && r < edge.relation)) {
      return false;
    }
    if (r == edge.relation) {
      break;
    }
  }
  return true;
}

GroupPresentation generate_presentation(PresentationPtr p, Word const& w,
                                        Budget const& budget, bool simplify) {
  NormalFormer nf(p, budget);  // throws unless complete
  GroupPresentation out{p, w, {}, {}, false};

  WordClass cls = enumerate_word_class(w.letters(), *p, budget);
  out.truncated = !cls.closed;
  std::unordered_set<Letters, LettersHash> in_class(cls.words.begin(),
                                                    cls.words.end());

  // All oriented edges, each discovered once from its left endpoint.
  struct EdgeKey {
    Letters word;  // u.l.v, for the streaming order
    EdgeTriple edge;
  };
  std::vector<EdgeKey> generators;
  for (auto const& m : cls.words) {
    for (std::size_t r = 0; r < p->num_relations(); ++r) {
      auto const& l = p->relation(r).left.letters();
      for (std::size_t pos = 0; pos + l.size() <= m.size(); ++pos) {
        if (!std::equal(l.begin(), l.end(), m.begin() + pos)) {
          continue;
        }
        EdgeTriple edge{Letters(m.begin(), m.begin() + pos), r,
                        Letters(m.begin() + pos + l.size(), m.end())};
        if (!nf.is_reduced(edge.left_context)) {
          continue;
        }
        if (is_principal_left_edge(edge, nf)) {
          continue;
        }
        generators.push_back({m, std::move(edge)});
      }
    }
  }
  std::sort(generators.begin(), generators.end(),
            [](EdgeKey const& a, EdgeKey const& b) {
              auto cmp = shortlex_compare(a.word, b.word);
              if (cmp != Ordering::Equal) {
                return cmp == Ordering::Less;
              }
              if (a.edge.left_context.size() != b.edge.left_context.size()) {
                return a.edge.left_context.size() <
                       b.edge.left_context.size();
              }
              return a.edge.relation < b.edge.relation;
            });

  std::map<std::tuple<Letters, std::size_t, Letters>, std::size_t> index;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto const& e = generators[i].edge;
    out.generators.push_back(e);
    index.emplace(std::make_tuple(e.left_context, e.relation,
                                  e.right_context), i);
  }

  auto find_gen = [&](EdgeTriple const& e) -> std::optional<std::size_t> {
    auto it = index.find(
        std::make_tuple(e.left_context, e.relation, e.right_context));
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  };

  // Relators: a rewrite s -> t inside the right part of a generator links
  // it to the generator with t substituted, conjugated by the edge
  // (reduce(u r v), s -> t, tail) unless that edge is principal.
  for (std::size_t g1 = 0; g1 < out.generators.size(); ++g1) {
    auto const& e = out.generators[g1];
    auto const& rel = p->relation(e.relation);
    Letters const& big = e.right_context;
    for (std::size_t r2 = 0; r2 < p->num_relations(); ++r2) {
      auto const& s = p->relation(r2).left.letters();
      auto const& t = p->relation(r2).right.letters();
      for (std::size_t pos = 0; pos + s.size() <= big.size(); ++pos) {
        if (!std::equal(s.begin(), s.end(), big.begin() + pos)) {
          continue;
        }
        Letters v(big.begin(), big.begin() + pos);
        Letters tail(big.begin() + pos + s.size(), big.end());
        Letters other = v;
        other.insert(other.end(), t.begin(), t.end());
        other.insert(other.end(), tail.begin(), tail.end());
        EdgeTriple g2{e.left_context, e.relation, other};
        auto g2_at = find_gen(g2);
        if (!g2_at) {
          out.truncated = true;
          continue;
        }
        Letters urv = e.left_context;
        urv.insert(urv.end(), rel.right.letters().begin(),
                   rel.right.letters().end());
        urv.insert(urv.end(), v.begin(), v.end());
        EdgeTriple conj{nf.reduce(Word(urv)).letters(), r2, tail};
        if (is_principal_left_edge(conj, nf)) {
          out.relators.push_back({g1, *g2_at, std::nullopt});
        } else {
          auto conj_at = find_gen(conj);
          if (!conj_at) {
            out.truncated = true;
            continue;
          }
          out.relators.push_back({g1, *g2_at, *conj_at});
        }
      }
    }
  }

  if (simplify) {
    // Apply g1 = g2 eliminations: union generators related by plain
    // relators, keep the least index of each class, rewrite the rest.
    std::vector<std::size_t> parent(out.generators.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
      parent[i] = i;
    }
    std::function<std::size_t(std::size_t)> find =
        [&](std::size_t x) -> std::size_t {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (auto const& rel : out.relators) {
      if (!rel.conjugator) {
        parent[std::max(find(rel.lhs), find(rel.rhs))] =
            std::min(find(rel.lhs), find(rel.rhs));
      }
    }
    std::map<std::size_t, std::size_t> compact;
    std::vector<EdgeTriple> gens;
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
      if (find(i) == i) {
        compact.emplace(i, gens.size());
        gens.push_back(out.generators[i]);
      }
    }
    std::vector<GroupRelator> relators;
    for (auto const& rel : out.relators) {
      GroupRelator mapped{compact.at(find(rel.lhs)),
                          compact.at(find(rel.rhs)), std::nullopt};
      if (rel.conjugator) {
        mapped.conjugator = compact.at(find(*rel.conjugator));
      } else {
        continue;  // consumed by the elimination
      }
      relators.push_back(mapped);  // lhs == rhs still says [lhs, conj] = 1
    }
    out.generators = std::move(gens);
    out.relators = std::move(relators);
  }
  return out;
}

std::size_t abelianisation_rank(GroupPresentation const& gp) {
  std::vector<std::vector<Rational>> rows;
  for (auto const& rel : gp.relators) {
    if (rel.lhs == rel.rhs) {
      continue;
    }
    std::vector<Rational> row(gp.generators.size(), Rational(0));
    row[rel.lhs] += Rational(1);
    row[rel.rhs] -= Rational(1);
    rows.push_back(std::move(row));
  }
  return gp.generators.size() - matrix_rank(std::move(rows));
}

CompleteEmbedding::CompleteEmbedding(PresentationPtr p,
                                     std::size_t max_word_len,
                                     Budget const& budget)
    : original_(std::move(p)) {
  auto const& pres = *original_;
  for (auto const& rel : pres.relations()) {
    max_word_len = std::max(
        max_word_len, std::max(rel.left.size(), rel.right.size()));
  }

  // Harvest equalities between words up to the length cap, grouped by
  // class.
  std::vector<Letters> layer;
  for (Letter c = 0; c < pres.alphabet().size(); ++c) {
    layer.push_back({c});
  }
  std::vector<Letters> all;
  for (std::size_t len = 1; len <= max_word_len; ++len) {
    all.insert(all.end(), layer.begin(), layer.end());
    if (len == max_word_len) {
      break;
    }
    std::vector<Letters> next;
    for (auto const& w : layer) {
      for (Letter c = 0; c < pres.alphabet().size(); ++c) {
        Letters e = w;
        e.push_back(c);
        next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }

  std::unordered_map<Letters, std::size_t, LettersHash> class_of;
  std::vector<std::vector<Letters>> classes;
  for (auto const& w : all) {
    if (class_of.count(w)) {
      continue;
    }
    WordClass cls = enumerate_word_class(w, pres, budget);
    if (!cls.closed) {
      partial_ = true;
    }
    std::vector<Letters> members;
    for (auto const& m : cls.words) {
      if (m.size() <= max_word_len && !class_of.count(m)) {
        class_of.emplace(m, classes.size());
        members.push_back(m);
      }
    }
    classes.push_back(std::move(members));
  }

  std::vector<Relation> completed_rels;
  std::vector<std::pair<Letters, Letters>> pairs;
  for (auto& members : classes) {
    std::sort(members.begin(), members.end(),
              [](Letters const& a, Letters const& b) {
                return shortlex_less(a, b);
              });
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        pairs.emplace_back(members[i], members[j]);  // larger -> smaller
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](auto const& a, auto const& b) {
              auto cmp = shortlex_compare(a.first, b.first);
              if (cmp != Ordering::Equal) {
                return cmp == Ordering::Less;
              }
              return shortlex_less(a.second, b.second);
            });
  for (auto const& [u, v] : pairs) {
    completed_rels.push_back({Word(u), Word(v)});
  }
  completed_ = make_presentation(pres.alphabet(), std::move(completed_rels));

  // Relation maps in both directions.
  forward_.resize(pres.num_relations());
  images_.resize(completed_->num_relations());
  for (std::size_t r = 0; r < completed_->num_relations(); ++r) {
    auto const& rel = completed_->relation(r);
    for (std::size_t s = 0; s < pres.num_relations(); ++s) {
      auto const& orig = pres.relation(s);
      if (orig.left == rel.left && orig.right == rel.right) {
        images_[r].direct = {s, false};
        forward_[s] = {r, false};
      } else if (orig.left == rel.right && orig.right == rel.left) {
        images_[r].direct = {s, true};
        forward_[s] = {r, true};
      }
    }
    if (!images_[r].direct) {
      auto witness = connecting_diagram(rel.left, rel.right, original_,
                                        budget);
      if (!witness) {
        throw BudgetExceeded(
            "complete_embedding: no witness diagram for a harvested rule");
      }
      images_[r].witness = std::move(witness);
    }
  }
}

Diagram CompleteEmbedding::include(Diagram const& over_original) const {
  std::vector<Cell> cells;
  for (Cell c : over_original.cells()) {
    auto [r, flipped] = forward_[c.relation];
    c.relation = static_cast<std::uint32_t>(r);
    if (flipped) {
      c.forward = !c.forward;
    }
    cells.push_back(c);
  }
  return Diagram::make(completed_, over_original.top(), std::move(cells));
}

Diagram CompleteEmbedding::retract(Diagram const& over_completed) const {
  std::vector<Cell> cells;
  for (Cell const& c : over_completed.cells()) {
    auto const& image = images_[c.relation];
    if (image.direct) {
      Cell mapped = c;
      mapped.relation = static_cast<std::uint32_t>(image.direct->first);
      if (image.direct->second) {
        mapped.forward = !mapped.forward;
      }
      cells.push_back(mapped);
      continue;
    }
    Diagram const& witness =
        c.forward ? *image.witness : image.witness->inverse();
    for (Cell wc : witness.cells()) {
      wc.offset += c.offset;
      cells.push_back(wc);
    }
  }
  return Diagram::make(original_, over_completed.top(), std::move(cells));
}

}  // namespace diagroup
