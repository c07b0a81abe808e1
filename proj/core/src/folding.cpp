#include "diagroup/folding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace diagroup {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Letters side_of(Presentation const& p, std::size_t relation, bool left) {
  auto const& rel = p.relation(relation);
  return left ? rel.left.letters() : rel.right.letters();
}

// Apply pending vertex/edge identifications and compact ids. Duplicate
// edges (same class) collapse; faces are remapped but not deduplicated.
Directed2Complex quotient(Directed2Complex const& x, UnionFind& vertices,
                          UnionFind& edges) {
  // Edge unification must propagate to endpoints until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < x.edge_ends.size(); ++e) {
      std::size_t r = edges.find(e);
      if (r == e) {
        continue;
      }
      changed |= vertices.unite(x.edge_ends[e].first, x.edge_ends[r].first);
      changed |= vertices.unite(x.edge_ends[e].second, x.edge_ends[r].second);
    }
    // Parallel edges with identified endpoints stay distinct: folding only
    // ever identifies edges through path identifications.
  }

  Directed2Complex out;
  out.presentation = x.presentation;
  std::map<std::size_t, std::size_t> vmap, emap;
  for (std::size_t v = 0; v < x.num_vertices; ++v) {
    std::size_t r = vertices.find(v);
    if (!vmap.count(r)) {
      vmap.emplace(r, vmap.size());
    }
  }
  out.num_vertices = vmap.size();
  for (std::size_t e = 0; e < x.edge_ends.size(); ++e) {
    std::size_t r = edges.find(e);
    if (!emap.count(r)) {
      std::size_t id = emap.size();
      emap.emplace(r, id);
      out.edge_ends.emplace_back(vmap.at(vertices.find(x.edge_ends[r].first)),
                                 vmap.at(vertices.find(x.edge_ends[r].second)));
      out.edge_label.push_back(x.edge_label[r]);
    }
  }
  auto remap_path = [&](std::vector<std::size_t> const& path) {
    std::vector<std::size_t> out_path;
    out_path.reserve(path.size());
    for (std::size_t e : path) {
      out_path.push_back(emap.at(edges.find(e)));
    }
    return out_path;
  };
  for (auto const& f : x.faces) {
    out.faces.push_back({remap_path(f.top), remap_path(f.bot), f.partner,
                         f.relation, f.top_is_left});
  }
  out.base_path = remap_path(x.base_path);
  return out;
}

// Merge structurally equal faces, fixing partner links.
Directed2Complex dedupe_faces(Directed2Complex x) {
  std::vector<std::size_t> face_map(x.faces.size());
  std::vector<Directed2Complex::Face> kept;
  std::map<std::tuple<std::vector<std::size_t>, std::vector<std::size_t>,
                      std::size_t, bool>,
           std::size_t>
      index;
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    auto key = std::make_tuple(x.faces[f].top, x.faces[f].bot,
                               x.faces[f].relation, x.faces[f].top_is_left);
    auto it = index.find(key);
    if (it == index.end()) {
      face_map[f] = kept.size();
      index.emplace(std::move(key), kept.size());
      kept.push_back(x.faces[f]);
    } else {
      face_map[f] = it->second;
    }
  }
  for (auto& f : kept) {
    f.partner = face_map[f.partner];
  }
  x.faces = std::move(kept);
  return x;
}

}  // namespace

Word Directed2Complex::base_word() const {
  Letters ls;
  for (std::size_t e : base_path) {
    ls.push_back(edge_label[e]);
  }
  return Word(std::move(ls));
}

void validate_complex(Directed2Complex const& x) {
  auto const& p = *x.presentation;
  auto check_path = [&](std::vector<std::size_t> const& path) {
    if (path.empty()) {
      throw std::logic_error("complex: empty path");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (x.edge_ends[path[i]].second != x.edge_ends[path[i + 1]].first) {
        throw std::logic_error("complex: disconnected path");
      }
    }
  };
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    auto const& face = x.faces[f];
    check_path(face.top);
    check_path(face.bot);
    if (x.edge_ends[face.top.front()].first !=
            x.edge_ends[face.bot.front()].first ||
        x.edge_ends[face.top.back()].second !=
            x.edge_ends[face.bot.back()].second) {
      throw std::logic_error("complex: face paths do not share endpoints");
    }
    auto const& partner = x.faces.at(face.partner);
    if (face.partner == f || partner.partner != f ||
        !(partner.top == face.bot) || !(partner.bot == face.top) ||
        partner.relation != face.relation ||
        partner.top_is_left == face.top_is_left) {
      throw std::logic_error("complex: broken involution");
    }
    Letters expect = side_of(p, face.relation, face.top_is_left);
    Letters got;
    for (std::size_t e : face.top) {
      got.push_back(x.edge_label[e]);
    }
    if (!(got == expect)) {
      throw std::logic_error("complex: face label mismatch");
    }
  }
}

Directed2Complex build_ambient(PresentationPtr p, Word const& w) {
  Directed2Complex x;
  x.presentation = p;
  x.num_vertices = 1;
  for (Letter c = 0; c < p->alphabet().size(); ++c) {
    x.edge_ends.emplace_back(0, 0);
    x.edge_label.push_back(c);
  }
  for (std::size_t r = 0; r < p->num_relations(); ++r) {
    auto path_of = [&](Letters const& side) {
      std::vector<std::size_t> path;
      for (Letter c : side) {
        path.push_back(c);
      }
      return path;
    };
    std::size_t f = x.faces.size();
    x.faces.push_back({path_of(p->relation(r).left.letters()),
                       path_of(p->relation(r).right.letters()), f + 1, r,
                       true});
    x.faces.push_back({path_of(p->relation(r).right.letters()),
                       path_of(p->relation(r).left.letters()), f, r, false});
  }
  for (Letter c : w) {
    x.base_path.push_back(c);
  }
  return x;
}

Directed2Complex wedge_of_generators(std::vector<Diagram> const& generators,
                                     PresentationPtr p, Word const& base) {
  for (auto const& g : generators) {
    if (!g.spherical() || !(g.top() == base)) {
      throw std::invalid_argument(
          "wedge_of_generators: generators must be spherical over the base");
    }
  }
  Directed2Complex x;
  x.presentation = p;
  auto fresh_vertex = [&]() { return x.num_vertices++; };
  auto fresh_edge = [&](std::size_t src, std::size_t dst, Letter label) {
    x.edge_ends.emplace_back(src, dst);
    x.edge_label.push_back(label);
    return x.edge_ends.size() - 1;
  };

  std::vector<std::size_t> segment;
  std::size_t v = fresh_vertex();
  for (Letter c : base) {
    std::size_t next = fresh_vertex();
    segment.push_back(fresh_edge(v, next, c));
    v = next;
  }
  x.base_path = segment;

  std::vector<std::pair<std::size_t, std::size_t>> edge_glue;

  for (auto const& g : generators) {
    std::vector<std::size_t> path = segment;
    for (auto const& cell : g.cells()) {
      Letters pattern = side_of(*p, cell.relation, cell.forward);
      Letters replacement = side_of(*p, cell.relation, !cell.forward);
      std::vector<std::size_t> top_sub(path.begin() + cell.offset,
                                       path.begin() + cell.offset +
                                           pattern.size());
      std::size_t start = x.edge_ends[top_sub.front()].first;
      std::size_t end = x.edge_ends[top_sub.back()].second;
      std::vector<std::size_t> bot_sub;
      std::size_t at = start;
      for (std::size_t i = 0; i < replacement.size(); ++i) {
        std::size_t to = (i + 1 == replacement.size()) ? end : fresh_vertex();
        bot_sub.push_back(fresh_edge(at, to, replacement[i]));
        at = to;
      }
      std::size_t f = x.faces.size();
      x.faces.push_back({top_sub, bot_sub, f + 1, cell.relation,
                         cell.forward});
      x.faces.push_back({bot_sub, top_sub, f, cell.relation, !cell.forward});
      std::vector<std::size_t> next_path(path.begin(),
                                         path.begin() + cell.offset);
      next_path.insert(next_path.end(), bot_sub.begin(), bot_sub.end());
      next_path.insert(next_path.end(),
                       path.begin() + cell.offset + pattern.size(),
                       path.end());
      path = std::move(next_path);
    }
    // The sphere: the final path is identified with the base segment.
    for (std::size_t i = 0; i < segment.size(); ++i) {
      edge_glue.emplace_back(path[i], segment[i]);
    }
  }

  UnionFind vuf(x.num_vertices), euf(x.edge_ends.size());
  for (auto const& [a, b] : edge_glue) {
    euf.unite(a, b);
  }
  return dedupe_faces(quotient(x, vuf, euf));
}

bool locally_injective(Directed2Complex const& x) {
  for (std::size_t i = 0; i < x.faces.size(); ++i) {
    for (std::size_t j = i + 1; j < x.faces.size(); ++j) {
      auto const& f = x.faces[i];
      auto const& g = x.faces[j];
      if (f.relation == g.relation && f.top_is_left == g.top_is_left &&
          (f.top == g.top || f.bot == g.bot)) {
        return false;
      }
    }
  }
  return true;
}

Directed2Complex fold(Directed2Complex x, std::mt19937_64* rng) {
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < x.faces.size(); ++i) {
      for (std::size_t j = i + 1; j < x.faces.size(); ++j) {
        auto const& f = x.faces[i];
        auto const& g = x.faces[j];
        if (f.relation == g.relation && f.top_is_left == g.top_is_left &&
            (f.top == g.top || f.bot == g.bot)) {
          candidates.emplace_back(i, j);
          if (!rng) {
            break;
          }
        }
      }
      if (!candidates.empty() && !rng) {
        break;
      }
    }
    if (candidates.empty()) {
      return x;
    }
    auto [i, j] = rng ? candidates[(*rng)() % candidates.size()]
                      : candidates.front();
    UnionFind vuf(x.num_vertices), euf(x.edge_ends.size());
    for (std::size_t k = 0; k < x.faces[i].top.size(); ++k) {
      euf.unite(x.faces[i].top[k], x.faces[j].top[k]);
    }
    for (std::size_t k = 0; k < x.faces[i].bot.size(); ++k) {
      euf.unite(x.faces[i].bot[k], x.faces[j].bot[k]);
    }
    x = dedupe_faces(quotient(x, vuf, euf));
  }
}

bool accepts(Directed2Complex const& folded, Diagram const& d) {
  auto const& p = *folded.presentation;
  if (!(d.top() == folded.base_word())) {
    throw std::invalid_argument("accepts: baseword mismatch");
  }
  std::vector<std::size_t> path = folded.base_path;
  for (auto const& cell : d.cells()) {
    std::size_t plen = side_of(p, cell.relation, cell.forward).size();
    if (cell.offset + plen > path.size()) {
      return false;
    }
    std::vector<std::size_t> sub(path.begin() + cell.offset,
                                 path.begin() + cell.offset + plen);
    Directed2Complex::Face const* lift = nullptr;
    for (auto const& f : folded.faces) {
      if (f.relation == cell.relation && f.top_is_left == cell.forward &&
          f.top == sub) {
        lift = &f;
        break;
      }
    }
    if (!lift) {
      return false;
    }
    std::vector<std::size_t> next(path.begin(), path.begin() + cell.offset);
    next.insert(next.end(), lift->bot.begin(), lift->bot.end());
    next.insert(next.end(), path.begin() + cell.offset + plen, path.end());
    path = std::move(next);
  }
  return path == folded.base_path;
}

std::string canonical_serialisation(Directed2Complex const& x) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> edge_id(x.edge_label.size(), kUnset);
  std::size_t next_edge = 0;
  for (std::size_t e : x.base_path) {
    if (edge_id[e] == kUnset) {
      edge_id[e] = next_edge++;
    }
  }
  std::vector<bool> done(x.faces.size(), false);
  auto numbered = [&](std::vector<std::size_t> const& path) {
    std::vector<std::size_t> ids;
    for (std::size_t e : path) {
      if (edge_id[e] == kUnset) {
        return std::optional<std::vector<std::size_t>>{};
      }
      ids.push_back(edge_id[e]);
    }
    return std::optional{ids};
  };

  while (true) {
    std::size_t best = x.faces.size();
    std::tuple<int, std::vector<std::size_t>, std::size_t, bool> best_key;
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
      if (done[f]) {
        continue;
      }
      auto top_ids = numbered(x.faces[f].top);
      auto bot_ids = numbered(x.faces[f].bot);
      if (!top_ids && !bot_ids) {
        continue;
      }
      auto key = top_ids
                     ? std::make_tuple(0, *top_ids, x.faces[f].relation,
                                       x.faces[f].top_is_left)
                     : std::make_tuple(1, *bot_ids, x.faces[f].relation,
                                       x.faces[f].top_is_left);
      if (best == x.faces.size() || key < best_key) {
        best = f;
        best_key = key;
      }
    }
    if (best == x.faces.size()) {
      break;
    }
    done[best] = true;
    for (auto const* path : {&x.faces[best].top, &x.faces[best].bot}) {
      for (std::size_t e : *path) {
        if (edge_id[e] == kUnset) {
          edge_id[e] = next_edge++;
        }
      }
    }
  }

  std::vector<std::string> face_lines;
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    std::ostringstream line;
    line << "face r" << x.faces[f].relation
         << (x.faces[f].top_is_left ? "+" : "-") << " t";
    for (std::size_t e : x.faces[f].top) {
      line << " " << (edge_id[e] == kUnset ? -1 : static_cast<long>(edge_id[e]));
    }
    line << " b";
    for (std::size_t e : x.faces[f].bot) {
      line << " " << (edge_id[e] == kUnset ? -1 : static_cast<long>(edge_id[e]));
    }
    face_lines.push_back(line.str());
  }
  std::sort(face_lines.begin(), face_lines.end());

  std::ostringstream out;
  out << "edges " << x.edge_label.size() << " faces " << x.faces.size()
      << "\n";
  out << "base";
  for (std::size_t e : x.base_path) {
    out << " " << edge_id[e];
  }
  out << "\n";
  for (auto const& line : face_lines) {
    out << line << "\n";
  }
  return out.str();
}

}  // namespace diagroup
