#include "diagroup/export.hpp"

#include <sstream>

namespace diagroup {

namespace {

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(SquierComponent const& component) {
  auto const& p = *component.presentation;
  std::ostringstream out;
  out << "graph squier {\n";
  for (std::size_t i = 0; i < component.words.size(); ++i) {
    out << "  w" << i << " [label=" << quoted(p.word_to_string(component.words[i]))
        << "];\n";
  }
  for (auto const& e : component.edges) {
    auto const& rel = p.relation(e.relation);
    std::string label =
        (e.left_context.empty() ? "-" : p.word_to_string(e.left_context)) +
        " | " + p.word_to_string(rel.left) + ">" +
        p.word_to_string(rel.right) + " | " +
        (e.right_context.empty() ? "-" : p.word_to_string(e.right_context));
    out << "  w" << e.from << " -- w" << e.to << " [label=" << quoted(label)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(MedianBall const& ball) {
  std::ostringstream out;
  out << "graph ball {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    out << "  d" << i << " [label=\"#" << ball.vertices[i].num_cells()
        << "\"];\n";
  }
  for (auto const& [a, b] : ball.edges) {
    out << "  d" << a << " -- d" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(Directed2Complex const& x) {
  auto const& p = *x.presentation;
  std::ostringstream out;
  out << "digraph complex {\n";
  for (std::size_t e = 0; e < x.edge_ends.size(); ++e) {
    out << "  v" << x.edge_ends[e].first << " -> v" << x.edge_ends[e].second
        << " [label=" << quoted(p.alphabet().symbol(x.edge_label[e]))
        << "];\n";
  }
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    if (!x.faces[f].top_is_left) {
      continue;  // draw one face per involution pair
    }
    out << "  // face " << f << " r" << x.faces[f].relation << " top";
    for (std::size_t e : x.faces[f].top) {
      out << " e" << e;
    }
    out << " bot";
    for (std::size_t e : x.faces[f].bot) {
      out << " e" << e;
    }
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot_cell_poset(Diagram const& d) {
  std::ostringstream out;
  out << "digraph cells {\n";
  auto const& p = *d.presentation();
  for (std::size_t i = 0; i < d.cells().size(); ++i) {
    auto const& c = d.cells()[i];
    auto const& rel = p.relation(c.relation);
    out << "  c" << i << " [label="
        << quoted(p.word_to_string(c.forward ? rel.left : rel.right) + ">" +
                  p.word_to_string(c.forward ? rel.right : rel.left) + " @" +
                  std::to_string(c.offset))
        << "];\n";
  }
  for (auto const& [i, j] : dependency_edges(d)) {
    out << "  c" << i << " -> c" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(SquierComponent const& component) {
  auto const& p = *component.presentation;
  nlohmann::json j;
  j["schema"] = "squier/1";
  j["complete"] = component.complete;
  j["vertices"] = nlohmann::json::array();
  for (auto const& w : component.words) {
    j["vertices"].push_back(p.word_to_string(w));
  }
  j["edges"] = nlohmann::json::array();
  for (auto const& e : component.edges) {
    j["edges"].push_back({{"left", p.word_to_string(e.left_context)},
                          {"relation", e.relation},
                          {"right", p.word_to_string(e.right_context)},
                          {"from", e.from},
                          {"to", e.to}});
  }
  j["squares"] = nlohmann::json::array();
  for (auto const& s : component.squares) {
    j["squares"].push_back({{"a", p.word_to_string(s.a)},
                            {"rel1", s.rel1},
                            {"b", p.word_to_string(s.b)},
                            {"rel2", s.rel2},
                            {"c", p.word_to_string(s.c)}});
  }
  return j;
}

nlohmann::json to_json(MedianBall const& ball) {
  nlohmann::json j;
  j["schema"] = "ball/1";
  j["radius"] = ball.radius;
  j["complete"] = ball.complete;
  j["vertices"] = nlohmann::json::array();
  for (auto const& v : ball.vertices) {
    j["vertices"].push_back(
        {{"cells", v.num_cells()},
         {"bottom", v.presentation()->word_to_string(v.bottom())}});
  }
  j["edges"] = nlohmann::json::array();
  for (auto const& [a, b] : ball.edges) {
    j["edges"].push_back({a, b});
  }
  return j;
}

std::string generator_line(GroupPresentation const& gp, std::size_t i) {
  auto const& p = *gp.presentation;
  auto const& g = gp.generators[i];
  auto const& rel = p.relation(g.relation);
  return "gen (" +
         (g.left_context.empty() ? "-" : p.word_to_string(g.left_context)) +
         " | " + p.word_to_string(rel.left) + ">" +
         p.word_to_string(rel.right) + " | " +
         (g.right_context.empty() ? "-" : p.word_to_string(g.right_context)) +
         ")";
}

std::string relator_line(GroupPresentation const& gp, std::size_t i) {
  auto const& r = gp.relators[i];
  std::string out = "g" + std::to_string(r.lhs) + " = g" +
                    std::to_string(r.rhs);
  if (r.conjugator) {
    out += " ^ g" + std::to_string(*r.conjugator);
  }
  return out;
}

nlohmann::json to_json(GroupPresentation const& gp) {
  nlohmann::json j;
  j["schema"] = "present/1";
  j["baseword"] = gp.presentation->word_to_string(gp.baseword);
  j["truncated"] = gp.truncated;
  j["generators"] = nlohmann::json::array();
  for (std::size_t i = 0; i < gp.generators.size(); ++i) {
    auto const& g = gp.generators[i];
    j["generators"].push_back(
        {{"left", gp.presentation->word_to_string(g.left_context)},
         {"relation", g.relation},
         {"right", gp.presentation->word_to_string(g.right_context)}});
  }
  j["relators"] = nlohmann::json::array();
  for (std::size_t i = 0; i < gp.relators.size(); ++i) {
    auto const& r = gp.relators[i];
    nlohmann::json rel = {{"lhs", r.lhs}, {"rhs", r.rhs}};
    if (r.conjugator) {
      rel["conjugator"] = *r.conjugator;
    }
    j["relators"].push_back(rel);
  }
  return j;
}

}  // namespace diagroup
