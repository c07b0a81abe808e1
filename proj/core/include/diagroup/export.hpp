#ifndef DIAGROUP_EXPORT_HPP
#define DIAGROUP_EXPORT_HPP

#include <json.hpp>

#include "diagroup/folding.hpp"
#include "diagroup/group_presentation.hpp"
#include "diagroup/median.hpp"
#include "diagroup/squier.hpp"

namespace diagroup {

std::string to_dot(SquierComponent const& component);
std::string to_dot(MedianBall const& ball);
std::string to_dot(Directed2Complex const& x);
/// Cell dependency poset of a diagram.
std::string to_dot_cell_poset(Diagram const& d);

// Versioned JSON exports; "schema" fields are squier/1, ball/1, present/1.
nlohmann::json to_json(SquierComponent const& component);
nlohmann::json to_json(MedianBall const& ball);
nlohmann::json to_json(GroupPresentation const& gp);

/// Rendering for generator and relator lines:
///   gen (u | l>r | v)      and      g3 = g1 ^ g0
std::string generator_line(GroupPresentation const& gp, std::size_t i);
std::string relator_line(GroupPresentation const& gp, std::size_t i);

}  // namespace diagroup

#endif
