#ifndef DIAGROUP_SCRIPT_HPP
#define DIAGROUP_SCRIPT_HPP

#include <string>

#include "diagroup/diagram.hpp"

namespace diagroup {

/// Diagram script literals:
///
///   [ a | u > v | b ]   atomic cell rewriting u to v between contexts a, b
///                       (contexts written '-' when empty); u > v must match
///                       one side pair of a relation, in either orientation
///   [ w ]               the identity diagram on w
///   s ~                 mirror image
///   s * t,  s ; t       concatenation (top to bottom)
///   s + t               sum (left to right); binds tighter than * and ;
///   ( s )               grouping
///
/// Words inside atoms are space-separated letter tokens.
Diagram parse_diagram_script(std::string const& text, PresentationPtr p);

/// Canonical cell sequence rendered as ';'-joined atomic factors.
std::string to_script(Diagram const& d);

}  // namespace diagroup

#endif
