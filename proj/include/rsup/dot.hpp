#ifndef RSUP_DOT_HPP
#define RSUP_DOT_HPP

#include <string>

#include "rsup/generator.hpp"

namespace rsup {

/// Graphviz rendering: one node per state (marked states doublecircled, the
/// initial state pointed at by an arrow), one labeled edge per transition.
/// Output is deterministic, byte for byte.
std::string to_dot(const Generator& g);

} // namespace rsup

#endif
