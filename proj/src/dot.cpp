#include "rsup/dot.hpp"

#include <sstream>

namespace rsup {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_dot(const Generator& g) {
    std::ostringstream out;
    out << "digraph " << quote(g.name()) << " {\n";
    out << "  rankdir=LR;\n";
    if (!g.is_empty()) {
        out << "  __init [shape=point, label=\"\"];\n";
        for (StateId q = 0; q < g.state_count(); ++q)
            out << "  q" << q << " [shape=" << (g.is_marked(q) ? "doublecircle" : "circle")
                << ", label=\"" << q << "\"];\n";
        out << "  __init -> q" << g.initial() << ";\n";
        for (const Transition& t : g.transitions()) {
            const Event& e = g.alphabet().at(t.event);
            out << "  q" << t.from << " -> q" << t.to << " [label="
                << quote(e.label.empty() ? std::to_string(e.id) : e.label) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace rsup
