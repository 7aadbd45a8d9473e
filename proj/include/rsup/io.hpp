#ifndef RSUP_IO_HPP
#define RSUP_IO_HPP

#include <filesystem>
#include <string>

#include "rsup/errors.hpp"
#include "rsup/generator.hpp"
#include "rsup/solvability.hpp"

namespace rsup {

/// Parses one generator document. Fields: name, events (list of
/// {id, label?, controllable?, forcible?}), states (count), initial, marked,
/// transitions (list of [from, event, to]). Unknown fields are rejected.
/// When an event omits "controllable", the odd-id convention applies
/// (odd ids controllable). `origin` names the source in diagnostics.
Generator parse_generator(const std::string& text, const std::string& origin = "<string>");

Generator read_generator(const std::filesystem::path& file);

/// Canonical text form: stable key order, sorted events and transitions,
/// two-space indentation. parse(print(g)) == g field for field.
std::string print_generator(const Generator& g);

void write_generator(const Generator& g, const std::filesystem::path& file);

std::string print_state_map(const StateMap& map);
void write_state_map(const StateMap& map, const std::filesystem::path& file);

/// Preemption-relation file: {"pairs": [[preemptor, preempted], ...]}.
/// Validated against `alphabet` (ids known, preemptors forcible).
PreemptionRelation parse_preemption(const std::string& text, const Alphabet& alphabet,
                                    const std::string& origin = "<string>");
PreemptionRelation read_preemption(const std::filesystem::path& file, const Alphabet& alphabet);

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, const std::string& text);

} // namespace rsup

#endif
