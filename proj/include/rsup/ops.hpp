#ifndef RSUP_OPS_HPP
#define RSUP_OPS_HPP

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rsup/generator.hpp"

namespace rsup {

/// A generator derived from others, with the provenance of its states.
struct DerivedGenerator {
    Generator generator;
    StateMap map;
};

/// The events defined at state q, ordered by id.
/// Throws std::out_of_range for an invalid state index.
std::vector<Event> enabled_events(const Generator& g, StateId q);

/// States reachable from the initial state (sorted). Empty for the empty generator.
std::vector<StateId> reachable_states(const Generator& g);

/// States from which some marked state is reachable (sorted).
std::vector<StateId> coreachable_states(const Generator& g);

/// Restriction of g to reachable and coreachable states, canonically
/// renumbered. Returns the empty generator when nothing survives.
DerivedGenerator trim(const Generator& g);

/// Synchronous product. Shared events move every constituent that owns them,
/// private events move only their owner; the result alphabet is the union and
/// a state is marked iff all constituents are marked. Only reachable product
/// states are kept, discovered breadth-first in ascending event order, so the
/// numbering is already canonical. Conflicting event flags across
/// constituents throw InputError.
DerivedGenerator sync(std::span<const Generator> parts);
DerivedGenerator sync(std::initializer_list<const Generator*> parts);

/// The marked one-state generator selflooped with every event of g's alphabet.
Generator allevents(const Generator& g);

/// Renumbers states in breadth-first order from the initial state, exploring
/// outgoing transitions in ascending event order. Idempotent. Requires every
/// state reachable (InputError otherwise).
DerivedGenerator canonical_renumber(const Generator& g);

/// Finite truncation of the closed and marked behaviors.
struct LanguageSample {
    std::set<Word> strings; // L(G) up to max_len, including epsilon
    std::set<Word> marked;  // the subset that is in Lm(G)

    friend bool operator==(const LanguageSample&, const LanguageSample&) = default;
};

/// All strings of L(G) with length <= max_len, each tagged whether marked.
LanguageSample language_sample(const Generator& g, std::size_t max_len);

/// State reached by replaying a word from the initial state, or nullopt if
/// the word leaves L(G) (always nullopt on the empty generator).
std::optional<StateId> replay(const Generator& g, const Word& word);

} // namespace rsup

#endif
