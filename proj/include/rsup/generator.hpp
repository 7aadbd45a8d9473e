#ifndef RSUP_GENERATOR_HPP
#define RSUP_GENERATOR_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsup/errors.hpp"
#include "rsup/event.hpp"

namespace rsup {

/// One transition (from, event, to).
struct Transition {
    StateId from = 0;
    EventId event = 0;
    StateId to = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Deterministic finite-state generator G = (Q, Sigma, delta, q0, Qm) with a
/// partial transition function. States are 0..state_count()-1. The empty
/// generator (state_count 0, no initial state) is the canonical
/// representation of the empty language; every language query on it is empty.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class Generator {
public:
    /// The empty generator over a given alphabet.
    Generator() = default;
    static Generator empty(std::string name, Alphabet alphabet);

    /// Validates determinism, index ranges and alphabet membership;
    /// violations throw InputError.
    Generator(std::string name, Alphabet alphabet, StateId state_count, StateId initial,
              std::vector<StateId> marked, std::vector<Transition> transitions);

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }
    StateId state_count() const { return state_count_; }
    bool is_empty() const { return state_count_ == 0; }
    /// Initial state; throws InputError on the empty generator.
    StateId initial() const;
    const std::vector<StateId>& marked() const { return marked_; }
    bool is_marked(StateId q) const;

    /// Outgoing (event, target) pairs of q in ascending event order.
    std::span<const std::pair<EventId, StateId>> transitions_from(StateId q) const;
    /// delta(q, e), or nullopt when undefined.
    std::optional<StateId> target(StateId q, EventId e) const;
    bool defines(StateId q, EventId e) const { return target(q, e).has_value(); }

    std::size_t transition_count() const;
    /// All transitions ordered by (from, event).
    std::vector<Transition> transitions() const;

    /// Field-wise equality including the name.
    friend bool operator==(const Generator&, const Generator&) = default;

    /// Equality of everything except the name.
    bool same_structure(const Generator& other) const;

private:
    void check_state(StateId q) const;

    std::string name_;
    Alphabet alphabet_;
    StateId state_count_ = 0;
    StateId initial_ = 0;
    std::vector<StateId> marked_;                                  // sorted unique
    std::vector<std::vector<std::pair<EventId, StateId>>> delta_;  // per state, sorted by event
};

/// Relates each state of a derived generator back to one state per
/// constituent. `sources` names the constituents; `rows[q]` has one entry
/// per constituent and is total over the derived generator's states.
struct StateMap {
    std::vector<std::string> sources;
    std::vector<std::vector<StateId>> rows;

    friend bool operator==(const StateMap&, const StateMap&) = default;
};

} // namespace rsup

#endif
