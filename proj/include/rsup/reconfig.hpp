#ifndef RSUP_RECONFIG_HPP
#define RSUP_RECONFIG_HPP

#include <optional>
#include <string>

#include "rsup/supcon.hpp"

namespace rsup {

/// A configuration (mode): a named, non-empty subset of the component pool.
/// Its event set Sigma_X is the union of the members' alphabets.
struct Configuration {
    std::string name;
    std::vector<std::string> components;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A reconfiguration event: fresh (disjoint from every component alphabet),
/// switching from one configuration to another. Controllable and forcible by
/// default; callers may override the flags on `event`.
struct SwitchEvent {
    Event event;
    std::string from_config;
    std::string to_config;

    friend bool operator==(const SwitchEvent&, const SwitchEvent&) = default;
};

struct RsOptions {
    /// Drop every switch that reverses an earlier-listed one.
    bool one_way = false;
    /// Mark only these configurations; by default every RS state is marked.
    std::optional<std::vector<std::string>> marked_configs;
};

/// The reconfiguration specification: one state per configuration, selflooped
/// with exactly that configuration's event set, plus the switch edges.
struct ReconfigSpec {
    Generator automaton;
    std::vector<std::string> config_of_state; // state index -> configuration name
    std::vector<SwitchEvent> switch_events;
    std::string initial_config;

    bool is_switch(EventId id) const;
};

/// Builds the RS automaton over the given component pool. State i belongs to
/// configs[i]; the initial state is the initial configuration's.
/// Rejects duplicate configuration names, unknown components or
/// configurations, switch ids that collide with any component alphabet or
/// with each other, and self-switches.
ReconfigSpec build_rs(std::span<const Generator> component_pool,
                      std::span<const Configuration> configs,
                      std::span<const SwitchEvent> switches, const std::string& initial,
                      const RsOptions& opts = {});

/// The multimodal plant: synchronous product of the given plant components
/// with the RS automaton (RS last in the state map).
DerivedGenerator build_gmode(std::span<const Generator> plant_components, const ReconfigSpec& rs);

/// The reconfiguration supervisor:
/// supcon(GMode, allevents(GMode) || behavioral_spec).
/// The behavioral spec's alphabet must be contained in GMode's.
SupconResult build_rsup(std::span<const Generator> plant_components, const ReconfigSpec& rs,
                        const Generator& behavioral_spec);

/// Supervisor states where the given event is enabled (the RE source states).
/// Unknown event ids throw InputError.
std::vector<StateId> re_source_states(const SupconResult& rsup, EventId switch_event);

} // namespace rsup

#endif
