#include "rsup/reconfig.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rsup/errors.hpp"

namespace rsup {

bool ReconfigSpec::is_switch(EventId id) const {
    return std::any_of(switch_events.begin(), switch_events.end(),
                       [&](const SwitchEvent& s) { return s.event.id == id; });
}

ReconfigSpec build_rs(std::span<const Generator> component_pool,
                      std::span<const Configuration> configs,
                      std::span<const SwitchEvent> switches, const std::string& initial,
                      const RsOptions& opts) {
    if (configs.empty())
        throw InputError("build_rs: at least one configuration required");

    std::map<std::string, const Generator*> pool;
    for (const Generator& g : component_pool)
        pool.emplace(g.name(), &g);

    std::map<std::string, StateId> config_state;
    for (StateId i = 0; i < configs.size(); ++i) {
        const Configuration& c = configs[i];
        if (!config_state.emplace(c.name, i).second)
            throw InputError("build_rs: duplicate configuration name '" + c.name + "'");
        if (c.components.empty())
            throw InputError("build_rs: configuration '" + c.name + "' has no components");
        for (const std::string& m : c.components)
            if (!pool.count(m))
                throw InputError("build_rs: configuration '" + c.name +
                                 "' references unknown component '" + m + "'");
    }
    if (!config_state.count(initial))
        throw InputError("build_rs: unknown initial configuration '" + initial + "'");

    // Sigma_X per configuration, and the merged event alphabet.
    Alphabet alphabet;
    std::vector<std::set<EventId>> sigma(configs.size());
    for (StateId i = 0; i < configs.size(); ++i)
        for (const std::string& m : configs[i].components)
            for (const Event& e : pool.at(m)->alphabet()) {
                sigma[i].insert(e.id);
                alphabet.insert(e);
            }

    std::vector<SwitchEvent> kept;
    std::set<EventId> switch_ids;
    for (const SwitchEvent& s : switches) {
        if (!config_state.count(s.from_config) || !config_state.count(s.to_config))
            throw InputError("build_rs: switch event " + std::to_string(s.event.id) +
                             " references an unknown configuration");
        if (s.from_config == s.to_config)
            throw InputError("build_rs: switch event " + std::to_string(s.event.id) +
                             " must connect two distinct configurations");
        for (const Generator& g : component_pool)
            if (g.alphabet().contains(s.event.id))
                throw InputError("build_rs: switch event id " + std::to_string(s.event.id) +
                                 " collides with the alphabet of component '" + g.name() + "'");
        if (!switch_ids.insert(s.event.id).second)
            throw InputError("build_rs: duplicate switch event id " +
                             std::to_string(s.event.id));
        if (opts.one_way) {
            bool reverses = std::any_of(kept.begin(), kept.end(), [&](const SwitchEvent& k) {
                return k.from_config == s.to_config && k.to_config == s.from_config;
            });
            if (reverses)
                continue;
        }
        alphabet.insert(s.event);
        kept.push_back(s);
    }

    std::vector<StateId> marked;
    if (opts.marked_configs) {
        std::set<StateId> mk;
        for (const std::string& name : *opts.marked_configs) {
            auto it = config_state.find(name);
            if (it == config_state.end())
                throw InputError("build_rs: unknown configuration '" + name +
                                 "' in marking option");
            mk.insert(it->second);
        }
        marked.assign(mk.begin(), mk.end());
    } else {
        for (StateId i = 0; i < configs.size(); ++i)
            marked.push_back(i);
    }

    std::vector<Transition> trans;
    for (StateId i = 0; i < configs.size(); ++i)
        for (EventId e : sigma[i])
            trans.push_back({i, e, i});
    for (const SwitchEvent& s : kept)
        trans.push_back({config_state.at(s.from_config), s.event.id,
                         config_state.at(s.to_config)});

    ReconfigSpec rs;
    rs.automaton = Generator("RS", std::move(alphabet), static_cast<StateId>(configs.size()),
                             config_state.at(initial), std::move(marked), std::move(trans));
    for (const Configuration& c : configs)
        rs.config_of_state.push_back(c.name);
    rs.switch_events = std::move(kept);
    rs.initial_config = initial;
    return rs;
}

DerivedGenerator build_gmode(std::span<const Generator> plant_components,
                             const ReconfigSpec& rs) {
    if (plant_components.empty())
        throw InputError("build_gmode: at least one plant component required");
    std::vector<Generator> parts(plant_components.begin(), plant_components.end());
    parts.push_back(rs.automaton);
    DerivedGenerator g = sync(std::span<const Generator>(parts));
    return g;
}

SupconResult build_rsup(std::span<const Generator> plant_components, const ReconfigSpec& rs,
                        const Generator& behavioral_spec) {
    DerivedGenerator gmode = build_gmode(plant_components, rs);
    if (!gmode.generator.alphabet().covers(behavioral_spec.alphabet()))
        throw InputError("build_rsup: behavioral spec alphabet not contained in GMode's");
    Generator all = allevents(gmode.generator);
    DerivedGenerator padded = sync({&all, &behavioral_spec});
    return supcon(gmode.generator, padded.generator);
}

std::vector<StateId> re_source_states(const SupconResult& rsup, EventId switch_event) {
    if (!rsup.supervisor.alphabet().contains(switch_event))
        throw InputError("re_source_states: event " + std::to_string(switch_event) +
                         " is not in the supervisor alphabet");
    std::vector<StateId> out;
    for (StateId q = 0; q < rsup.supervisor.state_count(); ++q)
        if (rsup.supervisor.defines(q, switch_event))
            out.push_back(q);
    return out;
}

} // namespace rsup
