#include "rsup/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rsup/errors.hpp"

namespace rsup {

namespace {

std::vector<StateId> mask_to_states(const std::vector<char>& mask) {
    std::vector<StateId> out;
    for (StateId q = 0; q < mask.size(); ++q)
        if (mask[q])
            out.push_back(q);
    return out;
}

std::vector<char> reachable_mask(const Generator& g) {
    std::vector<char> seen(g.state_count(), 0);
    if (g.is_empty())
        return seen;
    std::deque<StateId> todo{g.initial()};
    seen[g.initial()] = 1;
    while (!todo.empty()) {
        StateId q = todo.front();
        todo.pop_front();
        for (const auto& [e, t] : g.transitions_from(q)) {
            if (!seen[t]) {
                seen[t] = 1;
                todo.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<char> coreachable_mask(const Generator& g) {
    std::vector<char> seen(g.state_count(), 0);
    if (g.is_empty())
        return seen;
    std::vector<std::vector<StateId>> preds(g.state_count());
    for (StateId q = 0; q < g.state_count(); ++q)
        for (const auto& [e, t] : g.transitions_from(q))
            preds[t].push_back(q);
    std::deque<StateId> todo;
    for (StateId q : g.marked()) {
        seen[q] = 1;
        todo.push_back(q);
    }
    while (!todo.empty()) {
        StateId q = todo.front();
        todo.pop_front();
        for (StateId p : preds[q]) {
            if (!seen[p]) {
                seen[p] = 1;
                todo.push_back(p);
            }
        }
    }
    return seen;
}

/// Restricts g to the masked states and renumbers them canonically
/// (breadth-first from initial, ascending event order).
DerivedGenerator restrict_and_renumber(const Generator& g, const std::vector<char>& keep,
                                       const std::string& name) {
    StateMap map;
    map.sources = {g.name()};
    if (g.is_empty() || !keep[g.initial()])
        return {Generator::empty(name, g.alphabet()), map};

    constexpr StateId unassigned = static_cast<StateId>(-1);
    std::vector<StateId> new_id(g.state_count(), unassigned);
    std::vector<StateId> order; // new id -> old id
    std::deque<StateId> todo{g.initial()};
    new_id[g.initial()] = 0;
    order.push_back(g.initial());
    while (!todo.empty()) {
        StateId q = todo.front();
        todo.pop_front();
        for (const auto& [e, t] : g.transitions_from(q)) {
            if (keep[t] && new_id[t] == unassigned) {
                new_id[t] = static_cast<StateId>(order.size());
                order.push_back(t);
                todo.push_back(t);
            }
        }
    }

    std::vector<StateId> marked;
    std::vector<Transition> trans;
    for (StateId nq = 0; nq < order.size(); ++nq) {
        StateId oq = order[nq];
        if (g.is_marked(oq))
            marked.push_back(nq);
        for (const auto& [e, t] : g.transitions_from(oq))
            if (keep[t] && new_id[t] != unassigned)
                trans.push_back({nq, e, new_id[t]});
        map.rows.push_back({oq});
    }
    Generator out(name, g.alphabet(), static_cast<StateId>(order.size()), 0, std::move(marked),
                  std::move(trans));
    return {std::move(out), std::move(map)};
}

} // namespace

std::vector<Event> enabled_events(const Generator& g, StateId q) {
    std::vector<Event> out;
    for (const auto& [e, t] : g.transitions_from(q))
        out.push_back(g.alphabet().at(e));
    return out;
}

std::vector<StateId> reachable_states(const Generator& g) {
    return mask_to_states(reachable_mask(g));
}

std::vector<StateId> coreachable_states(const Generator& g) {
    return mask_to_states(coreachable_mask(g));
}

DerivedGenerator trim(const Generator& g) {
    std::vector<char> reach = reachable_mask(g);
    std::vector<char> coreach = coreachable_mask(g);
    std::vector<char> keep(g.state_count(), 0);
    for (StateId q = 0; q < g.state_count(); ++q)
        keep[q] = reach[q] && coreach[q];
    return restrict_and_renumber(g, keep, g.name());
}

DerivedGenerator sync(std::span<const Generator> parts) {
    if (parts.empty())
        throw InputError("sync: at least one generator required");

    Alphabet alphabet;
    std::string name;
    for (const Generator& g : parts) {
        alphabet.merge(g.alphabet()); // throws on conflicting flags
        if (!name.empty())
            name += "||";
        name += g.name();
    }

    StateMap map;
    for (const Generator& g : parts)
        map.sources.push_back(g.name());

    // Owners of each event, in part order.
    std::map<EventId, std::vector<std::size_t>> owners;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const Event& e : parts[i].alphabet())
            owners[e.id].push_back(i);

    for (const Generator& g : parts)
        if (g.is_empty())
            return {Generator::empty(name, alphabet), map};

    std::vector<StateId> init;
    for (const Generator& g : parts)
        init.push_back(g.initial());

    std::map<std::vector<StateId>, StateId> index;
    std::vector<std::vector<StateId>> tuples{init};
    index.emplace(init, 0);
    std::vector<Transition> trans;
    std::deque<StateId> todo{0};
    while (!todo.empty()) {
        StateId q = todo.front();
        todo.pop_front();
        std::vector<StateId> tup = tuples[q]; // copy: tuples may reallocate
        for (const Event& ev : alphabet) {
            std::vector<StateId> next = tup;
            bool enabled = true;
            for (std::size_t i : owners[ev.id]) {
                auto t = parts[i].target(tup[i], ev.id);
                if (!t) {
                    enabled = false;
                    break;
                }
                next[i] = *t;
            }
            if (!enabled)
                continue;
            auto [it, fresh] = index.emplace(next, static_cast<StateId>(tuples.size()));
            if (fresh) {
                tuples.push_back(next);
                todo.push_back(it->second);
            }
            trans.push_back({q, ev.id, it->second});
        }
    }

    std::vector<StateId> marked;
    for (StateId q = 0; q < tuples.size(); ++q) {
        bool all = true;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!parts[i].is_marked(tuples[q][i])) {
                all = false;
                break;
            }
        if (all)
            marked.push_back(q);
    }

    map.rows = std::move(tuples);
    Generator out(name, alphabet, static_cast<StateId>(map.rows.size()), 0, std::move(marked),
                  std::move(trans));
    return {std::move(out), std::move(map)};
}

DerivedGenerator sync(std::initializer_list<const Generator*> parts) {
    std::vector<Generator> copy;
    copy.reserve(parts.size());
    for (const Generator* g : parts)
        copy.push_back(*g);
    return sync(std::span<const Generator>(copy));
}

Generator allevents(const Generator& g) {
    std::vector<Transition> trans;
    for (const Event& e : g.alphabet())
        trans.push_back({0, e.id, 0});
    return Generator("allevents(" + g.name() + ")", g.alphabet(), 1, 0, {0}, std::move(trans));
}

DerivedGenerator canonical_renumber(const Generator& g) {
    std::vector<char> reach = reachable_mask(g);
    if (std::count(reach.begin(), reach.end(), 1) != static_cast<long>(g.state_count()))
        throw InputError("canonical_renumber: generator '" + g.name() +
                         "' has unreachable states");
    std::vector<char> keep(g.state_count(), 1);
    return restrict_and_renumber(g, keep, g.name());
}

LanguageSample language_sample(const Generator& g, std::size_t max_len) {
    LanguageSample out;
    if (g.is_empty())
        return out;

    std::vector<std::pair<StateId, Word>> layer{{g.initial(), {}}};
    out.strings.insert(Word{});
    if (g.is_marked(g.initial()))
        out.marked.insert(Word{});
    for (std::size_t len = 0; len < max_len && !layer.empty(); ++len) {
        std::vector<std::pair<StateId, Word>> next;
        for (const auto& [q, w] : layer) {
            for (const auto& [e, t] : g.transitions_from(q)) {
                Word w2 = w;
                w2.push_back(e);
                out.strings.insert(w2);
                if (g.is_marked(t))
                    out.marked.insert(w2);
                next.emplace_back(t, std::move(w2));
            }
        }
        layer = std::move(next);
    }
    return out;
}

std::optional<StateId> replay(const Generator& g, const Word& word) {
    if (g.is_empty())
        return std::nullopt;
    StateId q = g.initial();
    for (EventId e : word) {
        auto t = g.target(q, e);
        if (!t)
            return std::nullopt;
        q = *t;
    }
    return q;
}

} // namespace rsup
