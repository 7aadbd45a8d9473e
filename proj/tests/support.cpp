#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rsup::test {

Event ev(EventId id, bool controllable, bool forcible) {
    return Event{id, "", controllable, forcible};
}

Generator make_gen(const std::string& name, const std::vector<Event>& events, StateId states,
                   StateId initial, std::vector<StateId> marked,
                   std::vector<Transition> transitions) {
    return Generator(name, Alphabet(events), states, initial, std::move(marked),
                     std::move(transitions));
}

bool canonically_equal(const Generator& a, const Generator& b) {
    return canonical_renumber(a).generator.same_structure(canonical_renumber(b).generator);
}

bool sample_subset(const LanguageSample& a, const LanguageSample& b) {
    return std::includes(b.strings.begin(), b.strings.end(), a.strings.begin(),
                         a.strings.end()) &&
           std::includes(b.marked.begin(), b.marked.end(), a.marked.begin(), a.marked.end());
}

LanguageSample tuple_sync_sample(std::span<const Generator> parts, std::size_t max_len) {
    LanguageSample out;
    for (const Generator& g : parts)
        if (g.is_empty())
            return out;

    std::set<EventId> alphabet;
    for (const Generator& g : parts)
        for (const Event& e : g.alphabet())
            alphabet.insert(e.id);

    using Tuple = std::vector<StateId>;
    auto marked = [&](const Tuple& t) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!parts[i].is_marked(t[i]))
                return false;
        return true;
    };
    auto step = [&](const Tuple& t, EventId e) -> std::optional<Tuple> {
        Tuple next = t;
        bool owned = false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!parts[i].alphabet().contains(e))
                continue;
            owned = true;
            auto q = parts[i].target(t[i], e);
            if (!q)
                return std::nullopt;
            next[i] = *q;
        }
        if (!owned)
            return std::nullopt;
        return next;
    };

    Tuple init;
    for (const Generator& g : parts)
        init.push_back(g.initial());

    std::vector<std::pair<Tuple, Word>> layer{{init, {}}};
    out.strings.insert(Word{});
    if (marked(init))
        out.marked.insert(Word{});
    for (std::size_t len = 0; len < max_len && !layer.empty(); ++len) {
        std::vector<std::pair<Tuple, Word>> next_layer;
        for (const auto& [t, w] : layer) {
            for (EventId e : alphabet) {
                auto next = step(t, e);
                if (!next)
                    continue;
                Word w2 = w;
                w2.push_back(e);
                out.strings.insert(w2);
                if (marked(*next))
                    out.marked.insert(w2);
                next_layer.emplace_back(std::move(*next), std::move(w2));
            }
        }
        layer = std::move(next_layer);
    }
    return out;
}

Generator random_generator(std::mt19937& rng, const std::string& name,
                           const RandomGenOptions& opts, const Alphabet* alphabet) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    Alphabet events;
    if (alphabet) {
        // Random non-empty subset of the given alphabet.
        std::vector<Event> all(alphabet->begin(), alphabet->end());
        std::vector<Event> chosen;
        for (const Event& e : all)
            if (coin(rng) < 0.7)
                chosen.push_back(e);
        if (chosen.empty())
            chosen.push_back(all[rng() % all.size()]);
        events = Alphabet(chosen);
    } else {
        std::uniform_int_distribution<int> n_events(1, opts.max_events);
        int n = n_events(rng);
        for (int i = 0; i < n; ++i)
            events.insert(Event{static_cast<EventId>(i + 1), "", coin(rng) < 0.5,
                                coin(rng) < opts.forcible_chance});
    }

    std::uniform_int_distribution<StateId> n_states(1, opts.max_states);
    StateId states = n_states(rng);
    std::uniform_int_distribution<StateId> pick(0, states - 1);

    std::vector<Transition> trans;
    for (StateId q = 0; q < states; ++q)
        for (const Event& e : events)
            if (coin(rng) < opts.density)
                trans.push_back({q, e.id, pick(rng)});

    std::vector<StateId> marked;
    for (StateId q = 0; q < states; ++q)
        if (coin(rng) < opts.marked_chance)
            marked.push_back(q);

    return Generator(name, events, states, 0, std::move(marked), std::move(trans));
}

PreemptionRelation random_preemption(std::mt19937& rng, const Alphabet& alphabet) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    PreemptionRelation pr;
    for (const Event& f : alphabet) {
        if (!f.forcible)
            continue;
        for (const Event& other : alphabet)
            if (other.id != f.id && coin(rng) < 0.4)
                pr.pairs.insert({f.id, other.id});
    }
    return pr;
}

namespace {

Generator make_m1() {
    return make_gen("M1",
                    {Event{11, "m1_take", true, false}, Event{12, "m1_break", false, false},
                     Event{13, "m1_repair", true, false}, Event{30, "m1_fill_buf1", false, false},
                     Event{32, "m1_fill_buf2", false, false}},
                    3, 0, {0},
                    {{0, 11, 1}, {1, 30, 0}, {1, 32, 0}, {1, 12, 2}, {2, 13, 0}});
}

Generator make_m2() {
    return make_gen("M2",
                    {Event{20, "m2_finish", false, false}, Event{22, "m2_break", false, false},
                     Event{23, "m2_repair", true, false}, Event{31, "m2_take_buf1", true, false},
                     Event{33, "m2_take_buf2", true, false}},
                    3, 0, {0},
                    {{0, 31, 1}, {0, 33, 1}, {1, 20, 0}, {1, 22, 2}, {2, 23, 0}});
}

Generator make_buf1() {
    return make_gen("BUF1",
                    {Event{30, "m1_fill_buf1", false, false},
                     Event{31, "m2_take_buf1", true, false}},
                    4, 0, {0},
                    {{0, 30, 1}, {1, 30, 2}, {2, 30, 3}, {1, 31, 0}, {2, 31, 1}, {3, 31, 2}});
}

Generator make_buf2() {
    return make_gen("BUF2",
                    {Event{32, "m1_fill_buf2", false, false},
                     Event{33, "m2_take_buf2", true, false}},
                    2, 0, {0}, {{0, 32, 1}, {1, 33, 0}});
}

Generator make_buf1_prot() {
    return make_gen("BUF1_PROT",
                    {Event{30, "m1_fill_buf1", false, false},
                     Event{31, "m2_take_buf1", true, false},
                     Event{91, "reconfigure_to_c2", true, true}},
                    4, 0, {0},
                    {{0, 30, 1}, {1, 30, 2}, {2, 30, 3}, {1, 31, 0}, {2, 31, 1}, {3, 31, 2},
                     {0, 91, 0}});
}

Generator make_buf2_prot() {
    return make_gen("BUF2_PROT",
                    {Event{32, "m1_fill_buf2", false, false},
                     Event{33, "m2_take_buf2", true, false},
                     Event{93, "reconfigure_to_c1", true, true}},
                    2, 0, {0}, {{0, 32, 1}, {1, 33, 0}, {0, 93, 0}});
}

} // namespace

std::vector<Generator> SmallFactory::pool() const {
    return {m1, m2, buf1, buf2};
}

std::vector<Generator> SmallFactory::plant() const {
    return {m1, m2};
}

std::vector<Configuration> SmallFactory::configs() const {
    return {{"C1", {"M1", "M2", "BUF1"}}, {"C2", {"M1", "M2", "BUF2"}}};
}

std::vector<SwitchEvent> SmallFactory::switches() const {
    return {{Event{91, "reconfigure_to_c2", true, true}, "C1", "C2"},
            {Event{93, "reconfigure_to_c1", true, true}, "C2", "C1"}};
}

ReconfigSpec SmallFactory::rs(const RsOptions& opts) const {
    auto p = pool();
    auto c = configs();
    auto s = switches();
    return build_rs(p, c, s, "C1", opts);
}

Generator SmallFactory::behavioral_spec() const {
    return sync({&buf1_prot, &buf2_prot}).generator;
}

SupconResult SmallFactory::build() const {
    auto parts = plant();
    return build_rsup(parts, rs(), behavioral_spec());
}

SmallFactory small_factory() {
    return {make_m1(), make_m2(), make_buf1(), make_buf2(), make_buf1_prot(), make_buf2_prot()};
}

Word witness_state41() {
    return {11, 30, 31, 22, 11, 30, 11, 30, 11, 30};
}

Word witness_state9() {
    return {11, 30, 31};
}

std::string fixture_dir() {
    return RSUP_FIXTURE_DIR;
}

} // namespace rsup::test
