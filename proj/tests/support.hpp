#ifndef RSUP_TESTS_SUPPORT_HPP
#define RSUP_TESTS_SUPPORT_HPP

#include <random>

#include "rsup/manifest.hpp"
#include "rsup/ops.hpp"
#include "rsup/reconfig.hpp"
#include "rsup/solvability.hpp"
#include "rsup/supcon.hpp"

namespace rsup::test {

/// Shorthand generator builder; events default to the odd-id-controllable
/// convention, forcible = false.
Generator make_gen(const std::string& name, const std::vector<Event>& events, StateId states,
                   StateId initial, std::vector<StateId> marked,
                   std::vector<Transition> transitions);

Event ev(EventId id, bool controllable, bool forcible = false);

/// Structural equality modulo canonical renumbering (requires both reachable).
bool canonically_equal(const Generator& a, const Generator& b);

/// True iff a's strings/marked sets are contained in b's.
bool sample_subset(const LanguageSample& a, const LanguageSample& b);

/// Language sample of the synchronous product computed directly on state
/// tuples, without building a product automaton. Independent oracle for sync.
LanguageSample tuple_sync_sample(std::span<const Generator> parts, std::size_t max_len);

struct RandomGenOptions {
    StateId max_states = 8;
    int max_events = 5;
    double density = 0.45;       // chance of defining each (state, event)
    double marked_chance = 0.4;  // per state
    double forcible_chance = 0.15;
};

/// Random deterministic generator; the alphabet is drawn from `alphabet` when
/// given (so plant/spec pairs agree on flags), otherwise invented.
Generator random_generator(std::mt19937& rng, const std::string& name,
                           const RandomGenOptions& opts,
                           const Alphabet* alphabet = nullptr);

/// Random preemption relation over the alphabet's forcible events.
PreemptionRelation random_preemption(std::mt19937& rng, const Alphabet& alphabet);

/// The SMALL FACTORY models: two 3-state machines, a 3-slot and a 1-slot
/// buffer, buffer-protection specs gating each switch event at buffer-empty.
struct SmallFactory {
    Generator m1, m2, buf1, buf2, buf1_prot, buf2_prot;

    std::vector<Generator> pool() const;   // M1, M2, BUF1, BUF2
    std::vector<Generator> plant() const;  // M1, M2
    std::vector<Configuration> configs() const;
    std::vector<SwitchEvent> switches() const;
    ReconfigSpec rs(const RsOptions& opts = {}) const;
    Generator behavioral_spec() const;  // BUF1_PROT || BUF2_PROT
    SupconResult build() const;         // the full pipeline's RSUP
};

SmallFactory small_factory();

/// Witness strings locating the reference scenario's states in the RSUP.
Word witness_state41();  // current state: M2 down, BUF1 full
Word witness_state9();   // RE source state: M2 working, buffers empty

/// Directory with the on-disk fixture files (manifest, .gen documents).
std::string fixture_dir();

} // namespace rsup::test

#endif
