#ifndef RSUP_SOLVABILITY_HPP
#define RSUP_SOLVABILITY_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "rsup/generator.hpp"

namespace rsup {

/// The binary relation pr(preemptor, preempted): the forcible preemptor can
/// occur before, and thereby block, the preempted event.
struct PreemptionRelation {
    std::set<std::pair<EventId, EventId>> pairs;

    bool preempts(EventId preemptor, EventId preempted) const {
        return pairs.count({preemptor, preempted}) != 0;
    }

    /// Every forcible event preempts every uncontrollable one.
    static PreemptionRelation defaults_for(const Alphabet& alphabet);

    /// Checks that every preemptor is a forcible event of the alphabet and
    /// that both sides are known ids; throws InputError otherwise.
    void validate_against(const Alphabet& alphabet) const;

    friend bool operator==(const PreemptionRelation&, const PreemptionRelation&) = default;
};

/// One backtracking step under consideration: from q_i to the current target
/// q_r. `entering` is Sigma_i (events q_i -> q_r, never empty); the competing
/// events defined at q_i are split by controllability.
struct BacktrackContext {
    StateId from = 0;
    StateId target = 0;
    std::vector<EventId> entering;
    std::vector<EventId> competing_controllable;
    std::vector<EventId> competing_uncontrollable;

    bool competing_empty() const {
        return competing_controllable.empty() && competing_uncontrollable.empty();
    }
};

/// Builds the context for a backtracking step; throws InputError when no
/// event leads from `from` to `target`.
BacktrackContext backtrack_context(const Generator& sup, StateId from, StateId target);

/// BFC-1: no event competes with the step at q_i.
bool bfc1(const BacktrackContext& ctx);

/// BFC-2: there are competing events and all of them are controllable.
bool bfc2(const BacktrackContext& ctx);

/// BFC-3 for the entering event `sigma`: no competing event preempts sigma,
/// and every uncontrollable competitor is preemptable by some competitor.
bool bfc3(const BacktrackContext& ctx, EventId sigma, const PreemptionRelation& pr);

struct Bfc4Result {
    bool holds = false;
    /// The qualifying two-step detours (sigma', sigma''): sigma' is the
    /// uncontrollable competitor, sigma'' leads from its successor to the target.
    std::vector<std::pair<EventId, EventId>> alternates;

    explicit operator bool() const { return holds; }
};

/// BFC-4: some uncontrollable competitor leads to a state q_j whose events
/// are all controllable and from which the target is directly reachable;
/// such a detour recovers the step.
Bfc4Result bfc4(const Generator& sup, const BacktrackContext& ctx);

enum class Bfc : int { bfc1 = 1, bfc2 = 2, bfc3 = 3, bfc4 = 4 };

const char* to_string(Bfc condition);

/// Why one backtracking step is forcible, and the control actions that
/// enforce it.
struct StepJustification {
    Bfc condition = Bfc::bfc1;
    /// Controllable competitors to disable at q_i.
    std::vector<EventId> disable;
    /// (preemptor, preempted) pairs covering the uncontrollable competitors (BFC-3).
    std::vector<std::pair<EventId, EventId>> preemptions;
    /// Two-step detours attached by BFC-4.
    std::vector<std::pair<EventId, EventId>> alternates;

    friend bool operator==(const StepJustification&, const StepJustification&) = default;
};

/// Evaluates the BFC disjunction in the fixed order 1,2,3,4 for the entering
/// event `sigma` and returns the first satisfied condition with its actions,
/// or nullopt when none holds. `sigma` must be in ctx.entering.
std::optional<StepJustification> step_forcible(const Generator& sup, const BacktrackContext& ctx,
                                               EventId sigma, const PreemptionRelation& pr);

/// A forcible path from the source state to the RE source state, with the
/// per-step authorizations in forward order.
struct ForciblePath {
    Word events;
    std::vector<StateId> states; // events.size() + 1 entries, source first
    std::vector<StepJustification> steps;

    friend bool operator==(const ForciblePath&, const ForciblePath&) = default;
};

/// Paths sorted by length, then lexicographically by event ids.
struct PathCollection {
    std::vector<ForciblePath> paths;

    bool empty() const { return paths.empty(); }

    friend bool operator==(const PathCollection&, const PathCollection&) = default;
};

enum class PcaMode {
    /// Every cycle-free forcible path (per-branch visited set).
    all_simple,
    /// Global visited set: each state consumed once across the whole
    /// search; a subset of all_simple.
    paper_literal,
};

/// Backward path collection from q_r: a predecessor step is taken only when
/// step_forcible authorizes it; paths terminate at q_s. An empty collection
/// means the reconfiguration is unsolvable from q_s.
PathCollection collect_paths(const Generator& sup, StateId q_r, StateId q_s,
                             const PreemptionRelation& pr, PcaMode mode = PcaMode::all_simple);

struct SolveResult {
    bool solvable = false;
    PathCollection paths;
};

/// Reconfiguration solvability for one target state (q_r != q_s; equal states
/// throw std::domain_error).
SolveResult solve(const Generator& sup, StateId q_r, StateId q_s, const PreemptionRelation& pr,
                  PcaMode mode = PcaMode::all_simple);

/// The control action executing the reconfiguration event at its source
/// state: disable the other controllable events, force sigma_r, preempting
/// the uncontrollable ones.
struct FinalAction {
    std::vector<EventId> disable;
    EventId force = 0;
    std::vector<EventId> preempted;

    friend bool operator==(const FinalAction&, const FinalAction&) = default;
};

FinalAction final_action(const Generator& sup, StateId q_r, EventId sigma_r);

struct TargetOutcome {
    StateId target = 0;
    bool solvable = false;
    PathCollection paths;
    FinalAction action;
};

struct EventSolveResult {
    bool solvable = false;
    std::string reason; // set when unsolvable without any target
    std::vector<TargetOutcome> targets;
};

/// Solves for every state where sigma_r is enabled. If sigma_r is enabled at
/// q_s itself the zero-length path solves it immediately. SOLVABLE iff any
/// target is solvable; an event enabled nowhere is UNSOLVABLE with a reason.
EventSolveResult solve_event(const Generator& sup, StateId q_s, EventId sigma_r,
                             const PreemptionRelation& pr, PcaMode mode = PcaMode::all_simple);

/// Independent brute-force oracle: depth-first enumeration of all simple
/// forward paths q_s -> q_r, each step filtered through step_forcible.
/// Matches collect_paths in all_simple mode. Refuses supervisors with more
/// than 200 states.
PathCollection oracle_enumerate(const Generator& sup, StateId q_r, StateId q_s,
                                const PreemptionRelation& pr);

} // namespace rsup

#endif
