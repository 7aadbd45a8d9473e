#include "rsup/solvability.hpp"

#include <algorithm>
#include <functional>

#include "rsup/errors.hpp"

namespace rsup {

namespace {

void check_state(const Generator& g, StateId q, const char* what) {
    if (q >= g.state_count())
        throw std::out_of_range(std::string(what) + " state " + std::to_string(q) +
                                " out of range");
}

/// Sigma^i as one ascending sequence.
std::vector<EventId> all_competing(const BacktrackContext& ctx) {
    std::vector<EventId> all;
    all.reserve(ctx.competing_controllable.size() + ctx.competing_uncontrollable.size());
    std::merge(ctx.competing_controllable.begin(), ctx.competing_controllable.end(),
               ctx.competing_uncontrollable.begin(), ctx.competing_uncontrollable.end(),
               std::back_inserter(all));
    return all;
}

bool path_less(const ForciblePath& a, const ForciblePath& b) {
    if (a.events.size() != b.events.size())
        return a.events.size() < b.events.size();
    return a.events < b.events;
}

void sort_paths(PathCollection& c) {
    std::sort(c.paths.begin(), c.paths.end(), path_less);
}

/// Unique predecessor states per target state, ascending.
std::vector<std::vector<StateId>> predecessor_table(const Generator& sup) {
    std::vector<std::vector<StateId>> preds(sup.state_count());
    for (StateId q = 0; q < sup.state_count(); ++q)
        for (const auto& [e, t] : sup.transitions_from(q))
            preds[t].push_back(q);
    for (auto& row : preds) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return preds;
}

ForciblePath extend(StateId from, EventId sigma, const StepJustification& j,
                    const ForciblePath& suffix) {
    ForciblePath p;
    p.events.reserve(suffix.events.size() + 1);
    p.events.push_back(sigma);
    p.events.insert(p.events.end(), suffix.events.begin(), suffix.events.end());
    p.states.reserve(suffix.states.size() + 1);
    p.states.push_back(from);
    p.states.insert(p.states.end(), suffix.states.begin(), suffix.states.end());
    p.steps.reserve(suffix.steps.size() + 1);
    p.steps.push_back(j);
    p.steps.insert(p.steps.end(), suffix.steps.begin(), suffix.steps.end());
    return p;
}

} // namespace

PreemptionRelation PreemptionRelation::defaults_for(const Alphabet& alphabet) {
    PreemptionRelation pr;
    for (const Event& f : alphabet) {
        if (!f.forcible)
            continue;
        for (const Event& u : alphabet)
            if (!u.controllable && u.id != f.id)
                pr.pairs.insert({f.id, u.id});
    }
    return pr;
}

void PreemptionRelation::validate_against(const Alphabet& alphabet) const {
    for (const auto& [preemptor, preempted] : pairs) {
        const Event& p = alphabet.at(preemptor);
        alphabet.at(preempted);
        if (!p.forcible)
            throw InputError("preemption relation: event " + std::to_string(preemptor) +
                             " is not forcible and cannot preempt");
    }
}

BacktrackContext backtrack_context(const Generator& sup, StateId from, StateId target) {
    check_state(sup, from, "context");
    check_state(sup, target, "context");
    BacktrackContext ctx;
    ctx.from = from;
    ctx.target = target;
    for (const auto& [e, t] : sup.transitions_from(from)) {
        if (t == target) {
            ctx.entering.push_back(e);
        } else if (sup.alphabet().at(e).controllable) {
            ctx.competing_controllable.push_back(e);
        } else {
            ctx.competing_uncontrollable.push_back(e);
        }
    }
    if (ctx.entering.empty())
        throw InputError("backtrack_context: no transition from state " + std::to_string(from) +
                         " to state " + std::to_string(target));
    return ctx;
}

bool bfc1(const BacktrackContext& ctx) {
    return ctx.competing_empty();
}

bool bfc2(const BacktrackContext& ctx) {
    return !ctx.competing_empty() && ctx.competing_uncontrollable.empty();
}

bool bfc3(const BacktrackContext& ctx, EventId sigma, const PreemptionRelation& pr) {
    for (EventId c : all_competing(ctx))
        if (pr.preempts(c, sigma))
            return false;
    for (EventId u : ctx.competing_uncontrollable) {
        bool covered = false;
        for (EventId c : all_competing(ctx))
            if (pr.preempts(c, u)) {
                covered = true;
                break;
            }
        if (!covered)
            return false;
    }
    return true;
}

Bfc4Result bfc4(const Generator& sup, const BacktrackContext& ctx) {
    Bfc4Result result;
    for (EventId u : ctx.competing_uncontrollable) {
        StateId q_j = *sup.target(ctx.from, u);
        bool all_controllable = true;
        std::vector<EventId> sigma_j;
        for (const auto& [e, t] : sup.transitions_from(q_j)) {
            if (!sup.alphabet().at(e).controllable) {
                all_controllable = false;
                break;
            }
            if (t == ctx.target)
                sigma_j.push_back(e);
        }
        if (all_controllable && !sigma_j.empty()) {
            result.holds = true;
            for (EventId e : sigma_j)
                result.alternates.emplace_back(u, e);
        }
    }
    return result;
}

const char* to_string(Bfc condition) {
    switch (condition) {
    case Bfc::bfc1: return "BFC-1";
    case Bfc::bfc2: return "BFC-2";
    case Bfc::bfc3: return "BFC-3";
    case Bfc::bfc4: return "BFC-4";
    }
    return "?";
}

std::optional<StepJustification> step_forcible(const Generator& sup, const BacktrackContext& ctx,
                                               EventId sigma, const PreemptionRelation& pr) {
    if (!std::binary_search(ctx.entering.begin(), ctx.entering.end(), sigma))
        throw InputError("step_forcible: event " + std::to_string(sigma) +
                         " does not enter the target state");

    if (bfc1(ctx))
        return StepJustification{Bfc::bfc1, {}, {}, {}};

    if (bfc2(ctx))
        return StepJustification{Bfc::bfc2, ctx.competing_controllable, {}, {}};

    if (bfc3(ctx, sigma, pr)) {
        StepJustification j;
        j.condition = Bfc::bfc3;
        std::vector<EventId> competing = all_competing(ctx);
        std::set<EventId> cited;
        for (EventId u : ctx.competing_uncontrollable)
            for (EventId c : competing)
                if (pr.preempts(c, u)) {
                    j.preemptions.emplace_back(c, u);
                    cited.insert(c);
                    break;
                }
        for (EventId c : ctx.competing_controllable)
            if (!cited.count(c))
                j.disable.push_back(c);
        return j;
    }

    if (Bfc4Result r4 = bfc4(sup, ctx))
        return StepJustification{Bfc::bfc4, ctx.competing_controllable, {},
                                 std::move(r4.alternates)};

    return std::nullopt;
}

PathCollection collect_paths(const Generator& sup, StateId q_r, StateId q_s,
                             const PreemptionRelation& pr, PcaMode mode) {
    check_state(sup, q_r, "target");
    check_state(sup, q_s, "source");
    if (q_r == q_s)
        throw std::domain_error("collect_paths: source and target state coincide");

    PathCollection result;
    std::vector<std::vector<StateId>> preds = predecessor_table(sup);

    if (mode == PcaMode::all_simple) {
        std::vector<char> onpath(sup.state_count(), 0);
        onpath[q_r] = 1;

        std::function<void(StateId, const ForciblePath&)> dfs = [&](StateId t,
                                                                    const ForciblePath& suffix) {
            for (StateId q_i : preds[t]) {
                if (q_i == q_s) {
                    BacktrackContext ctx = backtrack_context(sup, q_s, t);
                    for (EventId sigma : ctx.entering)
                        if (auto j = step_forcible(sup, ctx, sigma, pr))
                            result.paths.push_back(extend(q_s, sigma, *j, suffix));
                    continue;
                }
                if (onpath[q_i])
                    continue;
                BacktrackContext ctx = backtrack_context(sup, q_i, t);
                for (EventId sigma : ctx.entering) {
                    if (auto j = step_forcible(sup, ctx, sigma, pr)) {
                        onpath[q_i] = 1;
                        dfs(q_i, extend(q_i, sigma, *j, suffix));
                        onpath[q_i] = 0;
                    }
                }
            }
        };

        ForciblePath seed;
        seed.states.push_back(q_r);
        dfs(q_r, seed);
    } else {
        // Global state list: each state consumed once across the whole
        // search, first authorized event per predecessor.
        std::vector<char> available(sup.state_count(), 1);
        available[q_r] = 0;

        std::function<void(StateId, const ForciblePath&)> dfs = [&](StateId t,
                                                                    const ForciblePath& suffix) {
            for (StateId q_i : preds[t]) {
                if (!available[q_i])
                    continue;
                BacktrackContext ctx = backtrack_context(sup, q_i, t);
                if (q_i == q_s) {
                    bool completed = false;
                    for (EventId sigma : ctx.entering)
                        if (auto j = step_forcible(sup, ctx, sigma, pr)) {
                            result.paths.push_back(extend(q_s, sigma, *j, suffix));
                            completed = true;
                        }
                    if (completed)
                        available[q_s] = 0;
                    continue;
                }
                for (EventId sigma : ctx.entering) {
                    if (auto j = step_forcible(sup, ctx, sigma, pr)) {
                        available[q_i] = 0;
                        dfs(q_i, extend(q_i, sigma, *j, suffix));
                        break;
                    }
                }
            }
        };

        ForciblePath seed;
        seed.states.push_back(q_r);
        dfs(q_r, seed);
    }

    sort_paths(result);
    return result;
}

SolveResult solve(const Generator& sup, StateId q_r, StateId q_s, const PreemptionRelation& pr,
                  PcaMode mode) {
    check_state(sup, q_r, "target");
    check_state(sup, q_s, "source");
    if (q_r == q_s)
        throw std::domain_error("solve: source and target state coincide");
    PathCollection paths = collect_paths(sup, q_r, q_s, pr, mode);
    bool solvable = !paths.empty();
    return {solvable, std::move(paths)};
}

FinalAction final_action(const Generator& sup, StateId q_r, EventId sigma_r) {
    check_state(sup, q_r, "target");
    if (!sup.defines(q_r, sigma_r))
        throw InputError("final_action: event " + std::to_string(sigma_r) +
                         " is not enabled at state " + std::to_string(q_r));
    FinalAction action;
    action.force = sigma_r;
    for (const auto& [e, t] : sup.transitions_from(q_r)) {
        if (e == sigma_r)
            continue;
        if (sup.alphabet().at(e).controllable)
            action.disable.push_back(e);
        else
            action.preempted.push_back(e);
    }
    return action;
}

EventSolveResult solve_event(const Generator& sup, StateId q_s, EventId sigma_r,
                             const PreemptionRelation& pr, PcaMode mode) {
    check_state(sup, q_s, "source");
    if (!sup.alphabet().contains(sigma_r))
        throw InputError("solve_event: event " + std::to_string(sigma_r) +
                         " is not in the supervisor alphabet");

    EventSolveResult result;
    std::vector<StateId> targets;
    for (StateId q = 0; q < sup.state_count(); ++q)
        if (sup.defines(q, sigma_r))
            targets.push_back(q);
    if (targets.empty()) {
        result.reason = "event nowhere enabled";
        return result;
    }

    for (StateId q_r : targets) {
        TargetOutcome outcome;
        outcome.target = q_r;
        outcome.action = final_action(sup, q_r, sigma_r);
        if (q_r == q_s) {
            // Reconfigure immediately: the zero-length path.
            ForciblePath empty_path;
            empty_path.states.push_back(q_s);
            outcome.solvable = true;
            outcome.paths.paths.push_back(std::move(empty_path));
        } else {
            SolveResult s = solve(sup, q_r, q_s, pr, mode);
            outcome.solvable = s.solvable;
            outcome.paths = std::move(s.paths);
        }
        result.solvable = result.solvable || outcome.solvable;
        result.targets.push_back(std::move(outcome));
    }
    if (!result.solvable)
        result.reason = "no forcible path to any source state of the event";
    return result;
}

PathCollection oracle_enumerate(const Generator& sup, StateId q_r, StateId q_s,
                                const PreemptionRelation& pr) {
    if (sup.state_count() > 200)
        throw InputError("oracle_enumerate: supervisor too large for the brute-force oracle");
    check_state(sup, q_r, "target");
    check_state(sup, q_s, "source");
    if (q_r == q_s)
        throw std::domain_error("oracle_enumerate: source and target state coincide");

    PathCollection result;
    std::vector<char> onpath(sup.state_count(), 0);
    onpath[q_s] = 1;

    ForciblePath partial;
    partial.states.push_back(q_s);

    std::function<void(StateId)> dfs = [&](StateId q) {
        for (const auto& [e, t] : sup.transitions_from(q)) {
            BacktrackContext ctx = backtrack_context(sup, q, t);
            auto j = step_forcible(sup, ctx, e, pr);
            if (!j)
                continue;
            partial.events.push_back(e);
            partial.states.push_back(t);
            partial.steps.push_back(*j);
            if (t == q_r) {
                result.paths.push_back(partial);
            } else if (!onpath[t]) {
                onpath[t] = 1;
                dfs(t);
                onpath[t] = 0;
            }
            partial.events.pop_back();
            partial.states.pop_back();
            partial.steps.pop_back();
        }
    };
    dfs(q_s);

    sort_paths(result);
    return result;
}

} // namespace rsup
