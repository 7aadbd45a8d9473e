#include "rsup/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rsup {

namespace {

using nlohmann::json;

std::string join_ids(const std::vector<EventId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string word_text(const Word& w) {
    if (w.empty())
        return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += " ";
        out += std::to_string(w[i]);
    }
    return out;
}

std::string step_text(const StepJustification& j) {
    std::string out = to_string(j.condition);
    if (!j.disable.empty())
        out += " disable {" + join_ids(j.disable) + "}";
    for (const auto& [preemptor, preempted] : j.preemptions)
        out += " preempt " + std::to_string(preempted) + " by " + std::to_string(preemptor);
    for (const auto& [u, c] : j.alternates)
        out += " alternate <" + std::to_string(u) + "," + std::to_string(c) + ">";
    return out;
}

json step_json(const StepJustification& j) {
    json out;
    out["condition"] = to_string(j.condition);
    out["disable"] = j.disable;
    out["preemptions"] = json::array();
    for (const auto& [preemptor, preempted] : j.preemptions)
        out["preemptions"].push_back({preemptor, preempted});
    out["alternates"] = json::array();
    for (const auto& [u, c] : j.alternates)
        out["alternates"].push_back({u, c});
    return out;
}

json action_json(const FinalAction& a) {
    json out;
    out["disable"] = a.disable;
    out["force"] = a.force;
    out["preempting"] = a.preempted;
    return out;
}

std::string action_text(const FinalAction& a) {
    std::string out = "disable {" + join_ids(a.disable) + "}; force " + std::to_string(a.force) +
                      " preempting {" + join_ids(a.preempted) + "}";
    return out;
}

/// Flattened view: all paths of all targets, shortest first.
std::vector<std::pair<const TargetOutcome*, const ForciblePath*>>
flatten(const EventSolveResult& r) {
    std::vector<std::pair<const TargetOutcome*, const ForciblePath*>> all;
    for (const TargetOutcome& t : r.targets)
        for (const ForciblePath& p : t.paths.paths)
            all.emplace_back(&t, &p);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.second->events.size() != b.second->events.size())
            return a.second->events.size() < b.second->events.size();
        if (a.second->events != b.second->events)
            return a.second->events < b.second->events;
        return a.first->target < b.first->target;
    });
    return all;
}

} // namespace

SynthesisSummary summarize(const Generator& plant, const Generator& spec,
                           const SupconResult& result) {
    SynthesisSummary s;
    s.plant_name = plant.name();
    s.spec_name = spec.name();
    s.plant_states = plant.state_count();
    s.spec_states = spec.state_count();
    s.supervisor_states = result.supervisor.state_count();
    s.supervisor_transitions = result.supervisor.transition_count();
    s.empty = result.supervisor.is_empty();
    s.controllable = is_controllable(plant, result.supervisor).controllable;
    return s;
}

std::string summary_text(const SynthesisSummary& s) {
    std::ostringstream out;
    out << "plant:       " << s.plant_name << " (" << s.plant_states << " states)\n";
    out << "spec:        " << s.spec_name << " (" << s.spec_states << " states)\n";
    out << "supervisor:  " << s.supervisor_states << " states, " << s.supervisor_transitions
        << " transitions (\"events\" in TCT terminology)\n";
    out << "controllable: " << (s.controllable ? "yes" : "NO") << "\n";
    if (s.empty)
        out << "warning: the supervisor is empty\n";
    return out.str();
}

std::string summary_json(const SynthesisSummary& s) {
    json out;
    out["plant"] = {{"name", s.plant_name}, {"states", s.plant_states}};
    out["spec"] = {{"name", s.spec_name}, {"states", s.spec_states}};
    out["supervisor"] = {{"states", s.supervisor_states},
                         {"transitions", s.supervisor_transitions},
                         {"controllable", s.controllable},
                         {"empty", s.empty}};
    return out.dump(2) + "\n";
}

std::string solve_report_text(const SolveReportInput& in) {
    std::ostringstream out;
    out << "verdict: " << (in.result.solvable ? "SOLVABLE" : "UNSOLVABLE") << "\n";
    out << "event: " << in.event << "\n";
    out << "source: state " << in.source;
    if (in.witness_given)
        out << " (witness: " << word_text(in.witness) << ")";
    out << "\n";
    if (!in.result.reason.empty())
        out << "reason: " << in.result.reason << "\n";
    out << "targets: " << in.result.targets.size() << " state(s) where event " << in.event
        << " is enabled\n";
    for (const TargetOutcome& t : in.result.targets) {
        out << "target state " << t.target << ": "
            << (t.solvable ? "solvable" : "unsolvable") << ", " << t.paths.paths.size()
            << " path(s)\n";
        out << "  control action at target: " << action_text(t.action) << "\n";
    }
    auto all = flatten(in.result);
    std::size_t n = 0;
    for (const auto& [t, p] : all) {
        out << "path " << ++n << " (length " << p->events.size() << ", to state " << t->target
            << "): " << word_text(p->events) << "\n";
        out << "  states: ";
        for (std::size_t i = 0; i < p->states.size(); ++i)
            out << (i ? " " : "") << p->states[i];
        out << "\n";
        for (std::size_t i = 0; i < p->steps.size(); ++i)
            out << "  step " << (i + 1) << ": " << p->events[i] << "  ["
                << step_text(p->steps[i]) << "]\n";
    }
    return out.str();
}

std::string solve_report_json(const SolveReportInput& in) {
    json out;
    out["verdict"] = in.result.solvable ? "SOLVABLE" : "UNSOLVABLE";
    out["event"] = in.event;
    out["source"] = in.source;
    if (in.witness_given)
        out["witness"] = in.witness;
    if (!in.result.reason.empty())
        out["reason"] = in.result.reason;
    out["targets"] = json::array();
    for (const TargetOutcome& t : in.result.targets) {
        json jt;
        jt["state"] = t.target;
        jt["solvable"] = t.solvable;
        jt["action"] = action_json(t.action);
        jt["paths"] = json::array();
        for (const ForciblePath& p : t.paths.paths) {
            json jp;
            jp["events"] = p.events;
            jp["states"] = p.states;
            jp["steps"] = json::array();
            for (const StepJustification& s : p.steps)
                jp["steps"].push_back(step_json(s));
            jt["paths"].push_back(jp);
        }
        out["targets"].push_back(jt);
    }
    return out.dump(2) + "\n";
}

} // namespace rsup
