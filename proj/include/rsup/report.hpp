#ifndef RSUP_REPORT_HPP
#define RSUP_REPORT_HPP

#include <string>

#include "rsup/solvability.hpp"
#include "rsup/supcon.hpp"

namespace rsup {

/// Summary of one synthesis run. "transitions" counts transitions; TCT's
/// summaries call the same number "events".
struct SynthesisSummary {
    std::string plant_name;
    std::string spec_name;
    StateId plant_states = 0;
    StateId spec_states = 0;
    StateId supervisor_states = 0;
    std::size_t supervisor_transitions = 0;
    bool controllable = false;
    bool empty = false;
};

SynthesisSummary summarize(const Generator& plant, const Generator& spec,
                           const SupconResult& result);

std::string summary_text(const SynthesisSummary& s);
std::string summary_json(const SynthesisSummary& s);

/// The solver report for one solve_event run. The source may have been
/// located by a witness string; pass it through for the header.
struct SolveReportInput {
    EventSolveResult result;
    StateId source = 0;
    EventId event = 0;
    Word witness;
    bool witness_given = false;
};

std::string solve_report_text(const SolveReportInput& in);
std::string solve_report_json(const SolveReportInput& in);

} // namespace rsup

#endif
