#ifndef RSUP_SUPCON_HPP
#define RSUP_SUPCON_HPP

#include <optional>

#include "rsup/ops.hpp"

namespace rsup {

/// Where controllability fails: a reachable (plant, supervisor) state pair at
/// which the plant enables an uncontrollable event the supervisor omits.
struct Counterexample {
    StateId plant_state = 0;
    StateId sup_state = 0;
    EventId event = 0;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ControllabilityResult {
    bool controllable = false;
    std::optional<Counterexample> witness;

    explicit operator bool() const { return controllable; }
};

/// Checks state-wise on the product of plant and sup that no uncontrollable
/// plant-enabled event is ever missing from sup. Requires sup's alphabet to
/// be contained in the plant's (InputError otherwise). The empty supervisor
/// is vacuously controllable.
ControllabilityResult is_controllable(const Generator& plant, const Generator& sup);

/// Output of supcon: the supervisor plus the provenance of its states in the
/// plant and the specification, and the controllable events the plant enables
/// but the supervisor omits, per supervisor state.
struct SupconResult {
    Generator supervisor;
    StateMap plant_map;
    StateMap spec_map;
    std::vector<std::vector<EventId>> disabled;
};

/// Supremal controllable sublanguage of Lm(plant) ∩ Lm(spec) with respect to
/// the plant's uncontrollable events. Both behaviors are composed on the
/// product (the spec synchronizes on its own alphabet, which must be
/// contained in the plant's); the fixpoint alternately deletes product states
/// with an uncontrollable plant-enabled event missing and states that cannot
/// reach a marked state, then restricts to reachable states. The result is
/// trim and controllable; the empty supervisor is a valid output.
SupconResult supcon(const Generator& plant, const Generator& spec);

/// Brute-force supremality oracle: re-adds every product state supcon removed,
/// one at a time, and checks that each addition either violates
/// controllability or nonblocking or contributes no marked behavior.
/// Test-scale only: refuses instances with |plant|*|spec| > 4096.
bool verify_supremality(const Generator& plant, const Generator& spec,
                        const SupconResult& result);

} // namespace rsup

#endif
