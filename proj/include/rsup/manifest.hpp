#ifndef RSUP_MANIFEST_HPP
#define RSUP_MANIFEST_HPP

#include <filesystem>
#include <optional>

#include "rsup/reconfig.hpp"
#include "rsup/solvability.hpp"

namespace rsup {

/// Project manifest: the component pool, configurations, switch events,
/// behavioral specs and solver options of one reconfiguration project.
struct Manifest {
    struct Component {
        std::string name;
        std::filesystem::path file;
    };
    struct Options {
        bool one_way = false;
        std::optional<std::vector<std::string>> marked_configurations;
        PcaMode pca_mode = PcaMode::all_simple;
    };

    std::vector<Component> components;
    /// Component names synchronized into GMode; empty means all.
    std::vector<std::string> plant;
    std::vector<Configuration> configurations;
    std::vector<SwitchEvent> switch_events;
    std::string initial_configuration;
    std::vector<std::filesystem::path> behavioral_specs;
    std::optional<std::filesystem::path> preemption_file;
    Options options;
};

/// Parses a manifest document; relative paths resolve against the manifest's
/// directory. Schema errors and dangling cross-references throw ParseError.
Manifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir,
                        const std::string& origin = "<string>");
Manifest read_manifest(const std::filesystem::path& file);

/// Everything the synthesis pipeline produces for one manifest.
struct Pipeline {
    std::vector<Generator> components;   // pool, manifest order
    std::vector<Generator> plant_parts;  // the subset synced into GMode
    ReconfigSpec rs;
    DerivedGenerator gmode;
    Generator behavioral_spec;  // sync of the manifest's spec files
    SupconResult rsup;
    PreemptionRelation preemption;
    PcaMode pca_mode = PcaMode::all_simple;
};

/// Loads all referenced files, builds the RS, GMode and RSUP.
/// With no behavioral specs the spec defaults to allevents(GMode); with no
/// preemption file the default relation (forcible x uncontrollable) is used.
Pipeline run_pipeline(const Manifest& manifest);

} // namespace rsup

#endif
