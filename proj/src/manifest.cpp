#include "rsup/manifest.hpp"

#include <set>

#include <json.hpp>

#include "rsup/errors.hpp"
#include "rsup/io.hpp"

namespace rsup {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ParseError(origin + ": " + what);
}

std::string get_string(const json& v, const std::string& origin, const std::string& where) {
    if (!v.is_string())
        fail(origin, where + " must be a string");
    return v.get<std::string>();
}

} // namespace

Manifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir,
                        const std::string& origin) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        fail(origin, "not valid JSON");
    if (!doc.is_object())
        fail(origin, "manifest must be a JSON object");
    const std::set<std::string> top = {"components",       "plant",
                                       "configurations",   "switch_events",
                                       "initial_configuration", "behavioral_specs",
                                       "preemption_file",  "options"};
    for (const auto& [key, value] : doc.items())
        if (!top.count(key))
            fail(origin, "unknown field '" + key + "'");
    for (const char* field : {"components", "configurations", "initial_configuration"})
        if (!doc.contains(field))
            fail(origin, std::string("missing field '") + field + "'");

    Manifest m;
    std::set<std::string> component_names;
    if (!doc["components"].is_array())
        fail(origin, "'components' must be an array");
    for (const json& c : doc["components"]) {
        if (!c.is_object() || !c.contains("name") || !c.contains("file"))
            fail(origin, "each component needs 'name' and 'file'");
        for (const auto& [key, value] : c.items())
            if (key != "name" && key != "file")
                fail(origin, "unknown field '" + key + "' in component");
        Manifest::Component comp;
        comp.name = get_string(c["name"], origin, "component name");
        comp.file = base_dir / get_string(c["file"], origin, "component file");
        if (!component_names.insert(comp.name).second)
            fail(origin, "duplicate component '" + comp.name + "'");
        m.components.push_back(std::move(comp));
    }
    if (m.components.empty())
        fail(origin, "'components' must not be empty");

    if (doc.contains("plant")) {
        if (!doc["plant"].is_array())
            fail(origin, "'plant' must be an array of component names");
        for (const json& p : doc["plant"]) {
            std::string name = get_string(p, origin, "plant entry");
            if (!component_names.count(name))
                fail(origin, "plant references unknown component '" + name + "'");
            m.plant.push_back(std::move(name));
        }
        if (m.plant.empty())
            fail(origin, "'plant' must not be empty when present");
    }

    if (!doc["configurations"].is_array())
        fail(origin, "'configurations' must be an array");
    std::set<std::string> config_names;
    for (const json& c : doc["configurations"]) {
        if (!c.is_object() || !c.contains("name") || !c.contains("components"))
            fail(origin, "each configuration needs 'name' and 'components'");
        for (const auto& [key, value] : c.items())
            if (key != "name" && key != "components")
                fail(origin, "unknown field '" + key + "' in configuration");
        Configuration cfg;
        cfg.name = get_string(c["name"], origin, "configuration name");
        if (!c["components"].is_array())
            fail(origin, "configuration 'components' must be an array");
        for (const json& member : c["components"]) {
            std::string name = get_string(member, origin, "configuration member");
            if (!component_names.count(name))
                fail(origin,
                     "configuration '" + cfg.name + "' references unknown component '" + name +
                         "'");
            cfg.components.push_back(std::move(name));
        }
        if (!config_names.insert(cfg.name).second)
            fail(origin, "duplicate configuration '" + cfg.name + "'");
        m.configurations.push_back(std::move(cfg));
    }

    if (doc.contains("switch_events")) {
        if (!doc["switch_events"].is_array())
            fail(origin, "'switch_events' must be an array");
        for (const json& s : doc["switch_events"]) {
            if (!s.is_object() || !s.contains("id") || !s.contains("from") || !s.contains("to"))
                fail(origin, "each switch event needs 'id', 'from' and 'to'");
            for (const auto& [key, value] : s.items())
                if (key != "id" && key != "from" && key != "to" && key != "label" &&
                    key != "controllable" && key != "forcible")
                    fail(origin, "unknown field '" + key + "' in switch event");
            SwitchEvent sw;
            if (!s["id"].is_number_unsigned())
                fail(origin, "switch event 'id' must be a non-negative integer");
            sw.event.id = s["id"].get<EventId>();
            sw.event.controllable = true;
            sw.event.forcible = true;
            if (s.contains("label"))
                sw.event.label = get_string(s["label"], origin, "switch event label");
            if (s.contains("controllable")) {
                if (!s["controllable"].is_boolean())
                    fail(origin, "switch event 'controllable' must be a boolean");
                sw.event.controllable = s["controllable"].get<bool>();
            }
            if (s.contains("forcible")) {
                if (!s["forcible"].is_boolean())
                    fail(origin, "switch event 'forcible' must be a boolean");
                sw.event.forcible = s["forcible"].get<bool>();
            }
            sw.from_config = get_string(s["from"], origin, "switch event 'from'");
            sw.to_config = get_string(s["to"], origin, "switch event 'to'");
            if (!config_names.count(sw.from_config) || !config_names.count(sw.to_config))
                fail(origin, "switch event " + std::to_string(sw.event.id) +
                                 " references an unknown configuration");
            m.switch_events.push_back(std::move(sw));
        }
    }

    m.initial_configuration =
        get_string(doc["initial_configuration"], origin, "'initial_configuration'");
    if (!config_names.count(m.initial_configuration))
        fail(origin, "unknown initial configuration '" + m.initial_configuration + "'");

    if (doc.contains("behavioral_specs")) {
        if (!doc["behavioral_specs"].is_array())
            fail(origin, "'behavioral_specs' must be an array");
        for (const json& f : doc["behavioral_specs"])
            m.behavioral_specs.push_back(base_dir /
                                         get_string(f, origin, "behavioral spec file"));
    }

    if (doc.contains("preemption_file"))
        m.preemption_file = base_dir / get_string(doc["preemption_file"], origin,
                                                  "'preemption_file'");

    if (doc.contains("options")) {
        const json& o = doc["options"];
        if (!o.is_object())
            fail(origin, "'options' must be an object");
        for (const auto& [key, value] : o.items())
            if (key != "one_way" && key != "marked_configurations" && key != "pca_mode")
                fail(origin, "unknown field '" + key + "' in options");
        if (o.contains("one_way")) {
            if (!o["one_way"].is_boolean())
                fail(origin, "options.one_way must be a boolean");
            m.options.one_way = o["one_way"].get<bool>();
        }
        if (o.contains("marked_configurations")) {
            if (!o["marked_configurations"].is_array())
                fail(origin, "options.marked_configurations must be an array");
            std::vector<std::string> names;
            for (const json& n : o["marked_configurations"]) {
                std::string name = get_string(n, origin, "marked configuration");
                if (!config_names.count(name))
                    fail(origin, "unknown configuration '" + name +
                                     "' in options.marked_configurations");
                names.push_back(std::move(name));
            }
            m.options.marked_configurations = std::move(names);
        }
        if (o.contains("pca_mode")) {
            std::string mode = get_string(o["pca_mode"], origin, "options.pca_mode");
            if (mode == "all-simple")
                m.options.pca_mode = PcaMode::all_simple;
            else if (mode == "paper-literal")
                m.options.pca_mode = PcaMode::paper_literal;
            else
                fail(origin, "options.pca_mode must be 'all-simple' or 'paper-literal'");
        }
    }
    return m;
}

Manifest read_manifest(const std::filesystem::path& file) {
    return parse_manifest(read_text_file(file), file.parent_path(), file.string());
}

Pipeline run_pipeline(const Manifest& manifest) {
    Pipeline p;
    p.pca_mode = manifest.options.pca_mode;
    for (const Manifest::Component& c : manifest.components) {
        Generator g = read_generator(c.file);
        if (g.name() != c.name)
            throw ParseError(c.file.string() + ": generator name '" + g.name() +
                             "' does not match manifest component '" + c.name + "'");
        p.components.push_back(std::move(g));
    }

    if (manifest.plant.empty()) {
        p.plant_parts = p.components;
    } else {
        for (const std::string& name : manifest.plant)
            for (const Generator& g : p.components)
                if (g.name() == name)
                    p.plant_parts.push_back(g);
    }

    RsOptions opts;
    opts.one_way = manifest.options.one_way;
    opts.marked_configs = manifest.options.marked_configurations;
    p.rs = build_rs(p.components, manifest.configurations, manifest.switch_events,
                    manifest.initial_configuration, opts);

    p.gmode = build_gmode(p.plant_parts, p.rs);

    if (manifest.behavioral_specs.empty()) {
        p.behavioral_spec = allevents(p.gmode.generator);
    } else {
        std::vector<Generator> specs;
        for (const std::filesystem::path& f : manifest.behavioral_specs)
            specs.push_back(read_generator(f));
        p.behavioral_spec = specs.size() == 1
                                ? std::move(specs.front())
                                : sync(std::span<const Generator>(specs)).generator;
    }

    p.rsup = build_rsup(p.plant_parts, p.rs, p.behavioral_spec);

    if (manifest.preemption_file)
        p.preemption = read_preemption(*manifest.preemption_file,
                                       p.rsup.supervisor.alphabet());
    else
        p.preemption = PreemptionRelation::defaults_for(p.rsup.supervisor.alphabet());
    return p;
}

} // namespace rsup
