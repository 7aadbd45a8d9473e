#include "rsup/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rsup/errors.hpp"

namespace rsup {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ParseError(origin + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& origin, const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key))
            fail(origin, "unknown field '" + key + "' in " + where);
}

json parse_json(const std::string& text, const std::string& origin) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        fail(origin, "not valid JSON");
    return doc;
}

std::uint32_t get_u32(const json& v, const std::string& origin, const std::string& where) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffull)
        fail(origin, where + " must be a non-negative integer");
    return v.get<std::uint32_t>();
}

} // namespace

Generator parse_generator(const std::string& text, const std::string& origin) {
    json doc = parse_json(text, origin);
    if (!doc.is_object())
        fail(origin, "generator document must be a JSON object");
    reject_unknown(doc, {"name", "events", "states", "initial", "marked", "transitions"}, origin,
                   "generator document");
    for (const char* field : {"name", "events", "states", "initial", "marked", "transitions"})
        if (!doc.contains(field))
            fail(origin, std::string("missing field '") + field + "'");

    if (!doc["name"].is_string())
        fail(origin, "'name' must be a string");
    std::string name = doc["name"].get<std::string>();

    if (!doc["events"].is_array())
        fail(origin, "'events' must be an array");
    Alphabet alphabet;
    for (const json& ev : doc["events"]) {
        if (!ev.is_object())
            fail(origin, "each event must be an object");
        reject_unknown(ev, {"id", "label", "controllable", "forcible"}, origin, "event");
        if (!ev.contains("id"))
            fail(origin, "event without 'id'");
        Event e;
        e.id = get_u32(ev["id"], origin, "event id");
        if (ev.contains("label")) {
            if (!ev["label"].is_string())
                fail(origin, "event label must be a string");
            e.label = ev["label"].get<std::string>();
        }
        if (ev.contains("controllable")) {
            if (!ev["controllable"].is_boolean())
                fail(origin, "event 'controllable' must be a boolean");
            e.controllable = ev["controllable"].get<bool>();
        } else {
            e.controllable = (e.id % 2) == 1; // odd-id convention
        }
        if (ev.contains("forcible")) {
            if (!ev["forcible"].is_boolean())
                fail(origin, "event 'forcible' must be a boolean");
            e.forcible = ev["forcible"].get<bool>();
        }
        if (alphabet.contains(e.id))
            fail(origin, "duplicate event id " + std::to_string(e.id));
        alphabet.insert(e);
    }

    StateId states = get_u32(doc["states"], origin, "'states'");

    if (states == 0) {
        if (!doc["initial"].is_null())
            fail(origin, "'initial' must be null when 'states' is 0");
        if (!doc["marked"].is_array() || !doc["marked"].empty())
            fail(origin, "'marked' must be empty when 'states' is 0");
        if (!doc["transitions"].is_array() || !doc["transitions"].empty())
            fail(origin, "'transitions' must be empty when 'states' is 0");
        return Generator::empty(name, alphabet);
    }

    StateId initial = get_u32(doc["initial"], origin, "'initial'");

    if (!doc["marked"].is_array())
        fail(origin, "'marked' must be an array");
    std::vector<StateId> marked;
    for (const json& m : doc["marked"])
        marked.push_back(get_u32(m, origin, "marked state"));

    if (!doc["transitions"].is_array())
        fail(origin, "'transitions' must be an array");
    std::vector<Transition> transitions;
    for (const json& t : doc["transitions"]) {
        if (!t.is_array() || t.size() != 3)
            fail(origin, "each transition must be a [from, event, to] triple");
        transitions.push_back({get_u32(t[0], origin, "transition source"),
                               get_u32(t[1], origin, "transition event"),
                               get_u32(t[2], origin, "transition target")});
    }

    try {
        return Generator(std::move(name), std::move(alphabet), states, initial, std::move(marked),
                         std::move(transitions));
    } catch (const InputError& e) {
        fail(origin, e.what());
    }
}

Generator read_generator(const std::filesystem::path& file) {
    return parse_generator(read_text_file(file), file.string());
}

std::string print_generator(const Generator& g) {
    json doc;
    doc["name"] = g.name();
    doc["events"] = json::array();
    for (const Event& e : g.alphabet()) {
        json ev;
        ev["id"] = e.id;
        if (!e.label.empty())
            ev["label"] = e.label;
        ev["controllable"] = e.controllable;
        ev["forcible"] = e.forcible;
        doc["events"].push_back(ev);
    }
    doc["states"] = g.state_count();
    if (g.is_empty())
        doc["initial"] = nullptr;
    else
        doc["initial"] = g.initial();
    doc["marked"] = g.marked();
    doc["transitions"] = json::array();
    for (const Transition& t : g.transitions())
        doc["transitions"].push_back({t.from, t.event, t.to});
    return doc.dump(2) + "\n";
}

void write_generator(const Generator& g, const std::filesystem::path& file) {
    write_text_file(file, print_generator(g));
}

std::string print_state_map(const StateMap& map) {
    json doc;
    doc["sources"] = map.sources;
    doc["map"] = map.rows;
    return doc.dump(2) + "\n";
}

void write_state_map(const StateMap& map, const std::filesystem::path& file) {
    write_text_file(file, print_state_map(map));
}

PreemptionRelation parse_preemption(const std::string& text, const Alphabet& alphabet,
                                    const std::string& origin) {
    json doc = parse_json(text, origin);
    if (!doc.is_object())
        fail(origin, "preemption document must be a JSON object");
    reject_unknown(doc, {"pairs"}, origin, "preemption document");
    if (!doc.contains("pairs") || !doc["pairs"].is_array())
        fail(origin, "'pairs' must be an array");
    PreemptionRelation pr;
    for (const json& p : doc["pairs"]) {
        if (!p.is_array() || p.size() != 2)
            fail(origin, "each pair must be [preemptor, preempted]");
        pr.pairs.insert({get_u32(p[0], origin, "preemptor"), get_u32(p[1], origin, "preempted")});
    }
    try {
        pr.validate_against(alphabet);
    } catch (const InputError& e) {
        fail(origin, e.what());
    }
    return pr;
}

PreemptionRelation read_preemption(const std::filesystem::path& file, const Alphabet& alphabet) {
    return parse_preemption(read_text_file(file), alphabet, file.string());
}

std::string read_text_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + file.string() + "'");
    out << text;
}

} // namespace rsup
