#include "rsup/event.hpp"

#include <algorithm>

#include "rsup/errors.hpp"

namespace rsup {

Alphabet::Alphabet(std::vector<Event> events) {
    for (const Event& e : events)
        insert(e);
}

void Alphabet::insert(const Event& e) {
    auto it = std::lower_bound(events_.begin(), events_.end(), e.id,
                               [](const Event& lhs, EventId id) { return lhs.id < id; });
    if (it != events_.end() && it->id == e.id) {
        if (it->controllable != e.controllable)
            throw InputError("event " + std::to_string(e.id) +
                             ": conflicting controllability across alphabets");
        if (it->forcible != e.forcible)
            throw InputError("event " + std::to_string(e.id) +
                             ": conflicting forcibility across alphabets");
        if (it->label.empty() && !e.label.empty())
            it->label = e.label;
        return;
    }
    events_.insert(it, e);
}

void Alphabet::merge(const Alphabet& other) {
    for (const Event& e : other)
        insert(e);
}

const Event* Alphabet::find(EventId id) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), id,
                               [](const Event& lhs, EventId want) { return lhs.id < want; });
    if (it == events_.end() || it->id != id)
        return nullptr;
    return &*it;
}

const Event& Alphabet::at(EventId id) const {
    const Event* e = find(id);
    if (!e)
        throw InputError("event " + std::to_string(id) + " is not in the alphabet");
    return *e;
}

bool Alphabet::covers(const Alphabet& other) const {
    for (const Event& e : other) {
        const Event* mine = find(e.id);
        if (!mine || mine->controllable != e.controllable || mine->forcible != e.forcible)
            return false;
    }
    return true;
}

} // namespace rsup
