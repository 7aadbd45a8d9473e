#ifndef RSUP_EVENT_HPP
#define RSUP_EVENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rsup {

using EventId = std::uint32_t;
using StateId = std::uint32_t;

/// A string over event ids; the empty word is epsilon.
using Word = std::vector<EventId>;

/// One event label of a generator alphabet. Identity is the integer id;
/// the label is cosmetic. Every event is either controllable or
/// uncontrollable; forcible events may preempt others.
struct Event {
    EventId id = 0;
    std::string label;
    bool controllable = false;
    bool forcible = false;

    friend bool operator==(const Event&, const Event&) = default;
};

/// An event set ordered by id, with at most one entry per id.
/// Merging alphabets rejects conflicting controllability or forcibility
/// for a shared id; a missing label is filled from the other side.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Event> events);

    /// Adds one event; conflicting flags for an existing id throw InputError.
    void insert(const Event& e);
    /// Inserts every event of `other`.
    void merge(const Alphabet& other);

    bool contains(EventId id) const { return find(id) != nullptr; }
    const Event* find(EventId id) const;
    /// Lookup that throws InputError for unknown ids.
    const Event& at(EventId id) const;

    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    auto begin() const { return events_.begin(); }
    auto end() const { return events_.end(); }

    /// True iff every event of `other` exists here with equal flags.
    bool covers(const Alphabet& other) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Event> events_; // sorted by id
};

} // namespace rsup

#endif
