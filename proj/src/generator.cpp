#include "rsup/generator.hpp"

#include <algorithm>

#include "rsup/errors.hpp"

namespace rsup {

Generator Generator::empty(std::string name, Alphabet alphabet) {
    Generator g;
    g.name_ = std::move(name);
    g.alphabet_ = std::move(alphabet);
    return g;
}

Generator::Generator(std::string name, Alphabet alphabet, StateId state_count, StateId initial,
                     std::vector<StateId> marked, std::vector<Transition> transitions)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial) {
    if (state_count_ == 0)
        throw InputError("generator '" + name_ +
                         "': zero states; use Generator::empty for the empty generator");
    if (initial_ >= state_count_)
        throw InputError("generator '" + name_ + "': initial state out of range");

    marked_ = std::move(marked);
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
    if (!marked_.empty() && marked_.back() >= state_count_)
        throw InputError("generator '" + name_ + "': marked state out of range");

    delta_.resize(state_count_);
    std::sort(transitions.begin(), transitions.end());
    for (const Transition& t : transitions) {
        if (t.from >= state_count_ || t.to >= state_count_)
            throw InputError("generator '" + name_ + "': transition state out of range");
        if (!alphabet_.contains(t.event))
            throw InputError("generator '" + name_ + "': transition event " +
                             std::to_string(t.event) + " is not in the alphabet");
        auto& row = delta_[t.from];
        if (!row.empty() && row.back().first == t.event) {
            if (row.back().second == t.to)
                continue; // duplicate triple, harmless
            throw InputError("generator '" + name_ + "': nondeterministic on (state " +
                             std::to_string(t.from) + ", event " + std::to_string(t.event) + ")");
        }
        row.emplace_back(t.event, t.to);
    }
}

StateId Generator::initial() const {
    if (is_empty())
        throw InputError("generator '" + name_ + "' is empty and has no initial state");
    return initial_;
}

bool Generator::is_marked(StateId q) const {
    check_state(q);
    return std::binary_search(marked_.begin(), marked_.end(), q);
}

std::span<const std::pair<EventId, StateId>> Generator::transitions_from(StateId q) const {
    check_state(q);
    return delta_[q];
}

std::optional<StateId> Generator::target(StateId q, EventId e) const {
    check_state(q);
    const auto& row = delta_[q];
    auto it = std::lower_bound(row.begin(), row.end(), e,
                               [](const auto& p, EventId want) { return p.first < want; });
    if (it == row.end() || it->first != e)
        return std::nullopt;
    return it->second;
}

std::size_t Generator::transition_count() const {
    std::size_t n = 0;
    for (const auto& row : delta_)
        n += row.size();
    return n;
}

std::vector<Transition> Generator::transitions() const {
    std::vector<Transition> out;
    out.reserve(transition_count());
    for (StateId q = 0; q < state_count_; ++q)
        for (const auto& [e, t] : delta_[q])
            out.push_back({q, e, t});
    return out;
}

bool Generator::same_structure(const Generator& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           initial_ == other.initial_ && marked_ == other.marked_ && delta_ == other.delta_;
}

void Generator::check_state(StateId q) const {
    if (q >= state_count_)
        throw std::out_of_range("state " + std::to_string(q) + " out of range for generator '" +
                                name_ + "' with " + std::to_string(state_count_) + " states");
}

} // namespace rsup
