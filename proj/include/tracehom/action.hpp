// Finite partial right actions of a trace monoid M(E,I) on a set of states.
//
// An undefined transition plays the role of the absorbing base point: it is
// never stored, and every operation treats std::nullopt as "x * mu = *".

#ifndef TRACEHOM_ACTION_HPP
#define TRACEHOM_ACTION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tracehom/errors.hpp"
#include "tracehom/trace.hpp"

namespace tracehom {

struct Transition {
    StateIndex from;
    EventIndex event;
    StateIndex to;

    auto operator<=>(const Transition&) const = default;
};

class PartialActionSystem {
public:
    PartialActionSystem() = default;

    PartialActionSystem(EventAlphabet alphabet, IndependenceRelation rel,
                        std::vector<std::string> states, std::span<const Transition> transitions,
                        std::optional<StateIndex> initial = std::nullopt)
        : alphabet_(std::move(alphabet)),
          rel_(std::move(rel)),
          states_(std::move(states)),
          table_(states_.size() * alphabet_.size()),
          initial_(initial) {
        if (rel_.event_count() != alphabet_.size())
            throw std::invalid_argument("independence relation size does not match alphabet");
        for (std::size_t i = 0; i < states_.size(); ++i)
            if (!state_lookup_.emplace(states_[i], i).second)
                throw std::invalid_argument("duplicate state name '" + states_[i] + "'");
        if (initial_)
            check_state(*initial_);
        for (const auto& t : transitions) {
            check_state(t.from);
            check_state(t.to);
            alphabet_.check(t.event);
            auto& slot = table_[t.from * alphabet_.size() + t.event];
            if (slot)
                throw std::invalid_argument("duplicate transition for state '" + states_[t.from] +
                                            "' and event '" + alphabet_.name(t.event) + "'");
            slot = t.to;
        }
    }

    const EventAlphabet& alphabet() const noexcept { return alphabet_; }
    const IndependenceRelation& independence() const noexcept { return rel_; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t event_count() const noexcept { return alphabet_.size(); }
    std::optional<StateIndex> initial() const noexcept { return initial_; }

    const std::string& state_name(StateIndex x) const {
        check_state(x);
        return states_[x];
    }

    std::optional<StateIndex> state_index(const std::string& name) const {
        auto it = state_lookup_.find(name);
        if (it == state_lookup_.end())
            return std::nullopt;
        return it->second;
    }

    /// Table lookup; nullopt is the undefined result.
    std::optional<StateIndex> apply_event(StateIndex x, EventIndex e) const {
        check_state(x);
        alphabet_.check(e);
        return table_[x * alphabet_.size() + e];
    }

    std::optional<StateIndex> apply_word(StateIndex x, std::span<const EventIndex> word) const {
        check_state(x);
        std::optional<StateIndex> cur = x;
        for (EventIndex e : word) {
            alphabet_.check(e);
            if (!cur)
                continue;
            cur = table_[*cur * alphabet_.size() + e];
        }
        return cur;
    }

    std::optional<StateIndex> apply_word(std::optional<StateIndex> x,
                                         std::span<const EventIndex> word) const {
        if (!x) {
            alphabet_.check(word);
            return std::nullopt;
        }
        return apply_word(*x, word);
    }

    /// All defined transitions, ordered by (from, event).
    std::vector<Transition> transitions() const {
        std::vector<Transition> out;
        for (StateIndex x = 0; x < states_.size(); ++x)
            for (EventIndex e = 0; e < alphabet_.size(); ++e)
                if (auto y = table_[x * alphabet_.size() + e])
                    out.push_back({x, e, *y});
        return out;
    }

    void check_state(StateIndex x) const {
        if (x >= states_.size())
            throw std::out_of_range("state index " + std::to_string(x) + " out of range (" +
                                    std::to_string(states_.size()) + " states)");
    }

private:
    EventAlphabet alphabet_;
    IndependenceRelation rel_;
    std::vector<std::string> states_;
    std::unordered_map<std::string, StateIndex> state_lookup_;
    std::vector<std::optional<StateIndex>> table_;
    std::optional<StateIndex> initial_;
};

/// x.ab != x.ba for an independent pair a < b.
struct Violation {
    StateIndex state;
    EventIndex first;
    EventIndex second;
    std::optional<StateIndex> via_first;   // x.(first second)
    std::optional<StateIndex> via_second;  // x.(second first)

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Thrown when a computation needs a sound action and the table is not one.
class ValidationError : public Error {
public:
    ValidationError(std::string what, ValidationReport report)
        : Error(std::move(what)), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Checks x.ab = x.ba (with absorbing undefined) for every state and every
/// independent pair, which is exactly what makes the table a functor on M(E,I).
inline ValidationReport validate(const PartialActionSystem& sys) {
    ValidationReport report;
    const auto pairs = sys.independence().pairs();
    for (StateIndex x = 0; x < sys.state_count(); ++x) {
        for (auto [a, b] : pairs) {
            const EventIndex ab[] = {a, b};
            const EventIndex ba[] = {b, a};
            auto r1 = sys.apply_word(x, ab);
            auto r2 = sys.apply_word(x, ba);
            if (r1 != r2)
                report.violations.push_back({x, a, b, r1, r2});
        }
    }
    return report;
}

inline std::string describe(const PartialActionSystem& sys, const Violation& v) {
    auto show = [&](std::optional<StateIndex> s) {
        return s ? sys.state_name(*s) : std::string("undefined");
    };
    const auto& a = sys.alphabet().name(v.first);
    const auto& b = sys.alphabet().name(v.second);
    const auto& x = sys.state_name(v.state);
    return "state '" + x + "', events (" + a + "," + b + "): " + x + "." + a + b + " = " +
           show(v.via_first) + " but " + x + "." + b + a + " = " + show(v.via_second);
}

inline void require_valid(const PartialActionSystem& sys) {
    auto report = validate(sys);
    if (!report.ok()) {
        std::string msg = "transition table does not commute on independent events (" +
                          std::to_string(report.violations.size()) + " violation(s)):";
        for (const auto& v : report.violations)
            msg += "\n  " + describe(sys, v);
        throw ValidationError(msg, std::move(report));
    }
}

/// Closure of {start} under single-event application, ascending.
inline std::vector<StateIndex> reachable_states(const PartialActionSystem& sys, StateIndex start) {
    sys.check_state(start);
    std::vector<bool> seen(sys.state_count(), false);
    std::queue<StateIndex> frontier;
    seen[start] = true;
    frontier.push(start);
    while (!frontier.empty()) {
        StateIndex x = frontier.front();
        frontier.pop();
        for (EventIndex e = 0; e < sys.event_count(); ++e) {
            auto y = sys.apply_event(x, e);
            if (y && !seen[*y]) {
                seen[*y] = true;
                frontier.push(*y);
            }
        }
    }
    std::vector<StateIndex> out;
    for (StateIndex x = 0; x < seen.size(); ++x)
        if (seen[x])
            out.push_back(x);
    return out;
}

inline std::vector<StateIndex> all_states(const PartialActionSystem& sys) {
    std::vector<StateIndex> out(sys.state_count());
    std::iota(out.begin(), out.end(), StateIndex{0});
    return out;
}

/// True iff every defined transition out of `scope` stays inside `scope`.
inline bool is_closed(const PartialActionSystem& sys, std::span<const StateIndex> scope) {
    std::vector<bool> in(sys.state_count(), false);
    for (auto x : scope) {
        sys.check_state(x);
        in[x] = true;
    }
    for (auto x : scope)
        for (EventIndex e = 0; e < sys.event_count(); ++e)
            if (auto y = sys.apply_event(x, e); y && !in[*y])
                return false;
    return true;
}

/// Weakly connected components of the transition graph induced on `scope`.
/// Each component is ascending; components are ordered by their least state.
inline std::vector<std::vector<StateIndex>> connected_components(
    const PartialActionSystem& sys, std::span<const StateIndex> scope) {
    const std::size_t n = sys.state_count();
    std::vector<bool> in(n, false);
    for (auto x : scope) {
        sys.check_state(x);
        in[x] = true;
    }
    std::vector<StateIndex> parent(n);
    std::iota(parent.begin(), parent.end(), StateIndex{0});
    auto find = [&](StateIndex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& t : sys.transitions()) {
        if (!in[t.from] || !in[t.to])
            continue;
        auto a = find(t.from), b = find(t.to);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<StateIndex>> comps;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (StateIndex x = 0; x < n; ++x) {
        if (!in[x])
            continue;
        auto r = find(x);
        if (slot[r] == SIZE_MAX) {
            slot[r] = comps.size();
            comps.emplace_back();
        }
        comps[slot[r]].push_back(x);
    }
    return comps;
}

inline std::vector<std::vector<StateIndex>> connected_components(const PartialActionSystem& sys) {
    auto scope = all_states(sys);
    return connected_components(sys, scope);
}

}  // namespace tracehom

#endif  // TRACEHOM_ACTION_HPP
