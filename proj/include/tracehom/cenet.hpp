// Condition/Event nets and their translation into partial trace monoid
// actions on markings.

#ifndef TRACEHOM_CENET_HPP
#define TRACEHOM_CENET_HPP

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "tracehom/action.hpp"
#include "tracehom/errors.hpp"
#include "tracehom/trace.hpp"

namespace tracehom {

using PlaceIndex = std::size_t;

/// A subset of the places, one bit per place in declaration order.
using Marking = boost::dynamic_bitset<>;

struct NetEvent {
    std::string name;
    Marking pre;
    Marking post;
};

class CENet {
public:
    CENet() = default;

    struct EventSpec {
        std::string name;
        std::vector<PlaceIndex> pre;
        std::vector<PlaceIndex> post;
    };

    CENet(std::vector<std::string> places, const std::vector<EventSpec>& events,
          const std::vector<PlaceIndex>& initial)
        : places_(std::move(places)), initial_(places_.size()) {
        std::unordered_map<std::string, PlaceIndex> seen;
        for (std::size_t i = 0; i < places_.size(); ++i) {
            if (places_[i].empty())
                throw std::invalid_argument("place name at position " + std::to_string(i) +
                                            " is empty");
            if (!seen.emplace(places_[i], i).second)
                throw std::invalid_argument("duplicate place name '" + places_[i] + "'");
        }
        std::vector<std::string> names;
        for (const auto& spec : events) {
            names.push_back(spec.name);
            events_.push_back({spec.name, to_marking(spec.pre), to_marking(spec.post)});
        }
        alphabet_ = EventAlphabet(std::move(names));
        initial_ = to_marking(initial);
    }

    const std::vector<std::string>& places() const noexcept { return places_; }
    std::size_t place_count() const noexcept { return places_.size(); }
    const std::vector<NetEvent>& events() const noexcept { return events_; }
    std::size_t event_count() const noexcept { return events_.size(); }
    const EventAlphabet& alphabet() const noexcept { return alphabet_; }
    const Marking& initial() const noexcept { return initial_; }

    const NetEvent& event(EventIndex e) const {
        alphabet_.check(e);
        return events_[e];
    }

    Marking to_marking(const std::vector<PlaceIndex>& places) const {
        Marking m(places_.size());
        for (auto p : places) {
            if (p >= places_.size())
                throw std::out_of_range("place index " + std::to_string(p) + " out of range");
            m.set(p);
        }
        return m;
    }

private:
    std::vector<std::string> places_;
    std::vector<NetEvent> events_;
    EventAlphabet alphabet_;
    Marking initial_;
};

/// (a,b) independent iff pre(a)+post(a) and pre(b)+post(b) are disjoint, a != b.
inline IndependenceRelation derive_independence(const CENet& net) {
    std::vector<std::pair<EventIndex, EventIndex>> pairs;
    const auto& ev = net.events();
    for (EventIndex a = 0; a < ev.size(); ++a) {
        const Marking na = ev[a].pre | ev[a].post;
        for (EventIndex b = a + 1; b < ev.size(); ++b)
            if (!na.intersects(ev[b].pre | ev[b].post))
                pairs.emplace_back(a, b);
    }
    return IndependenceRelation(ev.size(), pairs);
}

inline bool enabled(const CENet& net, const Marking& s, EventIndex e) {
    const auto& ev = net.event(e);
    if (s.size() != net.place_count())
        throw std::invalid_argument("marking width does not match the net");
    return ev.pre.is_subset_of(s) && !ev.post.intersects(s);
}

/// (s \ pre(e)) + post(e) when e is enabled at s.
inline std::optional<Marking> fire(const CENet& net, const Marking& s, EventIndex e) {
    if (!enabled(net, s, e))
        return std::nullopt;
    const auto& ev = net.event(e);
    return (s - ev.pre) | ev.post;
}

/// "(1,0,1)": one digit per place in declaration order.
inline std::string marking_name(const Marking& m) {
    std::string out = "(";
    for (std::size_t p = 0; p < m.size(); ++p) {
        if (p)
            out += ',';
        out += m.test(p) ? '1' : '0';
    }
    return out + ")";
}

inline std::vector<PlaceIndex> marked_places(const Marking& m) {
    std::vector<PlaceIndex> out;
    for (auto p = m.find_first(); p != Marking::npos; p = m.find_next(p))
        out.push_back(p);
    return out;
}

// Orders markings as their tuple names: the first place is most significant.
struct MarkingTupleLess {
    bool operator()(const Marking& a, const Marking& b) const {
        for (std::size_t p = 0; p < a.size(); ++p)
            if (a.test(p) != b.test(p))
                return b.test(p);
        return false;
    }
};

struct CompileOptions {
    // Use every subset of the places as a state instead of the reachable ones.
    bool all_markings = false;
    std::size_t max_places_all = 20;
    std::size_t max_states = std::size_t{1} << 20;
};

/// The asynchronous system of the net: states are the markings reachable from
/// the initial one (or all 2^B), sorted by tuple name, with the initial marking
/// as initial state. The result is checked with validate().
inline PartialActionSystem compile(const CENet& net, const CompileOptions& opts = {}) {
    std::map<Marking, StateIndex, MarkingTupleLess> index;
    std::vector<Marking> found;

    if (opts.all_markings) {
        if (net.place_count() > opts.max_places_all)
            throw CapExceeded("all-markings compilation is limited to " +
                              std::to_string(opts.max_places_all) + " places (net has " +
                              std::to_string(net.place_count()) + ")");
        const std::size_t n = std::size_t{1} << net.place_count();
        if (n > opts.max_states)
            throw CapExceeded("2^" + std::to_string(net.place_count()) +
                              " markings exceed the state cap");
        for (std::size_t bits = 0; bits < n; ++bits)
            found.emplace_back(net.place_count(), bits);
    } else {
        std::map<Marking, bool, MarkingTupleLess> seen;
        std::queue<Marking> frontier;
        seen.emplace(net.initial(), true);
        frontier.push(net.initial());
        while (!frontier.empty()) {
            Marking s = std::move(frontier.front());
            frontier.pop();
            found.push_back(s);
            for (EventIndex e = 0; e < net.event_count(); ++e) {
                auto t = fire(net, s, e);
                if (t && seen.emplace(*t, true).second) {
                    if (seen.size() > opts.max_states)
                        throw CapExceeded("more than " + std::to_string(opts.max_states) +
                                          " reachable markings");
                    frontier.push(std::move(*t));
                }
            }
        }
    }

    std::sort(found.begin(), found.end(), MarkingTupleLess{});
    std::vector<std::string> names;
    for (std::size_t i = 0; i < found.size(); ++i) {
        index.emplace(found[i], i);
        names.push_back(marking_name(found[i]));
    }

    std::vector<Transition> transitions;
    for (StateIndex x = 0; x < found.size(); ++x)
        for (EventIndex e = 0; e < net.event_count(); ++e)
            if (auto t = fire(net, found[x], e))
                transitions.push_back({x, e, index.at(*t)});

    PartialActionSystem sys(net.alphabet(), derive_independence(net), std::move(names),
                            transitions, index.at(net.initial()));
    auto report = validate(sys);
    if (!report.ok())
        throw std::logic_error("compiled net violates commutation: " +
                               describe(sys, report.violations.front()));
    return sys;
}

}  // namespace tracehom

#endif  // TRACEHOM_CENET_HPP
