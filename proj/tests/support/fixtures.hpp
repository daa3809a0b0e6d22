// Hand-built systems shared by the test suites.

#ifndef TRACEHOM_TESTS_FIXTURES_HPP
#define TRACEHOM_TESTS_FIXTURES_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tracehom/tracehom.hpp"

namespace fixtures {

using namespace tracehom;

/// Free commutative monoid on a1, a2, a3 acting on s0..s7: s0 and s1 each
/// reach s2, s3, s4 by a1, a2, a3; the second layer closes the squares into
/// s5 = .a1a2, s6 = .a1a3, s7 = .a2a3.
inline PartialActionSystem three_generators() {
    enum { s0, s1, s2, s3, s4, s5, s6, s7 };
    enum { a1, a2, a3 };
    std::vector<Transition> t = {
        {s0, a1, s2}, {s0, a2, s3}, {s0, a3, s4}, {s1, a1, s2}, {s1, a2, s3}, {s1, a3, s4},
        {s2, a2, s5}, {s2, a3, s6}, {s3, a1, s5}, {s3, a3, s7}, {s4, a1, s6}, {s4, a2, s7},
    };
    std::vector<std::string> states;
    for (int i = 0; i < 8; ++i)
        states.push_back("s" + std::to_string(i));
    return PartialActionSystem(EventAlphabet({"a1", "a2", "a3"}),
                               IndependenceRelation(3, {{a1, a2}, {a1, a3}, {a2, a3}}), states, t);
}

/// Places p, q, r; a puts a token on p, b moves p -> q, c moves q -> r, d
/// consumes r. Initially empty.
inline CENet pipeline_net() {
    return CENet({"p", "q", "r"},
                 {{"a", {}, {0}}, {"b", {0}, {1}}, {"c", {1}, {2}}, {"d", {2}, {}}}, {});
}

inline Marking marking(std::initializer_list<int> bits) {
    Marking m(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        m[i++] = b != 0;
    return m;
}

/// Drops transitions until the table commutes on independent pairs.
inline PartialActionSystem repair(const PartialActionSystem& sys) {
    std::vector<Transition> t = sys.transitions();
    PartialActionSystem cur = sys;
    for (;;) {
        auto report = validate(cur);
        if (report.ok())
            return cur;
        const auto& v = report.violations.front();
        const EventIndex drop = cur.apply_event(v.state, v.first) ? v.first : v.second;
        std::erase_if(t, [&](const Transition& tr) {
            return tr.from == v.state && tr.event == drop;
        });
        cur = PartialActionSystem(cur.alphabet(), cur.independence(), cur.states(), t,
                                  cur.initial());
    }
}

inline std::vector<std::string> names(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

/// Random table on up to `max_states` states and `max_events` events, repaired
/// to soundness. With `acyclic`, transitions only go to higher state indices.
inline PartialActionSystem random_table_system(std::mt19937& rng, std::size_t max_states,
                                               std::size_t max_events, bool acyclic) {
    std::uniform_int_distribution<std::size_t> ns(1, max_states), ne(1, max_events);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const std::size_t n = ns(rng), m = ne(rng);
    const double p_indep = coin(rng);
    const double p_edge = 0.3 + 0.6 * coin(rng);

    std::vector<std::pair<EventIndex, EventIndex>> pairs;
    for (EventIndex a = 0; a < m; ++a)
        for (EventIndex b = a + 1; b < m; ++b)
            if (coin(rng) < p_indep)
                pairs.emplace_back(a, b);
    std::vector<Transition> t;
    for (StateIndex x = 0; x < n; ++x)
        for (EventIndex e = 0; e < m; ++e) {
            if (coin(rng) >= p_edge)
                continue;
            if (acyclic) {
                if (x + 1 >= n)
                    continue;
                t.push_back({x, e, std::uniform_int_distribution<std::size_t>(x + 1, n - 1)(rng)});
            } else {
                t.push_back({x, e, std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)});
            }
        }
    // Close most squares x.a, x.b with a || b before repairing, so that the
    // corpus has cells above degree 1.
    const IndependenceRelation rel(m, pairs);
    std::vector<std::vector<std::optional<StateIndex>>> table(
        n, std::vector<std::optional<StateIndex>>(m));
    for (const auto& tr : t)
        table[tr.from][tr.event] = tr.to;
    for (StateIndex x = 0; x < n; ++x)
        for (auto [a, b] : pairs) {
            const auto y = table[x][a], z = table[x][b];
            if (!y || !z || coin(rng) < 0.2)
                continue;
            auto& yb = table[*y][b];
            auto& za = table[*z][a];
            const auto forward = [&](StateIndex from, StateIndex to) {
                return !acyclic || to > from;
            };
            if (yb && !za) {
                if (forward(*z, *yb))
                    za = yb;
            } else if (za && !yb) {
                if (forward(*y, *za))
                    yb = za;
            }
            else if (!yb && !za) {
                const StateIndex lo = acyclic ? std::max(*y, *z) + 1 : 0;
                if (lo >= n)
                    continue;
                yb = za = std::uniform_int_distribution<std::size_t>(lo, n - 1)(rng);
            }
        }
    t.clear();
    for (StateIndex x = 0; x < n; ++x)
        for (EventIndex e = 0; e < m; ++e)
            if (table[x][e])
                t.push_back({x, e, *table[x][e]});
    return repair(PartialActionSystem(EventAlphabet(names("e", m)), rel, names("x", n), t));
}

/// Random CE net compiled over its reachable markings; nullopt when the state
/// space exceeds `max_states` or (with `acyclic`) has a cycle.
inline std::optional<PartialActionSystem> random_net_system(std::mt19937& rng,
                                                            std::size_t max_events,
                                                            std::size_t max_states, bool acyclic) {
    std::uniform_int_distribution<std::size_t> np(1, 5), ne(1, max_events);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const std::size_t places = np(rng), events = ne(rng);
    std::vector<CENet::EventSpec> specs;
    for (std::size_t e = 0; e < events; ++e) {
        CENet::EventSpec s{"t" + std::to_string(e), {}, {}};
        for (PlaceIndex p = 0; p < places; ++p) {
            double r = coin(rng);
            if (r < 0.25)
                s.pre.push_back(p);
            else if (r < 0.5)
                s.post.push_back(p);
        }
        specs.push_back(std::move(s));
    }
    std::vector<PlaceIndex> initial;
    for (PlaceIndex p = 0; p < places; ++p)
        if (coin(rng) < 0.4)
            initial.push_back(p);
    CompileOptions opts;
    opts.max_states = max_states;
    try {
        auto sys = compile(CENet(names("b", places), specs, initial), opts);
        if (acyclic) {
            try {
                detail::require_acyclic(sys, all_states(sys));
            } catch (const CyclicSystem&) {
                return std::nullopt;
            }
        }
        return sys;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

/// The same action with events declared in the order `perm` (perm[k] is the
/// old index of the k-th new event).
inline PartialActionSystem permute_events(const PartialActionSystem& sys,
                                          const std::vector<EventIndex>& perm) {
    std::vector<EventIndex> new_index(perm.size());
    std::vector<std::string> names;
    for (std::size_t k = 0; k < perm.size(); ++k) {
        new_index[perm[k]] = k;
        names.push_back(sys.alphabet().name(perm[k]));
    }
    std::vector<std::pair<EventIndex, EventIndex>> pairs;
    for (auto [a, b] : sys.independence().pairs())
        pairs.emplace_back(new_index[a], new_index[b]);
    std::vector<Transition> t;
    for (auto tr : sys.transitions())
        t.push_back({tr.from, new_index[tr.event], tr.to});
    return PartialActionSystem(EventAlphabet(names), IndependenceRelation(perm.size(), pairs),
                               sys.states(), t, sys.initial());
}

}  // namespace fixtures

#endif  // TRACEHOM_TESTS_FIXTURES_HPP
