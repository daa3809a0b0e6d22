// Event alphabets, independence relations and trace (partial commutation)
// identities over a finite set of generators.
//
// Events are interned to indices 0..n-1; the index order is the total order
// on the alphabet used by normal forms and clique tuples.

#ifndef TRACEHOM_TRACE_HPP
#define TRACEHOM_TRACE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tracehom {

using EventIndex = std::size_t;
using StateIndex = std::size_t;

/// A word of the free monoid over the alphabet, as event indices.
using Word = std::vector<EventIndex>;

/// An increasing tuple of pairwise independent events (an element of T_n).
using Clique = std::vector<EventIndex>;

class EventAlphabet {
public:
    EventAlphabet() = default;

    explicit EventAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("event name at position " + std::to_string(i) +
                                            " is empty");
            if (!lookup_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate event name '" + names_[i] + "'");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::string& name(EventIndex e) const {
        check(e);
        return names_[e];
    }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<EventIndex> index_of(const std::string& name) const {
        auto it = lookup_.find(name);
        if (it == lookup_.end())
            return std::nullopt;
        return it->second;
    }

    void check(EventIndex e) const {
        if (e >= names_.size())
            throw std::out_of_range("event index " + std::to_string(e) + " out of range (" +
                                    std::to_string(names_.size()) + " events)");
    }

    void check(std::span<const EventIndex> word) const {
        for (EventIndex e : word)
            check(e);
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, EventIndex> lookup_;
};

/// Irreflexive symmetric relation on event indices, stored as unordered pairs.
class IndependenceRelation {
public:
    IndependenceRelation() = default;

    IndependenceRelation(std::size_t n_events, std::span<const std::pair<EventIndex, EventIndex>> pairs)
        : n_(n_events), adj_(n_events * n_events, false) {
        for (auto [a, b] : pairs) {
            if (a >= n_ || b >= n_)
                throw std::out_of_range("independence pair references event index out of range");
            if (a == b)
                throw std::invalid_argument("independence relation must be irreflexive (pair (" +
                                            std::to_string(a) + "," + std::to_string(a) + "))");
            adj_[a * n_ + b] = true;
            adj_[b * n_ + a] = true;
        }
    }

    IndependenceRelation(std::size_t n_events,
                         std::initializer_list<std::pair<EventIndex, EventIndex>> pairs)
        : IndependenceRelation(n_events, std::span<const std::pair<EventIndex, EventIndex>>(
                                             pairs.begin(), pairs.size())) {}

    std::size_t event_count() const noexcept { return n_; }

    bool contains(EventIndex a, EventIndex b) const {
        if (a >= n_ || b >= n_)
            throw std::out_of_range("event index out of range in independence query");
        return adj_[a * n_ + b];
    }

    /// Pairs (a,b) with a < b, in lexicographic order.
    std::vector<std::pair<EventIndex, EventIndex>> pairs() const {
        std::vector<std::pair<EventIndex, EventIndex>> out;
        for (EventIndex a = 0; a < n_; ++a)
            for (EventIndex b = a + 1; b < n_; ++b)
                if (adj_[a * n_ + b])
                    out.emplace_back(a, b);
        return out;
    }

    bool operator==(const IndependenceRelation&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> adj_;
};

inline bool is_independent(const IndependenceRelation& rel, EventIndex a, EventIndex b) {
    return rel.contains(a, b);
}

/// Lexicographically least representative of the trace class of `word`.
///
/// Greedy extraction: at each step the output takes the smallest letter whose
/// first remaining occurrence is preceded only by letters independent of it.
/// Such letters are exactly those that can be commuted to the front, so the
/// result is the minimum of the class.
inline Word trace_normal_form(const EventAlphabet& alphabet, const IndependenceRelation& rel,
                              std::span<const EventIndex> word) {
    alphabet.check(word);
    Word rest(word.begin(), word.end());
    Word out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        std::size_t best_pos = rest.size();
        for (std::size_t j = 0; j < rest.size(); ++j) {
            EventIndex c = rest[j];
            if (best_pos != rest.size() && c >= rest[best_pos])
                continue;
            bool movable = true;
            for (std::size_t k = 0; k < j && movable; ++k)
                movable = rest[k] != c && rel.contains(rest[k], c);
            if (movable)
                best_pos = j;
        }
        out.push_back(rest[best_pos]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best_pos));
    }
    return out;
}

inline bool trace_equivalent(const EventAlphabet& alphabet, const IndependenceRelation& rel,
                             std::span<const EventIndex> v, std::span<const EventIndex> w) {
    return trace_normal_form(alphabet, rel, v) == trace_normal_form(alphabet, rel, w);
}

/// T_n(E,I): strictly increasing n-tuples of pairwise independent events.
/// T_0 is the single empty tuple.
inline std::vector<Clique> enumerate_cliques(const EventAlphabet& alphabet,
                                             const IndependenceRelation& rel, std::size_t n) {
    std::vector<Clique> out;
    if (n > alphabet.size())
        return out;
    Clique current;
    current.reserve(n);
    auto extend = [&](auto&& self, EventIndex start) -> void {
        if (current.size() == n) {
            out.push_back(current);
            return;
        }
        for (EventIndex e = start; e < alphabet.size(); ++e) {
            bool ok = std::all_of(current.begin(), current.end(),
                                  [&](EventIndex c) { return rel.contains(c, e); });
            if (!ok)
                continue;
            current.push_back(e);
            self(self, e + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

/// Largest n with T_n nonempty (0 for the empty alphabet).
inline std::size_t max_clique_dimension(const EventAlphabet& alphabet,
                                        const IndependenceRelation& rel) {
    std::size_t best = 0;
    Clique current;
    auto extend = [&](auto&& self, EventIndex start) -> void {
        best = std::max(best, current.size());
        for (EventIndex e = start; e < alphabet.size(); ++e) {
            if (current.size() + (alphabet.size() - e) <= best)
                return;
            bool ok = std::all_of(current.begin(), current.end(),
                                  [&](EventIndex c) { return rel.contains(c, e); });
            if (!ok)
                continue;
            current.push_back(e);
            self(self, e + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return best;
}

}  // namespace tracehom

#endif  // TRACEHOM_TRACE_HPP
