// Brute-force homology of the category K(S) of a partial action: objects are
// states, morphisms x -> y are traces mu with x.mu = y. Homology is computed
// from the normalized chain complex of the nerve, independently of the
// Q_n complex, and is meant as a cross-check on small acyclic systems.

#ifndef TRACEHOM_ORACLE_HPP
#define TRACEHOM_ORACLE_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tracehom/action.hpp"
#include "tracehom/complex.hpp"
#include "tracehom/errors.hpp"
#include "tracehom/trace.hpp"

namespace tracehom {

/// Traces, as normal forms, between every ordered pair of states in scope.
class MorphismTable {
public:
    const std::set<Word>& traces(StateIndex x, StateIndex y) const {
        static const std::set<Word> none;
        auto it = table_.find({x, y});
        return it == table_.end() ? none : it->second;
    }

    const std::map<std::pair<StateIndex, StateIndex>, std::set<Word>>& entries() const noexcept {
        return table_;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [_, words] : table_)
            n += words.size();
        return n;
    }

    void insert(StateIndex x, StateIndex y, Word w) { table_[{x, y}].insert(std::move(w)); }

private:
    std::map<std::pair<StateIndex, StateIndex>, std::set<Word>> table_;
};

struct OracleLimits {
    std::size_t max_paths = 1'000'000;
    std::size_t max_simplices = 2'000'000;
};

namespace detail {

inline void require_acyclic(const PartialActionSystem& sys, std::span<const StateIndex> scope) {
    enum class Mark { none, open, done };
    std::vector<bool> in(sys.state_count(), false);
    for (auto x : scope)
        in[x] = true;
    std::vector<Mark> mark(sys.state_count(), Mark::none);
    // Iterative DFS: (state, next event to try).
    for (auto root : scope) {
        if (mark[root] != Mark::none)
            continue;
        std::vector<std::pair<StateIndex, EventIndex>> stack{{root, 0}};
        mark[root] = Mark::open;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            if (next == sys.event_count()) {
                mark[x] = Mark::done;
                stack.pop_back();
                continue;
            }
            auto y = sys.apply_event(x, next++);
            if (!y || !in[*y])
                continue;
            if (mark[*y] == Mark::open)
                throw CyclicSystem("transition graph has a cycle through state '" +
                                   sys.state_name(*y) + "'; the nerve would be infinite");
            if (mark[*y] == Mark::none) {
                mark[*y] = Mark::open;
                stack.emplace_back(*y, 0);
            }
        }
    }
}

}  // namespace detail

/// Enumerates every path in the (acyclic) transition graph and records its
/// word's trace normal form; the empty trace is recorded at (x, x).
inline MorphismTable enumerate_morphisms(const PartialActionSystem& sys,
                                         std::span<const StateIndex> scope,
                                         const OracleLimits& limits = {}) {
    detail::require_acyclic(sys, scope);
    std::vector<bool> in(sys.state_count(), false);
    for (auto x : scope)
        in[x] = true;

    MorphismTable table;
    std::size_t paths = 0;
    Word word;
    auto walk = [&](auto&& self, StateIndex origin, StateIndex at) -> void {
        if (++paths > limits.max_paths)
            throw CapExceeded("nerve oracle path limit exceeded");
        table.insert(origin, at, trace_normal_form(sys.alphabet(), sys.independence(), word));
        for (EventIndex e = 0; e < sys.event_count(); ++e) {
            auto y = sys.apply_event(at, e);
            if (!y || !in[*y])
                continue;
            word.push_back(e);
            self(self, origin, *y);
            word.pop_back();
        }
    };
    for (auto x : scope)
        walk(walk, x, x);
    return table;
}

/// Homology of the nerve of K(scope) in degrees 0..max_dim (all nonempty
/// degrees when max_dim is absent).
inline std::vector<HomologyGroup> nerve_homology(const PartialActionSystem& sys,
                                                 std::span<const StateIndex> scope,
                                                 std::optional<std::size_t> max_dim = std::nullopt,
                                                 const OracleLimits& limits = {}) {
    std::vector<StateIndex> objects(scope.begin(), scope.end());
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
    const MorphismTable table = enumerate_morphisms(sys, objects, limits);

    struct Arrow {
        StateIndex source;
        StateIndex target;
        Word trace;
    };
    std::vector<Arrow> arrows;
    std::map<std::pair<StateIndex, Word>, std::size_t> arrow_id;
    std::vector<std::vector<std::size_t>> out_arrows(sys.state_count());
    for (const auto& [ends, words] : table.entries())
        for (const auto& w : words) {
            if (w.empty())
                continue;
            arrow_id.emplace(std::pair{ends.first, w}, arrows.size());
            out_arrows[ends.first].push_back(arrows.size());
            arrows.push_back({ends.first, ends.second, w});
        }

    // Composite arrow, or nullopt for an identity.
    auto compose = [&](std::size_t f, std::size_t g) -> std::optional<std::size_t> {
        Word w = arrows[f].trace;
        w.insert(w.end(), arrows[g].trace.begin(), arrows[g].trace.end());
        w = trace_normal_form(sys.alphabet(), sys.independence(), w);
        if (w.empty())
            return std::nullopt;
        return arrow_id.at({arrows[f].source, w});
    };

    std::vector<std::size_t> object_pos(sys.state_count(), 0);
    for (std::size_t i = 0; i < objects.size(); ++i)
        object_pos[objects[i]] = i;

    // simplices[n] for n >= 1: chains of n composable non-identity arrows.
    using Chain = std::vector<std::size_t>;
    std::vector<std::vector<Chain>> simplices(1);
    std::vector<std::map<Chain, std::size_t>> simplex_id(1);
    const std::size_t build_to = max_dim ? *max_dim + 1 : SIZE_MAX;
    std::size_t total = objects.size();
    for (std::size_t n = 1; n <= build_to; ++n) {
        std::vector<Chain> level;
        if (n == 1) {
            for (std::size_t a = 0; a < arrows.size(); ++a)
                level.push_back({a});
        } else {
            for (const auto& c : simplices[n - 1])
                for (auto a : out_arrows[arrows[c.back()].target]) {
                    Chain next = c;
                    next.push_back(a);
                    level.push_back(std::move(next));
                }
        }
        total += level.size();
        if (total > limits.max_simplices)
            throw CapExceeded("nerve oracle simplex limit exceeded");
        if (level.empty())
            break;
        std::sort(level.begin(), level.end());
        std::map<Chain, std::size_t> ids;
        for (std::size_t i = 0; i < level.size(); ++i)
            ids.emplace(level[i], i);
        simplices.push_back(std::move(level));
        simplex_id.push_back(std::move(ids));
    }
    const bool truncated = max_dim && simplices.size() == *max_dim + 2;

    std::vector<std::size_t> sizes{objects.size()};
    std::vector<SparseIntMatrix> diffs;
    for (std::size_t n = 1; n < simplices.size(); ++n) {
        sizes.push_back(simplices[n].size());
        SparseIntMatrix d(sizes[n - 1], sizes[n]);
        for (std::size_t j = 0; j < simplices[n].size(); ++j) {
            const Chain& c = simplices[n][j];
            if (n == 1) {
                d.add(object_pos[arrows[c[0]].target], j, 1);   // face 0 drops the source
                d.add(object_pos[arrows[c[0]].source], j, -1);  // face 1 drops the target
                continue;
            }
            for (std::size_t i = 0; i <= n; ++i) {
                Chain face;
                if (i == 0) {
                    face.assign(c.begin() + 1, c.end());
                } else if (i == n) {
                    face.assign(c.begin(), c.end() - 1);
                } else {
                    auto comp = compose(c[i - 1], c[i]);
                    if (!comp)
                        continue;  // degenerate face
                    face.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
                    face.push_back(*comp);
                    face.insert(face.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
                }
                d.add(simplex_id[n - 1].at(face), j, (i % 2 == 0) ? 1 : -1);
            }
        }
        diffs.push_back(std::move(d));
    }

    auto groups = homology_from_differentials(sizes, diffs, truncated).homology;
    if (max_dim)
        groups.resize(*max_dim + 1);
    return groups;
}

}  // namespace tracehom

#endif  // TRACEHOM_ORACLE_HPP
