// The chain complex of a partial trace monoid action with constant integer
// coefficients:
//
//   0 <- L(Q_0) <-d_1- L(Q_1) <-d_2- L(Q_2) <- ...
//
// where Q_n holds the pairs (x, a_1 < ... < a_n) with the a_i pairwise
// independent and x.a_1...a_n defined, and
//
//   d_n(x, a_1..a_n) = sum_i (-1)^i     (x.a_i, a_1..^a_i..a_n)
//                    + sum_i (-1)^(i+1) (x,     a_1..^a_i..a_n)      (i = 1..n)

#ifndef TRACEHOM_COMPLEX_HPP
#define TRACEHOM_COMPLEX_HPP

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracehom/action.hpp"
#include "tracehom/smith.hpp"
#include "tracehom/trace.hpp"

namespace tracehom {

/// An element (x, a_1, ..., a_n) of Q_n.
struct QTuple {
    StateIndex state;
    Clique events;

    auto operator<=>(const QTuple&) const = default;
    bool operator==(const QTuple&) const = default;
};

inline std::string label(const PartialActionSystem& sys, const QTuple& q) {
    if (q.events.empty())
        return sys.state_name(q.state);
    std::string out = "(" + sys.state_name(q.state);
    for (auto e : q.events)
        out += "," + sys.alphabet().name(e);
    return out + ")";
}

/// Graded bases Q_0..Q_top and differentials d_1..d_top.
///
/// `differentials[n]` is d_n (rows Q_{n-1}, columns Q_n); index 0 holds the
/// zero map out of Q_0 so that indices line up with degrees.
struct GradedComplex {
    std::vector<std::vector<QTuple>> bases;
    std::vector<SparseIntMatrix> differentials;
    // True when Q_{top+1} was not computed (max_dim cut the enumeration short),
    // so the top degree's homology is not determined.
    bool truncated = false;

    std::size_t top_degree() const { return bases.empty() ? 0 : bases.size() - 1; }
    std::size_t size(std::size_t n) const { return n < bases.size() ? bases[n].size() : 0; }

    std::optional<std::size_t> index_of(std::size_t n, const QTuple& q) const {
        if (n >= bases.size())
            return std::nullopt;
        auto it = std::lower_bound(bases[n].begin(), bases[n].end(), q);
        if (it == bases[n].end() || *it != q)
            return std::nullopt;
        return static_cast<std::size_t>(it - bases[n].begin());
    }
};

/// Computes Q_0 = scope and Q_n for n = 1 .. min(max_dim, max clique size),
/// stopping at the first empty degree. Bases are sorted by (state, events).
///
/// `scope` must be closed under the action (a reachable set, or all states);
/// the system must pass validate().
inline GradedComplex build_bases(const PartialActionSystem& sys, std::span<const StateIndex> scope,
                                 std::optional<std::size_t> max_dim = std::nullopt) {
    require_valid(sys);
    if (!is_closed(sys, scope))
        throw std::invalid_argument("analysis scope is not closed under the action");

    GradedComplex out;
    std::vector<StateIndex> states(scope.begin(), scope.end());
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());

    std::vector<QTuple>& q0 = out.bases.emplace_back();
    for (auto x : states)
        q0.push_back({x, {}});

    const std::size_t clique_top = max_clique_dimension(sys.alphabet(), sys.independence());
    const std::size_t limit = max_dim ? std::min(*max_dim, clique_top) : clique_top;
    for (std::size_t n = 1; n <= limit; ++n) {
        const auto cliques = enumerate_cliques(sys.alphabet(), sys.independence(), n);
        std::vector<QTuple> qn;
        for (auto x : states)
            for (const auto& c : cliques)
                if (sys.apply_word(x, c))
                    qn.push_back({x, c});
        if (qn.empty())
            break;
        out.bases.push_back(std::move(qn));
    }
    if (max_dim && *max_dim < clique_top && out.bases.size() == *max_dim + 1)
        out.truncated = true;
    return out;
}

/// The matrix of d_n with respect to the sorted bases Q_{n-1} and Q_n.
/// Coefficients landing on the same row tuple are summed.
inline SparseIntMatrix build_differential(const PartialActionSystem& sys,
                                          const GradedComplex& complex, std::size_t n) {
    if (n == 0 || n >= complex.bases.size())
        throw std::out_of_range("differential degree " + std::to_string(n) +
                                " outside the built bases");
    const auto& cols = complex.bases[n];
    SparseIntMatrix d(complex.bases[n - 1].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& [x, events] = cols[j];
        for (std::size_t i = 0; i < n; ++i) {
            Clique face = events;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            const int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^k, k = i + 1 is the 1-based position

            auto moved = sys.apply_event(x, events[i]);
            auto target = moved ? complex.index_of(n - 1, {*moved, face}) : std::nullopt;
            auto source = complex.index_of(n - 1, {x, face});
            if (!target || !source)
                throw std::logic_error("face of " + label(sys, cols[j]) +
                                       " missing from Q_" + std::to_string(n - 1) +
                                       "; the action is not sound");
            d.add(*target, j, sign);
            d.add(*source, j, -sign);
        }
    }
    return d;
}

/// Bases plus all differentials.
inline GradedComplex build_complex(const PartialActionSystem& sys, std::span<const StateIndex> scope,
                                   std::optional<std::size_t> max_dim = std::nullopt) {
    GradedComplex c = build_bases(sys, scope, max_dim);
    c.differentials.emplace_back(0, c.size(0));
    for (std::size_t n = 1; n < c.bases.size(); ++n)
        c.differentials.push_back(build_differential(sys, c, n));
    return c;
}

inline long long euler_characteristic(const GradedComplex& complex) {
    long long chi = 0;
    for (std::size_t n = 0; n < complex.bases.size(); ++n) {
        const auto size = static_cast<long long>(complex.bases[n].size());
        chi += (n % 2 == 0) ? size : -size;
    }
    return chi;
}

/// Z^free_rank (+) Z/t_1 (+) ... with t_1 | t_2 | ... and every t_k > 1.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

/// Renders as "Z^2 ⊕ Z/2 ⊕ Z/6"; the trivial group is "0".
inline std::string to_string(const HomologyGroup& h) {
    std::vector<std::string> parts;
    if (h.free_rank == 1)
        parts.emplace_back("Z");
    else if (h.free_rank > 1)
        parts.push_back("Z^" + std::to_string(h.free_rank));
    for (const auto& t : h.torsion)
        parts.push_back("Z/" + t.str());
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " ⊕ " + parts[i];
    return out;
}

/// Per-degree Smith data of a complex.
struct ComplexInvariants {
    std::vector<std::size_t> sizes;
    std::vector<SmithDecomposition> smith;  // smith[n] for d_n, n = 0..top+1
    std::vector<HomologyGroup> homology;
};

/// Smith data and homology of an arbitrary finite chain complex given by its
/// graded sizes and differentials d_1..d_top (`diffs[n-1]` is d_n).
///
/// H_n = Z^{size_n - rank d_n - rank d_{n+1}} (+) Z/delta^{n+1}_k for the
/// elementary divisors of d_{n+1} that exceed 1. Degrees 0..top are reported;
/// when `truncated` is set the top degree is dropped because d_{top+1} is
/// unknown.
inline ComplexInvariants homology_from_differentials(std::span<const std::size_t> sizes,
                                                     std::span<const SparseIntMatrix> diffs,
                                                     bool truncated = false) {
    if (sizes.empty() || diffs.size() + 1 != sizes.size())
        throw std::invalid_argument("chain complex needs one differential per positive degree");
    ComplexInvariants out;
    const std::size_t n_deg = sizes.size();
    out.sizes.assign(sizes.begin(), sizes.end());
    out.smith.push_back({});  // d_0 = 0
    for (std::size_t n = 1; n < n_deg; ++n) {
        const auto& d = diffs[n - 1];
        if (d.rows() != sizes[n - 1] || d.cols() != sizes[n])
            throw std::invalid_argument("differential d_" + std::to_string(n) +
                                        " has the wrong shape");
        out.smith.push_back(smith_normal_form(d));
    }
    out.smith.push_back({});  // d_{top+1}: zero, or unknown when truncated

    const std::size_t reported = truncated ? n_deg - 1 : n_deg;
    for (std::size_t n = 0; n < reported; ++n) {
        HomologyGroup h;
        h.free_rank = sizes[n] - out.smith[n].rank - out.smith[n + 1].rank;
        for (const auto& d : out.smith[n + 1].divisors)
            if (d > 1)
                h.torsion.push_back(d);
        out.homology.push_back(std::move(h));
    }
    return out;
}

inline ComplexInvariants compute_invariants(const GradedComplex& complex) {
    if (complex.differentials.size() != complex.bases.size())
        throw std::invalid_argument("complex has bases without differentials");
    std::vector<std::size_t> sizes;
    for (const auto& b : complex.bases)
        sizes.push_back(b.size());
    std::span<const SparseIntMatrix> diffs(complex.differentials);
    return homology_from_differentials(sizes, diffs.subspan(1), complex.truncated);
}

inline std::vector<HomologyGroup> homology_groups(const GradedComplex& complex) {
    return compute_invariants(complex).homology;
}

}  // namespace tracehom

#endif  // TRACEHOM_COMPLEX_HPP
