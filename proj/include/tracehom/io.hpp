// Input documents (action systems, CE nets, triplet matrices) and matrix dumps.
//
// Action file:
//   {"events": ["a", ...], "independence": [["a","c"], ...],
//    "states": ["s0", ...], "initial": "s0",            (initial optional)
//    "transitions": [{"from": "s0", "event": "a", "to": "s1"}, ...]}
//
// Net file:
//   {"places": ["p", ...],
//    "events": [{"name": "a", "pre": [...], "post": [...]}, ...],
//    "initial": ["p", ...]}
//
// Matrix file (either form):
//   {"rows": R, "cols": C, "entries": [[r, c, v], ...]}
//   or plain text "R C" followed by one "r c v" line per entry.

#ifndef TRACEHOM_IO_HPP
#define TRACEHOM_IO_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tracehom/action.hpp"
#include "tracehom/cenet.hpp"
#include "tracehom/complex.hpp"
#include "tracehom/errors.hpp"
#include "tracehom/smith.hpp"

namespace tracehom {

using json = nlohmann::json;

enum class InputKind { net, action };

inline std::string to_string(InputKind k) { return k == InputKind::net ? "net" : "action"; }

inline InputKind input_kind_from_string(const std::string& s) {
    if (s == "net")
        return InputKind::net;
    if (s == "action")
        return InputKind::action;
    throw ParseError("", "unknown input kind '" + s + "' (expected net or action)");
}

namespace detail {

inline const json& field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where, std::string("missing field '") + key + "'");
    return *it;
}

inline const json& array_field(const json& obj, const std::string& where, const char* key) {
    const json& v = field(obj, where, key);
    if (!v.is_array())
        throw ParseError(where + "/" + key, "expected an array");
    return v;
}

inline std::string string_at(const json& v, const std::string& where) {
    if (!v.is_string())
        throw ParseError(where, "expected a string");
    return v.get<std::string>();
}

inline std::vector<std::string> string_list(const json& arr, const std::string& where) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(string_at(arr[i], where + "/" + std::to_string(i)));
    return out;
}

template <class Lookup>
std::size_t resolve(const Lookup& lookup, const std::string& name, const std::string& where,
                    const char* what) {
    auto idx = lookup(name);
    if (!idx)
        throw ParseError(where, std::string("unknown ") + what + " '" + name + "'");
    return *idx;
}

class NameIndex {
public:
    explicit NameIndex(const std::vector<std::string>& names) {
        for (std::size_t i = 0; i < names.size(); ++i)
            map_.emplace(names[i], i);
    }

    std::optional<std::size_t> operator()(const std::string& n) const {
        auto it = map_.find(n);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

private:
    std::unordered_map<std::string, std::size_t> map_;
};

inline std::vector<std::string> unique_names(const json& arr, const std::string& where,
                                             const char* what) {
    auto names = string_list(arr, where);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            throw ParseError(where + "/" + std::to_string(i), std::string("empty ") + what + " name");
        if (!seen.insert(names[i]).second)
            throw ParseError(where + "/" + std::to_string(i),
                             std::string("duplicate ") + what + " '" + names[i] + "'");
    }
    return names;
}

}  // namespace detail

inline json parse_json_text(const std::string& text, const std::string& source = "") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source, std::string("malformed JSON: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json load_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

/// net if the document has "places", action if it has "states".
inline InputKind detect_kind(const json& doc) {
    if (!doc.is_object())
        throw ParseError("", "input document must be a JSON object");
    const bool net = doc.contains("places");
    const bool action = doc.contains("states");
    if (net == action)
        throw ParseError("", net ? "document has both 'places' and 'states'; pass --kind"
                                 : "cannot infer input kind: expected 'places' (net) or "
                                   "'states' (action)");
    return net ? InputKind::net : InputKind::action;
}

inline PartialActionSystem parse_action(const json& doc) {
    if (!doc.is_object())
        throw ParseError("", "action document must be a JSON object");
    auto events = detail::unique_names(detail::array_field(doc, "", "events"), "/events", "event");
    auto states = detail::unique_names(detail::array_field(doc, "", "states"), "/states", "state");
    const detail::NameIndex event_of(events);
    const detail::NameIndex state_of(states);

    std::vector<std::pair<EventIndex, EventIndex>> pairs;
    if (doc.contains("independence")) {
        const json& ind = detail::array_field(doc, "", "independence");
        for (std::size_t i = 0; i < ind.size(); ++i) {
            const std::string where = "/independence/" + std::to_string(i);
            if (!ind[i].is_array() || ind[i].size() != 2)
                throw ParseError(where, "expected a pair of event names");
            auto a = detail::resolve(event_of, detail::string_at(ind[i][0], where + "/0"),
                                     where + "/0", "event");
            auto b = detail::resolve(event_of, detail::string_at(ind[i][1], where + "/1"),
                                     where + "/1", "event");
            if (a == b)
                throw ParseError(where, "an event cannot be independent of itself");
            pairs.emplace_back(a, b);
        }
    }

    std::optional<StateIndex> initial;
    if (doc.contains("initial") && !doc["initial"].is_null())
        initial = detail::resolve(state_of, detail::string_at(doc["initial"], "/initial"),
                                  "/initial", "state");

    std::vector<Transition> transitions;
    std::set<std::pair<StateIndex, EventIndex>> defined;
    const json& tr = detail::array_field(doc, "", "transitions");
    for (std::size_t i = 0; i < tr.size(); ++i) {
        const std::string where = "/transitions/" + std::to_string(i);
        if (!tr[i].is_object())
            throw ParseError(where, "expected an object with from/event/to");
        auto from = detail::resolve(
            state_of, detail::string_at(detail::field(tr[i], where, "from"), where + "/from"),
            where + "/from", "state");
        auto event = detail::resolve(
            event_of, detail::string_at(detail::field(tr[i], where, "event"), where + "/event"),
            where + "/event", "event");
        auto to = detail::resolve(
            state_of, detail::string_at(detail::field(tr[i], where, "to"), where + "/to"),
            where + "/to", "state");
        if (!defined.emplace(from, event).second)
            throw ParseError(where, "duplicate transition for ('" + states[from] + "', '" +
                                        events[event] + "')");
        transitions.push_back({from, event, to});
    }
    const std::size_t n_events = events.size();
    return PartialActionSystem(EventAlphabet(std::move(events)),
                               IndependenceRelation(n_events, pairs), std::move(states),
                               transitions, initial);
}

inline CENet parse_net(const json& doc) {
    if (!doc.is_object())
        throw ParseError("", "net document must be a JSON object");
    auto places = detail::unique_names(detail::array_field(doc, "", "places"), "/places", "place");
    const detail::NameIndex place_of(places);
    auto place_list = [&](const json& arr, const std::string& where) {
        if (!arr.is_array())
            throw ParseError(where, "expected an array of place names");
        std::vector<PlaceIndex> out;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string w = where + "/" + std::to_string(i);
            out.push_back(detail::resolve(place_of, detail::string_at(arr[i], w), w, "place"));
        }
        return out;
    };

    std::vector<CENet::EventSpec> specs;
    std::set<std::string> names;
    const json& evs = detail::array_field(doc, "", "events");
    for (std::size_t i = 0; i < evs.size(); ++i) {
        const std::string where = "/events/" + std::to_string(i);
        if (!evs[i].is_object())
            throw ParseError(where, "expected an object with name/pre/post");
        CENet::EventSpec spec;
        spec.name = detail::string_at(detail::field(evs[i], where, "name"), where + "/name");
        if (spec.name.empty())
            throw ParseError(where + "/name", "empty event name");
        if (!names.insert(spec.name).second)
            throw ParseError(where + "/name", "duplicate event '" + spec.name + "'");
        spec.pre = evs[i].contains("pre") ? place_list(evs[i]["pre"], where + "/pre")
                                          : std::vector<PlaceIndex>{};
        spec.post = evs[i].contains("post") ? place_list(evs[i]["post"], where + "/post")
                                            : std::vector<PlaceIndex>{};
        specs.push_back(std::move(spec));
    }
    std::vector<PlaceIndex> initial;
    if (doc.contains("initial"))
        initial = place_list(doc["initial"], "/initial");
    return CENet(std::move(places), specs, initial);
}

inline json to_json(const PartialActionSystem& sys) {
    json doc;
    doc["events"] = sys.alphabet().names();
    doc["independence"] = json::array();
    for (auto [a, b] : sys.independence().pairs())
        doc["independence"].push_back({sys.alphabet().name(a), sys.alphabet().name(b)});
    doc["states"] = sys.states();
    if (sys.initial())
        doc["initial"] = sys.state_name(*sys.initial());
    doc["transitions"] = json::array();
    for (const auto& t : sys.transitions())
        doc["transitions"].push_back({{"from", sys.state_name(t.from)},
                                      {"event", sys.alphabet().name(t.event)},
                                      {"to", sys.state_name(t.to)}});
    return doc;
}

inline json to_json(const CENet& net) {
    auto names = [&](const Marking& m) {
        json arr = json::array();
        for (auto p : marked_places(m))
            arr.push_back(net.places()[p]);
        return arr;
    };
    json doc;
    doc["places"] = net.places();
    doc["events"] = json::array();
    for (const auto& e : net.events())
        doc["events"].push_back({{"name", e.name}, {"pre", names(e.pre)}, {"post", names(e.post)}});
    doc["initial"] = names(net.initial());
    return doc;
}

// Big integers are written as JSON numbers when they fit in 64 bits, else as
// decimal strings; both forms are accepted on input.
inline json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Integer integer_from_json(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer())
            return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>())
                                          : Integer(v.get<std::int64_t>());
        if (v.is_string())
            return Integer(v.get<std::string>());
    } catch (const std::runtime_error&) {
    }
    throw ParseError(where, "expected an integer");
}

namespace detail {

inline std::size_t size_from_json(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ParseError(where, "expected a non-negative integer");
    return v.get<std::size_t>();
}

inline void put_entry(SparseIntMatrix& m, std::set<std::pair<std::size_t, std::size_t>>& seen,
                      std::size_t r, std::size_t c, const Integer& v, const std::string& where) {
    if (r >= m.rows() || c >= m.cols())
        throw ParseError(where, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") outside a " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + " matrix");
    if (!seen.emplace(r, c).second)
        throw ParseError(where, "duplicate entry (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
    m.add(r, c, v);
}

}  // namespace detail

inline SparseIntMatrix parse_matrix_json(const json& doc) {
    if (!doc.is_object())
        throw ParseError("", "matrix document must be a JSON object");
    SparseIntMatrix m(detail::size_from_json(detail::field(doc, "", "rows"), "/rows"),
                      detail::size_from_json(detail::field(doc, "", "cols"), "/cols"));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const json& entries = detail::array_field(doc, "", "entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "/entries/" + std::to_string(i);
        if (!entries[i].is_array() || entries[i].size() != 3)
            throw ParseError(where, "expected [row, col, value]");
        detail::put_entry(m, seen, detail::size_from_json(entries[i][0], where + "/0"),
                          detail::size_from_json(entries[i][1], where + "/1"),
                          integer_from_json(entries[i][2], where + "/2"), where);
    }
    return m;
}

inline SparseIntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::optional<SparseIntMatrix> m;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no);
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        try {
            if (!m) {
                if (tok.size() != 2)
                    throw ParseError(where, "expected 'rows cols' header");
                m.emplace(std::stoull(tok[0]), std::stoull(tok[1]));
                continue;
            }
            if (tok.size() != 3)
                throw ParseError(where, "expected 'row col value'");
            detail::put_entry(*m, seen, std::stoull(tok[0]), std::stoull(tok[1]), Integer(tok[2]),
                              where);
        } catch (const std::invalid_argument&) {
            throw ParseError(where, "malformed number");
        } catch (const std::out_of_range&) {
            throw ParseError(where, "number out of range");
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const ParseError*>(&e))
                throw;
            throw ParseError(where, "malformed number");
        }
    }
    if (!m)
        throw ParseError("", "empty matrix file");
    return *m;
}

inline SparseIntMatrix parse_matrix(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_matrix_json(parse_json_text(text));
    return parse_matrix_text(text);
}

inline std::vector<std::string> basis_labels(const PartialActionSystem& sys,
                                             const GradedComplex& c, std::size_t n) {
    std::vector<std::string> out;
    for (const auto& q : c.bases.at(n))
        out.push_back(label(sys, q));
    return out;
}

/// Matrix of d_n as JSON triplets with row and column labels.
inline json differential_to_json(const PartialActionSystem& sys, const GradedComplex& c,
                                 std::size_t n) {
    const auto& d = c.differentials.at(n);
    json doc;
    doc["degree"] = n;
    doc["rows"] = d.rows();
    doc["cols"] = d.cols();
    doc["row_labels"] = basis_labels(sys, c, n - 1);
    doc["col_labels"] = basis_labels(sys, c, n);
    doc["entries"] = json::array();
    for (const auto& t : d.triplets())
        doc["entries"].push_back({t.row, t.col, integer_to_json(t.value)});
    return doc;
}

/// Plain-text table: a "cols" header line of column labels, then one line per
/// row holding the row label and the entries.
inline std::string differential_to_text(const PartialActionSystem& sys, const GradedComplex& c,
                                        std::size_t n) {
    const auto& d = c.differentials.at(n);
    const auto rows = basis_labels(sys, c, n - 1);
    const auto cols = basis_labels(sys, c, n);
    std::ostringstream out;
    out << "d_" << n << " " << d.rows() << "x" << d.cols() << "\n";
    out << "cols";
    for (const auto& l : cols)
        out << ' ' << l;
    out << "\n";
    const auto dense = d.dense();
    for (std::size_t r = 0; r < d.rows(); ++r) {
        out << rows[r];
        for (const auto& v : dense[r])
            out << ' ' << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace tracehom

#endif  // TRACEHOM_IO_HPP
