// paraquandle — diagram construction, validation and the two input formats.
// SPDX-License-Identifier: MIT

#include "paraquandle/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace pq {

int Diagram::next_arc(int arc) const {
    const auto& cycle = components[comp_of[arc]];
    for (size_t k = 0; k < cycle.size(); ++k)
        if (cycle[k] == arc) return cycle[(k + 1) % cycle.size()];
    throw std::logic_error("arc missing from its component cycle");
}

int Diagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
}

int Diagram::self_writhe(int c) const {
    int w = 0;
    for (const auto& x : crossings)
        if (comp_of[x.over] == c && comp_of[x.under_in] == c) w += x.sign;
    return w;
}

Diagram Diagram::build(const std::vector<int>& over_1based,
                       const std::vector<int>& signs,
                       std::vector<std::vector<int>> components_1based,
                       std::vector<int> seed_hints_1based) {
    const int n = (int)over_1based.size();
    if (n == 0) throw ParseError("diagram has no crossings");
    if ((int)signs.size() != n)
        throw ParseError("over/sign arrays disagree in length");
    if (components_1based.empty()) {
        components_1based.emplace_back();
        for (int i = 1; i <= n; ++i) components_1based.back().push_back(i);
    }

    Diagram d;
    d.comp_of.assign(n, -1);
    for (auto& cyc : components_1based) {
        std::vector<int> cycle;
        for (int a : cyc) {
            if (a < 1 || a > n) throw ParseError("component lists unknown arc");
            if (d.comp_of[a - 1] != -1) throw ParseError("arc repeated across components");
            d.comp_of[a - 1] = (int)d.components.size();
            cycle.push_back(a - 1);
        }
        if (cycle.empty()) throw ParseError("empty component");
        // Normalize the cycle to start at its minimal arc.
        auto mn = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), mn, cycle.end());
        d.components.push_back(std::move(cycle));
    }
    for (int a = 0; a < n; ++a)
        if (d.comp_of[a] == -1) throw ParseError("arc missing from all components");

    d.crossings.resize(n);
    for (int i = 0; i < n; ++i) {
        if (signs[i] != 1 && signs[i] != -1) throw ParseError("sign must be +1 or -1");
        if (over_1based[i] < 1 || over_1based[i] > n)
            throw ParseError("over-arc index out of range");
        d.crossings[i].sign = signs[i];
        d.crossings[i].over = over_1based[i] - 1;
        d.crossings[i].under_in = i;
        d.crossings[i].under_out = d.next_arc(i);
    }
    for (int h : seed_hints_1based) {
        if (h < 1 || h > n) throw ParseError("seed hint out of range");
        d.seed_hints.push_back(h - 1);
    }
    return d;
}

std::vector<LongitudeLetter> longitude_word(const Diagram& d, int comp) {
    if (comp < 0 || comp >= (int)d.components.size())
        throw std::out_of_range("component index out of range");
    std::vector<LongitudeLetter> word;
    for (int arc : d.components[comp]) {
        const Crossing& c = d.crossings[arc];  // crossing where the arc ends
        word.push_back({c.over, c.sign});
    }
    return word;
}

// ---------------------------------------------------------------- formats --

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<int> read_ints(const std::string& s, const char* what) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad integer in ") + what + ": " + tok);
        }
    }
    return out;
}

}  // namespace

Diagram parse_arcs(const std::string& text) {
    int n = -1;
    std::vector<int> over, signs, hints;
    std::vector<std::vector<int>> comps;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip_comment(raw);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            // Only whitespace is allowed outside key lines.
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("unrecognized line: " + raw);
            continue;
        }
        std::string key = line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string val = line.substr(colon + 1);
        if (key == "crossings") {
            auto v = read_ints(val, "crossings");
            if (v.size() != 1 || v[0] < 1) throw ParseError("bad crossings line");
            n = v[0];
        } else if (key == "over") {
            over = read_ints(val, "over");
        } else if (key == "signs") {
            std::istringstream is(val);
            std::string tok;
            while (is >> tok) {
                if (tok == "+" || tok == "+1") signs.push_back(1);
                else if (tok == "-" || tok == "-1") signs.push_back(-1);
                else throw ParseError("bad sign token: " + tok);
            }
        } else if (key == "components") {
            std::string cur;
            bool open = false;
            for (char ch : val) {
                if (ch == '(') {
                    if (open) throw ParseError("nested '(' in components");
                    open = true;
                    cur.clear();
                } else if (ch == ')') {
                    if (!open) throw ParseError("unmatched ')' in components");
                    open = false;
                    comps.push_back(read_ints(cur, "components"));
                } else if (open) {
                    cur += ch;
                } else if (!std::isspace((unsigned char)ch)) {
                    throw ParseError("stray character in components line");
                }
            }
            if (open) throw ParseError("unterminated component cycle");
        } else if (key == "seed-hint") {
            hints = read_ints(val, "seed-hint");
        } else {
            throw ParseError("unknown key: " + key);
        }
    }
    if (n < 0) throw ParseError("missing crossings line");
    if ((int)over.size() != n) throw ParseError("over line must list one arc per crossing");
    if ((int)signs.size() != n) throw ParseError("signs line must list one sign per crossing");
    return Diagram::build(over, signs, std::move(comps), std::move(hints));
}

std::string to_arcs(const Diagram& d) {
    std::ostringstream os;
    os << "crossings: " << d.size() << "\n";
    os << "over:";
    for (const auto& c : d.crossings) os << ' ' << c.over + 1;
    os << "\nsigns:";
    for (const auto& c : d.crossings) os << ' ' << (c.sign > 0 ? '+' : '-');
    os << "\ncomponents:";
    for (const auto& cyc : d.components) {
        os << " (";
        for (size_t k = 0; k < cyc.size(); ++k) os << (k ? " " : "") << cyc[k] + 1;
        os << ")";
    }
    os << "\n";
    if (!d.seed_hints.empty()) {
        os << "seed-hint:";
        for (int h : d.seed_hints) os << ' ' << h + 1;
        os << "\n";
    }
    return os.str();
}

Diagram parse_pd(const std::string& text) {
    std::vector<int> nums;
    for (size_t i = 0; i < text.size();) {
        if (std::isdigit((unsigned char)text[i])) {
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            nums.push_back(std::stoi(text.substr(i, j - i)));
            i = j;
        } else {
            ++i;
        }
    }
    if (nums.empty() || nums.size() % 4 != 0)
        throw ParseError("PD code must consist of quadruples");
    const int n = (int)nums.size() / 4;
    const int edges = 2 * n;

    std::vector<int> cnt(edges + 1, 0);
    for (int v : nums) {
        if (v < 1 || v > edges) throw ParseError("PD edge label out of range");
        ++cnt[v];
    }
    for (int e = 1; e <= edges; ++e)
        if (cnt[e] != 2) throw ParseError("each PD edge label must appear exactly twice");

    // Successor of each edge along its strand, plus crossing signs. Each edge
    // ends exactly once (at an under passage or an over passage), so every
    // succ/pred slot is written exactly once.
    std::vector<int> succ(edges + 1, 0), pred(edges + 1, 0);
    std::vector<int> sign(n), ein(n), eout(n), eov1(n), eov2(n);
    auto set_succ = [&](int from, int to) {
        if (succ[from] || pred[to])
            throw ParseError("conflicting strand successors in PD code");
        succ[from] = to;
        pred[to] = from;
    };
    for (int i = 0; i < n; ++i) {
        ein[i] = nums[4 * i];
        eout[i] = nums[4 * i + 2];
        set_succ(ein[i], eout[i]);
    }
    for (int i = 0; i < n; ++i) {
        int b = nums[4 * i + 1], d = nums[4 * i + 3];
        // Positive crossing: over strand runs d -> b; negative: b -> d. Use
        // label arithmetic (labels increase along a component, wrapping at its
        // end to a smaller label), falling back on closure consistency for
        // degenerate loops.
        bool fwd_ok = !succ[d] && !pred[b];  // d -> b possible
        bool bwd_ok = !succ[b] && !pred[d];  // b -> d possible
        if (fwd_ok && bwd_ok) {
            if (b == d + 1) bwd_ok = false;
            else if (d == b + 1) fwd_ok = false;
            else if (b < d) bwd_ok = false;   // wrap: smaller label is successor
            else fwd_ok = false;
        }
        if (fwd_ok) {
            sign[i] = 1;
            set_succ(d, b);
        } else if (bwd_ok) {
            sign[i] = -1;
            set_succ(b, d);
        } else {
            throw ParseError("over strand direction is inconsistent in PD code");
        }
        eov1[i] = std::min(b, d);
        eov2[i] = std::max(b, d);
    }
    for (int e = 1; e <= edges; ++e)
        if (!succ[e]) throw ParseError("edge has no successor; PD code is not closed");

    // Arcs: edges merged through over passages, cut at under passages.
    std::vector<bool> ends_arc(edges + 1, false);
    for (int i = 0; i < n; ++i) ends_arc[ein[i]] = true;
    std::vector<int> arc_of(edges + 1, -1);

    // Walk each edge cycle once, splitting into arcs; collect the component
    // structure (as edge cycles first, then as arc cycles).
    std::vector<bool> visited(edges + 1, false);
    std::vector<std::vector<std::vector<int>>> comp_arc_edges;  // comp -> arcs -> edges
    for (int start = 1; start <= edges; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        for (int e = start; !visited[e]; e = succ[e]) {
            visited[e] = true;
            cycle.push_back(e);
        }
        // Rotate so the cycle begins just after an arc end (an arc boundary).
        int cut = -1;
        for (size_t k = 0; k < cycle.size(); ++k)
            if (ends_arc[cycle[k]]) { cut = (int)k; break; }
        if (cut < 0) throw ParseError("component never passes under; not a closed diagram");
        std::rotate(cycle.begin(), cycle.begin() + cut + 1, cycle.end());
        std::vector<std::vector<int>> arcs;
        arcs.emplace_back();
        for (int e : cycle) {
            arcs.back().push_back(e);
            if (ends_arc[e]) arcs.emplace_back();
        }
        arcs.pop_back();  // the final push created an empty trailing arc
        comp_arc_edges.push_back(std::move(arcs));
    }

    // Deterministic component order: by minimal edge label; the arc holding
    // the smallest edge starts its component.
    std::sort(comp_arc_edges.begin(), comp_arc_edges.end(),
              [](const auto& x, const auto& y) {
                  auto mn = [](const auto& comp) {
                      int m = INT32_MAX;
                      for (const auto& arc : comp)
                          for (int e : arc) m = std::min(m, e);
                      return m;
                  };
                  return mn(x) < mn(y);
              });
    std::vector<std::vector<int>> comp_arcs_1based;
    int arc_counter = 0;
    for (auto& comp : comp_arc_edges) {
        size_t first = 0;
        int best = INT32_MAX;
        for (size_t k = 0; k < comp.size(); ++k)
            for (int e : comp[k])
                if (e < best) { best = e; first = k; }
        std::rotate(comp.begin(), comp.begin() + (long)first, comp.end());
        comp_arcs_1based.emplace_back();
        for (const auto& arc : comp) {
            ++arc_counter;
            for (int e : arc) arc_of[e] = arc_counter;  // 1-based arc ids
            comp_arcs_1based.back().push_back(arc_counter);
        }
    }
    if (arc_counter != n) throw ParseError("arc count does not match crossing count");

    // Assemble per-crossing rows indexed by the terminating arc.
    std::vector<int> over(n + 1, 0), sgn(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (arc_of[eov1[i]] != arc_of[eov2[i]])
            throw ParseError("over-strand edges landed in different arcs");
        int at = arc_of[ein[i]];  // crossing index = index of the arc it ends
        if (sgn[at]) throw ParseError("two crossings terminate the same arc");
        over[at] = arc_of[eov1[i]];
        sgn[at] = sign[i];
    }
    std::vector<int> over_rows(over.begin() + 1, over.end());
    std::vector<int> sign_rows(sgn.begin() + 1, sgn.end());
    return Diagram::build(over_rows, sign_rows, std::move(comp_arcs_1based));
}

Diagram parse_diagram(const std::string& text) {
    if (text.find("X[") != std::string::npos || text.find("PD") != std::string::npos)
        return parse_pd(text);
    return parse_arcs(text);
}

}  // namespace pq
