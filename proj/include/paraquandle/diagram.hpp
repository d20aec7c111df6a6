// paraquandle — oriented link diagrams as arc/crossing tables.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "paraquandle/errors.hpp"

namespace pq {

/// One crossing of an oriented diagram. All arc indices are 0-based; the
/// diagram is normalized so that crossing i is the crossing where arc i ends
/// (under_in == i always holds after construction).
struct Crossing {
    int sign = 0;       // +1 or -1
    int over = -1;      // arc passing over
    int under_in = -1;  // arc terminating here
    int under_out = -1; // arc continuing the under strand
};

/// An oriented link diagram with n crossings and n arcs.
///
/// The construction data are, per crossing i: the over arc o_i and the sign;
/// plus the partition of arcs into oriented component cycles (successive arcs
/// of a component). under_out at crossing i is the cyclic successor of arc i
/// in its component.
struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components;  // arc cycles; first entry minimal
    std::vector<int> comp_of;                  // arc index -> component id
    std::vector<int> seed_hints;               // optional extra seed arcs

    int size() const { return (int)crossings.size(); }
    int next_arc(int arc) const;               // successor in the component cycle
    int writhe() const;
    /// Sum of signs over crossings whose over and under strands both lie in
    /// component c (the blackboard framing correction for that component).
    int self_writhe(int c) const;

    /// Build from 1-based over-arc indices and signs; components default to a
    /// single cycle (1 2 ... n). Throws ParseError on inconsistent data.
    static Diagram build(const std::vector<int>& over_1based,
                         const std::vector<int>& signs,
                         std::vector<std::vector<int>> components_1based = {},
                         std::vector<int> seed_hints_1based = {});
};

/// One letter of a longitude word: the meridian of `over_arc` to the power
/// `sign`.
struct LongitudeLetter {
    int over_arc;
    int sign;
};

/// The (unframed) longitude word of a component: the over-meridians collected
/// while traversing the component once, starting at its lowest-index arc.
std::vector<LongitudeLetter> longitude_word(const Diagram& d, int comp);

/// Parse the native arc-table format:
///   crossings: 4
///   over: 3 4 1 2
///   signs: - + - +
///   components: (1 2 3) (4 5)      # optional, defaults to one full cycle
///   seed-hint: 8                   # optional
/// '#' starts a comment anywhere; keys may appear in any order.
Diagram parse_arcs(const std::string& text);

/// Render a diagram back into the native format (stable layout).
std::string to_arcs(const Diagram& d);

/// Parse a planar-diagram code: a list of quadruples X[a,b,c,d] meaning the
/// under strand enters at edge a and leaves at edge c, while b and d are the
/// over-strand edges. Edge labels run 1..2n consecutively along each
/// component. The crossing is positive when the over strand runs d -> b.
Diagram parse_pd(const std::string& text);

/// Dispatch on content: a PD code if an 'X[' group or 'PD' prefix is present,
/// the native arc-table format otherwise.
Diagram parse_diagram(const std::string& text);

}  // namespace pq
