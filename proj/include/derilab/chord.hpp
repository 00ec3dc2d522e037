#pragma once

#include <optional>

#include "derilab/symp.hpp"

namespace derilab {

enum class VertexClass { Unpaired, SinglePaired, MultiplePaired };

// Chord view of a spider: vertices in canonical rotation order, an edge
// between every vertex pair whose colors differ by sign.
struct ChordDiagram {
    int g = 0;
    Spider spider;
    std::vector<std::pair<int, int>> chords;  // (i, j) with i < j
    std::vector<int> chord_degree;            // per vertex
};

ChordDiagram chord_diagram_of(const Spider& s, int g);

// m(C) = 2*(number of chords) - (number of chorded vertices).
int multiplicity(const ChordDiagram& c);
int multiplicity_of_colors(const ColorWord& w);

std::vector<VertexClass> classify_vertices(const ChordDiagram& c);

// Arc between two gaps; gap t sits between vertex t and vertex t+1 (mod len).
struct Arc {
    int gap1 = 0, gap2 = 0;
};

// First admissible arc in (gap1, gap2) order: both regions have >= 2
// vertices and no chord crosses.
std::optional<Arc> is_separable(const ChordDiagram& c);

// Cut along the arc and cap both pieces with a fresh color pair; the bracket
// of the two pieces reproduces the input spider exactly.
std::pair<Spider, Spider> split_separable(const ChordDiagram& c, const Arc& arc, Color fresh);

// Chain-shaped target diagrams: chain colors c_1..c_m interleaved as
// (c1, c2, -c1, c3, -c2, ..., cm, -c_{m-1}, [d1], -cm, [d2]) with all colors
// mutually distinct and the d vertices unpaired. Pattern ids:
//   1 = both whites present, 2 = d1 only, 3 = d2 only, 4 = bare chain.
struct StandardForm {
    int pattern = 0;
    std::vector<Color> chain;
    std::vector<Color> whites;
};

std::optional<StandardForm> is_standard_form(const ChordDiagram& c);

struct BracketTerm {
    Spider left, right;
    Int coeff;
};

struct SpiderTerm {
    Spider s;
    Int coeff;
};

// Auditable equation: input = sum coeff*[left,right] + sum coeff*spider,
// machine-checked by tensor expansion.
struct ReductionCertificate {
    int g = 0;
    Spider input;
    std::vector<BracketTerm> brackets;
    std::vector<SpiderTerm> remainder;
    std::vector<Color> fresh_log;
    int input_multiplicity = 0;
    int max_multiplicity = 0;   // over all intermediate diagrams
    int max_backward_steps = 0; // multiple-paired rewrites along one trace
    long long steps = 0;
};

// Exact tensor-expansion check of the certificate identity.
bool audit_certificate(const ReductionCertificate& cert);

// Internal state of the reduction walk: the word parsed as
// chain prefix (c1, c2, -c1, ..., c_l, -c_{l-1}) ++ X ++ (-c_l) ++ Y.
struct ConfigurationState {
    ColorWord word;
    int chain_len = 0;  // l; 0 = not yet parsed
    int xlen = -1;
    Int coeff;
    int backward = 0;
};

// Smallest positive color with neither sign present in the word; throws when
// the genus has no spare color.
Color fresh_color(const ColorWord& w, int g);

// One chord slide at the adjacent vertex pair (site, site+1) of the
// canonical word. Covers the three shapes: single/single with either
// nesting, and single/unpaired. The returned fragment balances exactly.
ReductionCertificate chord_slide(const Spider& s, int site, Color fresh, int g);

// Iterated chord slides carrying the first chain chord across the chain of a
// standard-form diagram (unpaired vertices ride along). Stops when the
// running diagram becomes separable or standard again.
ReductionCertificate chord_cycle(const Spider& s, int g);

// Legs sorted in reverse order; an involution.
Spider mirror(const Spider& s, int g);

// Components of the inner boundary of the fattened standard-form diagram,
// crossings ignored: 1 when the chord count is even, 2 when odd.
int inner_boundary_components(const ChordDiagram& c);

// Rewrites the spider modulo brackets into standard-form remainders,
// emitting an auditable certificate. Requires g >= degree + 3 >= 6.
ReductionCertificate reduce_to_standard(const Spider& s, int g);

}  // namespace derilab
