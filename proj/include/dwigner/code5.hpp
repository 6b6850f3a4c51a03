#pragma once

#include <array>
#include <string>
#include <vector>

#include "dwigner/wigner.hpp"

namespace dwigner {

enum class PauliKind { X, Y, Z };

// The perfect five-qubit code in its phase-space frame: ring graph-state
// stabilizers as horizontal generators, single-qubit Z's as vertical ones.
struct CodeFrame {
    static constexpr int n = 5;
    static constexpr int d = 32;

    std::array<PauliElement, 5> stabilizers;  // S_j = Z_(j-1) X_(j) Z_(j+1)
    PauliElement logical_z;                   // S~ = S_1 ... S_5 = -X_(1)...X_(5)
    PauliElement logical_x;                   // Z_(1) ... Z_(5)
    StateAmplitudes logical_zero;             // ring graph state
    StateAmplitudes logical_one;              // Z^x5 |0>_L

    TranslationFrame frame;                   // X'_j = S_j, Z'_j = Z_(j)
    std::shared_ptr<const RaySystem> rays;    // net machinery over the primed frame
};

CodeFrame build_code_frame();

// T'(q, p) = X'^q Z'^p i^(q.p) reduced to one phase-tracked Pauli.
PauliElement code_translation(tuple_t q, tuple_t p, const CodeFrame& frame);

// A net in the primed frame localizing the interference of any encoded
// superposition on the horizontal lines p_I and p_I + (1,1,1,1,1).
// Unconstrained signs stay +1, so the horizontal ray state is |0>_L.
QuantumNet code_net_for(tuple_t p_I, const CodeFrame& frame);

// Momentum offset added by a one-qubit Pauli error at site j (1-based):
// Z_j -> e_j, X_j -> e_(j-1)+e_(j+1), Y_j -> e_(j-1)+e_j+e_(j+1), cyclic.
tuple_t error_p_offset(PauliKind kind, int site);

struct ErrorCase {
    PauliKind kind;
    int site = 0;             // 1..5
    tuple_t p_offset = 0;
    std::string label;        // "X3", "Z1", ...
};

struct SyndromeReport {
    std::vector<ErrorCase> errors;              // all 15 one-qubit errors
    bool offsets_distinct = false;
    bool offsets_avoid_logical_lines = false;   // none in {0, m}
    bool offset_differences_avoid_logical = false;
    double gram_max_offdiag = 0;                // encoded state + 15 error images
    double gram_max_diag_dev = 0;
    double code_space_overlap = 0;              // max |<error image|logical>|
    // Z_(j-1) Z_(j+1) lands on the same offset as X_(j), one pair per site.
    std::vector<std::pair<std::string, std::string>> degeneracy_pairs;
    bool passed = false;

    std::string to_json() const;
};

SyndromeReport syndrome_analysis(const CodeFrame& frame);

// Full CLI-facing report: logical-state tables, the encoded |+>_L table for
// the chosen net, error offsets and the syndrome summary.
std::string code5_report_json(const CodeFrame& frame, tuple_t p_I);

}  // namespace dwigner
