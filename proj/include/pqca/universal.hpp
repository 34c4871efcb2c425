#ifndef PQCA_UNIVERSAL_HPP
#define PQCA_UNIVERSAL_HPP

#include <string>

#include "pqca/engine.hpp"

namespace pqca {

struct ClosureConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rotation {
    int quarter_turns = 0;  // 0..3, counterclockwise
};

// Counterclockwise quarter turns: cell contents move TL->BL->BR->TR->TL.
BlockState rotate_block(const BlockState& b, Rotation r);

// The paper's scattering unitary on {empty, sig0, sig1, barrier}: signal
// propagation, wall bounce, single-barrier pass, semitransparent (Hadamard)
// barrier, and signal crossing with a conditional e^{i pi/4}; closed under
// the four rotations, identity elsewhere.
const BlockRule& universal_rule();
BlockRule build_universal_rule();

// Which seed clause (and rotation) covers the block, or "identity".
std::string classify_block(const BlockState& b);

}  // namespace pqca

#endif
