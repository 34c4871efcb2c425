#ifndef PQCA_TILES_HPP
#define PQCA_TILES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pqca/universal.hpp"

namespace pqca {

struct CollisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LeakageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DesyncError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TileKind { identity, hadamard, phase, swap, cphase, shift_left, shift_right };

std::string tile_kind_name(TileKind k);

// A signal port: where wire `wire` carries its qubit at tile time 0 (entry)
// or tile time 24 (exit). All signals travel NE on average.
struct Port {
    int wire = 0;
    Position pos;  // relative to the tile origin
};

// Auxiliary looping signal (the R(pi/4) tile): a sig1 that orbits with
// period 6 and is back at `pos` after 24 steps.
struct AuxSignal {
    Position pos;
    CellState state = Univ::sig1;
};

// A static barrier layout implementing one quantum gate with latency 24.
//
// For the two-wire kinds the wire-to-port map is crossed: wire w exits at
// the other wire's column (entry + (14,14) of the partner port). The swap
// tile moves no signal at all (its two wires run parallel delay lines and the
// outputs are read crossed); the cphase tile physically exchanges the two
// signals, which restores the straight logical wire order while the crossing
// clause contributes e^{i pi/4} exactly on |11>.
struct Tile {
    TileKind kind;
    std::vector<Position> barriers;  // relative, sorted
    std::vector<Port> entries;       // one per wire
    std::vector<Port> exits;         // one per wire
    int latency = 24;
    std::optional<AuxSignal> aux;

    int wire_count() const { return int(entries.size()); }
};

const Tile& tile(TileKind kind);

// Writes barriers and the aux signal at origin-relative positions. Stamping
// a barrier onto an identical barrier is a no-op; any other overlap throws.
BasisConfiguration stamp(const Tile& t, Position origin, BasisConfiguration c);

using GateMatrix = std::vector<std::vector<cplx>>;  // row-major, dim 2 or 4

// Runs every basis input through the tile and assembles the effective gate
// on the wire space. Throws LeakageError / DesyncError on contract breaches.
GateMatrix extract_gate(TileKind kind);

// Places one basis input on the tile and returns the evolved superposition
// (used by the verification harness and tests).
Superposition run_tile_basis(const Tile& t, const std::vector<int>& bits, int steps);

GateMatrix target_gate(TileKind kind);
double matrix_deviation(const GateMatrix& a, const GateMatrix& b);

}  // namespace pqca

#endif
