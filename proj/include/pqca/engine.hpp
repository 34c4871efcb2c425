#ifndef PQCA_ENGINE_HPP
#define PQCA_ENGINE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pqca/core.hpp"

namespace pqca {

// Four cells of a 2x2 block in the fixed project-wide order
// (top-left, top-right, bottom-left, bottom-right).
struct BlockState {
    std::array<CellState, 4> cells{0, 0, 0, 0};

    CellState tl() const { return cells[0]; }
    CellState tr() const { return cells[1]; }
    CellState bl() const { return cells[2]; }
    CellState br() const { return cells[3]; }

    friend bool operator==(const BlockState&, const BlockState&) = default;
    friend auto operator<=>(const BlockState&, const BlockState&) = default;

    // Packed index, base k, in cell order tl,tr,bl,br.
    int index(int k) const {
        return ((cells[0] * k + cells[1]) * k + cells[2]) * k + cells[3];
    }
    static BlockState from_index(int idx, int k) {
        BlockState b;
        b.cells[3] = CellState(idx % k);
        idx /= k;
        b.cells[2] = CellState(idx % k);
        idx /= k;
        b.cells[1] = CellState(idx % k);
        idx /= k;
        b.cells[0] = CellState(idx % k);
        return b;
    }
    bool all_quiescent() const {
        return cells[0] == 0 && cells[1] == 0 && cells[2] == 0 && cells[3] == 0;
    }
};

struct ConflictingClauses : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AlphabetTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnitarityReport {
    double max_deviation = 0;
    bool ok = false;
};

// Sparse scattering unitary on one block: clauses map a source block state to
// a superposition of target block states; unmapped sources act as identity.
class BlockRule {
  public:
    explicit BlockRule(int alphabet_size = 4) : k_(alphabet_size) {}

    int alphabet_size() const { return k_; }

    // Throws ConflictingClauses if src already has a clause.
    void add_clause(const BlockState& src, std::vector<std::pair<BlockState, cplx>> targets);
    bool has_clause(const BlockState& src) const { return clauses_.count(src.index(k_)) > 0; }

    // Image of a basis block (identity completion for unmapped sources).
    const std::vector<std::pair<BlockState, cplx>>& apply(const BlockState& src) const;

    std::size_t clause_count() const { return clauses_.size(); }
    const std::unordered_map<int, std::vector<std::pair<BlockState, cplx>>>& clauses() const {
        return clauses_;
    }

    // States that never move or react: a state s (non-quiescent) is static if
    // no clause source contains any cell outside {quiescent} ∪ static-set with
    // ... computed conservatively at finalize time. Blocks whose non-quiescent
    // cells are all static can be skipped during sparse application.
    void finalize();
    bool is_static(CellState s) const { return s < static_.size() && static_[s]; }
    bool finalized() const { return finalized_; }

    std::string serialize() const;
    static BlockRule deserialize(const std::string& text);

  private:
    int k_;
    std::unordered_map<int, std::vector<std::pair<BlockState, cplx>>> clauses_;
    std::vector<bool> static_;
    bool finalized_ = false;
    mutable std::unordered_map<int, std::vector<std::pair<BlockState, cplx>>> identity_cache_;
};

// Full k^4 x k^4 matrix check of U†U = I. Requires k^4 <= 4096.
UnitarityReport check_unitarity(const BlockRule& r);

enum class PartitionOffset { even, odd };

// One partition layer: apply the rule to every 2x2 block of the partition
// that contains a non-quiescent (and non-static-only) cell.
Superposition apply_layer(const Superposition& s, const BlockRule& r, PartitionOffset off);

// Even offset at even t_index, odd offset at odd t_index.
Superposition step(const Superposition& s, const BlockRule& r, long t_index);
Superposition evolve(const Superposition& s, const BlockRule& r, long steps,
                     long t_start = 0);

}  // namespace pqca

#endif
