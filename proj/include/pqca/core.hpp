#ifndef PQCA_CORE_HPP
#define PQCA_CORE_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pqca {

using cplx = std::complex<double>;

// Pruning threshold for amplitudes after linear combinations. Genuine
// amplitudes in the universal rule are products of 2^(-k/2) factors and a
// handful of unit phases, so anything below this is cancellation residue.
inline constexpr double kPruneEps = 1e-14;
inline constexpr double kUnitaryTol = 1e-12;

// A cell state is an index into a finite alphabet; index 0 is quiescent.
using CellState = std::uint8_t;

// The universal alphabet {empty, signal 0, signal 1, barrier}.
struct Univ {
    static constexpr CellState empty = 0;
    static constexpr CellState sig0 = 1;
    static constexpr CellState sig1 = 2;
    static constexpr CellState barrier = 3;
};

struct Alphabet {
    int size = 4;
    // Char per state for the grid format; decimal indices are used above 4.
    static char to_char(CellState s);
    static std::optional<CellState> from_char(char c);
};

struct Position {
    int x = 0;
    int y = 0;
    friend bool operator==(const Position&, const Position&) = default;
    friend auto operator<=>(const Position&, const Position&) = default;
};

struct PositionHash {
    std::size_t operator()(const Position& p) const {
        std::uint64_t k = (std::uint64_t(std::uint32_t(p.x)) << 32) | std::uint32_t(p.y);
        k *= 0x9E3779B97F4A7C15ull;
        k ^= k >> 29;
        return std::size_t(k);
    }
};

struct Box {
    int min_x, max_x, min_y, max_y;
};

// Finite configuration: sorted sparse map Position -> non-quiescent state.
// Canonical form (sorted, no quiescent entries) makes equality and hashing
// cheap and iteration order deterministic.
class BasisConfiguration {
  public:
    BasisConfiguration() = default;
    explicit BasisConfiguration(std::vector<std::pair<Position, CellState>> cells);

    CellState at(Position p) const;
    // state == 0 erases. Keeps canonical form.
    void set(Position p, CellState state);

    const std::vector<std::pair<Position, CellState>>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }

    std::size_t hash() const;
    friend bool operator==(const BasisConfiguration&, const BasisConfiguration&) = default;
    friend auto operator<=>(const BasisConfiguration&, const BasisConfiguration&) = default;

  private:
    std::vector<std::pair<Position, CellState>> cells_;  // sorted by position
};

struct ConfigHash {
    std::size_t operator()(const BasisConfiguration& c) const { return c.hash(); }
};

BasisConfiguration shift(const BasisConfiguration& c, int dx, int dy);
std::optional<Box> support_bounds(const BasisConfiguration& c);

// Finite superposition of configurations. Terms with |amp| < kPruneEps are
// dropped on insertion.
class Superposition {
  public:
    Superposition() = default;
    static Superposition basis(BasisConfiguration c) {
        Superposition s;
        s.add(std::move(c), 1.0);
        return s;
    }

    void add(BasisConfiguration c, cplx amp);
    double norm() const;   // 2-norm
    void normalize();
    void scale(cplx a);
    std::size_t term_count() const { return terms_.size(); }
    const std::unordered_map<BasisConfiguration, cplx, ConfigHash>& terms() const {
        return terms_;
    }
    cplx amplitude(const BasisConfiguration& c) const;

    // Terms sorted by configuration; deterministic output order.
    std::vector<std::pair<BasisConfiguration, cplx>> sorted_terms() const;

  private:
    std::unordered_map<BasisConfiguration, cplx, ConfigHash> terms_;
};

cplx inner_product(const Superposition& a, const Superposition& b);
Superposition shift(const Superposition& s, int dx, int dy);

// Text grid format: header "origin X Y", then rows top-first.
std::string format_grid(const BasisConfiguration& c);
BasisConfiguration parse_grid(const std::string& text);  // throws std::runtime_error

}  // namespace pqca

#endif
