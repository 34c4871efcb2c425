#include "pqca/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace pqca {

std::string tile_kind_name(TileKind k) {
    switch (k) {
        case TileKind::identity: return "identity";
        case TileKind::hadamard: return "hadamard";
        case TileKind::phase: return "phase";
        case TileKind::swap: return "swap";
        case TileKind::cphase: return "cphase";
        case TileKind::shift_left: return "shift-left";
        case TileKind::shift_right: return "shift-right";
    }
    return "?";
}

namespace {

// Tiles are designed in a sheared frame (u, v) with u = x - y, v = y: a
// free NE signal keeps u constant and gains one v per step. A path is a
// script over moves and bounces; walls are emitted as a side effect.
//   n/e/s/w : free NE / SE / SW / NW moves
//   R/T/L/B : bounce off a right / top / left / bottom wall pair
//   H       : pass a semitransparent (Hadamard) barrier pair while moving NE
struct ScriptResult {
    std::vector<Position> walls;  // xy, relative
    Position exit_uv{0, 0};
    int steps = 0;
};

Position uv_to_xy(int u, int v) { return {u + v, v}; }

ScriptResult run_script(const std::string& script, int u0, int v0) {
    ScriptResult res;
    int u = u0, v = v0;
    auto wall = [&](int wu, int wv) { res.walls.push_back(uv_to_xy(wu, wv)); };
    for (char op : script) {
        switch (op) {
            case 'n': v += 1; break;
            case 'e': u += 2; v -= 1; break;
            case 's': v -= 1; break;
            case 'w': u -= 2; v += 1; break;
            case 'R':
                wall(u + 1, v);
                wall(u, v + 1);
                u -= 1;
                v += 1;
                break;
            case 'T':
                wall(u - 2, v + 1);
                wall(u - 1, v + 1);
                u -= 1;
                break;
            case 'L':
                wall(u - 1, v);
                wall(u, v - 1);
                u += 1;
                v -= 1;
                break;
            case 'B':
                wall(u + 1, v - 1);
                wall(u + 2, v - 1);
                u += 1;
                break;
            case 'H':
                wall(u - 1, v + 1);
                wall(u + 1, v);
                v += 1;
                break;
            default: throw std::runtime_error("bad script op");
        }
        ++res.steps;
    }
    res.exit_uv = {u, v};
    return res;
}

std::string reps(char c, int n) { return std::string(std::size_t(n), c); }

// Delay line: enter at (u0, 0), exit at (u0, 14) after 24 steps. The signal
// detours left, re-enters two columns right of the wire, climbs, and hops
// back. Parameters j (rows before the detour) and G (climb length).
std::string delay_script(int j, int G) {
    return reps('n', j) + "RTLeB" + reps('n', G) + "RwTLB" + reps('n', 14 - j - G);
}

struct TileSpec {
    std::vector<std::pair<std::string, int>> paths;  // script, entry u
    std::vector<int> exit_wire_of_path;              // which wire reads path i's output
    std::optional<AuxSignal> aux;
    std::vector<Position> extra_walls;  // xy
};

TileSpec spec_for(TileKind kind) {
    switch (kind) {
        case TileKind::identity:
            return {{{delay_script(2, 2), 0}}, {0}, std::nullopt, {}};
        case TileKind::hadamard: {
            // Identity delay line with a semitransparent barrier crossed on
            // the final ascent at row 12.
            std::string s = reps('n', 2) + "RTLeB" + reps('n', 2) + "RwTLB" +
                            reps('n', 8) + "H" + reps('n', 1);
            return {{{s, 0}}, {0}, std::nullopt, {}};
        }
        case TileKind::phase: {
            // Delay line (j=6) plus a six-step auxiliary loop the through
            // signal crosses exactly once, at t=2.
            TileSpec spec{{{delay_script(6, 2), 0}}, {0}, AuxSignal{{3, 4}, Univ::sig1}, {}};
            // Loop walls: bottom pair, right pair, top pair, left pair.
            ScriptResult orbit = run_script("eBRwTL", -1, 3);
            spec.extra_walls = orbit.walls;
            return spec;
        }
        case TileKind::swap:
            // Two parallel delay lines; outputs are read crossed.
            return {{{delay_script(2, 2), 0}, {delay_script(2, 2), 8}}, {1, 0}, std::nullopt, {}};
        case TileKind::cphase: {
            // Both signals physically cross (wire 0 moves +4 columns, wire 1
            // moves -4); they share one block at t=2, where the crossing
            // clause applies e^{i pi/4} iff both carry 1.
            std::string a = reps('n', 8) + "RTsLeeB" + reps('n', 9);
            std::string b = "RwwTLeB" + reps('n', 9) + "RwTLB" + reps('n', 3);
            return {{{a, 0}, {b, 4}}, {0, 1}, std::nullopt, {}};
        }
        case TileKind::shift_right:
            return {{{reps('n', 4) + "RTsLeeB" + reps('n', 13), 0}}, {0}, std::nullopt, {}};
        case TileKind::shift_left:
            return {{{reps('n', 5) + "RwwTsssLB" + reps('n', 10), 0}}, {0}, std::nullopt, {}};
    }
    throw std::runtime_error("unknown tile kind");
}

Tile build_tile(TileKind kind) {
    TileSpec spec = spec_for(kind);
    Tile t;
    t.kind = kind;
    t.aux = spec.aux;
    std::set<Position> walls(spec.extra_walls.begin(), spec.extra_walls.end());
    std::vector<Position> path_exit(spec.paths.size());
    for (std::size_t i = 0; i < spec.paths.size(); ++i) {
        const auto& [script, u0] = spec.paths[i];
        ScriptResult res = run_script(script, u0, 0);
        if (res.steps != 24) throw std::runtime_error("tile path is not 24 steps");
        for (const Position& w : res.walls) walls.insert(w);
        path_exit[i] = uv_to_xy(res.exit_uv.x, res.exit_uv.y);
        t.entries.push_back({int(i), uv_to_xy(u0, 0)});
    }
    t.exits.resize(spec.paths.size());
    for (std::size_t i = 0; i < spec.paths.size(); ++i) {
        int wire = spec.exit_wire_of_path[i];
        t.exits[std::size_t(wire)] = Port{wire, path_exit[i]};
    }
    t.barriers.assign(walls.begin(), walls.end());
    for (const Position& w : t.barriers)
        for (const auto& e : t.entries)
            if (w == e.pos) throw std::runtime_error("tile wall on entry port");
    return t;
}

}  // namespace

const Tile& tile(TileKind kind) {
    static const std::map<TileKind, Tile> tiles = [] {
        std::map<TileKind, Tile> m;
        for (TileKind k : {TileKind::identity, TileKind::hadamard, TileKind::phase,
                           TileKind::swap, TileKind::cphase, TileKind::shift_left,
                           TileKind::shift_right})
            m.emplace(k, build_tile(k));
        return m;
    }();
    return tiles.at(kind);
}

BasisConfiguration stamp(const Tile& t, Position origin, BasisConfiguration c) {
    auto put = [&](Position rel, CellState s) {
        Position p{origin.x + rel.x, origin.y + rel.y};
        CellState cur = c.at(p);
        if (cur == s) return;  // identical barrier shared between tiles
        if (cur != Univ::empty)
            throw CollisionError("stamp collision at (" + std::to_string(p.x) + "," +
                                 std::to_string(p.y) + ")");
        c.set(p, s);
    };
    for (const Position& b : t.barriers) put(b, Univ::barrier);
    if (t.aux) put(t.aux->pos, t.aux->state);
    return c;
}

Superposition run_tile_basis(const Tile& t, const std::vector<int>& bits, int steps) {
    BasisConfiguration c = stamp(t, {0, 0}, BasisConfiguration{});
    for (std::size_t w = 0; w < t.entries.size(); ++w)
        c.set(t.entries[w].pos, bits[w] ? Univ::sig1 : Univ::sig0);
    return evolve(Superposition::basis(std::move(c)), universal_rule(), steps);
}

namespace {

// Decodes one evolved basis term: wire bits at the exit ports, with every
// other non-barrier cell quiescent and the aux (if any) back home.
std::optional<std::vector<int>> decode_term(const Tile& t, const BasisConfiguration& c) {
    std::vector<int> bits(t.exits.size(), -1);
    std::size_t expected = t.barriers.size() + t.exits.size() + (t.aux ? 1u : 0u);
    if (c.size() != expected) return std::nullopt;
    for (const auto& [p, s] : c.cells()) {
        if (s == Univ::barrier) continue;  // stamp() guarantees barrier placement is static
        bool matched = false;
        for (const auto& e : t.exits)
            if (p == e.pos) {
                if (s != Univ::sig0 && s != Univ::sig1) return std::nullopt;
                bits[std::size_t(e.wire)] = (s == Univ::sig1) ? 1 : 0;
                matched = true;
            }
        if (!matched && t.aux && p == t.aux->pos && s == t.aux->state) matched = true;
        if (!matched) return std::nullopt;
    }
    for (int b : bits)
        if (b < 0) return std::nullopt;
    return bits;
}

bool any_signal_at_exits(const Tile& t, const Superposition& s) {
    for (const auto& [conf, amp] : s.terms())
        for (const auto& e : t.exits) {
            CellState c = conf.at(e.pos);
            if (c == Univ::sig0 || c == Univ::sig1) return true;
        }
    return false;
}

}  // namespace

GateMatrix extract_gate(TileKind kind) {
    const Tile& t = tile(kind);
    int n = t.wire_count();
    int dim = 1 << n;
    GateMatrix m(std::size_t(dim), std::vector<cplx>(std::size_t(dim), 0.0));
    for (int in = 0; in < dim; ++in) {
        std::vector<int> bits;
        bits.resize(std::size_t(n));
        for (int w = 0; w < n; ++w) bits[std::size_t(w)] = (in >> (n - 1 - w)) & 1;
        Superposition before = run_tile_basis(t, bits, t.latency - 1);
        if (any_signal_at_exits(t, before))
            throw DesyncError(tile_kind_name(kind) + ": mass at exits at t=23");
        Superposition out = step(before, universal_rule(), t.latency - 1);
        for (const auto& [conf, amp] : out.terms()) {
            auto decoded = decode_term(t, conf);
            if (!decoded)
                throw LeakageError(tile_kind_name(kind) + ": amplitude off the exit ports");
            int o = 0;
            for (int w = 0; w < n; ++w) o |= (*decoded)[std::size_t(w)] << (n - 1 - w);
            m[std::size_t(o)][std::size_t(in)] += amp;
        }
        Superposition after = step(out, universal_rule(), t.latency);
        if (any_signal_at_exits(t, after))
            throw DesyncError(tile_kind_name(kind) + ": mass still at exits at t=25");
    }
    return m;
}

GateMatrix target_gate(TileKind kind) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const cplx ph = std::exp(cplx(0, std::numbers::pi / 4));
    switch (kind) {
        case TileKind::identity:
        case TileKind::shift_left:
        case TileKind::shift_right: return {{1, 0}, {0, 1}};
        case TileKind::hadamard: return {{s2, s2}, {s2, -s2}};
        case TileKind::phase: return {{1, 0}, {0, ph}};
        case TileKind::swap: return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        case TileKind::cphase:
            return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, ph}};
    }
    throw std::runtime_error("unknown tile kind");
}

double matrix_deviation(const GateMatrix& a, const GateMatrix& b) {
    double dev = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) dev = std::max(dev, std::abs(a[i][j] - b[i][j]));
    return dev;
}

}  // namespace pqca
