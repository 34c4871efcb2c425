#include "pqca/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pqca {

char Alphabet::to_char(CellState s) {
    switch (s) {
        case Univ::empty: return '.';
        case Univ::sig0: return '0';
        case Univ::sig1: return '1';
        case Univ::barrier: return '#';
        default: return '?';
    }
}

std::optional<CellState> Alphabet::from_char(char c) {
    switch (c) {
        case '.': return Univ::empty;
        case '0': return Univ::sig0;
        case '1': return Univ::sig1;
        case '#': return Univ::barrier;
        default: return std::nullopt;
    }
}

BasisConfiguration::BasisConfiguration(std::vector<std::pair<Position, CellState>> cells)
    : cells_(std::move(cells)) {
    std::erase_if(cells_, [](const auto& pc) { return pc.second == 0; });
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 1; i < cells_.size(); ++i) {
        if (cells_[i].first == cells_[i - 1].first)
            throw std::runtime_error("duplicate cell in configuration");
    }
}

CellState BasisConfiguration::at(Position p) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), p,
                               [](const auto& pc, const Position& q) { return pc.first < q; });
    if (it != cells_.end() && it->first == p) return it->second;
    return 0;
}

void BasisConfiguration::set(Position p, CellState state) {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), p,
                               [](const auto& pc, const Position& q) { return pc.first < q; });
    if (it != cells_.end() && it->first == p) {
        if (state == 0)
            cells_.erase(it);
        else
            it->second = state;
    } else if (state != 0) {
        cells_.insert(it, {p, state});
    }
}

std::size_t BasisConfiguration::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
    };
    for (const auto& [p, s] : cells_) {
        mix(std::uint32_t(p.x));
        mix(std::uint32_t(p.y));
        mix(s);
    }
    return std::size_t(h);
}

BasisConfiguration shift(const BasisConfiguration& c, int dx, int dy) {
    // New cell (x,y) equals old cell (x+dx, y+dy): support moves by (-dx,-dy).
    std::vector<std::pair<Position, CellState>> cells;
    cells.reserve(c.size());
    for (const auto& [p, s] : c.cells()) cells.push_back({{p.x - dx, p.y - dy}, s});
    return BasisConfiguration(std::move(cells));
}

std::optional<Box> support_bounds(const BasisConfiguration& c) {
    if (c.empty()) return std::nullopt;
    Box b{c.cells()[0].first.x, c.cells()[0].first.x, c.cells()[0].first.y,
          c.cells()[0].first.y};
    for (const auto& [p, s] : c.cells()) {
        b.min_x = std::min(b.min_x, p.x);
        b.max_x = std::max(b.max_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_y = std::max(b.max_y, p.y);
    }
    return b;
}

void Superposition::add(BasisConfiguration c, cplx amp) {
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        if (std::abs(amp) >= kPruneEps) terms_.emplace(std::move(c), amp);
        return;
    }
    it->second += amp;
    if (std::abs(it->second) < kPruneEps) terms_.erase(it);
}

double Superposition::norm() const {
    double n2 = 0;
    for (const auto& [c, a] : terms_) n2 += std::norm(a);
    return std::sqrt(n2);
}

void Superposition::normalize() {
    double n = norm();
    if (n == 0) throw std::runtime_error("cannot normalize zero state");
    scale(1.0 / n);
}

void Superposition::scale(cplx a) {
    for (auto& [c, amp] : terms_) amp *= a;
}

cplx Superposition::amplitude(const BasisConfiguration& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? cplx(0) : it->second;
}

std::vector<std::pair<BasisConfiguration, cplx>> Superposition::sorted_terms() const {
    std::vector<std::pair<BasisConfiguration, cplx>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

cplx inner_product(const Superposition& a, const Superposition& b) {
    // Iterate over the smaller map.
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = a.terms().size() <= b.terms().size() ? b : a;
    bool small_is_a = &small == &a;
    cplx acc = 0;
    for (const auto& [c, amp] : small.terms()) {
        cplx other = large.amplitude(c);
        acc += small_is_a ? std::conj(amp) * other : std::conj(other) * amp;
    }
    return acc;
}

Superposition shift(const Superposition& s, int dx, int dy) {
    Superposition out;
    for (const auto& [c, a] : s.terms()) out.add(shift(c, dx, dy), a);
    return out;
}

std::string format_grid(const BasisConfiguration& c) {
    auto b = support_bounds(c);
    std::ostringstream os;
    if (!b) {
        os << "origin 0 0\n.\n";
        return os.str();
    }
    os << "origin " << b->min_x << ' ' << b->min_y << '\n';
    for (int y = b->max_y; y >= b->min_y; --y) {
        for (int x = b->min_x; x <= b->max_x; ++x) os << Alphabet::to_char(c.at({x, y}));
        os << '\n';
    }
    return os.str();
}

BasisConfiguration parse_grid(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    int ox, oy;
    if (!(is >> word) || word != "origin" || !(is >> ox >> oy))
        throw std::runtime_error("grid: expected header 'origin X Y'");
    std::string line;
    std::getline(is, line);  // rest of header line
    std::vector<std::string> rows;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw std::runtime_error("grid: no rows");
    std::vector<std::pair<Position, CellState>> cells;
    int height = int(rows.size());
    for (int r = 0; r < height; ++r) {
        // Top row first: row r is at y = oy + height - 1 - r.
        int y = oy + height - 1 - r;
        for (int i = 0; i < int(rows[r].size()); ++i) {
            auto s = Alphabet::from_char(rows[r][i]);
            if (!s) throw std::runtime_error(std::string("grid: unknown character '") +
                                             rows[r][i] + "'");
            if (*s != 0) cells.push_back({{ox + i, y}, *s});
        }
    }
    return BasisConfiguration(std::move(cells));
}

}  // namespace pqca
