#include "pqca/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace pqca {

void BlockRule::add_clause(const BlockState& src,
                           std::vector<std::pair<BlockState, cplx>> targets) {
    if (finalized_) throw std::runtime_error("rule already finalized");
    int idx = src.index(k_);
    if (clauses_.count(idx))
        throw ConflictingClauses("two clauses for one source block state");
    clauses_.emplace(idx, std::move(targets));
}

const std::vector<std::pair<BlockState, cplx>>& BlockRule::apply(
    const BlockState& src) const {
    int idx = src.index(k_);
    auto it = clauses_.find(idx);
    if (it != clauses_.end()) return it->second;
    auto [cit, inserted] = identity_cache_.try_emplace(idx);
    if (inserted) cit->second.push_back({src, cplx(1.0)});
    return cit->second;
}

void BlockRule::finalize() {
    // A state is static if it appears in no clause source together with the
    // requirement that removing blocks made only of static/quiescent cells is
    // safe: such a block must be unmapped (identity). Compute the largest set
    // S of states such that no clause source consists solely of cells in
    // S ∪ {0}. Start from all non-quiescent states and peel back.
    std::vector<bool> st(std::size_t(k_), true);
    st[0] = false;  // quiescent handled separately
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [idx, tgts] : clauses_) {
            BlockState b = BlockState::from_index(idx, k_);
            bool all_static = true;
            for (CellState c : b.cells)
                if (c != 0 && !st[c]) all_static = false;
            if (all_static && !b.all_quiescent()) {
                // Some state in this source must be non-static; demote the
                // highest one (deterministic choice; any works).
                CellState demote = 0;
                for (CellState c : b.cells)
                    if (c != 0 && st[c]) demote = std::max(demote, c);
                if (demote != 0) {
                    st[demote] = false;
                    changed = true;
                }
            }
        }
    }
    static_ = std::move(st);
    finalized_ = true;
}

std::string BlockRule::serialize() const {
    std::ostringstream os;
    os << "alphabet " << k_ << "\n";
    std::vector<int> keys;
    for (const auto& [idx, t] : clauses_) keys.push_back(idx);
    std::sort(keys.begin(), keys.end());
    auto put_block = [&](const BlockState& b) {
        for (CellState c : b.cells) {
            if (k_ <= 4)
                os << Alphabet::to_char(c);
            else
                os << int(c) << (c == b.cells[3] ? "" : " ");
        }
    };
    for (int idx : keys) {
        BlockState src = BlockState::from_index(idx, k_);
        put_block(src);
        os << " ->";
        const auto& tgts = clauses_.at(idx);
        for (std::size_t i = 0; i < tgts.size(); ++i) {
            os << ' ' << tgts[i].second.real() << ',' << tgts[i].second.imag() << ' ';
            put_block(tgts[i].first);
            if (i + 1 < tgts.size()) os << " ;";
        }
        os << "\n";
    }
    return os.str();
}

BlockRule BlockRule::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    int k;
    if (!(is >> word >> k) || word != "alphabet")
        throw std::runtime_error("rule: expected 'alphabet K'");
    BlockRule r(k);
    if (k > 4) throw std::runtime_error("rule text format supports k <= 4");
    auto parse_block = [&](const std::string& s) {
        if (s.size() != 4) throw std::runtime_error("rule: block needs 4 cells");
        BlockState b;
        for (int i = 0; i < 4; ++i) {
            auto c = Alphabet::from_char(s[i]);
            if (!c || *c >= k) throw std::runtime_error("rule: bad cell char");
            b.cells[std::size_t(i)] = *c;
        }
        return b;
    };
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string srcs, arrow;
        ls >> srcs >> arrow;
        if (arrow != "->") throw std::runtime_error("rule: expected '->'");
        BlockState src = parse_block(srcs);
        std::vector<std::pair<BlockState, cplx>> tgts;
        std::string amps, tgt;
        while (ls >> amps >> tgt) {
            auto comma = amps.find(',');
            if (comma == std::string::npos) throw std::runtime_error("rule: bad amplitude");
            double re = std::stod(amps.substr(0, comma));
            double im = std::stod(amps.substr(comma + 1));
            tgts.push_back({parse_block(tgt), cplx(re, im)});
            std::string sep;
            if (!(ls >> sep)) break;
            if (sep != ";") throw std::runtime_error("rule: expected ';'");
        }
        r.add_clause(src, std::move(tgts));
    }
    r.finalize();
    return r;
}

UnitarityReport check_unitarity(const BlockRule& r) {
    int k = r.alphabet_size();
    long dim = 1;
    for (int i = 0; i < 4; ++i) dim *= k;
    if (dim > 4096) throw AlphabetTooLarge("k^4 exceeds 4096");

    // Columns of U are sparse; check all pairwise inner products via a
    // row->entries index. (U†U)_{ij} = <col_i, col_j>.
    std::vector<std::vector<std::pair<int, cplx>>> cols{std::size_t(dim)};
    for (int s = 0; s < dim; ++s) {
        const auto& tgts = r.apply(BlockState::from_index(s, k));
        for (const auto& [tb, amp] : tgts) cols[std::size_t(s)].push_back({tb.index(k), amp});
    }
    std::vector<std::vector<std::pair<int, cplx>>> row_index{std::size_t(dim)};
    for (int s = 0; s < dim; ++s)
        for (auto& [row, amp] : cols[std::size_t(s)]) row_index[std::size_t(row)].push_back({s, amp});

    std::vector<cplx> acc;
    acc.resize(std::size_t(dim), cplx(0));
    double max_dev = 0;
    for (int i = 0; i < dim; ++i) {
        std::vector<int> touched;
        for (const auto& [row, ai] : cols[std::size_t(i)]) {
            for (const auto& [j, aj] : row_index[std::size_t(row)]) {
                if (acc[std::size_t(j)] == cplx(0)) touched.push_back(j);
                acc[std::size_t(j)] += std::conj(ai) * aj;
            }
        }
        bool saw_diag = false;
        for (int j : touched) {
            cplx v = acc[std::size_t(j)];
            acc[std::size_t(j)] = 0;
            double dev = (j == i) ? std::abs(v - cplx(1)) : std::abs(v);
            if (j == i) saw_diag = true;
            max_dev = std::max(max_dev, dev);
        }
        if (!saw_diag) max_dev = std::max(max_dev, 1.0);  // empty column
    }
    return {max_dev, max_dev <= kUnitaryTol};
}

namespace {

// Anchor (lowest-left cell) of the partition block containing p.
inline Position block_anchor(Position p, PartitionOffset off) {
    int parity = off == PartitionOffset::even ? 0 : 1;
    auto fl = [](int v) { return v & ~1; };
    return {fl(p.x - parity) + parity, fl(p.y - parity) + parity};
}

}  // namespace

Superposition apply_layer(const Superposition& s, const BlockRule& r,
                          PartitionOffset off) {
    Superposition out;
    for (const auto& [conf, amp] : s.terms()) {
        // Blocks worth visiting: those containing a non-quiescent, non-static
        // cell. Static-only blocks are identities by rule construction.
        std::set<Position> anchors;
        for (const auto& [p, st] : conf.cells()) {
            if (r.finalized() && r.is_static(st)) continue;
            anchors.insert(block_anchor(p, off));
        }
        // Expand multilinearly over visited blocks.
        struct Partial {
            BasisConfiguration conf;
            cplx amp;
        };
        std::vector<Partial> partials{{conf, amp}};
        for (const Position& a : anchors) {
            const std::array<Position, 4> ps{Position{a.x, a.y + 1}, Position{a.x + 1, a.y + 1},
                                             Position{a.x, a.y}, Position{a.x + 1, a.y}};
            std::vector<Partial> next;
            next.reserve(partials.size());
            for (auto& part : partials) {
                BlockState b;
                for (int i = 0; i < 4; ++i) b.cells[std::size_t(i)] = part.conf.at(ps[std::size_t(i)]);
                const auto& tgts = r.apply(b);
                for (const auto& [tb, tamp] : tgts) {
                    Partial np;
                    np.amp = part.amp * tamp;
                    if (std::abs(np.amp) < kPruneEps) continue;
                    np.conf = part.conf;
                    if (!(tb == b))
                        for (int i = 0; i < 4; ++i) np.conf.set(ps[std::size_t(i)], tb.cells[std::size_t(i)]);
                    next.push_back(std::move(np));
                }
            }
            partials = std::move(next);
        }
        for (auto& part : partials) out.add(std::move(part.conf), part.amp);
    }
    return out;
}

Superposition step(const Superposition& s, const BlockRule& r, long t_index) {
    return apply_layer(s, r,
                       (t_index % 2 == 0) ? PartitionOffset::even : PartitionOffset::odd);
}

Superposition evolve(const Superposition& s, const BlockRule& r, long steps, long t_start) {
    Superposition cur = s;
    for (long t = 0; t < steps; ++t) cur = step(cur, r, t_start + t);
    return cur;
}

}  // namespace pqca
