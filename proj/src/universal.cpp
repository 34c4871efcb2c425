#include "pqca/universal.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace pqca {

BlockState rotate_block(const BlockState& b, Rotation r) {
    BlockState cur = b;
    int n = ((r.quarter_turns % 4) + 4) % 4;
    for (int i = 0; i < n; ++i) {
        BlockState next;
        next.cells[2] = cur.cells[0];  // TL -> BL
        next.cells[3] = cur.cells[2];  // BL -> BR
        next.cells[1] = cur.cells[3];  // BR -> TR
        next.cells[0] = cur.cells[1];  // TR -> TL
        cur = next;
    }
    return cur;
}

namespace {

struct SeedClause {
    std::string tag;
    BlockState src;
    std::vector<std::pair<BlockState, cplx>> targets;
};

// Block literal in (tl, tr, bl, br) order.
BlockState blk(CellState tl, CellState tr, CellState bl, CellState br) {
    return BlockState{{tl, tr, bl, br}};
}

std::vector<SeedClause> seed_clauses() {
    constexpr CellState E = Univ::empty, B = Univ::barrier;
    const double s2 = 1.0 / std::sqrt(2.0);
    const cplx phase = std::exp(cplx(0, std::numbers::pi / 4));
    std::vector<SeedClause> seeds;
    for (CellState s : {Univ::sig0, Univ::sig1}) {
        // (a) free propagation: signal at BL moves to TR.
        seeds.push_back({"propagation", blk(E, E, s, E), {{blk(E, s, E, E), 1.0}}});
        // (b) wall bounce: vertical wall in the left column reflects the
        // signal sitting at TR down to BR.
        seeds.push_back({"bounce", blk(B, s, B, E), {{blk(B, E, B, s), 1.0}}});
        // (c) a lone barrier does not deflect: signal still moves BL -> TR.
        seeds.push_back({"single-barrier", blk(B, E, s, E), {{blk(B, s, E, E), 1.0}}});
        // (d) semitransparent barrier on the main diagonal: Hadamard on the
        // passing signal, minus sign on the 1 -> 1 branch.
        double sign = (s == Univ::sig1) ? -1.0 : 1.0;
        seeds.push_back({"hadamard",
                         blk(B, E, s, B),
                         {{blk(B, Univ::sig0, E, B), s2}, {blk(B, Univ::sig1, E, B), sign * s2}}});
    }
    // (e) crossing: signals at TL and BL pass through each other; both being
    // 1 contributes e^{i pi/4}.
    for (CellState x : {Univ::sig0, Univ::sig1})
        for (CellState y : {Univ::sig0, Univ::sig1}) {
            cplx amp = (x == Univ::sig1 && y == Univ::sig1) ? phase : cplx(1.0);
            seeds.push_back({"crossing", blk(x, E, y, E), {{blk(E, y, E, x), amp}}});
        }
    return seeds;
}

struct ClauseImage {
    std::string provenance;
    std::vector<std::pair<BlockState, cplx>> targets;
};

std::map<int, ClauseImage> closed_clause_table() {
    std::map<int, ClauseImage> table;
    for (const auto& seed : seed_clauses()) {
        for (int r = 0; r < 4; ++r) {
            BlockState src = rotate_block(seed.src, {r});
            std::vector<std::pair<BlockState, cplx>> tgts;
            for (const auto& [tb, amp] : seed.targets)
                tgts.push_back({rotate_block(tb, {r}), amp});
            std::sort(tgts.begin(), tgts.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            int idx = src.index(4);
            auto it = table.find(idx);
            if (it == table.end()) {
                table.emplace(idx,
                              ClauseImage{seed.tag + ", rotation " + std::to_string(r), tgts});
                continue;
            }
            bool same = it->second.targets.size() == tgts.size();
            for (std::size_t i = 0; same && i < tgts.size(); ++i)
                same = it->second.targets[i].first == tgts[i].first &&
                       std::abs(it->second.targets[i].second - tgts[i].second) < 1e-15;
            if (!same)
                throw ClosureConflict("closure conflict at block " + std::to_string(idx) +
                                      " between '" + it->second.provenance + "' and '" +
                                      seed.tag + ", rotation " + std::to_string(r) + "'");
        }
    }
    return table;
}

}  // namespace

BlockRule build_universal_rule() {
    BlockRule rule(4);
    for (const auto& [idx, img] : closed_clause_table())
        rule.add_clause(BlockState::from_index(idx, 4), img.targets);
    rule.finalize();
    return rule;
}

const BlockRule& universal_rule() {
    static const BlockRule rule = build_universal_rule();
    return rule;
}

std::string classify_block(const BlockState& b) {
    static const std::map<int, ClauseImage> table = closed_clause_table();
    auto it = table.find(b.index(4));
    if (it == table.end()) return "identity";
    return it->second.provenance;
}

}  // namespace pqca
