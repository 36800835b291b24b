#include "nbhc/search.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace nbhc {

namespace {

// m^e with saturation, for budget checks.
std::uint64_t pow_saturating(std::uint64_t base, unsigned long e) {
    std::uint64_t r = 1;
    for (unsigned long i = 0; i < e; ++i) {
        if (r > (~0ull) / base) return ~0ull;
        r *= base;
    }
    return r;
}

SequenceSpec row_for_index(std::uint64_t index, unsigned long v, unsigned long m, DesignKind kind,
                           bool reduced) {
    unsigned long free_positions = kind == DesignKind::NearConference ? v - 1 : v;
    unsigned long pinned = 0;
    if (reduced && free_positions > 0) {
        --free_positions;  // leading free entry pinned to exponent 0
        pinned = 1;
    }
    std::vector<unsigned> exps(pinned + free_positions, 0);
    // lexicographic: earliest position most significant
    for (unsigned long pos = pinned + free_positions; pos-- > pinned;) {
        exps[pos] = static_cast<unsigned>(index % m);
        index /= m;
    }
    if (kind == DesignKind::NearConference)
        return SequenceSpec::almost_m_ary(static_cast<unsigned>(m), std::move(exps));
    return SequenceSpec::m_ary(static_cast<unsigned>(m), std::move(exps));
}

// smallest rotation representative filter for reduced BH enumeration: keep a
// row iff it is lexicographically minimal among its rotations that also
// start with exponent 0
bool is_rotation_minimal(const SequenceSpec& seq) {
    const auto& e = seq.entries();
    const unsigned long v = e.size();
    for (unsigned long r = 1; r < v; ++r) {
        if (*e[r] != 0) continue;
        for (unsigned long i = 0; i < v; ++i) {
            unsigned a = *e[(r + i) % v], b = *e[i];
            if (a != b) {
                if (a < b) return false;
                break;
            }
        }
    }
    return true;
}

struct BlockResult {
    // gamma -> smallest candidate index realizing it
    std::map<CycInt, std::uint64_t> first_index;
};

void scan_block(std::uint64_t begin, std::uint64_t end, unsigned long v, unsigned long m,
                DesignKind kind, bool reduced, BlockResult& out) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        SequenceSpec seq = row_for_index(idx, v, m, kind, reduced);
        if (reduced && kind == DesignKind::NearButsonHadamard && !is_rotation_minimal(seq)) continue;
        Classification c = classify(seq);
        if (c.cls == SeqClass::Neither) continue;
        const CycInt& gamma = *c.gamma;
        auto it = out.first_index.find(gamma);
        if (it == out.first_index.end()) out.first_index.emplace(gamma, idx);
    }
}

}  // namespace

std::vector<CycInt> SearchResult::gamma_set() const {
    std::vector<CycInt> out;
    out.reserve(hits.size());
    for (const auto& h : hits) out.push_back(h.gamma);
    return out;
}

SearchResult search_circulant(unsigned long v, unsigned long m, DesignKind kind,
                              std::uint64_t budget, unsigned workers, bool symmetry_reduction) {
    if (v == 0) throw std::invalid_argument("search_circulant: v must be >= 1");
    if (m == 0) throw std::invalid_argument("search_circulant: m must be >= 1");
    unsigned long free_positions = kind == DesignKind::NearConference ? v - 1 : v;
    if (symmetry_reduction && free_positions > 0) --free_positions;
    const std::uint64_t total = pow_saturating(m, free_positions);
    if (total > budget) throw BudgetExceeded(total, budget);

    SearchResult result;
    result.v = v;
    result.m = m;
    result.kind = kind;
    result.candidates = total;

    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<BlockResult> blocks(workers);
    if (workers == 1) {
        scan_block(0, total, v, m, kind, symmetry_reduction, blocks[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t step = total / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t begin = w * step;
            std::uint64_t end = (w + 1 == workers) ? total : begin + step;
            pool.emplace_back(scan_block, begin, end, v, m, kind, symmetry_reduction,
                              std::ref(blocks[w]));
        }
        for (auto& t : pool) t.join();
    }
    std::map<CycInt, std::uint64_t> merged;
    for (const auto& block : blocks) {
        for (const auto& [gamma, idx] : block.first_index) {
            auto it = merged.find(gamma);
            if (it == merged.end() || idx < it->second) merged[gamma] = idx;
        }
    }
    for (const auto& [gamma, idx] : merged) {
        SearchHit hit;
        hit.gamma = gamma;
        SequenceSpec seq = row_for_index(idx, v, m, kind, symmetry_reduction);
        hit.first_row = seq.entries();
        hit.gamma_abs = complex_abs(gamma);
        // soundness: the witness must reproduce gamma through the Gram matrix
        auto gt = gram_type(circulant_from_sequence(seq));
        DesignKind expect = kind;
        if (!gt || gt->kind != expect || gt->gamma != gamma)
            throw std::logic_error("search_circulant: witness failed Gram re-verification");
        result.hits.push_back(std::move(hit));
    }
    std::sort(result.hits.begin(), result.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        const CycInt diff = a.gamma - b.gamma;
        if (!diff.is_zero()) return real_embedding_sign(diff) < 0;
        return a.gamma < b.gamma;
    });
    return result;
}

CrossValidationReport cross_validate(unsigned long v_max, const std::set<unsigned long>& m_set,
                                     const ClassNumberTable& table, const FactStore& facts,
                                     std::uint64_t budget) {
    CrossValidationReport report;
    for (unsigned long m : m_set) {
        for (unsigned long v = 1; v <= v_max; ++v) {
            for (DesignKind kind : {DesignKind::NearButsonHadamard, DesignKind::NearConference}) {
                SearchResult sr = search_circulant(v, m, kind, budget);
                ++report.cells;
                for (const auto& hit : sr.hits) {
                    ++report.gammas_checked;
                    CertifyResult cr = certify(v, m, hit.gamma, kind, table, facts);
                    if (cr.excluded()) {
                        report.contradictions.push_back(CrossValidationEntry{
                            v, m, kind, hit.gamma, cr.first_excluding()->criterion});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace nbhc
