#include "nbhc/designs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nbhc {

SequenceSpec::SequenceSpec(unsigned m, std::vector<Entry> entries, bool almost)
    : m_(m), almost_(almost), entries_(std::move(entries)) {
    if (m_ == 0) throw std::invalid_argument("SequenceSpec: modulus must be >= 1");
    if (entries_.empty()) throw std::invalid_argument("SequenceSpec: period must be >= 1");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        if (e && *e >= m_)
            throw std::invalid_argument("SequenceSpec: exponent out of range at position " +
                                        std::to_string(i));
        if (almost_) {
            if (i == 0 && e)
                throw std::invalid_argument("SequenceSpec: almost sequence must start with the zero entry");
            if (i > 0 && !e)
                throw std::invalid_argument("SequenceSpec: zero entry at interior position " +
                                            std::to_string(i));
        } else if (!e) {
            throw std::invalid_argument("SequenceSpec: zero entry in a plain m-ary sequence");
        }
    }
}

SequenceSpec SequenceSpec::m_ary(unsigned m, std::vector<unsigned> exponents) {
    std::vector<Entry> e(exponents.begin(), exponents.end());
    return SequenceSpec(m, std::move(e), false);
}

SequenceSpec SequenceSpec::almost_m_ary(unsigned m, std::vector<unsigned> exponents_tail) {
    std::vector<Entry> e;
    e.emplace_back(std::nullopt);
    for (unsigned x : exponents_tail) e.emplace_back(x);
    return SequenceSpec(m, std::move(e), true);
}

CycInt SequenceSpec::value_at(unsigned long i) const {
    const Entry& e = entries_[i % entries_.size()];
    return e ? CycInt::root_of_unity(m_, *e) : CycInt::zero(m_);
}

CycInt autocorrelation(const SequenceSpec& seq, unsigned long t) {
    const unsigned long v = seq.period();
    const unsigned m = seq.modulus();
    // a_i * conj(a_{i+t}) = zeta^(e_i - e_{i+t}); zero entries contribute 0.
    std::vector<Int> lift(m, Int(0));
    bool any = false;
    for (unsigned long i = 0; i < v; ++i) {
        const auto& ai = seq.entries()[i];
        const auto& aj = seq.entries()[(i + t) % v];
        if (!ai || !aj) continue;
        long long d = static_cast<long long>(*ai) - static_cast<long long>(*aj);
        unsigned long e = static_cast<unsigned long>(((d % m) + m) % m);
        ++lift[e];
        any = true;
    }
    if (!any) return CycInt::zero(m);
    return CycInt::from_poly(m, CycPoly(std::move(lift)));
}

Classification classify(const SequenceSpec& seq) {
    const unsigned long v = seq.period();
    const unsigned m = seq.modulus();
    if (v == 1) return {SeqClass::Perfect, CycInt::zero(m)};
    CycInt first = autocorrelation(seq, 1);
    for (unsigned long t = 2; t < v; ++t) {
        if (autocorrelation(seq, t) != first) return {SeqClass::Neither, std::nullopt};
    }
    if (first.is_zero()) return {SeqClass::Perfect, CycInt::zero(m)};
    if (!first.is_real()) return {SeqClass::Neither, std::nullopt};
    return {SeqClass::NearlyPerfect, first};
}

DesignMatrix circulant_from_sequence(const SequenceSpec& seq) {
    const unsigned long v = seq.period();
    DesignMatrix M;
    M.v = static_cast<unsigned>(v);
    M.m = seq.modulus();
    M.entries.reserve(v * v);
    for (unsigned long i = 0; i < v; ++i)
        for (unsigned long j = 0; j < v; ++j) M.entries.push_back(seq.value_at((j + v - i) % v));
    return M;
}

namespace {

CycInt gram_entry(const DesignMatrix& M, unsigned long i, unsigned long k) {
    CycInt acc = CycInt::zero(M.m);
    for (unsigned long j = 0; j < M.v; ++j) acc = acc + M.at(i, j) * M.at(k, j).conjugate();
    return acc;
}

}  // namespace

std::optional<GramType> gram_type(const DesignMatrix& M) {
    const unsigned long v = M.v;
    if (v == 0 || M.entries.size() != v * v)
        throw std::invalid_argument("gram_type: malformed matrix");
    std::vector<CycInt> roots;
    roots.reserve(M.m);
    for (unsigned k = 0; k < M.m; ++k) roots.push_back(CycInt::root_of_unity(M.m, k));
    auto is_root = [&](const CycInt& x) {
        for (const CycInt& r : roots)
            if (x == r) return true;
        return false;
    };
    // zero pattern decides the candidate kind
    bool any_zero = false, diagonal_zero = true, off_diagonal_zero = false;
    for (unsigned long i = 0; i < v; ++i) {
        for (unsigned long j = 0; j < v; ++j) {
            const CycInt& x = M.at(i, j);
            if (x.is_zero()) {
                any_zero = true;
                if (i != j) off_diagonal_zero = true;
            } else {
                if (i == j) diagonal_zero = false;
                if (!is_root(x))
                    throw std::invalid_argument("gram_type: entries must be roots of unity or zero");
            }
        }
    }
    DesignKind kind;
    if (!any_zero)
        kind = DesignKind::NearButsonHadamard;
    else if (diagonal_zero && !off_diagonal_zero)
        kind = DesignKind::NearConference;
    else
        return std::nullopt;
    if (v == 1) return GramType{kind, CycInt::zero(M.m)};
    // Entries are unit rows, so the Gram diagonal is forced (v, resp. v-1);
    // the matrix is the kind iff the off-diagonal entries agree on one real
    // gamma.
    CycInt gamma = gram_entry(M, 0, 1);
    if (!gamma.is_real()) return std::nullopt;
    for (unsigned long i = 0; i < v; ++i) {
        for (unsigned long k = 0; k < v; ++k) {
            if (i == k) continue;
            if (i == 0 && k == 1) continue;
            if (gram_entry(M, i, k) != gamma) return std::nullopt;
        }
    }
    return GramType{kind, gamma};
}

FactoredInt gram_det_factored(unsigned long v, const Int& gamma, DesignKind kind) {
    if (kind == DesignKind::NearButsonHadamard) {
        Int base1 = (gamma + 1) * v - gamma;
        Int base2 = Int(v) - gamma;
        return FactoredInt::from_int(base1) * FactoredInt::from_int(base2).pow(v - 1);
    }
    Int base1 = gamma + 1;
    Int base2 = Int(v) - 1;
    Int base3 = Int(v) - 1 - gamma;
    return FactoredInt::from_int(base1) * FactoredInt::from_int(base2) *
           FactoredInt::from_int(base3).pow(v - 1);
}

// ---------------------------------------------------------------------------
// Sequence file parsing.

SequenceSpec parse_sequence(std::istream& in) {
    std::optional<unsigned> m, v;
    std::optional<bool> almost_flag;
    std::optional<std::vector<std::string>> entry_tokens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("sequence file line " + std::to_string(lineno) + ": " + msg);
        };
        if (key == "m") {
            unsigned val;
            if (!(is >> val) || val == 0) fail("expected positive modulus after 'm'");
            m = val;
        } else if (key == "v") {
            unsigned val;
            if (!(is >> val) || val == 0) fail("expected positive period after 'v'");
            v = val;
        } else if (key == "almost") {
            int val;
            if (!(is >> val) || (val != 0 && val != 1)) fail("expected 0 or 1 after 'almost'");
            almost_flag = (val == 1);
        } else if (key == "entries") {
            if (!m || !v) fail("'entries' requires m and v to be set first");
            std::vector<std::string> toks;
            std::string t;
            while (toks.size() < *v) {
                if (!(is >> t)) {
                    // entries may continue on following lines
                    if (!std::getline(in, line)) break;
                    ++lineno;
                    auto h2 = line.find('#');
                    if (h2 != std::string::npos) line = line.substr(0, h2);
                    is.clear();
                    is.str(line);
                    continue;
                }
                toks.push_back(t);
            }
            if (toks.size() != *v) fail("expected exactly v entry tokens");
            entry_tokens = std::move(toks);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!m || !v || !entry_tokens) throw std::runtime_error("sequence file: m, v and entries are required");
    std::vector<SequenceSpec::Entry> entries;
    for (const std::string& t : *entry_tokens) {
        if (t == "Z" || t == "z") {
            entries.emplace_back(std::nullopt);
        } else {
            unsigned long e;
            try {
                e = std::stoul(t);
            } catch (...) {
                throw std::runtime_error("sequence file: bad entry token '" + t + "'");
            }
            if (e >= *m) throw std::runtime_error("sequence file: exponent " + t + " out of range");
            entries.emplace_back(static_cast<unsigned>(e));
        }
    }
    bool almost = almost_flag ? *almost_flag : (!entries.empty() && !entries[0].has_value());
    return SequenceSpec(*m, std::move(entries), almost);  // validates the zero pattern
}

SequenceSpec parse_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return parse_sequence(in);
}

}  // namespace nbhc
