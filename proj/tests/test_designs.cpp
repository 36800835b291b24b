#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nbhc/designs.hpp"
#include "support/testutil.hpp"

using namespace nbhc;

namespace {

SequenceSpec random_sequence(std::mt19937& rng, unsigned m, unsigned long v, bool almost) {
    std::vector<unsigned> exps;
    for (unsigned long i = almost ? 1 : 0; i < v; ++i) exps.push_back(rng() % m);
    return almost ? SequenceSpec::almost_m_ary(m, exps) : SequenceSpec::m_ary(m, exps);
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

}  // namespace

TEST_CASE("sequence invariants are enforced") {
    CHECK_THROWS_AS(SequenceSpec(5, {std::nullopt, 1u, std::nullopt}, true), std::invalid_argument);
    CHECK_THROWS_AS(SequenceSpec(5, {1u, std::nullopt}, false), std::invalid_argument);
    CHECK_THROWS_AS(SequenceSpec(5, {0u, 7u}, false), std::invalid_argument);
    CHECK_THROWS_AS(SequenceSpec(5, {0u, std::nullopt}, true), std::invalid_argument);
    CHECK_NOTHROW(SequenceSpec::almost_m_ary(3, {1, 2}));
}

TEST_CASE("autocorrelation basics") {
    // all-ones sequence: C(t) = v for every t
    SequenceSpec ones = SequenceSpec::m_ary(5, {0, 0, 0, 0, 0, 0, 0});
    for (unsigned long t = 0; t < 7; ++t)
        CHECK(autocorrelation(ones, t) == CycInt::integer(5, 7));

    // classical perfect binary sequence (+1, +1, +1, -1)
    SequenceSpec pb = SequenceSpec::m_ary(2, {0, 0, 0, 1});
    CHECK(autocorrelation(pb, 0) == CycInt::integer(2, 4));
    for (unsigned long t = 1; t < 4; ++t) CHECK(autocorrelation(pb, t).is_zero());

    // peak values: v for m-ary, v - 1 for almost m-ary
    SequenceSpec almost = SequenceSpec::almost_m_ary(4, {0, 3, 1});
    CHECK(autocorrelation(almost, 0) == CycInt::integer(4, 3));
}

TEST_CASE("autocorrelation symmetry and scaling invariance") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned m = 2 + rng() % 5;
        unsigned long v = 2 + rng() % 6;
        bool almost = (rng() % 2) == 0;
        SequenceSpec seq = random_sequence(rng, m, v, almost);
        for (unsigned long t = 1; t < v; ++t)
            CHECK(autocorrelation(seq, t) == autocorrelation(seq, v - t).conjugate());
        if (!almost) {
            unsigned shift = rng() % m;
            std::vector<unsigned> scaled;
            for (const auto& e : seq.entries()) scaled.push_back((*e + shift) % m);
            SequenceSpec seq2 = SequenceSpec::m_ary(m, scaled);
            for (unsigned long t = 0; t < v; ++t)
                CHECK(autocorrelation(seq, t) == autocorrelation(seq2, t));
        }
    }
}

TEST_CASE("classification") {
    CHECK(classify(SequenceSpec::m_ary(2, {0, 0, 0, 1})).cls == SeqClass::Perfect);

    Classification ones = classify(SequenceSpec::m_ary(3, {0, 0, 0, 0, 0}));
    CHECK(ones.cls == SeqClass::NearlyPerfect);
    CHECK(*ones.gamma == CycInt::integer(3, 5));

    CHECK(classify(SequenceSpec::m_ary(2, {0, 0, 1, 1})).cls == SeqClass::Neither);

    // v = 1 is Perfect by convention
    CHECK(classify(SequenceSpec::m_ary(4, {2})).cls == SeqClass::Perfect);
}

TEST_CASE("circulant construction") {
    SequenceSpec s = SequenceSpec::m_ary(3, {0, 1});
    DesignMatrix M = circulant_from_sequence(s);
    CHECK(M.at(0, 0) == CycInt::root_of_unity(3, 0));
    CHECK(M.at(0, 1) == CycInt::root_of_unity(3, 1));
    CHECK(M.at(1, 0) == CycInt::root_of_unity(3, 1));
    CHECK(M.at(1, 1) == CycInt::root_of_unity(3, 0));

    std::mt19937 rng(99);
    SequenceSpec r = random_sequence(rng, 4, 5, false);
    DesignMatrix C = circulant_from_sequence(r);
    for (unsigned long i = 0; i + 1 < 5; ++i)
        for (unsigned long j = 0; j + 1 < 5; ++j) CHECK(C.at(i + 1, j + 1) == C.at(i, j));

    // the zero of an almost sequence lands on the diagonal
    DesignMatrix A = circulant_from_sequence(SequenceSpec::almost_m_ary(3, {1, 1}));
    for (unsigned long i = 0; i < 3; ++i) {
        CHECK(A.at(i, i).is_zero());
        for (unsigned long j = 0; j < 3; ++j)
            if (i != j) CHECK_FALSE(A.at(i, j).is_zero());
    }
}

TEST_CASE("gram_type recognition") {
    // Hadamard: circulant of the perfect binary sequence
    auto gt = gram_type(circulant_from_sequence(SequenceSpec::m_ary(2, {0, 0, 0, 1})));
    REQUIRE(gt.has_value());
    CHECK(gt->kind == DesignKind::NearButsonHadamard);
    CHECK(gt->gamma == CycInt::zero(2));

    // all-ones 3x3: gamma = 3
    gt = gram_type(circulant_from_sequence(SequenceSpec::m_ary(2, {0, 0, 0})));
    REQUIRE(gt.has_value());
    CHECK(gt->gamma == CycInt::integer(2, 3));

    // 2x2 zero-diagonal conference matrix
    gt = gram_type(circulant_from_sequence(SequenceSpec::almost_m_ary(2, {0})));
    REQUIRE(gt.has_value());
    CHECK(gt->kind == DesignKind::NearConference);
    CHECK(gt->gamma == CycInt::zero(2));

    // a circulant that is neither
    CHECK_FALSE(gram_type(circulant_from_sequence(SequenceSpec::m_ary(2, {0, 0, 1, 1}))).has_value());

    // non-unit entries are a contract violation
    DesignMatrix bad;
    bad.v = 1;
    bad.m = 5;
    bad.entries = {CycInt::integer(5, 2)};
    CHECK_THROWS_AS(gram_type(bad), std::invalid_argument);
}

TEST_CASE("gram determinant in factored form") {
    FactoredInt d = gram_det_factored(25, 2, DesignKind::NearButsonHadamard);
    CHECK(d.exponent_of(73) == 1);
    CHECK(d.exponent_of(23) == 24);
    CHECK(d.factors().size() == 2);

    d = gram_det_factored(4, 0, DesignKind::NearButsonHadamard);
    CHECK(d.exponent_of(2) == 8);  // 4 * 4^3 = 2^8

    d = gram_det_factored(26, 2, DesignKind::NearConference);
    CHECK(d.exponent_of(3) == 1);
    CHECK(d.exponent_of(5) == 2);
    CHECK(d.exponent_of(23) == 25);
}

TEST_CASE("factored determinant matches the exact Gram determinant") {
    // (v - gamma) I + gamma J assembled directly, determinant by exact
    // elimination
    for (unsigned long v = 2; v <= 6; ++v) {
        for (long gamma = -1; gamma <= 3; ++gamma) {
            std::vector<std::vector<Int>> gram(v, std::vector<Int>(v, Int(gamma)));
            for (unsigned long i = 0; i < v; ++i) gram[i][i] = Int(v);
            CHECK(bareiss_det(gram) ==
                  gram_det_factored(v, gamma, DesignKind::NearButsonHadamard).value());
            std::vector<std::vector<Int>> cgram(v, std::vector<Int>(v, Int(gamma)));
            for (unsigned long i = 0; i < v; ++i) cgram[i][i] = Int(v) - 1;
            CHECK(bareiss_det(cgram) ==
                  gram_det_factored(v, gamma, DesignKind::NearConference).value());
        }
    }
}

TEST_CASE("identification: classify matches gram_type on circulants (smoke)") {
    // exhaustive for v <= 5, m <= 4, both kinds; the acceptance suite covers
    // the full ranges
    for (unsigned m = 2; m <= 4; ++m) {
        for (unsigned long v = 2; v <= 5; ++v) {
            for (int almost = 0; almost <= 1; ++almost) {
                unsigned long free_positions = almost ? v - 1 : v;
                std::uint64_t total = 1;
                for (unsigned long i = 0; i < free_positions; ++i) total *= m;
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    std::uint64_t x = idx;
                    std::vector<unsigned> exps(free_positions);
                    for (unsigned long pos = free_positions; pos-- > 0;) {
                        exps[pos] = static_cast<unsigned>(x % m);
                        x /= m;
                    }
                    SequenceSpec seq = almost ? SequenceSpec::almost_m_ary(m, exps)
                                              : SequenceSpec::m_ary(m, exps);
                    Classification c = classify(seq);
                    auto gt = gram_type(circulant_from_sequence(seq));
                    if (c.cls == SeqClass::Neither) {
                        CHECK_FALSE(gt.has_value());
                    } else {
                        REQUIRE(gt.has_value());
                        CHECK(gt->kind == (almost ? DesignKind::NearConference
                                                  : DesignKind::NearButsonHadamard));
                        CHECK(gt->gamma == *c.gamma);
                    }
                }
            }
        }
    }
}

TEST_CASE("sequence file parsing") {
    {
        std::istringstream in("# comment\nm 2\nv 4\nentries 0 0 0 1\n");
        SequenceSpec s = parse_sequence(in);
        CHECK(s.modulus() == 2);
        CHECK(s.period() == 4);
        CHECK_FALSE(s.almost());
    }
    {
        std::istringstream in("m 3\nv 3\nalmost 1\nentries Z 1 1\n");
        SequenceSpec s = parse_sequence(in);
        CHECK(s.almost());
    }
    {
        // almost flag with an interior zero: invariant violation
        std::istringstream in("m 3\nv 3\nalmost 1\nentries Z 1 Z\n");
        CHECK_THROWS(parse_sequence(in));
    }
    {
        // flag says almost but entries have no zero
        std::istringstream in("m 3\nv 3\nalmost 1\nentries 0 1 1\n");
        CHECK_THROWS(parse_sequence(in));
    }
    {
        std::istringstream in("m 3\nv 2\nentries 0 5\n");
        CHECK_THROWS(parse_sequence(in));
    }
    {
        std::istringstream in("m 3\nentries 0 1\n");
        CHECK_THROWS(parse_sequence(in));
    }
}
