#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nbhc/criteria.hpp"
#include "support/testutil.hpp"

using namespace nbhc;

namespace {

const ClassNumberTable& table() { return ClassNumberTable::builtin(); }

const FactStore& shipped_facts() {
    static FactStore store = FactStore::load_file(testutil::data_path("facts.txt"));
    return store;
}

Verdict ideal(unsigned long v, unsigned long m, long gamma, DesignKind kind) {
    return ideal_check(v, m, gamma, kind, table(), shipped_facts());
}

constexpr auto BH = DesignKind::NearButsonHadamard;
constexpr auto CONF = DesignKind::NearConference;

}  // namespace

TEST_CASE("gamma range") {
    CHECK(check_gamma_range(5, CycInt::integer(5, -2), BH).excluded());
    CHECK_FALSE(check_gamma_range(5, CycInt::integer(5, -1), BH).excluded());
    // 2 cos(2 pi / 5) = 0.618 > -1
    CHECK_FALSE(check_gamma_range(4, parse_cyclotomic_literal("z+z^4", 5), BH).excluded());
    // 2 cos(4 pi / 5) = -1.618: below -3/2 it fails at v = 3, but a
    // BH_gamma(2, 5) with this gamma exists (the determinant is positive)
    CHECK(check_gamma_range(3, parse_cyclotomic_literal("z^2+z^3", 5), BH).excluded());
    CHECK_FALSE(check_gamma_range(2, parse_cyclotomic_literal("z^2+z^3", 5), BH).excluded());
    // boundary: BH_-2(2, 2) exists, the determinant vanishes
    CHECK_FALSE(check_gamma_range(2, CycInt::integer(2, -2), BH).excluded());
    // conference: gamma < -1 for every v >= 2
    CHECK(check_gamma_range(2, CycInt::integer(5, -2), CONF).excluded());
    CHECK_FALSE(check_gamma_range(2, CycInt::integer(5, -1), CONF).excluded());
    CHECK_THROWS_AS(check_gamma_range(4, CycInt::root_of_unity(5, 1), BH), std::invalid_argument);
}

TEST_CASE("lam-leung") {
    Verdict w = lam_leung_check(4, 5, CycInt::integer(5, 1), BH);
    CHECK(w.excluded());
    auto& lw = std::get<LamLeungWitness>(w.witness);
    CHECK(lw.g == 4);
    CHECK(lw.target == 8);

    CHECK_FALSE(lam_leung_check(4, 5, CycInt::integer(5, -1), BH).excluded());

    w = lam_leung_check(5, 5, CycInt::integer(5, 0), CONF);
    CHECK(w.excluded());
    CHECK(std::get<LamLeungWitness>(w.witness).target == 3);

    // the non-integer gamma realized by a 4x4 circulant over E_5
    CHECK_FALSE(lam_leung_check(4, 5, parse_cyclotomic_literal("-z^3-z^2+1", 5), BH).excluded());
    CHECK_FALSE(lam_leung_check(4, 5, parse_cyclotomic_literal("z^3+z^2+2", 5), BH).excluded());
}

TEST_CASE("brock self-conjugacy") {
    Verdict w = brock_check(45, 9, 0, BH);
    CHECK(w.excluded());
    CHECK(std::get<BrockWitness>(w.witness).p == 5);
    CHECK(std::get<BrockWitness>(w.witness).w == 45);

    w = brock_check(11, 10, 1, BH);
    CHECK(w.excluded());
    CHECK(std::get<BrockWitness>(w.witness).p == 3);
    CHECK(std::get<BrockWitness>(w.witness).w == 21);

    w = brock_check(11, 9, 0, CONF);
    CHECK(w.excluded());
    CHECK(std::get<BrockWitness>(w.witness).p == 2);
    CHECK(std::get<BrockWitness>(w.witness).w == 10);

    // gamma = -1 makes w2 vanish
    CHECK_FALSE(brock_check(11, 9, -1, CONF).excluded());
    CHECK(brock_check(11, 9, -1, CONF).reason.find("degenerate") != std::string::npos);

    // primes dividing m are skipped: w1 = 5 for (4, 5, -1) on the even branch
    CHECK_FALSE(brock_check(4, 5, -1, BH).excluded());

    // the m <= 2 extension: (7, 2) conference, gamma = 1, w2 = 12
    w = brock_check(7, 2, 1, CONF);
    CHECK(w.excluded());
    CHECK(std::get<BrockWitness>(w.witness).p == 3);
    CHECK(std::get<BrockWitness>(w.witness).w == 12);

    CHECK_THROWS_AS(brock_check(4, 5, -2, BH), std::invalid_argument);
}

TEST_CASE("ideal decomposition: worked examples") {
    Verdict w = ideal(25, 23, 2, BH);
    CHECK(w.excluded());
    {
        auto& iw = std::get<IdealWitness>(w.witness);
        CHECK(iw.q == 73);
        CHECK(iw.e == 0);
        CHECK(iw.t.exponent_of(23) == 24);
        bool has_h = false, has_fact = false;
        for (const auto& a : w.assumptions) {
            if (a.kind == Assumption::Kind::ClassNumber && a.m == 23 && a.h == 3) has_h = true;
            if (a.kind == Assumption::Kind::Principality && a.q == 73 &&
                a.status == Principality::AllNonPrincipal)
                has_fact = true;
        }
        CHECK(has_h);
        CHECK(has_fact);
    }

    w = ideal(32, 31, 1, BH);
    CHECK(w.excluded());
    {
        auto& iw = std::get<IdealWitness>(w.witness);
        CHECK(iw.q == 7);
        CHECK(iw.e == 0);
        CHECK(iw.t.exponent_of(3) == 2);
        CHECK(iw.t.exponent_of(31) == 31);
    }

    // h_5 = 1 leaves condition (c) unsatisfiable
    CHECK_FALSE(ideal(4, 5, 1, BH).excluded());

    w = ideal(26, 46, 2, CONF);
    CHECK(w.excluded());
    {
        auto& iw = std::get<IdealWitness>(w.witness);
        CHECK(iw.q == 3);
        CHECK(iw.t.exponent_of(5) == 2);
        CHECK(iw.t.exponent_of(23) == 25);
    }

    // the period-3362 conference case runs entirely on factored exponents
    w = ideal(3362, 23, 2, CONF);
    CHECK(w.excluded());
    {
        auto& iw = std::get<IdealWitness>(w.witness);
        CHECK(iw.q == 3);
        CHECK(iw.t.exponent_of(3359) == 3361);
        CHECK(iw.t.exponent_of(3361) == 1);
    }

    w = ideal(117, 23, 2, BH);
    CHECK(w.excluded());
    CHECK(std::get<IdealWitness>(w.witness).q == 349);
    w = ideal(163, 23, 2, BH);
    CHECK(w.excluded());
    CHECK(std::get<IdealWitness>(w.witness).q == 487);
    w = ideal(115, 94, 2, BH);
    CHECK(w.excluded());
    CHECK(std::get<IdealWitness>(w.witness).q == 7);

    // unknown class number
    CHECK_FALSE(ideal(35, 72, 2, BH).excluded());
    CHECK(ideal(35, 72, 2, BH).reason.find("unknown") != std::string::npos);
}

TEST_CASE("certify pipeline") {
    CertifyResult r = certify(105, 21, CycInt::integer(21, 0), BH, table(), shipped_facts());
    CHECK(r.excluded());
    REQUIRE(r.first_excluding() != nullptr);
    CHECK(r.first_excluding()->criterion == Criterion::BrockSelfConjugacy);

    r = certify(4, 5, CycInt::integer(5, -1), BH, table(), shipped_facts());
    CHECK_FALSE(r.excluded());
    CHECK(r.verdicts.size() == 4);

    r = certify(13, 6, CycInt::integer(6, 0), BH, table(), shipped_facts());
    CHECK_FALSE(r.excluded());

    // non-integer gamma: only the range and vanishing-sum criteria apply
    r = certify(4, 5, parse_cyclotomic_literal("z^3+z^2+2", 5), BH, table(), shipped_facts());
    CHECK_FALSE(r.excluded());
    CHECK(r.verdicts[2].reason.find("not a rational integer") != std::string::npos);
    CHECK(r.verdicts[3].reason.find("not a rational integer") != std::string::npos);

    // gamma < -1: range fires, the integer criteria defer to it
    r = certify(10, 7, CycInt::integer(7, -3), BH, table(), shipped_facts());
    CHECK(r.excluded());
    CHECK(r.first_excluding()->criterion == Criterion::GammaRange);

    CHECK_THROWS_AS(certify(4, 5, CycInt::root_of_unity(5, 2), BH, table(), shipped_facts()),
                    std::invalid_argument);
}

TEST_CASE("prime-power consequence of the vanishing-sum criterion") {
    // m = p^f: whenever the check passes, p divides v - gamma
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (unsigned long m : {p, p * p}) {
            for (long gamma = -3; gamma <= 3; ++gamma) {
                for (unsigned long v = 2; v <= 200; ++v) {
                    Verdict w = lam_leung_check(v, m, CycInt::integer(static_cast<unsigned>(m), gamma), BH);
                    if (!w.excluded()) {
                        long long diff = static_cast<long long>(v) - gamma;
                        CHECK(((diff % static_cast<long long>(p)) + p) % p == 0);
                    }
                }
            }
        }
    }
    // m = 2 p^f with gamma <= 0: v - gamma = 2 t1 + p t2 must be solvable
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (unsigned long m : {2 * p, 2 * p * p}) {
            for (long gamma = -3; gamma <= 0; ++gamma) {
                for (unsigned long v = 2; v <= 200; ++v) {
                    Verdict w = lam_leung_check(v, m, CycInt::integer(static_cast<unsigned>(m), gamma), BH);
                    if (!w.excluded()) {
                        unsigned long target = static_cast<unsigned long>(
                            static_cast<long long>(v) - gamma);
                        CHECK(semigroup_representable(target, {2, p}));
                    }
                }
            }
        }
    }
}

TEST_CASE("conference gamma = 0 never triggers the ideal criterion") {
    // v even: every prime exponent in (v-1)^v is even; v odd with h_m | v and
    // h_m > 1: the k = 0 gcd condition fails
    for (unsigned long m = 3; m <= 70; ++m) {
        auto h = table().lookup(m);
        REQUIRE(h.has_value());
        for (unsigned long v = 2; v <= 200; ++v) {
            bool applicable = (v % 2 == 0) || (*h > 1 && Int(v) % *h == 0);
            if (!applicable) continue;
            CHECK_FALSE(ideal(v, m, 0, CONF).excluded());
        }
    }
}

TEST_CASE("quadratic non-residue rule for prime-power moduli") {
    // for m = q^r or 2 q^r with q = 3 (mod 4): p self-conjugate mod m iff p
    // is a quadratic non-residue mod q (p coprime to m)
    for (unsigned long q : {3ul, 7ul, 11ul}) {
        for (unsigned r = 1; r <= 2; ++r) {
            unsigned long qr = 1;
            for (unsigned i = 0; i < r; ++i) qr *= q;
            for (unsigned long m : {qr, 2 * qr}) {
                for (unsigned long p = 2; p <= 100; ++p) {
                    if (!is_prime(Int(p)) || int_gcd(Int(p), Int(m)) != 1) continue;
                    bool qnr = pow_mod(Int(p), Int((q - 1) / 2), Int(q)) == Int(q - 1);
                    CHECK(is_self_conjugate(Int(p), m) == qnr);
                }
            }
        }
    }
}

TEST_CASE("removing facts never creates exclusions") {
    const FactStore& full = shipped_facts();
    std::vector<PrincipalityFact> all = full.all();
    // exclusion sets for the m = 46, gamma = 2 column under leave-one-out
    std::set<unsigned long> base;
    for (unsigned long v = 1; v <= 250; ++v)
        if (ideal_check(v, 46, 2, BH, table(), full).excluded()) base.insert(v);
    CHECK(!base.empty());
    for (std::size_t skip = 0; skip < all.size(); ++skip) {
        FactStore reduced;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (i != skip) reduced.add(all[i]);
        for (unsigned long v = 1; v <= 250; ++v) {
            if (ideal_check(v, 46, 2, BH, table(), reduced).excluded()) CHECK(base.count(v) == 1);
        }
    }
}

TEST_CASE("witness and assumption rendering") {
    Verdict w = ideal(25, 23, 2, BH);
    CHECK(w.witness_brief() == "q=73,e=0");
    bool saw_h = false;
    for (const auto& a : w.assumptions) {
        if (a.kind == Assumption::Kind::ClassNumber) {
            CHECK(a.brief() == "h[23]=3");
            saw_h = true;
        }
    }
    CHECK(saw_h);
    Verdict b = brock_check(45, 9, 0, BH);
    CHECK(b.witness_brief() == "p=5");
}
