#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nbhc/search.hpp"
#include "support/testutil.hpp"

using namespace nbhc;

namespace {
constexpr auto BH = DesignKind::NearButsonHadamard;
constexpr auto CONF = DesignKind::NearConference;
}  // namespace

TEST_CASE("the 4x4 search over E_5 finds exactly four gamma values") {
    SearchResult r = search_circulant(4, 5, BH);
    CHECK(r.candidates == 625);
    REQUIRE(r.hits.size() == 4);

    std::vector<CycInt> expect = {
        CycInt::integer(5, -1),
        parse_cyclotomic_literal("z^3+z^2+2", 5),
        parse_cyclotomic_literal("-z^3-z^2+1", 5),
        CycInt::integer(5, 4),
    };
    // result is sorted by the real embedding: -1 < 0.38 < 2.61 < 4
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.hits[i].gamma == expect[i]);
    CHECK(r.hits[1].gamma_abs == doctest::Approx(0.381966).epsilon(1e-4));
}

TEST_CASE("2x2 binary search") {
    SearchResult r = search_circulant(2, 2, BH);
    CHECK(r.candidates == 4);
    REQUIRE(r.hits.size() == 2);
    CHECK(r.hits[0].gamma == CycInt::integer(2, -2));
    CHECK(r.hits[1].gamma == CycInt::integer(2, 2));
}

TEST_CASE("period-1 search reports the perfect-by-convention marker") {
    SearchResult r = search_circulant(1, 7, BH);
    REQUIRE(r.hits.size() == 1);
    CHECK(r.hits[0].gamma == CycInt::zero(7));
}

TEST_CASE("budget enforcement") {
    CHECK_THROWS_AS(search_circulant(20, 5, BH), BudgetExceeded);
    try {
        search_circulant(20, 5, BH);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() > e.budget());
    }
}

TEST_CASE("worker count does not change results") {
    for (auto [v, m] : std::vector<std::pair<unsigned long, unsigned long>>{{4, 5}, {5, 3}, {6, 2}}) {
        SearchResult a = search_circulant(v, m, BH, kDefaultSearchBudget, 1);
        SearchResult b = search_circulant(v, m, BH, kDefaultSearchBudget, 3);
        SearchResult c = search_circulant(v, m, BH, kDefaultSearchBudget, 7);
        REQUIRE(a.hits.size() == b.hits.size());
        REQUIRE(a.hits.size() == c.hits.size());
        for (std::size_t i = 0; i < a.hits.size(); ++i) {
            CHECK(a.hits[i].gamma == b.hits[i].gamma);
            CHECK(a.hits[i].first_row == b.hits[i].first_row);
            CHECK(a.hits[i].gamma == c.hits[i].gamma);
            CHECK(a.hits[i].first_row == c.hits[i].first_row);
        }
    }
}

TEST_CASE("symmetry reduction preserves the gamma set") {
    for (unsigned long m = 2; m <= 5; ++m) {
        for (unsigned long v = 1; v <= 4; ++v) {
            for (DesignKind kind : {BH, CONF}) {
                SearchResult full = search_circulant(v, m, kind);
                SearchResult reduced = search_circulant(v, m, kind, kDefaultSearchBudget, 1, true);
                auto gs_full = full.gamma_set();
                auto gs_red = reduced.gamma_set();
                CHECK(gs_full == gs_red);
                if (kind == BH && v >= 1) CHECK(reduced.candidates * m == full.candidates);
            }
        }
    }
}

TEST_CASE("witnesses are lexicographically smallest rows") {
    SearchResult r = search_circulant(4, 5, BH);
    // gamma = 4 is the all-ones row, the lexicographically smallest NPS row
    CHECK(r.hits[3].first_row ==
          std::vector<SequenceSpec::Entry>{0u, 0u, 0u, 0u});
    // every witness classifies back to its gamma
    for (const auto& hit : r.hits) {
        SequenceSpec seq(5, hit.first_row, false);
        Classification c = classify(seq);
        REQUIRE(c.gamma.has_value());
        CHECK(*c.gamma == hit.gamma);
    }
}

TEST_CASE("cross-validation finds no contradictions at small sizes") {
    const auto& table = ClassNumberTable::builtin();
    FactStore facts = FactStore::load_file(testutil::data_path("facts.txt"));
    CrossValidationReport report = cross_validate(6, {2, 3, 4, 5}, table, facts);
    CHECK(report.cells == 4 * 6 * 2);
    CHECK(report.gammas_checked > 0);
    CHECK(report.contradictions.empty());

    // the all-ones witness gamma = v stays inconclusive
    CertifyResult r = certify(4, 5, CycInt::integer(5, 4), BH, table, facts);
    CHECK_FALSE(r.excluded());

    CrossValidationReport empty = cross_validate(4, {}, table, facts);
    CHECK(empty.cells == 0);
    CHECK(empty.contradictions.empty());
}
