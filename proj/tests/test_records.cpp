#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullcraft/records.hpp"

using namespace hullcraft;

TEST_CASE("jsonl round trip and revalidation") {
    auto t = FieldTower::build(3, 1);
    auto recs = enumerate_for_length_distance(t, 8, 5);
    REQUIRE(!recs.empty());
    for (const auto& r : recs) {
        const std::string line = record_to_jsonl(r);
        DiscoveryRecord back = record_from_jsonl(line);
        CHECK(back.q == r.q);
        CHECK(back.family == r.family);
        CHECK(back.eaqec == r.eaqec);
        CHECK(back.level == r.level);
        CHECK(back.hull_dim == r.hull_dim);
        CHECK(back.plan.positions == r.plan.positions);
        CHECK(back.plan.lambdas == r.plan.lambdas);
        // reparsing must reproduce the recorded flags exactly
        CHECK(defect(back.eaqec) == back.defect_value);
        CHECK(is_mds_eaqec(back.eaqec) == back.mds);
    }
}

TEST_CASE("jsonl embeds the family spec object") {
    auto t = FieldTower::build(3, 1);
    auto recs = enumerate_for_length_distance(t, 8, 5);
    auto j = nlohmann::ordered_json::parse(record_to_jsonl(recs.front()));
    CHECK(j["family"]["family"] == "subgroup");
    CHECK(j["family"]["n"] == 8);
    CHECK(j["family"]["k"] == 4);
    CHECK(j["family"]["k_1"] == 1);
    CHECK(j["classical"]["d"] == 5);
    CHECK(j["plan"].contains("positions"));
    CHECK(j["plan"].contains("lambda_encodings"));
}

TEST_CASE("csv shape") {
    CHECK(csv_header() == "q,family,n,k,d,hull_dim,level,eq_n,eq_k,eq_d,eq_c,defect,mds");
    auto t = FieldTower::build(3, 1);
    auto recs = enumerate_for_length_distance(t, 8, 5);
    const std::string row = record_to_csv(recs.front());
    CHECK(row == "3,subgroup,8,4,5,2,0,8,4,5,4,0,true");
}

TEST_CASE("record ordering is by (n, d, c)") {
    auto t = FieldTower::build(3, 1);
    std::vector<DiscoveryRecord> all;
    for (std::size_t d = 2; d <= 5; ++d) {
        auto recs = enumerate_for_length_distance(t, 8, d);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    sort_records(all);
    for (std::size_t i = 1; i < all.size(); ++i) {
        auto key = [](const DiscoveryRecord& r) { return std::tuple(r.eaqec.n, r.eaqec.d, r.eaqec.c); };
        CHECK(key(all[i - 1]) <= key(all[i]));
    }
}
