#include "hullcraft/records.hpp"

#include <algorithm>
#include <sstream>

namespace hullcraft {

using nlohmann::ordered_json;

std::string record_to_jsonl(const DiscoveryRecord& rec) {
    ordered_json j;
    j["q"] = rec.q;
    j["family"] = rec.family_spec;
    j["classical"] = {{"n", rec.classical_n}, {"k", rec.classical_k}, {"d", rec.classical_d}};
    j["hull_dim"] = rec.hull_dim;
    j["level"] = rec.level;
    j["eaqec"] = {{"n", rec.eaqec.n}, {"k", rec.eaqec.k}, {"d", rec.eaqec.d}, {"c", rec.eaqec.c}};
    j["defect"] = rec.defect_value;
    j["mds"] = rec.mds;
    ordered_json plan;
    plan["positions"] = rec.plan.positions;
    plan["lambda_encodings"] = rec.plan.lambdas;
    j["plan"] = plan;
    return j.dump();
}

std::string csv_header() { return "q,family,n,k,d,hull_dim,level,eq_n,eq_k,eq_d,eq_c,defect,mds"; }

std::string record_to_csv(const DiscoveryRecord& rec) {
    std::ostringstream os;
    os << rec.q << ',' << rec.family << ',' << rec.classical_n << ',' << rec.classical_k << ','
       << rec.classical_d << ',' << rec.hull_dim << ',' << rec.level << ',' << rec.eaqec.n << ','
       << rec.eaqec.k << ',' << rec.eaqec.d << ',' << rec.eaqec.c << ',' << rec.defect_value << ','
       << (rec.mds ? "true" : "false");
    return os.str();
}

DiscoveryRecord record_from_jsonl(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    DiscoveryRecord rec;
    rec.q = j.at("q").get<std::uint32_t>();
    rec.family_spec = j.at("family");
    rec.family = rec.family_spec.at("family").get<std::string>();
    rec.classical_n = j.at("classical").at("n").get<long>();
    rec.classical_k = j.at("classical").at("k").get<long>();
    rec.classical_d = j.at("classical").at("d").get<long>();
    rec.hull_dim = j.at("hull_dim").get<std::size_t>();
    rec.level = j.at("level").get<std::size_t>();
    rec.eaqec = {rec.q, j.at("eaqec").at("n").get<long>(), j.at("eaqec").at("k").get<long>(),
                 j.at("eaqec").at("d").get<long>(), j.at("eaqec").at("c").get<long>()};
    rec.defect_value = j.at("defect").get<long>();
    rec.mds = j.at("mds").get<bool>();
    if (j.contains("plan")) {
        rec.plan.positions = j["plan"].at("positions").get<std::vector<std::size_t>>();
        rec.plan.lambdas = j["plan"].at("lambda_encodings").get<std::vector<Elt>>();
        rec.plan.l_target = rec.level;
    }
    return rec;
}

bool record_less(const DiscoveryRecord& a, const DiscoveryRecord& b) {
    auto key = [](const DiscoveryRecord& r) {
        return std::tuple(r.eaqec.n, r.eaqec.d, r.eaqec.c, r.family, r.classical_k, r.level);
    };
    return key(a) < key(b);
}

void sort_records(std::vector<DiscoveryRecord>& recs) {
    std::stable_sort(recs.begin(), recs.end(), record_less);
}

} // namespace hullcraft
