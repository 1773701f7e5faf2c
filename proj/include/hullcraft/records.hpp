#ifndef HULLCRAFT_RECORDS_HPP
#define HULLCRAFT_RECORDS_HPP

#include <string>
#include <vector>

#include "hullcraft/eaqec.hpp"

namespace hullcraft {

/// One JSONL line:
/// {"q":..,"family":{..spec..},"classical":{"n":..,"k":..,"d":..},"hull_dim":..,
///  "level":..,"eaqec":{"n":..,"k":..,"d":..,"c":..},"defect":..,"mds":..,
///  "plan":{"positions":[..],"lambda_encodings":[..]}}
std::string record_to_jsonl(const DiscoveryRecord& rec);

/// Fixed CSV columns: q,family,n,k,d,hull_dim,level,eq_n,eq_k,eq_d,eq_c,defect,mds
std::string csv_header();
std::string record_to_csv(const DiscoveryRecord& rec);

/// Parses a JSONL line back into the core fields (spec and plan retained as
/// JSON) and recomputes defect / mds for revalidation.
DiscoveryRecord record_from_jsonl(const std::string& line);

/// Total order used for deterministic output: (n, d, c, family, k, level).
bool record_less(const DiscoveryRecord& a, const DiscoveryRecord& b);

void sort_records(std::vector<DiscoveryRecord>& recs);

} // namespace hullcraft

#endif
