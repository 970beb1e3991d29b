#pragma once

#include <string>

#include "json.hpp"

#include "gammalab/bounds.hpp"
#include "gammalab/families.hpp"
#include "gammalab/scan.hpp"

namespace gammalab {

nlohmann::json to_json(const Transform& t);
nlohmann::json to_json(const FamilySpec& spec);
nlohmann::json to_json(const CorpusSpec& spec);
nlohmann::json to_json(const ScanRecord& rec);
nlohmann::json to_json(const MaxResult& res, const std::string& objective);
nlohmann::json to_json(const ChainReport& rep);
nlohmann::json to_json(const VerifyReport& rep);

Transform transform_from_json(const nlohmann::json& j);
FamilySpec family_spec_from_json(const nlohmann::json& j);
CorpusSpec corpus_spec_from_json(const nlohmann::json& j);
ScanRecord scan_record_from_json(const nlohmann::json& j);

CorpusSpec load_corpus_spec(const std::string& path);

}  // namespace gammalab
