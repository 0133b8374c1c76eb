#pragma once

#include <filesystem>
#include <span>
#include <string>

#include <json.hpp>

#include "vpb/autfn.h"
#include "vpb/cabling.h"
#include "vpb/presentation.h"
#include "vpb/rewriting.h"
#include "vpb/simplicial.h"
#include "vpb/symmetric_action.h"

namespace vpb {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json presentation_json(const Presentation& p);
Json certificate_json(const DerivationCertificate& c, std::span<const RewriteRule> rules);
// Certificates inside the verification reports are self-describing (each
// step carries the rule's sides), so rules are compiled in, not shipped.
Json simplicial_report_json(const SimplicialIdentityReport& r);
Json boundary_witness_json(const BoundaryWitnessReport& r);
Json lifting_report_json(const LiftingReport& r, bool include_certificates);
Json tn_report_json(const TnReport& r, bool include_certificates);
Json cover_report_json(const CoverReport& r);
Json partition_report_json(const PartitionReport& r);
Json cabling_consistency_json(const CablingConsistencyReport& r);
Json p4_cabled_json(const P4CabledReport& r, bool include_certificates);
Json semidirect_json(const SemidirectReport& r);
Json oracle_result_json(const OracleResult& r);
Json oracle_relators_json(const OracleRelatorReport& r);

// Writes via a temp file and rename, one trailing newline.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace vpb
