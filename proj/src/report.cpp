#include "vpb/report.h"

#include <fstream>

#include "vpb/parallel.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vpb {

int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["strands"] = p.strands;
  Json gens = Json::array();
  for (const GeneratorSymbol& g : p.generators) gens.push_back(to_text(g));
  j["generators"] = gens;
  Json rels = Json::array();
  for (const Relator& r : p.relators) {
    Json e;
    e["id"] = r.id;
    e["family"] = to_text(r.family);
    e["word"] = to_text(r.word);
    rels.push_back(e);
  }
  j["relators"] = rels;
  return j;
}

Json certificate_json(const DerivationCertificate& c, std::span<const RewriteRule> rules) {
  Json j;
  j["start"] = to_text(c.start);
  Json steps = Json::array();
  for (const Step& s : c.steps) {
    Json e;
    const RewriteRule& r = rules[s.rule_id];
    e["relator_id"] = r.relator_id;
    e["orientation"] = r.backward ? "backward" : "forward";
    e["position"] = s.position;
    e["rule_id"] = s.rule_id;
    e["lhs"] = to_text(r.lhs);
    e["rhs"] = to_text(r.rhs);
    e["result_length"] = s.result_length;
    steps.push_back(e);
  }
  j["steps"] = steps;
  j["end"] = to_text(c.end);
  return j;
}

Json simplicial_report_json(const SimplicialIdentityReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n_max"] = r.n_max;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["indeterminate"] = r.indeterminate;
  j["fallbacks"] = r.fallbacks;
  Json inst = Json::array();
  for (const IdentityInstance& e : r.instances) {
    Json x;
    x["instance"] = e.identity + " @ n=" + std::to_string(e.n) + " i=" + std::to_string(e.i) +
                    " j=" + std::to_string(e.j) + " gen=" + to_text(e.generator);
    x["status"] = to_text(e.status);
    if (e.used_fallback) x["fallback"] = true;
    inst.push_back(x);
  }
  j["instances"] = inst;
  return j;
}

namespace {

Json face_check_json(const FaceCheck& c) {
  Json x;
  x["face"] = c.j;
  x["free_level"] = c.free_level;
  x["status"] = to_text(c.status);
  return x;
}

}  // namespace

Json boundary_witness_json(const BoundaryWitnessReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["level"] = r.level;
  j["x"] = to_text(r.x);
  j["y"] = to_text(r.y);
  Json cyc = Json::array(), wit = Json::array();
  for (const FaceCheck& c : r.cycle_checks) cyc.push_back(face_check_json(c));
  for (const FaceCheck& c : r.witness_checks) wit.push_back(face_check_json(c));
  j["cycle_checks"] = cyc;
  j["witness_checks"] = wit;
  j["top_face_exact"] = r.top_face_exact;
  j["ok"] = r.ok;
  return j;
}

Json lifting_report_json(const LiftingReport& r, bool include_certificates) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["aux_comm_rules"] = r.aux_comm_rules;
  j["note"] =
      "level-(n+1) commutativity relators are admitted as auxiliary rules; "
      "long-relation derivations interleave them as swap moves";
  j["certified"] = r.certified;
  j["in_lower"] = r.in_lower;
  j["not_proven"] = r.not_proven;
  Json rels = Json::array();
  for (const LiftingEntry& e : r.entries) {
    Json x;
    x["id"] = e.relator_id;
    x["family"] = to_text(e.family);
    x["word"] = to_text(e.word);
    switch (e.status) {
      case LiftingEntry::Status::InLower: x["status"] = "in_lower"; break;
      case LiftingEntry::Status::Certified: x["status"] = "certified"; break;
      case LiftingEntry::Status::NotProven: x["status"] = "not_proven"; break;
    }
    x["certificate_steps"] = static_cast<int>(e.certificate.steps.size());
    if (e.certified_without_aux) x["certified_without_aux"] = *e.certified_without_aux;
    if (include_certificates && e.status == LiftingEntry::Status::Certified)
      x["certificate"] = certificate_json(e.certificate, r.rules);
    rels.push_back(x);
  }
  j["relators"] = rels;
  return j;
}

Json tn_report_json(const TnReport& r, bool include_certificates) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["exponent_bound"] = r.exponent_bound;
  j["degenerate"] = r.degenerate;
  if (r.degenerate)
    j["note"] =
        "n=2: the relators exist and are checked, but completeness for T_2 "
        "is outside scope";
  j["oracle_failures"] = r.oracle_failures;
  j["certified"] = r.certified;
  j["not_proven"] = r.not_proven;
  Json entries = Json::array();
  for (const TnEntry& e : r.entries) {
    Json x;
    x["family"] = e.family == Family::CabA ? "a" : "b";
    x["i"] = e.i;
    x["j"] = e.j;
    x["exponents"] = e.exponents;
    x["relator"] = to_text(e.relator_word);
    x["oracle"] = to_text(e.oracle);
    bool zero = true;
    for (int v : e.exponents) zero = zero && v == 0;
    if (zero) {
      x["rewriting"] = to_text(e.rewriting);
      if (include_certificates && e.rewriting == CheckStatus::Pass)
        x["certificate"] = certificate_json(e.certificate, r.rules);
    }
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

Json cover_report_json(const CoverReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["ok"] = r.ok;
  Json miss = Json::array(), exc = Json::array();
  for (const GeneratorSymbol& g : r.missing) miss.push_back(to_text(g));
  for (const GeneratorSymbol& g : r.excess) exc.push_back(to_text(g));
  j["missing"] = miss;
  j["excess"] = exc;
  return j;
}

Json partition_report_json(const PartitionReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["membership_ok"] = r.membership_ok;
  j["cover_ok"] = r.cover_ok;
  j["disjoint"] = r.disjoint;
  j["used_comm_remainder"] = r.used_comm_remainder;
  Json blocks = Json::array();
  for (const PartitionBlock& b : r.blocks) {
    Json x;
    x["rep"] = b.rep;
    x["size"] = b.size;
    Json fams = Json::array();
    for (const RelationFamily& f : b.families) fams.push_back(to_text(f));
    x["families"] = fams;
    blocks.push_back(x);
  }
  j["blocks"] = blocks;
  Json ov = Json::array();
  for (const OverlapWitness& w : r.overlaps) {
    Json x;
    x["blocks"] = {w.block_a, w.block_b};
    x["relator"] = to_text(w.relator);
    ov.push_back(x);
  }
  j["overlaps"] = ov;
  return j;
}

Json cabling_consistency_json(const CablingConsistencyReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n_max"] = r.n_max;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  Json checks = Json::array();
  for (const CablingRouteCheck& c : r.checks) {
    Json x;
    x["generator"] =
        to_text(GeneratorSymbol{c.family, c.i, c.j});
    x["t"] = c.t;
    x["ambient"] = c.ambient;
    x["free_level"] = c.free_level;
    x["status"] = to_text(c.status);
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

Json p4_cabled_json(const P4CabledReport& r, bool include_certificates) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["oracle_failures"] = r.oracle_failures;
  j["certified"] = r.certified;
  j["not_proven"] = r.not_proven;
  Json entries = Json::array();
  for (const P4CabledEntry& e : r.entries) {
    Json x;
    x["id"] = e.relator_id;
    x["relator"] = to_text(e.relator);
    x["extra"] = e.extra;
    x["oracle"] = to_text(e.oracle);
    x["rewriting"] = e.rewriting == CheckStatus::Pass ? "proven" : "not-proven";
    if (include_certificates && e.rewriting == CheckStatus::Pass)
      x["certificate"] = certificate_json(e.certificate, r.rules);
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

Json semidirect_json(const SemidirectReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = r.n;
  j["failures"] = r.failures;
  j["discrepancies"] = r.discrepancies;
  Json entries = Json::array();
  for (const SemidirectEntry& e : r.entries) {
    Json x;
    x["target"] = to_text(e.target);
    x["conjugator"] = to_text(e.conjugator);
    x["exponent"] = e.exponent;
    x["rhs"] = to_text(e.rhs);
    x["target_level"] = e.target_level;
    x["asserted"] = e.asserted;
    x["oracle"] = to_text(e.oracle);
    x["rhs_in_lower_levels"] = e.rhs_in_lower_levels;
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

Json oracle_result_json(const OracleResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["verdict"] = to_text(r.verdict);
  j["exactness"] = to_text(r.exactness);
  j["max_image_length"] = r.max_image_length;
  j["image_lengths"] = Json{{"w1", r.image_lengths_w1}, {"w2", r.image_lengths_w2}};
  return j;
}

Json oracle_relators_json(const OracleRelatorReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n_max"] = r.n_max;
  j["checked"] = r.checked;
  j["all_identity"] = r.all_identity();
  Json v = Json::array();
  for (const OracleRelatorViolation& x : r.violations)
    v.push_back(Json{{"presentation", x.presentation},
                     {"n", x.n},
                     {"relator_id", x.relator_id},
                     {"word", to_text(x.word)}});
  j["violations"] = v;
  return j;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace vpb
