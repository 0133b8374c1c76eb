// vpb: constructions and certified verifications for the virtual pure
// braid groups VP_n. See README.md for the command reference.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "vpb/cabling.h"
#include "vpb/parallel.h"
#include "vpb/report.h"
#include "vpb/rewriting.h"
#include "vpb/simplicial.h"
#include "vpb/symmetric_action.h"

namespace {

using vpb::Json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFail = 3;
constexpr int kExitIndeterminate = 4;

struct CommonOpts {
  std::string output;
  int jobs = 1;
  bool deterministic = false;
  vpb::SearchBudget budget;
  bool certificates = true;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--depth", o.budget.max_depth, "max derivation steps per certificate");
  cmd->add_option("--states", o.budget.max_states, "max visited search states");
  cmd->add_option("--max-word-length", o.budget.max_word_length, "max intermediate word length");
  cmd->add_flag("--deterministic", o.deterministic, "fixed tie-breaking, byte-stable reports");
}

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-o,--output", o.output, "write the JSON report to this file (atomically)");
  cmd->add_option("-j,--jobs", o.jobs, "worker count for the verification grid")
      ->envname("VPB_JOBS");
}

int emit(const CommonOpts& o, const std::string& command, Json params, Json body, int code) {
  Json envelope;
  envelope["schema_version"] = vpb::kSchemaVersion;
  envelope["command"] = command;
  params["deterministic"] = o.deterministic;
  envelope["params"] = params;
  envelope["status"] = code == kExitPass          ? "pass"
                       : code == kExitIndeterminate ? "indeterminate"
                                                    : "fail";
  envelope["report"] = body;
  std::string text = envelope.dump(2);
  if (o.output.empty())
    std::cout << text << "\n";
  else
    vpb::write_text_atomic(o.output, text);
  return code;
}

vpb::Presentation make_presentation(const std::string& kind, int n) {
  if (kind == "vp") return vpb::vp_presentation(n);
  if (kind == "pb") return vpb::pure_braid_presentation(n);
  if (kind == "vb") return vpb::vb_presentation(n);
  if (kind == "sym") return vpb::sym_presentation(n);
  if (kind == "braid") return vpb::braid_presentation(n);
  if (kind == "p4-cabled") return vpb::p4_cabled_presentation();
  throw std::invalid_argument("unknown presentation kind: " + kind);
}

std::string presentation_text(const vpb::Presentation& p) {
  std::string out = "strands " + std::to_string(p.strands) + "\n";
  out += "generators (" + std::to_string(p.generators.size()) + "):";
  for (const auto& g : p.generators) out += " " + vpb::to_text(g);
  out += "\nrelators (" + std::to_string(p.relators.size()) + "):\n";
  for (const auto& r : p.relators)
    out += "  #" + std::to_string(r.id) + " [" + vpb::to_text(r.family) + "] " +
           vpb::to_text(r.word) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual pure braid group toolkit"};
  app.require_subcommand(1);

  // ---- gen ------------------------------------------------------------
  std::string gen_kind, gen_format = "json";
  int gen_n = 4;
  CommonOpts gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "emit a presentation");
  gen->add_option("kind", gen_kind, "vp|pb|vb|sym|braid|p4-cabled")->required();
  gen->add_option("--n", gen_n, "strand count");
  gen->add_option("--format", gen_format, "json|text|gap")
      ->check(CLI::IsMember({"json", "text", "gap"}));
  add_common_flags(gen, gen_opts);

  // ---- map ------------------------------------------------------------
  std::string map_kind, map_word, map_images;
  int map_t = 0, map_n = 0;
  CommonOpts map_opts;
  CLI::App* map = app.add_subcommand("map", "apply a simplicial map or permutation");
  map->add_option("kind", map_kind, "face|degeneracy|iota|perm")->required();
  map->add_option("word", map_word, "word in text syntax")->required();
  map->add_option("--t", map_t, "map index");
  map->add_option("--n", map_n, "strand count of the source")->required();
  map->add_option("--images", map_images, "perm only: comma list, images of 1..n");

  // ---- simplicial check (also: verify simplicial) ----------------------
  int simp_nmax = 6;
  CommonOpts simp_opts;
  CLI::App* simplicial = app.add_subcommand("simplicial", "simplicial structure checks");
  CLI::App* simp_check = simplicial->add_subcommand("check", "verify the simplicial identities");
  simp_check->add_option("--n-max", simp_nmax, "check VP_2..VP_n_max");
  simp_check->add_option("--budget", simp_opts.budget.max_depth,
                         "max rewrite steps for fallback checks");
  add_budget_flags(simp_check, simp_opts);
  add_common_flags(simp_check, simp_opts);

  // ---- oracle eq --------------------------------------------------------
  std::string or_w1, or_w2;
  int or_n = 4;
  long or_cap = vpb::kDefaultImageCap;
  CommonOpts or_opts;
  CLI::App* oracle = app.add_subcommand("oracle", "free-group automorphism oracle");
  CLI::App* oracle_eq = oracle->add_subcommand("eq", "compare two words");
  oracle_eq->add_option("w1", or_w1)->required();
  oracle_eq->add_option("w2", or_w2)->required();
  oracle_eq->add_option("--n", or_n, "free group rank")->required();
  oracle_eq->add_option("--image-cap", or_cap, "max image word length");
  add_common_flags(oracle_eq, or_opts);

  // ---- cabled expand ----------------------------------------------------
  std::string cab_word;
  int cab_n = 4;
  CommonOpts cab_opts;
  CLI::App* cabled = app.add_subcommand("cabled", "cabled generators");
  CLI::App* cab_expand = cabled->add_subcommand("expand", "expand a cabled word to lambda letters");
  cab_expand->add_option("word", cab_word)->required();
  cab_expand->add_option("--n", cab_n, "ambient strand count")->required();
  add_common_flags(cab_expand, cab_opts);

  // ---- verify -----------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  int lift_n = 3;
  CommonOpts lift_opts;
  CLI::App* v_lift = verify->add_subcommand("lifting", "certify the relators of VP_{n+1}");
  v_lift->add_option("--n", lift_n)->required();
  v_lift->add_flag("!--no-certificates", lift_opts.certificates, "omit certificates in the report");
  add_budget_flags(v_lift, lift_opts);
  add_common_flags(v_lift, lift_opts);

  int cover_n = 4;
  CommonOpts cover_opts;
  CLI::App* v_cover = verify->add_subcommand("cover", "generator cover of VP_{n+1}");
  v_cover->add_option("--n", cover_n)->required();
  v_cover->add_flag("--deterministic", cover_opts.deterministic);
  add_common_flags(v_cover, cover_opts);

  int part_n = 4;
  CommonOpts part_opts;
  CLI::App* v_part = verify->add_subcommand("partition", "relation decomposition of VP_{n+1}");
  v_part->add_option("--n", part_n)->required();
  v_part->add_flag("--deterministic", part_opts.deterministic);
  add_common_flags(v_part, part_opts);

  CommonOpts p4_opts;
  p4_opts.budget.max_depth = 32;         // the conjugation chains are long
  p4_opts.budget.max_states = 1'500'000;
  CLI::App* v_p4 = verify->add_subcommand("p4-cabled", "cabled P_4 presentation checks");
  v_p4->add_flag("!--no-certificates", p4_opts.certificates);
  add_budget_flags(v_p4, p4_opts);
  add_common_flags(v_p4, p4_opts);

  int sd_n = 4;
  CommonOpts sd_opts;
  CLI::App* v_sd = verify->add_subcommand("semidirect", "semidirect tower conjugation tables");
  v_sd->add_option("--n", sd_n)->required();
  add_budget_flags(v_sd, sd_opts);
  add_common_flags(v_sd, sd_opts);

  int tn_n = 3, tn_bound = 2;
  CommonOpts tn_opts;
  CLI::App* v_tn = verify->add_subcommand("tn", "T_n relator checks");
  v_tn->add_option("--n", tn_n)->required();
  v_tn->add_option("--exponent-bound", tn_bound);
  v_tn->add_flag("!--no-certificates", tn_opts.certificates);
  add_budget_flags(v_tn, tn_opts);
  add_common_flags(v_tn, tn_opts);

  int vsimp_nmax = 6;
  CommonOpts vsimp_opts;
  CLI::App* v_simp = verify->add_subcommand("simplicial", "simplicial identities");
  v_simp->add_option("--n-max", vsimp_nmax);
  add_budget_flags(v_simp, vsimp_opts);
  add_common_flags(v_simp, vsimp_opts);

  int orel_nmax = 6;
  CommonOpts orel_opts;
  CLI::App* v_orel = verify->add_subcommand("oracle-relators",
                                            "all presentation relators die under the oracle");
  v_orel->add_option("--n-max", orel_nmax);
  v_orel->add_flag("--deterministic", orel_opts.deterministic);
  add_common_flags(v_orel, orel_opts);

  int rt_nmax = 5;
  CommonOpts rt_opts;
  CLI::App* v_rt = verify->add_subcommand("cabling", "cabled degeneracy route independence");
  v_rt->add_option("--n-max", rt_nmax);
  v_rt->add_flag("--deterministic", rt_opts.deterministic);
  add_common_flags(v_rt, rt_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;  // bad flags and options: exit 2
  }

  try {
    if (*gen) {
      vpb::Presentation p = make_presentation(gen_kind, gen_n);
      Json params{{"kind", gen_kind}, {"n", p.strands}, {"format", gen_format}};
      if (gen_format == "gap") {
        std::string text = vpb::presentation_to_gap(p);
        if (gen_opts.output.empty())
          std::cout << text;
        else
          vpb::write_text_atomic(gen_opts.output, text);
        return kExitPass;
      }
      if (gen_format == "text") {
        std::string text = presentation_text(p);
        if (gen_opts.output.empty())
          std::cout << text;
        else
          vpb::write_text_atomic(gen_opts.output, text);
        return kExitPass;
      }
      return emit(gen_opts, "gen", params, vpb::presentation_json(p), kExitPass);
    }

    if (*map) {
      vpb::Word w = vpb::parse_word(map_word);
      vpb::Word image;
      if (map_kind == "face")
        image = vpb::apply_face(map_t, map_n, w);
      else if (map_kind == "degeneracy")
        image = vpb::apply_degeneracy(map_t, map_n, w);
      else if (map_kind == "iota")
        image = vpb::apply_degeneracy(map_n, map_n, w);
      else if (map_kind == "perm") {
        std::vector<int> images;
        std::stringstream ss(map_images);
        for (std::string part; std::getline(ss, part, ',');) images.push_back(std::stoi(part));
        image = vpb::act(vpb::Permutation(std::move(images)), w);
      } else {
        throw std::invalid_argument("unknown map kind: " + map_kind);
      }
      std::cout << vpb::to_text(image) << "\n";
      return kExitPass;
    }

    if (*oracle_eq) {
      vpb::OracleResult r =
          vpb::oracle_equal(vpb::parse_word(or_w1), vpb::parse_word(or_w2), or_n, or_cap);
      int code = r.verdict == vpb::OracleVerdict::Equal      ? kExitPass
                 : r.verdict == vpb::OracleVerdict::Distinct ? kExitFail
                                                             : kExitIndeterminate;
      return emit(or_opts, "oracle eq", Json{{"w1", or_w1}, {"w2", or_w2}, {"n", or_n}},
                  vpb::oracle_result_json(r), code);
    }

    if (*cab_expand) {
      vpb::Word w = vpb::expand_cabled_word(vpb::parse_word(cab_word), cab_n);
      std::cout << vpb::to_text(w) << "\n";
      return kExitPass;
    }

    if (*simp_check || *v_simp) {
      CommonOpts& o = *simp_check ? simp_opts : vsimp_opts;
      int nmax = *simp_check ? simp_nmax : vsimp_nmax;
      vpb::SimplicialIdentityReport rep = vpb::check_simplicial_identities(nmax, o.budget, o.jobs);
      int code = rep.failed > 0            ? kExitFail
                 : rep.indeterminate > 0   ? kExitIndeterminate
                                           : kExitPass;
      return emit(o, "verify simplicial", Json{{"n_max", nmax}},
                  vpb::simplicial_report_json(rep), code);
    }

    if (*v_lift) {
      vpb::LiftingReport rep = vpb::verify_lifting(lift_n, lift_opts.budget, lift_opts.jobs);
      int code = rep.all_proven() ? kExitPass : kExitIndeterminate;
      return emit(lift_opts, "verify lifting", Json{{"n", lift_n}},
                  vpb::lifting_report_json(rep, lift_opts.certificates), code);
    }

    if (*v_cover) {
      vpb::CoverReport rep = vpb::verify_generator_cover(cover_n);
      return emit(cover_opts, "verify cover", Json{{"n", cover_n}}, vpb::cover_report_json(rep),
                  rep.ok ? kExitPass : kExitFail);
    }

    if (*v_part) {
      vpb::PartitionReport rep = vpb::verify_relation_partition(part_n);
      return emit(part_opts, "verify partition", Json{{"n", part_n}},
                  vpb::partition_report_json(rep), rep.ok() ? kExitPass : kExitFail);
    }

    if (*v_p4) {
      vpb::P4CabledReport rep = vpb::verify_p4_cabled(p4_opts.budget, p4_opts.jobs);
      int code = rep.oracle_failures > 0 ? kExitFail : kExitPass;
      return emit(p4_opts, "verify p4-cabled", Json::object(),
                  vpb::p4_cabled_json(rep, p4_opts.certificates), code);
    }

    if (*v_sd) {
      vpb::SemidirectReport rep = vpb::verify_semidirect(sd_n, sd_opts.budget, sd_opts.jobs);
      return emit(sd_opts, "verify semidirect", Json{{"n", sd_n}}, vpb::semidirect_json(rep),
                  rep.all_passed() ? kExitPass : kExitFail);
    }

    if (*v_tn) {
      vpb::TnReport rep = vpb::verify_tn_relators(tn_n, tn_bound, tn_opts.budget, tn_opts.jobs);
      int code = rep.oracle_failures > 0 ? kExitFail
                 : rep.not_proven > 0    ? kExitIndeterminate
                                         : kExitPass;
      return emit(tn_opts, "verify tn", Json{{"n", tn_n}, {"exponent_bound", tn_bound}},
                  vpb::tn_report_json(rep, tn_opts.certificates), code);
    }

    if (*v_orel) {
      vpb::OracleRelatorReport rep = vpb::verify_oracle_relators(orel_nmax, orel_opts.jobs);
      return emit(orel_opts, "verify oracle-relators", Json{{"n_max", orel_nmax}},
                  vpb::oracle_relators_json(rep), rep.all_identity() ? kExitPass : kExitFail);
    }

    if (*v_rt) {
      vpb::CablingConsistencyReport rep =
          vpb::verify_cabled_degeneracy_consistency(rt_nmax, rt_opts.jobs);
      return emit(rt_opts, "verify cabling", Json{{"n_max", rt_nmax}},
                  vpb::cabling_consistency_json(rep), rep.all_passed() ? kExitPass : kExitFail);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
