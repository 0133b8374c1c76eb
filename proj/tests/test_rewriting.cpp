#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vpb/autfn.h"
#include "vpb/rewriting.h"
#include "vpb/simplicial.h"

using namespace vpb;

namespace {

Word W(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("rule compilation") {
  Presentation empty = vp_presentation(2);
  CHECK(compile_rules(empty).empty());

  // a single commutator relator yields all eight two-letter swap rules
  Relator comm{commutator(W("l[1,3]"), W("l[2,4]")), {FamilyKind::Comm, {1, 3, 2, 4}}, 0, 2};
  auto rules = compile_rules(std::span<const Relator>(&comm, 1));
  auto has_rule = [&](const char* lhs, const char* rhs) {
    for (const RewriteRule& r : rules)
      if (r.lhs == W(lhs) && r.rhs == W(rhs)) return true;
    return false;
  };
  CHECK(has_rule("l[1,3]*l[2,4]", "l[2,4]*l[1,3]"));
  CHECK(has_rule("l[2,4]*l[1,3]", "l[1,3]*l[2,4]"));
  CHECK(has_rule("l[1,3]^-1*l[2,4]", "l[2,4]*l[1,3]^-1"));
  CHECK(has_rule("l[2,4]^-1*l[1,3]^-1", "l[1,3]^-1*l[2,4]^-1"));
  // every rule side recombines to a rotation of the relator or its inverse
  for (const RewriteRule& r : rules) {
    Word closed = r.lhs * r.rhs.inverse();
    bool is_rotation = false;
    for (const Word& base : {comm.word, comm.word.inverse()})
      for (int rot = 0; rot < base.size(); ++rot) {
        Word candidate = base.subword(rot, base.size()) * base.subword(0, rot);
        is_rotation = is_rotation || candidate == closed;
      }
    CHECK(is_rotation);
  }

  // a long relator contributes the equation rule among its splittings
  Presentation p3 = vp_presentation(3);
  auto rules3 = compile_rules(p3);
  bool found = false;
  for (const RewriteRule& r : rules3)
    found = found || (r.lhs == W("l[1,2]*l[1,3]*l[2,3]") && r.rhs == W("l[2,3]*l[1,3]*l[1,2]"));
  CHECK(found);
}

TEST_CASE("equal_mod basics") {
  Presentation p3 = vp_presentation(3);
  auto rules = compile_rules(p3);
  SearchBudget budget;

  // identical words: empty certificate
  EqualModResult same = equal_mod(W("l[1,2]*l[1,3]"), W("l[1,2]*l[1,3]"), rules, budget);
  CHECK(same.equal);
  CHECK(same.certificate.steps.empty());

  // the defining relation of VP_3 certifies in one step
  EqualModResult one =
      equal_mod(W("l[1,2]*l[1,3]*l[2,3]"), W("l[2,3]*l[1,3]*l[1,2]"), rules, budget);
  CHECK(one.equal);
  CHECK(replay(one.certificate, rules) == W("l[2,3]*l[1,3]*l[1,2]"));

  // VP_2 is free of rank 2: no budget proves l12 = l21
  auto rules2 = compile_rules(vp_presentation(2));
  SearchBudget big;
  big.max_depth = 30;
  EqualModResult no = equal_mod(W("l[1,2]"), W("l[2,1]"), rules2, big);
  CHECK_FALSE(no.equal);
  CHECK_FALSE(no.budget_exhausted);  // the search space is exhausted, honestly
}

TEST_CASE("the first lifted long relation of VP_4") {
  // l12 l14 l24 = l24 l14 l12 from R(3), s_i R(3) and the commutativity
  // relators of VP_4
  Presentation base = vp_presentation(3);
  std::vector<Relator> rels = base.relators;
  for (int t = 0; t < 3; ++t)
    for (const Relator& r : base.relators) {
      Relator lifted;
      lifted.word = apply_degeneracy(t, 3, r.word);
      lifted.family = r.family;
      lifted.lhs_len = lifted.word.size();
      rels.push_back(lifted);
    }
  for (const Relator& r : vp_presentation(4).relators)
    if (r.family.kind == FamilyKind::Comm) rels.push_back(r);
  for (size_t k = 0; k < rels.size(); ++k) rels[k].id = static_cast<int>(k);
  auto rules = compile_rules(rels);

  SearchBudget budget;
  EqualModResult res =
      equal_mod(W("l[1,2]*l[1,4]*l[2,4]"), W("l[2,4]*l[1,4]*l[1,2]"), rules, budget);
  CHECK(res.equal);
  CHECK(res.certificate.steps.size() <= 8);
  CHECK(replay(res.certificate, rules) == W("l[2,4]*l[1,4]*l[1,2]"));
}

TEST_CASE("certificates replay and respect budget monotonicity") {
  Presentation p4 = vp_presentation(4);
  auto rules = compile_rules(p4);

  Word lhs = W("l[1,2]*l[3,4]*l[1,3]");
  Word rhs = W("l[3,4]*l[1,2]*l[1,3]");
  SearchBudget small;
  small.max_depth = 2;
  EqualModResult r1 = equal_mod(lhs, rhs, rules, small);
  CHECK(r1.equal);

  SearchBudget large;
  large.max_depth = 12;
  large.max_states = 4'000'000;
  EqualModResult r2 = equal_mod(lhs, rhs, rules, large);
  CHECK(r2.equal);  // enlarging budgets never flips Equal to NotProven

  // a too-small budget is reported as exhausted, and growing it flips to Equal
  Word hard_lhs = W("l[1,2]*l[1,4]*l[2,4]*l[1,2]*l[1,3]*l[2,3]");
  Word hard_rhs = W("l[2,4]*l[1,4]*l[1,2]*l[2,3]*l[1,3]*l[1,2]");
  SearchBudget tiny;
  tiny.max_depth = 1;
  EqualModResult t1 = equal_mod(hard_lhs, hard_rhs, rules, tiny);
  CHECK_FALSE(t1.equal);
  CHECK(t1.budget_exhausted);
  EqualModResult t2 = equal_mod(hard_lhs, hard_rhs, rules, SearchBudget{});
  CHECK(t2.equal);
}

TEST_CASE("determinism: identical runs give identical certificates") {
  Presentation p4 = vp_presentation(4);
  auto rules = compile_rules(p4);
  Word lhs = W("l[1,2]*l[1,4]*l[2,4]*l[3,4]");
  Word rhs = W("l[2,4]*l[1,4]*l[1,2]*l[3,4]");
  SearchBudget budget;
  budget.deterministic = true;
  EqualModResult a = equal_mod(lhs, rhs, rules, budget);
  EqualModResult b = equal_mod(lhs, rhs, rules, budget);
  REQUIRE(a.equal);
  REQUIRE(b.equal);
  REQUIRE(a.certificate.steps.size() == b.certificate.steps.size());
  for (size_t k = 0; k < a.certificate.steps.size(); ++k) {
    CHECK(a.certificate.steps[k].rule_id == b.certificate.steps[k].rule_id);
    CHECK(a.certificate.steps[k].position == b.certificate.steps[k].position);
  }
}

TEST_CASE("soundness: certified equalities agree with the oracle") {
  Presentation p4 = vp_presentation(4);
  auto rules = compile_rules(p4);
  std::vector<std::pair<Word, Word>> cases = {
      {W("l[1,2]*l[1,3]*l[2,3]"), W("l[2,3]*l[1,3]*l[1,2]")},
      {W("l[1,4]*l[2,3]"), W("l[2,3]*l[1,4]")},
      {W("l[3,4]*l[3,1]*l[4,1]*l[1,2]"), W("l[4,1]*l[3,1]*l[3,4]*l[1,2]")},
  };
  for (auto& [a, b] : cases) {
    EqualModResult r = equal_mod(a, b, rules, SearchBudget{});
    CHECK(r.equal);
    CHECK(oracle_equal(a, b, 4).verdict == OracleVerdict::Equal);
  }
}

TEST_CASE("verify_lifting n=3 certifies all 36 relators of VP_4") {
  SearchBudget budget;
  LiftingReport rep = verify_lifting(3, budget);
  CHECK(rep.entries.size() == 36);
  CHECK(rep.all_proven());
  CHECK(rep.in_lower == 6);                      // the relators of VP_3 verbatim
  CHECK(rep.certified == 30);
  int aux_free_comms = 0;
  for (const LiftingEntry& e : rep.entries) {
    if (e.status == LiftingEntry::Status::Certified) {
      CHECK(e.certificate.steps.size() <= 16);
      CHECK(replay(e.certificate, rep.rules) == e.certificate.end);
    }
    if (e.certified_without_aux && *e.certified_without_aux) ++aux_free_comms;
  }
  // at n=3 the commutativity axioms of level 4 are genuinely needed: only
  // the long relations are derivable from the lifts
  CHECK(aux_free_comms == 0);
}

TEST_CASE("lifting respects the lemma structure: s_2 rules suffice for {1,2,4}") {
  Presentation base = vp_presentation(3);
  std::vector<Relator> rels = base.relators;
  for (const Relator& r : base.relators) {
    Relator lifted;
    lifted.word = apply_degeneracy(2, 3, r.word);
    lifted.family = r.family;
    lifted.lhs_len = lifted.word.size();
    rels.push_back(lifted);
  }
  for (const Relator& r : vp_presentation(4).relators)
    if (r.family.kind == FamilyKind::Comm) rels.push_back(r);
  for (size_t k = 0; k < rels.size(); ++k) rels[k].id = static_cast<int>(k);
  auto rules = compile_rules(rels);

  Presentation p4 = vp_presentation(4);
  auto members = relation_family_members(p4, RelationFamily{FamilyKind::LongR, {1, 2, 4}});
  REQUIRE(members.size() == 6);
  for (const Relator& r : members) {
    auto [lhs, rhs] = r.equation();
    EqualModResult res = equal_mod(lhs, rhs, rules, SearchBudget{});
    CHECK(res.equal);
  }
}

TEST_CASE("parallel lifting agrees with the serial reference") {
  SearchBudget budget;
  LiftingReport serial = verify_lifting(3, budget, 1);
  LiftingReport parallel = verify_lifting(3, budget, 4);
  REQUIRE(serial.entries.size() == parallel.entries.size());
  for (size_t k = 0; k < serial.entries.size(); ++k)
    CHECK(serial.entries[k].status == parallel.entries[k].status);
}

TEST_CASE("verify_tn_relators for T_3, small bound") {
  SearchBudget budget;
  TnReport rep = verify_tn_relators(3, 1, budget);
  CHECK_FALSE(rep.degenerate);
  CHECK(rep.oracle_failures == 0);
  CHECK(rep.entries.size() == 2 * 3 * 9);  // two families, three pairs, 3^2 vectors
  CHECK(rep.not_proven == 0);              // all zero-exponent instances certified
  for (const TnEntry& e : rep.entries) {
    bool zero = std::all_of(e.exponents.begin(), e.exponents.end(),
                            [](int v) { return v == 0; });
    if (zero) {
      CHECK(e.rewriting == CheckStatus::Pass);
      CHECK(replay(e.certificate, rep.rules) == e.certificate.end);
    }
  }
}

TEST_CASE("verify_tn_relators degenerate case n=2") {
  SearchBudget budget;
  TnReport rep = verify_tn_relators(2, 1, budget);
  CHECK(rep.degenerate);
  CHECK(rep.oracle_failures == 0);  // welded images of the relators are trivial
  CHECK_THROWS_AS(verify_tn_relators(5, 1, budget), std::invalid_argument);
}

TEST_CASE("lifting certificates agree with the oracle") {
  LiftingReport rep = verify_lifting(3, SearchBudget{});
  for (const LiftingEntry& e : rep.entries) {
    if (e.status != LiftingEntry::Status::Certified) continue;
    CHECK(oracle_equal(e.certificate.start, e.certificate.end, 4).verdict ==
          OracleVerdict::Equal);
  }
}

TEST_CASE("verify_tn_relators for T_4, zero exponents") {
  TnReport rep = verify_tn_relators(4, 0, SearchBudget{});
  CHECK(rep.entries.size() == 2 * 6);  // two families, six pairs
  CHECK(rep.oracle_failures == 0);
  CHECK(rep.not_proven == 0);
  for (const TnEntry& e : rep.entries) {
    CHECK(e.rewriting == CheckStatus::Pass);
    CHECK(replay(e.certificate, rep.rules) == e.certificate.end);
  }
}

TEST_CASE("random relator consequences are provable, random inequalities are not misproved") {
  std::mt19937 rng(91);
  Presentation p4 = vp_presentation(4);
  auto rules = compile_rules(p4);
  std::uniform_int_distribution<int> pick_rel(0, static_cast<int>(p4.relators.size()) - 1);
  std::uniform_int_distribution<int> idx(1, 4);
  std::uniform_int_distribution<int> sgn(0, 1);
  auto random_word = [&](int len) {
    std::vector<Letter> raw;
    while (static_cast<int>(raw.size()) < len) {
      int i = idx(rng), j = idx(rng);
      if (i == j) continue;
      raw.push_back({lam(i, j), sgn(rng) ? 1 : -1});
    }
    return Word::reduce(raw);
  };

  for (int trial = 0; trial < 40; ++trial) {
    // insert one relator equation in a random context: always provable fast
    auto [lhs, rhs] = p4.relators[pick_rel(rng)].equation();
    Word u = random_word(3), v = random_word(3);
    EqualModResult res = equal_mod(u * lhs * v, u * rhs * v, rules, SearchBudget{});
    CHECK(res.equal);
    CHECK(replay(res.certificate, rules) == res.certificate.end);
  }

  SearchBudget tiny;
  tiny.max_depth = 6;
  tiny.max_states = 20'000;
  for (int trial = 0; trial < 40; ++trial) {
    Word a = random_word(4), b = random_word(4);
    if (oracle_equal(a, b, 4).verdict != OracleVerdict::Distinct) continue;
    // soundness: genuinely distinct elements are never proven equal
    EqualModResult res = equal_mod(a, b, rules, tiny);
    CHECK_FALSE(res.equal);
  }
}

TEST_CASE("tampered certificates fail to replay") {
  Presentation p3 = vp_presentation(3);
  auto rules = compile_rules(p3);
  EqualModResult res =
      equal_mod(parse_word("l[1,2]*l[1,3]*l[2,3]"), parse_word("l[2,3]*l[1,3]*l[1,2]"), rules,
                SearchBudget{});
  REQUIRE(res.equal);
  REQUIRE_FALSE(res.certificate.steps.empty());

  DerivationCertificate bad_pos = res.certificate;
  bad_pos.steps[0].position += 1;
  CHECK_THROWS_AS(replay(bad_pos, rules), std::runtime_error);

  DerivationCertificate bad_end = res.certificate;
  bad_end.end = parse_word("l[1,2]");
  CHECK_THROWS_AS(replay(bad_end, rules), std::runtime_error);

  DerivationCertificate bad_rule = res.certificate;
  bad_rule.steps[0].rule_id = static_cast<int>(rules.size()) + 5;
  CHECK_THROWS_AS(replay(bad_rule, rules), std::runtime_error);
}
