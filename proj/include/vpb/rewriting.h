#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpb/presentation.h"
#include "vpb/word.h"

namespace vpb {

struct SearchBudget {
  int max_depth = 16;            // total certificate length bound
  long max_states = 2'000'000;   // visited-set cap across both search trees
  int max_word_length = 64;
  bool deterministic = false;    // deterministic=false changes nothing today;
                                 // searches are always run in a fixed order
};

// Oriented splitting u -> v of a relator: u * v^-1 is a cyclic rotation of
// the (cyclically reduced) relator or of its inverse.
struct RewriteRule {
  Word lhs;
  Word rhs;
  int relator_id = 0;
  bool backward = false;  // true when the rotation came from the inverse relator
  int id = 0;
};

// Splittings of every rotation of w and w^-1 with nonempty left side,
// deduplicated. Commutativity relators additionally yield all two-letter
// swap rules between the pair of symbols.
std::vector<RewriteRule> compile_rules(std::span<const Relator> relators);
std::vector<RewriteRule> compile_rules(const Presentation& p);

struct Step {
  int rule_id = 0;
  int position = 0;       // letter offset of the lhs match in the current word
  int result_length = 0;  // length after substitution and reduction
};

// Replayable proof that start and end represent the same group element:
// each step rewrites the current reduced word. end is the empty word for
// triviality certificates.
struct DerivationCertificate {
  Word start;
  std::vector<Step> steps;
  Word end;
};

// Applies one rule at a position; nullopt when lhs does not match there or
// the result exceeds max_len.
std::optional<Word> apply_rule(const Word& w, const RewriteRule& r, int position,
                               int max_len = 1 << 20);

// Replays the certificate; throws std::runtime_error on any mismatch.
Word replay(const DerivationCertificate& c, std::span<const RewriteRule> rules);

struct EqualModResult {
  bool equal = false;
  DerivationCertificate certificate;
  long states = 0;
  bool budget_exhausted = false;
};

// Bounded search for a derivation w1 = w2 modulo the rules: breadth-first
// meet-in-the-middle between the two sides; the returned certificate
// replays w1 into w2. NotProven (equal == false) is not a disproof.
EqualModResult equal_mod(const Word& w1, const Word& w2, std::span<const RewriteRule> rules,
                         const SearchBudget& budget);

enum class CheckStatus : int8_t { Pass, Fail, Indeterminate };
std::string to_text(CheckStatus s);

// Certifies a family of dependent equalities in waves, the way hand proofs
// chain lemmas: targets proved in one wave join the rule set of the next
// (derivations compose transitively, so everything still follows from the
// axioms). Rule ids are stable across waves, so every certificate replays
// against the returned final rule table.
struct WaveResolution {
  std::vector<DerivationCertificate> certificates;  // per target; empty if unproven
  std::vector<long> states;
  std::vector<char> proven;
  std::vector<RewriteRule> rules;
};
WaveResolution resolve_in_waves(std::vector<Relator> axioms, const std::vector<Relator>& targets,
                                const SearchBudget& budget, int jobs,
                                bool full_budget_retry = true);

struct LiftingEntry {
  int relator_id = 0;
  RelationFamily family;
  Word word;
  // in_lower: already a relator of VP_n; certified: derivation found;
  // not_proven: budget exhausted without a derivation.
  enum class Status : int8_t { InLower, Certified, NotProven } status = Status::NotProven;
  DerivationCertificate certificate;
  long states = 0;
  // For commutativity relators only: certified again without the
  // level-(n+1) commutativity axioms (the stronger derivation).
  std::optional<bool> certified_without_aux;
};

struct LiftingReport {
  int n = 0;
  // Level-(n+1) commutativity relators are admitted as auxiliary rewrite
  // rules; long-relation derivations interleave them as swap moves.
  bool aux_comm_rules = true;
  std::vector<LiftingEntry> entries;
  std::vector<RewriteRule> rules;  // rule table the certificates replay against
  int certified = 0, in_lower = 0, not_proven = 0;
  bool all_proven() const { return not_proven == 0; }
};

// Certifies every relator of VP_{n+1} from R(n), its degeneracy images
// s_i(R(n)) and the level-(n+1) commutativity relators.
LiftingReport verify_lifting(int n, const SearchBudget& budget, int jobs = 1);

struct TnEntry {
  int i = 0, j = 0;
  Family family = Family::CabA;
  std::vector<int> exponents;
  Word relator_word;   // over the cabled alphabet
  Word expanded;       // lambda-word in VP_{n+1}
  CheckStatus oracle = CheckStatus::Indeterminate;
  CheckStatus rewriting = CheckStatus::Indeterminate;  // attempted only at zero exponents
  DerivationCertificate certificate;
};

struct TnReport {
  int n = 0;
  int exponent_bound = 0;
  bool degenerate = false;  // n = 2: the relator family instantiates, but
                            // completeness for T_2 is out of scope
  std::vector<TnEntry> entries;
  std::vector<RewriteRule> rules;
  int oracle_failures = 0, certified = 0, not_proven = 0;
};

// Checks the T_n relators (all exponent vectors bounded by exponent_bound)
// through the oracle, and certifies the zero-exponent instances by
// rewriting in VP_{n+1}.
TnReport verify_tn_relators(int n, int exponent_bound, const SearchBudget& budget, int jobs = 1);

}  // namespace vpb
