#pragma once

#include <vector>

#include "vpb/autfn.h"
#include "vpb/presentation.h"
#include "vpb/rewriting.h"
#include "vpb/word.h"

namespace vpb {

struct CabledGenerator {
  Family family = Family::CabA;  // CabA, CabB or CabC
  int i = 0, j = 0;              // lives in VP_{i+j}, padded upward by iota

  GeneratorSymbol symbol() const { return GeneratorSymbol{family, i, j}; }
};

// mu_{i,j}^{k,l} in VP_n: the hatted degeneracy composite
// s_{n-1} ... ^s_{l-1} ... ^s_{k-1} ... s_0 applied to lambda_{i,j} of VP_2,
// innermost (s_0) first; factors above the current level act as extra
// degeneracies. (i,j) is (1,2) or (2,1), 1 <= k < l <= n.
Word mu(int i, int j, int k, int l, int n);

// a_{i,j} = mu_{1,2}^{i,i+j}, b_{i,j} = mu_{2,1}^{i,i+j}, c_{i,j} = b * a.
Word expand_cabled(const CabledGenerator& g, int n);
// Letterwise expansion of a word over the cabled alphabet.
Word expand_cabled_word(const Word& w, int n);

// s_t on a cabled generator, as a single cabled letter:
//   t >= i+j   -> (i, j)
//   i <= t < i+j -> (i, j+1)
//   t < i      -> (i+1, j)
// verify_cabled_degeneracy_consistency pins the third case against the
// word-level degeneracy action.
GeneratorSymbol degeneracy_on_cabled_symbol(int t, const GeneratorSymbol& s);
Word degeneracy_on_cabled(int t, const CabledGenerator& g);

struct CablingRouteCheck {
  Family family;
  int i = 0, j = 0, t = 0, ambient = 0;
  bool free_level = false;
  CheckStatus status = CheckStatus::Indeterminate;
};

struct CablingConsistencyReport {
  int n_max = 0;
  std::vector<CablingRouteCheck> checks;
  long passed = 0, failed = 0;
  bool all_passed() const { return failed == 0; }
};

// expand(s_t on cabled letter) versus word-level s_t(expand): must agree
// at free-word level for every a/b generator, ambient level and t.
CablingConsistencyReport verify_cabled_degeneracy_consistency(int n_max, int jobs = 1);

struct P4CabledEntry {
  int relator_id = 0;
  Word relator;  // over the cabled alphabet
  bool extra = false;  // the two c12^{c22^{+-1}} formulas closing the table
  CheckStatus oracle = CheckStatus::Indeterminate;
  CheckStatus rewriting = CheckStatus::Indeterminate;  // best effort
  DerivationCertificate certificate;
};

struct P4CabledReport {
  std::vector<P4CabledEntry> entries;
  std::vector<RewriteRule> rules;
  int oracle_failures = 0, certified = 0, not_proven = 0;
  bool oracle_all_passed() const { return oracle_failures == 0; }
};

// Every relator of the cabled P_4 presentation, expanded into VP_4
// lambda-words, must die under the exact Aut(F_4) oracle; rewriting
// certificates in vp_presentation(4) are attempted within the budget.
P4CabledReport verify_p4_cabled(const SearchBudget& budget, int jobs = 1);

struct SemidirectEntry {
  Word target;       // x, a cabled c-generator
  Word conjugator;   // g
  int exponent = 1;  // checks x^{g^exponent}
  Word rhs;          // stated right-hand word over the cabled alphabet
  int target_level = 0;     // x in V_{target_level}
  bool asserted = true;     // false: informational instance of the general-n
                            // scheme whose P_4-specific letters overreach
  CheckStatus oracle = CheckStatus::Indeterminate;
  bool rhs_in_lower_levels = false;
};

struct SemidirectReport {
  int n = 0;
  std::vector<SemidirectEntry> entries;
  int failures = 0;      // failed asserted entries
  int discrepancies = 0; // failed informational entries
  bool all_passed() const { return failures == 0; }
};

// Conjugation tables behind the semidirect decomposition
// P_n = V_1 x| (V_2 x| ... x| V_{n-1}) for n = 3, 4, 5: each stated
// x^{g^{+-1}} = w is checked by the exact oracle, and w's letters must lie
// in levels <= level(x).
SemidirectReport verify_semidirect(int n, const SearchBudget& budget, int jobs = 1);

}  // namespace vpb
