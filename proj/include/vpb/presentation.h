#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vpb/word.h"

namespace vpb {

enum class FamilyKind : int8_t {
  LongR,         // params (i, j, l), i < j < l: the six long relations on that support
  Comm,          // params (i, j, l, m), i < j, l < m, j > m: the four commutativity relators
  BraidRel,      // sigma relations of B_n
  SymRel,        // rho relations of S_n
  MixedRel,      // mixed sigma/rho relations of VB_n
  PureBraidRel,  // params (scheme, indices..., eps)
  CabledP4Rel,   // params (index in the cabled P_4 relation list)
  TnRel,         // params (n, i, j, family, k_1..k_{n-1})
};

struct RelationFamily {
  FamilyKind kind = FamilyKind::LongR;
  std::vector<int> params;

  auto operator<=>(const RelationFamily&) const = default;
};

std::string to_text(const RelationFamily& f);

struct Relator {
  Word word;  // one-sided: LHS * RHS^-1, freely reduced
  RelationFamily family;
  int id = 0;
  int lhs_len = 0;  // split point recovering the equation LHS = RHS

  // (LHS, RHS) with word == LHS * RHS^-1.
  std::pair<Word, Word> equation() const;
};

struct Presentation {
  int strands = 0;
  std::vector<GeneratorSymbol> generators;
  std::vector<Relator> relators;

  bool has_generator(const GeneratorSymbol& s) const;
};

// VP_n on lambda generators, relations (1)-(2). VP_1 is trivial.
Presentation vp_presentation(int n);
// Artin pure braid group P_n on A_{i,j}, the four relation schemes with
// eps = +-1, duplicates removed.
Presentation pure_braid_presentation(int n);
Presentation braid_presentation(int n);
Presentation sym_presentation(int n);
Presentation vb_presentation(int n);
// The cabled presentation of P_4 on c11, c21, c12, c31, c22, c13.
Presentation p4_cabled_presentation();

// Conjugated-commutator relator of T_n over the cabled alphabet:
// [f_{i,n+1-i}, f_{j,n+1-j}] conjugated by c11^{k_1} ... c_{n-1,1}^{k_{n-1}}.
Relator tn_relator(int n, int i, int j, std::span<const int> exponents, Family which);

std::vector<Relator> relation_family_members(const Presentation& p, const RelationFamily& f);

// Defining word of lambda_{ij} in VB_n over the sigma/rho alphabet.
Word lambda_in_vb(int i, int j);
// Defining word of A_{ij} in B_n over the sigma alphabet.
Word artin_in_braid(int i, int j);

struct SubgroupSpec {
  std::string name;
  std::vector<Word> generators;
};

SubgroupSpec cabled_v_subgroup(int a, int n);  // V_a = <c_{a,m}, m <= n-a> in P_n
SubgroupSpec cabled_t_subgroup(int k);         // T_k^c = <c_{ij}, i+j = k+1>
SubgroupSpec u_subgroup(int n);                // U_n = <A_{1n}, ..., A_{n-1,n}>

std::string presentation_to_gap(const Presentation& p);

}  // namespace vpb
