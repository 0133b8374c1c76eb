#pragma once

#include <string>
#include <vector>

#include "vpb/rewriting.h"
#include "vpb/word.h"

namespace vpb {

// Maps of the simplicial group VAP_* (VAP_n = VP_{n+1}) expressed at the
// VP level: on VP_n the faces are d_0..d_{n-1}, the degeneracies
// s_0..s_{n-1}, and s_n is the extra degeneracy iota_n (the inclusion that
// adds a trivial last strand).
struct SimplicialMap {
  enum class Kind : int8_t { Face, Degeneracy, ExtraDegeneracy };
  Kind kind = Kind::Face;
  int t = 0;
  int source_strands = 2;  // map acts on words of VP_{source_strands}
};

// d_t : VP_n -> VP_{n-1}, deletion of strand t+1. 0 <= t <= n-1.
Word apply_face(int t, int n, const Word& w);

// s_t : VP_n -> VP_{n+1}, doubling of strand t+1 for t < n; t = n is
// iota_n. 0 <= t <= n.
Word apply_degeneracy(int t, int n, const Word& w);

Word apply_map(const SimplicialMap& m, const Word& w);

struct IdentityInstance {
  std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
  int n = 0, i = 0, j = 0;
  GeneratorSymbol generator;
  CheckStatus status = CheckStatus::Indeterminate;
  bool used_fallback = false;
};

struct SimplicialIdentityReport {
  int n_max = 0;
  std::vector<IdentityInstance> instances;
  long passed = 0, failed = 0, indeterminate = 0, fallbacks = 0;
  bool all_passed() const { return failed == 0 && indeterminate == 0; }
};

// Checks all five simplicial identity schemes plus the extra-degeneracy
// formulas on every generator of VP_n for 2 <= n <= n_max. Free-word
// equality first; equal_mod with the budget on mismatch.
SimplicialIdentityReport check_simplicial_identities(int n_max, const SearchBudget& budget,
                                                     int jobs = 1);

struct MooreCycleError : std::invalid_argument {
  MooreCycleError(int face, const std::string& msg) : std::invalid_argument(msg), face_index(face) {}
  int face_index;
};

struct FaceCheck {
  int j = 0;
  bool free_level = false;  // face image reduced freely to the expected word
  CheckStatus status = CheckStatus::Indeterminate;
};

struct BoundaryWitnessReport {
  Word x;      // Moore cycle in VAP_n = VP_{n+1}
  Word y;      // iota_{n+1}(x) in VP_{n+2}
  int level = 0;  // n, the VAP degree of x
  std::vector<FaceCheck> cycle_checks;    // d_j(x) ~ e for 0 <= j <= n
  std::vector<FaceCheck> witness_checks;  // d_j(y) ~ e for j <= n
  bool top_face_exact = false;            // d_{n+1}(y) == x at free-word level
  bool ok = false;
};

// x must be a Moore cycle of VAP_n (all faces trivial within budget);
// returns the conic witness y = iota_{n+1}(x) with its face checks.
// Throws MooreCycleError when a face of x cannot be certified trivial.
BoundaryWitnessReport boundary_witness(const Word& x, int level, const SearchBudget& budget);

}  // namespace vpb
