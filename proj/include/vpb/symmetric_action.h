#pragma once

#include <vector>

#include "vpb/presentation.h"
#include "vpb/rewriting.h"
#include "vpb/word.h"

namespace vpb {

// Permutation of {1..degree}. Products compose left to right, matching
// superscript conjugation chains: x^{pq} = (x^p)^q, so
// (p.then(q))(k) = q(p(k)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // images[k-1] = p(k)
  static Permutation identity(int degree);
  static Permutation transposition(int degree, int k);  // rho_k = (k, k+1)

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const;
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

// Conjugation action of S_degree on lambda words:
// lambda_{ij} |-> lambda_{p(i), p(j)} letterwise.
Word act(const Permutation& p, const Word& w);

// [e, rho_n, rho_n rho_{n-1}, ..., rho_n ... rho_1]: representatives of the
// right cosets of S_n in S_{n+1}, as permutations of degree n+1.
struct CosetRepChain {
  std::vector<Permutation> reps;
};
CosetRepChain coset_reps(int n);

// Minimal cyclic rotation of w or w^-1 under the symbol order; relator-set
// comparisons happen modulo this normalization.
Word canonical_relator(const Word& w);

struct CoverReport {
  int n = 0;
  std::vector<GeneratorSymbol> missing;  // in X_{n+1} but not covered
  std::vector<GeneratorSymbol> excess;   // covered but not in X_{n+1}
  bool ok = false;
};

// X_{n+1} = X_n u X_n^{rho_n} u X_n^{rho_n rho_{n-1}}, exact set equality.
CoverReport verify_generator_cover(int n);

struct PartitionBlock {
  std::string rep;                        // e.g. "rho_4 rho_3"
  std::vector<RelationFamily> families;   // families of VP_{n+1} covered
  int size = 0;
};

struct OverlapWitness {
  int block_a = 0, block_b = 0;
  Word relator;  // canonical form present in both blocks
};

struct PartitionReport {
  int n = 0;
  std::vector<PartitionBlock> blocks;
  bool membership_ok = false;  // every image is a relator of VP_{n+1}
  bool cover_ok = false;       // images + (n = 3: CR_4 remainder) = all relators
  bool disjoint = false;
  std::vector<OverlapWitness> overlaps;
  // n = 3 only: commutativity relators are not produced by the blocks and
  // enter as the explicit CR_4 remainder.
  bool used_comm_remainder = false;
  bool ok() const { return membership_ok && cover_ok; }
};

// Conjugates every relator of VP_n by every coset representative and
// compares against the relator set of VP_{n+1} up to cyclic
// rotation/inversion. Disjointness of the blocks is checked and overlaps
// are reported as witnesses rather than hidden.
PartitionReport verify_relation_partition(int n);

}  // namespace vpb
