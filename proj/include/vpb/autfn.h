#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpb/word.h"

namespace vpb {

// Endomorphism of the free group F_n, stored as the images of x_1..x_n.
// Braid letters act by the Artin rules, virtual letters by permuting the
// basis; composite letters (lambda, A, cabled) expand through their
// defining sigma/rho words.
struct FreeGroupAutomorphism {
  int degree = 0;
  std::vector<Word> images;  // freely reduced words over x_1..x_n

  bool operator==(const FreeGroupAutomorphism&) const = default;
};

FreeGroupAutomorphism identity_aut(int n);
bool is_identity(const FreeGroupAutomorphism& a);

// Substitutes a.images into w (a word over FreeX).
Word apply_aut(const FreeGroupAutomorphism& a, const Word& w);

// Left-to-right composition: (a then b)(x) = b(a(x)).
FreeGroupAutomorphism compose(const FreeGroupAutomorphism& a, const FreeGroupAutomorphism& b);

struct RepOverflow : std::runtime_error {
  explicit RepOverflow(const std::string& m) : std::runtime_error(m) {}
};

inline constexpr long kDefaultImageCap = 10'000;

// Automorphism of a single signed letter. Image words are capped at
// max_image_len letters; RepOverflow is thrown beyond that.
FreeGroupAutomorphism rep_of_letter(const Letter& l, int n, long max_image_len = kDefaultImageCap);
FreeGroupAutomorphism rep_of_word(const Word& w, int n, long max_image_len = kDefaultImageCap);

enum class OracleVerdict : int8_t { Equal, Distinct, Overflow };
enum class Exactness : int8_t { Exact, InvariantOnly };

std::string to_text(OracleVerdict v);
std::string to_text(Exactness e);

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::Distinct;
  // Exact when both inputs lie in the classical braid image (sigma/A/c
  // alphabets): there Equal proves group equality. Otherwise Equal is only
  // a necessary condition, while Distinct is always a true inequality.
  Exactness exactness = Exactness::InvariantOnly;
  long max_image_length = 0;
  std::vector<int> image_lengths_w1, image_lengths_w2;
};

OracleResult oracle_equal(const Word& w1, const Word& w2, int n,
                          long max_image_len = kDefaultImageCap);

// The permutation induced on the abelianization basis, if every image has
// a single-basis-vector exponent sum; identity permutation characterizes
// pure-braid-like automorphisms.
std::optional<std::vector<int>> permutation_part(const FreeGroupAutomorphism& a);

struct OracleRelatorViolation {
  std::string presentation;
  int n = 0;
  int relator_id = 0;
  Word word;
};

struct OracleRelatorReport {
  int n_max = 0;
  long checked = 0;
  std::vector<OracleRelatorViolation> violations;
  bool all_identity() const { return violations.empty(); }
};

// Every relator of the vp/vb/braid/sym presentations for 2 <= n <= n_max
// must map to the identity automorphism of F_n.
OracleRelatorReport verify_oracle_relators(int n_max, int jobs = 1);

}  // namespace vpb
