#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vpb {

// Indexed generator alphabets. One enum covers every group that appears:
// lambda (virtual pure braid), rho/sigma (virtual braid), A (Artin pure
// braid), a/b/c (cabled) and x (free group basis, used by the oracle).
enum class Family : int8_t {
  Lambda = 0,
  Rho = 1,
  Sigma = 2,
  ArtinA = 3,
  CabA = 4,
  CabB = 5,
  CabC = 6,
  FreeX = 7,
};

struct GeneratorSymbol {
  Family family = Family::Lambda;
  int i = 0;
  int j = 0;  // zero for the arity-1 families rho/sigma/x

  auto operator<=>(const GeneratorSymbol&) const = default;
};

// Checked constructors. Index rules: Lambda needs i != j, ArtinA needs
// i < j, everything is 1-based.
GeneratorSymbol lam(int i, int j);
GeneratorSymbol rho(int i);
GeneratorSymbol sig(int i);
GeneratorSymbol artin(int i, int j);
GeneratorSymbol cab_a(int i, int j);
GeneratorSymbol cab_b(int i, int j);
GeneratorSymbol cab_c(int i, int j);
GeneratorSymbol free_x(int i);

bool symbol_arity_two(Family f);
void validate_symbol(const GeneratorSymbol& s);

struct Letter {
  GeneratorSymbol sym;
  int exp = 1;  // +1 or -1; powers are stored as repeated letters

  auto operator<=>(const Letter&) const = default;
  Letter inverse() const { return {sym, -exp}; }
};

namespace detail {
// Packed letter: sign * (1 + family<<24 | i<<12 | j). Negation is
// inversion and the numeric order on positive codes is the symbol order
// (family, then indices lexicographically).
using Code = int32_t;
Code pack(const Letter& l);
Letter unpack(Code c);
}  // namespace detail

// A freely reduced word. The empty word is the identity. All mutating
// paths go through free reduction, so two Words are equal in the free
// group iff they are structurally equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<detail::Code> raw);  // reduces
  Word(std::initializer_list<Letter> ls);

  static Word reduce(std::span<const Letter> raw);
  static Word from_letter(const Letter& l) { return Word({l}); }
  static Word from_symbol(const GeneratorSymbol& s, int exp = 1);

  bool empty() const { return code_.empty(); }
  int size() const { return static_cast<int>(code_.size()); }
  Letter letter(int k) const { return detail::unpack(code_[k]); }
  std::vector<Letter> letters() const;

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word subword(int begin, int end) const;  // [begin, end), stays reduced

  const std::vector<detail::Code>& code() const { return code_; }

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<detail::Code> code_;
};

Word conjugate(const Word& w, const Word& g);     // g^-1 w g
Word commutator(const Word& a, const Word& b);    // a^-1 b^-1 a b
Word power(const Word& w, int k);

struct WordHash {
  size_t operator()(const Word& w) const;
};

// Text syntax, bit-exact round trip: l[1,2]*l[1,3]^-1, e for the empty
// word. Parsing additionally accepts arbitrary integer exponents, which
// expand into repeated letters.
std::string to_text(const GeneratorSymbol& s);
std::string to_text(const Word& w);
GeneratorSymbol parse_symbol(std::string_view text);
Word parse_word(std::string_view text);

}  // namespace vpb
