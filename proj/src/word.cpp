#include "vpb/word.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vpb {

bool symbol_arity_two(Family f) {
  switch (f) {
    case Family::Rho:
    case Family::Sigma:
    case Family::FreeX:
      return false;
    default:
      return true;
  }
}

void validate_symbol(const GeneratorSymbol& s) {
  if (s.i < 1) throw std::invalid_argument("generator index must be >= 1");
  if (!symbol_arity_two(s.family)) {
    if (s.j != 0) throw std::invalid_argument("arity-1 generator carries a second index");
    return;
  }
  if (s.j < 1) throw std::invalid_argument("generator index must be >= 1");
  if (s.family == Family::Lambda && s.i == s.j)
    throw std::invalid_argument("lambda indices must be distinct");
  if (s.family == Family::ArtinA && s.i >= s.j)
    throw std::invalid_argument("A indices must be strictly increasing");
}

static GeneratorSymbol make(Family f, int i, int j) {
  GeneratorSymbol s{f, i, j};
  validate_symbol(s);
  return s;
}

GeneratorSymbol lam(int i, int j) { return make(Family::Lambda, i, j); }
GeneratorSymbol rho(int i) { return make(Family::Rho, i, 0); }
GeneratorSymbol sig(int i) { return make(Family::Sigma, i, 0); }
GeneratorSymbol artin(int i, int j) { return make(Family::ArtinA, i, j); }
GeneratorSymbol cab_a(int i, int j) { return make(Family::CabA, i, j); }
GeneratorSymbol cab_b(int i, int j) { return make(Family::CabB, i, j); }
GeneratorSymbol cab_c(int i, int j) { return make(Family::CabC, i, j); }
GeneratorSymbol free_x(int i) { return make(Family::FreeX, i, 0); }

namespace detail {

Code pack(const Letter& l) {
  Code base = (static_cast<Code>(l.sym.family) << 24) |
              (static_cast<Code>(l.sym.i) << 12) | static_cast<Code>(l.sym.j);
  return l.exp > 0 ? base + 1 : -(base + 1);
}

Letter unpack(Code c) {
  int exp = c > 0 ? 1 : -1;
  Code base = (c > 0 ? c : -c) - 1;
  GeneratorSymbol s;
  s.family = static_cast<Family>((base >> 24) & 0xff);
  s.i = (base >> 12) & 0xfff;
  s.j = base & 0xfff;
  return {s, exp};
}

}  // namespace detail

Word::Word(std::vector<detail::Code> raw) {
  code_.reserve(raw.size());
  for (detail::Code c : raw) {
    if (!code_.empty() && code_.back() == -c)
      code_.pop_back();
    else
      code_.push_back(c);
  }
}

Word::Word(std::initializer_list<Letter> ls) {
  for (const Letter& l : ls) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +-1");
    validate_symbol(l.sym);
    detail::Code c = detail::pack(l);
    if (!code_.empty() && code_.back() == -c)
      code_.pop_back();
    else
      code_.push_back(c);
  }
}

Word Word::reduce(std::span<const Letter> raw) {
  std::vector<detail::Code> cs;
  cs.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +-1");
    cs.push_back(detail::pack(l));
  }
  return Word(std::move(cs));
}

Word Word::from_symbol(const GeneratorSymbol& s, int exp) {
  validate_symbol(s);
  if (exp != 1 && exp != -1) throw std::invalid_argument("letter exponent must be +-1");
  return Word({Letter{s, exp}});
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> ls;
  ls.reserve(code_.size());
  for (detail::Code c : code_) ls.push_back(detail::unpack(c));
  return ls;
}

Word Word::operator*(const Word& o) const {
  std::vector<detail::Code> cs = code_;
  cs.reserve(cs.size() + o.code_.size());
  for (detail::Code c : o.code_) {
    if (!cs.empty() && cs.back() == -c)
      cs.pop_back();
    else
      cs.push_back(c);
  }
  Word w;
  w.code_ = std::move(cs);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.code_.reserve(code_.size());
  for (auto it = code_.rbegin(); it != code_.rend(); ++it) w.code_.push_back(-*it);
  return w;
}

Word Word::subword(int begin, int end) const {
  if (begin < 0 || end > size() || begin > end) throw std::invalid_argument("bad subword range");
  Word w;
  w.code_.assign(code_.begin() + begin, code_.begin() + end);
  return w;
}

Word conjugate(const Word& w, const Word& g) { return g.inverse() * w * g; }

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : w.inverse();
  Word out;
  for (int m = std::abs(k); m > 0; --m) out = out * base;
  return out;
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (detail::Code c : w.code()) {
    h ^= static_cast<uint32_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

static char family_char(Family f) {
  switch (f) {
    case Family::Lambda: return 'l';
    case Family::Rho: return 'r';
    case Family::Sigma: return 's';
    case Family::ArtinA: return 'A';
    case Family::CabA: return 'a';
    case Family::CabB: return 'b';
    case Family::CabC: return 'c';
    case Family::FreeX: return 'x';
  }
  throw std::logic_error("bad family");
}

std::string to_text(const GeneratorSymbol& s) {
  std::string out(1, family_char(s.family));
  out += '[';
  out += std::to_string(s.i);
  if (symbol_arity_two(s.family)) {
    out += ',';
    out += std::to_string(s.j);
  }
  out += ']';
  return out;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int k = 0; k < w.size(); ++k) {
    if (k) out += '*';
    Letter l = w.letter(k);
    out += to_text(l.sym);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of word text");
    return s[pos];
  }
  char take() {
    char c = peek();
    ++pos;
    return c;
  }
  void expect(char c) {
    if (take() != c) throw std::invalid_argument(std::string("expected '") + c + "' in word text");
  }
  int integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("expected integer in word text");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1'000'000) throw std::invalid_argument("index out of range");
    }
    return neg ? -static_cast<int>(v) : static_cast<int>(v);
  }

  GeneratorSymbol symbol() {
    char f = take();
    Family fam;
    switch (f) {
      case 'l': fam = Family::Lambda; break;
      case 'r': fam = Family::Rho; break;
      case 's': fam = Family::Sigma; break;
      case 'A': fam = Family::ArtinA; break;
      case 'a': fam = Family::CabA; break;
      case 'b': fam = Family::CabB; break;
      case 'c': fam = Family::CabC; break;
      case 'x': fam = Family::FreeX; break;
      default: throw std::invalid_argument("unknown generator family letter");
    }
    expect('[');
    int i = integer();
    int j = 0;
    if (symbol_arity_two(fam)) {
      expect(',');
      j = integer();
    }
    expect(']');
    GeneratorSymbol sym{fam, i, j};
    validate_symbol(sym);
    return sym;
  }
};

}  // namespace

GeneratorSymbol parse_symbol(std::string_view text) {
  Parser p{text};
  GeneratorSymbol s = p.symbol();
  if (!p.done()) throw std::invalid_argument("trailing characters after generator");
  return s;
}

Word parse_word(std::string_view text) {
  Parser p{text};
  if (p.done()) throw std::invalid_argument("empty word text");
  if (p.peek() == 'e') {
    p.take();
    if (!p.done()) throw std::invalid_argument("trailing characters after e");
    return Word();
  }
  std::vector<Letter> ls;
  while (true) {
    GeneratorSymbol sym = p.symbol();
    int exp = 1;
    if (!p.done() && p.peek() == '^') {
      p.take();
      exp = p.integer();
    }
    int sign = exp >= 0 ? 1 : -1;
    for (int m = std::abs(exp); m > 0; --m) ls.push_back({sym, sign});
    if (p.done()) break;
    p.expect('*');
  }
  return Word::reduce(ls);
}

}  // namespace vpb
