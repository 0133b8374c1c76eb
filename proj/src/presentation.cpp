#include "vpb/presentation.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace vpb {

std::string to_text(const RelationFamily& f) {
  const char* name = nullptr;
  switch (f.kind) {
    case FamilyKind::LongR: name = "long"; break;
    case FamilyKind::Comm: name = "comm"; break;
    case FamilyKind::BraidRel: name = "braid"; break;
    case FamilyKind::SymRel: name = "sym"; break;
    case FamilyKind::MixedRel: name = "mixed"; break;
    case FamilyKind::PureBraidRel: name = "pure"; break;
    case FamilyKind::CabledP4Rel: name = "p4c"; break;
    case FamilyKind::TnRel: name = "tn"; break;
  }
  std::string out = name;
  if (!f.params.empty()) {
    out += '(';
    for (size_t k = 0; k < f.params.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(f.params[k]);
    }
    out += ')';
  }
  return out;
}

std::pair<Word, Word> Relator::equation() const {
  Word lhs = word.subword(0, lhs_len);
  Word rhs = word.subword(lhs_len, word.size()).inverse();
  return {lhs, rhs};
}

bool Presentation::has_generator(const GeneratorSymbol& s) const {
  return std::find(generators.begin(), generators.end(), s) != generators.end();
}

namespace {

Word one(const GeneratorSymbol& s, int exp = 1) { return Word::from_symbol(s, exp); }

// lambda_{ka} lambda_{kb} lambda_{ab} = lambda_{ab} lambda_{kb} lambda_{ka}
Relator long_relator(int k, int a, int b) {
  Word lhs = one(lam(k, a)) * one(lam(k, b)) * one(lam(a, b));
  Word rhs = one(lam(a, b)) * one(lam(k, b)) * one(lam(k, a));
  std::vector<int> supp{k, a, b};
  std::sort(supp.begin(), supp.end());
  return Relator{lhs * rhs.inverse(), {FamilyKind::LongR, supp}, 0, 3};
}

Relator comm_relator(const GeneratorSymbol& x, const GeneratorSymbol& y,
                     const RelationFamily& fam) {
  return Relator{commutator(one(x), one(y)), fam, 0, 2};
}

void renumber(Presentation& p) {
  for (size_t k = 0; k < p.relators.size(); ++k) p.relators[k].id = static_cast<int>(k);
}

}  // namespace

Presentation vp_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("vp_presentation: n must be >= 1");
  Presentation p;
  p.strands = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) p.generators.push_back(lam(i, j));
  std::sort(p.generators.begin(), p.generators.end());

  // Long families, six relations per triple i < j < l, in the standard
  // display order.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) {
        p.relators.push_back(long_relator(i, j, l));
        p.relators.push_back(long_relator(j, i, l));
        p.relators.push_back(long_relator(i, l, j));
        p.relators.push_back(long_relator(l, i, j));
        p.relators.push_back(long_relator(j, l, i));
        p.relators.push_back(long_relator(l, j, i));
      }

  // Commutativity families, normalized so i < j, l < m, j > m.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        for (int m = l + 1; m < j; ++m) {
          if (l == i || l == j || m == i) continue;
          RelationFamily fam{FamilyKind::Comm, {i, j, l, m}};
          p.relators.push_back(comm_relator(lam(i, j), lam(l, m), fam));
          p.relators.push_back(comm_relator(lam(i, j), lam(m, l), fam));
          p.relators.push_back(comm_relator(lam(j, i), lam(l, m), fam));
          p.relators.push_back(comm_relator(lam(j, i), lam(m, l), fam));
        }
  renumber(p);
  return p;
}

namespace {

Word word_pow(const Word& w, int eps) { return eps >= 0 ? w : w.inverse(); }

}  // namespace

Presentation pure_braid_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("pure_braid_presentation: n must be >= 1");
  Presentation p;
  p.strands = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.generators.push_back(artin(i, j));
  std::sort(p.generators.begin(), p.generators.end());

  std::set<Word> seen;
  auto push = [&](const Word& lhs, const Word& rhs, std::vector<int> params) {
    Word w = lhs * rhs.inverse();
    if (w.empty() || !seen.insert(w).second) return;
    p.relators.push_back(Relator{w, {FamilyKind::PureBraidRel, std::move(params)}, 0, lhs.size()});
  };

  for (int eps : {1, -1}) {
    // A_{ik}^{-e} A_{kj} A_{ik}^{e} = (A_{ij} A_{kj})^{e} A_{kj} (A_{ij} A_{kj})^{-e}
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        for (int j = k + 1; j <= n; ++j) {
          Word conj = one(artin(i, j)) * one(artin(k, j));
          push(one(artin(i, k), -eps) * one(artin(k, j)) * one(artin(i, k), eps),
               word_pow(conj, eps) * one(artin(k, j)) * word_pow(conj, -eps), {1, i, k, j, eps});
        }
    // A_{km}^{-e} A_{kj} A_{km}^{e} = (A_{kj} A_{mj})^{e} A_{kj} (A_{kj} A_{mj})^{-e}, m < j
    for (int k = 1; k <= n; ++k)
      for (int m = k + 1; m <= n; ++m)
        for (int j = m + 1; j <= n; ++j) {
          Word conj = one(artin(k, j)) * one(artin(m, j));
          push(one(artin(k, m), -eps) * one(artin(k, j)) * one(artin(k, m), eps),
               word_pow(conj, eps) * one(artin(k, j)) * word_pow(conj, -eps), {2, k, m, j, eps});
        }
    // A_{im}^{-e} A_{kj} A_{im}^{e} = [A_{ij}^{-e}, A_{mj}^{-e}]^{e} A_{kj} [...]^{-e}, i < k < m
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k)
        for (int m = k + 1; m <= n; ++m)
          for (int j = m + 1; j <= n; ++j) {
            Word comm = commutator(one(artin(i, j), -eps), one(artin(m, j), -eps));
            push(one(artin(i, m), -eps) * one(artin(k, j)) * one(artin(i, m), eps),
                 word_pow(comm, eps) * one(artin(k, j)) * word_pow(comm, -eps),
                 {3, i, k, m, j, eps});
          }
    // A_{im}^{-e} A_{kj} A_{im}^{e} = A_{kj} when the pairs are fully separated
    // (i < m < k < j) or nested (k < i < m < j); this is the reading of the
    // compressed side condition "k < i, m < j or m < k" that makes every
    // instance hold in P_n.
    for (int i = 1; i <= n; ++i)
      for (int m = i + 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
          for (int j = k + 1; j <= n; ++j) {
            bool separated = m < k;
            bool nested = k < i && m < j;
            if (!separated && !nested) continue;
            push(one(artin(i, m), -eps) * one(artin(k, j)) * one(artin(i, m), eps),
                 one(artin(k, j)), {4, i, m, k, j, eps});
          }
  }
  renumber(p);
  return p;
}

namespace {

void braid_like_relators(Presentation& p, Family gen, FamilyKind kind, int n) {
  auto g = [&](int i) { return one(GeneratorSymbol{gen, i, 0}); };
  for (int i = 1; i + 1 <= n - 1; ++i) {
    Word lhs = g(i) * g(i + 1) * g(i);
    Word rhs = g(i + 1) * g(i) * g(i + 1);
    p.relators.push_back(Relator{lhs * rhs.inverse(), {kind, {1, i}}, 0, 3});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.relators.push_back(Relator{commutator(g(i), g(j)), {kind, {2, i, j}}, 0, 2});
}

}  // namespace

Presentation braid_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("braid_presentation: n must be >= 1");
  Presentation p;
  p.strands = n;
  for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sig(i));
  braid_like_relators(p, Family::Sigma, FamilyKind::BraidRel, n);
  renumber(p);
  return p;
}

Presentation sym_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("sym_presentation: n must be >= 1");
  Presentation p;
  p.strands = n;
  for (int i = 1; i <= n - 1; ++i) p.generators.push_back(rho(i));
  for (int i = 1; i <= n - 1; ++i) {
    Word r = one(rho(i)) * one(rho(i));
    p.relators.push_back(Relator{r, {FamilyKind::SymRel, {0, i}}, 0, 1});
  }
  braid_like_relators(p, Family::Rho, FamilyKind::SymRel, n);
  renumber(p);
  return p;
}

Presentation vb_presentation(int n) {
  if (n <= 0) throw std::invalid_argument("vb_presentation: n must be >= 1");
  Presentation p;
  p.strands = n;
  for (int i = 1; i <= n - 1; ++i) p.generators.push_back(rho(i));
  for (int i = 1; i <= n - 1; ++i) p.generators.push_back(sig(i));
  braid_like_relators(p, Family::Sigma, FamilyKind::BraidRel, n);
  {
    Presentation s = sym_presentation(n);
    for (Relator& r : s.relators) p.relators.push_back(r);
  }
  // mixed far commutation
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) > 1)
        p.relators.push_back(
            Relator{commutator(one(sig(i)), one(rho(j))), {FamilyKind::MixedRel, {2, i, j}}, 0, 2});
  // rho_i rho_{i+1} sigma_i = sigma_{i+1} rho_i rho_{i+1}, both orientations
  for (int i = 1; i + 1 <= n - 1; ++i) {
    Word lhs = one(rho(i)) * one(rho(i + 1)) * one(sig(i));
    Word rhs = one(sig(i + 1)) * one(rho(i)) * one(rho(i + 1));
    p.relators.push_back(Relator{lhs * rhs.inverse(), {FamilyKind::MixedRel, {1, i}}, 0, 3});
    Word lhs2 = one(rho(i + 1)) * one(rho(i)) * one(sig(i + 1));
    Word rhs2 = one(sig(i)) * one(rho(i + 1)) * one(rho(i));
    p.relators.push_back(Relator{lhs2 * rhs2.inverse(), {FamilyKind::MixedRel, {-1, i}}, 0, 3});
  }
  renumber(p);
  return p;
}

namespace {

Word c_(int i, int j) { return Word::from_symbol(cab_c(i, j)); }

// x^{g}: g^-1 x g
Word cnj(const Word& x, const Word& g) { return conjugate(x, g); }

}  // namespace

Presentation p4_cabled_presentation() {
  Presentation p;
  p.strands = 4;
  p.generators = {cab_c(1, 1), cab_c(2, 1), cab_c(1, 2), cab_c(3, 1), cab_c(2, 2), cab_c(1, 3)};

  Word c11 = c_(1, 1), c21 = c_(2, 1), c12 = c_(1, 2), c31 = c_(3, 1), c22 = c_(2, 2),
       c13 = c_(1, 3);

  int idx = 0;
  auto push = [&](const Word& lhs, const Word& rhs) {
    p.relators.push_back(
        Relator{lhs * rhs.inverse(), {FamilyKind::CabledP4Rel, {idx++}}, 0, lhs.size()});
  };

  for (int eps : {1, -1}) {
    auto pw = [&](const Word& w) { return word_pow(w, eps); };
    auto npw = [&](const Word& w) { return word_pow(w, -eps); };
    push(cnj(c21, pw(c11)), c21);
    push(cnj(c12, pw(c11)), cnj(c12, npw(c21)));
    push(cnj(c31, pw(c11)), c31);
    push(cnj(c22, pw(c11)), c22);
    push(cnj(c13, pw(c11)), cnj(c13, npw(c22)));
    push(cnj(c31, pw(c21)), c31);
    push(cnj(c22, pw(c21)), cnj(c22, npw(c31)));
    push(cnj(c13, pw(c21)), cnj(c13, pw(c22) * npw(c31)));
    push(cnj(c31, pw(c12)), c31);
    push(cnj(c13, pw(c12)), cnj(c13, npw(c31)));
  }
  // c22^{c12^-1} = [c31, c13^-1] [c13^-1, c22] c22 [c21^2, c12^-1]
  push(cnj(c22, c12.inverse()),
       commutator(c31, c13.inverse()) * commutator(c13.inverse(), c22) * c22 *
           commutator(power(c21, 2), c12.inverse()));
  // c22^{c12} = [c12, c21^-2] c13^{-c22^{-2}} c22 c13^{c31^{-1}}, equivalently
  // [c12, c21^-2] c22 [c22^-1, c13] [c13, c31^-1]. (The [c22^-3, c13] variant
  // of this relation is false: the exact oracle separates it from c22^{c12}.)
  push(cnj(c22, c12), commutator(c12, power(c21, -2)) *
                          cnj(c13.inverse(), power(c22, -2)) * c22 *
                          cnj(c13, c31.inverse()));
  renumber(p);
  return p;
}

Relator tn_relator(int n, int i, int j, std::span<const int> exponents, Family which) {
  if (n < 2) throw std::invalid_argument("tn_relator: n must be >= 2");
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw std::invalid_argument("tn_relator: need 1 <= i != j <= n");
  if (static_cast<int>(exponents.size()) != n - 1)
    throw std::invalid_argument("tn_relator: need n-1 exponents");
  if (which != Family::CabA && which != Family::CabB)
    throw std::invalid_argument("tn_relator: family must be a or b");

  Word x = Word::from_symbol(GeneratorSymbol{which, i, n + 1 - i});
  Word y = Word::from_symbol(GeneratorSymbol{which, j, n + 1 - j});
  Word conj;
  for (int l = 1; l <= n - 1; ++l) conj = conj * power(c_(l, 1), exponents[l - 1]);
  Word w = conjugate(commutator(x, y), conj);
  RelationFamily fam{FamilyKind::TnRel, {n, i, j, which == Family::CabB ? 1 : 0}};
  for (int e : exponents) fam.params.push_back(e);
  return Relator{w, fam, 0, w.size()};
}

std::vector<Relator> relation_family_members(const Presentation& p, const RelationFamily& f) {
  bool kind_present = false;
  std::vector<Relator> out;
  for (const Relator& r : p.relators) {
    if (r.family.kind == f.kind) kind_present = true;
    if (r.family == f) out.push_back(r);
  }
  if (!kind_present)
    throw std::invalid_argument("relation_family_members: family kind not present in presentation");
  if (out.empty())
    throw std::invalid_argument("relation_family_members: no relators with these parameters");
  return out;
}

Word lambda_in_vb(int i, int j) {
  if (i == j || i < 1 || j < 1) throw std::invalid_argument("lambda_in_vb: need i != j, both >= 1");
  int a = std::min(i, j), b = std::max(i, j);
  Word core = i < j ? Word::from_symbol(rho(a)) * Word::from_symbol(sig(a), -1)
                    : Word::from_symbol(sig(a), -1) * Word::from_symbol(rho(a));
  // rho_{b-1} ... rho_{a+1} core rho_{a+1} ... rho_{b-1}, with positive rho
  // letters on both sides (they are involutions)
  Word left, right;
  for (int k = b - 1; k >= a + 1; --k) left = left * Word::from_symbol(rho(k));
  for (int k = a + 1; k <= b - 1; ++k) right = right * Word::from_symbol(rho(k));
  return left * core * right;
}

Word artin_in_braid(int i, int j) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("artin_in_braid: need 1 <= i < j");
  Word core = Word::from_symbol(sig(i)) * Word::from_symbol(sig(i));
  Word chain;
  for (int k = j - 1; k >= i + 1; --k) chain = chain * Word::from_symbol(sig(k));
  return chain * core * chain.inverse();
}

SubgroupSpec cabled_v_subgroup(int a, int n) {
  if (a < 1 || a > n - 1) throw std::invalid_argument("cabled_v_subgroup: need 1 <= a <= n-1");
  SubgroupSpec s;
  s.name = "V_" + std::to_string(a);
  for (int m = 1; m <= n - a; ++m) s.generators.push_back(c_(a, m));
  return s;
}

SubgroupSpec cabled_t_subgroup(int k) {
  if (k < 1) throw std::invalid_argument("cabled_t_subgroup: need k >= 1");
  SubgroupSpec s;
  s.name = "T_" + std::to_string(k) + "^c";
  for (int i = 1; i <= k; ++i) s.generators.push_back(c_(i, k + 1 - i));
  return s;
}

SubgroupSpec u_subgroup(int n) {
  if (n < 2) throw std::invalid_argument("u_subgroup: need n >= 2");
  SubgroupSpec s;
  s.name = "U_" + std::to_string(n);
  for (int i = 1; i <= n - 1; ++i) s.generators.push_back(Word::from_symbol(artin(i, n)));
  return s;
}

namespace {

std::string gap_name(const GeneratorSymbol& s) {
  std::string out = to_text(s).substr(0, 1) + std::to_string(s.i);
  if (symbol_arity_two(s.family)) out += "_" + std::to_string(s.j);
  return out;
}

}  // namespace

std::string presentation_to_gap(const Presentation& p) {
  std::map<GeneratorSymbol, int> index;
  for (size_t k = 0; k < p.generators.size(); ++k)
    index[p.generators[k]] = static_cast<int>(k) + 1;
  std::ostringstream os;
  os << "F := FreeGroup( ";
  for (size_t k = 0; k < p.generators.size(); ++k) {
    if (k) os << ", ";
    os << '"' << gap_name(p.generators[k]) << '"';
  }
  os << " );;\n";
  os << "rels := [";
  for (size_t k = 0; k < p.relators.size(); ++k) {
    os << (k ? ",\n  " : "\n  ");
    const Word& w = p.relators[k].word;
    for (int t = 0; t < w.size(); ++t) {
      if (t) os << '*';
      Letter l = w.letter(t);
      auto it = index.find(l.sym);
      if (it == index.end()) throw std::logic_error("relator letter outside generator set");
      os << "F." << it->second;
      if (l.exp < 0) os << "^-1";
    }
  }
  os << "\n];;\n";
  os << "G := F / rels;;\n";
  return os.str();
}

}  // namespace vpb
