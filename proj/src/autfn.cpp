#include "vpb/autfn.h"

#include <algorithm>
#include <unordered_map>

#include "vpb/cabling.h"
#include "vpb/parallel.h"
#include "vpb/presentation.h"

namespace vpb {

std::string to_text(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Equal: return "equal";
    case OracleVerdict::Distinct: return "distinct";
    case OracleVerdict::Overflow: return "overflow";
  }
  return "?";
}

std::string to_text(Exactness e) {
  return e == Exactness::Exact ? "exact" : "invariant-only";
}

FreeGroupAutomorphism identity_aut(int n) {
  if (n < 1) throw std::invalid_argument("identity_aut: degree must be >= 1");
  FreeGroupAutomorphism a;
  a.degree = n;
  for (int i = 1; i <= n; ++i) a.images.push_back(Word::from_symbol(free_x(i)));
  return a;
}

bool is_identity(const FreeGroupAutomorphism& a) { return a == identity_aut(a.degree); }

Word apply_aut(const FreeGroupAutomorphism& a, const Word& w) {
  std::vector<detail::Code> out;
  for (int k = 0; k < w.size(); ++k) {
    Letter l = w.letter(k);
    if (l.sym.family != Family::FreeX || l.sym.i < 1 || l.sym.i > a.degree)
      throw std::invalid_argument("apply_aut: word must be over x_1..x_degree");
    const Word& img = a.images[l.sym.i - 1];
    if (l.exp > 0) {
      for (detail::Code c : img.code()) {
        if (!out.empty() && out.back() == -c)
          out.pop_back();
        else
          out.push_back(c);
      }
    } else {
      const auto& code = img.code();
      for (auto it = code.rbegin(); it != code.rend(); ++it) {
        detail::Code c = -*it;
        if (!out.empty() && out.back() == -c)
          out.pop_back();
        else
          out.push_back(c);
      }
    }
  }
  return Word(std::move(out));
}

FreeGroupAutomorphism compose(const FreeGroupAutomorphism& a, const FreeGroupAutomorphism& b) {
  if (a.degree != b.degree) throw std::invalid_argument("compose: degree mismatch");
  FreeGroupAutomorphism out;
  out.degree = a.degree;
  out.images.reserve(a.images.size());
  for (const Word& img : a.images) out.images.push_back(apply_aut(b, img));
  return out;
}

namespace {

FreeGroupAutomorphism sigma_aut(int i, int exp, int n) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("rep_of_letter: sigma index out of range");
  FreeGroupAutomorphism a = identity_aut(n);
  Word xi = Word::from_symbol(free_x(i));
  Word xi1 = Word::from_symbol(free_x(i + 1));
  if (exp > 0) {
    a.images[i - 1] = xi * xi1 * xi.inverse();
    a.images[i] = xi;
  } else {
    a.images[i - 1] = xi1;
    a.images[i] = xi1.inverse() * xi * xi1;
  }
  return a;
}

FreeGroupAutomorphism rho_aut(int i, int n) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("rep_of_letter: rho index out of range");
  FreeGroupAutomorphism a = identity_aut(n);
  std::swap(a.images[i - 1], a.images[i]);
  return a;
}

void check_cap(const FreeGroupAutomorphism& a, long cap) {
  for (const Word& img : a.images)
    if (img.size() > cap)
      throw RepOverflow("free group image exceeded " + std::to_string(cap) + " letters");
}

}  // namespace

FreeGroupAutomorphism rep_of_letter(const Letter& l, int n, long max_image_len) {
  switch (l.sym.family) {
    case Family::Sigma:
      return sigma_aut(l.sym.i, l.exp, n);
    case Family::Rho:
      return rho_aut(l.sym.i, n);  // involution: rho^-1 = rho
    case Family::Lambda: {
      Word w = lambda_in_vb(l.sym.i, l.sym.j);
      return rep_of_word(l.exp > 0 ? w : w.inverse(), n, max_image_len);
    }
    case Family::ArtinA: {
      Word w = artin_in_braid(l.sym.i, l.sym.j);
      return rep_of_word(l.exp > 0 ? w : w.inverse(), n, max_image_len);
    }
    case Family::CabA:
    case Family::CabB:
    case Family::CabC: {
      Word w = expand_cabled(CabledGenerator{l.sym.family, l.sym.i, l.sym.j}, n);
      return rep_of_word(l.exp > 0 ? w : w.inverse(), n, max_image_len);
    }
    case Family::FreeX:
      throw std::invalid_argument("rep_of_letter: x letters have no automorphism");
  }
  throw std::logic_error("bad family");
}

FreeGroupAutomorphism rep_of_word(const Word& w, int n, long max_image_len) {
  FreeGroupAutomorphism acc = identity_aut(n);
  std::unordered_map<detail::Code, FreeGroupAutomorphism> cache;
  for (int k = 0; k < w.size(); ++k) {
    detail::Code c = w.code()[k];
    auto it = cache.find(c);
    if (it == cache.end())
      it = cache.emplace(c, rep_of_letter(w.letter(k), n, max_image_len)).first;
    acc = compose(acc, it->second);
    check_cap(acc, max_image_len);
  }
  return acc;
}

namespace {

bool classical_alphabet(const Word& w) {
  for (int k = 0; k < w.size(); ++k) {
    Family f = w.letter(k).sym.family;
    if (f != Family::Sigma && f != Family::ArtinA && f != Family::CabC) return false;
  }
  return true;
}

}  // namespace

OracleResult oracle_equal(const Word& w1, const Word& w2, int n, long max_image_len) {
  if (n < 1) throw std::invalid_argument("oracle_equal: degree must be >= 1");
  OracleResult res;
  res.exactness = classical_alphabet(w1) && classical_alphabet(w2) ? Exactness::Exact
                                                                   : Exactness::InvariantOnly;
  try {
    FreeGroupAutomorphism a1 = rep_of_word(w1, n, max_image_len);
    FreeGroupAutomorphism a2 = rep_of_word(w2, n, max_image_len);
    for (const Word& img : a1.images) {
      res.image_lengths_w1.push_back(img.size());
      res.max_image_length = std::max(res.max_image_length, static_cast<long>(img.size()));
    }
    for (const Word& img : a2.images) {
      res.image_lengths_w2.push_back(img.size());
      res.max_image_length = std::max(res.max_image_length, static_cast<long>(img.size()));
    }
    res.verdict = a1 == a2 ? OracleVerdict::Equal : OracleVerdict::Distinct;
  } catch (const RepOverflow&) {
    res.verdict = OracleVerdict::Overflow;
  }
  return res;
}

OracleRelatorReport verify_oracle_relators(int n_max, int jobs) {
  if (n_max < 2) throw std::invalid_argument("verify_oracle_relators: need n_max >= 2");
  struct Task {
    const char* kind;
    int n;
    Relator relator;
  };
  std::vector<Task> tasks;
  for (int n = 2; n <= n_max; ++n) {
    auto collect = [&](const char* kind, const Presentation& p) {
      for (const Relator& r : p.relators) tasks.push_back({kind, n, r});
    };
    collect("vp", vp_presentation(n));
    collect("vb", vb_presentation(n));
    collect("braid", braid_presentation(n));
    collect("sym", sym_presentation(n));
  }
  std::vector<char> bad(tasks.size(), 0);
  parallel_for(tasks.size(), jobs, [&](size_t k) {
    bad[k] = is_identity(rep_of_word(tasks[k].relator.word, tasks[k].n)) ? 0 : 1;
  });
  OracleRelatorReport report;
  report.n_max = n_max;
  report.checked = static_cast<long>(tasks.size());
  for (size_t k = 0; k < tasks.size(); ++k)
    if (bad[k])
      report.violations.push_back(
          {tasks[k].kind, tasks[k].n, tasks[k].relator.id, tasks[k].relator.word});
  return report;
}

std::optional<std::vector<int>> permutation_part(const FreeGroupAutomorphism& a) {
  std::vector<int> perm(a.degree, 0);
  std::vector<bool> hit(a.degree, false);
  for (int k = 0; k < a.degree; ++k) {
    std::vector<int> expsum(a.degree, 0);
    for (int t = 0; t < a.images[k].size(); ++t) {
      Letter l = a.images[k].letter(t);
      expsum[l.sym.i - 1] += l.exp;
    }
    int target = -1;
    for (int m = 0; m < a.degree; ++m) {
      if (expsum[m] == 0) continue;
      if (expsum[m] != 1 || target != -1) return std::nullopt;
      target = m;
    }
    if (target == -1 || hit[target]) return std::nullopt;
    hit[target] = true;
    perm[k] = target + 1;
  }
  return perm;
}

}  // namespace vpb
