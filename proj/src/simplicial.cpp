#include "vpb/simplicial.h"

#include <algorithm>
#include <map>
#include <mutex>

#include "vpb/parallel.h"

namespace vpb {

namespace {

void check_lambda_word(const Word& w, int n, const char* where) {
  for (int k = 0; k < w.size(); ++k) {
    Letter l = w.letter(k);
    if (l.sym.family != Family::Lambda)
      throw std::invalid_argument(std::string(where) + ": word must be over the lambda alphabet");
    if (l.sym.i > n || l.sym.j > n)
      throw std::invalid_argument(std::string(where) + ": lambda index exceeds strand count");
  }
}

}  // namespace

Word apply_face(int t, int n, const Word& w) {
  if (n < 2) throw std::invalid_argument("apply_face: need n >= 2");
  if (t < 0 || t > n - 1) throw std::invalid_argument("apply_face: face index out of range");
  check_lambda_word(w, n, "apply_face");
  const int dead = t + 1;
  std::vector<Letter> out;
  for (int k = 0; k < w.size(); ++k) {
    Letter l = w.letter(k);
    if (l.sym.i == dead || l.sym.j == dead) continue;  // strand deleted
    int i = l.sym.i > dead ? l.sym.i - 1 : l.sym.i;
    int j = l.sym.j > dead ? l.sym.j - 1 : l.sym.j;
    out.push_back({lam(i, j), l.exp});
  }
  return Word::reduce(out);
}

Word apply_degeneracy(int t, int n, const Word& w) {
  if (t < 0 || t > n) throw std::invalid_argument("apply_degeneracy: index out of range");
  check_lambda_word(w, n, "apply_degeneracy");
  if (t == n) return w;  // extra degeneracy: a trivial strand is appended

  // Doubling strand i = t+1. The five cases below are the action on
  // lambda_{k,l} (k < l) and lambda_{l,k}; indices at or above i+1 shift up.
  const int i = t + 1;
  auto image = [&](const GeneratorSymbol& s) -> std::vector<GeneratorSymbol> {
    int k = std::min(s.i, s.j), l = std::max(s.i, s.j);
    bool ascending = s.i < s.j;
    if (i > l) return {s};
    if (i < k) return {ascending ? lam(k + 1, l + 1) : lam(l + 1, k + 1)};
    if (i == k)
      return ascending ? std::vector<GeneratorSymbol>{lam(k, l + 1), lam(k + 1, l + 1)}
                       : std::vector<GeneratorSymbol>{lam(l + 1, k + 1), lam(l + 1, k)};
    if (i < l) return {ascending ? lam(k, l + 1) : lam(l + 1, k)};
    // i == l
    return ascending ? std::vector<GeneratorSymbol>{lam(k, l + 1), lam(k, l)}
                     : std::vector<GeneratorSymbol>{lam(l, k), lam(l + 1, k)};
  };

  std::vector<Letter> out;
  for (int k = 0; k < w.size(); ++k) {
    Letter l = w.letter(k);
    std::vector<GeneratorSymbol> img = image(l.sym);
    if (l.exp > 0)
      for (const GeneratorSymbol& s : img) out.push_back({s, 1});
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back({*it, -1});
  }
  return Word::reduce(out);
}

Word apply_map(const SimplicialMap& m, const Word& w) {
  switch (m.kind) {
    case SimplicialMap::Kind::Face:
      return apply_face(m.t, m.source_strands, w);
    case SimplicialMap::Kind::Degeneracy:
    case SimplicialMap::Kind::ExtraDegeneracy:
      return apply_degeneracy(m.t, m.source_strands, w);
  }
  throw std::logic_error("bad simplicial map kind");
}

namespace {

struct PendingInstance {
  std::string identity;
  int n, i, j;
  GeneratorSymbol gen;
  Word lhs, rhs;
  int ambient;  // strand count of the common target group
};

// Fallback rule sets, one per ambient level. Scheme (2) instances with two
// interacting doublings differ by commutativity swaps, so fallbacks do
// occur and the compilation is worth sharing.
class RuleCache {
 public:
  std::span<const RewriteRule> at(int ambient) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(ambient);
    if (it == cache_.end())
      it = cache_.emplace(ambient, compile_rules(vp_presentation(ambient))).first;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<int, std::vector<RewriteRule>> cache_;
};

IdentityInstance settle(const PendingInstance& inst, const SearchBudget& budget,
                        RuleCache& cache) {
  IdentityInstance out{inst.identity, inst.n, inst.i, inst.j, inst.gen,
                       CheckStatus::Pass, false};
  if (inst.lhs == inst.rhs) return out;
  out.used_fallback = true;
  EqualModResult r = equal_mod(inst.lhs, inst.rhs, cache.at(inst.ambient), budget);
  out.status = r.equal ? CheckStatus::Pass
                       : (r.budget_exhausted ? CheckStatus::Indeterminate : CheckStatus::Fail);
  return out;
}

}  // namespace

SimplicialIdentityReport check_simplicial_identities(int n_max, const SearchBudget& budget,
                                                     int jobs) {
  if (n_max < 2) throw std::invalid_argument("check_simplicial_identities: need n_max >= 2");
  std::vector<PendingInstance> grid;
  for (int n = 2; n <= n_max; ++n) {
    Presentation p = vp_presentation(n);
    for (const GeneratorSymbol& gsym : p.generators) {
      Word g = Word::from_symbol(gsym);
      // (1) d_i d_j = d_{j-1} d_i, i < j; the composite lands in VP_{n-2},
      // so there are no instances on VP_2
      if (n >= 3)
        for (int j = 1; j <= n - 1; ++j)
          for (int i = 0; i < j; ++i)
            grid.push_back({"d_i d_j = d_{j-1} d_i", n, i, j, gsym,
                            apply_face(i, n - 1, apply_face(j, n, g)),
                            apply_face(j - 1, n - 1, apply_face(i, n, g)), n - 2});
      // (2) s_i s_j = s_{j+1} s_i, i <= j; j = n is the extra degeneracy and
      // gives formula s_j iota_n = iota_{n+1} s_j
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          grid.push_back({"s_i s_j = s_{j+1} s_i", n, i, j, gsym,
                          apply_degeneracy(i, n + 1, apply_degeneracy(j, n, g)),
                          apply_degeneracy(j + 1, n + 1, apply_degeneracy(i, n, g)), n + 2});
      // (3) d_i s_j = s_{j-1} d_i, i < j; j = n covers d_j iota_n = iota_{n-1} d_j
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          grid.push_back({"d_i s_j = s_{j-1} d_i", n, i, j, gsym,
                          apply_face(i, n + 1, apply_degeneracy(j, n, g)),
                          apply_degeneracy(j - 1, n - 1, apply_face(i, n, g)), n});
      // (4) d_j s_j = id = d_{j+1} s_j; the right half needs j+1 <= n
      for (int j = 0; j <= n; ++j) {
        grid.push_back({"d_j s_j = id", n, j, j, gsym,
                        apply_face(j, n + 1, apply_degeneracy(j, n, g)), g, n});
        if (j + 1 <= n)
          grid.push_back({"d_{j+1} s_j = id", n, j, j, gsym,
                          apply_face(j + 1, n + 1, apply_degeneracy(j, n, g)), g, n});
      }
      // (5) d_i s_j = s_j d_{i-1}, i > j+1
      for (int j = 0; j <= n - 1; ++j)
        for (int i = j + 2; i <= n; ++i)
          grid.push_back({"d_i s_j = s_j d_{i-1}", n, i, j, gsym,
                          apply_face(i, n + 1, apply_degeneracy(j, n, g)),
                          apply_degeneracy(j, n - 1, apply_face(i - 1, n, g)), n});
    }
  }

  SimplicialIdentityReport report;
  report.n_max = n_max;
  report.instances.resize(grid.size());
  RuleCache cache;
  parallel_for(grid.size(), jobs,
               [&](size_t k) { report.instances[k] = settle(grid[k], budget, cache); });
  for (const IdentityInstance& inst : report.instances) {
    if (inst.used_fallback) ++report.fallbacks;
    switch (inst.status) {
      case CheckStatus::Pass: ++report.passed; break;
      case CheckStatus::Fail: ++report.failed; break;
      case CheckStatus::Indeterminate: ++report.indeterminate; break;
    }
  }
  return report;
}

namespace {

FaceCheck face_triviality(const Word& image, int j, std::span<const RewriteRule> rules,
                          const SearchBudget& budget) {
  FaceCheck c{j, image.empty(), CheckStatus::Pass};
  if (c.free_level) return c;
  EqualModResult r = equal_mod(image, Word(), rules, budget);
  c.status = r.equal ? CheckStatus::Pass
                     : (r.budget_exhausted ? CheckStatus::Indeterminate : CheckStatus::Fail);
  return c;
}

}  // namespace

BoundaryWitnessReport boundary_witness(const Word& x, int level, const SearchBudget& budget) {
  if (level < 1) throw std::invalid_argument("boundary_witness: need level >= 1");
  const int strands = level + 1;  // x lives in VAP_level = VP_{level+1}
  check_lambda_word(x, strands, "boundary_witness");

  BoundaryWitnessReport rep;
  rep.x = x;
  rep.level = level;

  Presentation p = vp_presentation(strands > 2 ? strands - 1 : 2);
  auto rules = compile_rules(p);
  for (int j = 0; j <= level; ++j) {
    FaceCheck c = face_triviality(apply_face(j, strands, x), j, rules, budget);
    rep.cycle_checks.push_back(c);
    if (c.status != CheckStatus::Pass)
      throw MooreCycleError(j, "boundary_witness: face " + std::to_string(j) +
                                   " of x not certified trivial");
  }

  rep.y = apply_degeneracy(strands, strands, x);  // iota_{level+1}
  Presentation q = vp_presentation(strands);
  auto qrules = compile_rules(q);
  bool ok = true;
  for (int j = 0; j <= level; ++j) {
    FaceCheck c = face_triviality(apply_face(j, strands + 1, rep.y), j, qrules, budget);
    rep.witness_checks.push_back(c);
    ok = ok && c.status == CheckStatus::Pass;
  }
  rep.top_face_exact = apply_face(level + 1, strands + 1, rep.y) == x;
  rep.ok = ok && rep.top_face_exact;
  return rep;
}

}  // namespace vpb
