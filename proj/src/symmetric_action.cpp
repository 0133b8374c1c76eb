#include "vpb/symmetric_action.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace vpb {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || hit[v - 1])
      throw std::invalid_argument("Permutation: images are not a bijection of 1..n");
    hit[v - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  std::vector<int> img(degree);
  for (int k = 1; k <= degree; ++k) img[k - 1] = k;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int k) {
  if (k < 1 || k + 1 > degree) throw std::invalid_argument("transposition out of range");
  Permutation p = identity(degree);
  std::swap(p.img_[k - 1], p.img_[k]);
  return p;
}

int Permutation::operator()(int k) const {
  if (k < 1 || k > degree()) throw std::invalid_argument("Permutation: point out of range");
  return img_[k - 1];
}

Permutation Permutation::then(const Permutation& q) const {
  if (degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> img(degree());
  for (int k = 1; k <= degree(); ++k) img[k - 1] = q(img_[k - 1]);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int k = 1; k <= degree(); ++k) img[img_[k - 1] - 1] = k;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if (img_[k - 1] != k) return false;
  return true;
}

Word act(const Permutation& p, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (int k = 0; k < w.size(); ++k) {
    Letter l = w.letter(k);
    if (l.sym.family != Family::Lambda)
      throw std::invalid_argument("act: word must be over the lambda alphabet");
    if (l.sym.i > p.degree() || l.sym.j > p.degree())
      throw std::invalid_argument("act: lambda index exceeds permutation degree");
    out.push_back({lam(p(l.sym.i), p(l.sym.j)), l.exp});
  }
  return Word::reduce(out);
}

CosetRepChain coset_reps(int n) {
  if (n < 1) throw std::invalid_argument("coset_reps: need n >= 1");
  CosetRepChain chain;
  Permutation cur = Permutation::identity(n + 1);
  chain.reps.push_back(cur);
  for (int k = n; k >= 1; --k) {
    cur = cur.then(Permutation::transposition(n + 1, k));
    chain.reps.push_back(cur);
  }
  // Representatives lie in distinct right cosets of S_n iff they move the
  // point n+1 to pairwise distinct places.
  std::set<int> tops;
  for (const Permutation& p : chain.reps) tops.insert(p(n + 1));
  if (static_cast<int>(tops.size()) != n + 1)
    throw std::logic_error("coset_reps: representatives not in distinct cosets");
  return chain;
}

Word canonical_relator(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, w.inverse()}) {
    const auto& code = base.code();
    for (int r = 0; r < base.size(); ++r) {
      std::vector<detail::Code> cs;
      cs.reserve(base.size());
      for (int k = 0; k < base.size(); ++k) cs.push_back(code[(k + r) % base.size()]);
      Word rot(std::move(cs));
      if (rot < best) best = rot;
    }
  }
  return best;
}

CoverReport verify_generator_cover(int n) {
  if (n < 3) throw std::invalid_argument("verify_generator_cover: need n >= 3");
  CoverReport rep;
  rep.n = n;
  CosetRepChain chain = coset_reps(n);

  std::set<GeneratorSymbol> covered;
  Presentation low = vp_presentation(n);
  for (int which = 0; which <= 2; ++which)
    for (const GeneratorSymbol& g : low.generators) {
      Word img = act(chain.reps[which], Word::from_symbol(g));
      covered.insert(img.letter(0).sym);
    }

  Presentation high = vp_presentation(n + 1);
  std::set<GeneratorSymbol> expected(high.generators.begin(), high.generators.end());
  std::set_difference(expected.begin(), expected.end(), covered.begin(), covered.end(),
                      std::back_inserter(rep.missing));
  std::set_difference(covered.begin(), covered.end(), expected.begin(), expected.end(),
                      std::back_inserter(rep.excess));
  rep.ok = rep.missing.empty() && rep.excess.empty();
  return rep;
}

namespace {

std::string rep_name(int n, int which) {
  if (which == 0) return "e";
  std::string out;
  for (int k = n; k >= n - which + 1; --k) {
    if (!out.empty()) out += ' ';
    out += "rho_" + std::to_string(k);
  }
  return out;
}

}  // namespace

PartitionReport verify_relation_partition(int n) {
  if (n < 3) throw std::invalid_argument("verify_relation_partition: need n >= 3");
  PartitionReport rep;
  rep.n = n;
  rep.used_comm_remainder = (n == 3);

  Presentation low = vp_presentation(n);
  Presentation high = vp_presentation(n + 1);
  CosetRepChain chain = coset_reps(n);

  // canonical form -> family of VP_{n+1}
  std::map<Word, RelationFamily> target;
  for (const Relator& r : high.relators) target.emplace(canonical_relator(r.word), r.family);

  rep.membership_ok = true;
  std::vector<std::set<Word>> blocks(chain.reps.size());
  for (size_t b = 0; b < chain.reps.size(); ++b) {
    std::set<RelationFamily> fams;
    for (const Relator& r : low.relators) {
      Word img = canonical_relator(act(chain.reps[b], r.word));
      auto it = target.find(img);
      if (it == target.end()) {
        rep.membership_ok = false;
        continue;
      }
      blocks[b].insert(img);
      fams.insert(it->second);
    }
    PartitionBlock pb;
    pb.rep = rep_name(n, static_cast<int>(b));
    pb.families.assign(fams.begin(), fams.end());
    pb.size = static_cast<int>(blocks[b].size());
    rep.blocks.push_back(std::move(pb));
  }

  // Cover: every relator of VP_{n+1} must appear in some block, except that
  // for n = 3 the commutativity relators enter as the explicit remainder.
  std::set<Word> covered;
  for (const auto& b : blocks) covered.insert(b.begin(), b.end());
  rep.cover_ok = true;
  for (const Relator& r : high.relators) {
    Word key = canonical_relator(r.word);
    if (covered.count(key)) continue;
    if (n == 3 && r.family.kind == FamilyKind::Comm) continue;  // CR_4 remainder
    rep.cover_ok = false;
  }
  if (n == 3) {
    // The remainder must be exactly the commutativity relators: none of them
    // may be produced by the long-relation blocks.
    for (const Relator& r : high.relators)
      if (r.family.kind == FamilyKind::Comm && covered.count(canonical_relator(r.word)))
        rep.cover_ok = false;
  }

  rep.disjoint = true;
  for (size_t a = 0; a < blocks.size(); ++a)
    for (size_t b = a + 1; b < blocks.size(); ++b)
      for (const Word& w : blocks[a])
        if (blocks[b].count(w)) {
          rep.disjoint = false;
          rep.overlaps.push_back({static_cast<int>(a), static_cast<int>(b), w});
        }
  return rep;
}

}  // namespace vpb
