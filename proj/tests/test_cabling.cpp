#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vpb/autfn.h"
#include "vpb/cabling.h"
#include "vpb/simplicial.h"

using namespace vpb;

namespace {

Word W(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("mu words") {
  CHECK(mu(1, 2, 1, 2, 2) == W("l[1,2]"));       // empty composite
  CHECK(mu(1, 2, 1, 3, 3) == W("l[1,3]*l[1,2]"));
  CHECK(mu(1, 2, 2, 3, 3) == W("l[1,3]*l[2,3]"));
  CHECK(mu(2, 1, 2, 3, 3) == W("l[3,2]*l[3,1]"));
  CHECK(mu(1, 2, 1, 2, 3) == W("l[1,2]"));       // padded by the extra degeneracy
  CHECK_THROWS_AS(mu(1, 3, 1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(mu(1, 2, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(mu(1, 2, 1, 4, 3), std::invalid_argument);
}

TEST_CASE("expand cabled generators") {
  CHECK(expand_cabled({Family::CabC, 1, 1}, 2) == W("l[2,1]*l[1,2]"));  // c = b * a
  CHECK(expand_cabled({Family::CabA, 1, 1}, 3) == W("l[1,2]"));
  CHECK(expand_cabled({Family::CabB, 1, 2}, 3) == W("l[2,1]*l[3,1]"));
  CHECK(expand_cabled({Family::CabA, 3, 1}, 4) == W("l[1,4]*l[2,4]*l[3,4]"));
  CHECK(expand_cabled({Family::CabA, 2, 2}, 4) == W("l[1,4]*l[1,3]*l[2,4]*l[2,3]"));
  CHECK(expand_cabled({Family::CabA, 1, 3}, 4) == W("l[1,4]*l[1,3]*l[1,2]"));
  CHECK(expand_cabled({Family::CabB, 3, 1}, 4) == W("l[4,3]*l[4,2]*l[4,1]"));
  CHECK_THROWS_AS(expand_cabled({Family::CabA, 2, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_cabled({Family::Lambda, 1, 2}, 3), std::invalid_argument);

  Word w = W("c[1,1]^-1*a[1,1]");
  CHECK(expand_cabled_word(w, 2) == W("l[1,2]^-1*l[2,1]^-1*l[1,2]"));
  CHECK_THROWS_AS(expand_cabled_word(W("l[1,2]"), 2), std::invalid_argument);
}

TEST_CASE("degeneracy on cabled letters") {
  CHECK(degeneracy_on_cabled(2, {Family::CabA, 1, 1}) == W("a[1,1]"));
  CHECK(degeneracy_on_cabled(1, {Family::CabA, 1, 1}) == W("a[1,2]"));
  // doubling a strand of the first cable bumps the first index only:
  // s_0(b_{1,1}) = s_0(l21) = l32 l31 = b_{2,1}
  CHECK(degeneracy_on_cabled(0, {Family::CabA, 1, 1}) == W("a[2,1]"));
  CHECK(degeneracy_on_cabled(0, {Family::CabB, 1, 1}) == W("b[2,1]"));
  CHECK(expand_cabled({Family::CabB, 2, 1}, 3) ==
        apply_degeneracy(0, 2, expand_cabled({Family::CabB, 1, 1}, 2)));
  CHECK(degeneracy_on_cabled(1, {Family::CabC, 2, 1}) == W("c[3,1]"));  // t < i
  CHECK(degeneracy_on_cabled(2, {Family::CabC, 2, 1}) == W("c[2,2]"));
  CHECK_THROWS_AS(degeneracy_on_cabled(-1, {Family::CabA, 1, 1}), std::invalid_argument);
}

TEST_CASE("route independence of the cabled degeneracy formulas") {
  CablingConsistencyReport rep = verify_cabled_degeneracy_consistency(5, 2);
  CHECK(rep.all_passed());
  CHECK(rep.failed == 0);
  CHECK(rep.passed == static_cast<long>(rep.checks.size()));
  // Doubling a strand inside a cable reorders crossings between the two
  // cables, so thirty instances agree only modulo commutation swaps; the
  // rest agree letterwise. All are certified exactly either way.
  long free_level = 0;
  for (const CablingRouteCheck& c : rep.checks) free_level += c.free_level ? 1 : 0;
  CHECK(free_level == 180);
  CHECK(rep.checks.size() == 210);
  // includes the extra-degeneracy instances t = ambient
  bool extra_seen = false;
  for (const CablingRouteCheck& c : rep.checks) extra_seen = extra_seen || c.t == c.ambient;
  CHECK(extra_seen);
}

TEST_CASE("tower levels are pure-braid-like") {
  for (int k = 1; k <= 4; ++k) {
    SubgroupSpec level = cabled_t_subgroup(k);
    for (const Word& g : level.generators) {
      auto perm = permutation_part(rep_of_word(expand_cabled_word(g, 5), 5));
      REQUIRE(perm.has_value());
      bool trivial = true;
      for (size_t m = 0; m < perm->size(); ++m)
        trivial = trivial && (*perm)[m] == static_cast<int>(m) + 1;
      CHECK(trivial);
    }
  }
}

TEST_CASE("cabled P_4 relators pass the exact oracle") {
  SearchBudget small;  // rewriting column is best effort in this unit test
  small.max_states = 20'000;
  small.max_depth = 8;
  P4CabledReport rep = verify_p4_cabled(small, 2);
  CHECK(rep.entries.size() == 24);  // 22 relators + the two c12^{c22^{+-1}} formulas
  CHECK(rep.oracle_failures == 0);
  CHECK(rep.oracle_all_passed());
  int extras = 0;
  for (const P4CabledEntry& e : rep.entries) {
    CHECK(e.oracle == CheckStatus::Pass);
    if (e.extra) ++extras;
    if (e.rewriting == CheckStatus::Pass)
      CHECK(replay(e.certificate, rep.rules) == e.certificate.end);
  }
  CHECK(extras == 2);
}

TEST_CASE("displayed degeneracy images of the P_3 presentation") {
  auto holds = [](const Word& lhs, const Word& rhs) {
    return oracle_equal(lhs, rhs, 4).verdict == OracleVerdict::Equal;
  };
  Word c11 = W("c[1,1]"), c21 = W("c[2,1]"), c12 = W("c[1,2]"), c31 = W("c[3,1]"),
       c22 = W("c[2,2]"), c13 = W("c[1,3]");
  // s_0(P_3) on c21, c31, c22
  CHECK(holds(conjugate(c21, c31), c21));
  CHECK(holds(conjugate(c22, c31), conjugate(c22, c21.inverse())));
  // s_1(P_3) on c12, c31, c13
  CHECK(holds(conjugate(c12, c31), c12));
  CHECK(holds(conjugate(c13, c31), conjugate(c13, c12.inverse())));
  // s_2(P_3) on c11, c22, c13
  CHECK(holds(conjugate(c11, c22), c11));
  CHECK(holds(conjugate(c13, c22), conjugate(c13, c11.inverse())));
  // the three supplementary relations completing the list
  CHECK(holds(conjugate(c11, c31), c11));
  CHECK(holds(conjugate(c13, c21), conjugate(c13, c12 * c11.inverse())));
  CHECK(holds(conjugate(c12, c22),
              power(c11, 2) * c13.inverse() * c12 * c11.inverse() * c13 * c11.inverse()));
}

TEST_CASE("semidirect conjugation tables") {
  SemidirectReport r3 = verify_semidirect(3, SearchBudget{});
  CHECK(r3.entries.size() == 4);
  CHECK(r3.all_passed());
  CHECK(r3.discrepancies == 0);

  SemidirectReport r4 = verify_semidirect(4, SearchBudget{});
  CHECK(r4.all_passed());
  CHECK(r4.discrepancies == 0);
  for (const SemidirectEntry& e : r4.entries) {
    CHECK(e.oracle == CheckStatus::Pass);
    CHECK(e.rhs_in_lower_levels);
  }

  // n = 5: the asserted (degeneracy-image) entries hold; the blanket
  // c_{ij}^{c_{n-2,2}} formula overreaches and its failures are reported
  // as discrepancies, not errors
  SemidirectReport r5 = verify_semidirect(5, SearchBudget{});
  CHECK(r5.all_passed());
  CHECK(r5.discrepancies == 6);
  for (const SemidirectEntry& e : r5.entries)
    if (e.asserted) CHECK(e.oracle == CheckStatus::Pass);

  CHECK_THROWS_AS(verify_semidirect(6, SearchBudget{}), std::invalid_argument);
}

TEST_CASE("parallel cabling checks agree with the serial reference") {
  CablingConsistencyReport serial = verify_cabled_degeneracy_consistency(4, 1);
  CablingConsistencyReport parallel = verify_cabled_degeneracy_consistency(4, 4);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  for (size_t k = 0; k < serial.checks.size(); ++k)
    CHECK(serial.checks[k].status == parallel.checks[k].status);
}
