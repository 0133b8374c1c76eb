// Times the verification kernels with one worker (the serial reference)
// against the OpenMP grid, and checks that both produce the same outcomes.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "vpb/cabling.h"
#include "vpb/parallel.h"
#include "vpb/rewriting.h"
#include "vpb/simplicial.h"

using namespace vpb;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timed(F&& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(9) << serial << "s" << std::setw(9) << parallel
            << "s   x" << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
            << (same ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = hardware_jobs();
  if (argc > 1) jobs = std::atoi(argv[1]);
  std::cout << "parallel jobs: " << jobs << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "parallel" << "   speedup\n";
  bool all_same = true;

  {
    SimplicialIdentityReport a, b;
    double ts = timed([&] { a = check_simplicial_identities(6, SearchBudget{}, 1); });
    double tp = timed([&] { b = check_simplicial_identities(6, SearchBudget{}, jobs); });
    bool same = a.passed == b.passed && a.failed == b.failed && a.fallbacks == b.fallbacks;
    all_same = all_same && same;
    row("simplicial identities n<=6", ts, tp, same);
  }
  {
    CablingConsistencyReport a, b;
    double ts = timed([&] { a = verify_cabled_degeneracy_consistency(5, 1); });
    double tp = timed([&] { b = verify_cabled_degeneracy_consistency(5, jobs); });
    bool same = a.passed == b.passed && a.failed == b.failed;
    all_same = all_same && same;
    row("cabled route independence n<=5", ts, tp, same);
  }
  {
    LiftingReport a, b;
    double ts = timed([&] { a = verify_lifting(4, SearchBudget{}, 1); });
    double tp = timed([&] { b = verify_lifting(4, SearchBudget{}, jobs); });
    bool same = a.certified == b.certified && a.not_proven == b.not_proven;
    all_same = all_same && same;
    row("lifting VP_4 -> VP_5", ts, tp, same);
  }
  {
    TnReport a, b;
    double ts = timed([&] { a = verify_tn_relators(3, 2, SearchBudget{}, 1); });
    double tp = timed([&] { b = verify_tn_relators(3, 2, SearchBudget{}, jobs); });
    bool same = a.oracle_failures == b.oracle_failures && a.certified == b.certified;
    all_same = all_same && same;
    row("T_3 relators, bound 2", ts, tp, same);
  }
  {
    P4CabledReport a, b;
    SearchBudget budget;
    budget.max_states = 50'000;  // keep the not-proven attempts short
    double ts = timed([&] { a = verify_p4_cabled(budget, 1); });
    double tp = timed([&] { b = verify_p4_cabled(budget, jobs); });
    bool same = a.oracle_failures == b.oracle_failures && a.certified == b.certified;
    all_same = all_same && same;
    row("cabled P_4 checks", ts, tp, same);
  }

  if (!all_same) {
    std::cout << "serial and parallel outcomes differ\n";
    return 1;
  }
  std::cout << "serial and parallel outcomes agree\n";
  return 0;
}
