// Acceptance gate: one pass/fail line per criterion. Exit 0 iff all pass.
//
// The criteria are evaluated through the verification suites plus a few
// direct corpus checks (corpus size, case coverage).

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "zdg/catalog.hpp"
#include "zdg/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::string note;
};

// All items of a suite whose citation contains `needle`.
std::vector<zdg::CheckItem> filter(const zdg::SuiteResult& suite,
                                   const std::string& needle) {
  std::vector<zdg::CheckItem> out;
  for (const auto& i : suite.items)
    if (i.citation.find(needle) != std::string::npos) out.push_back(i);
  return out;
}

bool all_pass(const std::vector<zdg::CheckItem>& items) {
  if (items.empty()) return false;
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

}  // namespace

int main() {
  using zdg::Suite;

  zdg::SuiteResult len4 = zdg::run_suite(Suite::LEN4);
  zdg::SuiteResult len5 = zdg::run_suite(Suite::LEN5);
  zdg::SuiteResult phi = zdg::run_suite(Suite::PROP_PHI);
  zdg::SuiteResult ortho = zdg::run_suite(Suite::LEMMA_ORTHO);
  zdg::SuiteResult socle = zdg::run_suite(Suite::LEMMA_SOCLE);
  zdg::SuiteResult oracle = zdg::run_suite(Suite::ORACLE_EQUIV);
  zdg::SuiteResult hilbert = zdg::run_suite(Suite::HILBERT);
  zdg::SuiteResult trivext = zdg::run_suite(Suite::TRIVEXT_GROWTH);

  std::vector<Criterion> criteria;

  {
    Criterion c{1, "length-5 bound omega <= 5 - socle_dim over the {2,3} corpus"};
    auto items = filter(len5, "<= 5 - dim_k soc");
    c.pass = all_pass(items) && items.size() >= 12;
    // The corpus must cover all four length-5 Hilbert patterns.
    std::set<std::string> cases;
    for (const auto& r : zdg::length5_corpus())
      cases.insert(zdg::to_string(zdg::classify_length5(r.ring.invariants())));
    if (cases.size() != 4) {
      c.pass = false;
      c.note = "only " + std::to_string(cases.size()) + " Hilbert patterns covered";
    } else {
      c.note = std::to_string(items.size()) + " rings, 4 Hilbert patterns";
    }
    criteria.push_back(c);
  }
  {
    Criterion c{2, "equality omega = 5 - socle_dim for (1,3,1) rings, p in {3,5}"};
    auto items = filter(len5, "char k != 2");
    c.pass = all_pass(items) && items.size() == 6;
    c.note = std::to_string(items.size()) + " rings";
    criteria.push_back(c);
  }
  {
    Criterion c{3, "omega = 2 for every (1,3,1) ring with socle dimension 3"};
    auto items = filter(len5, "dim soc = 3: omega");
    c.pass = all_pass(items) && items.size() == 3;
    criteria.push_back(c);
  }
  {
    Criterion c{4, "length-4 rings: omega <= 3, (1,3) one vertex, chain three vertices"};
    c.pass = len4.passed() && !len4.items.empty();
    c.note = std::to_string(len4.items.size()) + " rings";
    criteria.push_back(c);
  }
  {
    Criterion c{5, "bilinear form on m/m^2: orthogonality, socle=radical+1, Gorenstein"};
    c.pass = phi.passed() && !phi.items.empty();
    c.note = std::to_string(phi.items.size()) + " checks";
    criteria.push_back(c);
  }
  {
    Criterion c{6, "no orthogonal nonparallel 4-set in nondegenerate dim 3 (p=2,3,5)"};
    auto items = filter(ortho, "no orthogonal 4-set");
    c.pass = all_pass(items) && items.size() == 3;
    criteria.push_back(c);
  }
  {
    Criterion c{7, "orthogonal 4-set with parallel vectors exists (p=5, isotropic line)"};
    auto items = filter(ortho, "isotropic vector");
    c.pass = all_pass(items) && items.size() == 1;
    criteria.push_back(c);
  }
  {
    Criterion c{8, "kernel-based and element-scan graph paths agree on all small rings"};
    auto items = filter(oracle, "element-scan");
    c.pass = all_pass(items);
    c.note = std::to_string(items.size()) + " rings";
    criteria.push_back(c);
  }
  {
    Criterion c{9, "length/Hilbert bookkeeping and socle lemma hold on the corpus"};
    c.pass = hilbert.passed() && !hilbert.items.empty() && socle.passed() &&
             !socle.items.empty();
    c.note = std::to_string(hilbert.items.size() + socle.items.size()) + " checks";
    criteria.push_back(c);
  }
  {
    Criterion c{10, "length-6 trivial extensions reach omega >= p + 1 for p in {2,3,5}"};
    c.pass = trivext.passed() && trivext.items.size() == 3;
    criteria.push_back(c);
  }
  {
    Criterion c{11, "chain rings: n - 1 vertices and omega = n - ceil((n-1)/2), n in 2..8"};
    auto items = filter(oracle, "n-1 vertices");
    c.pass = all_pass(items) && items.size() == 14;
    criteria.push_back(c);
  }

  bool all = true;
  for (const auto& c : criteria) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": "
              << c.title << (c.note.empty() ? "" : " [" + c.note + "]") << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "ACCEPTANCE: all criteria passed"
                    : "ACCEPTANCE: at least one criterion failed")
            << "\n";
  return all ? 0 : 1;
}
