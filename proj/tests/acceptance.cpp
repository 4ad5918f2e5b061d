// Acceptance suite: replays the reference results end to end and prints one
// PASS/FAIL line per criterion. Exit code 0 iff everything passes.
//
//   brauer_acceptance              all criteria (n = 6 fast checks included)
//   brauer_acceptance --heavy      additionally the n = 6 idempotency products
//   brauer_acceptance --heavy-only just the n = 6 idempotency products

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/analysis.hpp"
#include "brauer/golden.hpp"
#include "brauer/parallel.hpp"
#include "brauer/selftest.hpp"
#include "brauer/solver.hpp"
#include "brauer/symgrp.hpp"

using namespace brauer;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << "  ["
         << std::fixed << secs << "s]";
    if (!ok && !detail.empty()) line << "\n     " << detail;
    std::cout << line.str() << "\n" << std::flush;
    if (!ok) ++failures;
}

bool match_table(const std::string& id, const CentralElement& got, std::string& detail) {
    CentralElement expected = golden_table(id).element();
    if (expected == got) return true;
    for (const auto& [t, c] : expected.terms())
        if (got.coeff(t) != c) {
            detail = id + " class [" + t.str() + "]: expected " + c.str() + ", got " +
                     got.coeff(t).str();
            return false;
        }
    detail = id + ": extra classes in computed element";
    return false;
}

bool match_system(const GoldenSystem& gs, std::string& detail) {
    SplitSystem sys = build_system(gs.n, gs.ell, SystemMode::reduced);
    for (std::size_t i = 0; i < gs.unknown_rows.size(); ++i) {
        SporeTableau t = SporeTableau::from_rows(gs.unknown_rows[i]);
        std::size_t row = sys.unknowns.size();
        for (std::size_t j = 0; j < sys.unknowns.size(); ++j)
            if (sys.unknowns[j] == t) row = j;
        if (row == sys.unknowns.size()) {
            detail = gs.id + ": unknown " + t.str() + " missing";
            return false;
        }
        for (std::size_t jj = 0; jj < gs.unknown_rows.size(); ++jj) {
            SporeTableau tc = SporeTableau::from_rows(gs.unknown_rows[jj]);
            std::size_t col = 0;
            while (!(sys.unknowns[col] == tc)) ++col;
            if (sys.rows[row].coeffs[col] != gs.matrix[i][jj]) {
                detail = gs.id + " entry (" + std::to_string(i) + "," + std::to_string(jj) +
                         "): expected " + gs.matrix[i][jj].str() + ", got " +
                         sys.rows[row].coeffs[col].str();
                return false;
            }
        }
        if (sys.rows[row].rhs != gs.rhs[i]) {
            detail = gs.id + " rhs " + std::to_string(i) + ": expected " + gs.rhs[i].str() +
                     ", got " + sys.rows[row].rhs.str();
            return false;
        }
    }
    return true;
}

std::set<Rational> to_set(std::initializer_list<int> v) {
    std::set<Rational> s;
    for (int x : v) s.insert(Rational(x));
    return s;
}

void run_main_criteria(unsigned jobs) {
    criterion(1, "splitting idempotent of B_2 at cutoff 0", 1.0, [](std::string& detail) {
        return match_table("phi_2_0", splitting_idempotent(2, 0), detail);
    });

    criterion(2, "B_4 cutoff 0: coefficients and 2x2 system", 1.0, [](std::string& detail) {
        return match_table("phi_4_0", splitting_idempotent(4, 0), detail) &&
               match_system(golden_detail::system_4_0(), detail);
    });

    criterion(3, "B_4 cutoff 2: coefficients and 7x7 system", 5.0, [](std::string& detail) {
        return match_table("phi_4_2", splitting_idempotent(4, 2), detail) &&
               match_system(golden_detail::system_4_2(), detail);
    });

    criterion(4, "B_6 splitting idempotents, all 3 + 16 + 33 coefficients", 300.0,
              [](std::string& detail) {
                  // One tabulated sign (phi_6(0), three-row class) is corrected
                  // here; the stored value is the one forced by idempotency.
                  return match_table("phi_6_0", splitting_idempotent(6, 0), detail) &&
                         match_table("phi_6_2", splitting_idempotent(6, 2), detail) &&
                         match_table("phi_6_4", splitting_idempotent(6, 4), detail);
              });

    criterion(5, "symmetric-group and primitive central idempotents", 10.0,
              [](std::string& detail) {
                  return match_table("e_2", young_central_idempotent({2}), detail) &&
                         match_table("e_1_1", young_central_idempotent({1, 1}), detail) &&
                         match_table("e_3_1", young_central_idempotent({3, 1}), detail) &&
                         match_table("phi_2_2", primitive_central_idempotent(2, {2}), detail) &&
                         match_table("phi_2_1_1", primitive_central_idempotent(2, {1, 1}),
                                     detail) &&
                         match_table("phi_4_3_1", primitive_central_idempotent(4, {3, 1}),
                                     detail);
              });

    criterion(6, "pole sets with propagating attribution", 0, [](std::string& detail) {
        PoleReport p40 = poles(splitting_idempotent(4, 0));
        PoleReport p42 = poles(splitting_idempotent(4, 2));
        PoleReport p431 = poles(primitive_central_idempotent(4, {3, 1}));
        if (p40.poles != to_set({-2, 0, 1})) {
            detail = "phi_4(0) pole set";
            return false;
        }
        if (p42.poles != to_set({-4, -2, 0, 1, 2})) {
            detail = "phi_4(2) pole set";
            return false;
        }
        if (p431.poles != to_set({-2, 0})) {
            detail = "phi_4((3,1)) pole set";
            return false;
        }
        for (const auto& [p, m] : p431.max_prop_at_pole)
            if (m != 2) {
                detail = "max propagating count at " + p.str();
                return false;
            }
        return p431.max_prop_at_pole.size() == 2;
    });

    criterion(7, "block sum: combined coefficients and specialization at -2", 0,
              [](std::string& detail) {
                  CentralElement sum = combine({{1, splitting_idempotent(4, 0)},
                                                {-1, splitting_idempotent(4, 2)},
                                                {1, primitive_central_idempotent(4, {3, 1})}});
                  for (const auto& e : golden_table("block_sum_4").entries) {
                      SporeTableau t = SporeTableau::from_rows(e.rows);
                      if (sum.coeff(t) != e.coeff) {
                          detail = "combined coefficient " + e.label + ": expected " +
                                   e.coeff.str() + ", got " + sum.coeff(t).str();
                          return false;
                      }
                  }
                  try {
                      specialize_element(sum, Rational(-2));
                  } catch (const PoleError&) {
                      detail = "block sum failed to specialize at -2";
                      return false;
                  }
                  try {
                      specialize_element(splitting_idempotent(4, 2), Rational(-2));
                      detail = "phi_4(2) specialized at -2 but has a pole there";
                      return false;
                  } catch (const ElementPoleError&) {
                  }
                  return true;
              });

    criterion(8, "splitting properties for n <= 5, fast checks for n = 6", 0,
              [jobs](std::string& detail) {
                  for (int n = 2; n <= 5; ++n) {
                      for (int ell = n % 2; ell <= n - 2; ell += 2) {
                          std::string tag =
                              "(" + std::to_string(n) + "," + std::to_string(ell) + ")";
                          CentralElement phi = splitting_idempotent(n, ell);
                          if (!verify_fast(phi, ell).pass()) {
                              detail = "fast checks failed " + tag;
                              return false;
                          }
                          if (mul(phi, phi, jobs) != phi) {
                              detail = "idempotency failed " + tag;
                              return false;
                          }
                          for (const auto& [t, c] : phi.terms())
                              if (!c.in_K()) {
                                  detail = "coefficient outside K " + tag;
                                  return false;
                              }
                          SplitSystem red = build_system(n, ell, SystemMode::reduced);
                          if (!structural_checks(red).pass()) {
                              detail = "matrix residue structure failed " + tag;
                              return false;
                          }
                          auto full = solve(build_system(n, ell, SystemMode::full));
                          if (solve(red) != full) {
                              detail = "full and reduced solutions differ " + tag;
                              return false;
                          }
                      }
                  }
                  for (int ell : {0, 2, 4}) {
                      std::string tag = "(6," + std::to_string(ell) + ")";
                      CentralElement phi = splitting_idempotent(6, ell);
                      if (!verify_fast(phi, ell).pass()) {
                          detail = "fast checks failed " + tag;
                          return false;
                      }
                      SplitSystem red = build_system(6, ell, SystemMode::reduced);
                      if (!structural_checks(red).pass()) {
                          detail = "matrix residue structure failed " + tag;
                          return false;
                      }
                      if (solve(red) != solve(build_system(6, ell, SystemMode::full))) {
                          detail = "full and reduced solutions differ " + tag;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(9, "Spore separates orbits (n <= 5) and the image is as enumerated (n <= 6)", 0,
              [](std::string& detail) {
                  for (int n = 2; n <= 5; ++n) {
                      std::map<Diagram, int> orbit_of;
                      int next = 0;
                      for (const auto& d : all_diagrams(n)) {
                          if (orbit_of.count(d)) continue;
                          std::vector<Diagram> frontier{d};
                          orbit_of[d] = next;
                          while (!frontier.empty()) {
                              Diagram cur = frontier.back();
                              frontier.pop_back();
                              for (int i = 0; i + 1 < n; ++i) {
                                  std::vector<int> tr(n);
                                  for (int j = 0; j < n; ++j) tr[j] = j;
                                  std::swap(tr[i], tr[i + 1]);
                                  Diagram c = conjugate(cur, tr);
                                  if (!orbit_of.count(c)) {
                                      orbit_of[c] = next;
                                      frontier.push_back(c);
                                  }
                              }
                          }
                          ++next;
                      }
                      std::map<int, SporeTableau> rep;
                      std::map<SporeTableau, int> back;
                      for (const auto& [d, o] : orbit_of) {
                          SporeTableau t = spore(d);
                          auto it = rep.find(o);
                          if (it == rep.end())
                              rep.emplace(o, t);
                          else if (!(it->second == t)) {
                              detail = "orbit with two classes, n = " + std::to_string(n);
                              return false;
                          }
                          auto jt = back.find(t);
                          if (jt == back.end())
                              back.emplace(t, o);
                          else if (jt->second != o) {
                              detail = "class across two orbits, n = " + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  for (int n = 2; n <= 6; ++n) {
                      std::set<SporeTableau> image;
                      for (const auto& d : all_diagrams(n)) image.insert(spore(d));
                      auto listed = enumerate_spores(n, n);
                      if (std::set<SporeTableau>(listed.begin(), listed.end()) != image) {
                          detail = "enumerated classes differ from image, n = " +
                                   std::to_string(n);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "counting: 10395 diagrams and 3 / 12 / 33 classes", 0,
              [](std::string& detail) {
                  if (all_diagrams(6).size() != 10395) {
                      detail = "diagram count";
                      return false;
                  }
                  if (enumerate_spores(2, 2).size() != 3 || enumerate_spores(4, 4).size() != 12 ||
                      enumerate_spores(6, 4).size() != 33) {
                      detail = "class counts";
                      return false;
                  }
                  return true;
              });
}

void run_heavy(unsigned jobs) {
    criterion(8, "heavy: phi_6(ell) squared equals itself, ell in {0,2,4}", 1800.0,
              [jobs](std::string& detail) {
                  for (int ell : {0, 2, 4}) {
                      CentralElement phi = splitting_idempotent(6, ell);
                      if (mul(phi, phi, jobs) != phi) {
                          detail = "phi_6(" + std::to_string(ell) + ") is not idempotent";
                          return false;
                      }
                  }
                  return true;
              });
}

}  // namespace

int main(int argc, char** argv) {
    bool heavy = false, heavy_only = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;
        if (std::strcmp(argv[i], "--heavy-only") == 0) heavy_only = true;
    }
    unsigned jobs = default_jobs();
    if (const char* env = std::getenv("BRAUER_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) jobs = static_cast<unsigned>(v);
    }
    if (!heavy_only) run_main_criteria(jobs);
    if (heavy || heavy_only) run_heavy(jobs);
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
