#include "hopfchain/verify.hpp"

#include "hopfchain/absorption.hpp"
#include "hopfchain/emit.hpp"
#include "hopfchain/golden.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/partition.hpp"
#include "hopfchain/shuffle.hpp"
#include "hopfchain/spectral.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace hopfchain {

namespace {

struct Checker {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;

  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
  std::string summary() const {
    std::string s = std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks";
    for (const std::string& n : notes) s += "; " + n;
    return s;
  }
};

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

Perm identity(int n) {
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  return id;
}

// F f = β f for a forward matrix stored as K (F = Kᵀ).
bool forward_eigen(const TransitionMatrix& k, const std::vector<Rational>& f, const Rational& beta) {
  std::vector<Rational> fk(k.size(), 0);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& [j, v] : k.rows[i]) fk[j] += f[i] * v;
  for (std::size_t j = 0; j < k.size(); ++j)
    if (fk[j] != beta * f[j]) return false;
  return true;
}

std::string nu_text(const std::vector<int>& nu) {
  std::string s;
  for (int x : nu) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

void golden_matrices(Checker& check) {
  SymFnInstance sym(4);
  for (int n = 2; n <= 4; ++n) {
    auto j = matrix_json(sym, transition_matrix(sym, n, 2));
    const auto& g = golden::rock_matrix(n);
    check(j["rows"].size() == g.size(), "rock n=" + std::to_string(n) + " size");
    for (std::size_t r = 0; r < g.size() && r < j["rows"].size(); ++r)
      for (std::size_t c = 0; c < g.size(); ++c)
        check(parse_rational(j["rows"][r][c].get<std::string>()) == golden::at(g, r, c),
              "rock n=" + std::to_string(n) + " entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
  }
}

void golden_eigenbases(Checker& check) {
  SymFnInstance sym(4);
  for (int n = 2; n <= 4; ++n) {
    EigenSystem sys = eigensystem(sym, n);
    auto j = eigen_json(sym, sys, duality_certificate(sys));
    const std::size_t m = sys.basis.size();
    check(j["certificate"] == "pass", "duality certificate n=" + std::to_string(n));
    // G has rows g_λ, F has columns f_μ, both in the order of the basis
    std::vector<std::vector<Rational>> G(m, std::vector<Rational>(m)), F(m, std::vector<Rational>(m));
    for (const auto& side : {"left", "right"}) {
      for (const auto& v : j[side]) {
        Element idx = sym.parse_element(v["index"].get<std::string>());
        std::size_t i = static_cast<std::size_t>(
            std::find(sys.basis.begin(), sys.basis.end(), idx) - sys.basis.begin());
        for (std::size_t c = 0; c < m; ++c) {
          Rational x = parse_rational(v["coeffs"][c].get<std::string>());
          if (std::string(side) == "left") G[i][c] = x;
          else F[c][i] = x;
        }
      }
    }
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        check(G[r][c] == golden::at(golden::rock_left(n), r, c), "left n=" + std::to_string(n));
        check(F[r][c] == golden::at(golden::rock_right(n), r, c), "right n=" + std::to_string(n));
        Rational s = 0;
        for (std::size_t t = 0; t < m; ++t) s += G[r][t] * F[t][c];
        check(s == (r == c ? 1 : 0), "G F = I at n=" + std::to_string(n));
      }
  }
}

void eigen_at_scale(Checker& check) {
  for (int n = 1; n <= 8; ++n) {
    SymFnInstance sym(n);
    EigenSystem sys = eigensystem(sym, n);
    check(sys.left.size() == sys.basis.size() && sys.right.size() == sys.basis.size(),
          "rock n=" + std::to_string(n) + " basis size");
    for (int a : {2, 3}) {
      auto r = eigen_equation_check(transition_matrix(sym, n, a), sys);
      check(r.ok, "rock n=" + std::to_string(n) + " a=" + std::to_string(a) +
                      (r.failures.empty() ? "" : ": " + r.failures.front()));
    }
  }
  for (int n = 1; n <= 6; ++n)
    for (const Composition& nu : compositions(n)) {
      FreeAssocInstance deck(nu);
      EigenSystem sys = eigensystem(deck, n);
      check(sys.left.size() == sys.basis.size() && sys.right.size() == sys.basis.size(),
            "deck " + nu_text(nu) + " basis size");
      for (int a : {2, 3}) {
        auto r = eigen_equation_check(transition_matrix(deck, n, a), sys);
        check(r.ok, "deck " + nu_text(nu) + " a=" + std::to_string(a) +
                        (r.failures.empty() ? "" : ": " + r.failures.front()));
      }
    }
}

void closed_forms(Checker& check) {
  check(rock_f({2, 1, 1, 1}, {3, 2}) == 4, "rock_f((2,1,1,1),(3,2)) = 4");
  check(rock_g({3, 2}, {2, 1, 1, 1}) == 5, "rock_g((3,2),(2,1,1,1)) = 5");
  for (int n = 1; n <= 8; ++n) {
    SymFnInstance sym(n);
    EigenSystem sys = eigensystem(sym, n);
    for (const EigenVector& g : sys.left)
      for (const Element& mu : sys.basis)
        check(rock_g(element_partition(g.index), element_partition(mu)) == g.coeffs.coeff(mu),
              "g at n=" + std::to_string(n));
    for (const EigenVector& f : sys.right)
      for (const Element& lambda : sys.basis)
        check(rock_f(element_partition(f.index), element_partition(lambda)) == f.coeffs.coeff(lambda),
              "f at n=" + std::to_string(n));
  }
}

void gsr_identity(Checker& check) {
  for (int n = 1; n <= 5; ++n) {
    FreeAssocInstance deck(ones(n));
    auto perms = all_permutations(n);
    for (int a : {2, 3})
      check(same_entries(transpose(transition_matrix(deck, n, a)), gsr_forward_matrix(n, a)),
            "forward matrix n=" + std::to_string(n) + " a=" + std::to_string(a));
    auto law = [&](int a) {
      std::vector<Rational> p;
      for (const Perm& w : perms) p.push_back(gsr_probability(n, a, w));
      return p;
    };
    for (int a : {2, 3})
      for (int b : {2, 3})
        check(convolve(perms, law(a), law(b)) == law(a * b), "Q_a * Q_b at n=" + std::to_string(n));
  }
  auto perms = all_permutations(3);
  const auto& t = golden::shuffle3_offsets();
  for (int a : {2, 3}) {
    TransitionMatrix f = gsr_forward_matrix(3, a);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        check(f.at(f.index.at(word_element(perms[i])), f.index.at(word_element(perms[j]))) ==
                  make_rational(binomial(a + 2 - t[i][j], 3), integer_pow(a, 3)),
              "three-card table a=" + std::to_string(a));
  }
}

void named_families(Checker& check) {
  for (int n = 2; n <= 6; ++n)
    for (int a : {2, 3}) {
      FreeAssocInstance deck(ones(n));
      TransitionMatrix k = transition_matrix(deck, n, a);
      std::vector<NamedEigenfunction> fs;
      try {
        fs = named_eigenfunctions(ones(n), a);
      } catch (const HopfError& e) {
        check(false, e.what());
        continue;
      }
      std::vector<std::string> want{"descents"};
      if (n >= 3) want.insert(want.end(), {"peaks", "troughs", "straights"});
      for (int j = 0; j < n; ++j) want.push_back("h" + std::to_string(j));
      for (const std::string& name : want) {
        auto it = std::find_if(fs.begin(), fs.end(), [&](const auto& f) { return f.name == name; });
        check(it != fs.end(), "missing " + name);
        if (it == fs.end()) continue;
        check(forward_eigen(k, it->values, rational_pow(Rational(a), it->exponent)),
              name + " at n=" + std::to_string(n) + " a=" + std::to_string(a));
      }
    }
  for (int n = 2; n <= 6; ++n)
    for (const Composition& nu : compositions(n)) {
      FreeAssocInstance deck(nu);
      long N = static_cast<long>(nu.size());
      auto direct = multiplicities_direct(deck, n);
      check(direct[n - 1] == binomial(N, 2), "1/a multiplicity for " + nu_text(nu));
      check(multiplicities(deck, n)[n - 1] == binomial(N, 2), "1/a generating function for " + nu_text(nu));
      if (N < 2) continue;
      for (int a : {2, 3}) {
        TransitionMatrix k = transition_matrix(deck, n, a);
        std::vector<Rational> f;
        for (const Element& b : k.basis) {
          auto w = element_letters(b);
          f.push_back(Rational(ascents(w) - descents(w)));
        }
        check(forward_eigen(k, f, make_rational(1, a)), "ascents-descents for " + nu_text(nu));
      }
    }
}

void multiplicity_counts(Checker& check) {
  for (int n = 1; n <= 10; ++n) {
    SymFnInstance sym(n);
    auto gf = multiplicities(sym, n);
    auto direct = multiplicities_direct(sym, n);
    check(gf == direct, "rock n=" + std::to_string(n) + " generating function vs direct");
    for (int l = 1; l <= n; ++l) check(gf[l] == partition_count(n, l), "p(n,l) at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 7; ++n) {
    FreeAssocInstance deck(ones(n));
    auto gf = multiplicities(deck, n);
    auto direct = multiplicities_direct(deck, n);
    check(gf == direct, "deck n=" + std::to_string(n) + " generating function vs direct");
    for (int k = 1; k <= n; ++k) check(gf[k] == stirling1_unsigned(n, k), "c(n,k) at n=" + std::to_string(n));
  }
}

void absorption_checks(Checker& check) {
  const CharacterSpec single_parts{{make_gen(1, 1)}};
  for (int n = 1; n <= 6; ++n) {
    SymFnInstance sym(n);
    for (const Element& b : sym.basis(n))
      for (int a : {2, 3, 4})
        check(absorption_probability(sym, b, a, single_parts) == target_mass(sym, b, a, single_parts),
              "rock " + sym.element_label(b) + " a=" + std::to_string(a));
  }
  const CharacterSpec isolated{{vertex_generator()}};
  for (int n = 1; n <= 5; ++n) {
    GraphInstance graphs(n);
    for (const Element& b : graphs.basis(n))
      for (int a : {2, 3})
        check(absorption_probability(graphs, b, a, isolated) == target_mass(graphs, b, a, isolated),
              "graph " + graphs.element_label(b) + " a=" + std::to_string(a));
  }
  for (int n = 2; n <= 8; ++n) {
    SymFnInstance sym(n);
    for (int k = 1; k <= 12; ++k) {
      Rational box = rational_pow(Rational(2), k), closed = 1;
      for (int i = 1; i < n; ++i) closed *= 1 - Rational(i) / box;
      Rational p = absorption_probability(sym, partition_element({n}), 1 << k, single_parts);
      check(p == closed, "rock product formula n=" + std::to_string(n) + " k=" + std::to_string(k));
      check(1 - p <= Rational(binomial(n, 2)) / box, "rock bound n=" + std::to_string(n));
    }
  }
  std::vector<std::string> complexes{"1 2\n",
                                     "1 2 3\n",
                                     "1 2 3 4\n",
                                     "1 2 3 4 5\n",
                                     "1 2 3 4 5 6\n",
                                     "1 2\n2 3\n3 4\n4 5\n5 6\n",
                                     "1 2 3\n3 4\n",
                                     "1 2\n2 3\n3 4\n4 1\n",
                                     "1 2 3\n2 3 4\n4 5\nn 6\n",
                                     "1 2 3\n1 3 4\n1 4 5\n1 5 2\n6 2 3\n6 3 4\n6 4 5\n6 5 2\n"};
  for (const std::string& text : complexes) {
    Complex c = parse_faces(text);
    Graph skeleton = one_skeleton(c);
    IntPoly p0 = chromatic_polynomial(skeleton);
    for (int x = 0; x <= 6; ++x)
      check(evaluate(p0, x) == count_proper_colorings(skeleton, x), "chromatic polynomial vs colourings");
    SimplicialInstance simp(c.n);
    Element start = simp.from_complex(c);
    for (int k = 0; k <= 4; ++k) {
      Rational closed = make_rational(evaluate(p0, integer_pow(2, static_cast<unsigned long>(k))),
                                      integer_pow(2, static_cast<unsigned long>(k * c.n)));
      check(simplex_absorption(c, k) == closed, "simplex closed form");
      check(absorption_probability(simp, start, 1 << k, isolated) == closed,
            "simplicial chain absorption k=" + std::to_string(k));
    }
  }
}

void quasi_stationarity(Checker& check) {
  for (int n = 2; n <= 8; ++n) {
    SymFnInstance sym(n);
    QuasiStationary q = quasi_stationary(sym, n);
    std::vector<int> parts = ones(n - 1);
    parts.front() = 2;
    Distribution point{{partition_element(parts), Rational(1)}};
    check(q.pi1 == point, "π¹ at n=" + std::to_string(n));
    check(q.pi2 == point, "π² at n=" + std::to_string(n));
  }
}

void balls_in_boxes(Checker& check) {
  for (int n = 1; n <= 6; ++n) {
    SymFnInstance sym(n);
    TransitionMatrix k = transition_matrix(sym, n, 2);
    for (int steps = 1; steps <= 3; ++steps) {
      Distribution d = matrix_power_row(k, partition_element({n}), steps);
      for (const Partition& lambda : partitions(n)) {
        auto it = d.find(partition_element(lambda));
        check(rock_occupancy(n, steps, lambda) == (it == d.end() ? Rational(0) : it->second),
              "occupancy n=" + std::to_string(n) + " k=" + std::to_string(steps));
      }
    }
  }
}

void q_shuffles(Checker& check) {
  const std::vector<Rational> qs{Rational(1, 2), Rational(1), Rational(2)};
  for (int n = 1; n <= 5; ++n) {
    TransitionMatrix gsr = gsr_forward_matrix(n, 2);
    std::size_t from = gsr.index.at(word_element(identity(n)));
    for (const Rational& q : qs) {
      auto law = q_shuffle_path_law(n, q);
      for (const Perm& w : all_permutations(n)) {
        Rational p = q_shuffle_probability(n, q, w);
        auto it = law.find(w);
        check(p == (it == law.end() ? Rational(0) : it->second), "path law n=" + std::to_string(n));
        if (q == 1) check(p == gsr.at(from, gsr.index.at(word_element(w))), "q=1 vs GSR n=" + std::to_string(n));
      }
    }
  }
  const int n = 4, samples = 100000;
  const std::uint64_t seed = 20240601;
  for (const Rational& q : qs) {
    std::map<Perm, int> counts;
    for (int s = 0; s < samples; ++s) ++counts[q_shuffle_sample(n, q, seed, static_cast<std::uint64_t>(s))];
    for (const Perm& w : all_permutations(n)) {
      double p = to_double(q_shuffle_probability(n, q, w));
      double sd = std::sqrt(p * (1 - p) / samples);
      double freq = counts[w] / double(samples);
      check(std::abs(freq - p) <= 4 * sd, "Monte Carlo q=" + to_string(q) + " off by " +
                                              std::to_string(std::abs(freq - p) / (sd > 0 ? sd : 1)) + "σ");
    }
  }
}

void failure_path(Checker& check, const CliProbe& cli) {
  QuotientSymInstance quo(2);
  GenId e2 = quo.generators(2).front();
  check(quo.generator_label(e2) == "e2", "quotient generator label");
  try {
    transition_matrix(quo, 2, 2);
    check(false, "library accepted the quotient instance");
  } catch (const HopfError& err) {
    check(err.code() == ErrorCode::no_markov_rescaling, "library error code");
    check(std::string(err.what()).find("e2") != std::string::npos, "library message names e2");
  }
  ProbeResult r = cli({"matrix", "--instance", "quotient-sym", "--n", "2", "--a", "2"});
  check(r.exit_code == 3, "exit code " + std::to_string(r.exit_code));
  check(r.output.find("e2") != std::string::npos, "message names e2");
}

struct Spec {
  const char* title;
  double limit;
};

const Spec kSpecs[kCriterionCount] = {
    {"golden rock matrices", 1},
    {"golden eigenbases and duality", 1},
    {"eigen-equations at scale", 60},
    {"closed forms vs generic constructions", 0},
    {"GSR identity and convolution", 0},
    {"named eigenfunctions", 0},
    {"eigenvalue multiplicities", 0},
    {"absorption", 0},
    {"quasi-stationarity", 0},
    {"balls in boxes", 0},
    {"q-shuffles", 0},
    {"no-markov-rescaling failure path", 0},
};

}  // namespace

CriterionResult run_criterion(int id, const CliProbe& cli) {
  if (id < 1 || id > kCriterionCount) fail(ErrorCode::invalid_input, "no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = kSpecs[id - 1].title;
  r.limit_seconds = kSpecs[id - 1].limit;
  Checker check;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: golden_matrices(check); break;
      case 2: golden_eigenbases(check); break;
      case 3: eigen_at_scale(check); break;
      case 4: closed_forms(check); break;
      case 5: gsr_identity(check); break;
      case 6: named_families(check); break;
      case 7: multiplicity_counts(check); break;
      case 8: absorption_checks(check); break;
      case 9: quasi_stationarity(check); break;
      case 10: balls_in_boxes(check); break;
      case 11: q_shuffles(check); break;
      case 12: failure_path(check, cli); break;
    }
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = check.failures == 0 && check.checks > 0;
  r.detail = check.summary();
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.pass = false;
    r.detail += "; over the time limit";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const CliProbe& cli) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, cli));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
  std::string s = std::string(r.pass ? "PASS" : "FAIL") + "  criterion " + std::to_string(r.id) + ": " +
                  r.title + " (" + buf;
  if (r.limit_seconds > 0) {
    std::snprintf(buf, sizeof buf, " < %gs", r.limit_seconds);
    s += buf;
  }
  return s + ") " + r.detail;
}

}  // namespace hopfchain
