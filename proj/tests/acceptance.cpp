// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alttam/alt_tamari.hpp"
#include "alttam/bijections.hpp"
#include "alttam/binary_tree.hpp"
#include "alttam/bitrow.hpp"
#include "alttam/census.hpp"
#include "alttam/series.hpp"
#include "alttam/verify.hpp"

using namespace alttam;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string first;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond || !ok) return;
    ok = false;
    first = what;
  }
};

// Linear-interval counts per height, n = 1..7, as printed in the reference table.
const std::vector<std::vector<int>> kTable{
    {1},
    {2, 1},
    {5, 5, 2},
    {14, 21, 12, 2},
    {42, 84, 56, 14, 2},
    {132, 330, 240, 72, 16, 2},
    {429, 1287, 990, 330, 90, 18, 2},
};
const std::vector<int> kTotals{1, 3, 12, 49, 198, 792, 3146};

Outcome interval_table() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    const auto& row = kTable[static_cast<std::size_t>(n - 1)];
    for (const IncrementFunction& delta : delta_test_set(n)) {
      const CountsTable t = census(delta);
      const std::string tag = "n=" + std::to_string(n) + " delta=" + delta.to_string();
      for (int k = 0; k < n; ++k) o.expect(t.count(k) == row[static_cast<std::size_t>(k)], tag + " S_" + std::to_string(k));
      o.expect(t.count(n) == 0, tag + " nonzero count above height n-1");
      o.expect(t.total() == kTotals[static_cast<std::size_t>(n - 1)], tag + " total");
    }
  }
  return o;
}

Outcome closed_form_all_deltas() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    std::vector<BigInt> reference;
    for (const IncrementFunction& delta : delta_test_set(n)) {
      const CountsTable t = census(delta);
      const std::string tag = "n=" + std::to_string(n) + " delta=" + delta.to_string();
      o.expect(t.disagreements == 0, tag + " classification disagrees with the poset");
      for (int k = 0; k <= n; ++k) o.expect(t.count(k) == closed_form(n, k), tag + " k=" + std::to_string(k));
      if (reference.empty()) reference = t.counts;
      o.expect(t.counts == reference, tag + " differs from the first delta");
    }
  }
  return o;
}

Outcome bijections() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto deltas = delta_test_set(n);
    std::vector<AltTamariPoset> posets;
    for (const auto& d : deltas) posets.push_back(AltTamariPoset::build(d));
    for (std::size_t s = 0; s < deltas.size(); ++s) {
      const IncrementFunction& from = deltas[s];
      const AltTamariPoset& t = posets[s];
      for (std::size_t a = 0; a < t.poset().size(); ++a) {
        const std::vector<int> heights = t.poset().linear_heights_from(a);
        for (std::size_t b = 0; b < t.poset().size(); ++b) {
          if (heights[b] < 0) continue;
          const DyckPath& p = t.path(a);
          const DyckPath& q = t.path(b);
          const std::string tag = from.to_string() + " [" + p.word() + ", " + q.word() + "]";
          const Classification kind = classify(from, p, q);
          if (heights[b] > 0) {
            const Decomposition d = decompose(from, p, q);
            o.expect(compose(from, d) == Interval{p, q}, "compose after decompose " + tag);
            const Interval again = compose(from, d);
            o.expect(decompose(from, again.bottom, again.top) == d, "decompose after compose " + tag);
          }
          for (std::size_t r = 0; r < deltas.size(); ++r) {
            const IncrementFunction& to = deltas[r];
            const Interval moved = transport(from, to, p, q);
            const AltTamariPoset& target = posets[r];
            const std::size_t mb = target.index_of(moved.bottom);
            const std::size_t mt = target.index_of(moved.top);
            o.expect(target.poset().linear_heights_from(mb)[mt] == heights[b], "transport height " + tag + " -> " + to.to_string());
            o.expect(classify(to, moved.bottom, moved.top).kind == kind.kind, "transport kind " + tag);
            if (kind.kind == IntervalKind::Covering || kind.kind == IntervalKind::Left) {
              o.expect(moved.bottom == p, "transport moved the bottom " + tag);
            }
            o.expect(transport(to, from, moved.bottom, moved.top) == Interval{p, q}, "transport inverse " + tag);
          }
        }
      }
    }
  }
  // the reverse direction: every abstract decomposition composes to an interval and back
  for (int n = 2; n <= 6; ++n) {
    for (const IncrementFunction& delta : delta_test_set(n)) {
      for (const DyckPath& p0 : enumerate_paths(n - 1)) {
        for (int mark = 0; mark < p0.length(); ++mark) {
          if (!p0.is_down(mark)) continue;
          const Decomposition d{MarkedPath{p0, mark, Step::Down}, {DyckPath{}}};
          const Interval iv = compose(delta, d);
          o.expect(decompose(delta, iv.bottom, iv.top) == d, "covering decomposition " + to_json(d));
        }
      }
    }
  }
  return o;
}

Outcome covering_is_rotation() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (const IncrementFunction& delta : delta_test_set(n)) {
      const AltTamariPoset t = AltTamariPoset::build(delta);
      std::vector<Cover> rotations;
      for (std::size_t i = 0; i < t.paths().size(); ++i) {
        for (const Rotation& r : upper_covers(delta, t.path(i))) rotations.emplace_back(i, t.index_of(r.result));
      }
      std::sort(rotations.begin(), rotations.end());
      o.expect(rotations == transitive_reduction_of_closure(t.poset()), "n=" + std::to_string(n) + " delta=" + delta.to_string());
      o.expect(BigInt(rotations.size()) == closed_form(n, 1), "cover count n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome refinement() {
  Outcome o;
  const auto deltas = delta_test_set(5);
  std::vector<AltTamariPoset> posets;
  for (const auto& d : deltas) posets.push_back(AltTamariPoset::build(d));
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < deltas.size(); ++a) {
    for (std::size_t b = 0; b < deltas.size(); ++b) {
      if (!deltas[a].pointwise_leq(deltas[b])) continue;
      ++pairs;
      const Poset& fine = posets[a].poset();
      const Poset& coarse = posets[b].poset();
      bool holds = true;
      for (std::size_t x = 0; x < coarse.size(); ++x) {
        for (std::size_t y = 0; y < coarse.size(); ++y) holds = holds && (!coarse.leq(x, y) || fine.leq(x, y));
      }
      o.expect(holds, deltas[a].to_string() + " <= " + deltas[b].to_string());
    }
  }
  o.expect(pairs == 243, "expected 3^5 comparable pairs, saw " + std::to_string(pairs));
  return o;
}

Outcome extremes() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const AltTamariPoset dyck = AltTamariPoset::build(IncrementFunction::zeros(n));
    const AltTamariPoset tam = AltTamariPoset::build(IncrementFunction::ones(n));
    for (const DyckPath& p : dyck.paths()) {
      for (const DyckPath& q : dyck.paths()) o.expect(dyck.leq(p, q) == includes(p, q), "dyck order " + p.word() + " " + q.word());
    }
    const TreeTamari trees = build_tree_tamari(n);
    std::set<DyckPath> image;
    for (std::size_t a = 0; a < trees.trees.size(); ++a) {
      image.insert(tree_to_path(trees.trees[a]));
      for (std::size_t b = 0; b < trees.trees.size(); ++b) {
        o.expect(trees.poset.leq(a, b) == tam.leq(tree_to_path(trees.trees[a]), tree_to_path(trees.trees[b])),
                 "tree order at " + trees.trees[a].to_parens() + " " + trees.trees[b].to_parens());
      }
    }
    o.expect(image.size() == tam.paths().size(), "tree_to_path is not a bijection at n=" + std::to_string(n));
    if (n <= 5) {
      o.expect(is_lattice(dyck.poset()), "dyck is not a lattice at n=" + std::to_string(n));
      o.expect(is_lattice(tam.poset()), "tamari is not a lattice at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome lemmas() {
  Outcome o;
  VerifyOptions options;
  options.n_max = 6;
  options.only = {"lemmas"};
  for (const PropertyReport& r : run_verify(options)) o.expect(r.passed, r.detail);
  const StepStats worked = step_stats(parse_delta("0111010"), parse_dyck("uudduuduuddudd"));
  o.expect(worked.h == std::vector<int>{1, 2, 5, 6, 8, 9, 12}, "worked example h");
  o.expect(worked.ell == std::vector<int>{1, 2, 7, 2, 1, 2, 1}, "worked example ell");
  return o;
}

Outcome series() {
  Outcome o;
  const TruncatedSeries a = solve_tree_series(30);
  for (int n = 0; n <= 30; ++n) o.expect(a[n] == catalan(n), "catalan " + std::to_string(n));
  for (int k = 1; k <= 6; ++k) {
    for (int n = 0; n <= 20; ++n) {
      o.expect(phi_coeff(k, n, PhiRoute::Series, 20) == binomial(k + 2 + 2 * n, n),
               "phi k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  for (int k = 0; k < 25; ++k) {
    const TruncatedSeries s = s_series(k, 25);
    for (int n = k + 1; n <= 25; ++n) {
      o.expect(s[n] == closed_form(n, k), "S_" + std::to_string(k) + " at " + std::to_string(n));
    }
  }
  for (int n = 3; n <= 64; ++n) {
    BigInt sum = 0;
    for (int k = 2; k <= n - 1; ++k) sum += binomial(2 * n - k, n + 1);
    o.expect(sum == binomial(2 * n - 1, n + 2), "telescoping at " + std::to_string(n));
  }
  return o;
}

// Brute force: test every pair, check the interval is a chain by pairwise comparison.
LinearPolynomial brute_polynomial(const Poset& p) {
  LinearPolynomial out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      const auto members = p.interval_elements(a, b);
      bool chain = true;
      for (std::size_t x : members) {
        for (std::size_t y : members) chain = chain && (p.leq(x, y) || p.leq(y, x));
      }
      if (chain) (a == b ? out.trivial : out.nontrivial) += 1;
    }
  }
  return out;
}

Poset random_poset(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::bernoulli_distribution edge(0.35);
  const std::size_t n = size(rng);
  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (edge(rng)) covers.emplace_back(j, i);
    }
  }
  return Poset::build(labels, covers, Reduction::Reduce);
}

Outcome product_law() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const Poset a = random_poset(rng);
    const Poset b = random_poset(rng);
    const Poset ab = product(a, b);
    o.expect(brute_polynomial(ab) == brute_polynomial(a) * brute_polynomial(b), "random pair " + std::to_string(trial));
    o.expect(linear_polynomial(ab) == linear_polynomial(a) * linear_polynomial(b), "random pair " + std::to_string(trial));
  }
  const AltTamariPoset tam = AltTamariPoset::build(IncrementFunction::ones(3));
  const Poset square = product(tam.poset(), tam.poset());
  o.expect(linear_polynomial(tam.poset()) == LinearPolynomial{5, 7}, "Tam_3 polynomial");
  o.expect(brute_polynomial(square) == LinearPolynomial{25, 70}, "Tam_3 x Tam_3 brute force");
  o.expect(linear_polynomial(square) == LinearPolynomial{25, 70}, "Tam_3 x Tam_3");
  return o;
}

Outcome tree_structures() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const TreeTamari tam = build_tree_tamari(n + 1);
    for (const TreeInterval& iv : {build_L(n), build_R(n)}) {
      const std::size_t b = tam.poset.index_of(iv.bottom.to_parens());
      const std::size_t t = tam.poset.index_of(iv.top.to_parens());
      const std::string name = "[" + iv.bottom.to_parens() + ", " + iv.top.to_parens() + "]";
      o.expect(tam.poset.leq(b, t) && tam.poset.is_linear_interval(b, t), name + " not linear");
      o.expect(tam.poset.leq(b, t) && tam.poset.interval_height(b, t) == n, name + " height");
      o.expect(is_new_interval(iv), name + " not new");
    }
  }
  for (int n = 1; n <= 5; ++n) {
    const TreeTamari trees = build_tree_tamari(n);
    for (std::size_t s = 0; s < trees.trees.size(); ++s) {
      const std::size_t ms = trees.poset.index_of(mirror_tree(trees.trees[s]).to_parens());
      for (std::size_t u = 0; u < trees.trees.size(); ++u) {
        const std::size_t mu = trees.poset.index_of(mirror_tree(trees.trees[u]).to_parens());
        o.expect(trees.poset.leq(s, u) == trees.poset.leq(mu, ms), "mirror_tree at " + trees.trees[s].to_parens());
      }
    }
    const auto paths = enumerate_paths(n);
    for (const DyckPath& p : paths) {
      for (const DyckPath& q : paths) {
        o.expect(includes(p, q) == includes(mirror(p), mirror(q)), "mirror at " + p.word() + " " + q.word());
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 interval table n<=7", interval_table},
      {"2 closed form for every delta", closed_form_all_deltas},
      {"3 bijection round trips and transport", bijections},
      {"4 covers are delta-rotations", covering_is_rotation},
      {"5 refinement", refinement},
      {"6 extremes", extremes},
      {"7 delta-excursion lemmas", lemmas},
      {"8 series identities", series},
      {"9 product law", product_law},
      {"10 tree structures", tree_structures},
  };
  std::cout << "bit kernels: " << simd::to_string(simd::active_isa()) << std::endl;
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.first = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  " << name << "  (" << o.checks << " checks, ";
    line.precision(2);
    line << std::fixed << seconds << " s)";
    if (!o.ok) line << "  first failure: " << o.first;
    std::cout << line.str() << std::endl;
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
