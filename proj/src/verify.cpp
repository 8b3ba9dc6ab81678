#include "alttam/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "alttam/bijections.hpp"
#include "alttam/binary_tree.hpp"
#include "alttam/census.hpp"
#include "alttam/error.hpp"
#include "alttam/series.hpp"

namespace alttam {

namespace {

// Collects the first failure; later ones only bump the count.
class Check {
 public:
  explicit Check(std::string name) { report_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
    report_.passed = false;
  }
  void note(std::string detail) { notes_ = std::move(detail); }

  PropertyReport finish() {
    std::ostringstream out;
    out << notes_;
    if (failures_ > 0) out << (notes_.empty() ? "" : "; ") << failures_ << " failure(s), first: " << first_;
    report_.detail = out.str();
    return report_;
  }

 private:
  PropertyReport report_;
  int failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::string describe(const IncrementFunction& delta, const DyckPath& p, const DyckPath& q) {
  return "delta=" + delta.to_string() + " [" + p.word() + ", " + q.word() + "]";
}

PropertyReport check_census(const VerifyOptions& o) {
  Check c("census");
  std::string totals;
  for (int n = 1; n <= o.n_max; ++n) {
    std::vector<BigInt> reference;
    for (const IncrementFunction& delta : delta_test_set(n, o.seed)) {
      const CountsTable t = census(delta, o.jobs);
      c.expect(t.disagreements == 0, "classification disagrees with the poset, delta=" + delta.to_string());
      c.expect(matches_closed_form(t), "census differs from closed form, delta=" + delta.to_string());
      c.expect(t.total() == total_closed_form(n), "total differs from closed form, delta=" + delta.to_string());
      if (reference.empty()) {
        reference = t.counts;
        totals += (totals.empty() ? "" : ",") + t.total().str();
      }
      c.expect(t.counts == reference, "census depends on delta, delta=" + delta.to_string());
      for (int k = 2; k < n; ++k) {
        const auto [left, right] = left_right_split(t, k);
        const BigInt expected = left_right_closed_form(n, k);
        c.expect(left == expected && right == expected,
                 "left/right split at k=" + std::to_string(k) + ", delta=" + delta.to_string());
      }
    }
  }
  c.note("totals " + totals);
  return c.finish();
}

PropertyReport check_bijections(const VerifyOptions& o) {
  Check c("bijections");
  const int top = std::min(o.n_max, 6);
  std::uint64_t checked = 0;
  for (int n = 1; n <= top; ++n) {
    const std::vector<IncrementFunction> deltas = delta_test_set(n, o.seed);
    std::vector<AltTamariPoset> posets;
    for (const IncrementFunction& d : deltas) posets.push_back(AltTamariPoset::build(d));
    for (std::size_t di = 0; di < deltas.size(); ++di) {
      const IncrementFunction& delta = deltas[di];
      const AltTamariPoset& alt = posets[di];
      // partners: both extremes and the next function of the test set
      const std::size_t partners[] = {0, deltas.size() - 1, (di + 1) % deltas.size()};
      for (std::size_t p = 0; p < alt.paths().size(); ++p) {
        const std::vector<int> heights = alt.poset().linear_heights_from(p);
        for (std::size_t q = 0; q < heights.size(); ++q) {
          if (heights[q] < 1) continue;
          const DyckPath& bottom = alt.path(p);
          const DyckPath& upper = alt.path(q);
          const Classification kind = classify(delta, bottom, upper);
          const Decomposition dec = decompose(delta, bottom, upper);
          ++checked;
          c.expect(dec.interval_size() == n, "size bookkeeping " + describe(delta, bottom, upper));
          c.expect(compose(delta, dec) == Interval{bottom, upper}, "round trip " + describe(delta, bottom, upper));
          for (std::size_t pi : partners) {
            const IncrementFunction& other = deltas[pi];
            const Interval image = transport(delta, other, bottom, upper);
            const AltTamariPoset& target = posets[pi];
            const int h = target.poset().linear_heights_from(target.index_of(image.bottom))[target.index_of(image.top)];
            c.expect(h == heights[q], "transport height " + describe(delta, bottom, upper));
            c.expect(classify(other, image.bottom, image.top).kind == kind.kind,
                     "transport kind " + describe(delta, bottom, upper));
            if (kind.kind != IntervalKind::Right) {
              c.expect(image.bottom == bottom, "transport bottom " + describe(delta, bottom, upper));
            }
            c.expect(decompose(other, image.bottom, image.top) == dec,
                     "decompose after compose " + describe(delta, bottom, upper));
            c.expect(transport(other, delta, image.bottom, image.top) == Interval{bottom, upper},
                     "transport inverse " + describe(delta, bottom, upper));
          }
        }
      }
    }
  }
  c.note(std::to_string(checked) + " intervals, n<=" + std::to_string(top));
  return c.finish();
}

PropertyReport check_covering(const VerifyOptions& o) {
  Check c("covering");
  const int top = std::min(o.n_max, 6);
  for (int n = 1; n <= top; ++n) {
    for (const IncrementFunction& delta : delta_test_set(n, o.seed)) {
      const AltTamariPoset alt = AltTamariPoset::build(delta);
      std::vector<Cover> rotations;
      for (std::size_t i = 0; i < alt.paths().size(); ++i) {
        for (const Rotation& r : upper_covers(delta, alt.path(i))) rotations.emplace_back(i, alt.index_of(r.result));
      }
      std::sort(rotations.begin(), rotations.end());
      c.expect(rotations == transitive_reduction_of_closure(alt.poset()),
               "rotation graph is not its own reduction, delta=" + delta.to_string());
      c.expect(BigInt(rotations.size()) == closed_form(n, 1), "cover count, delta=" + delta.to_string());
      // delta(1) and delta(n) never influence a rotation
      for (int flip : {1, n}) {
        std::vector<std::uint8_t> values = delta.values();
        values[static_cast<std::size_t>(flip - 1)] ^= 1U;
        const AltTamariPoset flipped = AltTamariPoset::build(IncrementFunction(values));
        c.expect(flipped.poset().covers() == alt.poset().covers(),
                 "delta(" + std::to_string(flip) + ") changes the covers, delta=" + delta.to_string());
      }
    }
  }
  return c.finish();
}

PropertyReport check_refinement(const VerifyOptions& o) {
  Check c("refinement");
  const int top = std::min(o.n_max, 5);
  std::uint64_t pairs = 0;
  for (int n = 1; n <= top; ++n) {
    const std::vector<IncrementFunction> deltas = delta_test_set(n, o.seed);
    std::vector<AltTamariPoset> posets;
    for (const IncrementFunction& d : deltas) posets.push_back(AltTamariPoset::build(d));
    for (std::size_t a = 0; a < deltas.size(); ++a) {
      for (std::size_t b = 0; b < deltas.size(); ++b) {
        if (!deltas[a].pointwise_leq(deltas[b])) continue;
        ++pairs;
        c.expect(refines(posets[a], posets[b]),
                 "Tam^" + deltas[b].to_string() + " not refined by Tam^" + deltas[a].to_string());
      }
    }
  }
  c.note(std::to_string(pairs) + " pairs, n<=" + std::to_string(top));
  return c.finish();
}

PropertyReport check_extremes(const VerifyOptions& o) {
  Check c("extremes");
  const int top = std::min(o.n_max, 6);
  for (int n = 1; n <= top; ++n) {
    const AltTamariPoset dyck = AltTamariPoset::build(IncrementFunction::zeros(n));
    const AltTamariPoset tamari = AltTamariPoset::build(IncrementFunction::ones(n));
    const TreeTamari trees = build_tree_tamari(n);
    std::vector<std::size_t> image(trees.trees.size());
    for (std::size_t t = 0; t < trees.trees.size(); ++t) image[t] = tamari.index_of(tree_to_path(trees.trees[t]));
    c.expect(std::set<std::size_t>(image.begin(), image.end()).size() == image.size(),
             "tree encoding is not injective at n=" + std::to_string(n));
    for (std::size_t i = 0; i < dyck.paths().size(); ++i) {
      for (std::size_t j = 0; j < dyck.paths().size(); ++j) {
        c.expect(dyck.poset().leq(i, j) == includes(dyck.path(i), dyck.path(j)),
                 "Dyck order differs from inclusion at " + dyck.path(i).word() + ", " + dyck.path(j).word());
      }
    }
    for (std::size_t s = 0; s < image.size(); ++s) {
      for (std::size_t t = 0; t < image.size(); ++t) {
        c.expect(trees.poset.leq(s, t) == tamari.poset().leq(image[s], image[t]),
                 "tree order differs at " + trees.trees[s].to_parens() + ", " + trees.trees[t].to_parens());
      }
    }
    if (n <= 5) {
      c.expect(is_lattice(dyck.poset()), "Dyck poset is not a lattice at n=" + std::to_string(n));
      c.expect(is_lattice(tamari.poset()), "Tamari poset is not a lattice at n=" + std::to_string(n));
    }
  }
  return c.finish();
}

// Checks the delta-excursion lemmas on one path and each of its rotations.
void check_path_lemmas(Check& c, const IncrementFunction& delta, const DyckPath& p) {
  const int n = p.size();
  const StepStats sp = step_stats(delta, p);
  auto end_of = [&](const StepStats& s, int j) { return s.h[static_cast<std::size_t>(j)] + s.ell[static_cast<std::size_t>(j)] - 1; };
  auto inside = [&](const StepStats& s, int outer, int inner) {
    return s.h[static_cast<std::size_t>(outer)] <= s.h[static_cast<std::size_t>(inner)] &&
           s.h[static_cast<std::size_t>(inner)] <= end_of(s, outer);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool disjoint = end_of(sp, i) < sp.h[static_cast<std::size_t>(j)];
      const bool nested = end_of(sp, j) < end_of(sp, i);
      c.expect(disjoint || nested, "excursions cross on " + p.word());
    }
  }
  for (const Rotation& r : upper_covers(delta, p)) {
    const StepStats sq = step_stats(delta, r.result);
    const int i = r.label - 1;
    const int valley_d = sp.h[static_cast<std::size_t>(i)] - 1;  // 1-based position of the d
    for (int j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      const int dh = inside(sp, i, j) ? 1 : 0;
      c.expect(sq.h[ju] == sp.h[ju] - dh, "h rule on " + describe(delta, p, r.result));
      const int dl = end_of(sp, j) == valley_d ? sp.ell[static_cast<std::size_t>(i)] : 0;
      c.expect(sq.ell[ju] == sp.ell[ju] + dl, "ell rule on " + describe(delta, p, r.result));
      c.expect(sq.h[ju] <= sp.h[ju] && sq.ell[ju] >= sp.ell[ju], "monotonicity on " + describe(delta, p, r.result));
      for (int m = 0; m < n; ++m) {
        if (m != j && inside(sp, j, m)) {
          c.expect(inside(sq, j, m), "membership lost on " + describe(delta, p, r.result));
        }
      }
    }
  }
}

PropertyReport check_lemmas(const VerifyOptions& o) {
  Check c("lemmas");
  const int top = std::min(o.n_max, 6);
  for (int n = 1; n <= top; ++n) {
    for (const IncrementFunction& delta : delta_test_set(n, o.seed)) {
      for (const DyckPath& p : enumerate_paths(n)) check_path_lemmas(c, delta, p);
    }
  }
  const StepStats example = step_stats(parse_delta("0111010"), parse_dyck("uudduuduuddudd"));
  c.expect(example.h == std::vector<int>{1, 2, 5, 6, 8, 9, 12}, "worked example h vector");
  c.expect(example.ell == std::vector<int>{1, 2, 7, 2, 1, 2, 1}, "worked example ell vector");
  return c.finish();
}

PropertyReport check_mirror(const VerifyOptions& o) {
  Check c("mirror");
  const int top = std::min(o.n_max, 5);
  for (int n = 1; n <= top; ++n) {
    const std::vector<DyckPath> paths = enumerate_paths(n);
    for (const DyckPath& p : paths) {
      c.expect(mirror(mirror(p)) == p, "mirror is not an involution on " + p.word());
      for (const DyckPath& q : paths) {
        if (includes(p, q)) c.expect(includes(mirror(p), mirror(q)), "mirror breaks inclusion at " + p.word());
      }
    }
    const TreeTamari trees = build_tree_tamari(n);
    for (std::size_t s = 0; s < trees.trees.size(); ++s) {
      const BinaryTree& t = trees.trees[s];
      c.expect(mirror_tree(mirror_tree(t)) == t, "mirror_tree is not an involution on " + t.to_parens());
      const std::size_t ms = trees.poset.index_of(mirror_tree(t).to_parens());
      for (std::size_t u = 0; u < trees.trees.size(); ++u) {
        const std::size_t mu = trees.poset.index_of(mirror_tree(trees.trees[u]).to_parens());
        c.expect(trees.poset.leq(s, u) == trees.poset.leq(mu, ms), "mirror_tree does not reverse order at " + t.to_parens());
      }
    }
  }
  return c.finish();
}

PropertyReport check_trees(const VerifyOptions& o) {
  Check c("trees");
  const int top = std::min(o.n_max, 6);
  for (int n = 1; n <= top; ++n) {
    const TreeTamari tam = build_tree_tamari(n + 1);
    for (const TreeInterval& iv : {build_L(n), build_R(n)}) {
      const std::size_t b = tam.poset.index_of(iv.bottom.to_parens());
      const std::size_t t = tam.poset.index_of(iv.top.to_parens());
      const std::string name = "[" + iv.bottom.to_parens() + ", " + iv.top.to_parens() + "]";
      c.expect(tam.poset.leq(b, t), name + " is not an interval");
      if (!tam.poset.leq(b, t)) continue;
      c.expect(tam.poset.is_linear_interval(b, t), name + " is not linear");
      c.expect(tam.poset.interval_height(b, t) == n, name + " has the wrong height");
      c.expect(is_new_interval(iv), name + " is not new");
    }
  }
  return c.finish();
}

PropertyReport check_series(const VerifyOptions&) {
  Check c("series");
  const TruncatedSeries a = solve_tree_series(kDefaultSeriesOrder);
  for (int n = 0; n <= 30; ++n) c.expect(a[n] == catalan(n), "tree series at t^" + std::to_string(n));
  const TruncatedSeries marked = marked_series(kDefaultSeriesOrder);
  for (int n = 0; n <= kDefaultSeriesOrder; ++n) c.expect(marked[n] == n * catalan(n), "marked series at t^" + std::to_string(n));

  const TruncatedSeries one = TruncatedSeries::constant(1, kDefaultSeriesOrder);
  const TruncatedSeries b = a - one;
  c.expect(b.derivative() * (one - b) == (b + one).pow(3), "B'(1 - B) = (B + 1)^3");

  constexpr int kPhiOrder = 20;
  const TruncatedSeries b20 = solve_tree_series(kPhiOrder) - TruncatedSeries::constant(1, kPhiOrder);
  for (int k = 1; k <= 6; ++k) {
    const TruncatedSeries composed = phi_series(k, kPhiOrder).compose(b20);
    for (int n = 0; n <= kPhiOrder; ++n) {
      const BigInt binom = phi_coeff(k, n, PhiRoute::Binomial, kPhiOrder);
      c.expect(composed[n] == binom && phi_coeff(k, n, PhiRoute::Lagrange, kPhiOrder) == binom,
               "phi_" + std::to_string(k) + " at t^" + std::to_string(n));
    }
  }
  for (int k = 0; k < 25; ++k) {
    const TruncatedSeries s = s_series(k, 25);
    for (int n = k + 1; n <= 25; ++n) {
      c.expect(s[n] == closed_form(n, k), "S_" + std::to_string(k) + " at t^" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 64; ++n) {
    BigInt sum = 0;
    for (int k = 2; k < n; ++k) sum += binomial(2L * n - k, n + 1L);
    c.expect(sum == binomial(2L * n - 1, n + 2L), "telescoping sum at n=" + std::to_string(n));
  }
  return c.finish();
}

using Runner = std::function<PropertyReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"census", check_census},         {"bijections", check_bijections}, {"covering", check_covering},
      {"refinement", check_refinement}, {"extremes", check_extremes},     {"lemmas", check_lemmas},
      {"mirror", check_mirror},         {"trees", check_trees},           {"series", check_series},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : runners()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<PropertyReport> run_verify(const VerifyOptions& options) {
  for (const std::string& name : options.only) {
    if (std::find(property_names().begin(), property_names().end(), name) == property_names().end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown property '" + name + "'");
    }
  }
  if (options.n_max < 1) throw Error(ErrorKind::InvalidArgument, "n-max must be at least 1");
  if (options.n_max > poset_cap()) {
    throw Error(ErrorKind::SizeTooLarge, "n-max " + std::to_string(options.n_max) + " exceeds poset cap");
  }
  std::vector<PropertyReport> out;
  for (const auto& [name, run] : runners()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), name) == options.only.end()) {
      continue;
    }
    out.push_back(run(options));
  }
  return out;
}

}  // namespace alttam
