#include "alttam/poset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

#include "alttam/error.hpp"

namespace alttam {

Poset Poset::build(std::vector<std::string> labels, std::vector<Cover> covers, Reduction reduction) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second) {
      throw Error(ErrorKind::DuplicateElement, "element '" + p.labels_[i] + "' appears twice");
    }
  }
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error(ErrorKind::IndexOutOfRange, "cover endpoint out of range");
    if (lo == hi) throw Error(ErrorKind::CycleDetected, "self-loop on '" + p.labels_[lo] + "'");
  }

  std::sort(covers.begin(), covers.end());
  const std::size_t before_dedup = covers.size();
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::size_t duplicates = before_dedup - covers.size();

  std::vector<std::vector<std::size_t>> up_adj(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : covers) {
    up_adj[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn; the smallest ready index goes first so the order is deterministic.
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::make_heap(ready.begin(), ready.end(), std::greater<>{});
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
    std::size_t v = ready.back();
    ready.pop_back();
    p.topo_.push_back(v);
    for (std::size_t w : up_adj[v]) {
      if (--indegree[w] == 0) {
        ready.push_back(w);
        std::push_heap(ready.begin(), ready.end(), std::greater<>{});
      }
    }
  }
  if (p.topo_.size() != n) throw Error(ErrorKind::CycleDetected, "cover relation has a cycle");
  p.rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) p.rank_[p.topo_[r]] = r;

  p.up_ = simd::BitMatrix(n, n);
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    std::size_t v = *it;
    p.up_.set(v, v);
    for (std::size_t w : up_adj[v]) p.up_.or_row_into(v, w);
  }

  // A cover (v, w) is implied when w lies above another upper neighbour of v.
  std::size_t redundant = 0;
  std::vector<Cover> kept;
  kept.reserve(covers.size());
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : up_adj[v]) {
      bool implied = std::any_of(up_adj[v].begin(), up_adj[v].end(),
                                 [&](std::size_t other) { return other != w && p.up_.test(other, w); });
      if (implied) {
        ++redundant;
      } else {
        kept.emplace_back(v, w);
      }
    }
  }
  if (reduction == Reduction::Assert && (redundant + duplicates) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(redundant + duplicates) + " cover(s) are implied by other covers");
  }
  p.removed_redundant_ = redundant + duplicates;
  std::sort(kept.begin(), kept.end());
  p.covers_ = std::move(kept);

  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (const auto& [lo, hi] : p.covers_) {
    p.upper_[lo].push_back(hi);
    p.lower_[hi].push_back(lo);
  }

  p.down_ = simd::BitMatrix(n, n);
  for (std::size_t v : p.topo_) {
    p.down_.set(v, v);
    for (std::size_t lo : p.lower_[v]) p.down_.or_row_into(v, lo);
  }
  return p;
}

void Poset::check_index(std::size_t i) const {
  if (i >= size()) throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(i));
}

std::size_t Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "no element '" + label + "'");
  return it->second;
}

bool Poset::leq(std::size_t a, std::size_t b) const {
  check_index(a);
  check_index(b);
  return up_.test(a, b);
}

std::vector<std::size_t> Poset::interval_elements(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) return {};
  std::vector<std::uint64_t> row(up_.stride());
  simd::and_into(row, up_.row(a), down_.row(b));
  return simd::set_bits(row);
}

std::size_t Poset::interval_size(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) return 0;
  return simd::and_popcount(up_.row(a), down_.row(b));
}

int Poset::interval_height(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw Error(ErrorKind::NotComparable, label(a) + " is not below " + label(b));
  std::vector<std::size_t> members = interval_elements(a, b);
  std::sort(members.begin(), members.end(),
            [&](std::size_t x, std::size_t y) { return rank_[x] < rank_[y]; });
  std::vector<int> dist(size(), -1);
  dist[a] = 0;
  for (std::size_t x : members) {
    if (dist[x] < 0) continue;
    for (std::size_t y : upper_[x]) {
      if (up_.test(y, b)) dist[y] = std::max(dist[y], dist[x] + 1);
    }
  }
  return dist[b];
}

bool Poset::is_linear_interval(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw Error(ErrorKind::NotComparable, label(a) + " is not below " + label(b));
  std::vector<std::uint64_t> interval(up_.stride());
  simd::and_into(interval, up_.row(a), down_.row(b));
  const std::size_t m = simd::popcount(interval);
  for (std::size_t x : simd::set_bits(interval)) {
    // x itself is counted on both sides
    std::size_t comparable = simd::and_popcount(up_.row(x), interval) + simd::and_popcount(down_.row(x), interval) - 1;
    if (comparable != m) return false;
  }
  return true;
}

bool Poset::has_unique_maximal_chain(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw Error(ErrorKind::NotComparable, label(a) + " is not below " + label(b));
  std::vector<std::size_t> members = interval_elements(a, b);
  std::sort(members.begin(), members.end(),
            [&](std::size_t x, std::size_t y) { return rank_[x] < rank_[y]; });
  // saturating path counts: 0, 1, or 2 meaning "more than one"
  std::vector<int> chains(size(), 0);
  chains[a] = 1;
  for (std::size_t x : members) {
    if (chains[x] == 0) continue;
    for (std::size_t y : upper_[x]) {
      if (up_.test(y, b)) chains[y] = std::min(2, chains[y] + chains[x]);
    }
  }
  return chains[b] == 1;
}

std::vector<int> Poset::linear_heights_from(std::size_t a) const {
  check_index(a);
  std::vector<int> height(size(), -1);
  height[a] = 0;
  for (std::size_t r = rank_[a] + 1; r < topo_.size(); ++r) {
    std::size_t q = topo_[r];
    if (!up_.test(a, q)) continue;
    // [a, q] is a chain iff q has exactly one lower cover above a and the
    // interval below that cover is itself a chain.
    std::size_t below = 0;
    std::size_t last = 0;
    for (std::size_t lo : lower_[q]) {
      if (up_.test(a, lo)) {
        ++below;
        last = lo;
      }
    }
    if (below == 1 && height[last] >= 0) height[q] = height[last] + 1;
  }
  return height;
}

Poset product(const Poset& a, const Poset& b) {
  const std::size_t nb = b.size();
  std::vector<std::string> labels;
  labels.reserve(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  std::vector<Cover> covers;
  for (const auto& [lo, hi] : a.covers()) {
    for (std::size_t j = 0; j < nb; ++j) covers.emplace_back(lo * nb + j, hi * nb + j);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& [lo, hi] : b.covers()) covers.emplace_back(i * nb + lo, i * nb + hi);
  }
  return Poset::build(std::move(labels), std::move(covers), Reduction::Assert);
}

std::vector<std::uint64_t> linear_interval_histogram(const Poset& poset) {
  std::vector<std::uint64_t> hist(1, 0);
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (int h : poset.linear_heights_from(a)) {
      if (h < 0) continue;
      if (static_cast<std::size_t>(h) >= hist.size()) hist.resize(static_cast<std::size_t>(h) + 1, 0);
      ++hist[static_cast<std::size_t>(h)];
    }
  }
  return hist;
}

LinearPolynomial linear_polynomial(const Poset& poset) {
  std::vector<std::uint64_t> hist = linear_interval_histogram(poset);
  LinearPolynomial out;
  out.trivial = hist[0];
  for (std::size_t h = 1; h < hist.size(); ++h) out.nontrivial += hist[h];
  return out;
}

namespace {

// Least element of a nonempty set of elements, if it has one. A least element
// is first in every topological order, so only one candidate needs checking.
bool has_least(const Poset& poset, std::span<const std::uint64_t> set, bool upward) {
  std::vector<std::size_t> members = simd::set_bits(set);
  if (members.empty()) return false;
  auto earlier = [&](std::size_t x, std::size_t y) {
    return upward ? poset.topological_rank(x) < poset.topological_rank(y)
                  : poset.topological_rank(x) > poset.topological_rank(y);
  };
  std::size_t candidate = *std::min_element(members.begin(), members.end(), earlier);
  auto reach = upward ? poset.up_set(candidate) : poset.down_set(candidate);
  return simd::is_subset(set, reach);
}

}  // namespace

bool is_lattice(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n == 0) return false;
  std::vector<std::uint64_t> common(poset.up_set(0).size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      simd::and_into(common, poset.up_set(a), poset.up_set(b));
      if (!has_least(poset, common, true)) return false;
      simd::and_into(common, poset.down_set(a), poset.down_set(b));
      if (!has_least(poset, common, false)) return false;
    }
  }
  return true;
}

std::vector<Cover> transitive_reduction_of_closure(const Poset& poset) {
  // b covers a iff a < b and the strict interval (a, b) is empty.
  std::vector<Cover> out;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b : simd::set_bits(poset.up_set(a))) {
      if (a != b && poset.interval_size(a, b) == 2) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const Poset& poset, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << poset.label(i) << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const Poset& poset) {
  nlohmann::json j;
  j["elements"] = poset.labels();
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return j.dump();
}

}  // namespace alttam
