#include "alttam/census.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "alttam/error.hpp"

namespace alttam {

std::string to_string(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::Trivial: return "trivial";
    case IntervalKind::Covering: return "covering";
    case IntervalKind::Left: return "left";
    case IntervalKind::Right: return "right";
    case IntervalKind::NotLinear: return "not-linear";
  }
  return "unknown";
}

Classification classify(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top) {
  if (bottom.size() != top.size() || delta.size() != bottom.size()) {
    throw Error(ErrorKind::SizeMismatch, "classify needs paths and increment function of one size");
  }
  if (bottom == top) return {IntervalKind::Trivial, 0, 0};
  const int len = bottom.length();
  int a = 0;
  while (bottom[a] == top[a]) ++a;
  if (!bottom.is_down(a) || !top.is_up(a)) return {};

  Word word = bottom.steps();
  int run = 0;
  while (a + run < len && bottom.is_down(a + run)) ++run;
  if (a + run >= len) return {};

  // label of the first up step after `a`
  int label = 1;
  for (int i = 0; i < a; ++i) label += bottom.is_up(i) ? 1 : 0;

  if (run >= 2) {
    const int c = delta_excursion_length(delta, word, a + run, label);
    // Q = A C d^run B
    for (int i = 0; i < c; ++i) {
      if (top[a + i] != bottom[a + run + i]) return {};
    }
    for (int i = 0; i < run; ++i) {
      if (!top.is_down(a + c + i)) return {};
    }
    for (int i = a + run + c; i < len; ++i) {
      if (top[i] != bottom[i]) return {};
    }
    return {IntervalKind::Left, run, a};
  }

  // run == 1: read consecutive delta-excursions after the d and look for the
  // point where Q puts the d back.
  int cursor = a + 1;
  int k = 0;
  int shifted_ok_until = a;  // Q[a..x) == P[a+1..x+1) verified for x < this
  while (cursor < len && bottom.is_up(cursor)) {
    int up_label = label;
    for (int i = a + 1; i < cursor; ++i) up_label += bottom.is_up(i) ? 1 : 0;
    const int c = delta_excursion_length(delta, word, cursor, up_label);
    cursor += c;
    ++k;
    // Q[x] must equal P[x + 1] on [a, cursor - 1)
    for (; shifted_ok_until < cursor - 1; ++shifted_ok_until) {
      if (top[shifted_ok_until] != bottom[shifted_ok_until + 1]) return {};
    }
    if (!top.is_down(cursor - 1)) continue;
    bool tail_equal = true;
    for (int i = cursor; i < len && tail_equal; ++i) tail_equal = top[i] == bottom[i];
    if (tail_equal) return {k == 1 ? IntervalKind::Covering : IntervalKind::Right, k, a};
  }
  return {};
}

BigInt CountsTable::count(int height) const {
  if (height < 0 || static_cast<std::size_t>(height) >= counts.size()) return 0;
  return counts[static_cast<std::size_t>(height)];
}

BigInt CountsTable::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts) sum += c;
  return sum;
}

namespace {

struct Tally {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> left;
  std::vector<std::uint64_t> right;
  std::uint64_t disagreements = 0;
  std::uint64_t comparable = 0;

  explicit Tally(std::size_t heights) : counts(heights, 0), left(heights, 0), right(heights, 0) {}

  void bump(std::vector<std::uint64_t>& v, int h) {
    if (static_cast<std::size_t>(h) >= v.size()) v.resize(static_cast<std::size_t>(h) + 1, 0);
    ++v[static_cast<std::size_t>(h)];
  }

  void merge(const Tally& other) {
    auto add = [](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
      if (from.size() > into.size()) into.resize(from.size(), 0);
      for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
    };
    add(counts, other.counts);
    add(left, other.left);
    add(right, other.right);
    disagreements += other.disagreements;
    comparable += other.comparable;
  }
};

void tally_bottom(const AltTamariPoset& alt, std::size_t p, Tally& tally) {
  const Poset& poset = alt.poset();
  const std::vector<int> heights = poset.linear_heights_from(p);
  for (std::size_t q : simd::set_bits(poset.up_set(p))) {
    ++tally.comparable;
    const Classification c = classify(alt.delta(), alt.path(p), alt.path(q));
    const int h = heights[q];
    if (c.height != h) ++tally.disagreements;
    if (h < 0) continue;
    tally.bump(tally.counts, h);
    if (c.kind == IntervalKind::Left) tally.bump(tally.left, h);
    if (c.kind == IntervalKind::Right) tally.bump(tally.right, h);
  }
}

}  // namespace

CountsTable census(const AltTamariPoset& poset, int jobs) {
  const int n = poset.n();
  const std::size_t elements = poset.paths().size();
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  std::vector<Tally> partial(workers, Tally(static_cast<std::size_t>(n)));
  if (workers == 1) {
    for (std::size_t p = 0; p < elements; ++p) tally_bottom(poset, p, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t p = w; p < elements; p += workers) tally_bottom(poset, p, partial[w]);
      });
    }
    for (auto& t : threads) t.join();
  }
  Tally total(static_cast<std::size_t>(n));
  for (const Tally& t : partial) total.merge(t);

  CountsTable table;
  table.n = n;
  table.delta = poset.delta();
  table.counts.assign(total.counts.begin(), total.counts.end());
  table.left_counts = std::move(total.left);
  table.right_counts = std::move(total.right);
  table.disagreements = total.disagreements;
  table.comparable_pairs = total.comparable;
  return table;
}

CountsTable census(const IncrementFunction& delta, int jobs) {
  return census(AltTamariPoset::build(delta), jobs);
}

BigInt closed_form(int n, int k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "closed form needs n >= 1");
  if (k < 0) throw Error(ErrorKind::HeightOutOfRange, "negative height");
  if (k == 0) return catalan(n);
  if (k == 1) return binomial(2L * n - 1, n - 2L);
  if (k < n) return 2 * binomial(2L * n - k, static_cast<long>(n) - k - 1);
  return 0;
}

BigInt total_closed_form(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "closed form needs n >= 1");
  return catalan(n) + binomial(2L * n - 1, n - 2L) + 2 * binomial(2L * n - 1, n + 2L);
}

std::pair<std::uint64_t, std::uint64_t> left_right_split(const CountsTable& table, int k) {
  if (k < 2 || k >= table.n) {
    throw Error(ErrorKind::HeightOutOfRange, "left/right split needs 2 <= k < n");
  }
  auto at = [k](const std::vector<std::uint64_t>& v) {
    return static_cast<std::size_t>(k) < v.size() ? v[static_cast<std::size_t>(k)] : 0;
  };
  return {at(table.left_counts), at(table.right_counts)};
}

std::pair<std::uint64_t, std::uint64_t> left_right_split(const IncrementFunction& delta, int k, int jobs) {
  if (k < 2 || k >= delta.size()) {
    throw Error(ErrorKind::HeightOutOfRange, "left/right split needs 2 <= k < n");
  }
  return left_right_split(census(delta, jobs), k);
}

BigInt left_right_closed_form(int n, int k) {
  if (k < 2 || k >= n) throw Error(ErrorKind::HeightOutOfRange, "left/right split needs 2 <= k < n");
  return binomial(2L * n - k, n + 1L);
}

std::vector<TableRow> table_rows(const CountsTable& table) {
  const std::size_t heights = std::max(static_cast<std::size_t>(table.n), table.counts.size());
  std::vector<TableRow> rows;
  for (std::size_t h = 0; h < heights; ++h) {
    TableRow row;
    row.height = static_cast<int>(h);
    row.count = table.count(row.height);
    row.expected = closed_form(table.n, row.height);
    row.match = row.count == row.expected;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool matches_closed_form(const CountsTable& table) {
  if (table.disagreements != 0) return false;
  const auto rows = table_rows(table);
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match; });
}

std::string to_csv(const std::vector<CountsTable>& tables) {
  std::ostringstream out;
  out << "n,delta,height,count,closed_form,match\n";
  for (const CountsTable& t : tables) {
    for (const TableRow& r : table_rows(t)) {
      out << t.n << ',' << t.delta.to_string() << ',' << r.height << ',' << r.count << ',' << r.expected << ','
          << (r.match ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string to_json(const std::vector<CountsTable>& tables) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CountsTable& t : tables) {
    for (const TableRow& r : table_rows(t)) {
      // counts go out as strings so big values survive any JSON reader
      rows.push_back({{"n", t.n},
                      {"delta", t.delta.to_string()},
                      {"height", r.height},
                      {"count", r.count.str()},
                      {"closed_form", r.expected.str()},
                      {"match", r.match}});
    }
  }
  return rows.dump(2);
}

}  // namespace alttam
