#include <gtest/gtest.h>

#include <map>
#include <set>

#include "alttam/bijections.hpp"
#include "alttam/error.hpp"

using namespace alttam;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an alttam::Error";
  return ErrorKind::InvalidArgument;
}

// Every tuple of Dyck paths with the given sizes.
void tuples(const std::vector<int>& sizes, std::size_t at, std::vector<DyckPath>& cur,
            std::vector<std::vector<DyckPath>>& out) {
  if (at == sizes.size()) {
    out.push_back(cur);
    return;
  }
  for (const DyckPath& p : enumerate_paths(sizes[at])) {
    cur.push_back(p);
    tuples(sizes, at + 1, cur, out);
    cur.pop_back();
  }
}

// Compositions of `total` into `parts` non-negative integers.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int s = 0; s <= total; ++s) {
    cur.push_back(s);
    compositions(total - s, parts, cur, out);
    cur.pop_back();
  }
}

// All well-formed decompositions of size n and height k, built from scratch.
std::vector<Decomposition> all_decompositions(int n, int k) {
  std::vector<Decomposition> out;
  for (int s0 = 1; s0 + k <= n; ++s0) {
    std::vector<std::vector<int>> sizes;
    std::vector<int> cur;
    compositions(n - k - s0, k, cur, sizes);
    for (const DyckPath& p0 : enumerate_paths(s0)) {
      for (int mark = 0; mark < p0.length(); ++mark) {
        if (p0.is_up(mark) && k < 2) continue;
        for (const auto& sz : sizes) {
          std::vector<std::vector<DyckPath>> part_lists;
          std::vector<DyckPath> tmp;
          tuples(sz, 0, tmp, part_lists);
          for (auto& parts : part_lists) out.push_back(Decomposition{MarkedPath{p0, mark, p0[mark]}, parts});
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(MarkedPath, TextRoundTrip) {
  const MarkedPath m{parse_dyck("udud"), 1, Step::Down};
  EXPECT_EQ(to_string(m), "u d* u d");
  EXPECT_EQ(parse_marked("u d* u d"), m);
  EXPECT_EQ(parse_marked("ud*ud"), m);
  EXPECT_EQ(parse_marked("u*d").mark_kind, Step::Up);
  EXPECT_EQ(kind_of([] { parse_marked("udud"); }), ErrorKind::BadAlphabet);
  EXPECT_EQ(kind_of([] { parse_marked("u*d*"); }), ErrorKind::BadAlphabet);
  EXPECT_EQ(kind_of([] { parse_marked("*ud"); }), ErrorKind::BadAlphabet);
  EXPECT_EQ(kind_of([] { parse_marked("ud*d"); }), ErrorKind::NonDyckWord);
}

TEST(Decomposition, Examples) {
  const IncrementFunction ones = IncrementFunction::ones(4);
  const Decomposition d = decompose(ones, parse_dyck("udududud"), parse_dyck("uudududd"));
  EXPECT_EQ(d.kind(), IntervalKind::Right);
  EXPECT_EQ(d.height(), 3);
  EXPECT_EQ(d.interval_size(), 4);
  EXPECT_EQ(to_json(d), R"({"kind":"right","marked":"u d*","parts":["","",""]})");

  const Decomposition cover{parse_marked("u d*"), {parse_dyck("")}};
  EXPECT_EQ(compose(IncrementFunction::ones(2), cover), (Interval{parse_dyck("udud"), parse_dyck("uudd")}));

  const Decomposition left = decompose(IncrementFunction::ones(3), parse_dyck("uuddud"), parse_dyck("uuuddd"));
  EXPECT_EQ(left.kind(), IntervalKind::Left);
  EXPECT_EQ(to_string(left.marked), "u* d");
  EXPECT_EQ(left.parts, (std::vector<DyckPath>{parse_dyck(""), parse_dyck("")}));
}

TEST(Decomposition, Errors) {
  const IncrementFunction ones = IncrementFunction::ones(3);
  const DyckPath bottom = parse_dyck("ududud");
  EXPECT_EQ(kind_of([&] { decompose(ones, bottom, parse_dyck("uuuddd")); }), ErrorKind::NotLinear);
  EXPECT_EQ(kind_of([&] { decompose(ones, bottom, bottom); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { decompose_covering(ones, parse_dyck("uuddud"), parse_dyck("uuuddd")); }),
            ErrorKind::NotACovering);
  EXPECT_EQ(kind_of([&] { decompose_left(ones, bottom, parse_dyck("uduudd")); }), ErrorKind::NotLeft);
  EXPECT_EQ(kind_of([&] { decompose_right(ones, bottom, parse_dyck("uduudd")); }), ErrorKind::NotRight);

  const Decomposition cover{parse_marked("u d*"), {parse_dyck("")}};
  EXPECT_EQ(kind_of([&] { compose(ones, cover); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([&] { compose_left(IncrementFunction::ones(2), cover); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { compose_right(IncrementFunction::ones(2), cover); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { transport(ones, IncrementFunction::ones(4), bottom, bottom); }), ErrorKind::SizeMismatch);
}

TEST(Bijection, ComposeIsABijectionOntoLinearIntervals) {
  for (int n = 2; n <= 6; ++n) {
    for (const IncrementFunction& delta : delta_test_set(n)) {
      for (int k = 1; k < n; ++k) {
        const auto all = all_decompositions(n, k);
        EXPECT_EQ(BigInt(all.size()), closed_form(n, k)) << n << ' ' << k;
        std::set<std::pair<std::string, std::string>> images;
        std::map<IntervalKind, std::size_t> by_kind;
        for (const Decomposition& d : all) {
          const Interval iv = compose(delta, d);
          const Classification c = classify(delta, iv.bottom, iv.top);
          ASSERT_EQ(c.kind, d.kind()) << delta.to_string() << ' ' << to_json(d);
          ASSERT_EQ(c.height, k);
          ASSERT_EQ(decompose(delta, iv.bottom, iv.top), d) << delta.to_string() << ' ' << to_json(d);
          images.emplace(iv.bottom.word(), iv.top.word());
          ++by_kind[d.kind()];
        }
        EXPECT_EQ(images.size(), all.size());
        if (k >= 2) {
          EXPECT_EQ(BigInt(by_kind[IntervalKind::Left]), left_right_closed_form(n, k));
          EXPECT_EQ(BigInt(by_kind[IntervalKind::Right]), left_right_closed_form(n, k));
        }
      }
    }
  }
}

TEST(Bijection, DecomposeRoundTripsOnEveryLinearInterval) {
  for (int n = 1; n <= 6; ++n) {
    for (const IncrementFunction& delta : delta_test_set(n)) {
      const AltTamariPoset t = AltTamariPoset::build(delta);
      const Poset& p = t.poset();
      for (std::size_t a = 0; a < p.size(); ++a) {
        const std::vector<int> heights = p.linear_heights_from(a);
        for (std::size_t b = 0; b < p.size(); ++b) {
          if (heights[b] <= 0) continue;
          const Decomposition d = decompose(delta, t.path(a), t.path(b));
          ASSERT_EQ(d.height(), heights[b]);
          ASSERT_EQ(d.interval_size(), n);
          ASSERT_EQ(compose(delta, d), (Interval{t.path(a), t.path(b)}));
        }
      }
    }
  }
}

TEST(Bijection, RightIntervalsWithNonEmptyTrailingSegment) {
  // with some delta(i) = 0 a part can be longer than its delta-excursion; the
  // leftover goes after the rotated down step
  std::size_t found = 0;
  for (const IncrementFunction& delta : delta_test_set(5)) {
    for (int k = 2; k < 5; ++k) {
      for (const Decomposition& d : all_decompositions(5, k)) {
        if (d.kind() != IntervalKind::Right) continue;
        const Word last = [&] {
          Word w{Step::Up};
          for (Step s : d.parts.back().steps()) w.push_back(s);
          w.push_back(Step::Down);
          return w;
        }();
        int label = 1;
        for (int i = 0; i < d.marked.mark; ++i) label += d.marked.path.is_up(i) ? 1 : 0;
        for (std::size_t j = 0; j + 1 < d.parts.size(); ++j) {
          Word w{Step::Up};
          for (Step s : d.parts[j].steps()) w.push_back(s);
          w.push_back(Step::Down);
          const int c = delta_excursion_length(delta, w, 0, label);
          for (int i = 0; i < c; ++i) label += w[static_cast<std::size_t>(i)] == Step::Up ? 1 : 0;
        }
        if (delta_excursion_length(delta, last, 0, label) < static_cast<int>(last.size())) ++found;
      }
    }
  }
  EXPECT_GT(found, 0U);
}

TEST(Transport, PreservesHeightAndKindAndInverts) {
  for (int n = 2; n <= 5; ++n) {
    const auto deltas = delta_test_set(n);
    for (const IncrementFunction& from : deltas) {
      const AltTamariPoset t = AltTamariPoset::build(from);
      const Poset& p = t.poset();
      for (const IncrementFunction& to : {deltas.front(), deltas.back(), deltas[deltas.size() / 2]}) {
        for (std::size_t a = 0; a < p.size(); ++a) {
          const std::vector<int> heights = p.linear_heights_from(a);
          for (std::size_t b = 0; b < p.size(); ++b) {
            if (heights[b] < 0) continue;
            const Interval moved = transport(from, to, t.path(a), t.path(b));
            const Classification before = classify(from, t.path(a), t.path(b));
            const Classification after = classify(to, moved.bottom, moved.top);
            ASSERT_EQ(after.height, heights[b]);
            ASSERT_EQ(after.kind, before.kind);
            ASSERT_EQ(transport(to, from, moved.bottom, moved.top), (Interval{t.path(a), t.path(b)}));
          }
        }
      }
    }
  }
}
