#include "alttam/bijections.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

#include "alttam/error.hpp"

namespace alttam {

namespace {

Word slice(const Word& w, int from, int to) {
  return Word(w.begin() + from, w.begin() + to);
}

void append(Word& into, const Word& more) { into.insert(into.end(), more.begin(), more.end()); }

int count_ups(const Word& w, int from, int to) {
  int ups = 0;
  for (int i = from; i < to; ++i) ups += w[static_cast<std::size_t>(i)] == Step::Up ? 1 : 0;
  return ups;
}

// Index of the down step matching the up step at `start`.
int match_from(const Word& w, int start) {
  int depth = 0;
  for (int i = start; i < static_cast<int>(w.size()); ++i) {
    depth += w[static_cast<std::size_t>(i)] == Step::Up ? 1 : -1;
    if (depth == 0) return i;
  }
  throw Error(ErrorKind::NonDyckWord, "unmatched up step");
}

Word wrap(const DyckPath& inner) {
  Word w{Step::Up};
  append(w, inner.steps());
  w.push_back(Step::Down);
  return w;
}

DyckPath inner_of(const Word& excursion) {
  return DyckPath::from_steps(std::span<const Step>(excursion).subspan(1, excursion.size() - 2));
}

void require(const Decomposition& d, Step mark_kind, bool several, ErrorKind kind, const char* what) {
  const MarkedPath& m = d.marked;
  if (m.path.empty() || m.mark < 0 || m.mark >= m.path.length() || m.path[m.mark] != m.mark_kind ||
      m.mark_kind != mark_kind || d.parts.empty() || (several ? d.parts.size() < 2 : d.parts.size() != 1)) {
    throw Error(kind, std::string("decomposition is not of ") + what + " shape");
  }
}

void require_delta(const IncrementFunction& delta, const Decomposition& d) {
  if (delta.size() != d.interval_size()) {
    throw Error(ErrorKind::SizeMismatch, "increment function of size " + std::to_string(delta.size()) +
                                             " for a decomposition of size " + std::to_string(d.interval_size()));
  }
}

}  // namespace

std::string to_string(const MarkedPath& marked) {
  std::string out;
  for (int i = 0; i < marked.path.length(); ++i) {
    if (i > 0) out.push_back(' ');
    out.push_back(marked.path.is_up(i) ? 'u' : 'd');
    if (i == marked.mark) out.push_back('*');
  }
  return out;
}

MarkedPath parse_marked(std::string_view text) {
  std::string plain;
  int mark = -1;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*') {
      if (mark >= 0 || plain.empty()) throw Error(ErrorKind::BadAlphabet, "expected exactly one '*' after a step");
      mark = static_cast<int>(plain.size()) - 1;
      continue;
    }
    plain.push_back(c);
  }
  if (mark < 0) throw Error(ErrorKind::BadAlphabet, "marked path needs a '*'");
  MarkedPath out;
  out.path = parse_dyck(plain);
  out.mark = mark;
  out.mark_kind = out.path[mark];
  return out;
}

int Decomposition::interval_size() const {
  int total = marked.path.size() + height();
  for (const DyckPath& p : parts) total += p.size();
  return total;
}

IntervalKind Decomposition::kind() const {
  if (marked.mark_kind == Step::Up) return IntervalKind::Left;
  return parts.size() == 1 ? IntervalKind::Covering : IntervalKind::Right;
}

Decomposition decompose_covering(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top) {
  const Classification c = classify(delta, bottom, top);
  if (c.kind != IntervalKind::Covering) throw Error(ErrorKind::NotACovering, "pair is not a covering relation");
  // P = A d E B' with E the full excursion of the up step after the d
  const Word p = bottom.steps();
  const int a = c.prefix;
  const int e_end = match_from(p, a + 1);
  Word p0 = slice(p, 0, a + 1);
  append(p0, slice(p, e_end + 1, static_cast<int>(p.size())));
  Decomposition d;
  d.marked = MarkedPath{DyckPath::from_steps(p0), a, Step::Down};
  d.parts.push_back(inner_of(slice(p, a + 1, e_end + 1)));
  return d;
}

Interval compose_covering(const IncrementFunction& delta, const Decomposition& d) {
  require(d, Step::Down, false, ErrorKind::InvalidArgument, "covering");
  require_delta(delta, d);
  const Word p0 = d.marked.path.steps();
  const int a = d.marked.mark;
  const Word e = wrap(d.parts[0]);
  const Word tail = slice(p0, a + 1, static_cast<int>(p0.size()));
  const int c = delta_excursion_length(delta, e, 0, count_ups(p0, 0, a) + 1);

  Word p = slice(p0, 0, a + 1);
  append(p, e);
  append(p, tail);
  Word q = slice(p0, 0, a);
  q.insert(q.end(), e.begin(), e.begin() + c);
  q.push_back(Step::Down);
  q.insert(q.end(), e.begin() + c, e.end());
  append(q, tail);
  return {DyckPath::from_steps(p), DyckPath::from_steps(q)};
}

Decomposition decompose_left(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top) {
  const Classification c = classify(delta, bottom, top);
  if (c.kind != IntervalKind::Left) throw Error(ErrorKind::NotLeft, "pair is not a left interval");
  const Word p = bottom.steps();
  const int a = c.prefix;
  const int k = c.height;
  // up steps matching the run d^k, found by walking back through A
  std::vector<int> opens;
  int depth = 0;
  for (int i = a - 1; i >= 0 && static_cast<int>(opens.size()) < k; --i) {
    if (p[static_cast<std::size_t>(i)] == Step::Down) {
      ++depth;
    } else if (depth == 0) {
      opens.push_back(i);
    } else {
      --depth;
    }
  }
  std::reverse(opens.begin(), opens.end());
  Decomposition d;
  for (int j = 0; j < k; ++j) {
    const int from = opens[static_cast<std::size_t>(j)] + 1;
    const int to = j + 1 < k ? opens[static_cast<std::size_t>(j) + 1] : a;
    d.parts.push_back(DyckPath::from_steps(slice(p, from, to)));
  }
  Word p0 = slice(p, 0, opens.front());
  const int mark = static_cast<int>(p0.size());
  append(p0, slice(p, a + k, static_cast<int>(p.size())));
  d.marked = MarkedPath{DyckPath::from_steps(p0), mark, Step::Up};
  return d;
}

Interval compose_left(const IncrementFunction& delta, const Decomposition& d) {
  require(d, Step::Up, true, ErrorKind::InvalidArgument, "left");
  require_delta(delta, d);
  const Word p0 = d.marked.path.steps();
  const int mark = d.marked.mark;
  const int k = d.height();
  Word a = slice(p0, 0, mark);
  for (const DyckPath& part : d.parts) {
    a.push_back(Step::Up);
    append(a, part.steps());
  }
  const Word rest = slice(p0, mark, static_cast<int>(p0.size()));  // u B'
  const int c = delta_excursion_length(delta, rest, 0, count_ups(a, 0, static_cast<int>(a.size())) + 1);

  Word p = a;
  p.insert(p.end(), static_cast<std::size_t>(k), Step::Down);
  append(p, rest);
  Word q = a;
  q.insert(q.end(), rest.begin(), rest.begin() + c);
  q.insert(q.end(), static_cast<std::size_t>(k), Step::Down);
  q.insert(q.end(), rest.begin() + c, rest.end());
  return {DyckPath::from_steps(p), DyckPath::from_steps(q)};
}

Decomposition decompose_right(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top) {
  const Classification c = classify(delta, bottom, top);
  if (c.kind != IntervalKind::Right) throw Error(ErrorKind::NotRight, "pair is not a right interval");
  const Word p = bottom.steps();
  const int a = c.prefix;
  const int k = c.height;
  const int len = static_cast<int>(p.size());

  // C_1..C_k as [start, end) ranges after the d
  std::vector<std::pair<int, int>> cs;
  int cursor = a + 1;
  for (int j = 0; j < k; ++j) {
    const int l = delta_excursion_length(delta, p, cursor, count_ups(p, 0, cursor) + 1);
    cs.emplace_back(cursor, cursor + l);
    cursor += l;
  }
  // peel D_k, D_{k-1}, ..., D_1 in that order
  std::vector<Word> ds(static_cast<std::size_t>(k));
  for (int j = k - 1; j >= 0; --j) {
    const int m = match_from(p, cs[static_cast<std::size_t>(j)].first);
    if (m < cs[static_cast<std::size_t>(j)].second) continue;
    ds[static_cast<std::size_t>(j)] = slice(p, cursor, m + 1);
    cursor = m + 1;
  }
  const Word tail = slice(p, cursor, len);

  Word rebuilt = slice(p, 0, a + 1);
  for (const auto& [from, to] : cs) append(rebuilt, slice(p, from, to));
  for (int j = k - 1; j >= 0; --j) append(rebuilt, ds[static_cast<std::size_t>(j)]);
  append(rebuilt, tail);
  if (rebuilt != p) throw Error(ErrorKind::NotRight, "segments do not reassemble the bottom path");

  Decomposition d;
  for (int j = 0; j < k; ++j) {
    Word e = slice(p, cs[static_cast<std::size_t>(j)].first, cs[static_cast<std::size_t>(j)].second);
    append(e, ds[static_cast<std::size_t>(j)]);
    d.parts.push_back(inner_of(e));
  }
  Word p0 = slice(p, 0, a + 1);
  append(p0, tail);
  d.marked = MarkedPath{DyckPath::from_steps(p0), a, Step::Down};
  return d;
}

Interval compose_right(const IncrementFunction& delta, const Decomposition& d) {
  require(d, Step::Down, true, ErrorKind::InvalidArgument, "right");
  require_delta(delta, d);
  const Word p0 = d.marked.path.steps();
  const int a = d.marked.mark;
  const Word tail = slice(p0, a + 1, static_cast<int>(p0.size()));

  Word cs;
  std::vector<Word> ds;
  int label = count_ups(p0, 0, a) + 1;
  for (const DyckPath& part : d.parts) {
    const Word e = wrap(part);
    const int c = delta_excursion_length(delta, e, 0, label);
    cs.insert(cs.end(), e.begin(), e.begin() + c);
    ds.emplace_back(e.begin() + c, e.end());
    label += count_ups(e, 0, c);
  }
  Word b;
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) append(b, *it);
  append(b, tail);

  Word p = slice(p0, 0, a + 1);
  append(p, cs);
  append(p, b);
  Word q = slice(p0, 0, a);
  append(q, cs);
  q.push_back(Step::Down);
  append(q, b);
  return {DyckPath::from_steps(p), DyckPath::from_steps(q)};
}

Decomposition decompose(const IncrementFunction& delta, const DyckPath& bottom, const DyckPath& top) {
  switch (classify(delta, bottom, top).kind) {
    case IntervalKind::Covering: return decompose_covering(delta, bottom, top);
    case IntervalKind::Left: return decompose_left(delta, bottom, top);
    case IntervalKind::Right: return decompose_right(delta, bottom, top);
    case IntervalKind::Trivial: throw Error(ErrorKind::InvalidArgument, "trivial intervals have no decomposition");
    case IntervalKind::NotLinear: break;
  }
  throw Error(ErrorKind::NotLinear, "pair is not a linear interval");
}

Interval compose(const IncrementFunction& delta, const Decomposition& d) {
  switch (d.kind()) {
    case IntervalKind::Covering: return compose_covering(delta, d);
    case IntervalKind::Left: return compose_left(delta, d);
    default: return compose_right(delta, d);
  }
}

Interval transport(const IncrementFunction& from, const IncrementFunction& to, const DyckPath& bottom,
                   const DyckPath& top) {
  if (from.size() != to.size()) throw Error(ErrorKind::SizeMismatch, "increment functions of different sizes");
  const Classification c = classify(from, bottom, top);
  if (c.kind == IntervalKind::NotLinear) throw Error(ErrorKind::NotLinear, "pair is not a linear interval");
  if (c.kind == IntervalKind::Trivial) return {bottom, top};
  return compose(to, decompose(from, bottom, top));
}

std::string to_json(const Decomposition& d) {
  nlohmann::json j;
  j["kind"] = to_string(d.kind());
  j["marked"] = to_string(d.marked);
  nlohmann::json parts = nlohmann::json::array();
  for (const DyckPath& p : d.parts) parts.push_back(p.word());
  j["parts"] = std::move(parts);
  return j.dump();
}

}  // namespace alttam
