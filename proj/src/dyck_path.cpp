#include "alttam/dyck_path.hpp"

#include <algorithm>
#include <cctype>

#include "alttam/error.hpp"

namespace alttam {

DyckPath DyckPath::from_steps(std::span<const Step> steps) {
  if (steps.size() % 2 != 0) {
    throw Error(ErrorKind::NonDyckWord, "odd number of steps");
  }
  if (steps.size() > 2 * static_cast<std::size_t>(kMaxPathSize)) {
    throw Error(ErrorKind::SizeTooLarge, "paths are limited to size " + std::to_string(kMaxPathSize));
  }
  DyckPath path;
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up) {
      ++height;
    } else {
      --height;
      path.bits_ |= std::uint64_t{1} << (63 - i);
    }
    if (height < 0) {
      throw Error(ErrorKind::NonDyckWord, "prefix condition fails at step " + std::to_string(i + 1));
    }
  }
  if (height != 0) throw Error(ErrorKind::NonDyckWord, "unbalanced word");
  path.size_ = static_cast<int>(steps.size() / 2);
  return path;
}

Word DyckPath::steps() const {
  Word out(static_cast<std::size_t>(length()));
  for (int i = 0; i < length(); ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
  return out;
}

std::string DyckPath::word() const { return to_string(steps()); }

int DyckPath::up_position(int label) const {
  if (label < 1 || label > size_) {
    throw Error(ErrorKind::IndexOutOfRange, "up step " + std::to_string(label) + " of a size " +
                                                std::to_string(size_) + " path");
  }
  int seen = 0;
  for (int i = 0; i < length(); ++i) {
    if (is_up(i) && ++seen == label) return i;
  }
  return -1;  // unreachable
}

int DyckPath::up_label_at(int index) const {
  if (index < 0 || index >= length() || !is_up(index)) {
    throw Error(ErrorKind::IndexOutOfRange, "no up step at index " + std::to_string(index));
  }
  int label = 0;
  for (int i = 0; i <= index; ++i) label += is_up(i) ? 1 : 0;
  return label;
}

std::vector<int> DyckPath::up_positions() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < length(); ++i) {
    if (is_up(i)) out.push_back(i);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'u': case 'U': case '1': word.push_back(Step::Up); break;
      case 'd': case 'D': case '0': word.push_back(Step::Down); break;
      default:
        throw Error(ErrorKind::BadAlphabet, std::string("unexpected character '") + c + "'");
    }
  }
  return word;
}

DyckPath parse_dyck(std::string_view text) { return DyckPath::from_steps(parse_word(text)); }

std::string to_string(std::span<const Step> word) {
  std::string out;
  out.reserve(word.size());
  for (Step s : word) out.push_back(s == Step::Up ? 'u' : 'd');
  return out;
}

bool is_dyck_word(std::span<const Step> word) {
  int height = 0;
  for (Step s : word) {
    height += s == Step::Up ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

std::vector<int> heights(const DyckPath& path) {
  std::vector<int> out(static_cast<std::size_t>(path.length()));
  int height = 0;
  for (int i = 0; i < path.length(); ++i) {
    out[static_cast<std::size_t>(i)] = height;
    height += path.is_up(i) ? 1 : -1;
  }
  return out;
}

int match_up(const DyckPath& path, int label) {
  int start = path.up_position(label);
  int height = 0;
  for (int i = start; i < path.length(); ++i) {
    height += path.is_up(i) ? 1 : -1;
    if (height == 0) return i;
  }
  return -1;  // unreachable for a Dyck path
}

Span excursion(const DyckPath& path, int label) {
  return Span{path.up_position(label), match_up(path, label)};
}

std::vector<int> valleys(const DyckPath& path) {
  std::vector<int> out;
  for (int i = 0; i + 1 < path.length(); ++i) {
    if (path.is_down(i) && path.is_up(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> peaks(const DyckPath& path) {
  std::vector<int> out;
  for (int i = 0; i + 1 < path.length(); ++i) {
    if (path.is_up(i) && path.is_down(i + 1)) out.push_back(i);
  }
  return out;
}

DyckPath mirror(const DyckPath& path) {
  Word word = path.steps();
  std::reverse(word.begin(), word.end());
  for (Step& s : word) s = s == Step::Up ? Step::Down : Step::Up;
  return DyckPath::from_steps(word);
}

bool includes(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) {
    throw Error(ErrorKind::SizeMismatch, "inclusion needs paths of the same size");
  }
  int hl = 0;
  int hu = 0;
  for (int i = 0; i < lower.length(); ++i) {
    hl += lower.is_up(i) ? 1 : -1;
    hu += upper.is_up(i) ? 1 : -1;
    if (hl > hu) return false;
  }
  return true;
}

namespace {

void extend(Word& prefix, int ups, int downs, int n, std::vector<DyckPath>& out) {
  if (ups == n && downs == n) {
    out.push_back(DyckPath::from_steps(prefix));
    return;
  }
  if (ups < n) {
    prefix.push_back(Step::Up);
    extend(prefix, ups + 1, downs, n, out);
    prefix.pop_back();
  }
  if (downs < ups) {
    prefix.push_back(Step::Down);
    extend(prefix, ups, downs + 1, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int n) { return enumerate_paths(n, path_cap()); }

std::vector<DyckPath> enumerate_paths(int n, int cap) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative size");
  if (n > cap || n > kMaxPathSize) {
    throw Error(ErrorKind::SizeTooLarge, "size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<DyckPath> out;
  out.reserve(static_cast<std::size_t>(catalan_u64(n)));
  Word prefix;
  prefix.reserve(static_cast<std::size_t>(2 * n));
  extend(prefix, 0, 0, n, out);
  return out;
}

std::uint64_t catalan_u64(int n) {
  // C_{k+1} = C_k * 2(2k+1)/(k+2); exact for n <= 35.
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
  return c;
}

}  // namespace alttam
