#include "alttam/bitrow.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>

#include "alttam/error.hpp"

namespace alttam::simd {
namespace {

Isa detect_isa() {
  if (const char* env = std::getenv("ALT_TAMARI_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::Scalar;
  }
  return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<const BitKernels*>& active_slot() {
  static std::atomic<const BitKernels*> slot{&kernels_for(detect_isa())};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(ALTTAM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const BitKernels& kernels_for(Isa isa) {
#if defined(ALTTAM_HAVE_AVX2)
  if (isa == Isa::Avx2) {
    if (!isa_supported(Isa::Avx2)) throw Error(ErrorKind::InvalidArgument, "AVX2 not supported on this CPU");
    return detail::kAvx2Kernels;
  }
#else
  if (isa == Isa::Avx2) throw Error(ErrorKind::InvalidArgument, "built without AVX2 kernels");
#endif
  return detail::kScalarKernels;
}

const BitKernels& kernels() { return *active_slot().load(std::memory_order_relaxed); }

Isa active_isa() { return &kernels() == &detail::kScalarKernels ? Isa::Scalar : Isa::Avx2; }

void force_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_relaxed); }

BitMatrix::BitMatrix(std::size_t rows, std::size_t columns)
    : rows_(rows), columns_(columns), stride_(((columns + 63) / 64 + 3) / 4 * 4), data_(rows * stride_, 0) {}

void BitMatrix::or_row_into(std::size_t dst, std::size_t src) {
  kernels().or_into(data_.data() + dst * stride_, data_.data() + src * stride_, stride_);
}

std::size_t popcount(std::span<const std::uint64_t> row) {
  std::size_t total = 0;
  for (std::uint64_t w : row) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return kernels().and_popcount(a.data(), b.data(), std::min(a.size(), b.size()));
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return kernels().is_subset(a.data(), b.data(), std::min(a.size(), b.size()));
}

void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  kernels().and_into(dst.data(), a.data(), b.data(), std::min({dst.size(), a.size(), b.size()}));
}

std::vector<std::size_t> set_bits(std::span<const std::uint64_t> row) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace alttam::simd
