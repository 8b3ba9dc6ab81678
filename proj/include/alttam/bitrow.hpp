#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace alttam::simd {

// Word-parallel kernels over packed bit rows. Every poset query (closure,
// interval extraction, refinement, lattice checks) bottoms out here.
enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct BitKernels {
  // dst |= src
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // dst = a & b
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // popcount(a & b)
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

bool isa_supported(Isa isa);
const BitKernels& kernels_for(Isa isa);

/// Kernel set in use. Picks AVX2 when the CPU has it, unless the environment
/// variable ALT_TAMARI_ISA=scalar is set or force_isa() was called.
const BitKernels& kernels();
Isa active_isa();
void force_isa(Isa isa);

namespace detail {
extern const BitKernels kScalarKernels;
#if defined(ALTTAM_HAVE_AVX2)
extern const BitKernels kAvx2Kernels;
#endif
}  // namespace detail

/// Row-major square-ish bit matrix; each row is padded to a multiple of four
/// words so the 256-bit kernels never need a tail loop on the stride.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t columns);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  std::size_t stride() const { return stride_; }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  void or_row_into(std::size_t dst, std::size_t src);

 private:
  std::size_t rows_ = 0;
  std::size_t columns_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

std::size_t popcount(std::span<const std::uint64_t> row);
std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Indices of the set bits, ascending.
std::vector<std::size_t> set_bits(std::span<const std::uint64_t> row);

}  // namespace alttam::simd
