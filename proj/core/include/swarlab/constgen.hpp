#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swarlab/bitword.hpp"

namespace swarlab {

// One SWAR field: the inclusive run of positions [low, high], high > low.
struct Field {
  unsigned low = 0;
  unsigned high = 0;
};

// Partition of a word into disjoint ascending fields. The most significant
// position of a field is where carries are absorbed and counts accumulate.
struct FieldLayout {
  unsigned width = 0;
  unsigned field_len = 0;  // uniform layouts only; 0 for irregular ones
  std::vector<Field> fields;

  // Splits `width` into width/field_len contiguous fields; field_len must
  // divide width and be at least 2.
  static FieldLayout uniform(unsigned width, unsigned field_len);

  void validate() const;  // throws std::invalid_argument
};

enum class ConstantKind { Mask, AddConst, ClearMask };

std::string_view constant_kind_name(ConstantKind kind);

struct StageConstant {
  ConstantKind kind;
  BitWord value;
};

using Stage = std::vector<StageConstant>;

// The per-stage constants an algorithm needs at a given width, in the exact
// order a straight-line program consumes them.
struct MaskSet {
  std::string algorithm;
  unsigned width = 0;
  std::vector<Stage> stages;

  std::vector<StageConstant> flatten() const;
};

// Thrown when a requested field size violates the counting-capacity
// condition 2^k - 1 > ceil(width / k).
class ConditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mask with the most significant bit of each field set: positions
// field_len-1, 2*field_len-1, ... field_len must divide width.
BitWord hibits_mask(unsigned width, unsigned field_len);

// The three constants that shift the least significant bit of every field
// to its most significant position in three operations (and-clear, add,
// and-keep), assuming the intermediate positions are zero.
struct ShiftConstants {
  BitWord clear_mask;  // ~(sum of 2^high)
  BitWord add_const;   // sum of (2^high - 2^low)
  BitWord keep_mask;   // ~(sum of (2^high - 2^low))
};

ShiftConstants shift_constants(const FieldLayout& layout);

// Constants for the staged parity reduction: stage 0 is the mask of odd
// positions; every later stage is one (add-constant, mask) pair that merges
// adjacent field parities. Width must be a power of two in [4, 4096].
MaskSet parity_masks(unsigned width);

// Constants for the staged count of the low width/2 bits: stage s holds the
// mask extracting the lower fields' count bits followed by s (add-constant,
// keep-mask) pairs that move those bits into the merged field's count
// position. Width must be a power of two in [8, 4096]. At width 32 the
// flattened constants are bit-identical to the published 32-bit listing,
// including its irregular truncation of the keep masks' don't-care high
// bits; other widths complement over the full word.
MaskSet logsq_masks(unsigned width);

// Same constants relocated `distance` positions towards the top, for
// running a staged method on a higher region of the word.
MaskSet shift_maskset(const MaskSet& set, unsigned distance);

// Layout for the fold-then-count parity method: fields of field_len bits,
// a mask selecting each field's low bit, and the remainder that sums field
// digits. Valid whenever 2^field_len - 1 > ceil(width / field_len).
struct FoldLayout {
  unsigned field_len = 0;
  BitWord field_mask = BitWord::zero(1);
  std::uint64_t modulus = 0;
  std::vector<unsigned> fold_shifts;  // 1, 2, ..., field_len/2
};

// Smallest power-of-two field size satisfying the capacity condition.
FoldLayout fold_layout(unsigned width);
// Explicit field size; throws ConditionViolated when the condition fails.
FoldLayout fold_layout_with_field(unsigned width, unsigned field_len);

// Octal-digit masks for the division-based count, generalized from the
// classic 0o33333333333 / 0o30707070707 pair: the repeating patterns 011
// and 000111 truncated to `width` bits.
BitWord hakmem_two_bits(unsigned width);
BitWord hakmem_three_bits(unsigned width);

}  // namespace swarlab
