#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swarlab/bitword.hpp"

namespace swarlab {

// One executed step always has exactly one class. The enum order is the
// fixed column order of the RunReport CSV.
enum class OpClass : unsigned {
  And = 0,
  Or,
  Xor,
  Not,
  Add,
  Sub,
  LoadConst,
  Move,
  Compare,
  Branch,
  Shift,
  Mod,
};

inline constexpr unsigned kOpClassCount = 12;

std::string_view op_class_name(OpClass cls);

// OPAL is the straight-line model: logical operations and addition only
// (subtraction admitted as sugar for negation plus addition). PAL adds flow
// control; FULL adds shifts and remainders for the division-based methods.
enum class Model { Opal, Pal, Full };

std::string_view model_name(Model model);
Model model_from_name(std::string_view name);
bool model_allows(Model model, OpClass cls);

// Thrown when an algorithm executes an operation outside its declared model.
class ModelViolation : public std::runtime_error {
 public:
  ModelViolation(Model model, OpClass cls);
  Model model;
  OpClass op_class;
};

struct OpCounter {
  std::array<std::uint64_t, kOpClassCount> counts{};

  std::uint64_t count(OpClass cls) const { return counts[static_cast<unsigned>(cls)]; }
  // Sum over every class.
  std::uint64_t total() const;
  // Headline total matching the paper-style operator counts: LOADCONST and
  // MOVE are tracked but reported separately, so they are excluded here.
  std::uint64_t operator_total() const;

  bool operator==(const OpCounter&) const = default;
};

// Execution context for one algorithm run: performs word operations,
// charges one unit per primitive operator application, and rejects any
// class the model does not admit. A context belongs to a single run and is
// not shared across threads; distinct runs may proceed concurrently, each
// with its own context.
class CountingContext {
 public:
  explicit CountingContext(Model model) : model_(model) {}

  Model model() const { return model_; }
  const OpCounter& counter() const { return counter_; }

  BitWord band(const BitWord& a, const BitWord& b);
  BitWord bor(const BitWord& a, const BitWord& b);
  BitWord bxor(const BitWord& a, const BitWord& b);
  BitWord bnot(const BitWord& a);
  BitWord add(const BitWord& a, const BitWord& b);
  BitWord sub(const BitWord& a, const BitWord& b);
  BitWord load_const(BitWord value);
  BitWord move(const BitWord& value);

  // Charges one BRANCH for a flow-control test and reports whether the
  // condition word is non-zero. Call once per loop-condition evaluation
  // (including the final failing one) and once per conditional test.
  bool branch(const BitWord& condition);
  bool compare_eq(const BitWord& a, const BitWord& b);

  BitWord shift_left(const BitWord& a, unsigned k);
  BitWord shift_right(const BitWord& a, unsigned k);
  std::uint64_t mod(const BitWord& a, std::uint64_t modulus);
  BitWord mod_word(const BitWord& a, std::uint64_t modulus);

 private:
  void charge(OpClass cls);

  Model model_;
  OpCounter counter_;
};

// Snapshot of one finished run; the CSV row unit.
struct RunReport {
  std::string algorithm;
  Model model = Model::Opal;
  unsigned width = 0;
  std::string input;   // hex
  std::string output;  // hex or integer, depending on the algorithm
  OpCounter counter;

  // True when the model admits every class with a nonzero count.
  bool counts_admitted() const;

  // Fixed column order; "total" is the operator total (LOADCONST and MOVE
  // have their own columns and are not folded into it).
  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace swarlab
