#include "swarlab/isa_model.hpp"

#include <sstream>

namespace swarlab {

namespace {

constexpr std::array<std::string_view, kOpClassCount> kOpClassNames = {
    "and", "or",      "xor",  "not",     "add",    "sub",
    "loadconst", "move", "compare", "branch", "shift", "mod"};

}  // namespace

std::string_view op_class_name(OpClass cls) { return kOpClassNames[static_cast<unsigned>(cls)]; }

std::string_view model_name(Model model) {
  switch (model) {
    case Model::Opal: return "OPAL";
    case Model::Pal: return "PAL";
    case Model::Full: return "FULL";
  }
  return "?";
}

Model model_from_name(std::string_view name) {
  if (name == "OPAL" || name == "opal") return Model::Opal;
  if (name == "PAL" || name == "pal") return Model::Pal;
  if (name == "FULL" || name == "full") return Model::Full;
  throw std::invalid_argument("unknown model name: " + std::string(name));
}

bool model_allows(Model model, OpClass cls) {
  switch (cls) {
    case OpClass::And:
    case OpClass::Or:
    case OpClass::Xor:
    case OpClass::Not:
    case OpClass::Add:
    case OpClass::Sub:
    case OpClass::LoadConst:
    case OpClass::Move:
      return true;  // admitted by OPAL and everything above it
    case OpClass::Compare:
    case OpClass::Branch:
      return model == Model::Pal || model == Model::Full;
    case OpClass::Shift:
    case OpClass::Mod:
      return model == Model::Full;
  }
  return false;
}

ModelViolation::ModelViolation(Model m, OpClass cls)
    : std::runtime_error(std::string(op_class_name(cls)) + " is not allowed in the " +
                         std::string(model_name(m)) + " model"),
      model(m),
      op_class(cls) {}

std::uint64_t OpCounter::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::uint64_t OpCounter::operator_total() const {
  return total() - count(OpClass::LoadConst) - count(OpClass::Move);
}

void CountingContext::charge(OpClass cls) {
  if (!model_allows(model_, cls)) throw ModelViolation(model_, cls);
  ++counter_.counts[static_cast<unsigned>(cls)];
}

BitWord CountingContext::band(const BitWord& a, const BitWord& b) {
  charge(OpClass::And);
  return a.band(b);
}

BitWord CountingContext::bor(const BitWord& a, const BitWord& b) {
  charge(OpClass::Or);
  return a.bor(b);
}

BitWord CountingContext::bxor(const BitWord& a, const BitWord& b) {
  charge(OpClass::Xor);
  return a.bxor(b);
}

BitWord CountingContext::bnot(const BitWord& a) {
  charge(OpClass::Not);
  return a.bnot();
}

BitWord CountingContext::add(const BitWord& a, const BitWord& b) {
  charge(OpClass::Add);
  return a.add(b);
}

BitWord CountingContext::sub(const BitWord& a, const BitWord& b) {
  charge(OpClass::Sub);
  return a.sub(b);
}

BitWord CountingContext::load_const(BitWord value) {
  charge(OpClass::LoadConst);
  return value;
}

BitWord CountingContext::move(const BitWord& value) {
  charge(OpClass::Move);
  return value;
}

bool CountingContext::branch(const BitWord& condition) {
  charge(OpClass::Branch);
  return !condition.is_zero();
}

bool CountingContext::compare_eq(const BitWord& a, const BitWord& b) {
  charge(OpClass::Compare);
  return a == b;
}

BitWord CountingContext::shift_left(const BitWord& a, unsigned k) {
  charge(OpClass::Shift);
  return a.shl(k);
}

BitWord CountingContext::shift_right(const BitWord& a, unsigned k) {
  charge(OpClass::Shift);
  return a.shr(k);
}

std::uint64_t CountingContext::mod(const BitWord& a, std::uint64_t modulus) {
  charge(OpClass::Mod);
  return a.rem(modulus);
}

BitWord CountingContext::mod_word(const BitWord& a, std::uint64_t modulus) {
  charge(OpClass::Mod);
  return BitWord::from_u64(a.width(), a.rem(modulus));
}

bool RunReport::counts_admitted() const {
  for (unsigned i = 0; i < kOpClassCount; ++i)
    if (counter.counts[i] != 0 && !model_allows(model, static_cast<OpClass>(i))) return false;
  return true;
}

std::string RunReport::csv_header() {
  std::string header = "algorithm,model,width,input,output,total";
  for (unsigned i = 0; i < kOpClassCount; ++i) {
    header += ',';
    header += kOpClassNames[i];
  }
  return header;
}

std::string RunReport::csv_row() const {
  std::ostringstream row;
  row << algorithm << ',' << model_name(model) << ',' << width << ',' << input << ',' << output
      << ',' << counter.operator_total();
  for (auto c : counter.counts) row << ',' << c;
  return row.str();
}

}  // namespace swarlab
