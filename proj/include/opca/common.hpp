#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace opca {

// Index into a poset's declared element list. -1 marks "undefined" in
// partial application tables.
using Elem = int;

inline constexpr Elem kUndef = -1;

enum class ErrKind {
  EmptySeed,
  UnknownElement,
  SizeLimit,
  Axiom0Violation,
  NoCombinators,
  UndefinedCombinator,
  OpenTerm,
  UnboundVariable,
  SyntaxError,
  UnknownIdentifier,
  Mismatch,
  SourceMismatch,
  ConstructionFailed,
  RealizerInvalid,
  NotApplicable,
  ExtractionFailed,
  BaseMismatch,
  ParseError,
  ValidationError,
  UnknownCommand,
  UnknownName,
};

const char* err_kind_name(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) {
  throw Error(k, msg);
}

// Dynamic bitset over element indices. Bit i is membership of the i-th
// declared element; comparing two sets "as numbers" (bit i has weight 2^i)
// gives the canonical enumeration order used everywhere.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  // Numeric order; total, used for canonical sequencing and as a map key.
  friend bool operator<(const Bits& a, const Bits& b) {
    for (size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  int lowest() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        f(int(i * 64) + __builtin_ctzll(x));
        x &= x - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Size caps for exhaustive operations. Operations refuse (SizeLimit)
// rather than sample.
struct Budget {
  uint64_t downset_limit = uint64_t(1) << 20;  // max downsets enumerated
  uint64_t t_carrier_limit = uint64_t(1) << 10;   // |TA|
  uint64_t tt_carrier_limit = uint64_t(1) << 20;  // |TTA|
  uint64_t hom_sweep_limit = uint64_t(1) << 16;   // candidate maps per sweep
  int discrete_cap = 20;           // subset sweep is 2^|A|
  int enumerate_cap = 3;           // carrier size for structure enumeration
  bool enumerate_allow4 = false;   // enables |A| = 4 (pruned search)
  int threads = 1;
};

}  // namespace opca
