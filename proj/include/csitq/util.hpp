#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace csitq {

/// Fixed-size bitset with a runtime bit count. Used for exact reachability
/// and support bookkeeping in the zero-error searches, where float
/// comparisons are not acceptable.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool intersects(const Bitset& other) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return true;
    }
    return false;
  }

  void merge(const Bitset& other) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const Bitset& other) const {
    return bits_ == other.bits_ && words_ == other.words_;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = 0; i < bits_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

/// Worker count for parallel sweeps, capped by the CSITQ_THREADS environment
/// variable. Returns at least 1.
int worker_count();

}  // namespace csitq
