#ifndef SUBLCS_METER_HPP
#define SUBLCS_METER_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

namespace sublcs::meter {

// Working-space accounting in machine words (8 bytes each). Every transient
// allocation made by the algorithms goes through Alloc<T>; the input corpus
// and the returned result are allocated normally and stay outside the count.
struct State {
  std::size_t current_words = 0;
  std::size_t peak_words = 0;
};

inline State& state() {
  thread_local State s;
  return s;
}

constexpr std::size_t kWordBytes = 8;

inline std::size_t words(std::size_t bytes) {
  return (bytes + kWordBytes - 1) / kWordBytes;
}

inline void reset() { state() = State{}; }
inline std::size_t peak_words() { return state().peak_words; }
inline std::size_t current_words() { return state().current_words; }

template <class T>
struct Alloc {
  using value_type = T;

  Alloc() = default;
  template <class U>
  Alloc(const Alloc<U>&) noexcept {}

  T* allocate(std::size_t n) {
    State& s = state();
    s.current_words += words(n * sizeof(T));
    s.peak_words = std::max(s.peak_words, s.current_words);
    return std::allocator<T>{}.allocate(n);
  }

  void deallocate(T* p, std::size_t n) noexcept {
    state().current_words -= words(n * sizeof(T));
    std::allocator<T>{}.deallocate(p, n);
  }

  template <class U>
  bool operator==(const Alloc<U>&) const noexcept {
    return true;
  }
};

// Metered vector: the container of choice for all working storage.
template <class T>
using mvector = std::vector<T, Alloc<T>>;

}  // namespace sublcs::meter

#endif  // SUBLCS_METER_HPP
