#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>

namespace lexsearch {

namespace detail {

/// Throws std::bad_alloc on failure; returns nullptr only for zero bytes.
void* block_allocate(std::size_t bytes);
void block_release(void* data, std::size_t bytes) noexcept;

}  // namespace detail

/// Flat array with value semantics and uninitialized contents.  Blocks of at
/// least one huge page come from anonymous mappings with transparent huge
/// pages requested: the library's large flat tables are hit with random
/// access, where 4 KiB paging spends a TLB miss and page walk on nearly every
/// touch.  Platforms without that facility fall back to the plain heap.
template <class T>
class RawBlock {
  static_assert(std::is_trivially_copyable_v<T> && std::is_trivially_destructible_v<T>,
                "RawBlock leaves its contents unconstructed");

 public:
  RawBlock() = default;
  explicit RawBlock(std::size_t count)
      : data_(static_cast<T*>(detail::block_allocate(count * sizeof(T)))), count_(count) {}
  RawBlock(const RawBlock& other) : RawBlock(other.count_) {
    std::copy_n(other.data_, count_, data_);
  }
  RawBlock(RawBlock&& other) noexcept { swap(other); }
  RawBlock& operator=(RawBlock other) noexcept {
    swap(other);
    return *this;
  }
  ~RawBlock() { detail::block_release(data_, count_ * sizeof(T)); }

  T* data() { return data_; }
  const T* data() const { return data_; }
  std::size_t size() const { return count_; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  void swap(RawBlock& other) noexcept {
    std::swap(data_, other.data_);
    std::swap(count_, other.count_);
  }

 private:
  T* data_ = nullptr;
  std::size_t count_ = 0;
};

}  // namespace lexsearch
