#include "lexsearch/raw_block.hpp"

#include <cstdint>
#include <mutex>
#include <new>
#include <vector>

#if defined(__linux__)
#include <sys/mman.h>
#ifndef MADV_COLLAPSE
#define MADV_COLLAPSE 25
#endif
#endif

namespace lexsearch::detail {

namespace {

constexpr std::size_t kHugePageBytes = std::size_t{2} << 20;
constexpr std::size_t kMinMapBytes = std::size_t{1} << 20;

bool use_mapping(std::size_t bytes) {
#if defined(__linux__)
  return bytes >= kMinMapBytes;
#else
  (void)bytes;
  return false;
#endif
}

std::size_t mapped_len(std::size_t bytes) {
  return (bytes + kHugePageBytes - 1) & ~(kHugePageBytes - 1);
}

#if defined(__linux__)

// Released mappings are parked here and handed back to equal-sized requests.
// A reused mapping arrives with its pages already faulted in and collapsed to
// huge pages, so repeated runs skip both the fault storm of a fresh mapping
// and the collapse work.  Sized for a handful of large working arrays;
// anything beyond the caps is unmapped on the spot.
struct MappingCache {
  struct Entry {
    void* ptr;
    std::size_t len;
  };

  static constexpr std::size_t kMaxEntries = 16;
  static constexpr std::size_t kMaxTotalBytes = std::size_t{64} << 20;

  std::mutex mutex;
  std::vector<Entry> entries;
  std::size_t total_bytes = 0;

  void* take(std::size_t len) {
    std::lock_guard<std::mutex> lock(mutex);
    for (auto& entry : entries) {
      if (entry.len != len) continue;
      void* ptr = entry.ptr;
      total_bytes -= len;
      entry = entries.back();
      entries.pop_back();
      return ptr;
    }
    return nullptr;
  }

  bool park(void* ptr, std::size_t len) {
    std::lock_guard<std::mutex> lock(mutex);
    if (entries.size() >= kMaxEntries || total_bytes + len > kMaxTotalBytes) return false;
    entries.push_back({ptr, len});
    total_bytes += len;
    return true;
  }
};

MappingCache& mapping_cache() {
  // Never destroyed: blocks owned by statics may release after any destructor
  // would have run, and the kernel reclaims the mappings at exit anyway.
  static auto* cache = new MappingCache;
  return *cache;
}

void* fresh_mapping(std::size_t len) {
  // Map whole huge-page units with slack and trim to an aligned start: only
  // fully aligned huge-page-sized spans can be backed by huge pages.
  std::size_t span = len + kHugePageBytes;
  void* raw = ::mmap(nullptr, span, PROT_READ | PROT_WRITE, MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
  if (raw == MAP_FAILED) throw std::bad_alloc();
  auto base = reinterpret_cast<std::uintptr_t>(raw);
  auto aligned = (base + kHugePageBytes - 1) & ~(kHugePageBytes - 1);
  if (aligned > base) ::munmap(raw, aligned - base);
  std::size_t tail = span - (aligned - base) - len;
  if (tail > 0) ::munmap(reinterpret_cast<void*>(aligned + len), tail);
  void* data = reinterpret_cast<void*>(aligned);
  ::madvise(data, len, MADV_HUGEPAGE);
  // Fault every unit in, then ask for a synchronous collapse: relying on the
  // fault path alone leaves ordinary pages behind whenever compaction is
  // momentarily out of contiguous memory.  Both calls are best effort.
  auto* touch = static_cast<volatile char*>(data);
  for (std::size_t offset = 0; offset < len; offset += kHugePageBytes) touch[offset] = 0;
  ::madvise(data, len, MADV_COLLAPSE);
  return data;
}

#endif  // defined(__linux__)

}  // namespace

void* block_allocate(std::size_t bytes) {
  if (bytes == 0) return nullptr;
#if defined(__linux__)
  if (use_mapping(bytes)) {
    std::size_t len = mapped_len(bytes);
    if (void* reused = mapping_cache().take(len)) return reused;
    return fresh_mapping(len);
  }
#endif
  return ::operator new(bytes);
}

void block_release(void* data, std::size_t bytes) noexcept {
  if (data == nullptr) return;
#if defined(__linux__)
  if (use_mapping(bytes)) {
    std::size_t len = mapped_len(bytes);
    if (!mapping_cache().park(data, len)) ::munmap(data, len);
    return;
  }
#endif
  ::operator delete(data);
}

}  // namespace lexsearch::detail
