#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tweetsent {

struct SourceUnreachableNoCache : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CacheWriteFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheResult {
  std::filesystem::path path;
  bool stale = false;       // served from cache because the source was down
  bool downloaded = false;  // freshly fetched this call
};

// Fetches the dictionary from `source` (an http(s) URL or a local file
// path) into cache_dir/lexicon.tsv via an atomic temp-file rename, so
// concurrent invocations on the same directory are safe. When the source
// is unreachable a warm cache is returned with stale = true; with no
// cache either, SourceUnreachableNoCache. Idempotent: consecutive
// successful calls leave byte-identical cache files.
CacheResult fetch_and_cache(std::string_view source,
                            const std::filesystem::path& cache_dir);

}  // namespace tweetsent
