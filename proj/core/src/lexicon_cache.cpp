#include "tweetsent/lexicon_cache.hpp"

#include <unistd.h>

#include <fstream>
#include <optional>
#include <sstream>

#include <httplib.h>

namespace tweetsent {

namespace {

constexpr const char* kCacheFileName = "lexicon.tsv";

std::optional<std::string> fetch_http(std::string_view url) {
  std::size_t scheme_end = url.find("://");
  std::size_t path_start = url.find('/', scheme_end + 3);
  std::string base(path_start == std::string_view::npos
                       ? url
                       : url.substr(0, path_start));
  std::string path(path_start == std::string_view::npos
                       ? "/"
                       : url.substr(path_start));
  httplib::Client http(base);
  http.set_connection_timeout(10);
  http.set_read_timeout(30);
  auto res = http.Get(path);
  if (!res || res->status != 200) return std::nullopt;
  return res->body;
}

std::optional<std::string> fetch_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(buf).str();
}

bool is_url(std::string_view source) {
  return source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0;
}

}  // namespace

CacheResult fetch_and_cache(std::string_view source,
                            const std::filesystem::path& cache_dir) {
  const std::filesystem::path cache_file = cache_dir / kCacheFileName;

  std::optional<std::string> content =
      is_url(source) ? fetch_http(source)
                     : fetch_file(std::filesystem::path(source));

  if (!content) {
    std::error_code ec;
    if (std::filesystem::exists(cache_file, ec) && !ec)
      return CacheResult{cache_file, /*stale=*/true, /*downloaded=*/false};
    throw SourceUnreachableNoCache(
        "dictionary source unreachable and cache is empty");
  }

  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec)
    throw CacheWriteFailed("cannot create cache directory: " +
                           cache_dir.string());

  // Write-then-rename keeps concurrent readers and writers consistent:
  // the cache file is always a complete dictionary.
  const std::filesystem::path tmp =
      cache_dir / (std::string(kCacheFileName) + ".tmp" +
                   std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheWriteFailed("cannot write " + tmp.string());
    out << *content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp, ec);
      throw CacheWriteFailed("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, cache_file, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheWriteFailed("cannot update cache file: " + cache_file.string());
  }
  return CacheResult{cache_file, /*stale=*/false, /*downloaded=*/true};
}

}  // namespace tweetsent
