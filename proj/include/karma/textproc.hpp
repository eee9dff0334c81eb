// Text cleaning: lowercase, strip everything outside [a-z] to spaces,
// split on whitespace, drop stopwords. The output alphabet is exactly
// lowercase ASCII letters, which keeps every downstream token comparison
// trivial and locale-free.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace karma {

// Fixed, versioned stopword asset. The default list mirrors the standard
// 179-word English stopword set and also ships as a plain-text file under
// assets/; content_hash() is recorded in every saved model so a container
// can detect being replayed against a different list.
class StopwordList {
 public:
  StopwordList(std::vector<std::string> words, std::string version);

  static const StopwordList& builtin();

  // Plain-text asset: '#'-prefixed header lines (first one names the
  // version), then one lowercase word per line.
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view token) const;
  std::size_t size() const { return words_.size(); }
  const std::string& version() const { return version_; }

  // FNV-1a 64 over the sorted words, each terminated by '\n'. Comments and
  // on-disk ordering do not affect the hash.
  std::uint64_t content_hash() const { return hash_; }

 private:
  std::unordered_set<std::string> words_;
  std::string version_;
  std::uint64_t hash_;
};

using TokenDoc = std::vector<std::string>;

bool is_stopword(std::string_view token, const StopwordList& stopwords);

TokenDoc clean(std::string_view raw, const StopwordList& stopwords);

// True iff `data` is well-formed UTF-8 (rejects overlongs, surrogates and
// code points past U+10FFFF).
bool is_valid_utf8(std::string_view data);

std::uint64_t fnv1a64(std::string_view data,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace karma
