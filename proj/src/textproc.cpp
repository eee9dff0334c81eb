#include "karma/textproc.hpp"

#include <algorithm>
#include <fstream>

#include "karma/error.hpp"

namespace karma {

namespace detail {
extern const char* kStopwordsVersion;
std::vector<std::string> builtin_stopwords();
}  // namespace detail

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

StopwordList::StopwordList(std::vector<std::string> words, std::string version)
    : version_(std::move(version)) {
  for (auto& w : words) {
    if (w.empty()) throw DataError("stopwords: empty entry");
    for (char c : w) {
      if (c >= 'A' && c <= 'Z')
        throw DataError("stopwords: entry not lowercase: " + w);
    }
    words_.insert(std::move(w));
  }
  std::vector<std::string> sorted(words_.begin(), words_.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& w : sorted) {
    h = fnv1a64(w, h);
    h = fnv1a64("\n", h);
  }
  hash_ = h;
}

const StopwordList& StopwordList::builtin() {
  static const StopwordList list(detail::builtin_stopwords(),
                                 detail::kStopwordsVersion);
  return list;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("stopwords: cannot open " + path.string());
  std::vector<std::string> words;
  std::string version;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (version.empty()) {
        std::size_t start = line.find_first_not_of("# \t");
        if (start != std::string::npos) version = line.substr(start);
      }
      continue;
    }
    words.push_back(line);
  }
  if (in.bad()) throw DataError("stopwords: read failure on " + path.string());
  if (version.empty()) version = path.filename().string();
  return StopwordList(std::move(words), std::move(version));
}

bool StopwordList::contains(std::string_view token) const {
  return words_.find(std::string(token)) != words_.end();
}

bool is_stopword(std::string_view token, const StopwordList& stopwords) {
  return stopwords.contains(token);
}

TokenDoc clean(std::string_view raw, const StopwordList& stopwords) {
  TokenDoc tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      if (!stopwords.contains(current)) tokens.push_back(current);
      current.clear();
    }
  };
  for (char ch : raw) {
    if (ch >= 'a' && ch <= 'z') {
      current.push_back(ch);
    } else if (ch >= 'A' && ch <= 'Z') {
      current.push_back(static_cast<char>(ch - 'A' + 'a'));
    } else {
      // Digits, punctuation and all non-ASCII bytes act as separators.
      flush();
    }
  }
  flush();
  return tokens;
}

bool is_valid_utf8(std::string_view data) {
  const auto* p = reinterpret_cast<const unsigned char*>(data.data());
  const auto* end = p + data.size();
  while (p < end) {
    const unsigned char b = *p;
    if (b < 0x80) {
      ++p;
      continue;
    }
    int len;
    std::uint32_t cp;
    if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      return false;
    }
    if (end - p < len) return false;
    for (int i = 1; i < len; ++i) {
      if ((p[i] & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (p[i] & 0x3F);
    }
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    p += len;
  }
  return true;
}

}  // namespace karma
