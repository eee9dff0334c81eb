// Post ingestion and corpus plumbing: CSV loading with the fixed
// ups/title/selftext schema, the combined-text feature, seeded train/test
// splitting, and a synthetic fixture generator with planted token signal
// for desk-scale verification.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace karma {

struct Post {
  std::uint64_t ups = 0;
  std::string title;
  std::string selftext;
  std::string combined;
};

struct PostCollection {
  std::vector<Post> posts;
  std::string source_label;
};

struct LoadResult {
  PostCollection collection;
  std::size_t skipped = 0;  // malformed rows dropped, never fabricated
};

struct SplitResult {
  PostCollection train;
  PostCollection test;
  std::uint64_t seed = 0;
  double train_fraction = 0.0;
};

// title + " " + selftext; title alone when selftext is empty.
std::string combine_fields(std::string_view title, std::string_view selftext);

// Reads RFC-4180 CSV with a header row. Required columns `ups`, `title`,
// `selftext` (case-sensitive); extra columns are ignored. Rows whose `ups`
// is not a non-negative integer, or whose field count does not match the
// header, are skipped and counted. Missing required column, invalid UTF-8
// or an unreadable stream is a hard error.
LoadResult load_posts(std::istream& csv_source, std::string_view source_label);

// Same schema as the loader accepts, so fixtures and real data flow
// through one path.
void write_posts_csv(const PostCollection& collection, std::ostream& out);

// Fisher-Yates shuffle (i from n-1 down to 1, j = next() % (i+1)) driven by
// xoshiro256** seeded with `seed`; the first ceil(n * train_fraction)
// shuffled posts become the train side. Requires at least 2 posts.
SplitResult split(const PostCollection& collection, double train_fraction,
                  std::uint64_t seed);

struct SignalToken {
  std::string token;  // lowercase a-z, must survive cleaning unchanged
  double weight = 0.0;
};

struct FixtureSpec {
  std::size_t n_posts = 0;
  std::vector<SignalToken> signal_tokens;
  double noise_sd = 0.0;
  std::uint64_t seed = 0;
  double base_ups = 10.0;
  double signal_prob = 0.5;  // per-post inclusion probability of each token
  std::size_t filler_vocab = 120;
  std::size_t min_filler = 6;
  std::size_t max_filler = 14;
  std::string source_label = "fixture";
};

// Random filler text plus planted signal tokens;
// ups = round(max(0, base + sum(weight * count(token)) + N(0, noise_sd))).
// Deterministic per seed.
PostCollection synth_fixture(const FixtureSpec& spec);

}  // namespace karma
