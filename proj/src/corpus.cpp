#include "karma/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "karma/csv.hpp"
#include "karma/error.hpp"
#include "karma/prng.hpp"
#include "karma/textproc.hpp"

namespace karma {

std::string combine_fields(std::string_view title, std::string_view selftext) {
  if (selftext.empty()) return std::string(title);
  std::string out;
  out.reserve(title.size() + 1 + selftext.size());
  out.append(title);
  out.push_back(' ');
  out.append(selftext);
  return out;
}

namespace {

bool parse_ups(const std::string& field, std::uint64_t& out) {
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

LoadResult load_posts(std::istream& csv_source, std::string_view source_label) {
  csv::Reader reader(csv_source);
  auto header = reader.next();
  if (!header) throw DataError("load_posts: empty input, no header row");

  const auto find_col = [&](const char* name) {
    auto it = std::find(header->begin(), header->end(), name);
    if (it == header->end())
      throw DataError(std::string("load_posts: missing required column `") +
                      name + "`");
    return static_cast<std::size_t>(it - header->begin());
  };
  const std::size_t col_ups = find_col("ups");
  const std::size_t col_title = find_col("title");
  const std::size_t col_selftext = find_col("selftext");

  LoadResult result;
  result.collection.source_label = std::string(source_label);
  while (auto row = reader.next()) {
    if (row->size() != header->size()) {
      ++result.skipped;
      continue;
    }
    std::uint64_t ups = 0;
    if (!parse_ups((*row)[col_ups], ups)) {
      ++result.skipped;
      continue;
    }
    Post post;
    post.ups = ups;
    post.title = std::move((*row)[col_title]);
    post.selftext = std::move((*row)[col_selftext]);
    if (!is_valid_utf8(post.title) || !is_valid_utf8(post.selftext))
      throw DataError("load_posts: invalid UTF-8 in row of " +
                      result.collection.source_label);
    post.combined = combine_fields(post.title, post.selftext);
    result.collection.posts.push_back(std::move(post));
  }
  return result;
}

void write_posts_csv(const PostCollection& collection, std::ostream& out) {
  csv::write_row(out, {"ups", "title", "selftext"});
  for (const auto& post : collection.posts) {
    csv::write_row(out,
                   {std::to_string(post.ups), post.title, post.selftext});
  }
}

SplitResult split(const PostCollection& collection, double train_fraction,
                  std::uint64_t seed) {
  const std::size_t n = collection.posts.size();
  if (n < 2) throw DataError("split: collection needs at least 2 posts");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw DataError("split: train_fraction must be in (0,1)");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Xoshiro256 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.bounded(i + 1));
    std::swap(order[i], order[j]);
  }

  const auto n_train = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * train_fraction));

  SplitResult result;
  result.seed = seed;
  result.train_fraction = train_fraction;
  result.train.source_label = collection.source_label;
  result.test.source_label = collection.source_label;
  for (std::size_t i = 0; i < n; ++i) {
    const Post& post = collection.posts[order[i]];
    (i < n_train ? result.train : result.test).posts.push_back(post);
  }
  return result;
}

namespace {

std::string filler_word(std::size_t index) {
  std::string w = "f__";
  w[1] = static_cast<char>('a' + index / 26);
  w[2] = static_cast<char>('a' + index % 26);
  return w;
}

std::size_t count_token(const std::vector<std::string>& tokens,
                        const std::string& token) {
  return static_cast<std::size_t>(
      std::count(tokens.begin(), tokens.end(), token));
}

}  // namespace

PostCollection synth_fixture(const FixtureSpec& spec) {
  if (spec.n_posts < 1) throw DataError("synth_fixture: n_posts must be >= 1");
  if (spec.noise_sd < 0.0)
    throw DataError("synth_fixture: noise_sd must be >= 0");
  if (spec.filler_vocab < 1 || spec.filler_vocab > 26 * 26)
    throw DataError("synth_fixture: filler_vocab must be in [1, 676]");
  if (spec.min_filler > spec.max_filler)
    throw DataError("synth_fixture: min_filler > max_filler");
  for (const auto& st : spec.signal_tokens) {
    if (st.token.empty() ||
        st.token.find_first_not_of("abcdefghijklmnopqrstuvwxyz") !=
            std::string::npos)
      throw DataError("synth_fixture: signal token must match [a-z]+: `" +
                      st.token + "`");
  }

  PostCollection collection;
  collection.source_label = spec.source_label;
  collection.posts.reserve(spec.n_posts);
  Xoshiro256 rng(spec.seed);

  for (std::size_t p = 0; p < spec.n_posts; ++p) {
    const std::size_t n_filler =
        spec.min_filler +
        static_cast<std::size_t>(
            rng.bounded(spec.max_filler - spec.min_filler + 1));
    std::vector<std::string> tokens;
    tokens.reserve(n_filler + spec.signal_tokens.size());
    for (std::size_t i = 0; i < n_filler; ++i)
      tokens.push_back(filler_word(
          static_cast<std::size_t>(rng.bounded(spec.filler_vocab))));
    for (const auto& st : spec.signal_tokens) {
      if (rng.uniform() < spec.signal_prob) {
        const auto pos =
            static_cast<std::size_t>(rng.bounded(tokens.size() + 1));
        tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                      st.token);
      }
    }
    const double noise = rng.normal() * spec.noise_sd;

    double target = spec.base_ups + noise;
    for (const auto& st : spec.signal_tokens)
      target += st.weight * static_cast<double>(count_token(tokens, st.token));

    Post post;
    post.ups =
        static_cast<std::uint64_t>(std::llround(std::max(0.0, target)));
    const std::size_t title_len = std::min<std::size_t>(3, tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string& dst = i < title_len ? post.title : post.selftext;
      if (!dst.empty()) dst.push_back(' ');
      dst.append(tokens[i]);
    }
    post.combined = combine_fields(post.title, post.selftext);
    collection.posts.push_back(std::move(post));
  }
  return collection;
}

}  // namespace karma
