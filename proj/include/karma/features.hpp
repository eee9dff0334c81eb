// TF-IDF feature extraction: vocabulary with smoothed IDF weights built from
// training documents only, and L2-normalized sparse document vectors.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "karma/textproc.hpp"

namespace karma {

struct SparseVector {
  std::vector<std::uint32_t> indices;  // strictly increasing, < dim
  std::vector<double> values;          // non-zero, unit L2 norm overall
  std::uint32_t dim = 0;

  double l2_norm() const;
};

struct FeatureMatrix {
  std::vector<SparseVector> rows;
  std::vector<double> targets;
  std::uint32_t dim = 0;
};

class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> tokens, std::vector<double> idf,
             std::uint64_t n_docs, std::uint32_t min_df,
             std::uint32_t max_features);

  std::uint32_t size() const { return static_cast<std::uint32_t>(tokens_.size()); }
  // -1 when the token is out of vocabulary.
  std::int64_t index_of(std::string_view token) const;
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<double>& idf() const { return idf_; }
  std::uint64_t n_docs() const { return n_docs_; }
  std::uint32_t min_df() const { return min_df_; }
  std::uint32_t max_features() const { return max_features_; }

 private:
  std::vector<std::string> tokens_;  // index -> token, lexicographic order
  std::vector<double> idf_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint64_t n_docs_ = 0;
  std::uint32_t min_df_ = 0;
  std::uint32_t max_features_ = 0;
};

// Tokens with document frequency >= min_df; when more than max_features
// qualify, the max_features highest-df tokens are kept (ties broken
// lexicographically). Column indices run lexicographically over the kept
// tokens. idf(t) = ln((1 + N) / (1 + df(t))) + 1. Hard error when nothing
// qualifies.
Vocabulary build_vocabulary(std::span<const TokenDoc> docs,
                            std::uint32_t min_df, std::uint32_t max_features);

// count(t) * idf(t) per in-vocabulary token, L2-normalized; the zero vector
// for documents with no known tokens.
SparseVector vectorize(const TokenDoc& doc, const Vocabulary& vocab);

struct FitTransformResult {
  Vocabulary vocab;
  FeatureMatrix train;
  FeatureMatrix test;
};

// Vocabulary is fit on train_docs only; both matrices share it. Rows are
// vectorized in parallel (row order fixed by input order).
FitTransformResult fit_transform(std::span<const TokenDoc> train_docs,
                                 std::span<const TokenDoc> test_docs,
                                 std::span<const double> targets_train,
                                 std::span<const double> targets_test,
                                 std::uint32_t min_df,
                                 std::uint32_t max_features);

}  // namespace karma
