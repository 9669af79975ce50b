// Copyright 2026 The Acrokit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ACROKIT_MODEL_H_
#define ACROKIT_MODEL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace acrokit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frozen word vectors, one column per vocabulary entry. Lookup is by
// lowercased token.
class EmbeddingTable {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr const char *kPadToken = "<pad>";
  static constexpr const char *kUnkToken = "<unk>";

  EmbeddingTable() = default;

  // Vectors drawn from N(0, 1) with a generator seeded by seed and the word,
  // so a word gets the same vector in every table built with the same seed.
  // PAD is the zero vector.
  static EmbeddingTable Random(const std::vector<std::string> &words, int dim,
                               uint64_t seed);

  // Text format: one "word v1 ... vd" line per word. Words outside keep (when
  // non-empty) are skipped. UNK is the mean of the loaded vectors.
  static EmbeddingTable LoadText(const std::string &path,
                                 const std::vector<std::string> &keep = {});

  static EmbeddingTable FromMatrix(std::vector<std::string> words, Matrix vectors);

  int Id(const std::string &token) const;
  int dim() const { return static_cast<int>(vectors_.rows()); }
  int size() const { return static_cast<int>(vectors_.cols()); }
  const std::vector<std::string> &words() const { return words_; }
  const Matrix &vectors() const { return vectors_; }
  auto Column(int id) const { return vectors_.col(id); }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
  Matrix vectors_;  // dim x |V|
};

// Gate blocks are stacked i, f, g, o.
struct LstmWeights {
  Matrix input;      // 4h x d
  Matrix recurrent;  // 4h x h
  Vector bias;       // 4h

  void Resize(int d, int h);
  void SetZero();
};

struct ModelParams {
  static constexpr int kFormatVersion = 1;

  std::string chunk_id;
  std::vector<std::string> label_space;
  std::vector<std::string> acronyms;
  int max_length = 128;
  EmbeddingTable embedding;
  LstmWeights forward;
  LstmWeights backward;
  Matrix hidden_w;  // k x 4h
  Vector hidden_b;  // k
  Matrix output_w;  // |labels| x k
  Vector output_b;  // |labels|

  int hidden_size() const { return static_cast<int>(forward.recurrent.cols()); }
  int ffn_size() const { return static_cast<int>(hidden_w.rows()); }
  int LabelIndex(const std::string &label) const;

  // Throws ModelError on any shape inconsistency.
  void Validate() const;
};

struct ModelShape {
  int hidden_size = 64;
  int ffn_size = 64;
  int max_length = 128;
};

// Xavier-uniform weights, zero biases except the forget gate (1.0).
ModelParams InitModel(EmbeddingTable embedding,
                      std::vector<std::string> label_space,
                      const ModelShape &shape, uint64_t seed);

struct EncodedInput {
  std::vector<int> ids;  // embedding rows; kPad marks padding
  int acronym_pos = 0;
};

// Lowercased lookup with UNK fallback. Sequences longer than max_length are
// cut to a window centred on the acronym.
EncodedInput PrepareInput(const ModelParams &params,
                          const std::vector<std::string> &tokens,
                          int acronym_idx);

struct EncoderState {
  Matrix states;  // 2h x n, column t = [forward_t ; backward_t]
  Vector pooled;  // 2h, max over non-PAD columns
  Vector acronym_state;
};

EncoderState Encode(const ModelParams &params, const EncodedInput &input);

Vector Classify(const ModelParams &params, const EncoderState &state);

// Softmax restricted to the label indices in mask, returned in mask order.
Vector MaskedSoftmax(const Vector &logits, const std::vector<int> &mask);

struct Gradients {
  LstmWeights forward;
  LstmWeights backward;
  Matrix hidden_w;
  Vector hidden_b;
  Matrix output_w;
  Vector output_b;

  explicit Gradients(const ModelParams &params);
  void SetZero();
  void Scale(double factor);
  double SquaredNorm() const;
};

// Cross-entropy of gold over the full label space. When grads is non-null the
// gradient is added to it; with encoder_grads false the LSTM blocks are left
// untouched.
double LossAndGradients(const ModelParams &params, const EncodedInput &input,
                        int gold, Gradients *grads, bool encoder_grads = true);

// params -= rate * grads.
void ApplyGradients(const Gradients &grads, double rate, ModelParams *params);

std::string ModelToJson(const ModelParams &params);
ModelParams ModelFromJson(std::string_view json);
void SaveModel(const ModelParams &params, const std::string &path);
ModelParams LoadModel(const std::string &path);

}  // namespace acrokit

#endif  // ACROKIT_MODEL_H_
