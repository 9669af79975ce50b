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


#include "acrokit/model.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "acrokit/unicode.h"
#include "json.hpp"

namespace acrokit {

using ordered_json = nlohmann::ordered_json;

namespace {

uint64_t HashWord(std::string_view word, uint64_t seed) {
  uint64_t hash = 1469598103934665603ull ^ seed;
  for (unsigned char c : word) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

Vector Sigmoid(const Vector &x) {
  return x.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

Vector Tanh(const Vector &x) {
  return x.unaryExpr([](double v) { return std::tanh(v); });
}

// Per-direction activations over the m non-PAD positions, in sequence order.
struct DirectionTrace {
  Matrix gates;       // 4h x m, post-activation
  Matrix cells;       // h x m
  Matrix tanh_cells;  // h x m
  Matrix hidden;      // h x m
  Matrix previous;    // h x m, hidden state fed into step t
};

void RunDirection(const LstmWeights &w, const Matrix &x, bool reverse,
                  DirectionTrace *trace) {
  const int h = static_cast<int>(w.recurrent.cols());
  const int m = static_cast<int>(x.cols());
  Matrix pre = w.input * x;
  pre.colwise() += w.bias;
  trace->gates.resize(4 * h, m);
  trace->cells.resize(h, m);
  trace->tanh_cells.resize(h, m);
  trace->hidden.resize(h, m);
  trace->previous.resize(h, m);
  Vector h_prev = Vector::Zero(h);
  Vector c_prev = Vector::Zero(h);
  for (int s = 0; s < m; ++s) {
    const int t = reverse ? m - 1 - s : s;
    const Vector z = pre.col(t) + w.recurrent * h_prev;
    const Vector i = Sigmoid(z.segment(0, h));
    const Vector f = Sigmoid(z.segment(h, h));
    const Vector g = Tanh(z.segment(2 * h, h));
    const Vector o = Sigmoid(z.segment(3 * h, h));
    const Vector c = f.cwiseProduct(c_prev) + i.cwiseProduct(g);
    const Vector tc = Tanh(c);
    trace->gates.col(t) << i, f, g, o;
    trace->cells.col(t) = c;
    trace->tanh_cells.col(t) = tc;
    trace->previous.col(t) = h_prev;
    h_prev = o.cwiseProduct(tc);
    trace->hidden.col(t) = h_prev;
    c_prev = c;
  }
}

void BackpropDirection(const LstmWeights &w, const Matrix &x, bool reverse,
                       const DirectionTrace &trace, const Matrix &d_hidden,
                       LstmWeights *grad) {
  const int h = static_cast<int>(w.recurrent.cols());
  const int m = static_cast<int>(x.cols());
  Matrix dz_all(4 * h, m);
  Vector dh_next = Vector::Zero(h);
  Vector dc_next = Vector::Zero(h);
  for (int s = m - 1; s >= 0; --s) {
    const int t = reverse ? m - 1 - s : s;
    const int prev = reverse ? t + 1 : t - 1;
    const auto gates = trace.gates.col(t);
    const Vector i = gates.segment(0, h);
    const Vector f = gates.segment(h, h);
    const Vector g = gates.segment(2 * h, h);
    const Vector o = gates.segment(3 * h, h);
    const Vector tc = trace.tanh_cells.col(t);
    const Vector c_prev = s > 0 ? Vector(trace.cells.col(prev)) : Vector::Zero(h);

    const Vector dh = d_hidden.col(t) + dh_next;
    const Vector d_o = dh.cwiseProduct(tc);
    const Vector dc =
        dh.cwiseProduct(o).cwiseProduct((1.0 - tc.array().square()).matrix()) +
        dc_next;
    const Vector d_i = dc.cwiseProduct(g);
    const Vector d_g = dc.cwiseProduct(i);
    const Vector d_f = dc.cwiseProduct(c_prev);
    dc_next = dc.cwiseProduct(f);

    auto dz = dz_all.col(t);
    dz.segment(0, h) = d_i.array() * i.array() * (1.0 - i.array());
    dz.segment(h, h) = d_f.array() * f.array() * (1.0 - f.array());
    dz.segment(2 * h, h) = d_g.array() * (1.0 - g.array().square());
    dz.segment(3 * h, h) = d_o.array() * o.array() * (1.0 - o.array());
    dh_next = w.recurrent.transpose() * dz;
  }
  grad->input.noalias() += dz_all * x.transpose();
  grad->recurrent.noalias() += dz_all * trace.previous.transpose();
  grad->bias += dz_all.rowwise().sum();
}

struct ForwardPass {
  std::vector<int> valid;  // positions of non-PAD ids
  int acronym_col = 0;     // column of the acronym among valid positions
  Matrix x;                // d x m
  DirectionTrace forward;
  DirectionTrace backward;
  Matrix states;           // 2h x m
  Vector pooled;
  std::vector<int> argmax;  // per row of pooled, column in states
  Vector features;         // [pooled ; acronym_state]
  Vector hidden;           // tanh(W1 u + b1)
  Vector logits;
};

void Forward(const ModelParams &p, const EncodedInput &input, ForwardPass *pass) {
  const int n = static_cast<int>(input.ids.size());
  if (input.acronym_pos < 0 || input.acronym_pos >= n ||
      input.ids[input.acronym_pos] == EmbeddingTable::kPad) {
    throw ModelError("acronym position is outside the sequence or PAD");
  }
  for (int t = 0; t < n; ++t) {
    if (input.ids[t] < 0 || input.ids[t] >= p.embedding.size()) {
      throw ModelError("token id out of range");
    }
    if (input.ids[t] == EmbeddingTable::kPad) continue;
    if (t == input.acronym_pos) pass->acronym_col = static_cast<int>(pass->valid.size());
    pass->valid.push_back(t);
  }
  const int m = static_cast<int>(pass->valid.size());
  const int h = p.hidden_size();
  pass->x.resize(p.embedding.dim(), m);
  for (int c = 0; c < m; ++c) pass->x.col(c) = p.embedding.Column(input.ids[pass->valid[c]]);
  RunDirection(p.forward, pass->x, false, &pass->forward);
  RunDirection(p.backward, pass->x, true, &pass->backward);
  pass->states.resize(2 * h, m);
  pass->states.topRows(h) = pass->forward.hidden;
  pass->states.bottomRows(h) = pass->backward.hidden;

  pass->pooled.resize(2 * h);
  pass->argmax.assign(2 * h, 0);
  for (int r = 0; r < 2 * h; ++r) {
    Eigen::Index best;
    pass->pooled(r) = pass->states.row(r).maxCoeff(&best);
    pass->argmax[r] = static_cast<int>(best);
  }
  pass->features.resize(4 * h);
  pass->features << pass->pooled, pass->states.col(pass->acronym_col);
  pass->hidden = Tanh(p.hidden_w * pass->features + p.hidden_b);
  pass->logits = p.output_w * pass->hidden + p.output_b;
}

double LogSumExp(const Vector &v) {
  const double top = v.maxCoeff();
  return top + std::log((v.array() - top).exp().sum());
}

ordered_json MatrixJson(const Matrix &m) {
  ordered_json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  std::vector<double> data;
  data.reserve(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  out["data"] = std::move(data);
  return out;
}

Matrix MatrixFromJson(const nlohmann::json &j, const std::string &name) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto &data = j.at("data");
  if (rows < 0 || cols < 0 || static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw ModelError("bad shape for " + name);
  }
  Matrix m(rows, cols);
  size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[k++].get<double>();
  }
  return m;
}

Vector VectorFromJson(const nlohmann::json &j, const std::string &name) {
  const Matrix m = MatrixFromJson(j, name);
  if (m.cols() != 1) throw ModelError(name + " must be a column vector");
  return m.col(0);
}

ordered_json LstmJson(const LstmWeights &w) {
  ordered_json out;
  out["input"] = MatrixJson(w.input);
  out["recurrent"] = MatrixJson(w.recurrent);
  out["bias"] = MatrixJson(w.bias);
  return out;
}

LstmWeights LstmFromJson(const nlohmann::json &j, const std::string &name) {
  LstmWeights w;
  w.input = MatrixFromJson(j.at("input"), name + ".input");
  w.recurrent = MatrixFromJson(j.at("recurrent"), name + ".recurrent");
  w.bias = VectorFromJson(j.at("bias"), name + ".bias");
  return w;
}

void CheckShape(const Matrix &m, Eigen::Index rows, Eigen::Index cols,
                const char *name) {
  if (m.rows() != rows || m.cols() != cols) {
    std::ostringstream msg;
    msg << name << " is " << m.rows() << "x" << m.cols() << ", expected " << rows
        << "x" << cols;
    throw ModelError(msg.str());
  }
}

}  // namespace

EmbeddingTable EmbeddingTable::FromMatrix(std::vector<std::string> words,
                                          Matrix vectors) {
  if (words.size() < 2 || words[kPad] != kPadToken || words[kUnk] != kUnkToken) {
    throw ModelError("embedding vocabulary must start with <pad>, <unk>");
  }
  if (static_cast<Eigen::Index>(words.size()) != vectors.cols()) {
    throw ModelError("embedding vocabulary and matrix disagree");
  }
  EmbeddingTable table;
  table.words_ = std::move(words);
  table.vectors_ = std::move(vectors);
  for (size_t i = kUnk + 1; i < table.words_.size(); ++i) {
    if (!table.index_.emplace(table.words_[i], static_cast<int>(i)).second) {
      throw ModelError("duplicate embedding word '" + table.words_[i] + "'");
    }
  }
  return table;
}

EmbeddingTable EmbeddingTable::Random(const std::vector<std::string> &words,
                                      int dim, uint64_t seed) {
  std::vector<std::string> vocab = {kPadToken, kUnkToken};
  std::unordered_map<std::string, int> seen;
  for (const std::string &word : words) {
    std::string key = Lowercase(word);
    if (seen.emplace(key, 0).second) vocab.push_back(std::move(key));
  }
  Matrix vectors(dim, static_cast<Eigen::Index>(vocab.size()));
  vectors.col(kPad).setZero();
  for (size_t i = kUnk; i < vocab.size(); ++i) {
    std::mt19937_64 rng(HashWord(vocab[i], seed));
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int r = 0; r < dim; ++r) vectors(r, static_cast<Eigen::Index>(i)) = normal(rng);
  }
  return FromMatrix(std::move(vocab), std::move(vectors));
}

EmbeddingTable EmbeddingTable::LoadText(const std::string &path,
                                        const std::vector<std::string> &keep) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read embeddings " + path);
  std::unordered_map<std::string, int> wanted;
  for (const std::string &word : keep) wanted.emplace(Lowercase(word), 0);

  std::vector<std::string> vocab = {kPadToken, kUnkToken};
  std::unordered_map<std::string, int> seen;
  std::vector<std::vector<double>> rows;
  int dim = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;
    std::vector<double> values;
    double v;
    while (fields >> v) values.push_back(v);
    if (line_no == 1 && values.size() == 1) continue;  // "count dim" header
    if (dim < 0) dim = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != dim || dim == 0) {
      throw ModelError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(dim) + " values");
    }
    word = Lowercase(word);
    if (!wanted.empty() && !wanted.count(word)) continue;
    if (!seen.emplace(word, 0).second) continue;
    vocab.push_back(word);
    rows.push_back(std::move(values));
  }
  if (dim <= 0) throw ModelError("no vectors in " + path);
  Matrix vectors = Matrix::Zero(dim, static_cast<Eigen::Index>(vocab.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int r = 0; r < dim; ++r) vectors(r, static_cast<Eigen::Index>(i + 2)) = rows[i][r];
  }
  if (!rows.empty()) {
    vectors.col(kUnk) = vectors.rightCols(rows.size()).rowwise().mean();
  }
  return FromMatrix(std::move(vocab), std::move(vectors));
}

int EmbeddingTable::Id(const std::string &token) const {
  auto it = index_.find(Lowercase(token));
  return it == index_.end() ? kUnk : it->second;
}

void LstmWeights::Resize(int d, int h) {
  input = Matrix::Zero(4 * h, d);
  recurrent = Matrix::Zero(4 * h, h);
  bias = Vector::Zero(4 * h);
}

void LstmWeights::SetZero() {
  input.setZero();
  recurrent.setZero();
  bias.setZero();
}

int ModelParams::LabelIndex(const std::string &label) const {
  for (size_t i = 0; i < label_space.size(); ++i) {
    if (label_space[i] == label) return static_cast<int>(i);
  }
  return -1;
}

void ModelParams::Validate() const {
  const int d = embedding.dim();
  const int h = hidden_size();
  const int k = ffn_size();
  const int labels = static_cast<int>(label_space.size());
  if (d < 1 || h < 1 || k < 1 || labels < 1 || embedding.size() < 2) {
    throw ModelError("model has an empty dimension");
  }
  for (const LstmWeights *w : {&forward, &backward}) {
    CheckShape(w->input, 4 * h, d, "lstm input");
    CheckShape(w->recurrent, 4 * h, h, "lstm recurrent");
    CheckShape(w->bias, 4 * h, 1, "lstm bias");
  }
  CheckShape(hidden_w, k, 4 * h, "hidden_w");
  CheckShape(hidden_b, k, 1, "hidden_b");
  CheckShape(output_w, labels, k, "output_w");
  CheckShape(output_b, labels, 1, "output_b");
  if (max_length < 1) throw ModelError("max_length must be positive");
}

ModelParams InitModel(EmbeddingTable embedding,
                      std::vector<std::string> label_space,
                      const ModelShape &shape, uint64_t seed) {
  ModelParams p;
  p.label_space = std::move(label_space);
  p.max_length = shape.max_length;
  p.embedding = std::move(embedding);
  const int d = p.embedding.dim();
  const int h = shape.hidden_size;
  const int k = shape.ffn_size;
  const int labels = static_cast<int>(p.label_space.size());
  std::mt19937_64 rng(seed);
  auto xavier = [&rng](int rows, int cols, int fan_in, int fan_out) {
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    std::uniform_real_distribution<double> uniform(-limit, limit);
    Matrix m(rows, cols);
    for (int c = 0; c < cols; ++c) {
      for (int r = 0; r < rows; ++r) m(r, c) = uniform(rng);
    }
    return m;
  };
  for (LstmWeights *w : {&p.forward, &p.backward}) {
    w->input = xavier(4 * h, d, d, h);
    w->recurrent = xavier(4 * h, h, h, h);
    w->bias = Vector::Zero(4 * h);
    w->bias.segment(h, h).setOnes();
  }
  p.hidden_w = xavier(k, 4 * h, 4 * h, k);
  p.hidden_b = Vector::Zero(k);
  p.output_w = xavier(labels, k, k, labels);
  p.output_b = Vector::Zero(labels);
  p.Validate();
  return p;
}

EncodedInput PrepareInput(const ModelParams &params,
                          const std::vector<std::string> &tokens,
                          int acronym_idx) {
  const int n = static_cast<int>(tokens.size());
  if (acronym_idx < 0 || acronym_idx >= n) {
    throw ModelError("acronym index out of range");
  }
  int begin = 0;
  int end = n;
  if (n > params.max_length) {
    begin = std::max(0, acronym_idx - params.max_length / 2);
    end = begin + params.max_length;
    if (end > n) {
      end = n;
      begin = n - params.max_length;
    }
  }
  EncodedInput input;
  input.acronym_pos = acronym_idx - begin;
  for (int i = begin; i < end; ++i) input.ids.push_back(params.embedding.Id(tokens[i]));
  return input;
}

EncoderState Encode(const ModelParams &params, const EncodedInput &input) {
  ForwardPass pass;
  Forward(params, input, &pass);
  EncoderState state;
  const int n = static_cast<int>(input.ids.size());
  state.states = Matrix::Zero(2 * params.hidden_size(), n);
  for (size_t c = 0; c < pass.valid.size(); ++c) {
    state.states.col(pass.valid[c]) = pass.states.col(static_cast<Eigen::Index>(c));
  }
  state.pooled = pass.pooled;
  state.acronym_state = pass.states.col(pass.acronym_col);
  return state;
}

Vector Classify(const ModelParams &params, const EncoderState &state) {
  const int h = params.hidden_size();
  if (state.pooled.size() != 2 * h || state.acronym_state.size() != 2 * h) {
    throw ModelError("encoder state width does not match the model");
  }
  Vector features(4 * h);
  features << state.pooled, state.acronym_state;
  const Vector hidden = Tanh(params.hidden_w * features + params.hidden_b);
  return params.output_w * hidden + params.output_b;
}

Vector MaskedSoftmax(const Vector &logits, const std::vector<int> &mask) {
  Vector scores(static_cast<Eigen::Index>(mask.size()));
  if (mask.empty()) return scores;
  double top = -std::numeric_limits<double>::infinity();
  for (int i : mask) top = std::max(top, logits(i));
  double total = 0.0;
  for (size_t k = 0; k < mask.size(); ++k) {
    scores(static_cast<Eigen::Index>(k)) = std::exp(logits(mask[k]) - top);
    total += scores(static_cast<Eigen::Index>(k));
  }
  return scores / total;
}

Gradients::Gradients(const ModelParams &params) {
  const int d = params.embedding.dim();
  const int h = params.hidden_size();
  forward.Resize(d, h);
  backward.Resize(d, h);
  hidden_w = Matrix::Zero(params.hidden_w.rows(), params.hidden_w.cols());
  hidden_b = Vector::Zero(params.hidden_b.size());
  output_w = Matrix::Zero(params.output_w.rows(), params.output_w.cols());
  output_b = Vector::Zero(params.output_b.size());
}

void Gradients::SetZero() {
  forward.SetZero();
  backward.SetZero();
  hidden_w.setZero();
  hidden_b.setZero();
  output_w.setZero();
  output_b.setZero();
}

void Gradients::Scale(double factor) {
  for (LstmWeights *w : {&forward, &backward}) {
    w->input *= factor;
    w->recurrent *= factor;
    w->bias *= factor;
  }
  hidden_w *= factor;
  hidden_b *= factor;
  output_w *= factor;
  output_b *= factor;
}

double Gradients::SquaredNorm() const {
  double total = 0.0;
  for (const LstmWeights *w : {&forward, &backward}) {
    total += w->input.squaredNorm() + w->recurrent.squaredNorm() +
             w->bias.squaredNorm();
  }
  return total + hidden_w.squaredNorm() + hidden_b.squaredNorm() +
         output_w.squaredNorm() + output_b.squaredNorm();
}

double LossAndGradients(const ModelParams &params, const EncodedInput &input,
                        int gold, Gradients *grads, bool encoder_grads) {
  if (gold < 0 || gold >= static_cast<int>(params.label_space.size())) {
    throw ModelError("gold label out of range");
  }
  ForwardPass pass;
  Forward(params, input, &pass);
  const double loss = LogSumExp(pass.logits) - pass.logits(gold);
  if (grads == nullptr) return loss;

  Vector d_logits = (pass.logits.array() - LogSumExp(pass.logits)).exp();
  d_logits(gold) -= 1.0;
  grads->output_w.noalias() += d_logits * pass.hidden.transpose();
  grads->output_b += d_logits;
  const Vector d_hidden = (params.output_w.transpose() * d_logits)
                              .cwiseProduct((1.0 - pass.hidden.array().square()).matrix());
  grads->hidden_w.noalias() += d_hidden * pass.features.transpose();
  grads->hidden_b += d_hidden;
  if (!encoder_grads) return loss;

  const int h = params.hidden_size();
  const Vector d_features = params.hidden_w.transpose() * d_hidden;
  Matrix d_states = Matrix::Zero(2 * h, pass.states.cols());
  for (int r = 0; r < 2 * h; ++r) d_states(r, pass.argmax[r]) += d_features(r);
  d_states.col(pass.acronym_col) += d_features.tail(2 * h);
  BackpropDirection(params.forward, pass.x, false, pass.forward,
                    d_states.topRows(h), &grads->forward);
  BackpropDirection(params.backward, pass.x, true, pass.backward,
                    d_states.bottomRows(h), &grads->backward);
  return loss;
}

void ApplyGradients(const Gradients &grads, double rate, ModelParams *params) {
  const std::pair<LstmWeights *, const LstmWeights *> blocks[] = {
      {&params->forward, &grads.forward}, {&params->backward, &grads.backward}};
  for (auto [w, g] : blocks) {
    w->input -= rate * g->input;
    w->recurrent -= rate * g->recurrent;
    w->bias -= rate * g->bias;
  }
  params->hidden_w -= rate * grads.hidden_w;
  params->hidden_b -= rate * grads.hidden_b;
  params->output_w -= rate * grads.output_w;
  params->output_b -= rate * grads.output_b;
}

std::string ModelToJson(const ModelParams &params) {
  ordered_json root;
  root["version"] = ModelParams::kFormatVersion;
  root["chunk_id"] = params.chunk_id;
  root["label_space"] = params.label_space;
  root["acronyms"] = params.acronyms;
  root["max_length"] = params.max_length;
  root["hidden_size"] = params.hidden_size();
  root["ffn_size"] = params.ffn_size();
  ordered_json embedding;
  embedding["words"] = params.embedding.words();
  embedding["vectors"] = MatrixJson(params.embedding.vectors().transpose());
  root["embedding"] = std::move(embedding);
  root["forward"] = LstmJson(params.forward);
  root["backward"] = LstmJson(params.backward);
  root["hidden_w"] = MatrixJson(params.hidden_w);
  root["hidden_b"] = MatrixJson(params.hidden_b);
  root["output_w"] = MatrixJson(params.output_w);
  root["output_b"] = MatrixJson(params.output_b);
  return root.dump();
}

ModelParams ModelFromJson(std::string_view text) {
  ModelParams p;
  try {
    const nlohmann::json root = nlohmann::json::parse(text);
    if (root.at("version") != ModelParams::kFormatVersion) {
      throw ModelError("unsupported model version " + root.at("version").dump());
    }
    p.chunk_id = root.at("chunk_id").get<std::string>();
    p.label_space = root.at("label_space").get<std::vector<std::string>>();
    p.acronyms = root.at("acronyms").get<std::vector<std::string>>();
    p.max_length = root.at("max_length").get<int>();
    const auto &embedding = root.at("embedding");
    p.embedding = EmbeddingTable::FromMatrix(
        embedding.at("words").get<std::vector<std::string>>(),
        MatrixFromJson(embedding.at("vectors"), "embedding").transpose());
    p.forward = LstmFromJson(root.at("forward"), "forward");
    p.backward = LstmFromJson(root.at("backward"), "backward");
    p.hidden_w = MatrixFromJson(root.at("hidden_w"), "hidden_w");
    p.hidden_b = VectorFromJson(root.at("hidden_b"), "hidden_b");
    p.output_w = MatrixFromJson(root.at("output_w"), "output_w");
    p.output_b = VectorFromJson(root.at("output_b"), "output_b");
    if (root.at("hidden_size").get<int>() != p.hidden_size() ||
        root.at("ffn_size").get<int>() != p.ffn_size()) {
      throw ModelError("declared sizes disagree with weights");
    }
  } catch (const nlohmann::json::exception &e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
  p.Validate();
  return p;
}

void SaveModel(const ModelParams &params, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  out << ModelToJson(params) << '\n';
  if (!out) throw ModelError("cannot write " + path);
}

ModelParams LoadModel(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ModelFromJson(buffer.str());
}

}  // namespace acrokit
