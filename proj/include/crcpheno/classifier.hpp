#ifndef CRCPHENO_CLASSIFIER_HPP
#define CRCPHENO_CLASSIFIER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crcpheno/parallel.hpp"
#include "crcpheno/preprocess.hpp"
#include "crcpheno/types.hpp"

namespace crcpheno {

struct EmptyVocabulary : std::runtime_error {
  explicit EmptyVocabulary(const std::string& what) : std::runtime_error(what) {}
};

// Unigram vocabulary over segments. Terms are indexed densely 0..V-1 in
// lexicographic order; document frequency counts segments.
struct Vocabulary {
  std::map<std::string, int> term_to_index;
  std::vector<std::string> terms;         // index -> term
  std::vector<int> document_frequency;    // index -> df
  int corpus_size = 0;                    // N segments

  int size() const { return static_cast<int>(terms.size()); }
};

Vocabulary build_vocabulary(const std::vector<Segment>& segments, int min_df = 10);

// Sparse tf-idf vector; indices strictly increasing, L2 norm 1 unless empty.
struct TfIdfVector {
  std::vector<std::pair<int, double>> entries;
};

// tf = raw count, idf = ln((1+N)/(1+df)) + 1, then L2 normalization.
// Out-of-vocabulary tokens (including the document separator) are dropped.
double idf_weight(int corpus_size, int document_frequency);
TfIdfVector tfidf_transform(const std::vector<std::string>& tokens, const Vocabulary& vocab);

struct LinearHyper {
  double reg_c = 1.0;     // SVM regularization strength C
  int epochs = 64;
  double learning_rate = 0.5;
  uint64_t seed = 1;
};

// One-vs-rest linear margins over tf-idf features, trained by deterministic
// epoch-based subgradient descent on the L2-regularized hinge loss.
struct LinearModel {
  int num_features = 0;
  std::array<std::vector<double>, kNumClasses> weights;
  std::array<double, kNumClasses> biases{0, 0, 0, 0};
  LinearHyper hyper;

  double margin(int cls, const TfIdfVector& v) const;
};

LinearModel train_linear(const std::vector<TfIdfVector>& xs,
                         const std::vector<CancerStatus>& ys, int num_features,
                         const LinearHyper& hyper, ExecMode mode = ExecMode::Parallel);

// Softmax over the four margins.
ClassProbs predict_segment(const LinearModel& model, const TfIdfVector& v);

// Multiple-instance pooling: elementwise max across the bag's segment
// probabilities, renormalized through softmax. Argmax is unchanged by the
// renormalization since softmax is strictly monotone.
ClassProbs aggregate_patient(const std::vector<ClassProbs>& segment_probs);

ClassProbs predict_patient(const LinearModel& model, const Vocabulary& vocab,
                           const std::vector<Segment>& segments);

// Data-parallel bag prediction for many patients; output order = input order.
std::vector<ClassProbs> predict_patients(const LinearModel& model, const Vocabulary& vocab,
                                         const std::vector<PreprocessedPatient>& patients,
                                         ExecMode mode = ExecMode::Parallel);

// --- Integrated gradients -----------------------------------------------------

// Attribution of the target-class margin for input v against the zero
// baseline. For a linear margin this is w_i * x_i exactly; the path
// integral averages the margin gradient over `steps` points and exists to
// cross-check the closed form.
struct Attribution {
  std::vector<std::pair<int, double>> entries;  // aligned with v's indices
  double completeness_gap = 0.0;  // |sum - (margin(x) - margin(0))|
};

Attribution attribute(const LinearModel& model, const TfIdfVector& v, CancerStatus target);
Attribution attribute_path_integral(const LinearModel& model, const TfIdfVector& v,
                                    CancerStatus target, int steps = 256);

// --- Grid search ---------------------------------------------------------------

struct EmptyGrid : std::runtime_error {
  explicit EmptyGrid(const std::string& what) : std::runtime_error(what) {}
};

struct LabeledSet {
  std::vector<TfIdfVector> xs;
  std::vector<CancerStatus> ys;
};

struct GridSearchResult {
  LinearHyper best;
  double best_val_macro_f1 = 0.0;
  std::vector<std::pair<LinearHyper, double>> evaluated;  // grid order
};

// Exhaustive evaluation; best validation macro-F1 wins, ties go to the
// smaller regularization strength.
GridSearchResult grid_search(const LabeledSet& train, const LabeledSet& val,
                             int num_features, const std::vector<LinearHyper>& grid,
                             ExecMode mode = ExecMode::Parallel);

}  // namespace crcpheno

#endif  // CRCPHENO_CLASSIFIER_HPP
