#ifndef CRCPHENO_EVAL_HPP
#define CRCPHENO_EVAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crcpheno/types.hpp"

namespace crcpheno {

struct LengthMismatch : std::runtime_error {
  explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct TooFewSites : std::runtime_error {
  explicit TooFewSites(const std::string& what) : std::runtime_error(what) {}
};

// 4x4 counts; rows are true labels, columns predicted.
struct ConfusionMatrix {
  std::array<std::array<int64_t, kNumClasses>, kNumClasses> counts{};

  int64_t& at(CancerStatus truth, CancerStatus pred) {
    return counts[static_cast<size_t>(truth)][static_cast<size_t>(pred)];
  }
  int64_t at(CancerStatus truth, CancerStatus pred) const {
    return counts[static_cast<size_t>(truth)][static_cast<size_t>(pred)];
  }
  int64_t total() const;
};

ConfusionMatrix confusion_matrix(const std::vector<CancerStatus>& y_true,
                                 const std::vector<CancerStatus>& y_pred);

struct EvalReport {
  std::array<double, kNumClasses> precision{};
  std::array<double, kNumClasses> recall{};
  std::array<double, kNumClasses> f1{};
  std::array<int64_t, kNumClasses> support{};  // true-label counts
  double macro_f1 = 0.0;
  ConfusionMatrix cm;
};

// Per-class precision/recall/F1 with the 0/0 -> 0 convention; macro-F1 is the
// unweighted mean over all four classes, absent or not.
EvalReport classification_report(const ConfusionMatrix& cm);

struct NerReport {
  int64_t tp = 0;   // exact (start, end) matches
  int64_t tpp = 0;  // total predicted entities
  int64_t tgp = 0;  // total ground-truth entities
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Entities are maximal runs of positive labels; a predicted entity counts
// only when both its start and end index equal a ground-truth entity's.
NerReport ner_report(const std::vector<std::vector<int>>& true_labels,
                     const std::vector<std::vector<int>>& pred_labels);

// Renders the per-class table (one row per class plus the macro average).
std::string render_report_table(const EvalReport& report);

// --- Site-disjoint splitting --------------------------------------------------

struct SiteSplit {
  std::vector<size_t> train_indices;
  std::vector<size_t> test_indices;
  std::vector<std::string> test_sites;
};

struct SitePatient {
  std::string site_id;
  CancerStatus label = CancerStatus::Neg;
};

// Assigns whole sites to the test side until it holds at least
// test_fraction of patients. Sites are taken in seeded shuffle order, but a
// site whose addition keeps every per-class share of the test set within
// +-10% (absolute) of the global share is preferred over earlier ones.
SiteSplit split_by_site(const std::vector<SitePatient>& patients, double test_fraction,
                        uint64_t seed);

}  // namespace crcpheno

#endif  // CRCPHENO_EVAL_HPP
