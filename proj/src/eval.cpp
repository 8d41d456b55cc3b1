#include "crcpheno/eval.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "crcpheno/rng.hpp"

namespace crcpheno {

int64_t ConfusionMatrix::total() const {
  int64_t t = 0;
  for (const auto& row : counts)
    for (int64_t c : row) t += c;
  return t;
}

ConfusionMatrix confusion_matrix(const std::vector<CancerStatus>& y_true,
                                 const std::vector<CancerStatus>& y_pred) {
  if (y_true.size() != y_pred.size())
    throw LengthMismatch("confusion_matrix: " + std::to_string(y_true.size()) +
                         " true labels vs " + std::to_string(y_pred.size()) + " predictions");
  if (y_true.empty()) throw LengthMismatch("confusion_matrix: empty input");
  ConfusionMatrix cm;
  for (size_t i = 0; i < y_true.size(); ++i) cm.at(y_true[i], y_pred[i])++;
  return cm;
}

namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

EvalReport classification_report(const ConfusionMatrix& cm) {
  EvalReport r;
  r.cm = cm;
  for (int k = 0; k < kNumClasses; ++k) {
    int64_t tp = cm.counts[k][k];
    int64_t pred_k = 0, true_k = 0;
    for (int j = 0; j < kNumClasses; ++j) {
      pred_k += cm.counts[j][k];
      true_k += cm.counts[k][j];
    }
    r.support[k] = true_k;
    r.precision[k] = safe_div(static_cast<double>(tp), static_cast<double>(pred_k));
    r.recall[k] = safe_div(static_cast<double>(tp), static_cast<double>(true_k));
    r.f1[k] = safe_div(2.0 * r.precision[k] * r.recall[k], r.precision[k] + r.recall[k]);
    r.macro_f1 += r.f1[k] / kNumClasses;
  }
  return r;
}

namespace {

// Maximal runs of positive labels as (start, end) pairs, end exclusive.
std::vector<std::pair<int, int>> label_runs(const std::vector<int>& labels) {
  std::vector<std::pair<int, int>> runs;
  int start = -1;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i] != 0) {
      if (start < 0) start = i;
    } else if (start >= 0) {
      runs.emplace_back(start, i);
      start = -1;
    }
  }
  if (start >= 0) runs.emplace_back(start, static_cast<int>(labels.size()));
  return runs;
}

}  // namespace

NerReport ner_report(const std::vector<std::vector<int>>& true_labels,
                     const std::vector<std::vector<int>>& pred_labels) {
  if (true_labels.size() != pred_labels.size())
    throw LengthMismatch("ner_report: document count mismatch");
  NerReport r;
  for (size_t d = 0; d < true_labels.size(); ++d) {
    if (true_labels[d].size() != pred_labels[d].size())
      throw LengthMismatch("ner_report: label length mismatch in document " + std::to_string(d));
    auto gold = label_runs(true_labels[d]);
    auto pred = label_runs(pred_labels[d]);
    r.tgp += static_cast<int64_t>(gold.size());
    r.tpp += static_cast<int64_t>(pred.size());
    // Both run lists are sorted by start; count exact boundary matches.
    size_t gi = 0;
    for (const auto& p : pred) {
      while (gi < gold.size() && gold[gi].first < p.first) ++gi;
      if (gi < gold.size() && gold[gi] == p) r.tp++;
    }
  }
  r.precision = safe_div(static_cast<double>(r.tp), static_cast<double>(r.tpp));
  r.recall = safe_div(static_cast<double>(r.tp), static_cast<double>(r.tgp));
  r.f1 = safe_div(2.0 * r.precision * r.recall, r.precision + r.recall);
  return r;
}

std::string render_report_table(const EvalReport& report) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << std::left << std::setw(8) << "class" << std::right << std::setw(10) << "precision"
     << std::setw(8) << "recall" << std::setw(8) << "f1" << std::setw(8) << "n" << "\n";
  for (int k = 0; k < kNumClasses; ++k) {
    os << std::left << std::setw(8) << to_string(static_cast<CancerStatus>(k)) << std::right
       << std::setw(10) << report.precision[k] << std::setw(8) << report.recall[k]
       << std::setw(8) << report.f1[k] << std::setw(8) << report.support[k] << "\n";
  }
  os << std::left << std::setw(8) << "macro" << std::right << std::setw(10) << ""
     << std::setw(8) << "" << std::setw(8) << report.macro_f1 << "\n";
  return os.str();
}

SiteSplit split_by_site(const std::vector<SitePatient>& patients, double test_fraction,
                        uint64_t seed) {
  // Group patient indices by site, sites in first-appearance-independent
  // (sorted) order so the shuffle alone decides ordering.
  std::map<std::string, std::vector<size_t>> by_site;
  for (size_t i = 0; i < patients.size(); ++i) by_site[patients[i].site_id].push_back(i);
  if (by_site.size() < 2)
    throw TooFewSites("split_by_site: need >= 2 sites, got " + std::to_string(by_site.size()));

  std::vector<std::string> sites;
  for (const auto& [site, _] : by_site) sites.push_back(site);
  Rng rng(seed);
  rng.shuffle(sites);

  std::array<double, kNumClasses> global_share{};
  for (const SitePatient& p : patients) global_share[static_cast<size_t>(p.label)] += 1.0;
  for (double& s : global_share) s /= static_cast<double>(patients.size());

  const double target = test_fraction * static_cast<double>(patients.size());
  std::vector<std::string> remaining = sites;
  std::vector<std::string> test_sites;
  std::array<double, kNumClasses> test_counts{};
  double test_total = 0.0;

  auto within_tolerance = [&](const std::string& site) {
    std::array<double, kNumClasses> counts = test_counts;
    double total = test_total;
    for (size_t idx : by_site[site]) {
      counts[static_cast<size_t>(patients[idx].label)] += 1.0;
      total += 1.0;
    }
    for (int k = 0; k < kNumClasses; ++k)
      if (std::abs(counts[static_cast<size_t>(k)] / total - global_share[static_cast<size_t>(k)]) > 0.10)
        return false;
    return true;
  };

  while (test_total < target && remaining.size() > 1) {
    // Prefer the first remaining site that keeps class shares near global;
    // fall back to plain shuffle order so the loop always advances.
    size_t chosen = 0;
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (within_tolerance(remaining[i])) {
        chosen = i;
        break;
      }
    }
    std::string site = remaining[chosen];
    remaining.erase(remaining.begin() + static_cast<long>(chosen));
    for (size_t idx : by_site[site]) {
      test_counts[static_cast<size_t>(patients[idx].label)] += 1.0;
      test_total += 1.0;
    }
    test_sites.push_back(site);
  }

  SiteSplit split;
  split.test_sites = test_sites;
  std::vector<bool> in_test(patients.size(), false);
  for (const std::string& site : test_sites)
    for (size_t idx : by_site[site]) in_test[idx] = true;
  for (size_t i = 0; i < patients.size(); ++i)
    (in_test[i] ? split.test_indices : split.train_indices).push_back(i);
  return split;
}

}  // namespace crcpheno
