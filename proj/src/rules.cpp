#include "crcpheno/rules.hpp"

namespace crcpheno {

namespace {

constexpr double kAdvancedSizeMm = 10.0;  // the ">= 1.0 cm" threshold

bool size_ge_10(const Lesion& l) {
  return l.size_mm.has_value() && *l.size_mm >= kAdvancedSizeMm;
}

bool in_sigmoid_or_rectum(const Lesion& l) {
  return l.location == LesionLocation::Sigmoid || l.location == LesionLocation::Rectum;
}

}  // namespace

LesionVerdict classify_lesion(const Lesion& l) {
  switch (l.lesion_type) {
    case LesionType::Carcinoma:
      return {CancerStatus::Crc, "crc.any_stage", true};

    case LesionType::Adenoma:
      if (l.carcinoma_in_situ || l.high_grade_dysplasia)
        return {CancerStatus::Aa, "aa.adenoma_cis_or_hgd", true};
      if (l.villous) return {CancerStatus::Aa, "aa.adenoma_villous", true};
      if (size_ge_10(l)) return {CancerStatus::Aa, "aa.adenoma_ge_10mm", true};
      return {CancerStatus::Naa, "naa.adenoma_lt_10mm", true};

    case LesionType::Tsa:
      return {CancerStatus::Aa, "aa.tsa_any_size", true};

    case LesionType::SsaP:
      if (size_ge_10(l)) return {CancerStatus::Aa, "aa.serrated_ge_10mm", true};
      if (l.cytological_dysplasia) {
        // No small-SSA/P-with-dysplasia bullet exists; surfaced for audit
        // rather than silently assigned a category.
        return {CancerStatus::Neg, "neg.ssa_p_lt_10mm_dysplasia.uncovered", false};
      }
      if (in_sigmoid_or_rectum(l)) {
        // The NEG criteria scope small SSA/P as "NOT in sigmoid or rectum";
        // no bullet admits the sigmoid/rectum case, so it lands here with
        // the ambiguity recorded in the rule id.
        return {CancerStatus::Neg, "neg.ssa_p_lt_10mm.location_scope_ambiguous", true};
      }
      return {CancerStatus::Neg, "neg.ssa_p_lt_10mm_not_sigmoid_rectum", true};

    case LesionType::Hp:
      if (size_ge_10(l)) return {CancerStatus::Aa, "aa.serrated_ge_10mm", true};
      if (in_sigmoid_or_rectum(l))
        return {CancerStatus::Neg, "neg.hp_lt_10mm_sigmoid_rectum", true};
      return {CancerStatus::Neg, "neg.hp_lt_10mm_not_sigmoid_rectum", true};
  }
  return {CancerStatus::Neg, "neg.uncovered", false};
}

CancerStatus classify_patient(const std::vector<Lesion>& lesions) {
  CancerStatus worst = CancerStatus::Neg;  // no findings -> NEG
  for (const Lesion& l : lesions) {
    CancerStatus s = classify_lesion(l).status;
    if (severity(s) > severity(worst)) worst = s;
  }
  return worst;
}

std::optional<size_t> select_index_lesion(const std::vector<Lesion>& lesions) {
  if (lesions.empty()) return std::nullopt;
  size_t best = 0;
  CancerStatus best_status = classify_lesion(lesions[0]).status;
  for (size_t i = 1; i < lesions.size(); ++i) {
    CancerStatus s = classify_lesion(lesions[i]).status;
    if (severity(s) > severity(best_status)) {
      best = i;
      best_status = s;
      continue;
    }
    if (severity(s) < severity(best_status)) continue;
    // Same severity: prefer the larger documented size; unknown loses to any
    // known size; remaining ties keep the earlier lesion.
    double cur = lesions[i].size_mm.value_or(-1.0);
    double old = lesions[best].size_mm.value_or(-1.0);
    if (cur > old) best = i;
  }
  return best;
}

IndexLesionSize index_lesion_size(const std::vector<Lesion>& lesions) {
  std::optional<size_t> idx = select_index_lesion(lesions);
  if (!idx) return {0.0, false};
  const Lesion& l = lesions[*idx];
  if (!l.size_mm.has_value()) return {0.0, true};
  return {*l.size_mm, false};
}

}  // namespace crcpheno
