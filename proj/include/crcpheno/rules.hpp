#ifndef CRCPHENO_RULES_HPP
#define CRCPHENO_RULES_HPP

#include <optional>
#include <string>
#include <vector>

#include "crcpheno/types.hpp"

namespace crcpheno {

struct LesionVerdict {
  CancerStatus status = CancerStatus::Neg;
  std::string rule_id;
  bool covered = true;  // false when no annotation-criteria bullet applies
};

// Deterministic per-lesion status. Rules are evaluated in severity priority
// (CRC > AA > NAA > NEG); unknown sizes are treated as < 10 mm. Total
// function: every lesion gets a verdict.
LesionVerdict classify_lesion(const Lesion& lesion);

// Maximum verdict severity across lesions; empty list is NEG.
CancerStatus classify_patient(const std::vector<Lesion>& lesions);

// Most clinically significant lesion: maximal severity, ties broken by
// larger known size, then by input order. nullopt for an empty list.
std::optional<size_t> select_index_lesion(const std::vector<Lesion>& lesions);

struct IndexLesionSize {
  double size_mm = 0.0;
  // True when an index lesion exists but its size is not documented; the
  // reported size is 0 in that case.
  bool unknown_size = false;
};

IndexLesionSize index_lesion_size(const std::vector<Lesion>& lesions);

}  // namespace crcpheno

#endif  // CRCPHENO_RULES_HPP
