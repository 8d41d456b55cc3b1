#include "crcpheno/types.hpp"

namespace crcpheno {

std::optional<CancerStatus> parse_status(const std::string& name) {
  if (name == "NEG") return CancerStatus::Neg;
  if (name == "NAA") return CancerStatus::Naa;
  if (name == "AA") return CancerStatus::Aa;
  if (name == "CRC") return CancerStatus::Crc;
  return std::nullopt;
}

const char* to_string(DocType t) {
  switch (t) {
    case DocType::Colonoscopy: return "colonoscopy";
    case DocType::Pathology: return "pathology";
    case DocType::SurgicalPathology: return "surgical_pathology";
    case DocType::Radiology: return "radiology";
    case DocType::Other: return "other";
  }
  return "other";
}

std::optional<DocType> parse_doc_type(const std::string& name) {
  if (name == "colonoscopy") return DocType::Colonoscopy;
  if (name == "pathology") return DocType::Pathology;
  if (name == "surgical_pathology") return DocType::SurgicalPathology;
  if (name == "radiology") return DocType::Radiology;
  if (name == "other") return DocType::Other;
  return std::nullopt;
}

const char* to_string(LesionType t) {
  switch (t) {
    case LesionType::Adenoma: return "adenoma";
    case LesionType::SsaP: return "ssa_p";
    case LesionType::Hp: return "hp";
    case LesionType::Tsa: return "tsa";
    case LesionType::Carcinoma: return "carcinoma";
  }
  return "adenoma";
}

std::optional<LesionType> parse_lesion_type(const std::string& name) {
  if (name == "adenoma") return LesionType::Adenoma;
  if (name == "ssa_p") return LesionType::SsaP;
  if (name == "hp") return LesionType::Hp;
  if (name == "tsa") return LesionType::Tsa;
  if (name == "carcinoma") return LesionType::Carcinoma;
  return std::nullopt;
}

const char* to_string(LesionLocation l) {
  switch (l) {
    case LesionLocation::Sigmoid: return "sigmoid";
    case LesionLocation::Rectum: return "rectum";
    case LesionLocation::Other: return "other";
    case LesionLocation::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<LesionLocation> parse_location(const std::string& name) {
  if (name == "sigmoid") return LesionLocation::Sigmoid;
  if (name == "rectum") return LesionLocation::Rectum;
  if (name == "other") return LesionLocation::Other;
  if (name == "unknown") return LesionLocation::Unknown;
  return std::nullopt;
}

}  // namespace crcpheno
