#ifndef CRCPHENO_TYPES_HPP
#define CRCPHENO_TYPES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crcpheno {

// Patient-level colorectal cancer status. Enum order is the severity order
// (Neg < Naa < Aa < Crc) and the fixed class order of every probability
// vector and confusion matrix in the project.
enum class CancerStatus : int { Neg = 0, Naa = 1, Aa = 2, Crc = 3 };

constexpr int kNumClasses = 4;

inline const char* to_string(CancerStatus s) {
  switch (s) {
    case CancerStatus::Neg: return "NEG";
    case CancerStatus::Naa: return "NAA";
    case CancerStatus::Aa: return "AA";
    case CancerStatus::Crc: return "CRC";
  }
  return "?";
}

std::optional<CancerStatus> parse_status(const std::string& name);

inline int severity(CancerStatus s) { return static_cast<int>(s); }

// 4-class probability vector in class order NEG, NAA, AA, CRC.
// Valid instances sum to 1 within 1e-9.
struct ClassProbs {
  std::array<double, kNumClasses> p{0.0, 0.0, 0.0, 0.0};

  double& operator[](int i) { return p[static_cast<size_t>(i)]; }
  double operator[](int i) const { return p[static_cast<size_t>(i)]; }

  double sum() const { return p[0] + p[1] + p[2] + p[3]; }

  // Argmax with ties resolved toward the higher-severity class.
  CancerStatus argmax() const {
    int best = 0;
    for (int k = 1; k < kNumClasses; ++k)
      if (p[static_cast<size_t>(k)] >= p[static_cast<size_t>(best)]) best = k;
    return static_cast<CancerStatus>(best);
  }
};

// --- OCR document model -----------------------------------------------------

struct BoundingBox {
  int page = 0;
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  bool valid() const {
    return page >= 0 && x0 <= x1 && y0 <= y1 && x0 >= 0.0 && y0 >= 0.0 &&
           x1 <= 1.0 && y1 <= 1.0;
  }
};

struct TextBlock {
  int index = 0;  // reading order, contiguous from 0 within a document
  BoundingBox box;
  std::string text;
};

enum class DocType { Colonoscopy, Pathology, SurgicalPathology, Radiology, Other };

const char* to_string(DocType t);
std::optional<DocType> parse_doc_type(const std::string& name);

struct OcrDocument {
  std::string doc_id;
  std::string patient_id;
  DocType doc_type = DocType::Other;
  std::vector<TextBlock> blocks;  // ordered by index
};

// --- Structured lesions -----------------------------------------------------

enum class LesionType { Adenoma, SsaP, Hp, Tsa, Carcinoma };
enum class LesionLocation { Sigmoid, Rectum, Other, Unknown };
enum class TumorStage { I = 1, II = 2, III = 3, IV = 4 };

const char* to_string(LesionType t);
const char* to_string(LesionLocation l);
std::optional<LesionType> parse_lesion_type(const std::string& name);
std::optional<LesionLocation> parse_location(const std::string& name);

struct Lesion {
  LesionType lesion_type = LesionType::Adenoma;
  std::optional<double> size_mm;  // unset when the report gives no size
  bool villous = false;
  bool high_grade_dysplasia = false;
  bool carcinoma_in_situ = false;
  bool cytological_dysplasia = false;
  LesionLocation location = LesionLocation::Unknown;
  std::optional<TumorStage> stage;  // carcinoma only
};

// --- Corpus manifest ---------------------------------------------------------

struct PatientRecord {
  std::string patient_id;
  std::string site_id;
  std::optional<CancerStatus> label;
  std::optional<double> index_lesion_size_mm;
  std::vector<std::string> doc_paths;
};

// --- Errors ------------------------------------------------------------------

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidConfig : std::runtime_error {
  explicit InvalidConfig(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateData : std::runtime_error {
  explicit DegenerateData(const std::string& what) : std::runtime_error(what) {}
};

struct MissingArtifact : std::runtime_error {
  explicit MissingArtifact(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crcpheno

#endif  // CRCPHENO_TYPES_HPP
