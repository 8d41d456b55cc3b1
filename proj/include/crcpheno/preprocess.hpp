#ifndef CRCPHENO_PREPROCESS_HPP
#define CRCPHENO_PREPROCESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "crcpheno/parallel.hpp"
#include "crcpheno/types.hpp"

namespace crcpheno {

// Reserved separator inserted between documents when a patient's extracted
// sections are concatenated. Never produced by the tokenizer and excluded
// from the classifier vocabulary.
inline const std::string kDocSeparator = "[DOCSEP]";

// Keywords that mark diagnosis-relevant blocks, in match priority order.
const std::vector<std::string>& default_section_keywords();

struct ExtractedSection {
  std::vector<std::string> tokens;
  std::vector<int> source_block_indices;  // blocks contributing >= 1 token
  std::string matched_keyword;
  int match_block_index = 0;
};

struct Segment {
  std::string patient_id;
  std::vector<std::string> tokens;
  int start_offset = 0;  // index into the patient's concatenated token stream
};

// Lowercase word tokenizer. Splits punctuation from words; keeps decimal
// numbers and digit:digit / digit-digit sequences as single tokens so OCR
// repair and range parsing can see them downstream.
std::vector<std::string> tokenize(const std::string& text);

// Levenshtein distance, standard DP.
int edit_distance(const std::string& a, const std::string& b);

// First keyword at edit distance <= 1 (keywords of length >= 5) or exactly
// equal (shorter keywords). Token must already be lowercase.
std::optional<std::string> fuzzy_keyword_match(const std::string& token,
                                               const std::vector<std::string>& keywords);

struct SectionLimits {
  int max_blocks_after_match = 10;
  int max_words_after_match = 100;  // tokens counted after the matched block
};

// One section per keyword-matched block: the match block's tokens plus
// following blocks until either limit is hit (truncating inside a block when
// the word budget runs out mid-block). A later match landing inside an
// earlier section's block range is merged into it, i.e. dropped.
std::vector<ExtractedSection> extract_diagnosis_sections(
    const OcrDocument& doc,
    const std::vector<std::string>& keywords = default_section_keywords(),
    const SectionLimits& limits = SectionLimits{});

// Section tokens of all documents in order, with kDocSeparator between
// consecutive documents that contributed tokens.
std::vector<std::string> concatenate_patient_text(
    const std::vector<OcrDocument>& docs,
    const std::vector<std::string>& keywords = default_section_keywords(),
    const SectionLimits& limits = SectionLimits{});

// Overlapping segmentation: segment i starts at i*(max_len - overlap); the
// last segment may be shorter. Throws InvalidConfig when max_len <= overlap.
std::vector<Segment> segment_tokens(const std::string& patient_id,
                                    const std::vector<std::string>& tokens,
                                    int max_len, int overlap = 10);

// --- Patient-level preprocessing --------------------------------------------

struct PreprocessOptions {
  int max_segment_len = 512;
  int overlap = 10;
  SectionLimits limits;
  std::vector<std::string> keywords = default_section_keywords();
};

struct PreprocessedPatient {
  std::string patient_id;
  std::string site_id;
  std::optional<CancerStatus> label;
  std::optional<double> index_lesion_size_mm;
  std::vector<Segment> segments;             // >= 1; empty segment if no sections
  std::vector<std::string> doc_ids;          // in document order
  std::vector<std::vector<std::string>> doc_tokens;  // full per-document streams for NER
};

struct PatientInput {
  PatientRecord record;
  std::vector<OcrDocument> docs;
};

PreprocessedPatient preprocess_patient(const PatientInput& input,
                                       const PreprocessOptions& options);

// Data-parallel over patients; output order follows input order.
std::vector<PreprocessedPatient> preprocess_corpus(
    const std::vector<PatientInput>& inputs, const PreprocessOptions& options,
    ExecMode mode = ExecMode::Parallel);

}  // namespace crcpheno

#endif  // CRCPHENO_PREPROCESS_HPP
