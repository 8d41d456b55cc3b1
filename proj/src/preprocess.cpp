#include "crcpheno/preprocess.hpp"

#include <algorithm>
#include <cctype>

namespace crcpheno {

const std::vector<std::string>& default_section_keywords() {
  static const std::vector<std::string> kKeywords = {
      "diagnosis", "finding", "impression", "diagnoses",
      "findings",  "impressions", "polyp"};
  return kKeywords;
}

namespace {

bool is_word_char(unsigned char c) { return std::isalpha(c) != 0; }
bool is_digit_char(unsigned char c) { return std::isdigit(c) != 0; }

// Separators that stay inside a numeric token when flanked by digits:
// '.' (decimals), ':' (OCR-corrupted decimals), '-' (ranges).
bool is_numeric_separator(char c) { return c == '.' || c == ':' || c == '-'; }

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      size_t j = i;
      while (j < n && is_word_char(static_cast<unsigned char>(text[j]))) ++j;
      std::string tok = text.substr(i, j - i);
      std::transform(tok.begin(), tok.end(), tok.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
      tokens.push_back(std::move(tok));
      i = j;
      continue;
    }
    if (is_digit_char(c)) {
      size_t j = i;
      while (j < n) {
        if (is_digit_char(static_cast<unsigned char>(text[j]))) {
          ++j;
        } else if (j + 1 < n && is_numeric_separator(text[j]) &&
                   is_digit_char(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      tokens.push_back(text.substr(i, j - i));
      i = j;
      continue;
    }
    tokens.push_back(std::string(1, text[i]));
    ++i;
  }
  return tokens;
}

int edit_distance(const std::string& a, const std::string& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<int> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::optional<std::string> fuzzy_keyword_match(const std::string& token,
                                               const std::vector<std::string>& keywords) {
  for (const std::string& kw : keywords) {
    if (kw.size() >= 5) {
      // Cheap length gate before the DP.
      size_t len_a = token.size(), len_b = kw.size();
      size_t diff = len_a > len_b ? len_a - len_b : len_b - len_a;
      if (diff <= 1 && edit_distance(token, kw) <= 1) return kw;
    } else if (token == kw) {
      return kw;
    }
  }
  return std::nullopt;
}

std::vector<ExtractedSection> extract_diagnosis_sections(
    const OcrDocument& doc, const std::vector<std::string>& keywords,
    const SectionLimits& limits) {
  // Tokenize each block once.
  std::vector<std::vector<std::string>> block_tokens(doc.blocks.size());
  for (size_t b = 0; b < doc.blocks.size(); ++b)
    block_tokens[b] = tokenize(doc.blocks[b].text);

  std::vector<ExtractedSection> sections;
  int covered_until = -1;  // last block index claimed by an earlier section
  for (size_t b = 0; b < doc.blocks.size(); ++b) {
    std::optional<std::string> hit;
    for (const std::string& tok : block_tokens[b]) {
      hit = fuzzy_keyword_match(tok, keywords);
      if (hit) break;
    }
    if (!hit) continue;
    int match_index = doc.blocks[b].index;
    if (match_index <= covered_until) continue;  // nested match, merged into the earlier section

    ExtractedSection section;
    section.matched_keyword = *hit;
    section.match_block_index = match_index;

    // Match block tokens are free; the word budget counts tokens after it.
    section.tokens = block_tokens[b];
    if (!block_tokens[b].empty()) section.source_block_indices.push_back(match_index);
    int words_used = 0;
    size_t last_block = b;
    for (size_t nb = b + 1; nb < doc.blocks.size(); ++nb) {
      if (static_cast<int>(nb - b) > limits.max_blocks_after_match) break;
      if (words_used >= limits.max_words_after_match) break;
      const auto& toks = block_tokens[nb];
      int take = std::min<int>(static_cast<int>(toks.size()),
                               limits.max_words_after_match - words_used);
      if (take > 0) {
        section.tokens.insert(section.tokens.end(), toks.begin(), toks.begin() + take);
        section.source_block_indices.push_back(doc.blocks[nb].index);
        words_used += take;
      }
      last_block = nb;
      if (take < static_cast<int>(toks.size())) break;  // budget hit mid-block
    }
    covered_until = doc.blocks[last_block].index;
    if (!section.tokens.empty()) sections.push_back(std::move(section));
  }
  return sections;
}

std::vector<std::string> concatenate_patient_text(const std::vector<OcrDocument>& docs,
                                                  const std::vector<std::string>& keywords,
                                                  const SectionLimits& limits) {
  std::vector<std::string> out;
  for (const OcrDocument& doc : docs) {
    std::vector<std::string> doc_tokens;
    for (const ExtractedSection& s : extract_diagnosis_sections(doc, keywords, limits))
      doc_tokens.insert(doc_tokens.end(), s.tokens.begin(), s.tokens.end());
    if (doc_tokens.empty()) continue;
    if (!out.empty()) out.push_back(kDocSeparator);
    out.insert(out.end(), doc_tokens.begin(), doc_tokens.end());
  }
  return out;
}

std::vector<Segment> segment_tokens(const std::string& patient_id,
                                    const std::vector<std::string>& tokens,
                                    int max_len, int overlap) {
  if (overlap < 0 || max_len <= overlap)
    throw InvalidConfig("segment_tokens: require max_len > overlap >= 0, got max_len=" +
                        std::to_string(max_len) + " overlap=" + std::to_string(overlap));
  std::vector<Segment> segments;
  const int n = static_cast<int>(tokens.size());
  const int stride = max_len - overlap;
  for (int start = 0; start < n; start += stride) {
    int len = std::min(max_len, n - start);
    Segment seg;
    seg.patient_id = patient_id;
    seg.start_offset = start;
    seg.tokens.assign(tokens.begin() + start, tokens.begin() + start + len);
    segments.push_back(std::move(seg));
    if (start + max_len >= n) break;  // this segment reached the end
  }
  return segments;
}

PreprocessedPatient preprocess_patient(const PatientInput& input,
                                       const PreprocessOptions& options) {
  PreprocessedPatient out;
  out.patient_id = input.record.patient_id;
  out.site_id = input.record.site_id;
  out.label = input.record.label;
  out.index_lesion_size_mm = input.record.index_lesion_size_mm;

  std::vector<std::string> stream =
      concatenate_patient_text(input.docs, options.keywords, options.limits);
  out.segments = segment_tokens(out.patient_id, stream, options.max_segment_len,
                                options.overlap);
  if (out.segments.empty()) {
    // Patients with no extracted sections still form a one-instance bag.
    Segment empty;
    empty.patient_id = out.patient_id;
    out.segments.push_back(std::move(empty));
  }

  for (const OcrDocument& doc : input.docs) {
    out.doc_ids.push_back(doc.doc_id);
    std::vector<std::string> doc_stream;
    for (const TextBlock& block : doc.blocks) {
      std::vector<std::string> toks = tokenize(block.text);
      doc_stream.insert(doc_stream.end(), toks.begin(), toks.end());
    }
    out.doc_tokens.push_back(std::move(doc_stream));
  }
  return out;
}

std::vector<PreprocessedPatient> preprocess_corpus(const std::vector<PatientInput>& inputs,
                                                   const PreprocessOptions& options,
                                                   ExecMode mode) {
  std::vector<PreprocessedPatient> out(inputs.size());
  for_each_index(inputs.size(), mode,
                 [&](size_t i) { out[i] = preprocess_patient(inputs[i], options); });
  return out;
}

}  // namespace crcpheno
