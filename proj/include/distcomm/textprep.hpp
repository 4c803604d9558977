#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "distcomm/corpus.hpp"
#include "distcomm/error.hpp"

namespace distcomm {

using StopwordSet = std::unordered_set<std::string>;

// English function words plus the generic scholarly title filler that would
// otherwise dominate a title-word frequency list.
inline const StopwordSet& default_stopwords() {
  static const StopwordSet words = {
      "a",        "about",    "above",   "after",    "again",   "against",  "all",
      "also",     "am",       "among",   "an",       "and",     "any",      "are",
      "as",       "at",       "be",      "because",  "been",    "before",   "being",
      "below",    "between",  "both",    "but",      "by",      "can",      "could",
      "did",      "do",       "does",    "doing",    "down",    "during",   "each",
      "either",   "few",      "for",     "from",     "further", "had",      "has",
      "have",     "having",   "he",      "her",      "here",    "hers",     "him",
      "his",      "how",      "i",       "if",       "in",      "into",     "is",
      "it",       "its",      "itself",  "just",     "may",     "me",       "might",
      "more",     "most",     "must",    "my",       "new",     "no",       "nor",
      "not",      "now",      "of",      "off",      "on",      "once",     "one",
      "only",     "or",       "other",   "our",      "out",     "over",     "own",
      "part",     "per",      "same",    "she",      "should",  "so",       "some",
      "such",     "than",     "that",    "the",      "their",   "them",     "then",
      "there",    "these",    "they",    "this",     "those",   "through",  "to",
      "too",      "two",      "under",   "until",    "up",      "upon",     "use",
      "using",    "very",     "via",     "was",      "we",      "were",     "what",
      "when",     "where",    "whether", "which",    "while",   "who",      "whom",
      "why",      "will",     "with",    "within",   "without", "would",    "you",
      "your",     "study",    "studies", "analysis", "based",   "approach", "toward",
      "towards",  "vs",       "versus",
  };
  return words;
}

/// One word per line, `#` comments allowed. Words are lowercased.
inline StopwordSet parse_stopwords(std::istream& in) {
  StopwordSet words;
  detail::for_each_config_line(in, [&](std::string_view content, std::size_t) {
    std::string w(content);
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    words.insert(std::move(w));
  });
  return words;
}

inline StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stopword file '" + path + "'");
  return parse_stopwords(in);
}

namespace detail {

// Bytes >= 0x80 belong to UTF-8 multibyte sequences and are kept as word
// characters so accented words are not split apart.
inline bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c == '-' || c >= 0x80;
}

}  // namespace detail

/// Lowercased title words in order of appearance, duplicates kept. Hyphens
/// are word-internal; leading and trailing hyphens are stripped.
inline std::vector<std::string> tokenize_title(std::string_view title,
                                               const StopwordSet& stopwords,
                                               std::size_t min_len = 2) {
  if (min_len < 1) throw InputError("min_len must be at least 1");
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < title.size()) {
    while (i < title.size() && !detail::is_word_byte(static_cast<unsigned char>(title[i]))) ++i;
    const std::size_t start = i;
    while (i < title.size() && detail::is_word_byte(static_cast<unsigned char>(title[i]))) ++i;
    auto word = title.substr(start, i - start);
    while (!word.empty() && word.front() == '-') word.remove_prefix(1);
    while (!word.empty() && word.back() == '-') word.remove_suffix(1);
    if (word.empty()) continue;
    std::string token(word);
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (token.size() < min_len || stopwords.contains(token)) continue;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

/// Canonical key for a cited-reference string: uppercase, whitespace runs
/// collapsed, trailing punctuation removed.
inline std::string normalize_reference(std::string_view raw) {
  std::string key;
  key.reserve(raw.size());
  bool pending_space = false;
  for (unsigned char c : detail::trim(raw)) {
    if (std::isspace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !key.empty()) key.push_back(' ');
    pending_space = false;
    key.push_back(static_cast<char>(std::toupper(c)));
  }
  while (!key.empty() && (std::ispunct(static_cast<unsigned char>(key.back())) || key.back() == ' ')) {
    key.pop_back();
  }
  if (key.empty()) throw InputError("empty cited reference");
  return key;
}

/// Ranked (label, count) list: counts non-increasing, ties by ascending label.
class FrequencyList {
 public:
  using Item = std::pair<std::string, std::uint64_t>;

  FrequencyList() = default;
  FrequencyList(std::vector<Item> items, std::size_t requested)
      : items_(std::move(items)), requested_(requested) {}

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  std::size_t requested() const { return requested_; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(items_.size());
    for (const auto& [label, count] : items_) out.push_back(label);
    return out;
  }

  friend bool operator==(const FrequencyList&, const FrequencyList&) = default;

 private:
  std::vector<Item> items_;
  std::size_t requested_ = 0;
};

template <typename CountMap>
FrequencyList top_n(const CountMap& counts, std::size_t n) {
  std::vector<FrequencyList::Item> items;
  items.reserve(counts.size());
  for (const auto& [label, count] : counts) items.emplace_back(label, count);
  const auto keep = std::min(n, items.size());
  auto by_rank = [](const FrequencyList::Item& a, const FrequencyList::Item& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  };
  std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(keep), items.end(),
                    by_rank);
  items.resize(keep);
  return FrequencyList(std::move(items), n);
}

/// Title-word and reference settings shared by vocabulary building and cube
/// construction.
struct TextOptions {
  StopwordSet stopwords = default_stopwords();
  std::size_t min_len = 2;
};

/// Distinct normalized references of a document, in first-seen order. Blank
/// reference strings are skipped.
inline std::vector<std::string> reference_keys(const Document& doc) {
  std::vector<std::string> keys;
  std::unordered_set<std::string> seen;
  for (const auto& raw : doc.references) {
    if (detail::trim(raw).empty()) continue;
    auto key = normalize_reference(raw);
    if (seen.insert(key).second) keys.push_back(std::move(key));
  }
  return keys;
}

/// Distinct title tokens of a document, in first-seen order.
inline std::vector<std::string> title_words(const Document& doc, const TextOptions& opts) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  for (auto& token : tokenize_title(doc.title, opts.stopwords, opts.min_len)) {
    if (seen.insert(token).second) words.push_back(std::move(token));
  }
  return words;
}

}  // namespace distcomm
