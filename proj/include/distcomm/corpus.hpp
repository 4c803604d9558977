#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "distcomm/countries.hpp"
#include "distcomm/error.hpp"

namespace distcomm {

/// One bibliographic record. Immutable after parsing.
struct Document {
  std::string id;
  int year = 0;
  std::string title;
  std::string journal;
  std::vector<std::string> addresses;
  std::vector<std::string> references;

  friend bool operator==(const Document&, const Document&) = default;
};

/// ISO-3166 alpha-2 code. Construction validates the two-uppercase-letter form.
class CountryCode {
 public:
  explicit CountryCode(std::string_view code) : code_(code) {
    if (code_.size() != 2 || !std::isupper(static_cast<unsigned char>(code_[0])) ||
        !std::isupper(static_cast<unsigned char>(code_[1]))) {
      throw InputError("invalid country code '" + code_ + "'");
    }
  }

  const std::string& str() const { return code_; }

  friend auto operator<=>(const CountryCode&, const CountryCode&) = default;

 private:
  std::string code_;
};

enum class UnmatchedPolicy { kDrop, kError, kOtherBucket };

inline constexpr std::string_view kOtherGroupLabel = "Other";

/// Country-code to group-label mapping for one system level (e.g. EU member
/// states, or EU/Japan/USA blocs).
struct GroupingScheme {
  std::string name;
  std::map<std::string, std::string> mapping;  // country code -> group label
  UnmatchedPolicy unmatched = UnmatchedPolicy::kDrop;

  /// Ordered, deduplicated codomain. The other-bucket label is appended when
  /// that policy is active.
  std::vector<std::string> labels() const {
    std::set<std::string> unique;
    for (const auto& [code, label] : mapping) unique.insert(label);
    if (unmatched == UnmatchedPolicy::kOtherBucket) unique.emplace(kOtherGroupLabel);
    return {unique.begin(), unique.end()};
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

template <typename Fn>
void for_each_config_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto content = trim(line);
    if (content.empty()) continue;
    fn(content, lineno);
  }
}

// US addresses in older SCI records end in "<STATE> <ZIP>" with no country.
inline bool looks_like_us_state_zip(std::string_view seg) {
  if (seg.size() < 8 || seg[2] != ' ') return false;
  if (!std::isupper(static_cast<unsigned char>(seg[0])) ||
      !std::isupper(static_cast<unsigned char>(seg[1]))) {
    return false;
  }
  for (std::size_t i = 3; i < 8; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(seg[i]))) return false;
  }
  return seg.size() == 8 || seg[8] == '-' || seg[8] == ' ';
}

}  // namespace detail

inline Document document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("record is not a JSON object");
  if (!j.contains("id") || !j["id"].is_string()) throw InputError("missing string field 'id'");
  if (!j.contains("year") || !j["year"].is_number_integer()) {
    throw InputError("missing integer field 'year'");
  }
  Document doc;
  doc.id = j["id"].get<std::string>();
  if (doc.id.empty()) throw InputError("empty 'id'");
  doc.year = j["year"].get<int>();
  auto opt_string = [&](const char* key, std::string& out) {
    if (!j.contains(key) || j[key].is_null()) return;
    if (!j[key].is_string()) throw InputError(std::string("field '") + key + "' must be a string");
    out = j[key].get<std::string>();
  };
  auto opt_list = [&](const char* key, std::vector<std::string>& out) {
    if (!j.contains(key) || j[key].is_null()) return;
    const auto& arr = j[key];
    if (!arr.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    for (const auto& item : arr) {
      if (!item.is_string()) {
        throw InputError(std::string("field '") + key + "' must contain only strings");
      }
      out.push_back(item.get<std::string>());
    }
  };
  opt_string("title", doc.title);
  opt_string("journal", doc.journal);
  opt_list("addresses", doc.addresses);
  opt_list("references", doc.references);
  return doc;
}

enum class CorpusFormat { kJsonl };

/// Reads one Document per non-blank line. Errors carry the 1-based line number.
inline std::vector<Document> parse_corpus(std::istream& in,
                                          CorpusFormat format = CorpusFormat::kJsonl) {
  (void)format;
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    Document doc;
    try {
      doc = document_from_json(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("line " + std::to_string(lineno) + ": malformed JSON: " + e.what());
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!seen.insert(doc.id).second) {
      throw InputError("line " + std::to_string(lineno) + ": duplicate id '" + doc.id + "'");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline void serialize_corpus(std::ostream& out, const std::vector<Document>& docs) {
  for (const auto& doc : docs) {
    nlohmann::ordered_json j;
    j["id"] = doc.id;
    j["year"] = doc.year;
    j["title"] = doc.title;
    j["journal"] = doc.journal;
    j["addresses"] = doc.addresses;
    j["references"] = doc.references;
    out << j.dump() << '\n';
  }
}

/// Countries named in the final comma-separated segment of an address.
/// Unrecognized segments yield an empty list.
inline std::vector<CountryCode> extract_countries(std::string_view address) {
  auto seg = address;
  if (auto comma = seg.rfind(','); comma != std::string_view::npos) seg = seg.substr(comma + 1);
  seg = detail::trim(seg);
  while (!seg.empty() && (seg.back() == '.' || seg.back() == ';')) {
    seg.remove_suffix(1);
    seg = detail::trim(seg);
  }
  const std::string upper = detail::to_upper(seg);
  if (auto code = country_code_for(upper)) return {CountryCode(*code)};
  if (detail::looks_like_us_state_zip(upper)) return {CountryCode("US")};
  return {};
}

/// Whole counting: the document belongs to every group in which it has at
/// least one address. Returned labels are sorted and unique.
inline std::set<std::string> assign_groups(const Document& doc, const GroupingScheme& scheme) {
  std::set<std::string> groups;
  for (const auto& address : doc.addresses) {
    for (const auto& country : extract_countries(address)) {
      if (auto it = scheme.mapping.find(country.str()); it != scheme.mapping.end()) {
        groups.insert(it->second);
        continue;
      }
      switch (scheme.unmatched) {
        case UnmatchedPolicy::kDrop:
          break;
        case UnmatchedPolicy::kError:
          throw InputError("document '" + doc.id + "': country " + country.str() +
                           " is not in grouping scheme '" + scheme.name + "'");
        case UnmatchedPolicy::kOtherBucket:
          groups.emplace(kOtherGroupLabel);
          break;
      }
    }
  }
  return groups;
}

/// Parses `COUNTRY_CODE<TAB>GROUP_LABEL` lines; `#` starts a comment.
inline GroupingScheme parse_grouping_scheme(std::istream& in, std::string name,
                                            UnmatchedPolicy policy = UnmatchedPolicy::kDrop) {
  GroupingScheme scheme{std::move(name), {}, policy};
  detail::for_each_config_line(in, [&](std::string_view content, std::size_t lineno) {
    const auto where = "scheme '" + scheme.name + "' line " + std::to_string(lineno);
    const auto tab = content.find('\t');
    if (tab == std::string_view::npos) throw InputError(where + ": expected CODE<TAB>LABEL");
    const auto code = detail::trim(content.substr(0, tab));
    const auto label = detail::trim(content.substr(tab + 1));
    if (label.empty()) throw InputError(where + ": empty group label");
    CountryCode cc(code);
    auto [it, inserted] = scheme.mapping.emplace(cc.str(), std::string(label));
    if (!inserted && it->second != label) {
      throw InputError(where + ": country " + cc.str() + " mapped to two groups");
    }
  });
  if (scheme.mapping.empty()) throw InputError("scheme '" + scheme.name + "' has no entries");
  return scheme;
}

inline GroupingScheme load_grouping_scheme(const std::string& path, std::string name,
                                           UnmatchedPolicy policy = UnmatchedPolicy::kDrop) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open grouping scheme '" + path + "'");
  return parse_grouping_scheme(in, std::move(name), policy);
}

}  // namespace distcomm
