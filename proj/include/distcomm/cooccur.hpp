#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "distcomm/corpus.hpp"
#include "distcomm/error.hpp"
#include "distcomm/sparse_table.hpp"
#include "distcomm/textprep.hpp"

namespace distcomm {

struct CubeSpec {
  std::size_t top_words = 250;
  std::size_t top_refs = 250;
  GroupingScheme scheme;
  TextOptions text;
};

/// Counts of (cited reference, title word, group) co-occurrence events.
struct CoocCube {
  std::vector<std::string> x_labels;  // cited references
  std::vector<std::string> y_labels;  // title words
  std::vector<std::string> z_labels;  // groups
  SparseTable<std::uint64_t> counts;

  std::uint64_t total() const { return counts.total(); }

  friend bool operator==(const CoocCube&, const CoocCube&) = default;
};

using ProbDist = SparseTable<double>;

namespace detail {

inline SparseTable<std::uint64_t> make_count_table(
    std::size_t nx, std::size_t ny, std::size_t nz,
    std::vector<SparseTable<std::uint64_t>::Cell> cells) {
  return SparseTable<std::uint64_t>({Axis::kX, Axis::kY, Axis::kZ}, {nx, ny, nz}, std::move(cells));
}

}  // namespace detail

/// Vocabularies are the top-N lists pooled over every document with at least
/// one group in the scheme; frequencies are document frequencies. A document
/// adds one event per (distinct in-vocabulary reference, distinct
/// in-vocabulary title word, group) combination.
inline CoocCube build_cube(const std::vector<Document>& docs, const CubeSpec& spec) {
  if (spec.top_words < 1 || spec.top_refs < 1) {
    throw InputError("top_words and top_refs must be at least 1");
  }
  if (docs.empty()) throw DegenerateError("corpus is empty");

  struct Member {
    std::vector<std::string> refs;
    std::vector<std::string> words;
    std::vector<std::string> groups;
  };
  std::vector<Member> members;
  std::map<std::string, std::uint64_t> ref_df;
  std::map<std::string, std::uint64_t> word_df;
  for (const auto& doc : docs) {
    auto groups = assign_groups(doc, spec.scheme);
    if (groups.empty()) continue;
    Member m{reference_keys(doc), title_words(doc, spec.text), {groups.begin(), groups.end()}};
    for (const auto& r : m.refs) ++ref_df[r];
    for (const auto& w : m.words) ++word_df[w];
    members.push_back(std::move(m));
  }
  if (members.empty()) {
    throw DegenerateError("no document has an address in any group of scheme '" +
                          spec.scheme.name + "'");
  }

  CoocCube cube;
  cube.x_labels = top_n(ref_df, spec.top_refs).labels();
  cube.y_labels = top_n(word_df, spec.top_words).labels();
  cube.z_labels = spec.scheme.labels();
  if (cube.x_labels.empty() || cube.y_labels.empty()) {
    throw DegenerateError("empty vocabulary for scheme '" + spec.scheme.name + "'");
  }

  auto index_of = [](const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::uint32_t> idx;
    for (std::uint32_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
    return idx;
  };
  const auto x_idx = index_of(cube.x_labels);
  const auto y_idx = index_of(cube.y_labels);
  const auto z_idx = index_of(cube.z_labels);
  const std::uint64_t ny = cube.y_labels.size();
  const std::uint64_t nz = cube.z_labels.size();

  std::unordered_map<std::uint64_t, std::uint64_t> acc;
  std::vector<std::uint32_t> xs, ys;
  for (const auto& m : members) {
    xs.clear();
    ys.clear();
    for (const auto& r : m.refs) {
      if (auto it = x_idx.find(r); it != x_idx.end()) xs.push_back(it->second);
    }
    for (const auto& w : m.words) {
      if (auto it = y_idx.find(w); it != y_idx.end()) ys.push_back(it->second);
    }
    for (const auto& g : m.groups) {
      const std::uint64_t z = z_idx.at(g);
      for (auto x : xs) {
        for (auto y : ys) ++acc[(x * ny + y) * nz + z];
      }
    }
  }

  std::vector<SparseTable<std::uint64_t>::Cell> cells;
  cells.reserve(acc.size());
  for (const auto& [key, count] : acc) {
    const auto z = static_cast<std::uint32_t>(key % nz);
    const auto y = static_cast<std::uint32_t>((key / nz) % ny);
    const auto x = static_cast<std::uint32_t>(key / nz / ny);
    cells.push_back({{x, y, z}, count});
  }
  cube.counts = detail::make_count_table(cube.x_labels.size(), ny, nz, std::move(cells));
  if (cube.total() == 0) {
    throw DegenerateError("no document contributes an in-vocabulary (reference, word) pair");
  }
  return cube;
}

inline ProbDist to_distribution(const CoocCube& cube) {
  const auto total = cube.total();
  if (total == 0) throw DegenerateError("cube has zero total");
  std::vector<ProbDist::Cell> cells;
  cells.reserve(cube.counts.nonzero());
  const auto denom = static_cast<double>(total);
  for (const auto& c : cube.counts.cells()) {
    cells.push_back({c.index, static_cast<double>(c.value) / denom});
  }
  return ProbDist(cube.counts.axes(), cube.counts.extents(), std::move(cells));
}

inline nlohmann::ordered_json cube_to_json(const CoocCube& cube) {
  nlohmann::ordered_json j;
  j["x_labels"] = cube.x_labels;
  j["y_labels"] = cube.y_labels;
  j["z_labels"] = cube.z_labels;
  j["total"] = cube.total();
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : cube.counts.cells()) {
    cells.push_back({c.index[0], c.index[1], c.index[2], c.value});
  }
  j["cells"] = std::move(cells);
  return j;
}

template <typename Json>
CoocCube cube_from_json(const Json& j) {
  try {
    CoocCube cube;
    cube.x_labels = j.at("x_labels").template get<std::vector<std::string>>();
    cube.y_labels = j.at("y_labels").template get<std::vector<std::string>>();
    cube.z_labels = j.at("z_labels").template get<std::vector<std::string>>();
    std::vector<SparseTable<std::uint64_t>::Cell> cells;
    for (const auto& t : j.at("cells")) {
      if (!t.is_array() || t.size() != 4) throw InputError("cube cell must be [xi, yi, zi, count]");
      cells.push_back({{t[0].template get<std::uint32_t>(), t[1].template get<std::uint32_t>(),
                        t[2].template get<std::uint32_t>()},
                       t[3].template get<std::uint64_t>()});
    }
    cube.counts = detail::make_count_table(cube.x_labels.size(), cube.y_labels.size(),
                                           cube.z_labels.size(), std::move(cells));
    if (j.contains("total") && j.at("total").template get<std::uint64_t>() != cube.total()) {
      throw InputError("cube 'total' does not match the sum of its cells");
    }
    return cube;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed cube JSON: ") + e.what());
  }
}

}  // namespace distcomm
