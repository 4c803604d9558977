#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "distcomm/cooccur.hpp"
#include "distcomm/corpus.hpp"
#include "distcomm/delineate.hpp"
#include "distcomm/entropy.hpp"
#include "distcomm/error.hpp"
#include "distcomm/report.hpp"
#include "distcomm/textprep.hpp"

namespace distcomm {

struct RunConfig {
  std::string input;
  std::vector<std::string> schemes;
  std::optional<std::string> stopwords;
  std::size_t top_words = 250;
  std::size_t top_refs = 250;
  std::size_t min_len = 2;
  UnmatchedPolicy unmatched = UnmatchedPolicy::kDrop;
  OutputFormat format = OutputFormat::kTable;

  // delineate
  std::string matrix;
  std::string seed;
  double threshold = 0.01;
  double criterion = 1.0;
  bool varimax = false;
};

/// Runs `fn`, prefixing any library error with the stage name while keeping
/// its category.
template <typename Fn>
auto run_stage(const std::string& stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DegenerateError& e) {
    throw DegenerateError(stage + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(stage + ": " + e.what());
  }
}

inline std::vector<Document> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus '" + path + "'");
  return parse_corpus(in);
}

inline std::string scheme_name_from_path(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

inline LevelReport analyze_level(const std::vector<Document>& docs, const CubeSpec& spec) {
  const auto cube = run_stage("build_cube[" + spec.scheme.name + "]",
                              [&] { return build_cube(docs, spec); });
  LevelReport level;
  level.level = spec.scheme.name;
  for (const auto& doc : docs) {
    if (!assign_groups(doc, spec.scheme).empty()) ++level.documents;
  }
  level.events = cube.total();
  level.x_vocabulary = cube.x_labels.size();
  level.y_vocabulary = cube.y_labels.size();
  level.group_events.assign(cube.z_labels.size(), 0);
  for (const auto& c : cube.counts.cells()) level.group_events[c.index[2]] += c.value;
  level.decomposition = run_stage("decompose[" + spec.scheme.name + "]", [&] { return decompose(cube); });
  level.transmission =
      run_stage("transmissions[" + spec.scheme.name + "]", [&] { return transmissions(cube); });
  return level;
}

inline TextOptions text_options(const RunConfig& config) {
  TextOptions text;
  if (config.stopwords) {
    text.stopwords = run_stage("stopwords", [&] { return load_stopwords(*config.stopwords); });
  }
  text.min_len = config.min_len;
  return text;
}

inline std::vector<CubeSpec> cube_specs(const RunConfig& config) {
  if (config.schemes.empty()) throw InputError("at least one grouping scheme is required");
  if (config.top_words < 1 || config.top_refs < 1 || config.min_len < 1) {
    throw InputError("top-words, top-refs and min-len must be positive");
  }
  const auto text = text_options(config);
  std::vector<CubeSpec> specs;
  for (const auto& path : config.schemes) {
    auto scheme = run_stage("scheme", [&] {
      return load_grouping_scheme(path, scheme_name_from_path(path), config.unmatched);
    });
    specs.push_back({config.top_words, config.top_refs, std::move(scheme), text});
  }
  return specs;
}

/// Corpus -> vocabularies -> cube -> decomposition and transmissions, once
/// per grouping scheme, in the order the schemes were given.
inline AnalysisReport cmd_analyze(const RunConfig& config) {
  const auto specs = cube_specs(config);
  const auto docs = run_stage("parse_corpus", [&] { return load_corpus(config.input); });
  if (docs.empty()) throw DegenerateError("parse_corpus: corpus '" + config.input + "' is empty");
  AnalysisReport report;
  report.documents = docs.size();
  for (const auto& spec : specs) report.levels.push_back(analyze_level(docs, spec));
  return report;
}

inline CoocCube cmd_cube(const RunConfig& config) {
  auto specs = cube_specs(config);
  if (specs.size() != 1) throw InputError("cube takes exactly one grouping scheme");
  const auto docs = run_stage("parse_corpus", [&] { return load_corpus(config.input); });
  return run_stage("build_cube[" + specs[0].scheme.name + "]",
                   [&] { return build_cube(docs, specs[0]); });
}

struct DelineationReport {
  std::string seed;
  double threshold = 0.0;
  std::vector<std::string> environment;
  FactorModel model;
  std::vector<std::string> central_journals;  // per factor
};

inline DelineationReport delineate(const JournalCitationMatrix& m, const std::string& seed,
                                   double threshold, double criterion, bool use_varimax) {
  DelineationReport r;
  r.seed = seed;
  r.threshold = threshold;
  r.environment = run_stage("environment", [&] { return environment(m, seed, threshold); });
  const auto corr = run_stage("correlation_matrix", [&] { return correlation_matrix(m, r.environment); });
  r.model = run_stage("principal_factors",
                      [&] { return principal_factors(corr, r.environment, criterion); });
  if (use_varimax) r.model = run_stage("varimax", [&] { return rotate(std::move(r.model)); });
  for (std::size_t f = 0; f < r.model.factor_count(); ++f) {
    r.central_journals.push_back(central_tendency(r.model, f));
  }
  return r;
}

inline DelineationReport cmd_delineate(const RunConfig& config) {
  if (config.seed.empty()) throw InputError("a seed journal is required");
  const auto m = run_stage("citation_matrix", [&] {
    std::ifstream in(config.matrix);
    if (!in) throw InputError("cannot open citation matrix '" + config.matrix + "'");
    return parse_citation_matrix(in);
  });
  return delineate(m, config.seed, config.threshold, config.criterion, config.varimax);
}

inline nlohmann::ordered_json delineation_to_json(const DelineationReport& r) {
  const auto& m = r.model;
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["threshold"] = r.threshold;
  j["environment"] = r.environment;
  j["rotation"] = m.rotated ? "varimax" : "none";
  j["eigenvalues"] = std::vector<double>(m.all_eigenvalues.begin(), m.all_eigenvalues.end());
  j["retained_factors"] = m.factor_count();
  j["explained_variance"] = m.explained_variance;
  auto loadings = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < m.journals.size(); ++i) {
    std::vector<double> row;
    for (Eigen::Index f = 0; f < m.loadings.cols(); ++f) {
      row.push_back(m.loadings(static_cast<Eigen::Index>(i), f));
    }
    loadings[m.journals[i]] = row;
  }
  j["loadings"] = std::move(loadings);
  auto assignments = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < m.journals.size(); ++i) assignments[m.journals[i]] = m.assignment[i];
  j["assignments"] = std::move(assignments);
  auto clusters = nlohmann::ordered_json::array();
  for (std::size_t f = 0; f < m.factor_count(); ++f) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < m.journals.size(); ++i) {
      if (m.assignment[i] == f) members.push_back(m.journals[i]);
    }
    clusters.push_back({{"factor", f},
                        {"journals", members},
                        {"central_tendency", r.central_journals[f]}});
  }
  j["clusters"] = std::move(clusters);
  return j;
}

}  // namespace distcomm
