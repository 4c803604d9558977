#pragma once

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "distcomm/entropy.hpp"
#include "distcomm/error.hpp"

namespace distcomm {

/// Results for one grouping level (e.g. global blocs, EU member states).
struct LevelReport {
  std::string level;
  std::uint64_t documents = 0;  // documents with at least one group at this level
  std::uint64_t events = 0;     // cube total
  std::uint64_t x_vocabulary = 0;
  std::uint64_t y_vocabulary = 0;
  std::vector<std::uint64_t> group_events;  // aligned with decomposition.groups
  EntropyDecomposition decomposition;
  TransmissionReport transmission;

  std::size_t populated_groups() const {
    std::size_t n = 0;
    for (auto e : group_events) n += e > 0 ? 1 : 0;
    return n;
  }

  friend bool operator==(const LevelReport&, const LevelReport&) = default;
};

struct AnalysisReport {
  std::uint64_t documents = 0;  // corpus size
  std::vector<LevelReport> levels;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

enum class OutputFormat { kTable, kCsv, kJson };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "table") return OutputFormat::kTable;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw InputError("unknown output format '" + s + "'");
}

namespace detail {

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Measures in the order of the published transmission table.
struct Measure {
  const char* name;
  double (*get)(const LevelReport&);
};

inline constexpr Measure kTransmissionRows[] = {
    {"SigmaH", [](const LevelReport& l) { return l.decomposition.sigma_h; }},
    {"Hxyz", [](const LevelReport& l) { return l.transmission.h_xyz; }},
    {"Hxy", [](const LevelReport& l) { return l.transmission.h_xy; }},
    {"Hxz", [](const LevelReport& l) { return l.transmission.h_xz; }},
    {"Hyz", [](const LevelReport& l) { return l.transmission.h_yz; }},
    {"Hx", [](const LevelReport& l) { return l.transmission.h_x; }},
    {"Hy", [](const LevelReport& l) { return l.transmission.h_y; }},
    {"Hz", [](const LevelReport& l) { return l.transmission.h_z; }},
    {"Txy", [](const LevelReport& l) { return l.transmission.t_xy; }},
    {"Txz", [](const LevelReport& l) { return l.transmission.t_xz; }},
    {"Tyz", [](const LevelReport& l) { return l.transmission.t_yz; }},
    {"Txyz", [](const LevelReport& l) { return l.transmission.t_xyz; }},
};

inline void render_table(std::ostream& out, const AnalysisReport& r) {
  out << "# between-group entropy (bits)\n";
  out << "level  group_count  Htot  SigmaH  H0  %H0\n";
  for (const auto& l : r.levels) {
    const auto& d = l.decomposition;
    out << l.level << "  " << l.populated_groups() << "  " << fixed2(d.h_total) << "  "
        << fixed2(d.sigma_h) << "  " << fixed2(d.h0) << "  " << fixed2(d.pct_h0) << '\n';
  }
  out << "\n# transmission (bits)\n";
  out << "measure";
  for (const auto& l : r.levels) out << "  " << l.level;
  out << '\n';
  if (!r.levels.empty()) {
    for (const auto& m : kTransmissionRows) {
      out << m.name;
      for (const auto& l : r.levels) out << "  " << fixed2(m.get(l));
      out << '\n';
    }
  }
  for (const auto& l : r.levels) {
    out << "\n# groups: " << l.level << " (" << l.documents << " documents, " << l.events
        << " events, " << l.x_vocabulary << " references x " << l.y_vocabulary << " words)\n";
    out << "group  events  weight  H\n";
    for (std::size_t g = 0; g < l.decomposition.groups.size(); ++g) {
      const auto& ge = l.decomposition.groups[g];
      out << ge.label << "  " << l.group_events[g] << "  " << fixed2(ge.weight) << "  "
          << fixed2(ge.entropy) << '\n';
    }
  }
}

inline void render_csv(std::ostream& out, const AnalysisReport& r) {
  out << "level,group_count,Htot,SigmaH,H0,pctH0\n";
  for (const auto& l : r.levels) {
    const auto& d = l.decomposition;
    out << l.level << ',' << l.populated_groups() << ',' << full(d.h_total) << ',' << full(d.sigma_h)
        << ',' << full(d.h0) << ',' << full(d.pct_h0) << '\n';
  }
  out << "\nlevel,Hx,Hy,Hz,Hxy,Hxz,Hyz,Hxyz,Txy,Txz,Tyz,Txyz\n";
  for (const auto& l : r.levels) {
    const auto& t = l.transmission;
    out << l.level;
    for (double v : {t.h_x, t.h_y, t.h_z, t.h_xy, t.h_xz, t.h_yz, t.h_xyz, t.t_xy, t.t_xz, t.t_yz,
                     t.t_xyz}) {
      out << ',' << full(v);
    }
    out << '\n';
  }
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["documents"] = r.documents;
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& l : r.levels) {
    nlohmann::ordered_json lj;
    lj["level"] = l.level;
    lj["documents"] = l.documents;
    lj["events"] = l.events;
    lj["x_vocabulary"] = l.x_vocabulary;
    lj["y_vocabulary"] = l.y_vocabulary;
    const auto& d = l.decomposition;
    nlohmann::ordered_json dj;
    dj["Htot"] = d.h_total;
    dj["SigmaH"] = d.sigma_h;
    dj["H0"] = d.h0;
    dj["pctH0"] = d.pct_h0;
    dj["groups"] = nlohmann::ordered_json::array();
    for (std::size_t g = 0; g < d.groups.size(); ++g) {
      dj["groups"].push_back({{"label", d.groups[g].label},
                              {"events", l.group_events[g]},
                              {"weight", d.groups[g].weight},
                              {"H", d.groups[g].entropy}});
    }
    lj["decomposition"] = std::move(dj);
    const auto& t = l.transmission;
    lj["transmission"] = {{"Hx", t.h_x},   {"Hy", t.h_y},   {"Hz", t.h_z},     {"Hxy", t.h_xy},
                          {"Hxz", t.h_xz}, {"Hyz", t.h_yz}, {"Hxyz", t.h_xyz}, {"Txy", t.t_xy},
                          {"Txz", t.t_xz}, {"Tyz", t.t_yz}, {"Txyz", t.t_xyz}};
    j["levels"].push_back(std::move(lj));
  }
  return j;
}

template <typename Json>
AnalysisReport report_from_json(const Json& j) {
  try {
    AnalysisReport r;
    r.documents = j.at("documents").template get<std::uint64_t>();
    for (const auto& lj : j.at("levels")) {
      LevelReport l;
      l.level = lj.at("level").template get<std::string>();
      l.documents = lj.at("documents").template get<std::uint64_t>();
      l.events = lj.at("events").template get<std::uint64_t>();
      l.x_vocabulary = lj.at("x_vocabulary").template get<std::uint64_t>();
      l.y_vocabulary = lj.at("y_vocabulary").template get<std::uint64_t>();
      const auto& dj = lj.at("decomposition");
      auto& d = l.decomposition;
      d.h_total = dj.at("Htot").template get<double>();
      d.sigma_h = dj.at("SigmaH").template get<double>();
      d.h0 = dj.at("H0").template get<double>();
      d.pct_h0 = dj.at("pctH0").template get<double>();
      for (const auto& gj : dj.at("groups")) {
        d.groups.push_back({gj.at("label").template get<std::string>(),
                            gj.at("weight").template get<double>(), gj.at("H").template get<double>()});
        l.group_events.push_back(gj.at("events").template get<std::uint64_t>());
      }
      const auto& tj = lj.at("transmission");
      auto& t = l.transmission;
      t.h_x = tj.at("Hx").template get<double>();
      t.h_y = tj.at("Hy").template get<double>();
      t.h_z = tj.at("Hz").template get<double>();
      t.h_xy = tj.at("Hxy").template get<double>();
      t.h_xz = tj.at("Hxz").template get<double>();
      t.h_yz = tj.at("Hyz").template get<double>();
      t.h_xyz = tj.at("Hxyz").template get<double>();
      t.t_xy = tj.at("Txy").template get<double>();
      t.t_xz = tj.at("Txz").template get<double>();
      t.t_yz = tj.at("Tyz").template get<double>();
      t.t_xyz = tj.at("Txyz").template get<double>();
      r.levels.push_back(std::move(l));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

inline std::string render(const AnalysisReport& r, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kTable:
      detail::render_table(out, r);
      break;
    case OutputFormat::kCsv:
      detail::render_csv(out, r);
      break;
    case OutputFormat::kJson:
      out << report_to_json(r).dump(2) << '\n';
      break;
  }
  return out.str();
}

}  // namespace distcomm
