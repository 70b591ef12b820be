#pragma once

// Screening report model and serialization. One JSON document carries every
// table; writes go through a temp file + rename so an interrupted run never
// leaves a partial report at the final path. No timestamps anywhere: the
// same inputs must produce byte-identical output.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contacts.hpp"
#include "druglikeness.hpp"
#include "error.hpp"
#include "stats.hpp"

namespace screenlab {

using json = nlohmann::json;

inline void atomic_write_file(const std::filesystem::path& path,
                              const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

struct SimilaritySection {
  std::vector<double> pre;   // empty when no pre-set was supplied
  std::vector<double> post;
  double median_post = 0;
  double percentile_rank = 0;
  double cutoff = 0;
  std::vector<std::string> finetune_labels;
  int skipped_lines = 0;
};

struct PropertyStat {
  std::string property;
  double mean = 0, sd = 0, seed_value = 0;
  std::optional<double> seed_z;  // absent when the population is degenerate
};

struct LigandRow {
  std::string label;
  double energy = 0;
  int pose_rank = 0;
  double mw = 0, lp = 0, tpsa = 0;
  int hbd = 0, hba = 0, aromatic_rings = 0, carboxylic_acids = 0;
  int rotatable_bonds = 0, alerts = 0, lipinski_violations = 0;
  double qed = 0, sas = 0;
};

struct CorrelationRow {
  std::string property;
  std::optional<double> r;  // absent when variance is zero
  int n = 0;
};

struct ReportError {
  std::string label;
  std::string message;
};

struct ReferenceSection {
  std::vector<double> qed;
  std::vector<double> sas;
  int skipped_lines = 0;
};

struct ScreeningReport {
  std::map<std::string, std::string> config;
  SimilaritySection similarity;
  std::vector<PropertyStat> descriptor_stats;
  std::vector<LigandRow> docked;         // label order
  std::vector<LigandRow> high_affinity;  // energy <= threshold, label order
  int group_k = 0;
  std::vector<GroupComparison> group_comparison;
  std::vector<CorrelationRow> correlations;
  ContactFrequencyTable contact_frequencies;
  std::vector<LeadCandidate> leads;
  std::optional<ReferenceSection> reference;
  std::vector<ReportError> errors;
  std::vector<std::string> warnings;
  int pose_file_count = 0;
  int generated_count = 0;
  int generated_parsed = 0;
};

namespace detail {

inline json ligand_row_json(const LigandRow& r) {
  return json{{"label", r.label},
              {"energy", r.energy},
              {"pose_rank", r.pose_rank},
              {"mw", r.mw},
              {"lp", r.lp},
              {"tpsa", r.tpsa},
              {"hbd", r.hbd},
              {"hba", r.hba},
              {"aromatic_rings", r.aromatic_rings},
              {"carboxylic_acids", r.carboxylic_acids},
              {"rotatable_bonds", r.rotatable_bonds},
              {"alerts", r.alerts},
              {"lipinski_violations", r.lipinski_violations},
              {"qed", r.qed},
              {"sas", r.sas}};
}

}  // namespace detail

inline json report_to_json(const ScreeningReport& rep) {
  json j;
  j["schema"] = "screenlab-report/1";
  j["config"] = rep.config;

  json sim;
  sim["post"] = rep.similarity.post;
  if (!rep.similarity.pre.empty()) sim["pre"] = rep.similarity.pre;
  sim["median_post"] = rep.similarity.median_post;
  sim["percentile_rank"] = rep.similarity.percentile_rank;
  sim["cutoff"] = rep.similarity.cutoff;
  sim["finetune_labels"] = rep.similarity.finetune_labels;
  sim["skipped_lines"] = rep.similarity.skipped_lines;
  j["similarity"] = sim;

  json stats = json::array();
  for (const PropertyStat& s : rep.descriptor_stats) {
    json row{{"property", s.property},
             {"mean", s.mean},
             {"sd", s.sd},
             {"seed_value", s.seed_value}};
    row["seed_z"] = s.seed_z ? json(*s.seed_z) : json(nullptr);
    stats.push_back(row);
  }
  j["descriptor_stats"] = stats;

  json docked = json::array(), high = json::array();
  for (const LigandRow& r : rep.docked) docked.push_back(detail::ligand_row_json(r));
  for (const LigandRow& r : rep.high_affinity)
    high.push_back(detail::ligand_row_json(r));
  j["docked"] = docked;
  j["high_affinity"] = high;

  json groups;
  groups["k"] = rep.group_k;
  json metrics = json::array();
  for (const GroupComparison& g : rep.group_comparison)
    metrics.push_back(json{{"metric", g.metric},
                           {"mean_top", g.mean_a},
                           {"mean_bottom", g.mean_b},
                           {"count_top", g.count_a},
                           {"count_bottom", g.count_b}});
  groups["metrics"] = metrics;
  j["group_comparison"] = groups;

  json corr = json::array();
  for (const CorrelationRow& c : rep.correlations) {
    json row{{"property", c.property}, {"n", c.n}};
    row["r"] = c.r ? json(*c.r) : json(nullptr);
    corr.push_back(row);
  }
  j["correlations"] = corr;

  json freq;
  freq["total_ligands"] = rep.contact_frequencies.total_ligands;
  json rows = json::array();
  for (const ResidueFrequency& r : rep.contact_frequencies.rows)
    rows.push_back(json{{"residue_label", r.residue_label},
                        {"residue_seq", r.residue_seq},
                        {"count", r.count}});
  freq["rows"] = rows;
  j["contact_frequencies"] = freq;

  json leads = json::array();
  for (const LeadCandidate& l : rep.leads)
    leads.push_back(json{{"label", l.label}, {"qed", l.qed}, {"sas", l.sas}});
  j["leads"] = leads;

  if (rep.reference) {
    j["reference"] = json{{"qed", rep.reference->qed},
                          {"sas", rep.reference->sas},
                          {"skipped_lines", rep.reference->skipped_lines}};
  }

  json errs = json::array();
  for (const ReportError& e : rep.errors)
    errs.push_back(json{{"label", e.label}, {"message", e.message}});
  j["errors"] = errs;
  j["warnings"] = rep.warnings;
  j["counts"] = json{{"pose_files", rep.pose_file_count},
                     {"docked", static_cast<int>(rep.docked.size())},
                     {"errors", static_cast<int>(rep.errors.size())},
                     {"generated", rep.generated_count},
                     {"generated_parsed", rep.generated_parsed}};
  return j;
}

inline void write_report(const ScreeningReport& rep,
                         const std::filesystem::path& path) {
  atomic_write_file(path, report_to_json(rep).dump(2) + "\n");
}

inline json load_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read report " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("report is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || j.value("schema", "") != "screenlab-report/1")
    throw InputError("unrecognized report schema in " + path.string());
  return j;
}

inline const json& report_section(const json& report, const char* name) {
  auto it = report.find(name);
  if (it == report.end()) throw MissingReportSection(name);
  return *it;
}

}  // namespace screenlab
