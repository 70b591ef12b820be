#pragma once

// Pipeline orchestration: run configuration, the screen / similarity /
// plotdata command cores, and the per-figure CSV/SVG writers. The CLI
// executable is a thin argument-parsing shell over these functions, which
// keeps every behavior reachable from tests.
//
// Concurrency: per-ligand stages run on a bounded worker pool; every result
// lands in a slot indexed by input position and aggregation is a sequential
// reduce, so output bytes do not depend on the job count.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "contacts.hpp"
#include "data_sas.hpp"
#include "descriptors.hpp"
#include "druglikeness.hpp"
#include "error.hpp"
#include "fingerprint.hpp"
#include "report.hpp"
#include "smiles.hpp"
#include "stats.hpp"
#include "structio.hpp"

namespace screenlab {

struct PipelineConfig {
  std::string seed_smiles;
  std::string generated_set_path;
  std::string training_set_path;    // optional pre-finetuning set
  std::string poses_dir;
  std::string receptor_path;
  std::string fda_reference_path;   // optional reference .smi for Fig 5 style boxplots
  std::string fragment_scores_path; // empty = bundled table
  double affinity_threshold = -10.6;
  double similarity_percentile = 99.0;
  double contact_threshold = 5.0;
  int fp_radius = 2;
  int fp_width = 2048;
  int jobs = 0;  // 0 = hardware concurrency
  char receptor_chain = 'A';
  std::string output_dir = ".";
};

namespace detail {

inline std::string trim_ws(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline double config_number(const std::string& key, const std::string& value,
                            size_t line) {
  char* end = nullptr;
  double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || !std::isfinite(v))
    throw MalformedRecord("config key '" + key + "' needs a finite number, got '" +
                              value + "'",
                          line);
  return v;
}

inline int config_int(const std::string& key, const std::string& value,
                      size_t line) {
  double v = config_number(key, value, line);
  if (v != std::floor(v))
    throw MalformedRecord("config key '" + key + "' needs an integer", line);
  return static_cast<int>(v);
}

}  // namespace detail

inline PipelineConfig load_config(std::istream& in) {
  PipelineConfig cfg;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string text = detail::trim_ws(line);
    if (text.empty() || text[0] == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw MalformedRecord("expected key=value", lineno);
    std::string key = detail::trim_ws(text.substr(0, eq));
    std::string value = detail::trim_ws(text.substr(eq + 1));
    if (key == "seed_smiles") cfg.seed_smiles = value;
    else if (key == "generated_set") cfg.generated_set_path = value;
    else if (key == "training_set") cfg.training_set_path = value;
    else if (key == "poses_dir") cfg.poses_dir = value;
    else if (key == "receptor") cfg.receptor_path = value;
    else if (key == "fda_reference") cfg.fda_reference_path = value;
    else if (key == "fragment_scores") cfg.fragment_scores_path = value;
    else if (key == "threshold_kcal")
      cfg.affinity_threshold = detail::config_number(key, value, lineno);
    else if (key == "percentile")
      cfg.similarity_percentile = detail::config_number(key, value, lineno);
    else if (key == "contact_angstrom")
      cfg.contact_threshold = detail::config_number(key, value, lineno);
    else if (key == "fp_radius")
      cfg.fp_radius = detail::config_int(key, value, lineno);
    else if (key == "fp_bits")
      cfg.fp_width = detail::config_int(key, value, lineno);
    else if (key == "jobs")
      cfg.jobs = detail::config_int(key, value, lineno);
    else if (key == "receptor_chain") {
      if (value.size() != 1)
        throw MalformedRecord("receptor_chain needs a single character", lineno);
      cfg.receptor_chain = value[0];
    } else if (key == "out")
      cfg.output_dir = value;
    else
      throw MalformedRecord("unknown config key '" + key + "'", lineno);
  }
  return cfg;
}

inline PipelineConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  return load_config(in);
}

namespace detail {

inline int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

template <typename Fn>
void parallel_for(size_t n, int jobs, Fn&& fn) {
  size_t workers = std::min(static_cast<size_t>(effective_jobs(jobs)), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// shortest %g form is stable for a given double, good enough for CSV cells
inline std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string record_label(const SmiRecord& rec) {
  return rec.name.empty() ? "mol" + std::to_string(rec.line_no) : rec.name;
}

inline double sample_mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

inline double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double m = sample_mean(v), s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace detail

// ---- parse / descriptors / fit-sas command cores ----

struct ParseOutcome {
  int total = 0;
  int parsed = 0;
  int skipped = 0;
  std::vector<std::pair<size_t, std::string>> failures;  // line_no, message
};

namespace detail {

// Parses every record in parallel; slot i holds the molecule or the failure.
struct ParsedSet {
  std::vector<SmiRecord> records;
  std::vector<std::optional<Molecule>> molecules;
  ParseOutcome outcome;
};

inline ParsedSet parse_set(std::vector<SmiRecord> records, int jobs) {
  ParsedSet set;
  set.records = std::move(records);
  size_t n = set.records.size();
  set.molecules.assign(n, std::nullopt);
  std::vector<std::string> errors(n);
  parallel_for(n, jobs, [&](size_t i) {
    try {
      set.molecules[i] = parse_smi_record(set.records[i]);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  set.outcome.total = static_cast<int>(n);
  for (size_t i = 0; i < n; ++i) {
    if (set.molecules[i]) {
      ++set.outcome.parsed;
    } else {
      ++set.outcome.skipped;
      set.outcome.failures.emplace_back(set.records[i].line_no, errors[i]);
    }
  }
  return set;
}

inline FragmentScores scores_for(const std::string& path) {
  if (path.empty()) return tables::fragment_scores();
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fragment scores " + path);
  return load_fragment_scores(in);
}

}  // namespace detail

// Canonicalizes a .smi file; per-line failures are skipped and returned.
inline ParseOutcome cmd_parse(const std::string& in_path,
                              const std::string& out_path, int jobs = 0) {
  auto set = detail::parse_set(read_smi_file(in_path), jobs);
  std::string body;
  for (size_t i = 0; i < set.records.size(); ++i) {
    if (!set.molecules[i]) continue;
    body += canonical_smiles(*set.molecules[i]);
    body += '\t';
    body += detail::record_label(set.records[i]);
    body += '\n';
  }
  atomic_write_file(out_path, body);
  return set.outcome;
}

// Descriptor/druglikeness table for a .smi file.
inline ParseOutcome cmd_descriptors(const std::string& in_path,
                                    const std::string& out_path,
                                    const std::string& scores_path = "",
                                    int jobs = 0) {
  auto set = detail::parse_set(read_smi_file(in_path), jobs);
  FragmentScores scores = detail::scores_for(scores_path);
  size_t n = set.records.size();
  std::vector<std::string> rows(n);
  detail::parallel_for(n, jobs, [&](size_t i) {
    if (!set.molecules[i]) return;
    const Molecule& m = *set.molecules[i];
    DescriptorSet d = compute_descriptors(m);
    std::string row = detail::csv_cell(detail::record_label(set.records[i]));
    for (double v : {d.mw, d.lp, d.tpsa}) row += "," + detail::fmt_num(v);
    for (int v : {d.hbd, d.hba, d.aromatic_rings, d.carboxylic_acids,
                  d.rotatable_bonds, d.alerts, lipinski(d).violations})
      row += "," + std::to_string(v);
    row += "," + detail::fmt_num(qed(d));
    row += "," + detail::fmt_num(sas(m, scores));
    rows[i] = row + "\n";
  });
  std::string body =
      "label,mw,lp,tpsa,hbd,hba,aromatic_rings,carboxylic_acids,"
      "rotatable_bonds,alerts,lipinski_violations,qed,sas\n";
  for (const std::string& r : rows) body += r;
  atomic_write_file(out_path, body);
  return set.outcome;
}

// Fits fragment contributions on a corpus .smi and writes the score table.
inline ParseOutcome cmd_fit_sas(const std::string& corpus_path,
                                const std::string& out_path, int jobs = 0) {
  auto set = detail::parse_set(read_smi_file(corpus_path), jobs);
  std::vector<Molecule> corpus;
  for (auto& m : set.molecules)
    if (m) corpus.push_back(std::move(*m));
  FragmentScores fs =
      fit_sas(corpus, std::filesystem::path(corpus_path).filename().string());
  std::ostringstream out;
  save_fragment_scores(fs, out);
  atomic_write_file(out_path, out.str());
  return set.outcome;
}

// ---- similarity command core ----

struct SimilarityOutcome {
  double median = 0;
  double cutoff = 0;
  double percentile_rank = 0;
  int total = 0;
  int parsed = 0;
  int skipped = 0;
  int kept = 0;
};

// Tanimoto of every set member against the seed; writes members at or above
// the nearest-rank percentile cutoff as the finetuning subset.
inline SimilarityOutcome cmd_similarity(const std::string& seed_smiles,
                                        const std::string& set_path,
                                        double percentile_rank,
                                        const std::string& out_path,
                                        int fp_radius = 2, int fp_width = 2048,
                                        int jobs = 0) {
  if (!(percentile_rank >= 0.0 && percentile_rank <= 100.0))
    throw InputError("percentile must be in [0, 100]");
  Molecule seed;
  try {
    seed = parse_smiles(seed_smiles);
  } catch (const Error& e) {
    throw UnparseableSeed(e.what());
  }
  Fingerprint seed_fp = fingerprint(seed, fp_radius, fp_width);

  auto set = detail::parse_set(read_smi_file(set_path), jobs);
  size_t n = set.records.size();
  std::vector<double> sim_by_slot(n, -1.0);
  detail::parallel_for(n, jobs, [&](size_t i) {
    if (!set.molecules[i]) return;
    sim_by_slot[i] =
        tanimoto(seed_fp, fingerprint(*set.molecules[i], fp_radius, fp_width));
  });

  std::vector<double> sims;
  for (size_t i = 0; i < n; ++i)
    if (set.molecules[i]) sims.push_back(sim_by_slot[i]);
  if (sims.empty()) throw EmptyInput("no parseable molecules in " + set_path);

  SimilarityOutcome out;
  out.total = set.outcome.total;
  out.parsed = set.outcome.parsed;
  out.skipped = set.outcome.skipped;
  out.percentile_rank = percentile_rank;
  out.median = median(sims);
  out.cutoff = percentile(sims, percentile_rank);

  std::string body;
  for (size_t i = 0; i < n; ++i) {
    if (!set.molecules[i] || sim_by_slot[i] < out.cutoff) continue;
    body += set.records[i].smiles;
    body += '\t';
    body += detail::record_label(set.records[i]);
    body += '\n';
    ++out.kept;
  }
  atomic_write_file(out_path, body);
  return out;
}

// ---- contacts command core ----

// Polar contacts of the best pose in one docking output file.
inline std::vector<Contact> cmd_contacts(const std::string& receptor_path,
                                         char chain,
                                         const std::string& pose_path,
                                         double threshold,
                                         const std::string& out_path) {
  ProteinStructure receptor =
      clean_receptor(parse_pdb(detail::slurp_file(receptor_path)), chain);
  DockedPose best = best_pose(parse_vina_poses(detail::slurp_file(pose_path)));
  std::vector<Contact> contacts = polar_contacts(receptor, best, threshold);
  std::string body = "residue_label,residue_atom,ligand_atom_index,distance\n";
  for (const Contact& c : contacts) {
    body += detail::csv_cell(c.residue_label) + "," + c.residue_atom + "," +
            std::to_string(c.ligand_atom_index) + "," +
            detail::fmt_num(c.distance) + "\n";
  }
  atomic_write_file(out_path, body);
  return contacts;
}

// ---- screen command core ----

namespace detail {

struct PoseSlot {
  bool ok = false;
  LigandRow row;
  std::vector<Contact> contacts;
  std::vector<std::string> warnings;
  std::string label;
  std::string error;
};

inline void fill_descriptor_columns(LigandRow& row, const Molecule& m,
                                    const FragmentScores& scores,
                                    std::vector<std::string>& warnings) {
  DescriptorSet d = compute_descriptors(m);
  row.mw = d.mw;
  row.lp = d.lp;
  row.tpsa = d.tpsa;
  row.hbd = d.hbd;
  row.hba = d.hba;
  row.aromatic_rings = d.aromatic_rings;
  row.carboxylic_acids = d.carboxylic_acids;
  row.rotatable_bonds = d.rotatable_bonds;
  row.alerts = d.alerts;
  row.lipinski_violations = lipinski(d).violations;
  row.qed = qed(d);
  row.sas = sas(m, scores);
  warnings = d.warnings;
}

inline std::vector<std::filesystem::path> pose_files(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw InputError("poses directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pdbqt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace detail

// Runs the whole screen and writes report.json plus poses.csv into
// cfg.output_dir. Receptor problems abort; per-ligand problems become error
// rows so that pose files = docked rows + error rows always holds.
inline ScreeningReport cmd_screen(const PipelineConfig& cfg) {
  namespace fs = std::filesystem;
  ScreeningReport rep;

  Molecule seed;
  try {
    seed = parse_smiles(cfg.seed_smiles);
  } catch (const Error& e) {
    throw UnparseableSeed(e.what());
  }

  ProteinStructure receptor = clean_receptor(
      parse_pdb(detail::slurp_file(cfg.receptor_path)), cfg.receptor_chain);

  FragmentScores scores = detail::scores_for(cfg.fragment_scores_path);

  auto generated = detail::parse_set(read_smi_file(cfg.generated_set_path), cfg.jobs);
  rep.generated_count = generated.outcome.total;
  rep.generated_parsed = generated.outcome.parsed;
  rep.similarity.skipped_lines = generated.outcome.skipped;

  std::map<std::string, size_t> by_label;
  for (size_t i = 0; i < generated.records.size(); ++i) {
    std::string label = detail::record_label(generated.records[i]);
    auto [it, fresh] = by_label.emplace(label, i);
    if (!fresh)
      throw InputError("duplicate ligand label '" + label + "' at lines " +
                       std::to_string(generated.records[it->second].line_no) +
                       " and " + std::to_string(generated.records[i].line_no));
  }

  // descriptor distributions of the generated set, with the seed's z-score
  DescriptorSet seed_desc = compute_descriptors(seed);
  std::vector<std::string> stat_names = {"mw", "lp", "tpsa", "hbd", "hba", "qed"};
  std::map<std::string, std::vector<double>> populations;
  {
    size_t n = generated.records.size();
    std::vector<std::optional<DescriptorSet>> descs(n);
    std::vector<double> qeds(n, 0.0);
    detail::parallel_for(n, cfg.jobs, [&](size_t i) {
      if (!generated.molecules[i]) return;
      descs[i] = compute_descriptors(*generated.molecules[i]);
      qeds[i] = qed(*descs[i]);
    });
    for (size_t i = 0; i < n; ++i) {
      if (!descs[i]) continue;
      populations["mw"].push_back(descs[i]->mw);
      populations["lp"].push_back(descs[i]->lp);
      populations["tpsa"].push_back(descs[i]->tpsa);
      populations["hbd"].push_back(descs[i]->hbd);
      populations["hba"].push_back(descs[i]->hba);
      populations["qed"].push_back(qeds[i]);
    }
  }
  std::map<std::string, double> seed_values = {
      {"mw", seed_desc.mw},   {"lp", seed_desc.lp},
      {"tpsa", seed_desc.tpsa}, {"hbd", static_cast<double>(seed_desc.hbd)},
      {"hba", static_cast<double>(seed_desc.hba)}, {"qed", qed(seed_desc)}};
  bool degenerate_population = false;
  for (const std::string& name : stat_names) {
    const std::vector<double>& pop = populations[name];
    PropertyStat stat;
    stat.property = name;
    stat.mean = detail::sample_mean(pop);
    stat.sd = detail::sample_sd(pop);
    stat.seed_value = seed_values[name];
    try {
      stat.seed_z = zscore(stat.seed_value, pop);
    } catch (const DegeneratePopulation&) {
      degenerate_population = true;
    }
    rep.descriptor_stats.push_back(std::move(stat));
  }

  // similarity of every generated molecule to the seed
  Fingerprint seed_fp = fingerprint(seed, cfg.fp_radius, cfg.fp_width);
  {
    size_t n = generated.records.size();
    std::vector<double> sim_by_slot(n, -1.0);
    detail::parallel_for(n, cfg.jobs, [&](size_t i) {
      if (!generated.molecules[i]) return;
      sim_by_slot[i] = tanimoto(
          seed_fp, fingerprint(*generated.molecules[i], cfg.fp_radius, cfg.fp_width));
    });
    for (size_t i = 0; i < n; ++i)
      if (generated.molecules[i]) rep.similarity.post.push_back(sim_by_slot[i]);
    rep.similarity.percentile_rank = cfg.similarity_percentile;
    if (!rep.similarity.post.empty()) {
      rep.similarity.median_post = median(rep.similarity.post);
      rep.similarity.cutoff =
          percentile(rep.similarity.post, cfg.similarity_percentile);
      for (size_t i = 0; i < n; ++i)
        if (generated.molecules[i] && sim_by_slot[i] >= rep.similarity.cutoff)
          rep.similarity.finetune_labels.push_back(
              detail::record_label(generated.records[i]));
    }
  }
  int training_skipped = 0;
  if (!cfg.training_set_path.empty()) {
    auto training = detail::parse_set(read_smi_file(cfg.training_set_path), cfg.jobs);
    training_skipped = training.outcome.skipped;
    size_t n = training.records.size();
    std::vector<double> sim_by_slot(n, -1.0);
    detail::parallel_for(n, cfg.jobs, [&](size_t i) {
      if (!training.molecules[i]) return;
      sim_by_slot[i] = tanimoto(
          seed_fp, fingerprint(*training.molecules[i], cfg.fp_radius, cfg.fp_width));
    });
    for (size_t i = 0; i < n; ++i)
      if (training.molecules[i]) rep.similarity.pre.push_back(sim_by_slot[i]);
  }

  // one docked row or one error row per pose file
  std::vector<fs::path> files = detail::pose_files(cfg.poses_dir);
  rep.pose_file_count = static_cast<int>(files.size());
  std::vector<detail::PoseSlot> slots(files.size());
  detail::parallel_for(files.size(), cfg.jobs, [&](size_t i) {
    detail::PoseSlot& slot = slots[i];
    slot.label = files[i].stem().string();
    try {
      auto it = by_label.find(slot.label);
      if (it == by_label.end())
        throw InputError("no ligand record matches pose file stem");
      if (!generated.molecules[it->second])
        throw InputError("ligand record failed to parse");
      const Molecule& m = *generated.molecules[it->second];
      DockedPose best =
          best_pose(parse_vina_poses(detail::slurp_file(files[i].string())));
      slot.row.label = slot.label;
      slot.row.energy = best.binding_energy;
      slot.row.pose_rank = best.pose_rank;
      detail::fill_descriptor_columns(slot.row, m, scores, slot.warnings);
      slot.contacts = polar_contacts(receptor, best, cfg.contact_threshold);
      slot.ok = true;
    } catch (const Error& e) {
      slot.error = e.what();
    }
  });

  std::vector<size_t> order(slots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return slots[a].label < slots[b].label;
  });
  std::map<std::string, std::vector<Contact>> contacts_by_label;
  std::vector<std::string> ligand_warnings;
  for (size_t i : order) {
    detail::PoseSlot& slot = slots[i];
    if (!slot.ok) {
      rep.errors.push_back({slot.label, slot.error});
      continue;
    }
    rep.docked.push_back(slot.row);
    contacts_by_label[slot.label] = std::move(slot.contacts);
    for (const std::string& w : slot.warnings)
      ligand_warnings.push_back(slot.label + ": " + w);
  }

  for (const LigandRow& row : rep.docked)
    if (row.energy <= cfg.affinity_threshold) rep.high_affinity.push_back(row);

  // best-vs-worst group means over all docked ligands
  rep.group_k = static_cast<int>(std::min<size_t>(100, rep.docked.size() / 2));
  if (rep.group_k >= 1) {
    std::vector<RankedLigand> ranked;
    for (const LigandRow& row : rep.docked)
      ranked.push_back(
          {row.label,
           row.energy,
           {{"aromatic_rings", static_cast<double>(row.aromatic_rings)},
            {"carboxylic_acids", static_cast<double>(row.carboxylic_acids)},
            {"hbd", static_cast<double>(row.hbd)},
            {"hba", static_cast<double>(row.hba)}}});
    rep.group_comparison = compare_groups(std::move(ranked), rep.group_k);
  } else {
    rep.warnings.push_back("group comparison skipped: fewer than 2 docked ligands");
  }

  // energy correlations over all docked ligands
  {
    std::vector<double> energies;
    std::map<std::string, std::vector<double>> props;
    for (const LigandRow& row : rep.docked) {
      energies.push_back(row.energy);
      props["lp"].push_back(row.lp);
      props["mw"].push_back(row.mw);
      props["tpsa"].push_back(row.tpsa);
      props["hbd"].push_back(row.hbd);
      props["hba"].push_back(row.hba);
    }
    for (const std::string name : {"lp", "mw", "tpsa", "hbd", "hba"}) {
      CorrelationRow row;
      row.property = name;
      row.n = static_cast<int>(energies.size());
      try {
        row.r = pearson(energies, props[name]);
      } catch (const Error&) {
      }
      rep.correlations.push_back(std::move(row));
    }
  }

  if (!rep.high_affinity.empty()) {
    std::vector<std::vector<Contact>> per_ligand;
    std::vector<LeadCandidate> candidates;
    for (const LigandRow& row : rep.high_affinity) {
      per_ligand.push_back(contacts_by_label[row.label]);
      candidates.push_back({row.label, row.qed, row.sas});
    }
    rep.contact_frequencies = contact_frequencies(per_ligand);
    rep.leads = select_leads(std::move(candidates));
  }

  if (!cfg.fda_reference_path.empty()) {
    auto reference = detail::parse_set(read_smi_file(cfg.fda_reference_path), cfg.jobs);
    ReferenceSection ref;
    ref.skipped_lines = reference.outcome.skipped;
    size_t n = reference.records.size();
    std::vector<std::optional<std::pair<double, double>>> values(n);
    detail::parallel_for(n, cfg.jobs, [&](size_t i) {
      if (!reference.molecules[i]) return;
      const Molecule& m = *reference.molecules[i];
      values[i] = {qed(compute_descriptors(m)), sas(m, scores)};
    });
    for (size_t i = 0; i < n; ++i) {
      if (!values[i]) continue;
      ref.qed.push_back(values[i]->first);
      ref.sas.push_back(values[i]->second);
    }
    rep.reference = std::move(ref);
  }

  // deterministic warning order: pipeline-level first, then per-ligand
  if (rep.similarity.post.empty())
    rep.warnings.insert(rep.warnings.begin(),
                        "generated set has no parseable molecules");
  if (degenerate_population)
    rep.warnings.push_back("seed z-scores unavailable: degenerate population");
  if (training_skipped > 0)
    rep.warnings.push_back("training set: " + std::to_string(training_skipped) +
                           " lines skipped");
  if (files.empty())
    rep.warnings.push_back("no pose files found in " + cfg.poses_dir);
  for (std::string& w : ligand_warnings) rep.warnings.push_back(std::move(w));

  if (rep.pose_file_count !=
      static_cast<int>(rep.docked.size() + rep.errors.size()))
    throw std::logic_error("pose accounting mismatch");

  rep.config["seed_smiles"] = cfg.seed_smiles;
  rep.config["generated_set"] = cfg.generated_set_path;
  rep.config["training_set"] = cfg.training_set_path;
  rep.config["poses_dir"] = cfg.poses_dir;
  rep.config["receptor"] = cfg.receptor_path;
  rep.config["receptor_chain"] = std::string(1, cfg.receptor_chain);
  rep.config["fda_reference"] = cfg.fda_reference_path;
  rep.config["fragment_scores"] =
      cfg.fragment_scores_path.empty() ? "bundled" : cfg.fragment_scores_path;
  rep.config["threshold_kcal"] = detail::fmt_num(cfg.affinity_threshold);
  rep.config["percentile"] = detail::fmt_num(cfg.similarity_percentile);
  rep.config["contact_angstrom"] = detail::fmt_num(cfg.contact_threshold);
  rep.config["fp_radius"] = std::to_string(cfg.fp_radius);
  rep.config["fp_bits"] = std::to_string(cfg.fp_width);
  // jobs and output_dir are execution details, not parameters: leaving them
  // out keeps reports byte-identical across thread counts and destinations

  fs::create_directories(cfg.output_dir);
  write_report(rep, fs::path(cfg.output_dir) / "report.json");
  std::string poses_csv = "ligand_label,best_energy_kcal_mol,pose_rank\n";
  for (const LigandRow& row : rep.docked)
    poses_csv += detail::csv_cell(row.label) + "," + detail::fmt_num(row.energy) +
                 "," + std::to_string(row.pose_rank) + "\n";
  atomic_write_file(fs::path(cfg.output_dir) / "poses.csv", poses_csv);
  return rep;
}

// ---- plotdata command core ----

namespace detail {

inline std::vector<double> number_array(const json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(v.get<double>());
  return out;
}

inline std::string histogram_csv(const json& sim) {
  std::string body = "set,bin_lo,bin_hi,count\n";
  auto emit = [&](const char* name, const std::vector<double>& values) {
    std::array<int, 20> counts{};
    for (double v : values) {
      int bin = std::min(static_cast<int>(v * 20.0), 19);
      ++counts[static_cast<size_t>(std::max(bin, 0))];
    }
    for (int b = 0; b < 20; ++b)
      body += std::string(name) + "," + fmt_num(b / 20.0) + "," +
              fmt_num((b + 1) / 20.0) + "," + std::to_string(counts[b]) + "\n";
  };
  if (sim.contains("pre")) emit("pre", number_array(sim["pre"]));
  emit("post", number_array(sim["post"]));
  return body;
}

inline std::string rank_csv(const json& sim) {
  std::vector<double> values = number_array(sim["post"]);
  std::sort(values.begin(), values.end());
  std::string body;
  body += "# median=" + fmt_num(sim["median_post"].get<double>()) + "\n";
  body += "# cutoff=" + fmt_num(sim["cutoff"].get<double>()) + "\n";
  body += "# percentile=" + fmt_num(sim["percentile_rank"].get<double>()) + "\n";
  body += "rank,similarity\n";
  for (size_t i = 0; i < values.size(); ++i)
    body += std::to_string(i + 1) + "," + fmt_num(values[i]) + "\n";
  return body;
}

inline std::string boxplot_csv(const std::vector<std::pair<std::string, std::vector<double>>>& sets) {
  std::string body = "set,min,q1,median,q3,max,outliers\n";
  for (const auto& [name, values] : sets) {
    if (values.empty()) continue;
    BoxplotSummary s = boxplot_summary(values);
    std::string outliers;
    for (size_t i = 0; i < s.outliers.size(); ++i) {
      if (i) outliers += ';';
      outliers += fmt_num(s.outliers[i]);
    }
    body += name + "," + fmt_num(s.min) + "," + fmt_num(s.q1) + "," +
            fmt_num(s.median) + "," + fmt_num(s.q3) + "," + fmt_num(s.max) +
            "," + csv_cell(outliers) + "\n";
  }
  return body;
}

// tiny fixed-size renderings; the CSVs are the contract, these are previews
inline std::string svg_open(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

inline std::string svg_histogram(const std::vector<double>& values) {
  std::array<int, 20> counts{};
  for (double v : values)
    ++counts[static_cast<size_t>(
        std::clamp(static_cast<int>(v * 20.0), 0, 19))];
  int maxc = 1;
  for (int c : counts) maxc = std::max(maxc, c);
  std::string s = svg_open(440, 240);
  for (int b = 0; b < 20; ++b) {
    double h = 200.0 * counts[b] / maxc;
    s += "<rect x=\"" + fmt_num(20 + b * 20) + "\" y=\"" + fmt_num(220 - h) +
         "\" width=\"18\" height=\"" + fmt_num(h) + "\" fill=\"steelblue\"/>\n";
  }
  return s + "</svg>\n";
}

inline std::string svg_scatter(const std::vector<std::pair<double, double>>& pts) {
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!pts.empty()) {
    xlo = xhi = pts[0].first;
    ylo = yhi = pts[0].second;
    for (const auto& [x, y] : pts) {
      xlo = std::min(xlo, x); xhi = std::max(xhi, x);
      ylo = std::min(ylo, y); yhi = std::max(yhi, y);
    }
  }
  if (xhi == xlo) xhi = xlo + 1;
  if (yhi == ylo) yhi = ylo + 1;
  std::string s = svg_open(440, 240);
  for (const auto& [x, y] : pts) {
    double px = 20 + 400 * (x - xlo) / (xhi - xlo);
    double py = 220 - 200 * (y - ylo) / (yhi - ylo);
    s += "<circle cx=\"" + fmt_num(px) + "\" cy=\"" + fmt_num(py) +
         "\" r=\"3\" fill=\"firebrick\"/>\n";
  }
  return s + "</svg>\n";
}

inline std::string svg_boxplots(
    const std::vector<std::pair<std::string, std::vector<double>>>& sets) {
  std::vector<std::pair<std::string, BoxplotSummary>> boxes;
  double lo = 0, hi = 1;
  bool first = true;
  for (const auto& [name, values] : sets) {
    if (values.empty()) continue;
    BoxplotSummary s = boxplot_summary(values);
    double smin = s.min, smax = s.max;
    for (double o : s.outliers) {
      smin = std::min(smin, o);
      smax = std::max(smax, o);
    }
    if (first) { lo = smin; hi = smax; first = false; }
    lo = std::min(lo, smin);
    hi = std::max(hi, smax);
    boxes.emplace_back(name, s);
  }
  if (hi == lo) hi = lo + 1;
  auto ypos = [&](double v) { return 220 - 200 * (v - lo) / (hi - lo); };
  std::string s = svg_open(120 * std::max<size_t>(boxes.size(), 1) + 40, 240);
  for (size_t i = 0; i < boxes.size(); ++i) {
    const BoxplotSummary& b = boxes[i].second;
    double cx = 100 + 120.0 * static_cast<double>(i);
    s += "<line x1=\"" + fmt_num(cx) + "\" y1=\"" + fmt_num(ypos(b.min)) +
         "\" x2=\"" + fmt_num(cx) + "\" y2=\"" + fmt_num(ypos(b.max)) +
         "\" stroke=\"black\"/>\n";
    s += "<rect x=\"" + fmt_num(cx - 30) + "\" y=\"" + fmt_num(ypos(b.q3)) +
         "\" width=\"60\" height=\"" + fmt_num(ypos(b.q1) - ypos(b.q3)) +
         "\" fill=\"lightsteelblue\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt_num(cx - 30) + "\" y1=\"" + fmt_num(ypos(b.median)) +
         "\" x2=\"" + fmt_num(cx + 30) + "\" y2=\"" + fmt_num(ypos(b.median)) +
         "\" stroke=\"black\"/>\n";
    for (double o : boxes[i].second.outliers)
      s += "<circle cx=\"" + fmt_num(cx) + "\" cy=\"" + fmt_num(ypos(o)) +
           "\" r=\"3\" fill=\"none\" stroke=\"black\"/>\n";
  }
  return s + "</svg>\n";
}

}  // namespace detail

// Writes the per-figure CSV tables (and SVG previews) for a report document.
inline void cmd_plotdata(const json& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto put = [&](const char* name, const std::string& body) {
    atomic_write_file(fs::path(out_dir) / name, body);
  };

  const json& sim = report_section(report, "similarity");
  put("fig3a.csv", detail::histogram_csv(sim));
  put("fig3b.csv", detail::rank_csv(sim));
  put("fig3a.svg", detail::svg_histogram(detail::number_array(sim["post"])));

  const json& stats = report_section(report, "descriptor_stats");
  {
    std::string body = "property,mean,sd,seed_value,seed_zscore\n";
    for (const auto& row : stats) {
      body += row["property"].get<std::string>() + "," +
              detail::fmt_num(row["mean"].get<double>()) + "," +
              detail::fmt_num(row["sd"].get<double>()) + "," +
              detail::fmt_num(row["seed_value"].get<double>()) + ",";
      if (!row["seed_z"].is_null())
        body += detail::fmt_num(row["seed_z"].get<double>());
      body += "\n";
    }
    put("fig3c.csv", body);
  }

  const json& groups = report_section(report, "group_comparison");
  {
    std::string body = "metric,mean_top,mean_bottom,count_top,count_bottom\n";
    for (const auto& row : groups["metrics"]) {
      body += row["metric"].get<std::string>() + "," +
              detail::fmt_num(row["mean_top"].get<double>()) + "," +
              detail::fmt_num(row["mean_bottom"].get<double>()) + "," +
              std::to_string(row["count_top"].get<int>()) + "," +
              std::to_string(row["count_bottom"].get<int>()) + "\n";
    }
    put("fig4b.csv", body);
  }

  const json& high = report_section(report, "high_affinity");
  {
    std::string body = "label,energy,lp,mw,tpsa,hbd,hba\n";
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : high) {
      body += detail::csv_cell(row["label"].get<std::string>()) + "," +
              detail::fmt_num(row["energy"].get<double>()) + "," +
              detail::fmt_num(row["lp"].get<double>()) + "," +
              detail::fmt_num(row["mw"].get<double>()) + "," +
              detail::fmt_num(row["tpsa"].get<double>()) + "," +
              std::to_string(row["hbd"].get<int>()) + "," +
              std::to_string(row["hba"].get<int>()) + "\n";
      pts.emplace_back(row["energy"].get<double>(), row["lp"].get<double>());
    }
    put("fig4c.csv", body);
    put("fig4c.svg", detail::svg_scatter(pts));
  }

  {
    std::vector<double> high_qed, high_sas;
    for (const auto& row : high) {
      high_qed.push_back(row["qed"].get<double>());
      high_sas.push_back(row["sas"].get<double>());
    }
    std::vector<std::pair<std::string, std::vector<double>>> qed_sets = {
        {"high_affinity", high_qed}};
    std::vector<std::pair<std::string, std::vector<double>>> sas_sets = {
        {"high_affinity", high_sas}};
    if (report.contains("reference")) {
      qed_sets.emplace_back("reference",
                            detail::number_array(report["reference"]["qed"]));
      sas_sets.emplace_back("reference",
                            detail::number_array(report["reference"]["sas"]));
    }
    put("fig5a.csv", detail::boxplot_csv(qed_sets));
    put("fig5b.csv", detail::boxplot_csv(sas_sets));
    put("fig5a.svg", detail::svg_boxplots(qed_sets));
    put("fig5b.svg", detail::svg_boxplots(sas_sets));
  }

  const json& freq = report_section(report, "contact_frequencies");
  {
    std::string body = "residue_label,count\n";
    for (const auto& row : freq["rows"])
      body += detail::csv_cell(row["residue_label"].get<std::string>()) + "," +
              std::to_string(row["count"].get<int>()) + "\n";
    put("fig6a.csv", body);
  }
}

inline void cmd_plotdata_file(const std::string& report_path,
                              const std::string& out_dir) {
  cmd_plotdata(load_report(report_path), out_dir);
}

}  // namespace screenlab
