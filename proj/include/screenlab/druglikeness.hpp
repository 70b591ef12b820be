// Rule-of-five evaluation, QED desirability scoring, and the fragment-based
// synthetic-accessibility score with its corpus fitting step.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "screenlab/data_tables.hpp"
#include "screenlab/descriptors.hpp"
#include "screenlab/error.hpp"
#include "screenlab/fingerprint.hpp"
#include "screenlab/molecule.hpp"

namespace screenlab {

struct RuleOutcome {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool pass = true;
};

struct RuleReport {
  std::array<RuleOutcome, 4> rules;
  int violations = 0;
};

// The four rule-of-five bounds, all comparisons inclusive.
inline RuleReport lipinski(const DescriptorSet& d) {
  RuleReport r;
  auto rule = [&](size_t k, const char* name, double value, double limit) {
    r.rules[k] = {name, value, limit, value <= limit};
    if (value > limit) ++r.violations;
  };
  rule(0, "MW", d.mw, 500.0);
  rule(1, "LP", d.lp, 5.0);
  rule(2, "HBD", d.hbd, 5.0);
  rule(3, "HBA", d.hba, 10.0);
  return r;
}

// Asymmetric double sigmoid, normalized so the peak sits at 1.
inline double qed_desirability(const tables::AdsParams& p, double x) {
  double rise = 1.0 + std::exp(-(x - p.c + p.d / 2.0) / p.e);
  double fall = 1.0 + std::exp(-(x - p.c - p.d / 2.0) / p.f);
  return (p.a + p.b / rise * (1.0 - 1.0 / fall)) / p.dmax;
}

// Order: MW, ALOGP, HBA, HBD, PSA, ROTB, AROM, ALERTS.
inline std::array<double, 8> qed_desirabilities(const DescriptorSet& d) {
  if (std::isnan(d.mw) || std::isnan(d.lp) || std::isnan(d.tpsa))
    throw MissingDescriptor("descriptor set contains NaN");
  const auto& ads = tables::qed_ads();
  return {
      qed_desirability(ads.at("MW"), d.mw),
      qed_desirability(ads.at("ALOGP"), d.lp),
      qed_desirability(ads.at("HBA"), d.hba),
      qed_desirability(ads.at("HBD"), d.hbd),
      qed_desirability(ads.at("PSA"), d.tpsa),
      qed_desirability(ads.at("ROTB"), d.rotatable_bonds),
      qed_desirability(ads.at("AROM"), d.aromatic_rings),
      qed_desirability(ads.at("ALERTS"), d.alerts),
  };
}

inline double geometric_mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += std::log(std::max(x, 1e-9));
  return std::exp(s / static_cast<double>(xs.size()));
}

inline double qed(const DescriptorSet& d) {
  auto ds = qed_desirabilities(d);
  return geometric_mean(std::vector<double>(ds.begin(), ds.end()));
}

struct FragmentScores {
  std::map<uint64_t, double> contributions;
  long corpus_size = 0;
  std::string provenance;
};

inline FragmentScores fit_sas(const std::vector<Molecule>& corpus,
                              std::string provenance = "unspecified corpus") {
  constexpr size_t kMinCorpus = 1000;
  if (corpus.size() < kMinCorpus)
    throw CorpusTooSmall(corpus.size(), kMinCorpus);
  std::map<uint64_t, long> counts;
  for (const Molecule& m : corpus) {
    auto hs = detail::env_hashes(m, 2);
    for (int i = 0; i < m.atom_count(); ++i) {
      if (m.atom(i).element == elem::H) continue;
      ++counts[hs[2][static_cast<size_t>(i)]];
    }
  }
  long maxc = 1;
  for (const auto& [h, c] : counts) maxc = std::max(maxc, c);
  FragmentScores fs;
  fs.corpus_size = static_cast<long>(corpus.size());
  fs.provenance = std::move(provenance);
  for (const auto& [h, c] : counts) {
    double v = std::log10(static_cast<double>(c) / static_cast<double>(maxc));
    fs.contributions[h] = std::clamp(v, -4.0, 0.0);
  }
  return fs;
}

namespace detail {

inline int count_stereo_atoms(const Molecule& m) {
  int n = 0;
  for (const Atom& a : m.atoms())
    if (!a.stereo.empty()) ++n;
  return n;
}

// Ring pairs sharing exactly one atom mark that atom as a spiro center.
inline int count_spiro_atoms(const Molecule& m) {
  const auto& rings = m.rings();
  std::set<int> spiro;
  for (size_t i = 0; i < rings.size(); ++i)
    for (size_t j = i + 1; j < rings.size(); ++j) {
      std::vector<int> a = rings[i], b = rings[j], shared;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared));
      if (shared.size() == 1) spiro.insert(shared[0]);
    }
  return static_cast<int>(spiro.size());
}

// Ring pairs sharing a path of two or more bonds mark the path's end atoms
// as bridgeheads.
inline int count_bridgehead_atoms(const Molecule& m) {
  const auto& ring_bonds = m.ring_bonds();
  std::set<int> heads;
  for (size_t i = 0; i < ring_bonds.size(); ++i)
    for (size_t j = i + 1; j < ring_bonds.size(); ++j) {
      std::vector<int> a = ring_bonds[i], b = ring_bonds[j], shared;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared));
      if (shared.size() < 2) continue;
      std::map<int, int> incidence;
      for (int bi : shared) {
        ++incidence[m.bond(bi).a];
        ++incidence[m.bond(bi).b];
      }
      for (const auto& [atom, deg] : incidence)
        if (deg == 1) heads.insert(atom);
    }
  return static_cast<int>(heads.size());
}

}  // namespace detail

// Fragment familiarity minus complexity penalties, mapped onto [1, 10].
// Raw values near 0 (every fragment corpus-common, no penalties) land near
// the easy end; -5.5 or below saturates at 10.
inline double sas(const Molecule& m, const FragmentScores& fs) {
  if (fs.contributions.empty())
    throw EmptyFragmentScores();

  auto hs = detail::env_hashes(m, 2);
  double sum = 0.0;
  int heavy = 0;
  for (int i = 0; i < m.atom_count(); ++i) {
    if (m.atom(i).element == elem::H) continue;
    ++heavy;
    auto it = fs.contributions.find(hs[2][static_cast<size_t>(i)]);
    sum += it == fs.contributions.end() ? -4.0 : it->second;
  }
  double frag_mean = heavy == 0 ? 0.0 : sum / heavy;

  double n = heavy;
  double size_penalty = std::pow(n, 1.005) - n;
  double stereo_penalty = std::log10(detail::count_stereo_atoms(m) + 1.0);
  double spiro_penalty = std::log10(detail::count_spiro_atoms(m) + 1.0);
  double bridge_penalty = std::log10(detail::count_bridgehead_atoms(m) + 1.0);
  double macro_penalty = 0.0;
  for (const auto& ring : m.rings())
    if (ring.size() > 8) {
      macro_penalty = std::log10(2.0);
      break;
    }

  double raw = frag_mean - size_penalty - stereo_penalty - spiro_penalty -
               bridge_penalty - macro_penalty;
  constexpr double raw_easy = 0.5, raw_hard = -5.5;
  double score = 1.0 + 9.0 * (raw_easy - raw) / (raw_easy - raw_hard);
  return std::clamp(score, 1.0, 10.0);
}

inline void save_fragment_scores(const FragmentScores& fs, std::ostream& os) {
  os << "# fragment-scores v1\n";
  os << "# corpus-size: " << fs.corpus_size << "\n";
  os << "# provenance: " << fs.provenance << "\n";
  os << "# columns: fragment-hash(hex) contribution\n";
  os << std::setprecision(6) << std::fixed;
  for (const auto& [h, v] : fs.contributions) {
    os << std::hex << std::setw(16) << std::setfill('0') << h << std::dec
       << "\t" << v << "\n";
  }
}

inline FragmentScores load_fragment_scores(std::istream& is) {
  FragmentScores fs;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto tag = [&](const char* key) -> std::string {
        std::string prefix = std::string("# ") + key + ": ";
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
        return {};
      };
      if (auto v = tag("corpus-size"); !v.empty()) fs.corpus_size = std::stol(v);
      if (auto v = tag("provenance"); !v.empty()) fs.provenance = v;
      continue;
    }
    std::istringstream ss(line);
    std::string hash_text;
    double value = 0.0;
    if (!(ss >> hash_text >> value))
      throw MalformedRecord("expected hash and contribution", line_no);
    uint64_t h = 0;
    try {
      h = std::stoull(hash_text, nullptr, 16);
    } catch (const std::exception&) {
      throw MalformedRecord("bad fragment hash '" + hash_text + "'", line_no);
    }
    fs.contributions[h] = value;
  }
  return fs;
}

struct LeadCandidate {
  std::string label;
  double qed = 0.0;
  double sas = 0.0;

  bool operator==(const LeadCandidate&) const = default;
};

// Top half by QED intersected with bottom half by SAS. Lower median for even
// counts, inclusive at both medians; output sorted by label.
inline std::vector<LeadCandidate> select_leads(
    std::vector<LeadCandidate> candidates) {
  if (candidates.empty()) return {};
  auto lower_median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
  };
  std::vector<double> qeds, sases;
  for (const auto& c : candidates) {
    qeds.push_back(c.qed);
    sases.push_back(c.sas);
  }
  double qmed = lower_median(qeds);
  double smed = lower_median(sases);
  std::vector<LeadCandidate> out;
  for (auto& c : candidates)
    if (c.qed >= qmed && c.sas <= smed) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const LeadCandidate& a, const LeadCandidate& b) {
              return a.label < b.label;
            });
  return out;
}

}  // namespace screenlab
