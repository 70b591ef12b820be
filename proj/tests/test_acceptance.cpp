//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Each criterion is one test case; a listener prints one
// PASS/FAIL line per criterion so the run reads as a checklist. Everything
// here is checked against independent references: hand-derived counts,
// frozen oracle outputs, brute-force reimplementations, or byte digests.

#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "screenlab/canonical.hpp"
#include "screenlab/contacts.hpp"
#include "screenlab/data_sas.hpp"
#include "screenlab/data_tables.hpp"
#include "screenlab/descriptors.hpp"
#include "screenlab/druglikeness.hpp"
#include "screenlab/fingerprint.hpp"
#include "screenlab/gasteiger.hpp"
#include "screenlab/pipeline.hpp"
#include "screenlab/smiles.hpp"

using namespace screenlab;
using Catch::Approx;

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

fs::path test_dir() {
  const char* dir = std::getenv("SCREENLAB_TEST_DIR");
  REQUIRE(dir != nullptr);
  return fs::path(dir);
}

std::string fixture(const std::string& name) {
  return (test_dir() / "fixtures" / name).string();
}

fs::path repo_root() { return test_dir().parent_path(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() /
           ("screenlab_accept_" + std::to_string(counter.fetch_add(1)) + "_" +
            std::to_string(static_cast<unsigned>(::getpid())));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

class ChecklistPrinter : public Catch::EventListenerBase {
 public:
  using Catch::EventListenerBase::EventListenerBase;
  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::printf("%s  %s\n",
                stats.totals.assertions.allOk() ? "[PASS]" : "[FAIL]",
                stats.testInfo->name.c_str());
    std::fflush(stdout);
  }
};

}  // namespace

CATCH_REGISTER_LISTENER(ChecklistPrinter)

TEST_CASE("criterion 1: seed ligand weighs 516.6 +/- 0.5 Da in under 1 s") {
  auto t0 = Clock::now();
  auto recs = read_smi_file(fixture("siponimod.smi"));
  REQUIRE(recs.size() == 1);
  REQUIRE(recs[0].name == "siponimod");
  DescriptorSet d = compute_descriptors(parse_smiles(recs[0].smiles));
  CHECK(d.mw == Approx(516.6).margin(0.5));
  CHECK(seconds_since(t0) < 1.0);
}

TEST_CASE("criterion 2: rule-of-five panel matches hand-derived counts") {
  // one entry per panel record, counted by hand from the four bounds
  const int expected[20] = {0, 0, 0, 0, 0, 2, 0, 1, 2, 1,
                            1, 0, 0, 0, 0, 1, 0, 3, 0, 0};
  auto recs = read_smi_file(fixture("panel20.smi"));
  REQUIRE(recs.size() == 20);
  for (size_t i = 0; i < recs.size(); ++i) {
    INFO(recs[i].name);
    DescriptorSet d = compute_descriptors(parse_smiles(recs[i].smiles));
    CHECK(lipinski(d).violations == expected[i]);
    if (recs[i].name == "siponimod") {
      RuleReport r = lipinski(d);
      CHECK_FALSE(r.rules[0].pass);  // over 500 Da
      CHECK_FALSE(r.rules[1].pass);  // the second failure is lipophilicity
      CHECK(r.rules[2].pass);
      CHECK(r.rules[3].pass);
      CHECK(r.violations == 2);
    }
  }
}

TEST_CASE("criterion 3: canonical form survives re-parsing and 100 random "
          "atom orderings per corpus molecule in under 30 s") {
  auto t0 = Clock::now();
  auto recs = read_smi_file(fixture("corpus1000.smi"));
  REQUIRE(recs.size() == 1000);

  std::mt19937 rng(20260818);
  size_t parse_failures = 0, roundtrip_failures = 0, perm_failures = 0;
  for (const auto& rec : recs) {
    Molecule m;
    try {
      m = parse_smiles(rec.smiles);  // the parser enforces the valence table
    } catch (const Error&) {
      ++parse_failures;
      continue;
    }
    std::string ref = canonical_smiles(m);
    Molecule back = parse_smiles(ref);
    int h_before = 0, h_after = 0;
    for (int i = 0; i < m.atom_count(); ++i) h_before += m.atom(i).implicit_h;
    for (int i = 0; i < back.atom_count(); ++i)
      h_after += back.atom(i).implicit_h;
    if (canonical_smiles(back) != ref || back.atom_count() != m.atom_count() ||
        back.bond_count() != m.bond_count() || h_before != h_after)
      ++roundtrip_failures;

    std::vector<int> perm(static_cast<size_t>(m.atom_count()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (canonical_smiles(m.reordered(perm)) != ref) ++perm_failures;
    }
  }
  CHECK(parse_failures == 0);
  CHECK(roundtrip_failures == 0);
  CHECK(perm_failures == 0);
  CHECK(seconds_since(t0) < 30.0);
}

TEST_CASE("criterion 4: similarity properties hold and corpus fingerprints "
          "are byte-identical to the frozen digest") {
  auto recs = read_smi_file(fixture("corpus1000.smi"));
  REQUIRE(recs.size() == 1000);

  std::vector<Fingerprint> fps;
  fps.reserve(recs.size());
  uint64_t digest = 14695981039346656037ULL;
  size_t self_failures = 0;
  for (const auto& rec : recs) {
    fps.push_back(fingerprint(parse_smiles(rec.smiles), 2, 2048));
    for (char c : fps.back().hex()) {
      digest ^= static_cast<unsigned char>(c);
      digest *= 1099511628211ULL;
    }
    if (tanimoto(fps.back(), fps.back()) != 1.0) ++self_failures;
  }
  CHECK(self_failures == 0);
  // frozen when the fixture corpus was committed; every platform and every
  // rebuild must reproduce the exact same bits
  CHECK(digest == 0xc1b968085f523e5aULL);

  std::mt19937 rng(920);
  size_t pair_failures = 0;
  for (int k = 0; k < 20000; ++k) {
    const Fingerprint& a = fps[rng() % fps.size()];
    const Fingerprint& b = fps[rng() % fps.size()];
    double t = tanimoto(a, b);
    if (t != tanimoto(b, a) || t < 0.0 || t > 1.0) ++pair_failures;
  }
  CHECK(pair_failures == 0);
}

TEST_CASE("criterion 5: charges conserve, agree across symmetric atoms, and "
          "match the recurrence oracle") {
  // orbits listed by inspection of each structure; indices cover the charge
  // vector layout (graph atoms first, then hydrogens grouped by parent)
  struct OrbitFixture {
    const char* smiles;
    double total;
    std::vector<std::vector<int>> orbits;
  };
  const OrbitFixture fixtures[] = {
      {"C", 0.0, {{1, 2, 3, 4}}},
      {"O", 0.0, {{1, 2}}},
      {"CCO", 0.0, {{3, 4, 5}, {6, 7}}},
      {"[NH4+]", 1.0, {{1, 2, 3, 4}}},
      {"CC(=O)O", 0.0, {{4, 5, 6}}},
      {"CC(=O)[O-]", -1.0, {{4, 5, 6}}},
      {"c1ccccc1", 0.0, {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}}},
      {"C1CCCCC1",
       0.0,
       {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}}},
      {"CC(C)(C)C",
       0.0,
       {{0, 2, 3, 4}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}}},
      {"C[N+](C)(C)C",
       1.0,
       {{0, 2, 3, 4}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}}},
      {"Clc1ccc(Cl)cc1",
       0.0,
       {{0, 5}, {1, 4}, {2, 3, 6, 7}, {8, 9, 10, 11}}},
  };
  for (const OrbitFixture& f : fixtures) {
    INFO(f.smiles);
    ChargeAssignment c = gasteiger_charges(parse_smiles(f.smiles));
    double sum = std::accumulate(c.charges.begin(), c.charges.end(), 0.0);
    CHECK(std::abs(sum - f.total) < 1e-6);
    for (const auto& orbit : f.orbits)
      for (size_t k = 1; k < orbit.size(); ++k)
        CHECK(c.charges[static_cast<size_t>(orbit[k])] ==
              Approx(c.charges[static_cast<size_t>(orbit[0])]).margin(1e-9));
  }

  // frozen outputs of tests/fixtures/gasteiger_oracle.py; the sign of every
  // atom and the value itself must both agree
  const std::vector<double> methane = {-0.0775667513, 0.0193916878,
                                       0.0193916878, 0.0193916878,
                                       0.0193916878};
  const std::vector<double> ethanol = {
      -0.0418346803, 0.0404943859, -0.3963360656,
      0.0253236316,  0.0253236316, 0.0253236316,
      0.0559166929,  0.0559166929, 0.2098720796};
  struct SignFixture {
    const char* smiles;
    const std::vector<double>& want;
  };
  for (const SignFixture& f :
       {SignFixture{"C", methane}, SignFixture{"CCO", ethanol}}) {
    INFO(f.smiles);
    ChargeAssignment c = gasteiger_charges(parse_smiles(f.smiles));
    REQUIRE(c.charges.size() == f.want.size());
    for (size_t i = 0; i < f.want.size(); ++i) {
      CHECK((c.charges[i] > 0.0) == (f.want[i] > 0.0));
      CHECK(c.charges[i] == Approx(f.want[i]).margin(1e-8));
    }
  }
}

TEST_CASE("criterion 6: contact search equals the all-pairs oracle on 50 "
          "random geometries and grows with the threshold") {
  auto rec_atom = [](const std::string& element, const std::string& name,
                     double x, double y, double z, int seq, char code) {
    StructureAtom a;
    a.element = element;
    a.name = name;
    a.x = x;
    a.y = y;
    a.z = z;
    a.residue_seq = seq;
    a.residue_code = code;
    a.residue_name = "UNK";
    a.chain = 'A';
    return a;
  };
  // same squared-distance cut and sort key, no spatial index
  auto brute = [](const ProteinStructure& receptor, const DockedPose& pose,
                  double threshold) {
    std::vector<Contact> out;
    const double t2 = threshold * threshold;
    for (size_t j = 0; j < pose.ligand_atoms.size(); ++j) {
      const PoseAtom& la = pose.ligand_atoms[j];
      if (!polar_element(la.element)) continue;
      for (const StructureAtom& ra : receptor.atoms) {
        if (!polar_element(ra.element)) continue;
        double dx = ra.x - la.x, dy = ra.y - la.y, dz = ra.z - la.z;
        double d2 = dx * dx + dy * dy + dz * dz;
        if (d2 > t2) continue;
        Contact c;
        c.residue_seq = ra.residue_seq;
        c.residue_label = std::to_string(ra.residue_seq) + "-" +
                          std::string(1, ra.residue_code);
        c.residue_atom = ra.name;
        c.ligand_atom_index = static_cast<int>(j);
        c.distance = std::sqrt(d2);
        out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end(), [](const Contact& a, const Contact& b) {
      return std::tie(a.residue_seq, a.distance, a.residue_atom,
                      a.ligand_atom_index) <
             std::tie(b.residue_seq, b.distance, b.residue_atom,
                      b.ligand_atom_index);
    });
    return out;
  };
  auto key_counts = [](const std::vector<Contact>& cs) {
    std::map<std::tuple<int, std::string, int>, int> m;
    for (const Contact& c : cs)
      ++m[{c.residue_seq, c.residue_atom, c.ligand_atom_index}];
    return m;
  };

  std::mt19937 rng(777);
  std::uniform_real_distribution<double> coord(-12.0, 28.0);
  const char* elems[] = {"C", "N", "O", "S", "H"};
  const double thresholds[] = {3.0, 4.0, 5.0, 6.0};
  size_t mismatch = 0, shrank = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<StructureAtom> ratoms;
    for (int i = 0; i < 150; ++i)
      ratoms.push_back(rec_atom(elems[rng() % 5], "A" + std::to_string(i),
                                coord(rng), coord(rng), coord(rng),
                                static_cast<int>(rng() % 30) + 1,
                                static_cast<char>('A' + rng() % 26)));
    ProteinStructure receptor;
    receptor.atoms = std::move(ratoms);
    receptor.regroup();
    DockedPose pose;
    for (int j = 0; j < 40; ++j)
      pose.ligand_atoms.push_back(
          PoseAtom{elems[rng() % 5], coord(rng), coord(rng), coord(rng)});

    std::vector<Contact> prev;
    for (double t : thresholds) {
      auto fast = polar_contacts(receptor, pose, t);
      if (fast != brute(receptor, pose, t)) ++mismatch;
      if (!prev.empty()) {
        auto small = key_counts(prev), big = key_counts(fast);
        for (const auto& [k, n] : small)
          if (big[k] < n) ++shrank;
        if (fast.size() < prev.size()) ++shrank;
      }
      prev = std::move(fast);
    }
  }
  CHECK(mismatch == 0);
  CHECK(shrank == 0);
}

TEST_CASE("criterion 7: 40-ligand screen reproduces the independent tally "
          "and its report bytes in under 10 s") {
  auto t0 = Clock::now();
  TempDir run_a, run_b;
  PipelineConfig cfg;
  cfg.seed_smiles =
      "CCC1=CC(=CC=C1CN2CC(C2)CC(=O)O)"
      "C(=NOCC3=CC=CC(=C3)C(F)(F)F)C4CCCCC4";
  cfg.generated_set_path = fixture("screen/ligands40.smi");
  cfg.poses_dir = fixture("screen/poses");
  cfg.receptor_path = fixture("receptor_fragment.pdb");
  cfg.output_dir = run_a.path.string();
  ScreeningReport rep = cmd_screen(cfg);

  // tests/fixtures/screen/compute_expected.py re-derives every number below
  // from the raw fixture files by brute force
  std::ifstream in(fixture("screen/expected_screen.json"));
  REQUIRE(in.good());
  json e;
  in >> e;

  std::vector<std::string> high, leads;
  for (const LigandRow& row : rep.high_affinity) high.push_back(row.label);
  for (const LeadCandidate& l : rep.leads) leads.push_back(l.label);
  CHECK(high == e["high_affinity_labels"].get<std::vector<std::string>>());
  CHECK(leads == e["lead_labels"].get<std::vector<std::string>>());

  CHECK(rep.group_k == e["group_k"].get<int>());
  REQUIRE(rep.group_comparison.size() == e["group_comparison"].size());
  for (const GroupComparison& g : rep.group_comparison) {
    INFO(g.metric);
    const json& want = e["group_comparison"][g.metric];
    CHECK(g.mean_a == Approx(want["mean_top"].get<double>()).margin(1e-12));
    CHECK(g.mean_b == Approx(want["mean_bottom"].get<double>()).margin(1e-12));
    CHECK(g.count_a == want["count_top"].get<int>());
    CHECK(g.count_b == want["count_bottom"].get<int>());
  }

  REQUIRE(rep.correlations.size() == e["correlations"].size());
  for (const CorrelationRow& c : rep.correlations) {
    INFO(c.property);
    REQUIRE(c.r.has_value());
    CHECK(*c.r ==
          Approx(e["correlations"][c.property].get<double>()).margin(1e-9));
  }

  const json& freq = e["contact_frequencies"];
  REQUIRE(rep.contact_frequencies.rows.size() == freq.size());
  for (size_t i = 0; i < freq.size(); ++i) {
    CHECK(rep.contact_frequencies.rows[i].residue_label ==
          freq[i]["residue_label"].get<std::string>());
    CHECK(rep.contact_frequencies.rows[i].count == freq[i]["count"].get<int>());
  }

  REQUIRE(rep.docked.size() == 40);
  CHECK(rep.errors.empty());
  for (const LigandRow& row : rep.docked) {
    INFO(row.label);
    const json& want = e["per_ligand"][row.label];
    CHECK(row.energy == want["energy"].get<double>());
    CHECK(row.pose_rank == want["pose_rank"].get<int>());
  }

  cfg.output_dir = run_b.path.string();
  cfg.jobs = 3;  // execution detail, must not change the bytes
  cmd_screen(cfg);
  CHECK(slurp(run_a.path / "report.json") == slurp(run_b.path / "report.json"));
  CHECK(slurp(run_a.path / "poses.csv") == slurp(run_b.path / "poses.csv"));
  CHECK(seconds_since(t0) < 10.0);
}

TEST_CASE("criterion 8: corpus-scale reference values are documented as not "
          "reproducible from the shipped fixtures") {
  // those values depend on generated-ligand sets and docking outputs that are
  // not distributable; the suites above cover the procedures instead, and the
  // README has to say so out loud
  std::string readme = slurp(repo_root() / "README.md");
  CHECK(readme.find("## Reproducibility") != std::string::npos);
  CHECK(readme.find("not reproducible") != std::string::npos);
}

TEST_CASE("data tables: embedded copies match the shipped files and the "
          "manifest checksums") {
  struct Row {
    const char* file;
    const char* text;
  };
  const Row rows[] = {
      {"crippen.txt", tables::crippen_text},
      {"tpsa.txt", tables::tpsa_text},
      {"atomic_weights.txt", tables::atomic_weights_text},
      {"qed_ads.txt", tables::qed_ads_text},
      {"alerts.txt", tables::alerts_text},
      {"sas_fragments.txt", tables::sas_fragments_text},
  };

  std::map<std::string, std::pair<uint64_t, size_t>> manifest;
  std::istringstream mf(slurp(repo_root() / "data" / "MANIFEST"));
  std::string line;
  while (std::getline(mf, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string hash, name;
    size_t bytes = 0;
    row >> hash >> bytes >> name;
    manifest[name] = {std::stoull(hash, nullptr, 16), bytes};
  }
  CHECK(manifest.size() == std::size(rows));

  for (const Row& r : rows) {
    INFO(r.file);
    std::string on_disk = slurp(repo_root() / "data" / r.file);
    CHECK(on_disk == r.text);
    REQUIRE(manifest.count(r.file) == 1);
    CHECK(fnv1a64(on_disk) == manifest[r.file].first);
    CHECK(on_disk.size() == manifest[r.file].second);
  }
}
