#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "screenlab/pipeline.hpp"

using namespace screenlab;
using Catch::Approx;
namespace fs = std::filesystem;

namespace {

std::string fixture_dir() {
  const char* dir = std::getenv("SCREENLAB_TEST_DIR");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/fixtures";
}

std::string fixture(const std::string& name) {
  return fixture_dir() + "/" + name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// fresh scratch directory per call, cleaned up on destruction
struct TempDir {
  fs::path path;
  TempDir() {
    static std::atomic<int> counter{0};
    path = fs::temp_directory_path() /
           ("screenlab_pipe_" + std::to_string(counter.fetch_add(1)) + "_" +
            std::to_string(static_cast<unsigned>(::getpid())));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& content) {
    fs::path p = path / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
};

PipelineConfig fixture_config(const std::string& out_dir) {
  PipelineConfig cfg;
  cfg.seed_smiles =
      "CCC1=CC(=CC=C1CN2CC(C2)CC(=O)O)"
      "C(=NOCC3=CC=CC(=C3)C(F)(F)F)C4CCCCC4";
  cfg.generated_set_path = fixture("screen/ligands40.smi");
  cfg.poses_dir = fixture("screen/poses");
  cfg.receptor_path = fixture("receptor_fragment.pdb");
  cfg.output_dir = out_dir;
  return cfg;
}

json expected() {
  std::ifstream in(fixture("screen/expected_screen.json"));
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("config file round trip") {
  std::istringstream in(
      "# screen settings\n"
      "seed_smiles = CCO\n"
      "\n"
      "generated_set = gen.smi\n"
      "training_set = train.smi\n"
      "poses_dir = poses\n"
      "receptor = rec.pdb\n"
      "fda_reference = fda.smi\n"
      "fragment_scores = frags.txt\n"
      "threshold_kcal = -9.25\n"
      "percentile = 95\n"
      "contact_angstrom = 4.5\n"
      "fp_radius = 3\n"
      "fp_bits = 4096\n"
      "jobs = 2\n"
      "receptor_chain = B\n"
      "out = results\n");
  PipelineConfig cfg = load_config(in);
  CHECK(cfg.seed_smiles == "CCO");
  CHECK(cfg.generated_set_path == "gen.smi");
  CHECK(cfg.training_set_path == "train.smi");
  CHECK(cfg.poses_dir == "poses");
  CHECK(cfg.receptor_path == "rec.pdb");
  CHECK(cfg.fda_reference_path == "fda.smi");
  CHECK(cfg.fragment_scores_path == "frags.txt");
  CHECK(cfg.affinity_threshold == Approx(-9.25));
  CHECK(cfg.similarity_percentile == Approx(95.0));
  CHECK(cfg.contact_threshold == Approx(4.5));
  CHECK(cfg.fp_radius == 3);
  CHECK(cfg.fp_width == 4096);
  CHECK(cfg.jobs == 2);
  CHECK(cfg.receptor_chain == 'B');
  CHECK(cfg.output_dir == "results");
}

TEST_CASE("config defaults mirror the stated constants") {
  std::istringstream in("seed_smiles = C\n");
  PipelineConfig cfg = load_config(in);
  CHECK(cfg.affinity_threshold == Approx(-10.6));
  CHECK(cfg.similarity_percentile == Approx(99.0));
  CHECK(cfg.contact_threshold == Approx(5.0));
  CHECK(cfg.fp_radius == 2);
  CHECK(cfg.fp_width == 2048);
}

TEST_CASE("config errors carry line numbers") {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_config(in);
  };
  CHECK_THROWS_AS(load("seed_smiles = C\nbogus_key = 1\n"), MalformedRecord);
  CHECK_THROWS_AS(load("threshold_kcal = notanumber\n"), MalformedRecord);
  CHECK_THROWS_AS(load("fp_bits = 2048.5\n"), MalformedRecord);
  CHECK_THROWS_AS(load("receptor_chain = AB\n"), MalformedRecord);
  CHECK_THROWS_AS(load("no equals sign here\n"), MalformedRecord);
  try {
    load("seed_smiles = C\n\n# comment\nbad line\n");
    FAIL("expected MalformedRecord");
  } catch (const MalformedRecord& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(load_config_file("/nonexistent/screen.cfg"), InputError);
}

TEST_CASE("atomic write leaves no temp file") {
  TempDir tmp;
  fs::path target = tmp.path / "out.txt";
  atomic_write_file(target, "hello\n");
  CHECK(slurp(target) == "hello\n");
  CHECK_FALSE(fs::exists(tmp.path / "out.txt.tmp"));
  atomic_write_file(target, "replaced\n");
  CHECK(slurp(target) == "replaced\n");
}

TEST_CASE("parallel for covers every index once") {
  for (int jobs : {0, 1, 2, 7}) {
    std::vector<std::atomic<int>> hits(101);
    for (auto& h : hits) h.store(0);
    detail::parallel_for(hits.size(), jobs, [&](size_t i) { ++hits[i]; });
    for (auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("parallel for propagates exceptions") {
  CHECK_THROWS_AS(detail::parallel_for(
                      50, 4,
                      [](size_t i) {
                        if (i == 23) throw InputError("boom");
                      }),
                  InputError);
}

TEST_CASE("parse command canonicalizes and skips bad lines") {
  TempDir tmp;
  std::string in = tmp.file("in.smi",
                            "OCC\tethanol\n"
                            "not$a$smiles\tbroken\n"
                            "C1CC1\n");
  std::string out = (tmp.path / "out.smi").string();
  ParseOutcome res = cmd_parse(in, out);
  CHECK(res.total == 3);
  CHECK(res.parsed == 2);
  CHECK(res.skipped == 1);
  REQUIRE(res.failures.size() == 1);
  CHECK(res.failures[0].first == 2);
  std::string text = slurp(out);
  CHECK(text == "CCO\tethanol\nC1CC1\tmol3\n");
}

TEST_CASE("descriptor command emits one row per parsed record") {
  TempDir tmp;
  std::string in = tmp.file("in.smi", "CCO\tethanol\nQQ\tbad\nCCCCCCCC\toctane\n");
  std::string out = (tmp.path / "desc.csv").string();
  ParseOutcome res = cmd_descriptors(in, out);
  CHECK(res.parsed == 2);
  CHECK(res.skipped == 1);
  std::istringstream lines(slurp(out));
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "label,mw,lp,tpsa,hbd,hba,aromatic_rings,carboxylic_acids,"
        "rotatable_bonds,alerts,lipinski_violations,qed,sas");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("fit-sas command output reloads") {
  TempDir tmp;
  std::string out = (tmp.path / "frags.txt").string();
  ParseOutcome res = cmd_fit_sas(fixture("corpus1000.smi"), out);
  CHECK(res.parsed == 1000);
  CHECK(res.skipped == 0);
  std::ifstream in(out);
  FragmentScores fs = load_fragment_scores(in);
  CHECK(fs.corpus_size == 1000);
  CHECK(fs.provenance == "corpus1000.smi");
  CHECK_FALSE(fs.contributions.empty());
}

TEST_CASE("fit-sas rejects a small corpus") {
  TempDir tmp;
  std::string in = tmp.file("tiny.smi", "C\nCC\nCCC\n");
  CHECK_THROWS_AS(cmd_fit_sas(in, (tmp.path / "o.txt").string()),
                  CorpusTooSmall);
}

TEST_CASE("similarity of a set containing only the seed") {
  TempDir tmp;
  std::string in = tmp.file("set.smi", "CCO\tseed_copy\n");
  std::string out = (tmp.path / "fine.smi").string();
  SimilarityOutcome res = cmd_similarity("CCO", in, 99.0, out);
  CHECK(res.median == 1.0);
  CHECK(res.cutoff == 1.0);
  CHECK(res.kept == 1);
  CHECK(slurp(out) == "CCO\tseed_copy\n");
}

TEST_CASE("similarity cutoff equals the nearest-rank percentile") {
  TempDir tmp;
  std::mt19937 rng(20260818);
  std::vector<std::string> pool = {"CCO",     "CCN",    "CCCC",  "c1ccccc1",
                                   "CC(C)O",  "CCOC",   "CC#N",  "CC(=O)O",
                                   "CCCCCCO", "c1ccncc1"};
  std::string body;
  for (int i = 0; i < 200; ++i)
    body += pool[rng() % pool.size()] + "\tm" + std::to_string(i) + "\n";
  std::string in = tmp.file("set.smi", body);
  for (double p : {50.0, 90.0, 99.0}) {
    SimilarityOutcome res =
        cmd_similarity("CCO", in, p, (tmp.path / "sub.smi").string());
    // brute-force oracle: recompute every similarity and sort
    Molecule seed = parse_smiles("CCO");
    Fingerprint seed_fp = fingerprint(seed);
    std::vector<double> sims;
    for (const SmiRecord& rec : read_smi_file(in))
      sims.push_back(tanimoto(seed_fp, fingerprint(parse_smiles(rec.smiles))));
    std::sort(sims.begin(), sims.end());
    size_t rank = static_cast<size_t>(
        std::ceil(p / 100.0 * static_cast<double>(sims.size())));
    double want = sims[std::max<size_t>(rank, 1) - 1];
    CHECK(res.cutoff == want);
    size_t kept = 0;
    for (double s : sims)
      if (s >= want) ++kept;
    CHECK(res.kept == static_cast<int>(kept));
  }
}

TEST_CASE("similarity rejects bad inputs") {
  TempDir tmp;
  std::string in = tmp.file("set.smi", "CCO\ta\n");
  std::string out = (tmp.path / "o.smi").string();
  CHECK_THROWS_AS(cmd_similarity("notasmiles$$", in, 99.0, out),
                  UnparseableSeed);
  CHECK_THROWS_AS(cmd_similarity("CCO", in, 101.0, out), InputError);
  std::string junk = tmp.file("junk.smi", "$$\n%%\n");
  CHECK_THROWS_AS(cmd_similarity("CCO", junk, 99.0, out), EmptyInput);
}

TEST_CASE("similarity counts skipped lines") {
  TempDir tmp;
  std::string in = tmp.file("set.smi", "CCO\ta\nbroken(\tb\nCC\tc\n");
  SimilarityOutcome res =
      cmd_similarity("CCO", in, 50.0, (tmp.path / "o.smi").string());
  CHECK(res.total == 3);
  CHECK(res.parsed == 2);
  CHECK(res.skipped == 1);
}

TEST_CASE("screen fixture matches the brute-force oracle") {
  TempDir tmp;
  ScreeningReport rep = cmd_screen(fixture_config(tmp.path.string()));
  json e = expected();

  std::vector<std::string> high;
  for (const LigandRow& row : rep.high_affinity) high.push_back(row.label);
  CHECK(high == e["high_affinity_labels"].get<std::vector<std::string>>());

  std::vector<std::string> leads;
  for (const LeadCandidate& l : rep.leads) leads.push_back(l.label);
  CHECK(leads == e["lead_labels"].get<std::vector<std::string>>());

  CHECK(rep.group_k == e["group_k"].get<int>());
  for (const GroupComparison& g : rep.group_comparison) {
    const json& want = e["group_comparison"][g.metric];
    CHECK(g.mean_a == Approx(want["mean_top"].get<double>()).margin(1e-12));
    CHECK(g.mean_b == Approx(want["mean_bottom"].get<double>()).margin(1e-12));
    CHECK(g.count_a == want["count_top"].get<int>());
    CHECK(g.count_b == want["count_bottom"].get<int>());
  }

  for (const CorrelationRow& c : rep.correlations) {
    REQUIRE(c.r.has_value());
    CHECK(*c.r ==
          Approx(e["correlations"][c.property].get<double>()).margin(1e-9));
    CHECK(c.n == 40);
  }

  const json& freq = e["contact_frequencies"];
  REQUIRE(rep.contact_frequencies.rows.size() == freq.size());
  for (size_t i = 0; i < freq.size(); ++i) {
    CHECK(rep.contact_frequencies.rows[i].residue_label ==
          freq[i]["residue_label"].get<std::string>());
    CHECK(rep.contact_frequencies.rows[i].count ==
          freq[i]["count"].get<int>());
  }
  CHECK(rep.contact_frequencies.total_ligands ==
        e["total_high_affinity"].get<int>());

  for (const LigandRow& row : rep.docked) {
    const json& want = e["per_ligand"][row.label];
    CHECK(row.energy == want["energy"].get<double>());
    CHECK(row.pose_rank == want["pose_rank"].get<int>());
  }
  CHECK(rep.docked.size() == 40);
  CHECK(rep.errors.empty());
}

TEST_CASE("screen includes the ligand sitting exactly on the threshold") {
  TempDir tmp;
  ScreeningReport rep = cmd_screen(fixture_config(tmp.path.string()));
  bool found = false;
  for (const LigandRow& row : rep.high_affinity)
    if (row.label == "lig14") {
      found = true;
      CHECK(row.energy == -10.6);
    }
  CHECK(found);
}

TEST_CASE("screen report bytes are identical across runs") {
  TempDir a, b;
  PipelineConfig cfg_a = fixture_config(a.path.string());
  PipelineConfig cfg_b = fixture_config(b.path.string());
  cfg_b.jobs = 3;  // execution detail, must not change the bytes
  cmd_screen(cfg_a);
  cmd_screen(cfg_b);
  CHECK(slurp(a.path / "report.json") == slurp(b.path / "report.json"));
  CHECK(slurp(a.path / "poses.csv") == slurp(b.path / "poses.csv"));
}

TEST_CASE("screen filter is sound for any threshold") {
  TempDir tmp;
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> pick(-12.6, -8.0);
  PipelineConfig cfg = fixture_config(tmp.path.string());
  for (int rep_i = 0; rep_i < 5; ++rep_i) {
    cfg.affinity_threshold = pick(rng);
    ScreeningReport rep = cmd_screen(cfg);
    size_t expected_rows = 0;
    for (const LigandRow& row : rep.docked) {
      if (row.energy <= cfg.affinity_threshold) ++expected_rows;
    }
    CHECK(rep.high_affinity.size() == expected_rows);
    for (const LigandRow& row : rep.high_affinity)
      CHECK(row.energy <= cfg.affinity_threshold);
    for (const LeadCandidate& lead : rep.leads) {
      bool in_high = false;
      for (const LigandRow& row : rep.high_affinity)
        if (row.label == lead.label) in_high = true;
      CHECK(in_high);
    }
  }
}

TEST_CASE("screen collects per-ligand failures instead of dropping them") {
  TempDir tmp;
  // two good ligands, one pose without a record, one corrupt pose file
  std::string smi = tmp.file("gen.smi", "CCO\tgood1\nCCC\tgood2\nCCN\tgood3\n");
  tmp.file("poses/good1.pdbqt",
           "MODEL 1\nREMARK VINA RESULT: -11.0 0 0\n"
           "ATOM      1  C1  LIG A   1      11.500  10.000  10.000  1.00  "
           "0.00     0.041 C \nENDMDL\n");
  tmp.file("poses/good2.pdbqt",
           "MODEL 1\nREMARK VINA RESULT: -9.0 0 0\n"
           "ATOM      1  C1  LIG A   1      11.500  10.000  10.000  1.00  "
           "0.00     0.041 C \nENDMDL\n");
  tmp.file("poses/orphan.pdbqt",
           "MODEL 1\nREMARK VINA RESULT: -8.0 0 0\n"
           "ATOM      1  C1  LIG A   1      11.500  10.000  10.000  1.00  "
           "0.00     0.041 C \nENDMDL\n");
  tmp.file("poses/good3.pdbqt", "MODEL 1\nno energy here\nENDMDL\n");

  PipelineConfig cfg;
  cfg.seed_smiles = "CCO";
  cfg.generated_set_path = smi;
  cfg.poses_dir = (tmp.path / "poses").string();
  cfg.receptor_path = fixture("receptor_fragment.pdb");
  cfg.output_dir = (tmp.path / "out").string();
  ScreeningReport rep = cmd_screen(cfg);

  CHECK(rep.pose_file_count == 4);
  CHECK(rep.docked.size() == 2);
  REQUIRE(rep.errors.size() == 2);
  CHECK(rep.errors[0].label == "good3");
  CHECK(rep.errors[1].label == "orphan");
  CHECK(static_cast<int>(rep.docked.size() + rep.errors.size()) ==
        rep.pose_file_count);
}

TEST_CASE("screen with an empty poses directory reports zero rows") {
  TempDir tmp;
  fs::create_directories(tmp.path / "poses");
  PipelineConfig cfg;
  cfg.seed_smiles = "CCO";
  cfg.generated_set_path = tmp.file("gen.smi", "CCO\ta\nCCC\tb\n");
  cfg.poses_dir = (tmp.path / "poses").string();
  cfg.receptor_path = fixture("receptor_fragment.pdb");
  cfg.output_dir = (tmp.path / "out").string();
  ScreeningReport rep = cmd_screen(cfg);
  CHECK(rep.pose_file_count == 0);
  CHECK(rep.docked.empty());
  CHECK(rep.high_affinity.empty());
  CHECK(rep.leads.empty());
  bool warned = false;
  for (const std::string& w : rep.warnings)
    if (w.find("no pose files") != std::string::npos) warned = true;
  CHECK(warned);
  CHECK(fs::exists(tmp.path / "out" / "report.json"));
}

TEST_CASE("screen rejects duplicate ligand labels") {
  TempDir tmp;
  PipelineConfig cfg;
  cfg.seed_smiles = "CCO";
  cfg.generated_set_path = tmp.file("gen.smi", "CCO\tdup\nCCC\tdup\n");
  cfg.poses_dir = (tmp.path / "poses").string();
  fs::create_directories(tmp.path / "poses");
  cfg.receptor_path = fixture("receptor_fragment.pdb");
  cfg.output_dir = (tmp.path / "out").string();
  CHECK_THROWS_AS(cmd_screen(cfg), InputError);
}

TEST_CASE("screen aborts on receptor problems") {
  TempDir tmp;
  PipelineConfig cfg;
  cfg.seed_smiles = "CCO";
  cfg.generated_set_path = tmp.file("gen.smi", "CCO\ta\n");
  cfg.poses_dir = (tmp.path / "poses").string();
  fs::create_directories(tmp.path / "poses");
  cfg.output_dir = (tmp.path / "out").string();

  cfg.receptor_path = "/nonexistent/receptor.pdb";
  CHECK_THROWS_AS(cmd_screen(cfg), InputError);

  cfg.receptor_path = fixture("receptor_fragment.pdb");
  cfg.receptor_chain = 'Z';
  CHECK_THROWS_AS(cmd_screen(cfg), EmptyStructure);

  cfg.receptor_chain = 'A';
  cfg.seed_smiles = "not a molecule";
  CHECK_THROWS_AS(cmd_screen(cfg), UnparseableSeed);
}

TEST_CASE("screen records the training set as the pre distribution") {
  TempDir tmp;
  PipelineConfig cfg = fixture_config(tmp.path.string());
  cfg.training_set_path = tmp.file("train.smi", "CCO\tt1\nc1ccccc1\tt2\n");
  ScreeningReport rep = cmd_screen(cfg);
  CHECK(rep.similarity.pre.size() == 2);
  CHECK(rep.similarity.post.size() == 40);
  json j = load_report(fs::path(tmp.path) / "report.json");
  CHECK(report_section(j, "similarity")["pre"].size() == 2);
}

TEST_CASE("screen reference set feeds the boxplot section") {
  TempDir tmp;
  PipelineConfig cfg = fixture_config(tmp.path.string());
  cfg.fda_reference_path =
      tmp.file("ref.smi", "CC(=O)Oc1ccccc1C(=O)O\taspirin\nbad(\tx\nCCO\te\n");
  ScreeningReport rep = cmd_screen(cfg);
  REQUIRE(rep.reference.has_value());
  CHECK(rep.reference->qed.size() == 2);
  CHECK(rep.reference->sas.size() == 2);
  CHECK(rep.reference->skipped_lines == 1);
}

TEST_CASE("written report loads back with every section") {
  TempDir tmp;
  cmd_screen(fixture_config(tmp.path.string()));
  json j = load_report(fs::path(tmp.path) / "report.json");
  CHECK(j["schema"] == "screenlab-report/1");
  for (const char* name :
       {"config", "similarity", "descriptor_stats", "docked", "high_affinity",
        "group_comparison", "correlations", "contact_frequencies", "leads",
        "errors", "warnings", "counts"})
    CHECK_NOTHROW(report_section(j, name));
  CHECK_THROWS_AS(report_section(j, "no_such_section"), MissingReportSection);
  CHECK(j["counts"]["pose_files"] == 40);
  CHECK(j["counts"]["docked"] == 40);
  CHECK(j["counts"]["errors"] == 0);
}

TEST_CASE("poses csv lists every docked ligand in label order") {
  TempDir tmp;
  cmd_screen(fixture_config(tmp.path.string()));
  std::istringstream in(slurp(fs::path(tmp.path) / "poses.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "ligand_label,best_energy_kcal_mol,pose_rank");
  std::vector<std::string> labels;
  while (std::getline(in, line))
    labels.push_back(line.substr(0, line.find(',')));
  CHECK(labels.size() == 40);
  CHECK(std::is_sorted(labels.begin(), labels.end()));
  CHECK(labels.front() == "lig01");
  CHECK(labels.back() == "lig40");
}

TEST_CASE("plotdata emits the per-figure tables") {
  TempDir tmp;
  cmd_screen(fixture_config(tmp.path.string()));
  fs::path plots = tmp.path / "plots";
  cmd_plotdata_file((fs::path(tmp.path) / "report.json").string(),
                    plots.string());
  for (const char* name : {"fig3a.csv", "fig3b.csv", "fig3c.csv", "fig4b.csv",
                           "fig4c.csv", "fig5a.csv", "fig5b.csv", "fig6a.csv",
                           "fig3a.svg", "fig4c.svg", "fig5a.svg", "fig5b.svg"})
    CHECK(fs::exists(plots / name));

  // fig4c: one row per high-affinity ligand, fixed column set
  std::istringstream fig4c(slurp(plots / "fig4c.csv"));
  std::string line;
  std::getline(fig4c, line);
  CHECK(line == "label,energy,lp,mw,tpsa,hbd,hba");
  int rows = 0;
  while (std::getline(fig4c, line)) ++rows;
  CHECK(rows == 14);

  // fig3c: six properties, each with a seed z-score cell
  std::istringstream fig3c(slurp(plots / "fig3c.csv"));
  std::getline(fig3c, line);
  CHECK(line == "property,mean,sd,seed_value,seed_zscore");
  int stat_rows = 0;
  while (std::getline(fig3c, line)) {
    ++stat_rows;
    CHECK(line.back() != ',');  // z-score present on the fixture
  }
  CHECK(stat_rows == 6);

  // fig3a: twenty bins covering [0,1], counts sum to the set size
  std::istringstream fig3a(slurp(plots / "fig3a.csv"));
  std::getline(fig3a, line);
  int bins = 0, total = 0;
  while (std::getline(fig3a, line)) {
    ++bins;
    total += std::stoi(line.substr(line.rfind(',') + 1));
  }
  CHECK(bins == 20);
  CHECK(total == 40);

  // fig6a mirrors the contact frequency table
  CHECK(slurp(plots / "fig6a.csv") ==
        "residue_label,count\n101-N,4\n105-S,4\n120-R,3\n129-S,3\n");
}

TEST_CASE("plotdata bytes are identical across runs") {
  TempDir tmp;
  cmd_screen(fixture_config(tmp.path.string()));
  std::string report = (fs::path(tmp.path) / "report.json").string();
  cmd_plotdata_file(report, (tmp.path / "p1").string());
  cmd_plotdata_file(report, (tmp.path / "p2").string());
  for (const char* name : {"fig3a.csv", "fig3b.csv", "fig3c.csv", "fig4b.csv",
                           "fig4c.csv", "fig5a.csv", "fig5b.csv", "fig6a.csv"})
    CHECK(slurp(tmp.path / "p1" / name) == slurp(tmp.path / "p2" / name));
}

TEST_CASE("plotdata requires the report sections it reads") {
  TempDir tmp;
  cmd_screen(fixture_config(tmp.path.string()));
  json j = load_report(fs::path(tmp.path) / "report.json");
  j.erase("similarity");
  CHECK_THROWS_AS(cmd_plotdata(j, (tmp.path / "p").string()),
                  MissingReportSection);
}

TEST_CASE("plotdata rejects foreign json") {
  TempDir tmp;
  std::string bogus = tmp.file("r.json", "{\"schema\": \"other/9\"}\n");
  CHECK_THROWS_AS(cmd_plotdata_file(bogus, (tmp.path / "p").string()),
                  InputError);
  std::string broken = tmp.file("b.json", "not json at all\n");
  CHECK_THROWS_AS(cmd_plotdata_file(broken, (tmp.path / "p").string()),
                  InputError);
}

TEST_CASE("contacts command writes the probe pose table") {
  TempDir tmp;
  std::string out = (tmp.path / "contacts.csv").string();
  std::vector<Contact> contacts = cmd_contacts(
      fixture("receptor_fragment.pdb"), 'A', fixture("pose_single.pdbqt"),
      5.0, out);
  REQUIRE(contacts.size() == 1);
  std::string text = slurp(out);
  CHECK(text ==
        "residue_label,residue_atom,ligand_atom_index,distance\n"
        "105-S,OG,1,3.2\n");
}
