// screenlab command line. Subcommands wrap the pipeline cores one to one;
// everything interesting lives in the headers so it stays testable.
//
// Exit codes: 0 success, 1 usage error, 2 bad input, 3 internal failure.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include <screenlab/pipeline.hpp>

namespace {

void print_parse_outcome(const char* verb, const screenlab::ParseOutcome& out) {
  for (const auto& [line, msg] : out.failures)
    std::fprintf(stderr, "line %zu skipped: %s\n", line, msg.c_str());
  std::fprintf(stderr, "%s %d of %d records (%d skipped)\n", verb, out.parsed,
               out.total, out.skipped);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ligand screening toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, seed, set_path, report_path;
  std::string receptor_path, pose_path, scores_path, config_path;
  double percentile_rank = 99.0;
  double contact_angstrom = 5.0;
  int fp_radius = 2, fp_bits = 2048, jobs = 0;
  std::string chain = "A";

  auto* parse_cmd = app.add_subcommand("parse", "canonicalize a .smi file");
  parse_cmd->add_option("input", in_path, "input .smi")->required();
  parse_cmd->add_option("--out", out_path, "output .smi")->required();
  parse_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* desc_cmd =
      app.add_subcommand("descriptors", "descriptor table for a .smi file");
  desc_cmd->add_option("input", in_path, "input .smi")->required();
  desc_cmd->add_option("--out", out_path, "output CSV")->required();
  desc_cmd->add_option("--sas-scores", scores_path,
                       "fragment score table (default: bundled)");
  desc_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* sim_cmd = app.add_subcommand(
      "similarity", "similarity of a set to a seed, finetune subset selection");
  sim_cmd->add_option("seed", seed, "seed SMILES")->required();
  sim_cmd->add_option("set", set_path, "set .smi")->required();
  sim_cmd->add_option("--percentile", percentile_rank, "cutoff percentile")
      ->check(CLI::Range(0.0, 100.0));
  sim_cmd->add_option("--fp-radius", fp_radius, "fingerprint radius")
      ->check(CLI::Range(0, 4));
  sim_cmd->add_option("--fp-bits", fp_bits, "fingerprint width")
      ->check(CLI::Range(256, 65536));
  sim_cmd->add_option("--out", out_path, "subset .smi")->required();
  sim_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* fit_cmd =
      app.add_subcommand("fit-sas", "fit fragment scores on a corpus");
  fit_cmd->add_option("corpus", in_path, "corpus .smi")->required();
  fit_cmd->add_option("--out", out_path, "score table file")->required();
  fit_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

  auto* screen_cmd =
      app.add_subcommand("screen", "full screen: poses to report.json");
  screen_cmd->add_option("config", config_path, "key=value config file")
      ->required();
  std::string ov_out;
  double ov_threshold = 0, ov_percentile = 0, ov_contact = 0;
  int ov_radius = 0, ov_bits = 0, ov_jobs = 0;
  auto* f_thresh = screen_cmd->add_option("--threshold-kcal", ov_threshold,
                                          "affinity cutoff (kcal/mol)");
  auto* f_pct = screen_cmd->add_option("--percentile", ov_percentile,
                                       "similarity percentile");
  f_pct->check(CLI::Range(0.0, 100.0));
  auto* f_contact = screen_cmd->add_option("--contact-angstrom", ov_contact,
                                           "polar contact threshold");
  auto* f_radius = screen_cmd->add_option("--fp-radius", ov_radius,
                                          "fingerprint radius");
  f_radius->check(CLI::Range(0, 4));
  auto* f_bits =
      screen_cmd->add_option("--fp-bits", ov_bits, "fingerprint width");
  f_bits->check(CLI::Range(256, 65536));
  auto* f_jobs =
      screen_cmd->add_option("--jobs", ov_jobs, "worker threads (0 = auto)");
  auto* f_out = screen_cmd->add_option("--out", ov_out, "output directory");

  auto* plot_cmd =
      app.add_subcommand("plotdata", "per-figure CSV/SVG tables from a report");
  plot_cmd->add_option("report", report_path, "report.json")->required();
  plot_cmd->add_option("--out", out_path, "output directory")->required();

  auto* contacts_cmd =
      app.add_subcommand("contacts", "polar contacts of a docked pose");
  contacts_cmd->add_option("receptor", receptor_path, "receptor PDB")
      ->required();
  contacts_cmd->add_option("pose", pose_path, "docked pose file")->required();
  contacts_cmd->add_option("--chain", chain, "receptor chain");
  contacts_cmd->add_option("--contact-angstrom", contact_angstrom,
                           "distance threshold");
  contacts_cmd->add_option("--out", out_path, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 has its own exit-code scheme; flatten usage errors to 1
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (parse_cmd->parsed()) {
      print_parse_outcome("canonicalized",
                          screenlab::cmd_parse(in_path, out_path, jobs));
    } else if (desc_cmd->parsed()) {
      print_parse_outcome(
          "profiled",
          screenlab::cmd_descriptors(in_path, out_path, scores_path, jobs));
    } else if (sim_cmd->parsed()) {
      auto out = screenlab::cmd_similarity(seed, set_path, percentile_rank,
                                           out_path, fp_radius, fp_bits, jobs);
      screenlab::json j{{"median", out.median},
                        {"cutoff", out.cutoff},
                        {"percentile", out.percentile_rank},
                        {"total", out.total},
                        {"parsed", out.parsed},
                        {"skipped", out.skipped},
                        {"kept", out.kept}};
      std::printf("%s\n", j.dump(2).c_str());
    } else if (fit_cmd->parsed()) {
      print_parse_outcome("fitted on",
                          screenlab::cmd_fit_sas(in_path, out_path, jobs));
    } else if (screen_cmd->parsed()) {
      screenlab::PipelineConfig cfg = screenlab::load_config_file(config_path);
      if (*f_thresh) cfg.affinity_threshold = ov_threshold;
      if (*f_pct) cfg.similarity_percentile = ov_percentile;
      if (*f_contact) cfg.contact_threshold = ov_contact;
      if (*f_radius) cfg.fp_radius = ov_radius;
      if (*f_bits) cfg.fp_width = ov_bits;
      if (*f_jobs) cfg.jobs = ov_jobs;
      if (*f_out) cfg.output_dir = ov_out;
      screenlab::ScreeningReport rep = screenlab::cmd_screen(cfg);
      std::fprintf(stderr,
                   "%d pose files: %zu docked, %zu errors, %zu high-affinity, "
                   "%zu leads\n",
                   rep.pose_file_count, rep.docked.size(), rep.errors.size(),
                   rep.high_affinity.size(), rep.leads.size());
    } else if (plot_cmd->parsed()) {
      screenlab::cmd_plotdata_file(report_path, out_path);
    } else if (contacts_cmd->parsed()) {
      if (chain.size() != 1)
        throw CLI::ValidationError("--chain", "needs a single character");
      auto contacts = screenlab::cmd_contacts(receptor_path, chain[0],
                                              pose_path, contact_angstrom,
                                              out_path);
      std::fprintf(stderr, "%zu contacts\n", contacts.size());
    }
  } catch (const CLI::Error& e) {
    // CLI11 has its own exit-code scheme; flatten usage errors to 1
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const screenlab::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 0;
}
