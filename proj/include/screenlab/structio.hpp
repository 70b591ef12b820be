#pragma once

// Receptor structures (PDB fixed-column format) and docking pose outputs
// (multi-MODEL PDBQT-style text). Parsers are stateless; the parsed types
// are plain data and safe to share across threads.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace screenlab {

struct StructureAtom {
  std::string element;
  std::string name;
  double x = 0, y = 0, z = 0;
  int residue_seq = 0;
  std::string residue_name;  // three-letter
  char residue_code = 'X';   // one-letter
  char chain = ' ';
  bool hetero = false;
};

struct ProteinStructure {
  std::vector<StructureAtom> atoms;
  // residue key (chain, residue_seq) -> indices into atoms
  std::map<std::pair<char, int>, std::vector<int>> residues;

  void regroup() {
    residues.clear();
    for (std::size_t i = 0; i < atoms.size(); ++i)
      residues[{atoms[i].chain, atoms[i].residue_seq}].push_back(
          static_cast<int>(i));
  }
};

struct PoseAtom {
  std::string element;
  double x = 0, y = 0, z = 0;
  double partial_charge = 0;
};

struct DockedPose {
  std::vector<PoseAtom> ligand_atoms;
  double binding_energy = 0;
  int pose_rank = 0;
  std::string source_ligand;
};

inline char residue_one_letter(std::string_view three) {
  static const std::map<std::string_view, char> codes = {
      {"ALA", 'A'}, {"ARG", 'R'}, {"ASN", 'N'}, {"ASP", 'D'}, {"CYS", 'C'},
      {"GLN", 'Q'}, {"GLU", 'E'}, {"GLY", 'G'}, {"HIS", 'H'}, {"ILE", 'I'},
      {"LEU", 'L'}, {"LYS", 'K'}, {"MET", 'M'}, {"PHE", 'F'}, {"PRO", 'P'},
      {"SER", 'S'}, {"THR", 'T'}, {"TRP", 'W'}, {"TYR", 'Y'}, {"VAL", 'V'}};
  auto it = codes.find(three);
  return it == codes.end() ? 'X' : it->second;
}

inline bool is_water_residue(std::string_view name) {
  return name == "HOH" || name == "WAT" || name == "DOD";
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// 1-indexed inclusive column range, padded with spaces past end of line
inline std::string_view cols(const std::string& line, std::size_t from,
                             std::size_t to) {
  if (line.size() < from) return {};
  return std::string_view(line).substr(from - 1,
                                       std::min(to, line.size()) - from + 1);
}

inline bool parse_double(std::string_view s, double& out) {
  std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

inline bool parse_int(std::string_view s, int& out) {
  std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  long v = std::strtol(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) return false;
  out = static_cast<int>(v);
  return true;
}

// element from the atom name when columns 77-78 are blank: first letter
inline std::string element_from_name(const std::string& name) {
  for (char c : name)
    if (std::isalpha(static_cast<unsigned char>(c)))
      return std::string(1, static_cast<char>(std::toupper(c)));
  return "";
}

inline std::vector<std::string> split_fields(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.emplace_back(s.substr(b, i - b));
  }
  return out;
}

}  // namespace detail

struct PdbOptions {
  bool drop_hetero = false;
  bool drop_water = false;
};

inline ProteinStructure parse_pdb(const std::string& text,
                                  const PdbOptions& opt = {}) {
  ProteinStructure s;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(
        pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    bool atom_rec = line.rfind("ATOM  ", 0) == 0;
    bool het_rec = line.rfind("HETATM", 0) == 0;
    if (!atom_rec && !het_rec) continue;
    if (line.size() < 54)
      throw MalformedRecord("atom record shorter than coordinate block",
                            lineno);

    StructureAtom a;
    a.hetero = het_rec;
    a.name = detail::trim(detail::cols(line, 13, 16));
    a.residue_name = detail::trim(detail::cols(line, 18, 20));
    auto chain_field = detail::cols(line, 22, 22);
    a.chain = chain_field.empty() ? ' ' : chain_field[0];
    if (!detail::parse_int(detail::cols(line, 23, 26), a.residue_seq))
      throw MalformedRecord("unparseable residue sequence number", lineno);
    if (!detail::parse_double(detail::cols(line, 31, 38), a.x) ||
        !detail::parse_double(detail::cols(line, 39, 46), a.y) ||
        !detail::parse_double(detail::cols(line, 47, 54), a.z))
      throw MalformedRecord("unparseable coordinates", lineno);
    a.element = detail::trim(detail::cols(line, 77, 78));
    if (a.element.empty()) a.element = detail::element_from_name(a.name);
    a.residue_code = residue_one_letter(a.residue_name);

    if (opt.drop_hetero && a.hetero) continue;
    if (opt.drop_water && is_water_residue(a.residue_name)) continue;
    s.atoms.push_back(std::move(a));
  }
  if (s.atoms.empty()) throw EmptyStructure("no atoms after parsing");
  s.regroup();
  return s;
}

inline std::string write_pdb(const ProteinStructure& s) {
  std::string out;
  char buf[96];
  int serial = 0;
  for (const StructureAtom& a : s.atoms) {
    ++serial;
    std::string name = a.name;
    if (name.size() < 4) name = " " + name;
    std::snprintf(buf, sizeof buf,
                  "%-6s%5d %-4s %-3s %c%4d    %8.3f%8.3f%8.3f  1.00  0.00          %2s\n",
                  a.hetero ? "HETATM" : "ATOM", serial, name.c_str(),
                  a.residue_name.c_str(), a.chain, a.residue_seq, a.x, a.y,
                  a.z, a.element.c_str());
    out += buf;
  }
  out += "END\n";
  return out;
}

// receptor cleaning: keep ATOM records of one chain, drop HETATM and waters
inline ProteinStructure clean_receptor(const ProteinStructure& s, char chain) {
  ProteinStructure out;
  for (const StructureAtom& a : s.atoms) {
    if (a.hetero || a.chain != chain || is_water_residue(a.residue_name))
      continue;
    out.atoms.push_back(a);
  }
  if (out.atoms.empty())
    throw EmptyStructure(std::string("no ATOM records on chain ") + chain);
  out.regroup();
  return out;
}

namespace detail {

// AutoDock atom types that differ from plain element symbols
inline std::string element_from_ad4(const std::string& type) {
  if (type == "A") return "C";
  if (type == "OA") return "O";
  if (type == "NA") return "N";
  if (type == "SA") return "S";
  if (type == "HD") return "H";
  if (!type.empty() && std::isalpha(static_cast<unsigned char>(type[0]))) {
    if (type.size() >= 2 && std::islower(static_cast<unsigned char>(type[1])))
      return type.substr(0, 2);
    return type.substr(0, 1);
  }
  return "";
}

}  // namespace detail

inline std::vector<DockedPose> parse_vina_poses(const std::string& text) {
  std::vector<DockedPose> poses;
  DockedPose cur;
  bool in_model = false, have_energy = false;
  std::size_t lineno = 0, model_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(
        pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (line.rfind("MODEL", 0) == 0) {
      if (in_model)
        throw TruncatedModel("MODEL at line " + std::to_string(lineno) +
                             " starts before previous ENDMDL");
      in_model = true;
      have_energy = false;
      model_line = lineno;
      cur = DockedPose{};
      cur.pose_rank = static_cast<int>(poses.size()) + 1;
      continue;
    }
    if (line.rfind("ENDMDL", 0) == 0) {
      if (!in_model)
        throw TruncatedModel("ENDMDL without MODEL at line " +
                             std::to_string(lineno));
      if (!have_energy)
        throw MissingEnergyRemark("model starting at line " +
                                  std::to_string(model_line));
      poses.push_back(std::move(cur));
      in_model = false;
      continue;
    }
    if (!in_model) continue;

    if (line.rfind("REMARK", 0) == 0) {
      // result remarks vary in spacing; match the keyword, then take the
      // first three numeric fields (energy, rmsd lower, rmsd upper)
      if (!have_energy && line.find("RESULT") != std::string::npos) {
        std::vector<double> nums;
        for (const std::string& f : detail::split_fields(line)) {
          double v;
          if (detail::parse_double(f, v)) nums.push_back(v);
          if (nums.size() == 3) break;
        }
        if (nums.size() == 3) {
          cur.binding_energy = nums[0];
          have_energy = true;
        }
      }
      continue;
    }
    if (line.rfind("ATOM  ", 0) == 0 || line.rfind("HETATM", 0) == 0) {
      if (line.size() < 54)
        throw TruncatedModel("atom record shorter than coordinate block at line " +
                             std::to_string(lineno));
      PoseAtom a;
      if (!detail::parse_double(detail::cols(line, 31, 38), a.x) ||
          !detail::parse_double(detail::cols(line, 39, 46), a.y) ||
          !detail::parse_double(detail::cols(line, 47, 54), a.z))
        throw TruncatedModel("unparseable coordinates at line " +
                             std::to_string(lineno));
      // tail past the coordinates: occupancy, tempFactor, charge, AD4 type
      auto tail = detail::split_fields(std::string_view(line).substr(54));
      std::string type;
      if (tail.size() >= 4) {
        double q;
        if (detail::parse_double(tail[tail.size() - 2], q))
          a.partial_charge = q;
        type = tail.back();
      } else if (!tail.empty()) {
        type = tail.back();
      }
      a.element = detail::element_from_ad4(type);
      if (a.element.empty())
        a.element = detail::element_from_name(
            std::string(detail::cols(line, 13, 16)));
      cur.ligand_atoms.push_back(std::move(a));
    }
  }
  if (in_model)
    throw TruncatedModel("MODEL starting at line " +
                         std::to_string(model_line) + " has no ENDMDL");
  if (poses.empty()) throw TruncatedModel("no MODEL blocks found");
  return poses;
}

inline const DockedPose& best_pose(const std::vector<DockedPose>& poses) {
  if (poses.empty()) throw EmptyInput("no poses");
  const DockedPose* best = &poses[0];
  for (const DockedPose& p : poses)
    if (p.binding_energy < best->binding_energy ||
        (p.binding_energy == best->binding_energy &&
         p.pose_rank < best->pose_rank))
      best = &p;
  return *best;
}

}  // namespace screenlab
