#pragma once

// Distance-based polar contacts between receptor residues and docked
// ligand poses. Polar-capable means element N or O on either side; the
// comparison is inclusive (distance <= threshold) and done on squared
// distances so the grid search and any all-pairs check agree bit-for-bit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "structio.hpp"

namespace screenlab {

struct Contact {
  std::string residue_label;  // "<seq>-<one-letter>", e.g. "105-S"
  std::string residue_atom;
  int residue_seq = 0;
  int ligand_atom_index = -1;
  double distance = 0;

  friend bool operator==(const Contact& a, const Contact& b) {
    return a.residue_label == b.residue_label &&
           a.residue_atom == b.residue_atom &&
           a.residue_seq == b.residue_seq &&
           a.ligand_atom_index == b.ligand_atom_index &&
           a.distance == b.distance;
  }
};

struct ResidueFrequency {
  std::string residue_label;
  int residue_seq = 0;
  int count = 0;
};

struct ContactFrequencyTable {
  // ordered by descending count, then ascending residue_seq
  std::vector<ResidueFrequency> rows;
  int total_ligands = 0;
};

inline bool polar_element(const std::string& e) {
  return e == "N" || e == "O";
}

namespace detail {

inline std::int64_t grid_cell(double v, double cell) {
  return static_cast<std::int64_t>(std::floor(v / cell));
}

inline std::uint64_t grid_key(std::int64_t ix, std::int64_t iy,
                              std::int64_t iz) {
  constexpr std::int64_t kBias = 1 << 20;
  return (static_cast<std::uint64_t>(ix + kBias) << 42) |
         (static_cast<std::uint64_t>(iy + kBias) << 21) |
         static_cast<std::uint64_t>(iz + kBias);
}

}  // namespace detail

inline std::vector<Contact> polar_contacts(const ProteinStructure& receptor,
                                           const DockedPose& pose,
                                           double threshold = 5.0) {
  if (!(threshold > 0))
    throw InputError("contact threshold must be positive");

  std::vector<int> rec_polar;
  for (std::size_t i = 0; i < receptor.atoms.size(); ++i)
    if (polar_element(receptor.atoms[i].element))
      rec_polar.push_back(static_cast<int>(i));

  // uniform grid, one cell per threshold cube, 27-cell neighbourhood scan
  std::unordered_map<std::uint64_t, std::vector<int>> grid;
  grid.reserve(rec_polar.size() * 2);
  for (int i : rec_polar) {
    const StructureAtom& a = receptor.atoms[i];
    grid[detail::grid_key(detail::grid_cell(a.x, threshold),
                          detail::grid_cell(a.y, threshold),
                          detail::grid_cell(a.z, threshold))]
        .push_back(i);
  }

  const double t2 = threshold * threshold;
  std::vector<Contact> out;
  for (std::size_t j = 0; j < pose.ligand_atoms.size(); ++j) {
    const PoseAtom& la = pose.ligand_atoms[j];
    if (!polar_element(la.element)) continue;
    std::int64_t cx = detail::grid_cell(la.x, threshold);
    std::int64_t cy = detail::grid_cell(la.y, threshold);
    std::int64_t cz = detail::grid_cell(la.z, threshold);
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          auto it = grid.find(detail::grid_key(cx + dx, cy + dy, cz + dz));
          if (it == grid.end()) continue;
          for (int i : it->second) {
            const StructureAtom& ra = receptor.atoms[i];
            double ddx = ra.x - la.x, ddy = ra.y - la.y, ddz = ra.z - la.z;
            double d2 = ddx * ddx + ddy * ddy + ddz * ddz;
            if (d2 > t2) continue;
            Contact c;
            c.residue_seq = ra.residue_seq;
            c.residue_label = std::to_string(ra.residue_seq) + "-" +
                              std::string(1, ra.residue_code);
            c.residue_atom = ra.name;
            c.ligand_atom_index = static_cast<int>(j);
            c.distance = std::sqrt(d2);
            out.push_back(std::move(c));
          }
        }
  }
  std::sort(out.begin(), out.end(), [](const Contact& a, const Contact& b) {
    return std::tie(a.residue_seq, a.distance, a.residue_atom,
                    a.ligand_atom_index) <
           std::tie(b.residue_seq, b.distance, b.residue_atom,
                    b.ligand_atom_index);
  });
  return out;
}

inline ContactFrequencyTable contact_frequencies(
    const std::vector<std::vector<Contact>>& per_ligand) {
  if (per_ligand.empty()) throw EmptyInput("no ligand contact lists");
  std::map<std::pair<int, std::string>, int> counts;
  for (const auto& contacts : per_ligand) {
    std::set<std::pair<int, std::string>> seen;
    for (const Contact& c : contacts)
      seen.insert({c.residue_seq, c.residue_label});
    for (const auto& key : seen) ++counts[key];
  }
  ContactFrequencyTable table;
  table.total_ligands = static_cast<int>(per_ligand.size());
  for (const auto& [key, n] : counts)
    table.rows.push_back({key.second, key.first, n});
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ResidueFrequency& a, const ResidueFrequency& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.residue_seq != b.residue_seq)
                return a.residue_seq < b.residue_seq;
              return a.residue_label < b.residue_label;
            });
  return table;
}

}  // namespace screenlab
