#!/usr/bin/env python3
"""Builds the synthetic receptor fragment and pose fixtures.

The receptor is a hand-placed fragment using the binding-pocket residue
numbering of the S1PR1 structure (SER 105, GLY 106, ASN 101, ARG 120,
SER 129 on chain A), not real crystallographic coordinates. Geometry is
chosen so that exactly one polar pair sits inside the default 5 A cutoff:
SER 105 OG at (10, 10, 10) and the probe ligand N at (13.2, 10, 10),
3.2 A apart along x. Every other receptor N/O is kept > 5 A from every
ligand N/O.
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))


def pdb_line(record, serial, name, res, chain, seq, x, y, z, element):
    pname = name if len(name) >= 4 else " " + name
    return (f"{record:<6s}{serial:5d} {pname:<4s} {res:<3s} {chain}{seq:4d}"
            f"    {x:8.3f}{y:8.3f}{z:8.3f}  1.00  0.00          {element:>2s}\n")


RESIDUES = [
    # (resname, chain, seq, [(atom name, element, x, y, z), ...])
    ("ASN", "A", 101, [
        ("N",   "N", 2.0, 2.0, 2.0), ("CA", "C", 3.4, 2.2, 2.3),
        ("C",   "C", 4.2, 3.0, 1.3), ("O",  "O", 5.2, 3.7, 1.6),
        ("CB",  "C", 4.0, 0.9, 2.9), ("CG", "C", 5.2, 0.3, 2.2),
        ("OD1", "O", 6.0, 1.0, 1.6), ("ND2", "N", 5.4, -1.0, 2.3)]),
    ("SER", "A", 105, [
        ("N",  "N", 6.0, 9.0, 9.5), ("CA", "C", 7.4, 9.3, 9.8),
        ("C",  "C", 7.8, 10.6, 10.4), ("O", "O", 7.3, 11.6, 10.2),
        ("CB", "C", 8.6, 8.9, 9.4), ("OG", "O", 10.0, 10.0, 10.0)]),
    ("GLY", "A", 106, [
        ("N",  "N", 7.0, 11.5, 11.0), ("CA", "C", 6.6, 12.8, 11.5),
        ("C",  "C", 5.6, 13.0, 12.6), ("O",  "O", 5.0, 14.1, 12.7)]),
    ("ARG", "A", 120, [
        ("N",   "N", 16.0, 2.0, 4.0), ("CA", "C", 17.4, 2.2, 4.2),
        ("C",   "C", 18.2, 1.0, 3.8), ("O",  "O", 19.4, 1.0, 4.0),
        ("CB",  "C", 17.9, 3.4, 3.4), ("CG", "C", 19.3, 3.8, 3.7),
        ("CD",  "C", 19.7, 5.0, 2.9), ("NE", "N", 21.0, 5.5, 3.2),
        ("CZ",  "C", 21.5, 6.6, 2.7), ("NH1", "N", 20.8, 7.4, 1.9),
        ("NH2", "N", 22.7, 7.0, 3.0)]),
    ("SER", "A", 129, [
        ("N",  "N", 12.0, -3.0, 14.0), ("CA", "C", 13.3, -2.7, 14.4),
        ("C",  "C", 14.2, -3.9, 14.3), ("O",  "O", 15.4, -3.8, 14.6),
        ("CB", "C", 13.9, -1.6, 13.5), ("OG", "O", 13.1, -0.5, 13.4)]),
    ("GLY", "B", 10, [
        ("N",  "N", -8.0, -8.0, -8.0), ("CA", "C", -6.6, -8.2, -8.3),
        ("C",  "C", -5.8, -7.0, -8.7), ("O",  "O", -4.6, -7.1, -8.9)]),
]

HET = [
    ("HOH", "A", 201, [("O", "O", 25.0, 25.0, 25.0)]),
    ("HOH", "A", 202, [("O", "O", 26.0, 25.0, 25.0)]),
    ("LIG", "A", 300, [
        ("C1", "C", 30.0, 30.0, 30.0), ("N1", "N", 31.4, 30.0, 30.0),
        ("O1", "O", 30.0, 31.4, 30.0)]),
]


def write_receptor():
    out = ["REMARK synthetic binding-pocket fragment, hand-placed geometry\n"]
    serial = 0
    for res, chain, seq, atoms in RESIDUES:
        for name, el, x, y, z in atoms:
            serial += 1
            out.append(pdb_line("ATOM", serial, name, res, chain, seq, x, y, z, el))
    for res, chain, seq, atoms in HET:
        for name, el, x, y, z in atoms:
            serial += 1
            out.append(pdb_line("HETATM", serial, name, res, chain, seq, x, y, z, el))
    out.append("END\n")
    with open(os.path.join(HERE, "receptor_fragment.pdb"), "w") as f:
        f.writelines(out)


def pdbqt_atom(serial, name, seq, x, y, z, charge, adtype):
    pname = name if len(name) >= 4 else " " + name
    return (f"ATOM  {serial:5d} {pname:<4s} LIG A{seq:4d}"
            f"    {x:8.3f}{y:8.3f}{z:8.3f}  1.00  0.00    {charge:6.3f} {adtype:<2s}\n")


def write_pose_single():
    # one model, the reference energy from the docking run
    lines = ["MODEL 1\n",
             "REMARK VINA RESULT:     -10.6      0.000      0.000\n",
             "ROOT\n",
             pdbqt_atom(1, "C1", 1, 11.5, 10.0, 10.0, 0.062, "C"),
             pdbqt_atom(2, "N1", 1, 13.2, 10.0, 10.0, -0.347, "NA"),
             pdbqt_atom(3, "C2", 1, 12.1, 11.3, 10.4, 0.031, "A"),
             pdbqt_atom(4, "O1", 1, 40.0, 40.0, 40.0, -0.251, "OA"),
             pdbqt_atom(5, "H1", 1, 13.8, 10.8, 10.1, 0.163, "HD"),
             "ENDROOT\n",
             "TORSDOF 0\n",
             "ENDMDL\n"]
    with open(os.path.join(HERE, "pose_single.pdbqt"), "w") as f:
        f.writelines(lines)


def write_pose_nine():
    energies = [-9.8, -9.5, -9.1, -8.8, -8.4, -8.0, -7.7, -7.3, -7.0]
    lines = []
    for i, e in enumerate(energies, 1):
        lines.append(f"MODEL {i}\n")
        lines.append(f"REMARK VINA RESULT:{e:11.1f}{0.0:11.3f}{0.0:11.3f}\n")
        lines.append(pdbqt_atom(1, "C1", 1, 1.0 + i, 2.0, 3.0, 0.010, "C"))
        lines.append(pdbqt_atom(2, "O1", 1, 2.5 + i, 2.0, 3.0, -0.200, "OA"))
        lines.append("ENDMDL\n")
    with open(os.path.join(HERE, "pose_nine.pdbqt"), "w") as f:
        f.writelines(lines)


write_receptor()
write_pose_single()
write_pose_nine()
print("fixtures written to", HERE)
