#!/usr/bin/env python3
"""Independent reference for the iterative charge-equalization recurrence.

Molecules are written out by hand (atom orbital states, formal charges,
bonds), so nothing here goes through the C++ parser or classifier. The
charges printed by this script are frozen into test_gasteiger.cpp; rerun
it if the recurrence constants ever change.

Atom order convention matches the library: heavy atoms in input order,
then hydrogens grouped by parent in parent order.
"""

# electronegativity polynomials chi(q) = a + b q + c q^2, from
# Gasteiger & Marsili, Tetrahedron 36 (1980) 3219
PAR = {
    "H":    (7.17, 6.24, -0.56),
    "Csp3": (7.98, 9.18, 1.88),
    "Csp2": (8.79, 9.32, 1.51),
    "Csp":  (10.39, 9.45, 0.73),
    "Nsp3": (11.54, 10.82, 1.36),
    "Nsp2": (12.87, 11.15, 0.85),
    "Nsp":  (15.68, 11.70, -0.27),
    "Osp3": (14.18, 12.92, 1.39),
    "Osp2": (17.07, 13.79, 0.47),
    "F":    (14.66, 13.85, 2.31),
    "Cl":   (11.00, 9.69, 1.35),
    "Br":   (10.08, 8.47, 1.16),
    "I":    (9.90, 7.96, 0.96),
    "S":    (10.14, 9.13, 1.38),
}

H_CATION = 20.02  # hydrogen's chi+ replacement


def run(types, seeds, edges, iters=8):
    q = list(seeds)
    for k in range(1, iters + 1):
        damp = 0.5 ** k
        chi = []
        for t, qi in zip(types, q):
            a, b, c = PAR[t]
            chi.append(a + b * qi + c * qi * qi)
        dq = [0.0] * len(q)
        for i, j in edges:
            lo = i if chi[i] <= chi[j] else j
            if types[lo] == "H":
                denom = H_CATION
            else:
                a, b, c = PAR[types[lo]]
                denom = a + b + c
            t = (chi[j] - chi[i]) / denom * damp
            dq[i] += t
            dq[j] -= t
        for i in range(len(q)):
            q[i] += dq[i]
    return q


def show(name, types, seeds, edges):
    q = run(types, seeds, edges)
    print(name)
    for i, (t, qi) in enumerate(zip(types, q)):
        print(f"  {i:2d} {t:5s} {qi:+.10f}")
    print(f"  sum {sum(q):+.10f}")


# methane: C, then 4 H
show("methane", ["Csp3"] + ["H"] * 4, [0.0] * 5,
     [(0, 1), (0, 2), (0, 3), (0, 4)])

# ethanol CCO: C0 C1 O2, H on C0 (3), C1 (2), O2 (1)
show("ethanol",
     ["Csp3", "Csp3", "Osp3"] + ["H"] * 6,
     [0.0] * 9,
     [(0, 1), (1, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (2, 8)])

# ammonium [NH4+]: N seeded +1, 4 H
show("ammonium", ["Nsp3"] + ["H"] * 4, [1.0, 0, 0, 0, 0],
     [(0, 1), (0, 2), (0, 3), (0, 4)])

# acetic acid CC(=O)O: C0 sp3, C1 sp2, O2 carbonyl, O3 hydroxyl, 3 H + 1 H
show("acetic acid",
     ["Csp3", "Csp2", "Osp2", "Osp3"] + ["H"] * 4,
     [0.0] * 8,
     [(0, 1), (1, 2), (1, 3), (0, 4), (0, 5), (0, 6), (3, 7)])

# benzene: six aromatic carbons, one H each
show("benzene",
     ["Csp2"] * 6 + ["H"] * 6,
     [0.0] * 12,
     [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
      (0, 6), (1, 7), (2, 8), (3, 9), (4, 10), (5, 11)])

# fluoromethane CF: C0, F1, 3 H
show("fluoromethane",
     ["Csp3", "F"] + ["H"] * 3,
     [0.0] * 5,
     [(0, 1), (0, 2), (0, 3), (0, 4)])
