//
// Project screenlab - Copyright 2026 The screenlab developers
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SCREENLAB_DATA_TABLES_HPP
#define SCREENLAB_DATA_TABLES_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "screenlab/error.hpp"

// Contribution tables. Each table is embedded verbatim here and also shipped
// as data/<name>.txt with a checksum in data/MANIFEST; a test pins the two
// copies together. Setting SCREENLAB_DATA to a directory overrides any table
// with the file of the same name found there.

namespace screenlab {
namespace tables {

// Atom-type partition-coefficient contributions, Wildman & Crippen (1999),
// J Chem Inf Comput Sci 39:868. The pattern column is the published SMARTS
// kept for reference; typing is implemented directly on the molecular graph.
inline constexpr const char* crippen_text = R"TBL(# crippen v1
# columns: type  pattern  value
C1	[CH4],[CH3]C,[CH2](C)C	0.1441
C2	[CH](C)(C)C,[C](C)(C)(C)C	0.0
C3	[CH3][N,O,P,S,F,Cl,Br,I],[CH2X4][hetero]	-0.2035
C4	[CH1X4][hetero],[CH0X4][hetero]	-0.2051
C5	[C]=[!C;A;!#1]	-0.2783
C6	[CH2]=C,[CH1](=C)A,[CH0](=C)(A)A,[C](=C)=C	0.1551
C7	[CX2]#A,[CX3]=[CX2]	0.0017
C8	[CH3]c	0.08452
C9	[CH3]n,[CH3]o	-0.1444
C10	[CH2X4]a	-0.0516
C11	[CHX4]a	0.1193
C12	[CH0X4]a	-0.0967
C13	[cH0]-[unusual]	-0.5443
C14	[c][#9]	0.0
C15	[c][#17]	0.245
C16	[c][#35]	0.198
C17	[c][#53]	0.0
C18	[cH]	0.1581
C19	[c](:a)(:a):a	0.2955
C20	[c](:a)(:a)-a	0.2713
C21	[c](:a)(:a)-C	0.136
C22	[c](:a)(:a)-N	0.4619
C23	[c](:a)(:a)-O	0.5437
C24	[c](:a)(:a)-S	0.1893
C25	[c](:a)(:a)=[C,N,O]	-0.8186
C26	[C](=C)(a)A,[C](=C)(c)a,[CH1](=C)a,[C]=c	0.264
C27	[CX4][unusual]	0.2148
CS	[#6]	0.08129
H1	[#1][#6],[#1][#1]	0.123
H2	[#1]O[CX4],[#1]Oc,[#1]O[unusual],[#1][unusual]	-0.2677
H3	[#1][#7],[#1]O[#7]	0.2142
H4	[#1]OC=[C,N,O,S],[#1]O[O,S]	0.298
HS	[#1]	0.1125
N1	[NH2+0]A	-1.019
N2	[NH+0](A)A	-0.7096
N3	[NH2+0]a	-1.027
N4	[NH+0](a)A,[NH+0](a)a	-0.5188
N5	[NH+0]=A,[NH+0]=a	0.08387
N6	[N+0](=A)A,[N+0](=A)a	0.1836
N7	[N+0](A)(A)A	-0.3187
N8	[N+0](a)(A)A,[N+0](a)(a)A,[N+0](a)(a)a	-0.4458
N9	[N+0]#A	0.01508
N10	[NH3+],[NH2+],[NH+]	-1.95
N11	[n+0]	-0.3239
N12	[n+]	-1.119
N13	[NH0+](A)(A)(A)A	-0.3396
N14	[N+]=,[N-],azide	0.2887
NS	[#7]	-0.4806
O1	[o]	0.1552
O2	[OH],[OH2]	-0.2893
O3	[O](A)A	-0.0684
O4	[O](a)A,[O](a)a	0.4833
O5	[O]=[#7],[O]=[#8],[OX1-][#7]	0.0335
O6	[OX1][#16]	-0.3339
O7	[OX1][unusual]	-1.189
O8	[O]=c	0.1788
O9	[O]=[CH]C,[O]=C(C)C,[O]=[CH][CH]	-0.1526
O10	[O]=[CH]c,[O]=C(c)(A),[O]=C(c)(a)	0.1129
O11	[O]=C([hetero])[any]	0.4833
O12	[O-]C=O	-1.326
OS	[#8]	-0.1188
F	[F]	0.4202
Cl	[Cl]	0.6895
Br	[Br]	0.8456
I	[I]	0.8857
Hal	[F-],[Cl-],[Br-],[I-]	-2.996
P	[#15]	0.8612
S1	[S]	0.6482
S2	[S-],[S+]	-0.0024
S3	[s]	0.6237
)TBL";

// Polar-fragment surface contributions, Ertl, Rohde & Selzer (2000),
// J Med Chem 43:3714. Keys encode the nitrogen/oxygen environment:
// element (case = aromaticity), attached H count, charge (p/m), then bond
// counts in the order aromatic (a), single (s), double (d), triple (t);
// _r3 marks membership in a three-membered ring.
inline constexpr const char* tpsa_text = R"TBL(# tpsa v1
# columns: key  fragment  value
N_s3	N(-*)(-*)-*	3.24
N_s1_d1	N(-*)=*	12.36
N_t1	N#*	23.79
N_s1_d2	N(-*)(=*)=*	11.68
N_d1_t1	N(=*)#*	13.6
N_s3_r3	N(-*)(-*)-* in 3-ring	3.01
NH_s2	N(-*)(-*)H	12.03
NH_s2_r3	N(-*)(-*)H in 3-ring	21.94
NH_d1	N(=*)H	23.85
NH2_s1	N(-*)(H)H	26.02
Np_s4	[N+](-*)(-*)(-*)-*	0.0
Np_s2_d1	[N+](-*)(-*)=*	3.01
Np_s1_t1	[N+](-*)#*	4.36
NHp_s3	[NH+](-*)(-*)-*	4.44
NHp_s1_d1	[NH+](-*)=*	13.97
NH2p_s2	[NH2+](-*)-*	16.61
NH2p_d1	[NH2+]=*	25.59
NH3p_s1	[NH3+]-*	27.64
n_a2	n(:*):*	12.89
n_a3	n(:*)(:*):*	4.41
n_a2_s1	n(-*)(:*):*	4.93
n_a2_d1	n(=*)(:*):*	8.39
nH_a2	n(:*)(:*)H	15.79
np_a3	[n+](:*)(:*):*	4.1
np_a2_s1	[n+](-*)(:*):*	3.88
nHp_a2	[nH+](:*):*	14.14
O_s2	O(-*)-*	9.23
O_s2_r3	O(-*)-* in 3-ring	12.53
O_d1	O=*	17.07
OH_s1	O(-*)H	20.23
Om_s1	[O-]-*	23.06
o_a2	o(:*):*	13.14
)TBL";

// IUPAC 2021 conventional atomic weights for the supported element set.
inline constexpr const char* atomic_weights_text = R"TBL(# atomic-weights v1
# columns: symbol  weight
H	1.008
B	10.81
C	12.011
N	14.007
O	15.999
F	18.998403163
P	30.973761998
S	32.06
Cl	35.45
Br	79.904
I	126.90447
)TBL";

// Asymmetric double-sigmoid desirability parameters from the QED method,
// Bickerton et al. (2012), Nat Chem 4:90, supplementary table.
// columns: descriptor A B C D E F DMAX
inline constexpr const char* qed_ads_text = R"TBL(# qed-ads v1
# columns: descriptor  A  B  C  D  E  F  DMAX
MW	2.817065973	392.5754953	290.7489764	2.419764353	49.22325677	65.37051707	104.9805561
ALOGP	3.172690585	137.8624751	2.534937431	4.581497897	0.822739154	0.576295591	131.3186604
HBA	2.948620388	160.4605972	3.615294657	4.435986202	0.290141953	1.300669958	148.7763046
HBD	1.618662227	1010.051101	0.985094388	0.000000001	0.713820843	0.920922555	258.1632616
PSA	1.876861559	125.2232657	62.90773554	87.83366614	12.01999824	28.51324732	104.5686167
ROTB	0.01	272.4121427	2.55837997	1.565547684	1.271567166	2.758063707	105.4420403
AROM	3.21778897	957.7374108	2.274627939	0.000000001	1.317690384	0.375760881	312.337261
ALERTS	0.01	1199.094025	-0.09002883	0.000000001	0.185904477	0.875193782	417.725314
)TBL";

// Structural-alert motifs: common reactive or toxicophore groups drawn from
// published medicinal-chemistry filter sets (cf. Brenk et al. 2008,
// ChemMedChem 3:435). A declared approximation of a full alert catalog.
inline constexpr const char* alerts_text = R"TBL(# alerts v1
# columns: name  pattern
nitro_charged	[N+](=O)[O-]
nitro_neutral	N(=O)=O
azide	N=[N+]=[N-]
diazonium	N#[N+]
azo	N=N
hydrazine	NN
thiol	[SH]
thiocarbonyl	C=S
aldehyde	[CH]=O
dicarbonyl	O=CC=O
michael_acceptor	C=CC=O
acyl_chloride	ClC=O
acyl_bromide	BrC=O
sulfonyl_chloride	ClS(=O)=O
anhydride	O=COC=O
peroxide	OO
epoxide	C1CO1
aziridine	C1CN1
isocyanate	N=C=O
isothiocyanate	N=C=S
iodine	I
phosphorus	P
imine_nh	C=[NH]
n_chloramine	NCl
)TBL";

namespace detail {

inline std::string override_path(const char* name) {
  const char* dir = std::getenv("SCREENLAB_DATA");
  if (!dir || !*dir) return {};
  std::string path = std::string(dir) + "/" + name;
  std::ifstream probe(path);
  return probe ? path : std::string{};
}

inline std::string table_text(const char* name, const char* embedded) {
  std::string path = override_path(name);
  if (path.empty()) return embedded;
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// First token is the key, last token is the value, anything between is
// commentary. Tab or space separated; '#' lines skipped.
inline std::map<std::string, double> parse_keyed_values(const std::string& text,
                                                        const char* what) {
  std::map<std::string, double> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.size() < 2)
      throw InputError(std::string("bad row in ") + what + " table: " + line);
    out[tok.front()] = std::stod(tok.back());
  }
  if (out.empty()) throw InputError(std::string(what) + " table is empty");
  return out;
}

}  // namespace detail

inline const std::map<std::string, double>& crippen() {
  static const std::map<std::string, double> t =
      detail::parse_keyed_values(detail::table_text("crippen.txt", crippen_text), "crippen");
  return t;
}

inline const std::map<std::string, double>& tpsa() {
  static const std::map<std::string, double> t =
      detail::parse_keyed_values(detail::table_text("tpsa.txt", tpsa_text), "tpsa");
  return t;
}

inline const std::map<std::string, double>& atomic_weights() {
  static const std::map<std::string, double> t = detail::parse_keyed_values(
      detail::table_text("atomic_weights.txt", atomic_weights_text), "atomic weights");
  return t;
}

struct AdsParams {
  double a, b, c, d, e, f, dmax;
};

inline const std::map<std::string, AdsParams>& qed_ads() {
  static const std::map<std::string, AdsParams> t = [] {
    std::map<std::string, AdsParams> out;
    std::istringstream in(detail::table_text("qed_ads.txt", qed_ads_text));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string key;
      AdsParams p{};
      if (!(ls >> key >> p.a >> p.b >> p.c >> p.d >> p.e >> p.f >> p.dmax))
        throw InputError("bad row in qed_ads table: " + line);
      out[key] = p;
    }
    if (out.size() != 8) throw InputError("qed_ads table must have 8 rows");
    return out;
  }();
  return t;
}

inline const std::vector<std::pair<std::string, std::string>>& alerts() {
  static const std::vector<std::pair<std::string, std::string>> t = [] {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(detail::table_text("alerts.txt", alerts_text));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string name, pattern;
      if (!(ls >> name >> pattern)) throw InputError("bad row in alerts table: " + line);
      out.emplace_back(name, pattern);
    }
    if (out.size() < 20) throw InputError("alerts table needs at least 20 rows");
    return out;
  }();
  return t;
}

}  // namespace tables
}  // namespace screenlab

#endif  // SCREENLAB_DATA_TABLES_HPP
