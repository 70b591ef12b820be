// Fragment contribution table for the synthetic-accessibility score,
// fitted on the bundled synthetic corpus. Regenerate by running
// `screenlab fit-sas` on a replacement corpus and pasting the output here,
// or point SCREENLAB_DATA at a directory holding sas_fragments.txt.
#ifndef SCREENLAB_DATA_SAS_HPP
#define SCREENLAB_DATA_SAS_HPP

#include <sstream>

#include "data_tables.hpp"
#include "druglikeness.hpp"

namespace screenlab {
namespace tables {

inline constexpr const char* sas_fragments_text = R"TBL(# fragment-scores v1
# corpus-size: 1000
# provenance: bundled synthetic corpus v1
# columns: fragment-hash(hex) contribution
000c7087c7cecc41	-1.885236
00cabb4c52088934	-2.839478
00d36aed613c50bb	-3.140508
015567f5c2c6e6dc	-3.140508
019b126c75e0f0c4	-1.818289
0225148ccf8e4fcc	-3.140508
02789471aa54edd5	-3.140508
028aa4e489311b89	-3.140508
029903b18dc1957e	-0.619370
02b5fa9a173cf898	-3.140508
0448d143daf74022	-3.140508
046421af464d1601	-2.839478
047c829481eb1ca7	-3.140508
047fccaa7de95332	-2.839478
050ed869ed4a66ad	-1.079810
05225135c20a84e9	-3.140508
052f1e8ab0dd88b3	-1.560724
05935f62e4bce0c9	-2.186266
059d7bd55cc246ab	-3.140508
05ddd58390b8ca5b	-3.140508
06fea635a1497817	-2.061327
0726538334329ec0	-2.839478
0748f30e433def3d	-2.663387
0827633130619ee3	-3.140508
0858a780e52880ac	-1.408114
088535c672c8efde	-2.663387
08de37e7577d9e4d	-1.936388
092651aafb43c9fb	-2.839478
0931b79d512b3857	-2.663387
0939c676eea670ff	-1.140508
0965f7fdeec090e7	-2.061327
09a4cc59f94f732a	-1.798085
09ced4057ce8834e	-1.140508
0a0c737b6cd8c6a0	-2.663387
0a2026ee089ed969	-2.362357
0a7dcb13b6f5a438	-3.140508
0aa91b68fb1be5c5	-1.497055
0afd9bcc3c2917f9	-2.362357
0b3f32316fbdddb7	-2.186266
0bbdd76756afff2a	-3.140508
0ca763df0de39040	-3.140508
0ca913437687fa3c	-3.140508
0d150f7e689871c4	-3.140508
0d2b019bda27e7f6	-1.818289
0d49c0d78b8e7bd3	-2.663387
0dac4b484c330768	-2.839478
0def25cb3806a02c	-2.839478
0e0487fdd84123b3	-3.140508
0f6a3ddd40f51c75	-2.237418
0f775fdf1866030b	-2.839478
0f7eb99ff39c1f9e	-1.778780
0f897d582b58918d	-3.140508
0f92e241ffd05816	-3.140508
1048d22aafde7a5b	-3.140508
10997667bf42ef7f	-3.140508
10c4817590eca05b	-2.061327
116abe75944525a5	-2.839478
11afc119f2c54baa	-2.839478
11d26d95763f8213	-2.839478
126b24992cec9b97	-3.140508
12f66379b94900e4	-2.839478
134a050ccf4cca0b	-1.885236
13a4643fc1b27b41	-3.140508
13ac81e4760a2f1a	-3.140508
13cb32ad1a20a323	-3.140508
1437e7fcf96033e1	-3.140508
15c08b6adfdf6467	-3.140508
164a20d738cf7a54	-2.839478
168c81e45412eca8	-2.140508
1755d75fa5a49383	-1.221430
178b8bca8eb00d8c	-2.295410
17bd8c166a09a896	-2.663387
17c3beea77db38fb	-2.538448
18212526735fbb29	-1.994380
182cd3b397ee254c	-2.663387
184e583075e40b22	-3.140508
18633f4b59f0dde0	-0.915199
18667889b21b7646	-3.140508
1924f9e17ad69cad	-2.663387
193b1528a151aa8a	-3.140508
19a0e923fe577b0c	-3.140508
19dce04c35e2bce3	-2.839478
1a298cdaf5543782	-3.140508
1a629d4abfbc3c8b	-1.798085
1b3db1dc9c8e976a	-1.295410
1b6f8536a1e6160a	-2.441538
1b96f0b56c0d20a8	-3.140508
1c539f1d436341db	-3.140508
1c65d28b2930a95d	-2.663387
1c9df284cb416bf6	-1.362357
1cf63fb085ddee3f	-2.061327
1d46ffb1ec70e9e9	-3.140508
1dc2a50d5a39e8f9	-3.140508
1e5d1306fa2df610	-3.140508
1e5e596451846cd9	-1.327595
1e7b4374d4e7922a	-3.140508
1ef09650ead08a12	-1.221430
1f61eed8045f5d38	-3.140508
211b81b589df7760	-3.140508
2155b20d14583805	-0.792203
220e8e06fcd4cbe2	-2.061327
2212490f309c1870	-2.839478
22339ed78401efc4	-3.140508
224036d92a5a5696	-1.760297
227171f225bbb020	-2.839478
23352a8e6f1aece7	-2.839478
23b43f98aa4c9ec9	-2.663387
24247cac81a4a27e	-1.609029
245ac54edd66a707	-1.131908
24be65aa570d90ee	-2.839478
24c409492d3a733b	-2.441538
25d82473a749a8a4	-2.441538
25f33993334aae18	-3.140508
25fa4edcb6864c63	-3.140508
265795b183c28ade	-2.839478
26774d5c52d0b532	-2.663387
271408f435a4bbfd	-2.663387
272de1cbdf941b7e	-2.538448
273ea029be55b786	-3.140508
278ab1aa9eb05cb1	-2.538448
2811d6e4a7fed0e9	-3.140508
282672ac8a0f622c	-3.140508
28519eaf13707b5d	-3.140508
2938563821d32e60	-3.140508
29e57bda18b23056	-3.140508
2a5bc035e6ff9fa3	-3.140508
2afe32c01a3658e0	-3.140508
2b9a0424ad28a8ea	-2.839478
2bba829abfed7c62	-3.140508
2c23bbcdfb32294f	-3.140508
2ccec49e389f8d1f	-1.964417
2ce825b516637d1e	-1.760297
2d34d37ba732398b	-3.140508
2d6ce5daee03f8d9	-3.140508
2db75fc0bce0af11	-2.538448
2dc5e5c41903e397	-1.818289
2dccd3cf843559ca	-3.140508
2dfefb6511494518	-3.140508
2e0d454bff87b2f6	-3.140508
2e173260cc946c5d	-3.140508
2e229a2a33b8434e	-3.140508
2e53cf1a2be09b75	-3.140508
2e9b8ba875ffef0f	-1.119319
2ea1603fb46ca035	-1.497055
2f18e87a4138a262	-2.663387
2f4fdac5ae00869d	-1.760297
2f921d2db211c091	-3.140508
2fd7d930da8b40a2	-2.061327
302248ce4ef8852b	-3.140508
30a326a50b53d079	-2.663387
3137fad8bf1ce03e	-3.140508
3157c33915562075	-3.140508
31a1826fa9821569	-3.140508
31a488ccfc025158	-2.362357
31f4c6fe214a276e	-1.609029
329534c3861286f4	-3.140508
329f7394b82d41e4	-3.140508
32d5612f0811f829	-3.140508
330666415fa4e6e1	-1.019934
333b379bf5166fe4	-3.140508
33524a3738a8b2ef	-1.936388
33d3f70e3ca1d145	-3.140508
34762d2ab7b5b5f3	-1.760297
34f30c2cfed9752f	-3.140508
352118517eed989a	-2.663387
35cbff987ec3e3bf	-2.663387
35cd9dc8f6f3acbb	-3.140508
361080cd8a118508	-1.760297
36153cf11af019c8	-0.950176
364b46c02e5c99d4	-2.186266
364f376e68abd023	-1.216229
370f4a39478c2e8e	-2.839478
3784ea917758265e	-2.061327
37e5c23fb719c834	-3.140508
37fef2e1bad90ccf	-2.663387
3892dd47d3f54e83	-1.221430
38c70685192f4084	-3.140508
3a208ce7cbb56632	-2.663387
3a5340572d506df8	-2.061327
3a71d203681a7cf4	-2.237418
3a92991064049f99	-1.226694
3bfca2a7d6994865	-2.839478
3c21d920ed922d7a	-2.839478
3c9bf8cebc54460b	-1.140508
3cc5ed7250511d5c	-2.663387
3cec2c036e05473c	-3.140508
3d288bc04cb31ad8	-2.061327
3d49060e172da3ba	-2.140508
3d49592c4127b68e	-2.663387
3dea3ab0c9495bf7	-2.362357
3e14e3d47cef5f7b	-3.140508
3e60d332c96789df	-2.663387
3f04db238bde5c62	-2.061327
3f1e60a88d82bcf7	-1.362357
3fd780bd49e2d93c	-2.237418
401c42c0d7d561f6	-2.663387
40556c336e3baa33	-2.026565
407e9098559daca3	-2.839478
40e3409b31622d16	-3.140508
4167a68c0479a3f8	-2.362357
417f42eeeba9cd0a	-2.441538
418c1b3c82b27f5e	-2.663387
41aef1ef0023a182	-2.663387
41c156cd7bc5e4d8	-2.295410
422297ceb644194d	-2.839478
42aa7d895ea5ffa4	-2.839478
43a5516fe8b50913	-1.497055
43cee7021dfff500	-2.663387
440c4c397be3b332	-3.140508
44155c26f15e2a5f	-2.839478
44e2f4718070f1e9	-2.237418
4588db5986536df2	-1.237418
45b8ca3573b4b5f9	-1.010174
46048df810b2ee2f	-3.140508
47bb8aa85bc35fc5	-3.140508
47fd2a9e37cd4f1f	-2.839478
48db6c26b369db2b	-2.538448
4949f034bb38c0c8	-3.140508
499d93afd2a3b275	-1.487296
49a0e418c4e555fb	-3.140508
49a47bf80d35372c	-2.441538
49a66a954c36fc69	-3.140508
49dd0af95182bc61	-2.839478
4ab783ca228b45d4	-3.140508
4ace6f0df2902d03	-2.663387
4af7f108a4f8884f	-3.140508
4bd8966025a76915	-3.140508
4bea213dd33cea90	-3.140508
4bf855473108562d	-2.061327
4c14ab10636123d2	-2.839478
4c32acfa4d56ab3a	-3.140508
4c9c3d5bd6ba036b	-3.140508
4cf9f9d72036d883	-2.237418
4d72865a2e7f3a8e	-3.140508
4e03144cacc46795	-2.186266
4e107b72723bc693	-1.818289
4ea1555d3cf509c5	-3.140508
4ff135c1914516b5	-3.140508
5032f573da6fb385	-2.839478
50b931405b4fdfd0	-2.839478
50d943ebc38f8685	-3.140508
51adfee769350d8f	-3.140508
526a92e1f8321fe6	-1.936388
529ac75442503cd2	-1.818289
52a829ab5d515748	-3.140508
52ae06d3b09bb4c9	-3.140508
52f8bb001e3bc230	-3.140508
53f1593e7506db74	-1.459267
54502dad5605bb93	-3.140508
54868027ed93aa97	-3.140508
551a0470047cc2fe	-2.061327
5551eaa4e8d24dce	-2.295410
55556b81d803307d	-3.140508
55f443b285f40316	-1.994380
56448f7e519789c5	-3.140508
5651ba89f28d5ba9	-3.140508
56a14ea288c2f814	-3.140508
57824c76e55032d7	-3.140508
578ca02e3f8b1967	-2.061327
57ce26567d26ef6c	-2.839478
5810c9cb88de4639	-3.140508
5844c883d291a8a5	-2.663387
589760770f5c4d70	-2.839478
591a729ce9852aae	-3.140508
594b0da29ba3a10e	-2.538448
59bcbbdd874217a3	-3.140508
5a135d13085697bd	-2.538448
5aa29b84cf25ffd5	-3.140508
5b2c66691c81ffec	-2.362357
5b7a37de6900f49b	-3.140508
5b95bede4b098d0a	-1.635358
5ba060d8f596fdee	-2.663387
5ba734dfea77795b	-2.237418
5c7e2414b7bb5aa6	-2.663387
5c9a138a2ca7d878	-1.609029
5caa1fa46a1db841	-2.538448
5cb0dc78672991bc	-3.140508
5cf7941637e5ca24	-3.140508
5d1acb1e5fad0dc3	-1.798085
5d61dca0465a19d8	-1.910059
5e6f6b5923dc0ce9	-2.663387
5e7fb8f5dff95d32	-1.725535
5ee7c55e6fcd4ecc	-2.061327
5f63fa706db9315e	-3.140508
5fa45b04309b2713	-3.140508
602c451756c388e0	-3.140508
607f70310d0297a8	-1.861754
609ebb26363a42b5	-3.140508
60a4bcfd7fded331	-3.140508
6147d5c834c517c7	-3.140508
617e9842cb29ab2e	-1.487296
6183666b68e79677	-2.362357
61b21710b2ce0097	-2.061327
6216edba76ecdbbc	-3.140508
62f2e30d1b2ea327	-3.140508
635a23a06a36e9b5	-3.140508
638e43793e13b6cd	-3.140508
63d3702ebd9997a2	-3.140508
63fd631524870fa8	-2.839478
641eca4fca4560f2	-2.441538
6478be3465e7145a	-2.663387
6495b2343c141437	-2.839478
64ab6fdb13acc9ff	-2.839478
64d918c5b13aefd0	-2.839478
64da60ec1e711941	-2.839478
64ed130547d8b743	-1.760297
64edcfb1a01cd320	-2.663387
650dbc61385778e6	-2.663387
658d4976c10b4687	-2.061327
65d7c47a4a98bcff	-2.295410
6646488d7d7eff05	-3.140508
66e8f4391114a7c4	-3.140508
6725b7a886de9f04	-2.140508
673d3505a44d1d3f	-3.140508
6803292911b2b710	-1.936388
684d5bbb7c67ec0c	-1.497055
6877f2a71dbeabb6	-3.140508
68c5f909a73ebb75	-3.140508
6914f8a665920021	-3.140508
6975833d85bdc0ea	-3.140508
69ae07ab52288ecd	-1.295410
6a21219f4d8e47b4	-3.140508
6a283ead4912fec9	-3.140508
6a36e1637f7992b3	-2.140508
6a5e064d24080ed8	-1.798085
6aed4b67a3ea9b08	-3.140508
6b418fdef0316b9a	-3.140508
6c70d701a2b6b126	-3.140508
6cc5076ff4bdaa84	-3.140508
6d3e6a74239f0a24	-3.140508
6d8bef48097bb0a3	-3.140508
6dc2dec974b53ce3	-2.441538
6dc9c86176ad1296	-2.538448
6e1487159dbc32fd	-2.538448
6efac2498dc00e41	-2.663387
6f1874f50744128e	-1.497055
6f5432ead98bc62b	-3.140508
6febcd421265f3b3	-3.140508
704ac146725e75e4	-2.663387
708cf6e5596b048a	-1.910059
715839f1eab08425	-3.140508
71c4ac70bed6616c	-2.538448
727b7fe61c3a43f6	-3.140508
72c2fb564aca366d	-3.140508
7334d0d4af3c4739	-2.441538
736a6ed7284ac0a0	-2.237418
74776fa8599fcdf6	-2.839478
749d8a75d294c1ec	-1.760297
74cde7f90dad99db	-2.839478
765595add28218c2	-3.140508
778fa4677e1474b1	-3.140508
7804ebc1e2bac06b	-3.140508
784c8d1774b8e49f	-2.839478
792aaee6e99ebcc6	-2.061327
7972e108a77878a0	-2.140508
7a2dafbf91164767	-3.140508
7a5fc0780a8921c3	-1.584206
7ac7265719a39dcb	-2.441538
7b803b87ebf8a71e	-0.704345
7bc6d2189d47dec0	-1.497055
7be2973134e8ec3b	-1.517259
7be8ba83b55078c4	-1.216229
7ca7c9ce2551ef55	-2.663387
7d05b22f58e486ff	-3.140508
7d064ad29f8db1d7	-3.140508
7d4ae982bc81e6cd	-1.079810
7d9d7d7d416bfa74	-2.839478
7db4e8465c8309b1	-3.140508
7e011cd6db30cb94	-2.663387
7e3f0ef47d86c138	-2.061327
7e6ece8e94eadabf	-3.140508
7ea0460bc1cc5ab0	-3.140508
7ee2e9f0421b4297	-2.839478
7f156d9bcbf41fcf	-2.839478
7fdb4859fa94413e	-2.538448
80360811026dfe99	-1.725535
8080b0ce7fad1bc4	-2.839478
8269c4d9e9dfe364	-2.362357
829650dc78a96492	-1.818289
8297bf5a4140fe01	-3.140508
838c196b33784735	-3.140508
83902804250cecbe	-3.140508
84058583babae11e	-3.140508
84d58353d05fb084	-1.910059
8571715305d4213d	-1.211089
8664d31436b84b95	-1.369656
8679e2ae5d2c514f	-3.140508
86a957dc2483e048	-2.839478
86c0c5b8452b98be	-2.839478
870b2068f46783fe	-2.362357
870e3cac7b233c1b	-2.839478
873c15400d4f31b5	-3.140508
87528443cd2bf9c0	-3.140508
8791b7759cdff4ae	-2.663387
888d140fcd864766	-2.061327
88adec71cbf623a5	-2.441538
88b5d17dc79047bd	-3.140508
898ae66ff05ef94b	-3.140508
89ce858694691de8	-3.140508
8a1bf715cf8e0caf	-3.140508
8a3f660bcef7babd	-3.140508
8a91e74ffbf4a117	-2.441538
8b4d33e75a449ef9	-2.441538
8c203ac1e55f4dc6	-1.936388
8ca18b249d11cc7e	-3.140508
8d435cda9d3834a6	-3.140508
8d561129100380ba	-3.140508
8d708f29aca18053	-3.140508
8da3b20ec0a38ced	-3.140508
8db5ba2694cef50b	-1.487296
8dbedf21c37c646d	-2.061327
8dded9db68ae9974	-3.140508
8df230d077d14188	-3.140508
8e9619630bacfd58	-2.140508
908251d0578edd57	-2.362357
90a5a3274d2ddf79	-3.140508
9129951835442252	-2.061327
91ead112dda15bd9	-2.538448
9227f8b9017a9191	-2.839478
9332e0a4881f32e6	-2.061327
9338faf40c2fcf6a	-2.061327
93c52a54af797d60	-2.061327
94282971bd7b214a	-3.140508
945d77cf1a0881e9	-1.584206
94bf58ba623fa85f	-3.140508
94cb7dee530ee4f0	-3.140508
94e86d6ef02e5d86	-2.663387
9587cb6bc3f2cd44	-3.140508
9591d21c0443ed96	-3.140508
966b3a7fb7a79616	-3.140508
9711b573fa3026be	-3.140508
97630649b7bbb605	-3.140508
985b55fea5b9d4bd	-3.140508
9a458de720643d4f	-3.140508
9b70c893773468f5	-0.492148
9b90f5c1bf78362c	-1.798085
9bc5c5e41326d837	-3.140508
9bf56899fe67024f	-2.061327
9ce15a226466731d	-1.369656
9ce449b88e0b0781	-3.140508
9d6bccc23ef59622	-3.140508
9d7b363b9d1a10b8	-3.140508
9e681c4dbd88c77b	-1.994380
9ed4c7a3e5e23481	-2.663387
9f16a3fcda417f49	-3.140508
9f29cc306ff57d78	-3.140508
9f3385a13846e574	-3.140508
9f7de3c8ae32d464	-2.538448
9fd153107a18ea9f	-3.140508
a0662b5ccc33f2c1	-2.538448
a09f0b0007198fde	-3.140508
a0e124ecc3b9ecaf	-3.140508
a14f20bc1aa3b806	-2.295410
a15b9ebbfb4cb9c6	-3.140508
a16875dd3c7dfa9b	-3.140508
a17b2c04baa85626	-1.026565
a1e25fff7f965f2e	-3.140508
a245b904a6b1ef23	-2.663387
a24bfdb06ab130a5	-2.061327
a3eb799372948e99	-2.839478
a3f0fa7f5c73c202	-2.237418
a3f2fa3a438e1e40	-1.798085
a44c3edea19aa0d0	-1.441538
a4765c9b31b574d4	-2.362357
a525be46649a7fea	-2.362357
a6a780ea73bce7ef	-2.295410
a6acfb7a4336c22c	-2.663387
a717885cd9ddf2fd	-2.441538
a7553e001b12beb8	-2.839478
a75d4e5028c006de	-3.140508
a79a483a816e7543	-2.362357
a7c0014aa7962c2c	-1.538448
a8460e78df3abcae	-2.663387
a8694102a1b4e790	-3.140508
a8f1f9588900d23d	-2.663387
a91bf93035aeb4fb	-2.362357
a95b632496bd7723	-1.186266
a9c9c6953a60553d	-3.140508
a9cf99e91ac7934f	-1.798085
a9ea3d56f01e206e	-3.140508
aa068c4f4d29d642	-3.140508
aa353c81ad0185de	-3.140508
aab444f5c02b0d13	-3.140508
aaebe8bea5d51b8b	-3.140508
ab1a1a9485d7897c	-1.910059
ab1f7a6e8e69c048	-2.295410
ab5270bb1267715c	-1.006969
ac6a03a4cbe229f6	-3.140508
acb1a51708fd6d37	-2.237418
ad27db637c1687a8	-2.237418
ad3bccca0cb925ba	-2.663387
ad6044cdad7a51f8	-3.140508
ad6ac1b18c720a2f	-1.818289
ae3c9e603e0afc9c	-2.186266
ae9579224bbcc9cb	-3.140508
af2600afccea01a1	-3.140508
af32475e567747eb	-3.140508
afbcb60888aa0313	-1.760297
b006a46f6dd42c29	-3.140508
b09ea410a48252cc	-3.140508
b0ae7fd023332131	-1.693350
b11155938d4e2aea	-3.140508
b11b7c8aefd73464	-1.327595
b171e486f42ad9bb	-2.839478
b1855aa1dfd8d92f	-3.140508
b18ee2471eede88d	-1.107084
b1ac80f67a094ec0	-3.140508
b1da16373f028c29	-2.839478
b22d088325f3d168	-3.140508
b26b607dbb80a65c	-1.271276
b29c641b05de5b03	-3.140508
b2d6e38f2c41410b	-3.140508
b2f22a901319210d	-3.140508
b3ae7a9a6b08bd2e	-2.663387
b3bfaa758afeb711	-2.663387
b3c79979358c076c	-2.663387
b3ccd82678d106b7	-3.140508
b3fc7c18d90adf29	-3.140508
b412324a7c669632	-3.140508
b42cb13ea9814f34	-2.839478
b42d86c8cb178e93	-3.140508
b4332ef26aa0aeb7	-1.301659
b470fb3b4f6c3828	-1.497055
b4809378ec98cee9	-3.140508
b4886e96a372cdaa	-2.061327
b5295e07f8f6c8ab	-2.186266
b572f4c1872ea861	-2.441538
b5d5e5d889a09f6d	-1.459267
b5d892bb65e186dd	-2.362357
b65c4b2dd4a38257	-1.798085
b8029d5ef4a21606	-3.140508
b81da76a5d7a7a3f	-2.663387
b8f927f25fbb94db	-3.140508
b95fe86d1f783d7f	-1.538448
b9a08909f6ef5356	-3.140508
b9e4d276f3419150	-2.140508
b9f73dd9b6721f07	-2.061327
ba0b1a52bc32560d	-3.140508
ba16c74c4f7d6b80	-3.140508
ba1d65119daebf1c	-1.560724
bab6bb89adcf7f96	-1.140508
bab702d192016ee4	-3.140508
bad03503513b7924	-3.140508
bae382e687ddb5d9	-2.663387
bc50d3b213177198	-3.140508
bce70ddef766a5ec	-2.237418
bd20efb8a97440cf	-3.140508
bd4d4a8c44804a77	-3.140508
be101fe6fb2d97ce	-3.140508
be1fd7fb10af172d	-2.663387
bedcc09b76561053	-3.140508
befc58c1c9934885	-2.140508
bf9c529dac8bee87	-3.140508
bfa6af33e67bf08e	-2.839478
bfa91a2e95ee66e5	-3.140508
c032421152029594	-3.140508
c046374bb8c70255	-3.140508
c08093480d4d55d2	-1.079810
c09098cee69a530f	-1.885236
c0be598ff29f1ae4	-2.538448
c18755c16276fd3b	-2.839478
c18f3df468e2091d	-2.839478
c1cbc78c104593c3	-2.140508
c2b38f8dd921decd	-2.295410
c3a4477da2a52230	-1.497055
c3e3451d799af17f	-2.061327
c47842ed64e44c66	-2.839478
c4a2dcd8b2738968	-1.798085
c52221ee50f0535b	-1.818289
c58340f74c08b43b	-3.140508
c59cc15e4c69ee33	0.000000
c638c14e48eddb0d	-1.609029
c661c7cc6b3a0db7	-2.663387
c669e050a6896698	-2.839478
c6cbd376256a0fc8	-2.538448
c6db653c863fb338	-3.140508
c6e36702a549ea44	-2.295410
c738fd6efe5ecab8	-3.140508
c7599969065f9a13	-2.441538
c7616b7accc70aeb	-3.140508
c78d6457d3cfdcd1	-2.839478
c7b767112cc5a5fa	-3.140508
c8421466b3e25f3b	-3.140508
c8e6197f114d81e7	-2.538448
c8eeb6788c2dd069	-3.140508
c8fa23728866e986	-2.441538
c94079b0039dedea	-3.140508
c9511c1f044a606f	-2.140508
ca2ad2e6e992dd41	-1.621994
ca6afbb945557ab6	-2.839478
caa22e533ef23701	-2.663387
cacb88377c2e1e03	-2.186266
caf516ff953b70a4	-3.140508
cbb95560c5eb0f70	-1.936388
cbdd7ef5289d6a88	-2.663387
cbef6b3aec98166d	-3.140508
cc08cb1eff3e2da5	-1.459267
cda0306828ae9fe2	-3.140508
ce0822113ed258a6	-1.885236
ce45a46ce3980415	-1.408114
cf98221a513a3509	-2.839478
cfd2bfe2b6c6b46b	-3.140508
cfdbbb4ff2eb3900	-2.441538
d073c533e1570c18	-2.538448
d0d35f3db36318bd	-3.140508
d0d9bcc51628c975	-3.140508
d0db9c382a44de55	-3.140508
d113fa06bcfda118	-3.140508
d1927197110a6042	-2.061327
d1e9fd41a068a110	-2.663387
d1f4015be3aee908	-2.839478
d236eb7abad878f5	-2.099115
d23a31ddb095478d	-3.140508
d2917a6499f8bb1d	-3.140508
d2f27909124a60f5	-2.140508
d40f563d70d5d556	-1.778780
d4e85ed87fcfeb64	-1.818289
d4f04a8e8d8b4fc8	-1.798085
d5d1d11769675232	-3.140508
d6e3ffe1aaea4cf3	-2.441538
d7eb115e2bc3cd15	-1.079810
d80aebbb42c1e984	-1.216229
d81dad9852d455c4	-1.936388
d85c72de929434b8	-2.663387
d8b62a0d4d334a28	-1.798085
d92a8896b0010183	-2.839478
d952bf3d7838a400	-2.839478
d97931fd77d673fd	-1.885236
d9b0ef3ab266e253	-1.369656
d9b5de1b13c3e729	-2.839478
da11f3b4a6f713b7	-1.560724
db39118f98062efb	-3.140508
db7b81fd0b8e005c	-1.432938
dbf33e63d479d7e0	-0.947383
dc3662a79780a48c	-1.798085
dc9aedcbe577eeb6	-1.079810
dded52529320e879	-1.226694
df3dfeab750f97f2	-3.140508
df56df193628d516	-1.818289
df61b1ea7d42bd8c	-2.362357
df69c20fe909fa91	-3.140508
dfe21153b78ec318	-3.140508
e00dfc0bebaefdd1	-2.663387
e03feb8ff747a59f	-2.061327
e05b907e11ad3abc	-3.140508
e12edec8af623281	-1.560724
e1740ef176610b5f	-2.839478
e19bc9eb6f321b3b	-2.538448
e1c300a4c42578b9	-3.140508
e2391110f1f10905	-3.140508
e268718b6cb6fa94	-3.140508
e270576a98858640	-2.839478
e37a933af79d9788	-2.839478
e387006d4d1236ef	-2.663387
e3b7860b07016736	-2.295410
e3d01d0201ea01db	-2.663387
e3db26c2f7e454f1	-1.760297
e413bb4d94ede4bc	-2.026565
e5559848610c96bd	-2.839478
e560a64831aa52d5	-2.538448
e59d9a86f40568b1	-2.441538
e5b546ea40138a36	-2.362357
e62dd5c165315b8d	-2.441538
e637462db5221ba6	-1.369656
e640eabdd079dd56	-3.140508
e66f10733917d44e	-2.663387
e67231a5e8ad5020	-3.140508
e69b24a87d351693	-1.584206
e6f07019be64fd2a	-3.140508
e70c6c0ebe3e297a	-1.369656
e75f4e4db3283dd1	-1.560724
e7666ae43f8114d4	-2.061327
e7a9e423b74fb398	-1.040137
e7d6f2322fa2b42a	-3.140508
e8a30db92e42fad4	-2.441538
e8db0ff83e14774f	-1.760297
e915bf94e445a954	-1.158237
ea40c1d060da977c	-1.327595
ea69d9db1a129952	-2.663387
ea69fccce7a3ab46	-3.140508
eabdc43394d6f56d	-3.140508
eac73447ff9ca914	-1.818289
eb9255ea0e775a76	-2.362357
ebe527e64b786f53	-2.663387
eca4181fd2a140ea	-3.140508
ecc4341ceb6c3e31	-2.839478
ecf442de3e29ad0e	-2.663387
ed1452e7965adaa7	-2.140508
ed24e7707f3daa7f	-3.140508
ed2cf25aed290054	-3.140508
ed41ddec4c73ab4a	-2.663387
edbe6d753fe2ba92	-2.295410
ee3174f066eb4b46	-2.538448
eed1d882316954e0	-2.441538
f00b2fb5a5eb6823	-2.061327
f01558d9773fccab	-1.584206
f021b3702704a04d	-1.369656
f038b4a71da89ff1	-3.140508
f07b79ac812d17b8	-2.839478
f0d77d2ae0314106	-3.140508
f1cbbf5d928d6e05	-3.140508
f29cd92576e95522	-2.839478
f2c0638fd29e69ad	-0.925664
f411933fa89fde39	-2.295410
f48d5e645cba8fd1	-2.839478
f4f0fcb4874275c1	-2.441538
f53c2513c30dce8a	-2.140508
f5777cf2390f6089	-2.663387
f5c2b0dc90cb4351	-1.936388
f5de144572529807	-2.295410
f6f72bd55f0bd412	-2.237418
f70b2bb1047435a5	-2.295410
f7141bc437e24c91	-2.140508
f7f06ced894a7606	-1.725535
f831aea500932a78	-2.839478
f98c3de88c76d10b	-2.839478
f9d0e9a33fe3c292	-3.140508
f9d53cf8b99abc25	-3.140508
f9f30142b0e6ee82	-3.140508
fabbd8ebc0d557b5	-2.237418
fabf59fb01d3a3f1	-2.663387
fad3325520f38106	-2.839478
fb2c6dc64d27de6e	-2.663387
fb47d973079019e7	-3.140508
fb5facbc5408f0d3	-2.839478
fb951f33610d9e26	-3.140508
fbb459d08753fb43	-2.839478
fd2e6ce59f073898	-1.216229
fd9570ddcbe1d8ba	-1.725535
fde2fe0269710852	-1.798085
fe162ec807c453b3	-3.140508
fe341aede2c8b737	-1.798085
fe6f507e6b787599	-3.140508
fe7bcdcdaf012fde	-2.839478
fe96d25bf5eb850e	-2.061327
fec4e5c0e79f955b	-2.061327
ff0f62fe47688423	-1.216229
ff0fddc1eb524589	-2.663387
fff09a3799af407a	-2.663387
)TBL";

inline const FragmentScores& fragment_scores() {
  static const FragmentScores table = [] {
    std::istringstream in(
        detail::table_text("sas_fragments.txt", sas_fragments_text));
    return load_fragment_scores(in);
  }();
  return table;
}

}  // namespace tables
}  // namespace screenlab

#endif  // SCREENLAB_DATA_SAS_HPP
