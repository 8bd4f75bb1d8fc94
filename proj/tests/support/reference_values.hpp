// High-precision reference values, generated by scripts/generate_tables.py
// (mpmath, 50 digits); do not edit.
#pragma once

namespace refvals {

inline constexpr double kJ0Y0J1Y1[][5] = {
    {1.0000000000000000e-8, 0.99999999999999997, -11.800773877179531, 4.9999999999999999e-9, -63661977.236758195},
    {1.0000000000000000e-6, 0.99999999999975000, -8.8690314816594437, 4.9999999999993750e-7, -636619.77237217501},
    {0.00010000000000000000, 0.99999999750000000, -5.9372890697093370, 4.9999999937500000e-5, -6366.1980364557616},
    {0.0010000000000000000, 0.99999975000001562, -4.4714166113759233, 0.00049999993750000260, -636.62216723113943},
    {0.010000000000000000, 0.99997500015624957, -3.0054556370836460, 0.0049999375002604161, -63.678596282060656},
    {0.10000000000000000, 0.99750156206604003, -1.5342386513503668, 0.049937526036241998, -6.4589510947020270},
    {0.25000000000000000, 0.98443592929585270, -0.93157302493005869, 0.12402597732272692, -2.7041052293152824},
    {0.50000000000000000, 0.93846980724081290, -0.44451873350670656, 0.24226845767487389, -1.4714723926702431},
    {1.0000000000000000, 0.76519768655796655, 0.088256964215676958, 0.44005058574493352, -0.78121282130028872},
    {1.5000000000000000, 0.51182767173591813, 0.38244892379775884, 0.55793650791009964, -0.41230862697391130},
    {2.0000000000000000, 0.22389077914123567, 0.51037567264974512, 0.57672480775687339, -0.10703243154093755},
    {2.5000000000000000, -0.048383776468197996, 0.49807035961523189, 0.49709410246427404, 0.14591813796678580},
    {3.0000000000000000, -0.26005195490193344, 0.37685001001279038, 0.33905895852593646, 0.32467442479179998},
    {4.0000000000000000, -0.39714980986384737, -0.016940739325064992, -0.066043328023549136, 0.39792571055710001},
    {5.0000000000000000, -0.17759677131433830, -0.30851762524903378, -0.32757913759146522, 0.14786314339122684},
    {6.5000000000000000, 0.26009460558160638, -0.17324243491898234, -0.15384130140997184, -0.27409127395927545},
    {8.0000000000000000, 0.17165080713755391, 0.22352148938756622, 0.23463634685391462, -0.15806046173124749},
    {9.5000000000000000, -0.19392874768742236, 0.17121062620272384, 0.16126443075752985, 0.20317989938720767},
    {11.000000000000000, -0.17119030040719609, -0.16884732389207954, -0.17678529895672150, 0.16370553741494285},
    {11.900000000000000, 0.025049441699589564, -0.22983321394337508, -0.22898324966192407, -0.034711498334030529},
    {12.000000000000000, 0.047689310796833537, -0.22523731263436143, -0.22344710449062761, -0.057099218260896521},
    {12.100000000000000, 0.069666773606807388, -0.21843838055092546, -0.21574897337692478, -0.078736931451395821},
    {13.000000000000000, 0.20692610237706781, -0.078207864527875911, -0.070318052121778371, -0.21008140842069351},
    {15.000000000000000, -0.014224472826780773, 0.20546429603891826, 0.20510403861352276, 0.021073628036873512},
    {18.000000000000000, -0.013355805721984111, -0.18755215961141061, -0.18799488548806959, 0.0081551322782214420},
    {22.000000000000000, -0.12065147570486718, 0.11988759780067156, 0.11717778964385170, 0.12340585622650762},
    {27.000000000000000, 0.072741918005887088, 0.13521497620787235, 0.13658472451850767, -0.070251238235783236},
    {33.000000000000000, 0.097270672235509463, 0.099134825520879460, 0.10061964911511750, -0.095780122419701794},
    {40.000000000000000, 0.0073668905842372896, 0.12593641705826093, 0.12603831803758500, -0.0057935058215496329},
    {50.000000000000000, 0.055812327669251815, -0.098064995470077079, -0.097511828125175138, -0.056795668562014768},
    {64.000000000000000, 0.092590012216048114, 0.037067103232088333, 0.037791549354396375, -0.092303267679472165},
    {80.000000000000000, -0.069742165512210023, -0.055620339089770000, -0.056057296675712578, 0.069395913784588047},
    {100.00000000000000, 0.019985850304223122, -0.077244313365083152, -0.077145352014112158, -0.020372312002759793},
};

inline constexpr double kK0K1[][3] = {
    {1.0000000000000000e-8, 18.536612259610778, 99999999.999999905},
    {1.0000000000000000e-6, 13.931442073626419, 999999.99999278428},
    {0.00010000000000000000, 9.3262719134502749, 9999.9995086864050},
    {0.0010000000000000000, 7.0236888005623813, 999.99623815608557},
    {0.010000000000000000, 4.7212447301610950, 99.973894118296248},
    {0.10000000000000000, 2.4270690247020166, 9.8538447808706061},
    {0.25000000000000000, 1.5415067512483028, 3.7470259744407116},
    {0.50000000000000000, 0.92441907122766586, 1.6564411200033009},
    {1.0000000000000000, 0.42102443824070833, 0.60190723019723457},
    {1.5000000000000000, 0.21380556264752574, 0.27738780045684382},
    {2.0000000000000000, 0.11389387274953344, 0.13986588181652243},
    {2.5000000000000000, 0.062347553200366186, 0.073890816347747064},
    {3.0000000000000000, 0.034739504386279248, 0.040156431128194184},
    {4.0000000000000000, 0.011159676085853024, 0.012483498887268431},
    {5.0000000000000000, 0.0036910983340425943, 0.0040446134454521642},
    {6.5000000000000000, 0.00072593176762933535, 0.00077989439822380366},
    {8.0000000000000000, 0.00014647070522281539, 0.00015536921180500113},
    {9.5000000000000000, 3.0057884957934335e-5, 3.1602034110426746e-5},
    {11.000000000000000, 6.2430205476536771e-6, 6.5208606745808861e-6},
    {11.900000000000000, 2.4422886371722719e-6, 2.5429107953476980e-6},
    {12.000000000000000, 2.2008253973114914e-6, 2.2907574647671878e-6},
    {12.100000000000000, 1.9833013543985353e-6, 2.0636871233371845e-6},
    {13.000000000000000, 7.7845438614204963e-7, 8.0785884122023473e-7},
    {15.000000000000000, 9.8195364823964345e-8, 1.0141729369762092e-7},
    {18.000000000000000, 4.4687533373093829e-9, 4.5912496277402409e-9},
    {22.000000000000000, 7.4123516140848654e-11, 7.5789811634853311e-11},
    {27.000000000000000, 4.5128645311911032e-13, 4.5956894036992320e-13},
    {33.000000000000000, 1.0126612323859171e-15, 1.0278917122071688e-15},
    {40.000000000000000, 8.3928611000995670e-19, 8.4971319548610387e-19},
    {50.000000000000000, 3.4101677497894955e-23, 3.4441022267175556e-23},
    {64.000000000000000, 2.5077336051690366e-29, 2.5272499115022127e-29},
    {80.000000000000000, 2.5251198425054718e-36, 2.5408531275211700e-36},
    {100.00000000000000, 4.6566282291759020e-45, 4.6798537356369093e-45},
};

inline constexpr double kBesselJmn[][3] = {
    {0.0, 0.50000000000000000, 0.93846980724081290},
    {0.0, 1.0000000000000000, 0.76519768655796655},
    {0.0, 3.0000000000000000, -0.26005195490193344},
    {0.0, 7.0000000000000000, 0.30007927051955560},
    {0.0, 12.000000000000000, 0.047689310796833537},
    {0.0, 19.000000000000000, 0.14662943965965120},
    {0.0, 30.000000000000000, -0.086367983581040211},
    {0.0, 50.000000000000000, 0.055812327669251815},
    {0.0, 77.000000000000000, 0.062379777089647414},
    {0.0, 100.00000000000000, 0.019985850304223122},
    {1.0000000000000000, 0.50000000000000000, 0.24226845767487389},
    {1.0000000000000000, 1.0000000000000000, 0.44005058574493352},
    {1.0000000000000000, 3.0000000000000000, 0.33905895852593646},
    {1.0000000000000000, 7.0000000000000000, -0.0046828234823458327},
    {1.0000000000000000, 12.000000000000000, -0.22344710449062761},
    {1.0000000000000000, 19.000000000000000, -0.10570143114240927},
    {1.0000000000000000, 30.000000000000000, -0.11875106261662294},
    {1.0000000000000000, 50.000000000000000, -0.097511828125175138},
    {1.0000000000000000, 77.000000000000000, 0.066560642470572060},
    {1.0000000000000000, 100.00000000000000, -0.077145352014112158},
    {2.0000000000000000, 0.50000000000000000, 0.030604023458682641},
    {2.0000000000000000, 1.0000000000000000, 0.11490348493190048},
    {2.0000000000000000, 3.0000000000000000, 0.48609126058589108},
    {2.0000000000000000, 7.0000000000000000, -0.30141722008594012},
    {2.0000000000000000, 12.000000000000000, -0.084930494878604805},
    {2.0000000000000000, 19.000000000000000, -0.15775590609569428},
    {2.0000000000000000, 30.000000000000000, 0.078451246073265349},
    {2.0000000000000000, 50.000000000000000, -0.059712800794258821},
    {2.0000000000000000, 77.000000000000000, -0.060650929233268919},
    {2.0000000000000000, 100.00000000000000, -0.021528757344505366},
    {3.0000000000000000, 0.50000000000000000, 0.0025637299945872441},
    {3.0000000000000000, 1.0000000000000000, 0.019563353982668406},
    {3.0000000000000000, 3.0000000000000000, 0.30906272225525164},
    {3.0000000000000000, 7.0000000000000000, -0.16755558799533424},
    {3.0000000000000000, 12.000000000000000, 0.19513693953109268},
    {3.0000000000000000, 19.000000000000000, 0.072489661438052575},
    {3.0000000000000000, 30.000000000000000, 0.12921122875972498},
    {3.0000000000000000, 50.000000000000000, 0.092734804061634432},
    {3.0000000000000000, 77.000000000000000, -0.069711340093079536},
    {3.0000000000000000, 100.00000000000000, 0.076284201720331943},
    {4.0000000000000000, 0.50000000000000000, 0.00016073647636428760},
    {4.0000000000000000, 1.0000000000000000, 0.0024766389641099550},
    {4.0000000000000000, 3.0000000000000000, 0.13203418392461221},
    {4.0000000000000000, 7.0000000000000000, 0.15779814466136792},
    {4.0000000000000000, 12.000000000000000, 0.18249896464415114},
    {4.0000000000000000, 19.000000000000000, 0.18064737812876352},
    {4.0000000000000000, 30.000000000000000, -0.052609000321320352},
    {4.0000000000000000, 50.000000000000000, 0.070840977281654952},
    {4.0000000000000000, 77.000000000000000, 0.055218876758483501},
    {4.0000000000000000, 100.00000000000000, 0.026105809447725282},
    {5.0000000000000000, 0.50000000000000000, 8.0536272413574741e-6},
    {5.0000000000000000, 1.0000000000000000, 0.00024975773021123443},
    {5.0000000000000000, 3.0000000000000000, 0.043028434877047584},
    {5.0000000000000000, 7.0000000000000000, 0.34789632475118329},
    {5.0000000000000000, 12.000000000000000, -0.073470963101658581},
    {5.0000000000000000, 19.000000000000000, 0.0035723925109004855},
    {5.0000000000000000, 30.000000000000000, -0.14324029551207708},
    {5.0000000000000000, 50.000000000000000, -0.081400247696569640},
    {5.0000000000000000, 77.000000000000000, 0.075448366249805095},
    {5.0000000000000000, 100.00000000000000, -0.074195736964513921},
    {6.0000000000000000, 0.50000000000000000, 3.3606846286188488e-7},
    {6.0000000000000000, 1.0000000000000000, 2.0938338002389270e-5},
    {6.0000000000000000, 3.0000000000000000, 0.011393932332213069},
    {6.0000000000000000, 7.0000000000000000, 0.33919660498317963},
    {6.0000000000000000, 12.000000000000000, -0.24372476722886663},
    {6.0000000000000000, 19.000000000000000, -0.17876717154407905},
    {6.0000000000000000, 30.000000000000000, 0.0048622351506279933},
    {6.0000000000000000, 50.000000000000000, -0.087121026820968880},
    {6.0000000000000000, 77.000000000000000, -0.045420387635132190},
    {6.0000000000000000, 100.00000000000000, -0.033525383144176674},
    {7.0000000000000000, 0.50000000000000000, 1.2015867327763023e-8},
    {7.0000000000000000, 1.0000000000000000, 1.5023258174368082e-6},
    {7.0000000000000000, 3.0000000000000000, 0.0025472944518046938},
    {7.0000000000000000, 7.0000000000000000, 0.23358356950569608},
    {7.0000000000000000, 12.000000000000000, -0.17025380412720805},
    {7.0000000000000000, 19.000000000000000, -0.11647797453873989},
    {7.0000000000000000, 30.000000000000000, 0.14518518957232827},
    {7.0000000000000000, 50.000000000000000, 0.060491201259537108},
    {7.0000000000000000, 77.000000000000000, -0.082526868218916605},
    {7.0000000000000000, 100.00000000000000, 0.070172690987212720},
    {8.0000000000000000, 0.50000000000000000, 3.7582231547976100e-10},
    {8.0000000000000000, 1.0000000000000000, 9.4223441726045005e-8},
    {8.0000000000000000, 3.0000000000000000, 0.00049344177620883479},
    {8.0000000000000000, 7.0000000000000000, 0.12797053402821254},
    {8.0000000000000000, 12.000000000000000, 0.045095329080457240},
    {8.0000000000000000, 19.000000000000000, 0.092941295568165452},
    {8.0000000000000000, 30.000000000000000, 0.062890853316458535},
    {8.0000000000000000, 50.000000000000000, 0.10405856317363927},
    {8.0000000000000000, 77.000000000000000, 0.030415502504420080},
    {8.0000000000000000, 100.00000000000000, 0.043349559882386455},
    {9.0000000000000000, 0.50000000000000000, 1.0446767589328980e-11},
    {9.0000000000000000, 1.0000000000000000, 5.2492501799118750e-9},
    {9.0000000000000000, 3.0000000000000000, 8.4395021309091779e-5},
    {9.0000000000000000, 7.0000000000000000, 0.058920508273075428},
    {9.0000000000000000, 12.000000000000000, 0.23038090956781770},
    {9.0000000000000000, 19.000000000000000, 0.19474432870140553},
    {9.0000000000000000, 30.000000000000000, -0.11164340113688372},
    {9.0000000000000000, 50.000000000000000, -0.027192461043972542},
    {9.0000000000000000, 77.000000000000000, 0.088846972635419479},
    {9.0000000000000000, 100.00000000000000, -0.063236761406030887},
    {10.000000000000000, 0.50000000000000000, 2.6131773608228031e-13},
    {10.000000000000000, 1.0000000000000000, 2.6306151236874532e-10},
    {10.000000000000000, 3.0000000000000000, 1.2928351645715884e-5},
    {10.000000000000000, 7.0000000000000000, 0.023539344388267135},
    {10.000000000000000, 12.000000000000000, 0.30047603527126931},
    {10.000000000000000, 19.000000000000000, 0.091553331622639788},
    {10.000000000000000, 30.000000000000000, -0.12987689399858877},
    {10.000000000000000, 50.000000000000000, -0.11384784914946939},
    {10.000000000000000, 77.000000000000000, -0.0096460803299064354},
    {10.000000000000000, 100.00000000000000, -0.054732176935472015},
    {11.000000000000000, 0.50000000000000000, 5.9418539622324614e-15},
    {11.000000000000000, 1.0000000000000000, 1.1980067463031371e-11},
    {11.000000000000000, 3.0000000000000000, 1.7939896623474465e-6},
    {11.000000000000000, 7.0000000000000000, 0.0083347614076878145},
    {11.000000000000000, 12.000000000000000, 0.27041248255096448},
    {11.000000000000000, 19.000000000000000, -0.098372400677574175},
    {11.000000000000000, 30.000000000000000, 0.025058805137824544},
    {11.000000000000000, 50.000000000000000, -0.018346678615815212},
    {11.000000000000000, 77.000000000000000, -0.091352448045784786},
    {11.000000000000000, 100.00000000000000, 0.052290326018936484},
    {12.000000000000000, 0.50000000000000000, 1.2383825594799327e-16},
    {12.000000000000000, 1.0000000000000000, 4.9997181794484053e-13},
    {12.000000000000000, 3.0000000000000000, 2.2757254483205720e-7},
    {12.000000000000000, 7.0000000000000000, 0.0026556200358945681},
    {12.000000000000000, 12.000000000000000, 0.19528018273883224},
    {12.000000000000000, 19.000000000000000, -0.20545821661772568},
    {12.000000000000000, 30.000000000000000, 0.14825335109966010},
    {12.000000000000000, 50.000000000000000, 0.10577531055851069},
    {12.000000000000000, 77.000000000000000, -0.016454619111746361},
    {12.000000000000000, 100.00000000000000, 0.066236048659638041},
    {13.000000000000000, 0.50000000000000000, 2.3823232712155035e-18},
    {13.000000000000000, 1.0000000000000000, 1.9256167644801729e-14},
    {13.000000000000000, 3.0000000000000000, 2.6590696309011085e-8},
    {13.000000000000000, 7.0000000000000000, 0.00077022157252213309},
    {13.000000000000000, 12.000000000000000, 0.12014788292670000},
    {13.000000000000000, 19.000000000000000, -0.16115376768165826},
    {13.000000000000000, 30.000000000000000, 0.093543875741903536},
    {13.000000000000000, 50.000000000000000, 0.069118827683900345},
    {13.000000000000000, 77.000000000000000, 0.086223735595370336},
    {13.000000000000000, 100.00000000000000, -0.036393674340623354},
    {14.000000000000000, 0.50000000000000000, 4.2554155212913638e-20},
    {14.000000000000000, 1.0000000000000000, 6.8854082000442258e-16},
    {14.000000000000000, 3.0000000000000000, 2.8801565127055379e-9},
    {14.000000000000000, 7.0000000000000000, 0.00020520294775906913},
    {14.000000000000000, 12.000000000000000, 0.065040230269017762},
    {14.000000000000000, 19.000000000000000, -0.015067991788754044},
    {14.000000000000000, 30.000000000000000, -0.067181992123343702},
    {14.000000000000000, 50.000000000000000, -0.069833520162882513},
    {14.000000000000000, 77.000000000000000, 0.045569127234858422},
    {14.000000000000000, 100.00000000000000, -0.075698403988200113},
    {15.000000000000000, 0.50000000000000000, 7.0942070766020670e-22},
    {15.000000000000000, 1.0000000000000000, 2.2975315322103444e-17},
    {15.000000000000000, 3.0000000000000000, 2.9076447624060239e-10},
    {15.000000000000000, 7.0000000000000000, 5.0590218514143446e-5},
    {15.000000000000000, 12.000000000000000, 0.031612654367674776},
    {15.000000000000000, 19.000000000000000, 0.13894830609823124},
    {15.000000000000000, 30.000000000000000, -0.15624706839035766},
    {15.000000000000000, 50.000000000000000, -0.10822559897511455},
    {15.000000000000000, 77.000000000000000, -0.069653143873603637},
    {15.000000000000000, 100.00000000000000, 0.015198121223927323},
    {16.000000000000000, 0.50000000000000000, 1.1087246698764160e-23},
    {16.000000000000000, 1.0000000000000000, 7.1863965868074928e-19},
    {16.000000000000000, 3.0000000000000000, 2.7488249700485931e-11},
    {16.000000000000000, 7.0000000000000000, 1.1612274444402776e-5},
    {16.000000000000000, 12.000000000000000, 0.013991405650169178},
    {16.000000000000000, 19.000000000000000, 0.23446005404911917},
    {16.000000000000000, 30.000000000000000, -0.089065076267013956},
    {16.000000000000000, 50.000000000000000, 0.0048981607778137817},
    {16.000000000000000, 77.000000000000000, -0.072706715757041658},
    {16.000000000000000, 100.00000000000000, 0.080257840355378310},
    {17.000000000000000, 0.50000000000000000, 1.6308106069952961e-25},
    {17.000000000000000, 1.0000000000000000, 2.1153755680532613e-20},
    {17.000000000000000, 3.0000000000000000, 2.4435205645808768e-12},
    {17.000000000000000, 7.0000000000000000, 2.4944646602692426e-6},
    {17.000000000000000, 12.000000000000000, 0.0056977606994430316},
    {17.000000000000000, 19.000000000000000, 0.25593178493186419},
    {17.000000000000000, 30.000000000000000, 0.061244320372209438},
    {17.000000000000000, 50.000000000000000, 0.11136042187291537},
    {17.000000000000000, 77.000000000000000, 0.039437365896651260},
    {17.000000000000000, 100.00000000000000, 0.010484387689793737},
    {18.000000000000000, 0.50000000000000000, 2.2654288038538561e-27},
    {18.000000000000000, 1.0000000000000000, 5.8803445735957583e-22},
    {18.000000000000000, 3.0000000000000000, 2.0498336476400599e-13},
    {18.000000000000000, 7.0000000000000000, 5.0369676261925971e-7},
    {18.000000000000000, 12.000000000000000, 0.0021522496649194117},
    {18.000000000000000, 19.000000000000000, 0.22352314003947992},
    {18.000000000000000, 30.000000000000000, 0.15847530602218465},
    {18.000000000000000, 50.000000000000000, 0.070826926095768671},
    {18.000000000000000, 77.000000000000000, 0.090120617581537019},
    {18.000000000000000, 100.00000000000000, -0.076693148540848440},
    {19.000000000000000, 0.50000000000000000, 2.9813177948026666e-29},
    {19.000000000000000, 1.0000000000000000, 1.5484784412116534e-23},
    {19.000000000000000, 3.0000000000000000, 1.6279812587195155e-14},
    {19.000000000000000, 7.0000000000000000, 9.5975833201235959e-8},
    {19.000000000000000, 12.000000000000000, 0.00075898829531520356},
    {19.000000000000000, 19.000000000000000, 0.16758574356399249},
    {19.000000000000000, 30.000000000000000, 0.12892604685441215},
    {19.000000000000000, 50.000000000000000, -0.060365035083961929},
    {19.000000000000000, 77.000000000000000, 0.0026969488167946190},
    {19.000000000000000, 100.00000000000000, -0.038093921164499175},
    {20.000000000000000, 0.50000000000000000, 3.7272019617047145e-31},
    {20.000000000000000, 1.0000000000000000, 3.8735030085246577e-25},
    {20.000000000000000, 3.0000000000000000, 1.2275946737992986e-15},
    {20.000000000000000, 7.0000000000000000, 1.7314903330306922e-8},
    {20.000000000000000, 12.000000000000000, 0.00025121327024539953},
    {20.000000000000000, 19.000000000000000, 0.11164834708850507},
    {20.000000000000000, 30.000000000000000, 0.0048310199934040645},
    {20.000000000000000, 50.000000000000000, -0.11670435275957974},
    {20.000000000000000, 77.000000000000000, -0.088789655827794220},
    {20.000000000000000, 100.00000000000000, 0.062217458498338753},
};

inline constexpr double kIntQuad[][5] = {
    {0.0, 4.0000000000000000, -3.2274112777602188, -1.5419075477690215e-45, -1.0000000000000000},
    {1.0000000000000000, 2.6666666666666667, 0.29283692593763194, -0.88888888888888889, -0.39390860494217361},
    {2.0000000000000000, 4.2666666666666667, 1.3929835259446555, -2.1333333333333333, -0.96315842963899444},
    {3.0000000000000000, 9.1428571428571429, 3.8883660589970510, -5.4857142857142857, -2.6987339211125163},
    {4.0000000000000000, 22.755555555555556, 10.968998558124583, -15.170370370370370, -7.9447644708484872},
    {5.0000000000000000, 62.060606060606061, 32.203543664796459, -44.329004329004329, -24.269074169969023},
    {6.0000000000000000, 180.04395604395604, 98.087142853854257, -135.03296703296703, -76.378543953577506},
    {7.0000000000000000, 546.13333333333333, 308.00855798758258, -424.77037037037037, -246.30459859939550},
    {8.0000000000000000, 1713.3594771241830, 991.63780164073922, -1370.6875816993464, -810.44383608383321},
    {9.0000000000000000, 5518.8210526315789, 3258.9499340868917, -4515.3990430622010, -2712.0236737787922},
    {10.000000000000000, 18157.160173160173, 10895.632243672542, -15130.966810966811, -9205.7849264851748},
};

inline constexpr double kDiagSingleLayer[][4] = {
    {2.0000000000000000, 0.098017140329560600, nan, nan},
    {-2.0000000000000000, 0.098017140329560600, nan, nan},
    {8.0000000000000000, 0.098017140329560600, nan, nan},
    {-8.0000000000000000, 0.098017140329560600, nan, nan},
    {2.0000000000000000, 0.38268343236508980, nan, nan},
    {-2.0000000000000000, 0.38268343236508980, nan, nan},
    {3.5000000000000000, 0.19509032201612825, nan, nan},
    {-3.5000000000000000, 0.19509032201612825, nan, nan},
};

inline constexpr double kDiskRootsN16[][2] = {
    {0.0, 1.9879951237713759},
    {0.0, 3.7409249351004477},
    {0.0, 6.5810305497202630},
    {1.0000000000000000, 2.6129299639027919},
    {1.0000000000000000, 4.2958099366584559},
    {1.0000000000000000, 5.9885009101069614},
    {2.0000000000000000, 3.2266479478902524},
    {2.0000000000000000, 4.9418345576926670},
    {2.0000000000000000, 6.6038344679396439},
};

inline constexpr double kDiskRootsN9[][2] = {
    {0.0, 2.7633015985593644},
    {1.0000000000000000, 3.5429462951141292},
    {2.0000000000000000, 4.3477974441937575},
};

}  // namespace refvals