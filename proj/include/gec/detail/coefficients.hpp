#pragma once

// Coefficient tables. Entries are 1-based (row, col) for the stage matrix and
// 1-based stage indices for abscissae and weights; absent entries are zero.

namespace gec::detail {

struct MatrixEntry {
  int row;
  int col;
  long double value;
};

struct VectorEntry {
  int index;
  long double value;
};

// Dormand-Prince 8(5,3), as distributed with Hairer & Wanner's DOP853.
inline constexpr VectorEntry kDp853C[] = {
    {2, 0.526001519587677318785587544488E-01L},
    {3, 0.789002279381515978178381316732E-01L},
    {4, 0.118350341907227396726757197510E+00L},
    {5, 0.281649658092772603273242802490E+00L},
    {6, 0.333333333333333333333333333333E+00L},
    {7, 0.25E+00L},
    {8, 0.307692307692307692307692307692E+00L},
    {9, 0.651282051282051282051282051282E+00L},
    {10, 0.6E+00L},
    {11, 0.857142857142857142857142857142E+00L},
    {12, 1.0L},
};

inline constexpr MatrixEntry kDp853A[] = {
    {2, 1, 5.26001519587677318785587544488E-2L},
    {3, 1, 1.97250569845378994544595329183E-2L},
    {3, 2, 5.91751709536136983633785987549E-2L},
    {4, 1, 2.95875854768068491816892993775E-2L},
    {4, 3, 8.87627564304205475450678981324E-2L},
    {5, 1, 2.41365134159266685502369798665E-1L},
    {5, 3, -8.84549479328286085344864962717E-1L},
    {5, 4, 9.24834003261792003115737966543E-1L},
    {6, 1, 3.7037037037037037037037037037E-2L},
    {6, 4, 1.70828608729473871279604482173E-1L},
    {6, 5, 1.25467687566822425016691814123E-1L},
    {7, 1, 3.7109375E-2L},
    {7, 4, 1.70252211019544039314978060272E-1L},
    {7, 5, 6.02165389804559606850219397283E-2L},
    {7, 6, -1.7578125E-2L},
    {8, 1, 3.70920001185047927108779319836E-2L},
    {8, 4, 1.70383925712239993810214054705E-1L},
    {8, 5, 1.07262030446373284651809199168E-1L},
    {8, 6, -1.53194377486244017527936158236E-2L},
    {8, 7, 8.27378916381402288758473766002E-3L},
    {9, 1, 6.24110958716075717114429577812E-1L},
    {9, 4, -3.36089262944694129406857109825E0L},
    {9, 5, -8.68219346841726006818189891453E-1L},
    {9, 6, 2.75920996994467083049415600797E1L},
    {9, 7, 2.01540675504778934086186788979E1L},
    {9, 8, -4.34898841810699588477366255144E1L},
    {10, 1, 4.77662536438264365890433908527E-1L},
    {10, 4, -2.48811461997166764192642586468E0L},
    {10, 5, -5.90290826836842996371446475743E-1L},
    {10, 6, 2.12300514481811942347288949897E1L},
    {10, 7, 1.52792336328824235832596922938E1L},
    {10, 8, -3.32882109689848629194453265587E1L},
    {10, 9, -2.03312017085086261358222928593E-2L},
    {11, 1, -9.3714243008598732571704021658E-1L},
    {11, 4, 5.18637242884406370830023853209E0L},
    {11, 5, 1.09143734899672957818500254654E0L},
    {11, 6, -8.14978701074692612513997267357E0L},
    {11, 7, -1.85200656599969598641566180701E1L},
    {11, 8, 2.27394870993505042818970056734E1L},
    {11, 9, 2.49360555267965238987089396762E0L},
    {11, 10, -3.0467644718982195003823669022E0L},
    {12, 1, 2.27331014751653820792359768449E0L},
    {12, 4, -1.05344954667372501984066689879E1L},
    {12, 5, -2.00087205822486249909675718444E0L},
    {12, 6, -1.79589318631187989172765950534E1L},
    {12, 7, 2.79488845294199600508499808837E1L},
    {12, 8, -2.85899827713502369474065508674E0L},
    {12, 9, -8.87285693353062954433549289258E0L},
    {12, 10, 1.23605671757943030647266201528E1L},
    {12, 11, 6.43392746015763530355970484046E-1L},
};

inline constexpr VectorEntry kDp853BVeryHigh[] = {
    {1, 5.42937341165687622380535766363E-2L},
    {6, 4.45031289275240888144113950566E0L},
    {7, 1.89151789931450038304281599044E0L},
    {8, -5.8012039600105847814672114227E0L},
    {9, 3.1116436695781989440891606237E-1L},
    {10, -1.52160949662516078556178806805E-1L},
    {11, 2.01365400804030348374776537501E-1L},
    {12, 4.47106157277725905176885569043E-2L},
};

// b_very_high - b_high (the eighth-minus-fifth error weights).
inline constexpr VectorEntry kDp853HighDefect[] = {
    {1, 0.1312004499419488073250102996E-01L},
    {6, -0.1225156446376204440720569753E+01L},
    {7, -0.4957589496572501915214079952E+00L},
    {8, 0.1664377182454986536961530415E+01L},
    {9, -0.3503288487499736816886487290E+00L},
    {10, 0.3341791187130174790297318841E+00L},
    {11, 0.8192320648511571246570742613E-01L},
    {12, -0.2235530786388629525884427845E-01L},
};

inline constexpr VectorEntry kDp853BLow[] = {
    {1, 0.244094488188976377952755905512E+00L},
    {9, 0.733846688281611857341361741547E+00L},
    {12, 0.220588235294117647058823529412E-01L},
};

// Order-7 member of Prince & Dormand's RK8(7)13M pair. The thirteenth stage
// carries zero weight in the order-7 formula, so only twelve are kept.
inline constexpr VectorEntry kRk7C[] = {
    {2, 1.0L / 18.0L},
    {3, 1.0L / 12.0L},
    {4, 1.0L / 8.0L},
    {5, 5.0L / 16.0L},
    {6, 3.0L / 8.0L},
    {7, 59.0L / 400.0L},
    {8, 93.0L / 200.0L},
    {9, 5490023248.0L / 9719169821.0L},
    {10, 13.0L / 20.0L},
    {11, 1201146811.0L / 1299019798.0L},
    {12, 1.0L},
};

inline constexpr MatrixEntry kRk7A[] = {
    {2, 1, 1.0L / 18.0L},
    {3, 1, 1.0L / 48.0L},
    {3, 2, 1.0L / 16.0L},
    {4, 1, 1.0L / 32.0L},
    {4, 3, 3.0L / 32.0L},
    {5, 1, 5.0L / 16.0L},
    {5, 3, -75.0L / 64.0L},
    {5, 4, 75.0L / 64.0L},
    {6, 1, 3.0L / 80.0L},
    {6, 4, 3.0L / 16.0L},
    {6, 5, 3.0L / 20.0L},
    {7, 1, 29443841.0L / 614563906.0L},
    {7, 4, 77736538.0L / 692538347.0L},
    {7, 5, -28693883.0L / 1125000000.0L},
    {7, 6, 23124283.0L / 1800000000.0L},
    {8, 1, 16016141.0L / 946692911.0L},
    {8, 4, 61564180.0L / 158732637.0L},
    {8, 5, 22789713.0L / 633445777.0L},
    {8, 6, 545815736.0L / 2771057229.0L},
    {8, 7, -180193667.0L / 1043307555.0L},
    {9, 1, 39632708.0L / 573591083.0L},
    {9, 4, -433636366.0L / 683701615.0L},
    {9, 5, -421739975.0L / 2616292301.0L},
    {9, 6, 100302831.0L / 723423059.0L},
    {9, 7, 790204164.0L / 839813087.0L},
    {9, 8, 800635310.0L / 3783071287.0L},
    {10, 1, 246121993.0L / 1340847787.0L},
    {10, 4, -37695042795.0L / 15268766246.0L},
    {10, 5, -309121744.0L / 1061227803.0L},
    {10, 6, -12992083.0L / 490766935.0L},
    {10, 7, 6005943493.0L / 2108947869.0L},
    {10, 8, 393006217.0L / 1396673457.0L},
    {10, 9, 123872331.0L / 1001029789.0L},
    {11, 1, -1028468189.0L / 846180014.0L},
    {11, 4, 8478235783.0L / 508512852.0L},
    {11, 5, 1311729495.0L / 1432422823.0L},
    {11, 6, -10304129995.0L / 1701304382.0L},
    {11, 7, -48777925059.0L / 3047939560.0L},
    {11, 8, 15336726248.0L / 1032824649.0L},
    {11, 9, -45442868181.0L / 3398467696.0L},
    {11, 10, 3065993473.0L / 597172653.0L},
    {12, 1, 185892177.0L / 718116043.0L},
    {12, 4, -3185094517.0L / 667107341.0L},
    {12, 5, -477755414.0L / 1098053517.0L},
    {12, 6, -703635378.0L / 230739211.0L},
    {12, 7, 5731566787.0L / 1027545527.0L},
    {12, 8, 5232866602.0L / 850066563.0L},
    {12, 9, -4093664535.0L / 808688257.0L},
    {12, 10, 3962137247.0L / 1805957418.0L},
    {12, 11, 65686358.0L / 487910083.0L},
};

inline constexpr VectorEntry kRk7B[] = {
    {1, 13451932.0L / 455176623.0L},
    {6, -808719846.0L / 976000145.0L},
    {7, 1757004468.0L / 5645159321.0L},
    {8, 656045339.0L / 265891186.0L},
    {9, -3867574721.0L / 1518517206.0L},
    {10, 465885868.0L / 322736535.0L},
    {11, 53011238.0L / 667516719.0L},
    {12, 2.0L / 45.0L},
};

}  // namespace gec::detail
