#ifndef MLFRAC_ML_ORACLE_TABLE_HPP
#define MLFRAC_ML_ORACLE_TABLE_HPP

#include <array>
#include <complex>

// E_{alpha,beta}(z) from an 80-digit series summation, alpha and beta taken as the exact doubles.
// Radii cover [0, 2 rho] with rho = 32^alpha; arguments 0, +-alpha pi / 2 and pi.
struct MLOracleRow {
  double alpha;
  double beta;
  std::complex<double> z;
  std::complex<double> value;
};

inline const std::array<MLOracleRow, 200> kMLOracle = {{
    {1.1, 1.0, {0.0, 0.0}, {1.0, 0.0}},
    {1.1, 1.0, {-8.750639103828465, 55.24936089617157}, {0.41194089420715327105, 0.80863233840782705206}},
    {1.1, 1.0, {-3.342446714378555, -21.103378005628198}, {-0.81192407861188943926, 0.41379960491291353054}},
    {1.1, 1.0, {-77.30448539646925, 0.0}, {-0.0012465941443057043179, 0.0}},
    {1.1, 2.0, {42.73286853404026, 0.0}, {465188746898.66593194, 0.0}},
    {1.1, 2.0, {-1.2767010393071994, 8.060773120713023}, {0.075277593283950913642, -0.007273646236980104007}},
    {1.1, 2.0, {-10.027340143135664, -63.3101340168846}, {0.00081177216507572617253, 0.0062214532865920396853}},
    {1.1, 2.0, {-29.527685938631393, 0.0}, {0.031901657042821468346, 0.0}},
    {1.1, 1.1, {85.46573706808051, 0.0}, {3.5881098960319778693e+24, 0.0}},
    {1.1, 1.1, {-7.96159446806431, 50.26752913196942}, {-0.39986389490152665521, -0.49455026588083809673}},
    {1.1, 1.1, {-2.5534020786143987, -16.121546241426046}, {0.70436013267361227158, 0.042690995045926937932}},
    {1.1, 1.1, {-72.26055447267166, 0.0}, {-0.000021006653216010193566, 0.0}},
    {1.1, 0.10000000000000009, {37.688937610242654, 0.0}, {10383130516248.041186, 0.0}},
    {1.1, 0.10000000000000009, {-0.4876564035430432, 3.078941356510869}, {-1.0852122762900785648, -2.0461927118403183893}},
    {1.1, 0.10000000000000009, {-9.23829550737151, -58.32830225268244}, {-6.0204481291884958454, 24.856523164812461329}},
    {1.1, 0.10000000000000009, {-24.48375501483379, 0.0}, {0.00049931992336307437876, 0.0}},
    {1.1, 0.8999999999999999, {80.42180614428291, 0.0}, {3.7239056130971136176e+23, 0.0}},
    {1.1, 0.8999999999999999, {-7.172549832300153, 45.28569736776727}, {0.55613958019435664571, 1.1568831585282409437}},
    {1.1, 0.8999999999999999, {-1.7643574428502424, -11.139714477223892}, {-1.1061399179028296552, -0.23080189396698857682}},
    {1.1, 0.8999999999999999, {-67.21662354887405, 0.0}, {-0.0026253954149641041714, 0.0}},
    {1.5, 1.0, {130.58002674578017, 0.0}, {100468500825.95711727, 0.0}},
    {1.5, 1.0, {-250.550723519435, 250.55072351943502}, {0.6538432339255455865, -0.12782999021418431096}},
    {1.5, 1.0, {-152.7674246394081, -152.76742463940812}, {-0.082869654250142307884, 0.66253414500393683092}},
    {1.5, 1.0, {-77.75929636414473, 0.0}, {-0.0037673093227913804172, 0.0}},
    {1.5, 2.0, {301.5115008819412, 0.0}, {499862585522109630.45, 0.0}},
    {1.5, 2.0, {-115.41752799932738, 115.41752799932739}, {-0.019871581938845818053, 0.0019564821324792404905}},
    {1.5, 2.0, {-17.63422911930047, -17.634229119300475}, {0.076671504543453973705, -0.065122017534318850444}},
    {1.5, 2.0, {-248.69077050030634, 0.0}, {0.0022685703932194298407, 0.0}},
    {1.5, 1.5, {110.40430305058977, 0.0}, {1373198858.3621938624, 0.0}},
    {1.5, 1.5, {-236.2843324792193, 236.28433247921933}, {-0.093206366764572776849, -0.02328901013365348425}},
    {1.5, 1.5, {-138.50103359919285, -138.50103359919288}, {0.0051692875927832651883, -0.11466657879405491515}},
    {1.5, 1.5, {-57.58357266895497, 0.0}, {0.000026507913662577227229, 0.0}},
    {1.5, 0.5, {281.33577718675076, 0.0}, {19363009781138145748.0, 0.0}},
    {1.5, 0.5, {-101.15113695911168, 101.1511369591117}, {-3.4540190557741798686, 0.47569350563438502336}},
    {1.5, 0.5, {-3.3678380790852316, -3.367838079085232}, {-1.0730618864003518444, 0.53145690740164432208}},
    {1.5, 0.5, {-228.51504680511596, 0.0}, {0.000020198654160241468602, 0.0}},
    {1.5, 0.5, {90.22857935539938, 0.0}, {1630732623.8017438215, 0.0}},
    {1.5, 0.5, {-222.01794143900406, 222.0179414390041}, {-4.485082143535925659, 0.64459094547308279999}},
    {1.5, 0.5, {-124.23464255897761, -124.23464255897764}, {2.760392702650265525, -2.5144236284863048389}},
    {1.5, 0.5, {-37.40784897376457, 0.0}, {-0.0035809941465470894893, 0.0}},
    {1.9, 1.0, {1044.6402139662412, 0.0}, {37642674209347416.45, 0.0}},
    {1.9, 1.0, {-485.44323320257, 76.88665480012247}, {0.30576365088493329865, 0.42827257063111240045}},
    {1.9, 1.0, {-1369.4330075413172, -216.89688046137817}, {0.25647036820835984837, -0.45957321433191230013}},
    {1.9, 1.0, {-833.357292439702, 0.0}, {-0.059830492396865092741, 0.0}},
    {1.9, 2.0, {280.2114226408358, 0.0}, {7331225.7131453977396, 0.0}},
    {1.9, 2.0, {-1160.751329382672, 183.84494966023613}, {-0.0054522309118914805221, 0.01147788093357591004}},
    {1.9, 2.0, {-614.4156031339808, -97.31387142903803}, {-0.016927229335721773394, -0.0052349988273213399816}},
    {1.9, 2.0, {-68.92850111429668, 0.0}, {0.014941362558922783446, 0.0}},
    {1.9, 1.9, {963.9373191854795, 0.0}, {290965340960366.77501, 0.0}},
    {1.9, 1.9, {-405.73392497533564, 64.26194062789598}, {-0.029277252082861688132, -0.010258537474805040903}},
    {1.9, 1.9, {-1289.7236993140828, -204.27216628915167}, {-0.0031628253868473803787, 0.017298868014984656229}},
    {1.9, 1.9, {-752.6543976589404, 0.0}, {0.002884628924615297384, 0.0}},
    {1.9, 0.8999999999999999, {199.50852786007422, 0.0}, {7833222.2916731129451, 0.0}},
    {1.9, 0.8999999999999999, {-1081.0420211554376, 171.22023548800962}, {-0.46677699466828410624, 0.59966682906734381817}},
    {1.9, 0.8999999999999999, {-534.7062949067515, -84.68915725681235}, {-0.58398070285062002853, -0.44173317587976153848}},
    {1.9, 0.8999999999999999, {-1436.380294203584, 0.0}, {-0.011824330520818017303, 0.0}},
    {1.9, 0.10000000000000009, {883.234424404718, 0.0}, {35173233721724498.92, 0.0}},
    {1.9, 0.10000000000000009, {-326.02461674810127, 51.6372264556695}, {-7.0637037853077248569, -4.4337345602852538246}},
    {1.9, 0.10000000000000009, {-1210.0143910868433, -191.6474521169244}, {14.283977850532792346, 5.4378775593504808111}},
    {1.9, 0.10000000000000009, {-671.9515028781788, 0.0}, {1.346795992196747646, 0.0}},
    {1.1, 1.0, {7.425352067457046, 0.0}, {442.68747380347501588, 0.0}},
    {1.1, 1.0, {-9.912220082236455, 62.58329455801273}, {0.78521031565046349245, -0.45930009857793709753}},
    {1.1, 1.0, {-4.504027692786622, -28.43731166746984}, {-0.64790924602709910143, -0.63470657284574127286}},
    {1.1, 1.0, {-84.72983746392646, 0.0}, {-0.0011343405259826892248, 0.0}},
    {1.1, 2.0, {50.158220601497305, 0.0}, {47062836074137.097168, 0.0}},
    {1.1, 2.0, {-2.4382820177151907, 15.394706782554188}, {-0.022072636363838293974, -0.0088103980811033155802}},
    {1.1, 2.0, {-11.18892112154363, -70.6440676787256}, {-0.016419878847869875364, -0.01629557028231183747}},
    {1.1, 2.0, {-36.9530380060886, 0.0}, {0.025455761963917188216, 0.0}},
    {1.1, 1.1, {2.3814211436594444, 0.0}, {7.5817025866800725405, 0.0}},
    {1.1, 1.1, {-9.1231754464723, 57.60146279381058}, {-0.4805699035364499764, 0.40449810501743048925}},
    {1.1, 1.1, {-3.714983057022465, -23.455479903267683}, {0.24680638253720070276, 0.63547616612567747486}},
    {1.1, 1.1, {-79.68590654012885, 0.0}, {-0.000017168188141122148129, 0.0}},
    {1.1, 0.10000000000000009, {45.1142896776997, 0.0}, {1480193384796445.9539, 0.0}},
    {1.1, 0.10000000000000009, {-1.6492373819510346, 10.412875018352036}, {-5.4843340193248861506, -2.9916876645974427283}},
    {1.1, 0.10000000000000009, {-10.399876485779474, -65.66223591452345}, {-26.778807485599927794, -8.7678252709606177663}},
    {1.1, 0.10000000000000009, {-31.909107082290998, 0.0}, {0.00026940397824047180619, 0.0}},
    {1.1, 0.8999999999999999, {87.84715821173997, 0.0}, {3.4189602261007006719e+25, 0.0}},
    {1.1, 0.8999999999999999, {-8.334130810708144, 52.619631029608435}, {1.1882651098569476323, -0.5414825180967040864}},
    {1.1, 0.8999999999999999, {-2.9259384212583095, -18.473648139065535}, {-0.40937812797324918913, -1.1045628557947376902}},
    {1.1, 0.8999999999999999, {-74.64197561633125, 0.0}, {-0.0023577102699321210812, 0.0}},
    {1.5, 1.0, {160.28143501560834, 0.0}, {4350610397835.6504954, 0.0}},
    {1.5, 1.0, {-15.552790717820242, 15.552790717820246}, {-0.0072623698287704912863, 0.65838304713745458437}},
    {1.5, 1.0, {-173.76949183779288, -173.7694918377929}, {0.023336542510033651536, -0.66541764815241315668}},
    {1.5, 1.0, {-107.46070463397355, 0.0}, {-0.0026098261600104041286, 0.0}},
    {1.5, 2.0, {331.21290915176934, 0.0}, {8588171103771597491.0, 0.0}},
    {1.5, 2.0, {-136.41959519771262, 136.41959519771265}, {0.02044643203275693249, 0.0098725555843426084922}},
    {1.5, 2.0, {-38.63629631768708, -38.63629631768708}, {0.052023197925000881494, -0.019293098652255573236}},
    {1.5, 2.0, {-278.39217877013454, 0.0}, {0.002026550987271698671, 0.0}},
    {1.5, 1.5, {140.10571132041795, 0.0}, {66644260572.708948286, 0.0}},
    {1.5, 1.5, {-1.2863996776050044, 1.2863996776050044}, {0.51515342069772281233, 0.39382436499004312785}},
    {1.5, 1.5, {-159.50310079757764, -159.50310079757767}, {0.015507523790097139524, 0.10842161491899227411}},
    {1.5, 1.5, {-87.28498093878315, 0.0}, {-0.000070650234915775295552, 0.0}},
    {1.5, 0.5, {311.0371854565789, 0.0}, {3.9067680350819578851e+20, 0.0}},
    {1.5, 0.5, {-122.15320415749737, 122.1532041574974}, {3.4377249145741703035, 1.4028213918662538068}},
    {1.5, 0.5, {-24.369905277471844, -24.369905277471847}, {0.80545336674337543522, 2.013773752715539394}},
    {1.5, 0.5, {-258.2164550749441, 0.0}, {0.000015845666181507081001, 0.0}},
    {1.5, 0.5, {119.92998762522755, 0.0}, {119850997830.90102828, 0.0}},
    {1.5, 0.5, {-243.02000863738974, 243.0200086373898}, {4.2731177214497135573, -1.8833680820005402566}},
    {1.5, 0.5, {-145.2367097573624, -145.23670975736243}, {-1.9919714235435577594, 3.3917297295376084254}},
    {1.5, 0.5, {-67.10925724359275, 0.0}, {-0.0010852512083667012293, 0.0}},
    {1.9, 1.0, {1163.4458470455538, 0.0}, {362063818380656986.91, 0.0}},
    {1.9, 1.0, {-602.7861717920312, 95.47195045465071}, {-0.30027925379307202366, -0.43253088386668663283}},
    {1.9, 1.0, {-56.45044554334516, -8.940872223453445}, {-0.33518151479710129341, -0.32774809922341533942}},
    {1.9, 1.0, {-952.1629255190146, 0.0}, {0.032187429759860314286, 0.0}},
    {1.9, 2.0, {399.01705572014845, 0.0}, {322410061.55350417763, 0.0}},
    {1.9, 2.0, {-1278.0942679721431, 202.43024531476598}, {-0.0062086063300516643164, -0.010347293078215710389}},
    {1.9, 2.0, {-731.7585417234369, -115.89916708356549}, {0.013597584732445502735, 0.0090533331150646458434}},
    {1.9, 2.0, {-187.73413419360935, 0.0}, {0.0027193965172564822069, 0.0}},
    {1.9, 1.9, {1082.7429522648024, 0.0}, {2877955066924784.3382, 0.0}},
    {1.9, 1.9, {-523.0768635647968, 82.84723628242423}, {0.022625881293554170425, 0.015126681699433486196}},
    {1.9, 1.9, {-1407.066637903549, -222.85746194368073}, {0.016155138698828661361, -0.0049265753109373103225}},
    {1.9, 1.9, {-871.4600307382427, 0.0}, {-0.0014592016309106719197, 0.0}},
    {1.9, 0.8999999999999999, {318.3141609393869, 0.0}, {741795215.59747573057, 0.0}},
    {1.9, 0.8999999999999999, {-1198.3849597449087, 189.80553114253948}, {-0.20047192962760208923, -0.73771357156673622768}},
    {1.9, 0.8999999999999999, {-652.0492334962025, -103.274452911339}, {0.52968245615770220942, 0.51516496230099613285}},
    {1.9, 0.8999999999999999, {-107.03123941284775, 0.0}, {0.37779101277212254757, 0.0}},
    {1.9, 0.10000000000000009, {1002.0400574840203, 0.0}, {428390257876030126.14, 0.0}},
    {1.9, 0.10000000000000009, {-443.36755533756235, 70.22252211019774}, {3.8659602033283284379, 8.5821257013245776204}},
    {1.9, 0.10000000000000009, {-1327.3573296763145, -210.23274777145426}, {-2.7194632369567308695, -15.718340415048690301}},
    {1.9, 0.10000000000000009, {-790.7571359574812, 0.0}, {-1.472376455407583925, 0.0}},
    {1.1, 1.0, {14.850704134914093, 0.0}, {101233.37542144543894, 0.0}},
    {1.1, 1.0, {-11.073801060644573, 69.91722821985469}, {-0.53903235506609023404, -0.7334847818994528261}},
    {1.1, 1.0, {-5.665608671194538, -35.77124532931053}, {0.49048769474378231485, -0.76267336538410434314}},
    {1.1, 1.0, {-1.6455215395053875, 0.0}, {0.17137243437281257547, 0.0}},
    {1.1, 2.0, {57.58357266895499, 0.0}, {4557440443850809.7136, 0.0}},
    {1.1, 2.0, {-3.599862996123207, 22.728640444395513}, {-0.04647634417664364246, 0.038929698039141621778}},
    {1.1, 2.0, {-12.350502099951747, -77.97800134056756}, {0.0074602345627221234734, -0.027891683714137535987}},
    {1.1, 2.0, {-44.378390073545, 0.0}, {0.02117728132034356747, 0.0}},
    {1.1, 1.1, {9.806773211116491, 0.0}, {2134.1757919572830945, 0.0}},
    {1.1, 1.1, {-10.284756424880417, 64.93539645565255}, {0.43411288848839140291, 0.44458534223488028905}},
    {1.1, 1.1, {-4.876564035430381, -30.789413565108376}, {-0.52753596613718274641, 0.40473295204467896718}},
    {1.1, 1.1, {-87.11125860758591, 0.0}, {-0.000014293520488979000578, 0.0}},
    {1.1, 0.10000000000000009, {52.5396417451561, 0.0}, {192026987289096241.36, 0.0}},
    {1.1, 0.10000000000000009, {-2.8108183603590513, 17.74680868019336}, {-8.587859325937020838, 4.4263209961850194653}},
    {1.1, 0.10000000000000009, {-11.56145746418759, -72.9961695763654}, {13.146808936646576413, -27.773027060010828052}},
    {1.1, 0.10000000000000009, {-39.3344591497474, 0.0}, {0.00016863785245499168788, 0.0}},
    {1.1, 0.8999999999999999, {4.762842287318889, 0.0}, {65.351699454733307943, 0.0}},
    {1.1, 0.8999999999999999, {-9.49571178911626, 59.95356469145039}, {-0.59019333118557249428, -1.1841891300486963129}},
    {1.1, 0.8999999999999999, {-4.087519399666225, -25.80758180090622}, {0.91103077455851880704, -0.80873599098040894575}},
    {1.1, 0.8999999999999999, {-82.0673276837883, 0.0}, {-0.0021395793135065276035, 0.0}},
    {1.5, 1.0, {189.9828432854391, 0.0}, {150106013991107.01481, 0.0}},
    {1.5, 1.0, {-36.55485791620595, 36.554857916205954}, {0.16739216303028518147, 0.64045123276088425894}},
    {1.5, 1.0, {-194.7715590361804, -194.77155903618043}, {-0.052055575890441075766, 0.66541159637398951354}},
    {1.5, 1.0, {-137.16211290379914, 0.0}, {-0.0020563579075600440146, 0.0}},
    {1.5, 2.0, {360.9143174215975, 0.0}, {1.3616284221880809773e+20, 0.0}},
    {1.5, 2.0, {-157.42166239610015, 157.42166239610017}, {-0.013141884488333056579, -0.0085216241353316269257}},
    {1.5, 2.0, {-59.63836351607097, -59.638363516070974}, {0.017671471204203070323, 0.027429555855114140861}},
    {1.5, 2.0, {-308.0935870399627, 0.0}, {0.0018311918000529067802, 0.0}},
    {1.5, 1.5, {169.80711959024356, 0.0}, {2500664544678.0096377, 0.0}},
    {1.5, 1.5, {-22.288466875990707, 22.28846687599071}, {-0.20545272797743277639, 0.04806290210220793212}},
    {1.5, 1.5, {-180.50516799596517, -180.5051679959652}, {-0.019412668043510863392, -0.10327802026018191529}},
    {1.5, 1.5, {-116.98638920860876, 0.0}, {-0.000029639391635142514789, 0.0}},
    {1.5, 0.5, {340.7385937264071, 0.0}, {7.1588099335387207242e+21, 0.0}},
    {1.5, 0.5, {-143.1552713558849, 143.15527135588493}, {-2.977899682130637051, -2.5408177843671904317}},
    {1.5, 0.5, {-45.37197247585573, -45.371972475855735}, {-1.1986432830345616392, 2.3844082372819410519}},
    {1.5, 0.5, {-287.9178633447723, 0.0}, {0.000012749194813642977716, 0.0}},
    {1.5, 0.5, {149.6313958950583, 0.0}, {6157790432029.7368406, 0.0}},
    {1.5, 0.5, {-8.022075835775468, 8.022075835775468}, {1.3370053359471031554, -0.63148573018480140555}},
    {1.5, 0.5, {-166.23877695574993, -166.23877695574996}, {1.5745996057069717694, -3.8013777645938431392}},
    {1.5, 0.5, {-96.81066551341836, 0.0}, {0.00025696489101290492026, 0.0}},
    {1.9, 1.0, {1282.2514801248665, 0.0}, {3128747439771503510.3, 0.0}},
    {1.9, 1.0, {-720.1291103815025, 114.05724610918058}, {0.40470913024794611718, 0.3386880584751428751}},
    {1.9, 1.0, {-173.7933841327961, -27.52616787798008}, {-0.49246275821150715809, -0.22833870442410577786}},
    {1.9, 1.0, {-1070.9685585983273, 0.0}, {0.0033339012600709451569, 0.0}},
    {1.9, 2.0, {517.8226887994508, 0.0}, {8750895537.9657898158, 0.0}},
    {1.9, 2.0, {-1395.4372065615942, 221.01554096929263}, {0.01162579975643439327, -0.0006811298087074340406}},
    {1.9, 2.0, {-849.1014803129082, -134.48446273809535}, {-0.0066550261109654875721, -0.013380736424147033472}},
    {1.9, 2.0, {-306.5397672729117, 0.0}, {0.0097423502068390704408, 0.0}},
    {1.9, 1.9, {1201.5485853441048, 0.0}, {25414113788661821.613, 0.0}},
    {1.9, 1.9, {-640.419802154268, 101.43253193695408}, {-0.021610371384716467802, -0.011883834478506251645}},
    {1.9, 1.9, {-94.08407590556172, -14.901453705753594}, {-0.069837482444009495169, 0.011309353700248019124}},
    {1.9, 1.9, {-990.2656638175657, 0.0}, {-0.000023605976523836511782, 0.0}},
    {1.9, 0.8999999999999999, {437.11979401870985, 0.0}, {32789160018.656224129, 0.0}},
    {1.9, 0.8999999999999999, {-1315.7278983343597, 208.39082679706613}, {0.73900315586806654009, 0.21316763987925796669}},
    {1.9, 0.8999999999999999, {-769.3921720856738, -121.85974856586884}, {-0.30827790487827156284, -0.67748045445153330703}},
    {1.9, 0.8999999999999999, {-225.83687249215012, 0.0}, {0.05300031641327096924, 0.0}},
    {1.9, 0.10000000000000009, {1120.8456905633432, 0.0}, {4534381220934573733.8, 0.0}},
    {1.9, 0.10000000000000009, {-560.7104939270337, 88.8078177647276}, {-2.9591621096006352949, -10.116344435404308832}},
    {1.9, 0.10000000000000009, {-14.37476767832732, -2.2767395335271083}, {2.0888837933209139672, 0.70715115280990523565}},
    {1.9, 0.10000000000000009, {-909.5627690368041, 0.0}, {1.3058030623430383705, 0.0}},
    {1.1, 1.0, {22.276056202370494, 0.0}, {17977343.514457784955, 0.0}},
    {1.1, 1.0, {-12.23538203905249, 77.25116188169538}, {-0.6432578358746628408, 0.64135448048317680404}},
    {1.1, 1.0, {-6.827189649602655, -43.10517899115249}, {0.81673832981596920247, 0.40090387791011670509}},
    {1.1, 1.0, {-9.07087360696179, 0.0}, {-0.015275159719132220484, 0.0}},
    {1.1, 2.0, {65.0089247364114, 0.0}, {424164246776900519.42, 0.0}},
    {1.1, 2.0, {-4.761443974531325, 30.062574106237474}, {-0.0082452399999485724145, 0.069068968864881878838}},
    {1.1, 2.0, {-13.512083078359662, -85.31193500240825}, {0.015304395876029638932, -0.0027477465568078963696}},
    {1.1, 2.0, {-51.803742141002694, 0.0}, {0.018130231913338325649, 0.0}},
    {1.1, 1.1, {17.23212527857418, 0.0}, {420303.83290898882316, 0.0}},
    {1.1, 1.1, {-11.446337403288334, 72.26933011749323}, {0.38505414264329648027, -0.48000871913158684246}},
    {1.1, 1.1, {-6.038145013838498, -38.12334722695034}, {-0.48133507650380712122, -0.43998777375341116339}},
    {1.1, 1.1, {-4.026942683164188, 0.0}, {0.015567001592748807393, 0.0}},
    {1.1, 0.10000000000000009, {59.96499381261379, 0.0}, {23060122223035620297.0, 0.0}},
    {1.1, 0.10000000000000009, {-3.972399338767168, 25.080742342035318}, {1.0547819511786227487, 12.77759082250651838}},
    {1.1, 0.10000000000000009, {-12.723038442595506, -80.33010323820609}, {27.245641198968618187, 19.025917821448736096}},
    {1.1, 0.10000000000000009, {-46.75981121720509, 0.0}, {0.00011550654498546508772, 0.0}},
    {1.1, 0.8999999999999999, {12.188194354775291, 0.0}, {18806.71974163557443, 0.0}},
    {1.1, 0.8999999999999999, {-10.657292767524178, 67.28749835329108}, {-1.1359779038353761445, 0.69807631229938946747}},
    {1.1, 0.8999999999999999, {-5.249100378074342, -33.14151546274818}, {1.0356915046780108906, 0.70627432807824375022}},
    {1.1, 0.8999999999999999, {-89.49267975124471, 0.0}, {-0.0019584039602271081636, 0.0}},
}};

#endif
