// L2-orthonormal modal basis on the reference triangle
// {(x, y): x, y >= 0, x + y <= 1}, expressed over graded-lex monomials
// x^(d-b) y^b. Coefficients come from an exact rational Gram-Schmidt
// (LDL^T of the monomial Gram), rounded once to f64.

pub(crate) const TRI_COEFF_MAX_DEGREE: usize = 10;

#[rustfmt::skip]
pub(crate) const TRI_COEFFS: [&[f64]; 66] = [
    &[1.4142135623730951],
    &[-2.0, 6.0],
    &[-3.4641016151377544, 3.4641016151377544, 6.928203230275509],
    &[2.449489742783178, -19.595917942265423, 0.0, 24.49489742783178],
    &[4.242640687119285, -25.45584412271571, -8.48528137423857, 21.213203435596427, 42.42640687119285],
    &[5.477225575051661, -10.954451150103322, -32.863353450309965, 5.477225575051661, 32.863353450309965, 32.863353450309965],
    &[-2.8284271247461903, 42.42640687119285, 0.0, -127.27922061357856, 0.0, 0.0, 98.99494936611666],
    &[-4.898979485566356, 63.686733312362634, 9.797958971132712, -161.66632302368976, -117.57550765359255, 0.0, 102.87856919689348, 205.75713839378696],
    &[-6.324555320336759, 56.92099788303083, 37.94733192202055, -94.86832980505137, -303.5786553761644, -37.94733192202055, 44.27188724235731, 265.63132345414385, 265.63132345414385],
    &[-7.483314773547883, 22.44994432064365, 89.7997772825746, -22.44994432064365, -179.5995545651492, -224.4994432064365, 7.483314773547883, 89.7997772825746, 224.4994432064365, 149.66629547095766],
    &[3.1622776601683795, -75.8946638440411, 0.0, 398.4469851812158, 0.0, 0.0, -708.3501958777169, 0.0, 0.0, 0.0, 398.4469851812158],
    &[5.477225575051661, -120.49896265113655, -10.954451150103322, 575.1086853804244, 230.04347415216978, 0.0, -920.1738966086791, -920.1738966086791, 0.0, 0.0, 460.08694830433956, 920.1738966086791],
    &[7.0710678118654755, -127.27922061357856, -42.42640687119285, 487.9036790187178, 721.2489168102785, 42.42640687119285, -622.2539674441618, -2206.1731573020284, -678.8225099390856, 0.0, 254.55844122715712, 1527.3506473629427, 1527.3506473629427],
    &[8.366600265340756, -100.39920318408906, -100.39920318408906, 250.99800796022265, 1104.3912350249798, 250.99800796022265, -234.26480742954115, -1907.5848604976923, -2509.980079602227, -167.33200530681512, 75.2994023880668, 903.5928286568015, 2258.982071642004, 1505.988047761336],
    &[9.486832980505138, -37.94733192202055, -189.73665961010275, 56.92099788303083, 569.2099788303083, 853.8149682454624, -37.94733192202055, -569.2099788303083, -1707.6299364909248, -1328.1566172707194, 9.486832980505138, 189.73665961010275, 853.8149682454624, 1328.1566172707194, 664.0783086353597],
    &[-3.4641016151377544, 121.2435565298214, 0.0, -969.9484522385712, 0.0, 0.0, 2909.845356715714, 0.0, 0.0, 0.0, -3637.3066958946424, 0.0, 0.0, 0.0, 0.0, 1600.4149461936427],
    &[-6.0, 198.0, 12.0, -1488.0, -384.0, 0.0, 4176.0, 2592.0, 0.0, 0.0, -4860.0, -5760.0, 0.0, 0.0, 0.0, 1980.0, 3960.0],
    &[-7.745966692414834, 224.63303408003017, 46.475800154489, -1471.7336715588185, -1301.322404325692, -46.475800154489, 3578.636611895653, 7529.079625027219, 1254.8466041712031, 0.0, -3601.874511972898, -13942.7400463467, -6274.233020856015, 0.0, 0.0, 1278.0845042484475, 7668.507025490685, 7668.507025490685],
    &[-9.16515138991168, 210.79848196796863, 109.98181667894016, -1081.4878640095783, -2419.5999669366834, -274.9545416973504, 2071.32421412004, 10558.254401178256, 5774.0453756443585, 183.3030277982336, -1695.553007133661, -14297.636168262221, -20621.59062730128, -3666.060555964672, 0.0, 504.0833264451424, 6048.999917341709, 15122.499793354273, 10081.666528902848],
    &[-10.392304845413264, 155.88457268119896, 207.84609690826528, -519.6152422706632, -2909.845356715714, -935.3074360871938, 727.4613391789285, 7482.45948869755, 12158.99666913352, 1454.922678357857, -467.6537180435969, -7066.76729488102, -21512.071030005456, -17459.072140294284, -727.4613391789285, 114.3153532995459, 2286.307065990918, 10288.381796959131, 16004.149461936426, 8002.074730968213],
    &[-11.489125293076057, 57.445626465380286, 344.6737587922817, -114.89125293076057, -1378.6950351691269, -2412.716311545972, 114.89125293076057, 2068.0425527536904, 7238.148934637916, 6433.9101641225925, -57.445626465380286, -1378.6950351691269, -7238.148934637916, -12867.820328245185, -7238.148934637916, 11.489125293076057, 344.6737587922817, 2412.716311545972, 6433.9101641225925, 7238.148934637916, 2895.2595738551663],
    &[3.7416573867739413, -179.5995545651492, 0.0, 2020.4949888579283, 0.0, 0.0, -8979.97772825746, 0.0, 0.0, 0.0, 18521.204064531008, 0.0, 0.0, 0.0, 0.0, -17780.35590194977, 0.0, 0.0, 0.0, 0.0, 0.0, 6420.684075704084],
    &[6.48074069840786, -298.1140721267616, -12.96148139681572, 3207.966645711891, 583.2666628567074, 0.0, -13609.555466656506, -5832.666628567074, 0.0, 0.0, 26733.055380932423, 21386.44430474594, 0.0, 0.0, 0.0, -24380.54650741037, -32079.666457118907, 0.0, 0.0, 0.0, 0.0, 8340.713278850915, 16681.42655770183],
    &[8.366600265340756, -351.3972111443117, -50.19960159204453, 3438.6727090550503, 2058.1836652738257, 50.19960159204453, -13219.228419238394, -18573.852589056478, -2007.9840636817812, 0.0, 23468.31374428082, 60741.51792637388, 16565.868525374695, 0.0, 0.0, -19326.846612937145, -80068.36453931103, -44175.64940099919, 0.0, 0.0, 0.0, 5982.11918971864, 35892.71513831184, 35892.71513831184],
    &[9.899494936611665, -356.38181771801993, -118.79393923933998, 2969.8484809834995, 4157.787873376899, 296.98484809834997, -9701.505037879431, -31480.393898425096, -10097.4848353439, -197.9898987322333, 14700.749980868322, 84937.66655612808, 68603.49991071883, 6533.666658163699, 0.0, -10453.86665306192, -91471.3332142918, -143740.66647960138, -39201.99994898219, 0.0, 0.0, 2831.2555518709364, 33975.06662245124, 84937.66655612808, 56625.11103741873],
    &[11.224972160321824, -314.2992204890111, -224.4994432064365, 2020.4949888579283, 6061.484966573785, 1010.2474944289642, -5163.487193748039, -34348.414810584785, -26266.434855153067, -1571.4961024450554, 6342.109270581831, 68921.329064376, 128301.43179247846, 39287.402561126386, 785.7480512225277, -3771.590645868133, -57920.85634726061, -181844.54899721354, -160292.60244939564, -18857.953229340663, 0.0, 875.5478285051023, 17510.956570102047, 78799.3045654592, 122576.69599071432, 61288.34799535716],
    &[12.409673645990857, -223.3741256278354, -372.2902093797257, 930.7255234493142, 6328.933559455337, 2606.03146565808, -1737.35431043872, -21592.83214402409, -41696.50345052928, -6949.41724175488, 1675.3059422087656, 30527.797169137506, 109453.32155763936, 104241.2586263232, 7818.094396974239, -819.0384606353965, -19731.38109712546, -104241.2586263232, -187634.26552738177, -109453.32155763936, -3127.237758789696, 161.32575739788115, 4839.772721936434, 33878.409053555035, 90342.42414281344, 101635.22716066512, 40654.09086426604],
    &[13.490737563232042, -80.94442537939224, -566.6109776557457, 202.36106344848062, 2833.054888278729, 5666.109776557458, -269.81475126464085, -5666.109776557458, -22664.43910622983, -22664.43910622983, 202.36106344848062, 5666.109776557458, 33996.65865934474, 67993.31731868949, 42495.82332418093, -80.94442537939224, -2833.054888278729, -22664.43910622983, -67993.31731868949, -84991.64664836186, -37396.32452527922, 13.490737563232042, 566.6109776557457, 5666.109776557458, 22664.43910622983, 42495.82332418093, 37396.32452527922, 12465.441508426406],
    &[-4.0, 252.0, 0.0, -3780.0, 0.0, 0.0, 23100.0, 0.0, 0.0, 0.0, -69300.0, 0.0, 0.0, 0.0, 0.0, 108108.0, 0.0, 0.0, 0.0, 0.0, 0.0, -84084.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 25740.0],
    &[-6.928203230275509, 422.62039704680603, 13.856406460551018, -6131.459858793825, -831.3843876330611, 0.0, 36199.861878189535, 11431.53532995459, 0.0, 0.0, -104789.07385791707, -60968.18842642448, 0.0, 0.0, 0.0, 157526.55684677424, 148609.9592894097, 0.0, 0.0, 0.0, 0.0, -117897.23436959834, -166443.15440413883, 0.0, 0.0, 0.0, 0.0, 0.0, 34675.65716752892, 69351.31433505785],
    &[-8.94427190999916, 509.82349886995206, 53.665631459994955, -6896.033642609352, -3005.2753617597173, -53.665631459994955, 37878.991538846436, 38370.92649389639, 2951.6097302997223, 0.0, -101830.53569534043, -188903.02273918223, -35419.31676359667, 0.0, 0.0, 141972.42802741664, 422080.19143286033, 153483.70597558556, 0.0, 0.0, 0.0, -98485.37800100073, -429754.37673163955, -268596.4854572747, 0.0, 0.0, 0.0, 0.0, 26859.648545727472, 161157.89127436484, 161157.89127436484],
    &[-10.583005244258363, 539.7332674571765, 126.99606293110035, -6508.548225218893, -6349.8031465550175, -317.49015732775086, 31801.93075899638, 71752.77555607169, 15557.017709059794, 211.66010488516724, -76038.89267999634, -309870.39355188486, -163824.92118111945, -10159.685034488028, 0.0, 94516.81983647143, 602596.3186080712, 610851.0626985927, 99056.92908625827, 0.0, 0.0, -58746.26211087817, -531605.519429586, -895639.7338215852, -308177.11271280353, 0.0, 0.0, 0.0, 14445.802158412665, 173349.62590095197, 433374.06475237996, 288916.04316825327],
    &[-12.0, 516.0, 240.0, -5220.0, -10080.0, -1080.0, 21420.0, 94320.0, 44280.0, 1680.0, -43380.0, -334080.0, -380160.0, -67200.0, -840.0, 46332.0, 533520.0, 1123200.0, 524160.0, 32760.0, 0.0, -25116.0, -393120.0, -1277640.0, -1223040.0, -229320.0, 0.0, 0.0, 5460.0, 109200.0, 491400.0, 764400.0, 382200.0],
    &[-13.2664991614216, 437.7944723269128, 397.994974842648, -3382.957286162508, -12735.839194964736, -2785.964823898536, 10812.196816558604, 88752.8793899105, 86364.90954085461, 7429.239530396096, -17710.776380497835, -235613.0251068476, -534905.2461885189, -222877.18591188287, -8357.894471695608, 15800.400501253125, 295710.26630808745, 1114385.9295594143, 1203536.8039241675, 242378.93967917262, 3343.157788678243, -7336.374036266145, -178301.7487295063, -955585.9345971978, -1768159.0082342708, -1111599.9647355159, -93608.4180829908, 0.0, 1392.982411949268, 41789.47235847804, 292526.3065093463, 780070.15069159, 877578.9195280388, 351031.56781121553],
    &[-14.422205101855956, 302.8663071389751, 605.7326142779502, -1514.3315356948756, -12114.652285559005, -6057.326142779502, 3533.4402499547095, 51487.272213625765, 115089.19671281053, 24229.30457111801, -4542.994607084626, -96917.21828447204, -399783.52542344714, -436127.48228012415, -45429.946070846265, 3331.5293785287263, 93888.55521308228, 569388.6574212732, 1163006.6194136643, 772309.0832043865, 39978.35254234471, -1312.420664268892, -46035.678685124214, -369496.8947095496, -1114548.0102714284, -1408328.3281962343, -639653.6406775154, -13326.117514114905, 216.33307652783935, 9085.989214169253, 90859.89214169253, 363439.5685667701, 681449.191062694, 599675.2881351707, 199891.76271172357],
    &[-15.491933384829668, 108.44353369380767, 867.5482695504613, -325.330601081423, -5205.289617302768, -11711.90163893123, 542.2176684690384, 13013.224043256922, 58559.50819465614, 65066.1202162846, -542.2176684690384, -17350.965391009227, -117119.01638931228, -260264.4808651384, -178931.83059478266, 325.330601081423, 13013.224043256922, 117119.01638931228, 390396.72129770764, 536795.491784348, 257661.83605648702, -108.44353369380767, -5205.289617302768, -58559.50819465614, -260264.4808651384, -536795.491784348, -515323.67211297405, -186089.10381857396, 15.491933384829668, 867.5482695504613, 11711.90163893123, 65066.1202162846, 178931.83059478266, 257661.83605648702, 186089.10381857396, 53168.315376735416],
    &[4.242640687119285, -339.4112549695428, 0.0, 6533.666658163699, 0.0, 0.0, -52269.33326530959, 0.0, 0.0, 0.0, 212344.16639032023, 0.0, 0.0, 0.0, 0.0, -475650.9327143173, 0.0, 0.0, 0.0, 0.0, 0.0, 594563.6658928966, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -388286.475685157, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 103138.59510386983],
    &[7.3484692283495345, -573.1805998112636, -14.696938456699069, 10750.810481075368, 1131.6642611658283, 0.0, -83743.1553262713, -20369.95670098491, 0.0, 0.0, 331011.79639100475, 147116.35395155768, 0.0, 0.0, 0.0, -720870.1343626326, -514907.23883045185, 0.0, 0.0, 0.0, 0.0, 875342.3060117682, 926833.0298948133, 0.0, 0.0, 0.0, 0.0, 0.0, -554838.8206173033, -823851.582128723, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 142913.02955294173, 285826.05910588347],
    &[9.486832980505138, -702.0256405573803, -56.92099788303083, 12475.185369364257, 4155.232845461251, 56.92099788303083, -91946.38524705579, -70695.87937072429, -4098.311847578219, 0.0, 343470.7880591885, 480982.4321116105, 66597.56752314606, 0.0, 0.0, -706180.8734028415, -1579842.2962435207, -414384.86458846444, 0.0, 0.0, 0.0, 808913.7877487316, 2657242.9441735283, 1165457.4316550563, 0.0, 0.0, 0.0, 0.0, -483449.0086865418, -2196239.7823188617, -1491785.512518472, 0.0, 0.0, 0.0, 0.0, 0.0, 117409.04496673158, 704454.2698003895, 704454.2698003895],
    &[11.224972160321824, -763.298106901884, -134.6996659238619, 12437.269153636582, 9024.877616898746, 336.7491648096547, -83917.89187056596, -140222.35222674021, -22225.44487743721, -224.4994432064365, 286741.913835421, 866792.3502200512, 328330.43568941334, 14592.463808418372, 0.0, -539337.462359143, -2574110.6158050005, -1838650.4398607148, -204294.4933178572, 0.0, 0.0, 565895.7464904644, 3897938.9325047154, 4596626.099651787, 1021472.466589286, 0.0, 0.0, 0.0, -310527.62984314293, -2892810.0253808578, -5148221.231610001, -2042944.933178572, 0.0, 0.0, 0.0, 0.0, 69460.12772807144, 833521.5327368574, 2083803.8318421433, 1389202.554561429],
    &[12.727922061357855, -763.6753236814714, -254.55844122715712, 10946.012972767756, 15018.94803240227, 1145.512985522207, -64912.402512925066, -203901.31142295286, -66439.753160288, -1781.9090885900998, 195309.96403153628, 1094346.7388355485, 851116.1482429998, 101568.81804963568, 890.9545442950499, -325020.2177588342, -2811852.5417951774, -4073444.176516968, -1222389.6347728085, -49893.45448052279, 0.0, 303815.499604612, 3688551.8133815066, 8579892.26156133, 5114079.084253586, 561301.3629058814, 0.0, 0.0, -149680.3634415684, -2387758.1787107335, -8018590.898655449, -8232419.989286261, -1995738.1792209118, 0.0, 0.0, 0.0, 30292.454506031696, 605849.090120634, 2726320.905542853, 4240943.6308444375, 2120471.8154222188],
    &[14.071247279470288, -703.5623639735144, -422.1374183841087, 8372.392131284822, 20684.733500821323, 2954.9619286887605, -41369.467001642646, -230487.03043772333, -141838.1725770605, -7879.898476503362, 104901.148468451, 1010596.9796115562, 1471571.0404870028, 370355.228395658, 8864.885786066281, -149521.07359165128, -2136437.474441974, -5602607.81679389, -3553834.2129030162, -407784.746159049, -3545.9543144265126, 121645.93273102064, 2349194.7333075646, 9352454.504299928, 11386453.298547357, 3590278.743356844, 159567.94414919306, 0.0, -52907.88977080829, -1300183.2486230547, -7091908.628853026, -13553425.379585782, -9219481.217508933, -1276543.5531935445, 0.0, 0.0, 9568.448150039796, 287053.4445011939, 2009374.111508357, 5358330.964022286, 6028122.334525072, 2411248.9338100287],
    &[15.297058540778355, -581.2882245495774, -642.4764587126909, 5246.891079486975, 23771.628972369563, 6424.764587126909, -20130.929039664315, -196597.7963660834, -231291.52513656873, -25699.058348507635, 41225.572767397665, 648901.2232998178, 1734686.4385242653, 899467.0421977673, 48185.73440345182, -49042.36968173541, -1082572.832930884, -4754325.794473913, -6039278.7118992945, -1638314.9697173617, -42403.4462750376, 34158.33172155807, 977206.6937020029, 6071402.534834929, 12978024.465996357, 9685332.615093816, 1399313.7270762408, 14134.4820916792, -12971.905642580045, -457443.2386034359, -3700664.4021850997, -11307585.67334336, -14648463.258649353, -7123778.974206316, -452303.4269337344, 0.0, 2080.399961545856, 87376.79838492596, 873767.9838492596, 3495071.9353970382, 6553259.878869447, 5766868.693405113, 1922289.5644683712],
    &[16.431676725154983, -394.3602414037196, -920.1738966086791, 2300.4347415216976, 21163.999621999617, 12422.347604217168, -6441.217276260753, -107660.34590321545, -273291.64729277766, -69013.04224565093, 10351.95633684764, 253047.82156738674, 1180123.0224006309, 1449273.8871586695, 189785.86617554005, -10121.91286269547, -326661.7332960811, -2236022.5687590903, -5106965.126178169, -3795717.323510801, -273291.64729277766, 5981.130327956414, 240165.38701486523, 2173910.8307380043, 7315382.478038998, 10248436.773479164, 5192541.298562776, 197377.30082256166, -1971.801207018598, -94777.91135069395, -1068321.8939626764, -4761899.914949914, -9868865.041128082, -9565207.655247219, -3552791.41480611, -56393.5145207319, 279.3385043276347, 15642.956242347544, 211179.90927169184, 1173221.7181760657, 3226359.724984181, 4645958.0039772205, 3355414.1139835482, 958689.7468524424],
    &[17.4928556845359, -139.9428454762872, -1259.4856092865848, 489.7999591670052, 8816.399265006094, 22040.998162515236, -979.5999183340105, -26449.197795018285, -132245.9889750914, -161633.98652511172, 1224.4998979175132, 44081.99632503047, 330614.97243772855, 808169.9326255587, 606127.449469169, -979.5999183340105, -44081.99632503047, -440819.9632503047, -1616339.8652511174, -2424509.797876676, -1260745.0948958716, 489.7999591670052, 26449.197795018285, 330614.97243772855, 1616339.8652511174, 3636764.696815014, 3782235.2846876145, 1470869.2773785167, -139.9428454762872, -8816.399265006094, -132245.9889750914, -808169.9326255587, -2424509.797876676, -3782235.2846876145, -2941738.5547570335, -900532.2106399082, 17.4928556845359, 1259.4856092865848, 22040.998162515236, 161633.98652511172, 606127.449469169, 1260745.0948958716, 1470869.2773785167, 900532.2106399082, 225133.05265997705],
    &[-4.47213595499958, 442.74145954495833, 0.0, -10625.795029079001, 0.0, 0.0, 107438.59418290989, 0.0, 0.0, 0.0, -564052.6194602769, 0.0, 0.0, 0.0, 0.0, 1692157.8583808308, 0.0, 0.0, 0.0, 0.0, 0.0, -3008280.637121477, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 3131067.6019019457, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1761225.5260698444, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 413126.97525095113],
    &[-7.745966692414834, 751.3587691642389, 15.491933384829668, -17660.80405870582, -1487.225604943648, 0.0, 174810.97631441796, 33834.38251246799, 0.0, 0.0, -898020.9025184213, -315787.57011636795, 0.0, 0.0, 0.0, 2634852.538158445, 1480254.2349204747, 0.0, 0.0, 0.0, 0.0, -4578919.766687335, -3789450.841396415, 0.0, 0.0, 0.0, 0.0, 0.0, 4656255.498144405, 5368388.691978255, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2557516.806701375, -3944122.3043105546, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 585455.654546098, 1170911.309092196],
    &[-10.0, 930.0, 60.0, -20940.0, -5520.0, -60.0, 198380.0, 120120.0, 5460.0, 0.0, -974610.0, -1070160.0, -114660.0, 0.0, 0.0, 2732730.0, 4777500.0, 955500.0, 0.0, 0.0, 0.0, -4535440.0, -11618880.0, -3822000.0, 0.0, 0.0, 0.0, 0.0, 4402320.0, 15593760.0, 7796880.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2307240.0, -10820160.0, -7796880.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 503880.0, 3023280.0, 3023280.0],
    &[-11.832159566199232, 1029.3978822593333, 141.9859147943908, -21652.852006144596, -12210.788672317607, -354.96478698597696, 191420.67746197118, 247623.43540141752, 30172.00689380804, 236.64319132398464, -876869.513291459, -2049424.6941422366, -588886.5816097357, -19878.02807121471, 0.0, 2291688.1612601657, 8473009.46535527, 4534675.153745856, 372713.0263352758, 0.0, 0.0, -3545577.606968997, -19027248.46976672, -16647848.50964232, -2650403.742828628, 0.0, 0.0, 0.0, 3210301.5335011757, 23519682.813861243, 30920272.66477448, 8448161.930266252, 0.0, 0.0, 0.0, 0.0, -1571358.1190295229, -15003935.588152863, -27878934.36987863, -12165353.179583402, 0.0, 0.0, 0.0, 0.0, 0.0, 321030.15335011756, 3852361.840201411, 9630904.600503527, 6420603.067002351],
    &[-13.416407864998739, 1059.8962213349002, 268.32815729997475, -20205.1102446881, -20929.596269398033, -1207.4767078498865, 161721.3804046948, 383172.60862436396, 92975.70650444126, 1878.2971010998233, -670833.8096578019, -2851254.9994695317, -1631301.0323051966, -142750.57968358658, -939.1485505499116, 1589884.5812259454, 10565421.193686506, 11199346.465307696, 2394828.803902275, 70436.14129124337, 0.0, -2236676.18798967, -21232270.430832405, -36345048.90628158, -15026376.808798587, -1126978.260659894, 0.0, 0.0, 1848351.6787451461, 23501253.32896099, 59200168.03246423, 41510365.93430609, 6386210.1437393995, 0.0, 0.0, 0.0, -829295.002951302, -13465780.245941933, -46555471.94786022, -50578784.33841604, -14368972.823413648, 0.0, 0.0, 0.0, 0.0, 156005.99065420532, 3120119.8130841064, 14040539.15887848, 21840838.691588745, 10920419.345794372],
    &[-14.832396974191326, 1023.4353912192015, 444.97190922573975, -16997.92693242326, -30258.089827350304, -3114.8033645801784, 118570.18141168547, 479679.7181453475, 208691.82542687195, 8306.142305547142, -430154.3446485226, -3077425.7242052164, -3149066.2015905604, -548205.3921661114, -9344.410093740535, 897374.8493355494, 9827204.615250463, 18392913.867845953, 7849304.47874205, 607386.6560931348, 3737.7640374962143, -1120498.5970183096, -17094040.864816017, -50397518.43890729, -41198465.83551383, -8223080.8824916715, -239216.89839975772, 0.0, 829071.6612693984, 16520917.045733266, 69260767.61480485, 93194916.66823894, 38125193.18246138, 3050015.4545969106, 0.0, 0.0, -335864.7970835884, -8351232.792348684, -46385651.70532802, -91500463.63790733, -66719088.069307424, -12200061.818387643, 0.0, 0.0, 0.0, 57490.37067196558, 1724711.1201589673, 12072977.841112772, 32194607.576300725, 36218933.52333832, 14487573.409335326],
    &[-16.1245154965971, 919.0973833060347, 677.2296508570781, -12577.122087345737, -37924.860447996376, -6772.296508570782, 72689.31585865973, 490314.2672205246, 372476.307971393, 27089.186034283128, -221454.09583026456, -2562636.9988431837, -4530666.364233853, -1462816.0458512888, -50792.223814280864, 394824.8864496766, 6738435.026027928, 21095703.624197986, 16659849.411084123, 2691987.8621568857, 44697.15695656716, -428460.62577557814, -9844210.204858487, -46288646.63608129, -67722965.08570781, -28545229.783625845, -2324252.1617414923, -14899.05231885572, 279599.0987109937, 8151136.077715793, 52153455.41250359, 117431621.45861736, 98435329.75207631, 22795550.047849253, 759851.6682616418, 0.0, -101149.08571015361, -3592026.0681459424, -29357905.36465434, -91182200.19139701, -121748960.48283122, -63827540.133977905, -6838665.014354776, 0.0, 0.0, 15624.655516202589, 656235.5316805087, 6562355.316805087, 26249421.267220348, 49217664.87603816, 43311545.09091358, 14437181.696971193],
    &[-17.320508075688775, 744.7818472546172, 969.9484522385712, -7690.305585605815, -40737.83499401999, -13094.304105220712, 34433.17005446928, 389919.2777999057, 536866.4683140492, 72746.13391789285, -84628.00245781534, -1538338.245250374, -4727043.781984678, -2909845.3567157136, -200051.86827420534, 125850.81167795463, 3200829.8923872854, 16040522.528895373, 23351508.987643603, 7802022.862694007, 288074.69031485566, -116878.78849474785, -3846815.5615781737, -27170681.018332977, -65762505.06177513, -56414626.8533259, -10946838.231964516, -208053.94300517355, 66580.03304294765, 2698396.5941277053, 24761329.062972367, 85185722.81785253, 124432262.06655571, 70290224.43682478, 7697995.891191421, 59443.98371576387, -21356.186457324256, -1030085.2562773627, -11667024.957751654, -52377216.42088285, -109828475.68253872, -108892232.93901545, -43067166.20207092, -2139983.4137674994, 0.0, 2961.80688094278, 165861.1853327957, 2239126.0019927416, 12439588.899959676, 34208869.474889114, 49260772.04384032, 35577224.25388467, 10164921.215395622],
    &[-18.439088914585774, 497.8554006938159, 1327.6144018501757, -3319.0360046254395, -34517.97444810457, -23233.252032378077, 10842.184281776435, 204452.61788492708, 580831.3008094518, 170377.18157077255, -20909.92682914027, -576184.6504029763, -2997089.5121767716, -4089052.3576985416, -638914.430890397, 25556.577235615885, 929330.0812951231, 7086141.869875313, 17889604.064931117, 14695031.910479134, 1328942.016252026, -20135.485094727665, -910743.4796692206, -9177134.55278934, -34075436.31415451, -52390983.33301256, -29236724.35754457, -1550432.3522940304, 9957.10801387632, 539011.4471511714, 6760876.34142202, 33223550.40630065, 75391902.84506686, 79736520.97512156, 32559079.398174636, 949244.2973228757, -2821.1806039316234, -177900.32984792357, -2671823.983723479, -16356209.430794166, -49196411.17856058, -77078636.9426175, -60466861.73946718, -18984885.946457513, -237311.07433071893, 350.3426893771297, 25224.67363515334, 441431.78861518344, 3237166.4498446784, 12139374.186917545, 25249898.308788493, 29458214.693586577, 18035641.64913464, 4508910.41228366],
    &[-19.493588689617926, 175.44229820656136, 1754.4229820656135, -701.7691928262454, -14035.383856524908, -38597.3056054435, 1637.461449927906, 49123.84349783718, 270181.13923810446, 360241.5189841393, -2456.192174891859, -98247.68699567436, -810543.4177143135, -2161449.1139048357, -1756177.405047679, 2456.192174891859, 122809.60874459294, 1350905.6961905223, 5403622.784762089, 8780887.025238395, 4917296.734133502, -1637.461449927906, -98247.68699567436, -1350905.6961905223, -7204830.379682786, -17561774.05047679, -19669186.936534006, -8195494.556889169, 701.7691928262454, 49123.84349783718, 810543.4177143135, 5403622.784762089, 17561774.05047679, 29503780.404801007, 24586483.670667507, 8028239.565932248, -175.44229820656136, -14035.383856524908, -270181.13923810446, -2161449.1139048357, -8780887.025238395, -19669186.936534006, -24586483.670667507, -16056479.131864496, -4265002.2694015065, 19.493588689617926, 1754.4229820656135, 38597.3056054435, 360241.5189841393, 1756177.405047679, 4917296.734133502, 8195494.556889169, 8028239.565932248, 4265002.2694015065, 947778.2820892236],
    &[4.69041575982343, -562.8498911788115, 0.0, 16463.359316980237, 0.0, 0.0, -204877.3603890874, 0.0, 0.0, 0.0, 1344507.6775533862, 0.0, 0.0, 0.0, 0.0, -5162909.481805002, 0.0, 0.0, 0.0, 0.0, 0.0, 12190202.943150701, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -17912134.936874498, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 15952995.17815385, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -7878022.310199432, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1654384.6851418808],
    &[8.12403840463596, -958.6365317470434, -16.24807680927192, 27564.862306929812, 1901.0249866848146, 0.0, -337115.0976387738, -53228.699627174814, 0.0, 0.0, 2173505.234776305, 621001.4956503728, 0.0, 0.0, 0.0, -8197219.742584921, -3726008.9739022367, 0.0, 0.0, 0.0, 0.0, 19002645.766901407, 12668430.511267606, 0.0, 0.0, 0.0, 0.0, 0.0, -27405176.208048288, -25336861.022535212, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 23947211.75726861, 29473491.393561367, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -11598364.668762576, -18420932.120975856, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2387898.608274648, 4775797.216549296],
    &[10.488088481701515, -1195.6420869139727, -62.928530890209096, 33194.800044585296, 7110.923990593627, 62.928530890209096, -391751.080968515, -192057.87627691816, -7047.995459703418, 0.0, 2435963.430759994, 2158448.609534172, 185009.88081721473, 0.0, 0.0, -8855806.295117345, -12457331.975025792, -1973438.7287169572, 0.0, 0.0, 0.0, 19779611.924702667, 40677505.79567828, 10483893.246308835, 0.0, 0.0, 0.0, 0.0, -27472079.445429683, -78000165.75253773, -30193612.549369443, 0.0, 0.0, 0.0, 0.0, 0.0, 23110565.89796018, 86832310.92004035, 47806553.20316829, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -10772735.203094894, -51831084.46772072, -39025757.71687207, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2134221.1251414414, 12805326.75084865, 12805326.75084865],
    &[12.409673645990857, -1340.2447537670125, -148.91608375189028, 35218.65380732205, 15934.02096145226, 372.2902093797257, -393088.82241040637, -406689.82472641236, -39462.76219425092, -248.19347291981714, 2310246.8943058876, 4310376.044198464, 977261.7996217799, 26060.3146565808, 0.0, -7934844.606635721, -23412586.68747219, -9798678.31087438, -625447.5517579392, 0.0, 0.0, 16740451.193663329, 71805548.59215647, 48732788.40780609, 5907004.655491647, 0.0, 0.0, 0.0, -21963931.0247338, -129079865.73180349, -130781083.07258508, -26581520.949712414, 0.0, 0.0, 0.0, 0.0, 17460261.903825384, 134487306.5650021, 191918581.25692365, 60605867.76534431, 0.0, 0.0, 0.0, 0.0, 0.0, -7695983.208297689, -75035836.28090248, -144299685.15558168, -67339853.07260479, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1442996.8515558168, 17315962.218669802, 43289905.546674505, 28859937.031116337],
    &[14.071247279470288, -1407.1247279470288, -281.42494558940575, 34193.1308891128, 27861.06961335117, 1266.412255152326, -352625.4568235254, -656001.5481689048, -124108.40100492795, -1969.9746191258405, 1914322.8361355355, 6396507.588301604, 2827898.5657551438, 191087.53805520653, 984.9873095629202, -6075401.725384092, -31889949.134409104, -25956385.581602074, -4207865.786452795, -94558.78171804034, 0.0, 11855307.257899307, 89618085.37327273, 117548385.5232389, 36168734.00715043, 2009374.111508357, 0.0, 0.0, -14410082.913959933, -147488059.78471342, -285732998.6564884, -146684310.14011008, -16074992.892066857, 0.0, 0.0, 0.0, 10635330.118769234, 140713598.49448526, 377963270.374722, 297789243.3255385, 57267162.17798818, 0.0, 0.0, 0.0, 0.0, -4363212.356418147, -71993003.88089943, -255247922.8504616, -290153621.7018068, -91627459.48478109, 0.0, 0.0, 0.0, 0.0, 0.0, 763562.1623731757, 15271243.247463515, 68720594.61358581, 106898702.73224461, 53449351.366122305],
    &[15.556349186104045, -1400.071426749364, -466.6904755831214, 30568.22615069445, 41535.4523268978, 3266.8333290818496, -283125.5551870936, -875511.3321939356, -287481.33295920276, -8711.555544218265, 1381870.4982016224, 7618255.323418873, 5841097.992398347, 757905.3323469891, 9800.499987245548, -3952868.3281890377, -33837859.6226298, -47486689.271533765, -14818355.98071527, -842842.9989031171, -3920.1999948982193, 6979044.9353618575, 84748190.22304134, 189378328.0868748, 111812815.41004144, 15827807.47940156, 333216.9995663487, 0.0, -7711593.418535497, -124623157.83781439, -403859003.4744146, -393196059.48829144, -109961609.85689506, -5997905.992194275, 0.0, 0.0, 5200565.314660513, 106724644.71825053, 468503101.3902862, 683761283.1101475, 332383957.06743276, 37986737.95056374, 0.0, 0.0, 0.0, -1959633.3069735267, -49292314.72156486, -278569411.6374675, -565580320.5972824, -436847486.4314831, -94966844.87640937, 0.0, 0.0, 0.0, 0.0, 316556.1495880312, 9496684.487640936, 66476791.413486555, 177271443.76929748, 199430374.24045968, 79772149.69618388],
    &[16.911534525287763, -1319.0996929724456, -710.2844500620861, 24910.690355748873, 54691.90265478063, 7102.84450062086, -199826.69195080022, -991557.0922866721, -539816.1820471854, -28411.37800248344, 848789.9178241928, 7401163.969646936, 9375754.740819536, 2130853.350186258, 53271.33375465645, -2129432.781286134, -28248012.578969162, -64635884.95564983, -35372165.613091886, -3942078.6978445775, -46878.77370409768, 3328156.171507581, 61188164.235048465, 217844240.83404177, 223171374.20950744, 62380731.82670271, 3422150.4803991304, 15626.257901365892, -3286384.6812301204, -78594394.96826994, -394037401.51644284, -648205589.1266598, -356065594.8161237, -51472893.52709925, -1125090.5688983442, 0.0, 1998283.8310425275, 59433761.64339511, 391906548.1662566, 927944016.9391117, 859319884.7963632, 261864829.91108963, 16032540.606801406, 0.0, 0.0, -684409.8022383958, -24494159.260391038, -202431068.26769453, -639682175.7259147, -880575146.9644712, -494336668.70971, -71255736.03022847, 0.0, 0.0, 0.0, 101215.53413384726, 4251052.433621585, 42510524.336215846, 170042097.34486338, 318828932.52161884, 280569460.61902463, 93523153.53967486],
    &[18.16590212458495, -1162.6177359734368, -1017.2905189767572, 17984.2431033391, 64089.302695535705, 13733.422006186222, -119022.99072028059, -943028.3110914539, -851472.1643835458, -76296.78892325678, 423447.1785240752, 5722259.16924426, 11879410.035351083, 4654104.124318664, 209816.16953895616, -906405.8524082906, -17990782.828103952, -65371088.749446414, -61342618.29429846, -12588970.17233737, -302135.2841360969, 1229904.2374428995, 32767944.906760328, 177504479.4299569, 301830096.98040384, 156103230.1369834, 17825981.764029715, 218208.81632051442, -1070334.9531805452, -36106692.390042044, -264862776.8113075, -684305899.8526901, -673929536.5591272, -206962669.63322636, -12656111.346589837, -62345.37609157555, 580891.052237853, 23832064.98806849, 222577570.4542601, 787153971.3212403, 1207911688.0357707, 763495863.0119169, 136816927.83296254, 3553686.4372198065, 0.0, -179479.1129908993, -8697833.937251274, -99155306.88466452, -449388086.7579825, -956761733.0976402, -975896967.7595929, -414596751.0089774, -35536864.37219806, 0.0, 0.0, 24160.649825697983, 1352996.3902390872, 18265451.268227674, 101474729.26793154, 279055505.4868117, 401839927.90100884, 290217725.70628417, 82919350.20179547],
    &[19.339079605813716, -928.2758210790583, -1392.4137316185875, 10791.206420044053, 65443.44538607362, 24367.24030332528, -55232.41135420397, -711523.4168570982, -1120893.053952963, -178693.09555771874, 158387.06197161434, 3265210.200645588, 11330766.741046255, 8041189.3000973435, 670099.1083414452, -282659.9875185733, -8138658.261310644, -45810411.77025153, -75051100.13424186, -29484360.767023593, -1393806.1453502062, 328145.50275144714, 12212860.840026632, 96616107.80268474, 260891919.51426935, 251957264.7363834, 59933664.25005887, 1626107.1695752405, -249242.0579597272, -11413615.358077561, -117108956.89778131, -447626204.37208545, -726387433.4421266, -464137446.40161866, -68296501.1221601, -995575.8181072901, 119921.63263565085, 6531812.8150227945, 82629311.86857603, 411172812.8783108, 952210832.9531937, 1046748415.1580049, 473197186.346395, 40818608.54239889, 248893.95452682252, -33263.21692199959, -2102544.7347440673, -31677412.39432287, -194775474.15791342, -589687215.3404719, -933850117.3846381, -748009298.0046107, -248893954.52682254, -9955758.181072902, 0.0, 4061.2067172208804, 292406.8836399034, 5117120.463698309, 37525550.06712093, 140720812.7517035, 292699290.5235433, 341482505.6108005, 209070921.8025309, 52267730.45063273],
    &[20.445048300260872, -613.3514490078262, -1840.0543470234786, 4600.135867558696, 53361.57606368088, 40481.19563451653, -17173.840572219135, -360650.6520166018, -1133473.4777664628, -377824.4925888209, 38641.14128749305, 1184994.9994831202, 6800840.866598777, 10201261.299898164, 1841894.401370502, -56673.67388832314, -2292707.716391254, -19269049.122029867, -53273253.45502375, -47889254.435633056, -5157304.323837406, 55814.981859712185, 2807922.9335578284, 31170520.638577726, 126571205.01725501, 211817856.15760773, 128932608.09593514, 8595507.206395676, -36801.08694046957, -2215425.433816268, -30603783.899694495, -164353654.2761371, -405216768.30151045, -464157389.1453665, -206292172.95349622, -8420088.691979438, 15640.461949699567, 1096672.3908259931, 18135575.644263405, 121281662.12101151, 396007296.29465795, 670449562.0988628, 567303475.6221147, 193662039.91552708, 4473172.1176140765, -3884.5591770495657, -310969.18464696786, -5991216.953908446, -47983710.55878026, -195240806.5452732, -438370867.5261795, -550112461.2093233, -362063813.7551158, -98409786.58750968, -994038.2483586837, 429.3460143054783, 38641.14128749305, 850105.1083248471, 7934314.344365239, 38679782.42878054, 108303390.80058552, 180505651.3343092, 176821862.5315682, 93936614.4698956, 20874803.215532355],
    &[21.494185260204677, -214.94185260204677, -2364.3603786225144, 967.2383367092104, 21279.24340760263, 63837.73022280789, -2579.302231224561, -85116.97363041052, -510701.84178246313, -737680.4381302245, 4513.7789046429825, 198606.2718042912, 1787456.446238621, 5163763.066911572, 4518292.683547625, -5416.534685571579, -297909.4077064368, -3574912.892477242, -15491289.200734714, -27109756.101285752, -16265853.66077145, 4513.7789046429825, 297909.4077064368, 4468641.115596552, 25818815.334557857, 67774390.25321437, 81329268.30385725, 36146341.468381, -2579.302231224561, -198606.2718042912, -3574912.892477242, -25818815.334557857, -90365853.6709525, -162658536.6077145, -144585365.873524, -50162269.79285527, 967.2383367092104, 85116.97363041052, 1787456.446238621, 15491289.200734714, 67774390.25321437, 162658536.6077145, 216878048.81028602, 150486809.3785658, 42324415.13772163, -214.94185260204677, -21279.24340760263, -510701.84178246313, -5163763.066911572, -27109756.101285752, -81329268.30385725, -144585365.873524, -150486809.3785658, -84648830.27544326, -19855898.459671877, 21.494185260204677, 2364.3603786225144, 63837.73022280789, 737680.4381302245, 4518292.683547625, 16265853.66077145, 36146341.468381, 50162269.79285527, 42324415.13772163, 19855898.459671877, 3971179.691934375],
];
