// Generated by tests/oracles/generate.py (mpmath, 50 digits). Do not edit.

/// (nu, x, J_nu(x), Y_nu(x))
pub const BESSEL_TABLE: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.05, 9.993750976494685808751319e-1, -1.979311000817209672144664),
    (0.0, 0.7, 8.812008886074052808388017e-1, -1.906649293373950674337452e-1),
    (0.0, 1.0, 7.651976865579665514497175e-1, 8.825696421567695798292677e-2),
    (0.0, 2.0, 2.238907791412356680518275e-1, 5.103756726497451195966066e-1),
    (0.0, 3.3, -3.442962603988846373894166e-1, 2.690919950545337750351439e-1),
    (0.0, 8.0, 1.716508071375539060908694e-1, 2.235214893875662205273234e-1),
    (0.0, 15.0, -1.422447282678077323386427e-2, 2.054642960389182647919294e-1),
    (0.0, 39.5, 6.72680985097538596732556e-2, 1.076599710263504566541545e-1),
    (0.0, 40.5, -5.358267563226294688182981e-2, 1.133433143742016849489177e-1),
    (0.0, 75.0, 3.464391380509705613738426e-2, -8.536904764777560989480543e-2),
    (0.0, 250.0, -2.605337342520423366439651e-2, -4.321684544036626770065139e-2),
    (0.0, 1000.0, 2.478668615242017456133073e-2, 4.715917977622813399773261e-3),
    (1.0, 0.05, 2.499218831375969913267979e-2, -1.278985517117497040829035e+1),
    (1.0, 0.7, 3.289957415400589478487921e-1, -1.103249871907633369655733),
    (1.0, 1.0, 4.400505857449335159596822e-1, -7.8121282130028871654715e-1),
    (1.0, 2.0, 5.767248077568733872024482e-1, -1.070324315409375468883708e-1),
    (1.0, 3.3, 2.20663452985241082698109e-1, 3.878529310237099138640226e-1),
    (1.0, 8.0, 2.346363468539146243812767e-1, -1.580604617312474942555553e-1),
    (1.0, 15.0, 2.051040386135227611471374e-1, 2.107362803687351194045186e-2),
    (1.0, 39.5, 1.085199464011415797973293e-1, -6.591091580356654400502884e-2),
    (1.0, 40.5, 1.126905299405943127052043e-1, 5.498584250054305298930673e-2),
    (1.0, 75.0, -8.513999504482910394102953e-2, -3.52137851605804856643924e-2),
    (1.0, 250.0, -4.326903841033074951080911e-2, 2.596699218548458226149275e-2),
    (1.0, 1000.0, 4.728311907089523917576072e-3, -2.478433129235177891486236e-2),
    (2.0, 0.05, 3.124349009193844320596487e-4, -5.096148958461816066594692e+2),
    (2.0, 0.7, 5.878694436419171301489004e-2, -2.961477561827271703011206),
    (2.0, 1.0, 1.149034849319004804696469e-1, -1.650682606816254391077227),
    (2.0, 2.0, 3.528340286156377191506208e-1, -6.174081041906826664849774e-1),
    (2.0, 3.3, 4.780316864505458996306948e-1, -3.402961261592170602664531e-2),
    (2.0, 8.0, -1.129917204240752499955502e-1, -2.630366048203780940912122e-1),
    (2.0, 15.0, 4.157167797525047472014926e-2, -2.026544789673351298665358e-1),
    (2.0, 39.5, -6.177341767931631132908703e-2, -1.109972325860247120468142e-1),
    (2.0, 40.5, 5.914764007377377713887694e-2, -1.106279641272612872704334e-1),
    (2.0, 75.0, -3.691431367295916557581172e-2, 8.443001337682679694375497e-2),
    (2.0, 250.0, 2.570722111792158766831003e-2, 4.342458137785014435874333e-2),
    (2.0, 1000.0, -2.477722952860599551349558e-2, -4.765486640207516957602986e-3),
    (5.0, 0.05, 8.137173160673094506696669e-11, -7.824006200153004759864776e+8),
    (5.0, 0.7, 4.288240705888549287459249e-5, -1.499998317251485849532959e+3),
    (5.0, 1.0, 2.497577302112344313750655e-4, -2.604058666258122207161848e+2),
    (5.0, 2.0, 7.039629755871685484243512e-3, -9.935989128481974980957514),
    (5.0, 3.3, 6.371690931952850418498158e-2, -1.379757056447808837551373),
    (5.0, 8.0, 1.857747721905633123403132e-1, 2.564010649901134822887249e-1),
    (5.0, 15.0, 1.304561345650295526659305e-1, 1.671727157594002014539767e-1),
    (5.0, 39.5, 1.237555668634392257027213e-1, -3.050833201745329768783205e-2),
    (5.0, 40.5, 9.203849830761996508636768e-2, 8.583565907071199449252993e-2),
    (5.0, 75.0, -7.852397701375136695551382e-2, -4.838367129697009941324797e-2),
    (5.0, 250.0, -4.446943851215875468279443e-2, 2.386320323060529419567013e-2),
    (5.0, 1000.0, 5.025406945233186074238837e-3, -2.472595671974069074582646e-2),
    (10.0, 0.05, 2.627921438978773412722594e-23, -1.211276336518674884618049e+21),
    (10.0, 0.7, 7.517591150215395392828536e-12, -4.244719426070386692431971e+9),
    (10.0, 1.0, 2.630615123687453206997854e-10, -1.216180142786891892881304e+8),
    (10.0, 2.0, 2.515386282716736709635161e-7, -1.291845422080392826359131e+5),
    (10.0, 3.3, 3.209600151017726561341828e-5, -1.05145316952587530787582e+3),
    (10.0, 8.0, 6.076702677425115631708718e-2, -9.067010045692280460936474e-1),
    (10.0, 15.0, -9.007181104765905396382653e-2, 2.199714136019558554177151e-1),
    (10.0, 39.5, 8.449686788324713585903281e-2, -9.755979277712319708572394e-2),
    (10.0, 40.5, 1.265670252899529859171894e-1, 1.414893625053761405560133e-2),
    (10.0, 75.0, -8.041786789189445454762169e-2, 4.579833506132498867293433e-2),
    (10.0, 250.0, 1.69537786054828975357968e-2, 4.7550846021970499691314e-2),
    (10.0, 1000.0, -2.452062230603655819198016e-2, -5.949000574162668580842062e-3),
    (30.0, 0.05, 3.269877096297748172213173e-81, -3.244875565648902168184129e+78),
    (30.0, 0.7, 7.882518268205112696717974e-47, -1.346425335817549186566269e+44),
    (30.0, 1.0, 3.482869794251482902249676e-42, -3.048128783225643216155079e+39),
    (30.0, 2.0, 3.650256266474097105212938e-33, -2.913223848218904671870119e+30),
    (30.0, 3.3, 1.155220440611030688737799e-26, -9.240820965554409611196781e+23),
    (30.0, 8.0, 2.583099782566307476786914e-15, -4.262139336611732547135463e+12),
    (30.0, 15.0, 1.037471020107871818996092e-7, -1.181341931041963352707983e+5),
    (30.0, 39.5, -1.375361949274177773652362e-1, -7.601737527924749546422087e-2),
    (30.0, 40.5, -5.986366517794776230912466e-2, -1.40557044705050311083644e-1),
    (30.0, 75.0, -1.77713473816506316879632e-2, 9.457835593516066783581545e-2),
    (30.0, 250.0, -4.821389579465961675717257e-2, 1.550576490559029740004626e-2),
    (30.0, 1000.0, -2.027189698107584523808966e-2, -1.503185143142054639160508e-2),
    (60.0, 0.05, 9.041098925071957836954548e-179, -5.86783382891865747545772e+175),
    (60.0, 0.7, 5.284886305994935191791521e-110, -1.003905409824585626249828e+107),
    (60.0, 1.0, 1.038114976564521331896412e-100, -5.111092775306671116904279e+97),
    (60.0, 2.0, 1.182237218320969429943357e-82, -4.489890253793994188816142e+79),
    (60.0, 3.3, 1.286683581422441482313743e-69, -4.129383022974337613861301e+66),
    (60.0, 8.0, 1.22819978399021272794687e-46, -4.35839030169729745858375e+43),
    (60.0, 15.0, 1.513514464747660841758185e-30, -3.620189563738263650512978e+27),
    (60.0, 39.5, 7.403822299582326810522017e-8, -9.522837772978379190447136e+4),
    (60.0, 40.5, 2.286665429544640563525742e-7, -3.14585678416616074038838e+4),
    (60.0, 75.0, 9.169364023890723293640167e-2, -7.560583407419996036159307e-2),
    (60.0, 250.0, 2.038750797601023311377391e-2, -4.698391086476361408400148e-2),
    (60.0, 1000.0, -1.024585185079205553996986e-2, 2.308227088793817298009426e-2),
    (0.5, 0.05, 1.783380824021974229494181e-1, -3.563788851169038311850884),
    (0.5, 0.7, 6.143610667912650832211756e-1, -7.293951585245627818637216e-1),
    (0.5, 1.0, 6.71396707141803090416364e-1, -4.31098868018376079520521e-1),
    (0.5, 2.0, 5.130161365618277516656918e-1, 2.347857104062484691740347e-1),
    (0.5, 3.3, -6.928522075415759087056172e-2, 4.337218471793625941393852e-1),
    (0.5, 8.0, 2.790928085709920614516249e-1, 4.104480174033306261896375e-2),
    (0.5, 15.0, 1.339676888224393461781325e-1, 1.565055159073085707234926e-1),
    (0.5, 39.5, 1.236067975969456404701398e-1, 2.895368457205623405125544e-2),
    (0.5, 40.5, 4.189435851291178851771724e-2, 1.181688175870313124666256e-1),
    (0.5, 75.0, -3.572700968170258096920363e-2, -8.492257892204688154249356e-2),
    (0.5, 250.0, -4.89754161927549320949129e-2, -1.216090860983517811533936e-2),
    (0.5, 1000.0, 2.0863266605093827730006e-2, -1.418956937092729432343414e-2),
    (1.5, 0.05, 2.972796874910147137478489e-3, -7.145411510578296365996709e+1),
    (1.5, 0.7, 1.482635083201016227379577e-1, -1.656354150397783343026492),
    (1.5, 1.0, 2.40297839123427010895843e-1, -1.102495575160179169936885),
    (1.5, 2.0, 4.912937786871623450068806e-1, -3.956232813587035170786745e-1),
    (1.5, 3.3, 4.127263257387087787240635e-1, 2.007160835357826193976482e-1),
    (1.5, 8.0, 7.593140281170707030041686e-2, -2.739622083534504286242544e-1),
    (1.5, 15.0, 1.654366951621378604687014e-1, -1.235339877619521081298997e-1),
    (1.5, 39.5, 3.208297058716878191125898e-2, -1.228737929242353560637789e-1),
    (1.5, 40.5, 1.192032461922883936645939e-1, -3.897660993051595364199809e-2),
    (1.5, 75.0, -8.539893905113624928874961e-2, 3.459470862940862254863705e-2),
    (1.5, 250.0, -1.235681027460619784371901e-2, 4.892677255831559138245154e-2),
    (1.5, 1000.0, -1.416870610432220049570414e-2, -2.087745617446475502432944e-2),
    (2.5, 0.05, 2.973009241140529929123305e-5, -4.283683117495808781286175e+3),
    (2.5, 0.7, 2.105396886631329994150042e-2, -6.369265486037365831106959),
    (2.5, 1.0, 4.949681022847794227116512e-2, -2.876387857462161430290134),
    (2.5, 2.0, 2.239245314689157658446291e-1, -8.282206324443037447920464e-1),
    (2.5, 3.3, 4.444909714257110260742558e-1, -2.512526803286511219597051e-1),
    (2.5, 8.0, -2.506185325166019100889686e-1, -1.437806298728769733530592e-1),
    (2.5, 15.0, -1.008803497900117740843922e-1, -1.812123134596989923494725e-1),
    (2.5, 39.5, -1.211701162865277582996644e-1, -3.828587137642853957508675e-2),
    (2.5, 40.5, -3.306448842459412972774732e-2, -1.210559738781806423660328e-1),
    (2.5, 75.0, 3.231105211965713099765365e-2, 8.630636726722322644443904e-2),
    (2.5, 250.0, 4.882713446945965772078827e-2, 1.274802988053496521192878e-2),
    (2.5, 1000.0, -2.090577272340679433149311e-2, 1.412693700240390005836116e-2),
    (7.5, 0.05, 6.875812978962492903415533e-17, -6.172692383136904980186896e+14),
    (7.5, 0.7, 2.673329867137681270782469e-8, -1.594672444952128393930942e+6),
    (7.5, 1.0, 3.821974121348042196031584e-7, -1.120651624242787873936126e+5),
    (7.5, 2.0, 6.329818630237478444419927e-5, -6.962712505347138297800794e+2),
    (7.5, 3.3, 2.199823448023587521798937e-3, -2.156891378383374922303122e+1),
    (7.5, 8.0, 2.759399608703306540653632e-1, -2.992963633520794206079816e-1),
    (7.5, 15.0, -8.121294510330084641888811e-2, -2.056430134059547705588581e-1),
    (7.5, 39.5, -1.035264684841480608594606e-1, 7.547298984506585953135087e-2),
    (7.5, 40.5, -1.186952214071357912812663e-1, -4.365296492673988852446393e-2),
    (7.5, 75.0, 9.233447755021150606103014e-2, -2.273118019978404688671636e-3),
    (7.5, 250.0, 1.75627896613762286008801e-2, -4.731985916250035761795756e-2),
    (7.5, 1000.0, 1.360010021258339540035333e-2, 2.125264389789782418307826e-2),
    (20.5, 0.05, 1.29750228338843199200847e-52, -1.196711405834712713213054e+50),
    (20.5, 0.7, 4.038970722546644797438216e-29, -3.846621926498117376109944e+26),
    (20.5, 1.0, 6.014290829258684669643344e-26, -2.584820614501272773243828e+23),
    (20.5, 2.0, 8.612513208158536026185429e-20, -1.811541092587582068893745e+17),
    (20.5, 3.3, 2.28360907495069966292516e-15, -6.889541051604950404858264e+12),
    (20.5, 8.0, 9.306793658830365315841064e-8, -1.812625214935964255930608e+5),
    (20.5, 15.0, 4.779620547004459822947057e-3, -4.80833068770835376951187),
    (20.5, 39.5, 1.126022763979520074067593e-1, -7.853540094132955952861775e-2),
    (20.5, 40.5, 1.307843445940636852738009e-1, 3.339234036936565223984483e-2),
    (20.5, 75.0, 6.209995735651828576182143e-2, 7.048100753017966637702793e-2),
    (20.5, 250.0, -2.365285327081239860134744e-2, -4.467237342446442895232804e-2),
    (20.5, 1000.0, 2.336539872445442155998876e-2, -9.529514515093079782149593e-3),
    (59.5, 0.05, 4.438452484884169910561271e-177, -1.205318271162637845888377e+174),
    (59.5, 0.7, 6.933855922389716423496194e-109, -7.715932395909727953709646e+105),
    (59.5, 1.0, 1.139530983211132332623093e-99, -4.695354491806359145050028e+96),
    (59.5, 2.0, 9.175424359507357418411141e-82, -5.833813717473931327646785e+78),
    (59.5, 3.3, 7.772304693931471967001175e-69, -6.893702233759250081495135e+65),
    (59.5, 8.0, 4.756329536710860013275215e-46, -1.135073192051026960931447e+43),
    (59.5, 15.0, 4.256474721315534837464016e-30, -1.298813374154755468888368e+27),
    (59.5, 39.5, 1.213483164389573016136792e-7, -5.897350948102592560531749e+4),
    (59.5, 40.5, 3.686334865273509240565565e-7, -1.981919621852354574582924e+4),
    (59.5, 75.0, 1.102399898108968636210981e-1, -4.206338757266135233961854e-2),
    (59.5, 250.0, 4.501715856683252574828969e-2, -2.439804004725497140725842e-2),
    (59.5, 1000.0, -2.328437600426142719166984e-2, 9.776882033582783215640715e-3),
];

pub const J0_FIRST_ZERO: f64 = 2.404825557695772768621632;
pub const Y0_FIRST_ZERO: f64 = 8.935769662791675215848871e-1;
pub const ZETA_5: f64 = 1.036927755143369926331365;
/// (s, zeta(s))
pub const ZETA_INT: &[(u32, f64)] = &[(2, 1.644934066848226436472415), (3, 1.202056903159594285399738), (4, 1.082323233711138191516004), (5, 1.036927755143369926331365), (6, 1.017343061984449139714518), (7, 1.008349277381922826839798), (8, 1.004077356197944339378685), (9, 1.002008392826082214417853), (10, 1.000994575127818085337146), (11, 1.000494188604119464558702), (12, 1.000246086553308048298638)];

pub const ROOTS_NU1_A1_B1_5: [f64; 1] = [6.321871910549067735214622];
pub const ROOTS_NU5_2_A1_B1_5: [f64; 5] = [6.586137118046037568826496, 1.272353195273119629483683e+1, 1.895506481037106800683887e+1, 2.521206740388984808391142e+1, 3.147945972516251016759315e+1];
pub const ROOTS_NU7_2_A1_B1_5: [f64; 5] = [6.875357107881435679578791, 1.287883219610298046871513e+1, 1.906001511604739431673705e+1, 2.529115690342814731740503e+1, 3.154287149686760097147418e+1];

/// (c, d, regularized radial sum)
pub const REG_RADIAL: &[(f64, f64, f64)] = &[
    (0.0, 1.0, -2.617993877991494365385536e-1),
    (1.0, 1.0, -5.466637850396220463516884e-1),
    (0.1, 1.0, -2.682667298357554830252687e-1),
    (2.0, 0.5, -1.093327570079244092703377),
    (0.3, 2.0, -1.962821925169469231632955e-1),
    (7.0, 1.5, -3.50000000047021037403548),
];

/// (D, eta, total energy, per inner area) at sqrt(ab) = 1
pub const ENERGY: &[(u32, f64, f64, f64)] = &[
    (4, 0.2, -3.037886989277161820301065e+1, -2.076414445338144225761212),
    (5, 0.2, -8.387848094949431858416096e+1, -4.751291077722235744501942),
    (7, 0.3, -3.516205080508311161538206e+1, -2.606212300252903736562039),
];
