#ifndef FAULTDX_TESTS_SHAPIRO_REFERENCE_HPP
#define FAULTDX_TESTS_SHAPIRO_REFERENCE_HPP

// Generated by make_shapiro_reference.py from scipy.stats.shapiro.

#include <vector>

struct ShapiroCase {
    const char* name;
    std::vector<double> x;
    double w;
    double p;
};

inline const std::vector<ShapiroCase>& shapiro_cases() {
    static const std::vector<ShapiroCase> cases = {
        {"normal_scores_10", {-1.54663527139923, -1.0004905456193152, -0.6554235052344266, -0.3754617702355184, -0.12258084388880242, 0.12258084388880255, 0.3754617702355184, 0.6554235052344266, 1.0004905456193152, 1.54663527139923}, 0.9965048684184032, 0.999961373132172},
        {"normal_draw_10", {-0.21118912055729136, -0.5177334709845255, 0.1495958369624623, -1.7898968436779759, 0.2844522535691842, -0.3216956064836901, -0.726050324449302, 0.09853727513129668, -1.9514738484064804, -0.15841288562715672}, 0.8455054531097035, 0.05134812027916356},
        {"exponential_10", {1.0244551304708742, 2.4298459863271367, 0.10643103609085351, 0.7349788846298599, 0.3822909808237647, 4.280935580637749, 0.8166859134688385, 0.2822025615914604, 1.0972885881497993, 0.20975296881733999}, 0.759744891313126, 0.004690350098142193},
        {"lognormal_10", {1.0282305395202629, 0.49959491028895026, 1.1695466209806369, 0.5207154096117554, 1.2113108349795743, 0.8503777121264131, 1.9834038458529393, 1.1758323526493057, 2.9893627323336824, 0.7213927517954697}, 0.8245531172561892, 0.028764338446253798},
        {"student_t3_10", {0.7749965324530264, -1.5548166661780058, -0.9933850867584474, -1.7469669228563398, -3.458058454281067, -0.21079472366918078, -0.36615861958457846, -0.22244555885403666, 1.653893063924193, -3.083225135001085}, 0.9683260991113176, 0.8749060027928568},
        {"cauchy_10", {-0.06056898490188305, 126.98496658722091, -0.04061105213412952, 2.356369900001944, 0.9720203898818817, -0.5075649195226689, 0.08074527064611961, -1.2283614158775245, -0.5220223225374553, -0.5739169199863624}, 0.3868021292733491, 1.755981648444891e-07},
        {"normal_scores_30", {-2.040281322010411, -1.6098160671844486, -1.3608733428671869, -1.1758134725500289, -1.0241061837416245, -0.8929184864443952, -0.775546958322378, -0.6680021322695737, -0.56768639112746, -0.4727891209922674, -0.38197576769654207, -0.2942131389309213, -0.2086637457511546, -0.12461740794799792, -0.041443733093996606, 0.04144373309399647, 0.12461740794799778, 0.20866374575115446, 0.29421313893092116, 0.38197576769654196, 0.4727891209922672, 0.5676863911274599, 0.6680021322695734, 0.7755469583223779, 0.8929184864443951, 1.0241061837416239, 1.1758134725500289, 1.3608733428671869, 1.6098160671844486, 2.0402813220104106}, 0.9977832114891794, 0.9999999793306611},
        {"normal_draw_30", {0.3757325601327688, -0.21322506082178258, -0.5014829692374623, 0.153073453363695, -0.5753083988801887, -0.7719429461651369, 0.3949064774378438, 1.9312068474400939, -0.9977568753677936, 1.1551673162548703, 1.0815576939107636, -1.1200802383514654, 0.1902346053615725, 0.5240390963859574, -0.9108560639633887, 1.079217769211546, 0.8779097900984013, 1.698437695911691, 0.38983442136617874, 0.9460304564262813, 1.8121165247471582, 0.20299055190558077, -0.5002227898590546, -1.450914320783902, 0.2864548014439108, -1.2672165371800261, 1.0976933587930149, 0.14716505891727408, 0.8110572665632209, 0.16271351725088673}, 0.9691721302167206, 0.5167780531488645},
        {"exponential_30", {1.5918766583131905, 0.698679015607801, 1.2088154795351802, 0.42039462604903044, 1.5114940842614135, 0.5160192974101222, 1.5615606250310212, 0.6501662985606966, 0.25432062409153383, 2.688079245906818, 0.2957688499752796, 1.2488135046582072, 0.3518141081276685, 0.3808124895254792, 1.7402605971933331, 0.33052658879661634, 0.9794816376767136, 0.22797138918956364, 0.07448834967626025, 1.6808389844082954, 1.1484696231679898, 2.1143898198691624, 0.2299886696466513, 0.2631458801365461, 0.06947140972897606, 0.35284283168519964, 0.24846441516330312, 0.09920090794114138, 4.472114585711361, 0.8680942498944587}, 0.7919755057131732, 4.697912721801528e-05},
        {"lognormal_30", {2.017389534215842, 0.6829029394322312, 2.1675757326558864, 0.44223478949213746, 3.030181602039316, 0.4174220296426425, 0.933316064837544, 1.169101454703735, 2.2491103269037636, 3.2159861260260674, 1.0401707100466289, 4.556321342817518, 0.5191199399043358, 1.2990959823586001, 0.8273557590936772, 1.580816305486447, 0.4669719321569195, 0.41550123160072255, 2.791358891064337, 2.342512994319407, 1.5665795051362592, 0.5701987516275312, 1.6058556814716565, 1.4300737856648293, 2.6825568870019856, 1.2048234295094216, 0.27482650733367586, 0.8411308853833204, 0.9782832079338479, 1.8846914490569593}, 0.9094637807523309, 0.014424520493022253},
        {"student_t3_30", {-0.5083817738594618, 0.8129859320806146, 2.337815634291909, 0.027875401810433655, -0.46879188701778324, -1.5181545844846625, -0.8777022006384999, 0.8792408462814889, 0.6645006775971026, 0.6747060779528905, -1.3487788806496914, 0.047597683955593495, 0.8445650485066608, 0.9933948590940541, 0.6931715966748438, 3.3005096596058157, 1.0549020237519329, -0.8829791730679752, 0.7859769257367378, -2.706313619728848, 0.5765885915047164, -0.02900856330670907, -0.3458391725628325, -0.13314234854275284, -1.535665835587894, -2.5200128638478865, -0.2480054622506838, 0.11447303416023542, -1.3809534402928678, 0.40002797224415104}, 0.9620956500173861, 0.3500381081296964},
        {"cauchy_30", {66.70595497784502, 0.24716174695151655, -1.6021241593265185, 0.4628938281595932, 1.1915950236576458, 1.1812101128663741, 1.1050978359272976, 5.78803073313315, 1.5556210889720314, -0.67400881905919, 4.958526411470887, 0.32743990433613446, 1.3614655214405469, 0.3176556941370133, -0.18276709774233796, 0.30440650208156084, 1.190549389917256, 0.20775525472021414, 0.5963459302644828, 0.14009448231866084, -0.3029448902271149, 28.309447987631824, -1.2727082759918387, 3.0636368826657603, -0.10718860122126259, -8.95530138253956, -0.02546888754688485, -0.21079201771895736, 1.0623377620788115, 0.0032064325876347026}, 0.40506806808311147, 6.068548901069264e-10},
        {"normal_scores_100", {-2.498590560962256, -2.139206442985978, -1.9400873318827654, -1.7971034256260587, -1.6835465976780204, -1.5882958682169486, -1.5056012163044232, -1.43208428708654, -1.3655831908785103, -1.3046268229653304, -1.2481665394580728, -1.1954271085021424, -1.1458183419972168, -1.0988799140705432, -1.054245412492451, -1.0116180790824514, -0.9707539424317224, -0.9314497863026414, -0.8935343746060128, -0.8568619257010014, -0.8213071752056111, -0.7867615829230667, -0.7531303783884556, -0.7203302308575227, -0.6882873909026718, -0.6569361927965857, -0.6262178361515811, -0.5960793860276631, -0.5664729456325053, -0.537354966597925, -0.5086856698276004, -0.48042855588587813, -0.45254998840180144, -0.4250188373912559, -0.39780617203394536, -0.37088499448209117, -0.34423000787040897, -0.3178174129491543, -0.29162472875305206, -0.2656306335079021, -0.23981482260806394, -0.21415788100561844, -0.1886411677615244, -0.16324671084032114, -0.13795711049811366, -0.1127554498305592, -0.08762521122251525, -0.06255019758103977, -0.03751445734407256, -0.012502212342580959, 0.012502212342580959, 0.037514457344072424, 0.06255019758103977, 0.08762521122251539, 0.1127554498305592, 0.13795711049811366, 0.163246710840321, 0.1886411677615244, 0.21415788100561858, 0.23981482260806394, 0.2656306335079021, 0.2916247287530519, 0.3178174129491543, 0.3442300078704091, 0.37088499448209117, 0.3978061720339456, 0.42501883739125573, 0.45254998840180144, 0.48042855588587835, 0.5086856698276004, 0.5373549665979253, 0.566472945632505, 0.5960793860276631, 0.6262178361515813, 0.6569361927965857, 0.6882873909026718, 0.7203302308575227, 0.7531303783884556, 0.7867615829230666, 0.8213071752056111, 0.8568619257010014, 0.8935343746060128, 0.9314497863026414, 0.9707539424317222, 1.0116180790824514, 1.054245412492451, 1.0988799140705432, 1.1458183419972168, 1.1954271085021424, 1.2481665394580728, 1.3046268229653304, 1.3655831908785103, 1.43208428708654, 1.5056012163044226, 1.5882958682169486, 1.6835465976780204, 1.7971034256260583, 1.9400873318827654, 2.139206442985977, 2.498590560962256}, 0.9991475955430905, 0.9999999980370231},
        {"normal_draw_100", {-0.5364197001623904, -0.34425995847746044, 0.3167639100769005, 0.5982864231822282, -0.7553040280098665, 1.0568181132060246, -2.3900877811963137, 1.5139097918565758, 0.6582662605589961, 0.8262739773412575, 0.13927932541063118, 0.41358168965548353, 0.3312612441281967, -0.34728200171793183, -0.9087239913265686, 0.41866222757340515, 0.2696298751612753, -0.6725716778122101, 0.058685028083558737, -0.7266422077464993, 2.394721505160568, 0.5470173844542683, 0.6458087163090246, 0.9125593827938466, -3.508473267904083, 0.03245607698939935, 1.1215297727237434, -1.1096130780920053, 0.3641776309655934, 0.6038607457879078, -1.237428013027494, 3.1155919161387233, 0.10892534380567484, -0.03209288546130908, 0.07267385725380161, 1.3135712455368123, 2.63143076833554, -0.41121650086945954, -1.7617278939526926, 0.6595552929773163, 0.27860957084420734, 1.3606142490201205, -1.3654307091803608, -0.2877477929072851, 0.034168168276333837, -0.18983380707780298, -0.35231560894404995, -0.4655750303193851, 1.6873356952220906, -0.3334084010618195, 1.1717630787439162, -0.10271425189337355, 0.6517067711143697, 1.1903453942827016, 0.5480548975517863, -2.1434986293662597, -1.1362043593384192, -0.6581376512596158, 0.6251693749202027, -0.8214986360236015, -0.9555538836936872, 1.3227569195784437, 2.1311133325935536, -1.0386135448356755, -0.28046377850947524, 0.0741345697219151, -1.1550182575302286, -0.5231303263947871, -1.6988151851793836, 0.3817841711715247, -0.288948541063472, -1.3744064760492356, -2.2668010429896075, 1.2188191129164312, -0.015656240361372562, -2.3249052238154513, 0.04970061712145258, 2.1458166725145875, -0.05830645086955183, 1.175024088926406, -1.442665154894129, 1.1084182614977292, -1.4273619913611308, 0.5892866861788569, -0.39820214041307167, 0.29856861006210816, 0.7230572681338514, -0.8260443933798314, -1.384272122184641, 1.7708670099547548, 0.7229096596022723, 0.5583288557892596, 0.0788125192330473, 2.2028977360738935, 0.8416008660288341, -1.9588817991948162, -0.08403270503775145, 0.08769481219610217, -2.4373408452805316, -1.4782396139268308}, 0.99239237696456, 0.8488725738860299},
        {"exponential_100", {1.2973373833887603, 1.2384676366301388, 0.24740344658202293, 3.666716874498003, 0.07872115516182558, 1.7568984139787296, 0.5233947930944991, 0.2435569472775588, 0.06486972257888074, 3.033371328341113, 0.02023613677421836, 0.6021929486434888, 0.6646197024338845, 1.7529439804391775, 0.3145138737919006, 1.1049479303766794, 1.036432241690657, 0.18952155658503325, 0.9261048631774517, 1.4066433787622403, 2.6033867597296485, 0.30381196888133377, 2.009352025838168, 1.5952929590770621, 0.25535339078401725, 0.32254248378781647, 0.0762256454283796, 1.0730290801694253, 0.01836339850071866, 0.3764687050489278, 0.4111878189853771, 0.3075010144998203, 0.17718014798853135, 0.9911169157500062, 0.6301802620715375, 1.643754811623702, 1.9705808467447956, 0.24967679630056433, 0.43443849815904456, 1.3411820570831545, 0.7239151361421876, 1.267756051901654, 2.298007604919246, 0.12372942114280386, 0.6855904321835273, 0.5465741659642979, 1.4102995988945473, 1.2379673469419645, 0.6348072364818265, 1.2981206169697554, 0.5263213710541081, 0.7607115788307969, 0.42032427820776486, 1.3659664990822584, 0.01607786547705813, 0.2364581777496262, 0.15845490886540875, 0.5818901980373383, 0.4318041057721079, 0.1435386044875612, 5.256024969895037, 0.41279507211980904, 3.4586001072741173, 0.9185670947441191, 4.712462578789046, 1.0223680000948492, 1.3985523995566285, 0.5225025565063384, 1.8184131505695211, 1.6446818261771814, 0.3328607740349124, 0.0963760928210908, 3.9506889662270757, 2.5192740997769048, 1.8437982527785137, 2.548513413699482, 0.4560939177187408, 1.0781058227891132, 1.3217045101406593, 0.8412724529685375, 0.8169082141878037, 1.5257942404218932, 0.5173318659530226, 0.7677789190351522, 0.8646731061508172, 0.5565583316896338, 0.20984457045646376, 2.0432922565068723, 1.9030732045408079, 0.1042056323928686, 0.30741808592574554, 1.6520895066803596, 0.9885759109262989, 1.0720351960310748, 0.6954453530413858, 0.1465577405006892, 1.4406505226257573, 0.9323198868626266, 0.9369451214509648, 0.49556987746512515}, 0.8237632429111001, 1.4249426973384555e-09},
        {"lognormal_100", {0.40479690975272675, 0.48031066801794714, 0.7921601675142294, 0.7197712032386083, 0.7239778565206011, 0.2997137679635596, 0.9425913267716158, 0.6481333203374585, 1.174199454115362, 1.1217737945013797, 0.4618926738976407, 1.3782715645864163, 1.4385364167235546, 0.2845091704288559, 1.6371444062187277, 0.7190595520215128, 1.1320193812838917, 1.024530270387213, 0.6793536543450029, 0.24040304807469315, 1.032915650694815, 0.6311055540764289, 0.8020893004034843, 3.1205330562307694, 0.313613009981603, 0.6291142208228225, 1.7591788932921308, 0.5624081503094619, 3.8856290950549206, 3.3861105723949443, 0.2504855039329493, 4.563885021229588, 0.6963245230856813, 0.8368982564878686, 6.081976115616402, 6.236670399088583, 0.8605332502540012, 0.490054486937228, 1.0529927981029026, 2.1502643711202314, 0.5833238852966107, 1.5123877397102534, 1.083200783579538, 0.9773532143402435, 2.229302351455257, 0.30882754369145715, 0.3415187587094139, 0.5695220591638968, 1.9490133118882431, 1.6990822185099466, 0.8708719909678835, 1.6237900688386697, 0.3608051767005962, 0.6269612605258038, 1.707543567981439, 3.3222933865505557, 0.66284368269038, 1.0016445935117406, 0.47006129953253173, 0.5945093075594442, 1.189533637427021, 1.5672594614598399, 0.436198303922775, 0.7828898890730578, 1.686697957734468, 2.771243033130181, 0.3595029424412295, 0.7224278703383504, 0.8133833917346351, 0.8193356272719333, 1.217795083014683, 0.7286604864073736, 1.1630672862900344, 2.803570336045124, 2.789190736096898, 0.6709101585821766, 0.8556945216074614, 1.5696060080578094, 0.7248898785400537, 0.6569808353128905, 0.4689808092162752, 0.6267268759572896, 0.46895628002857376, 0.512295549512323, 0.583160859802312, 0.8975356060091482, 4.1054864692235995, 3.6439925950723246, 1.326612708182724, 1.3843233556160353, 1.6953547439220356, 0.9577720919503155, 0.7822514219443599, 3.094351695764467, 0.32663592692782256, 2.5950818228306027, 0.4863375712268917, 0.2584714252354605, 1.746241602633861, 0.5113634396658374}, 0.7473955929535758, 7.99460746768891e-12},
        {"student_t3_100", {-2.451992435210028, -0.08346392752001136, 0.05967082582259422, -0.18381622077692844, 0.3755615103624488, -0.5718962861846564, 0.12189049379433631, 0.6856665893473972, -4.008094771101333, -3.6700731224892356, 0.23622870804112114, 1.791967120618278, 0.28999144534786214, 1.3658151832971908, 0.22918227160171933, -1.0281629439494322, 10.611488630106107, 0.8584760623894896, -0.41414143136490633, -0.4435949154487746, 1.0636599284502546, -1.9998323299856884, 0.8041221309067916, -0.36183362343953707, 0.34128005235689823, -2.172912573587253, 0.10508941099632393, 3.1474468984246724, -0.11072798485418384, 2.6624206752600297, -1.0530068179902592, 0.23326434121938328, 0.8707037790248914, -1.088357835805641, 2.456626068467942, -0.7344336221654618, -1.2791624110573512, 0.633051905160904, -0.592765628526125, 0.9049000602597924, 0.8145906246825699, 0.06858520148304759, -1.287309102975508, -1.8689959689015232, 0.44162480707947455, -0.3945788798022158, 1.1484337560330713, -0.9481351711306796, 0.2562778793554948, -1.190792836032381, 1.2291585648103673, -0.4014639332972747, 1.0282943035499699, -1.4846209020104835, -0.7909613716294506, -0.4402464872940939, 1.4815979759090177, -0.31781057579434924, 0.8998020199362666, -2.024734304529587, 2.3129828470925404, -3.6360534562039497, 1.3119067169300929, -0.807769206327772, 0.12289813724077461, -0.4955216629694556, 0.5110324785779843, 2.342020079900045, 1.6952071794372978, -0.9125594094540262, 0.43779431535949576, 0.613045508740888, -2.4196638742435947, -0.843926879289486, 0.276115493897606, -1.5942241317490726, -2.3845052733895917, 0.4207841625569742, -0.6935927563321794, -0.756507764192796, 1.8144373573981523, -4.080346801281333, 1.7608394862411287, 0.8161500532858565, -2.144771254234104, -0.060545024423171626, -1.4510202734070468, 0.40576847791044923, 2.9824337536093557, 1.826138356801954, 0.05457521424561885, -1.0500129239472504, 0.328833059860104, 0.2806509484018029, 0.4938981770688954, 3.71727745565578, -0.6619728341482267, 2.0473813134326284, 0.7328943648127846, 0.4124897634720487}, 0.872335080496891, 8.718434021228206e-08},
        {"cauchy_100", {-9.502788608635358, -2.9499693151441604, 2.5864115928272313, -11.722052910291513, 0.34581600681491054, 0.31151852306779404, 0.36152493000946473, -0.025462465908103197, 0.5704474655670769, 0.33634375826435997, -1.0341877646218922, -0.6787757854252343, 0.7970291875594288, -0.44934847718115417, -0.03931479046145731, -0.5300172122481809, -0.5585630389042735, 0.834407761971361, -1.0335610509404398, -11.740317851124711, 17.406062165460398, -2.757625331276762, 1.9380555425525372, 0.4697955909128939, -4.169625365441605, -0.566745060898969, -1.4924329053636678, 6.572665948459252, 0.23450312538319104, -0.44508822542801507, -0.3552629210906758, -0.10804154289682191, -0.5453348828263404, 0.11642242394452337, -0.09282375119426033, 0.7606516148956189, -0.7918057662264512, -0.903623716867211, -1.8158424715892958, 1.0918177738715809, -0.19677217771536593, 0.21618185563370634, 0.8422257673615372, -0.23814207268306825, -0.5052980868972355, -0.12204381862584565, -0.5838568525267328, -1.8633413867655066, 1.3580455196248216, -3.4624678752704665, 0.6233797757976872, -0.17874078203920668, -9.062965899974829, 3.1301579083850575, 0.4274481642255784, 0.6034277135917397, 0.16479233086547912, 1.0424356492628377, -0.7983192166055552, 2.8991352000036397, 0.5578732183572414, -0.48348454990649786, -0.8432759022645265, -2.493856327989488, 0.30235697669198847, -2.661672017964997, -4.825341383185969, -2.956965401013903, 2.0992827249517236, 5.943458141002505, 0.47767316940982285, -1.3334153197963028, 0.48021563081667923, 0.59389158522525, 1.5312105058435823, -0.0901450757779502, -49.73029535372868, 0.42202264557453417, 1.4625919709679396, 1.1505168326412314, 1.5791099453959827, -0.5120149777984068, -3.151517628486457, 0.2643560312715563, -3.4103439448430337, -0.9367100103346058, -3.684046191400956, 0.9033738274425573, -3.6277193961282035, 0.011265095602169924, 3.8139234554954218, 0.46756703193787424, 0.15588011026979742, 0.7348743343549502, 9.99831893235593, 0.8512160283823841, -0.0256494737398041, -3.493051932767742, -0.7738820020382251, 0.17248298514901922}, 0.49362230697603293, 6.0862383402032e-17},
        {"uniform_30", {0.8120718946483708, 0.24183553103191857, 0.19649771131529092, 0.0004439496404226029, 0.15302388612959095, 0.10791113425883758, 0.4969245805214393, 0.19351671912160295, 0.2517647888745407, 0.4314598563650317, 0.0635101578588434, 0.23361953683722447, 0.875852726078666, 0.38258747119809666, 0.28169107597126164, 0.5068791306679621, 0.3380191447480394, 0.041797289896380985, 0.0010075983401297561, 0.07267977278591264, 0.5026998326919506, 0.9264084457384442, 0.031621043822465666, 0.20937850203393282, 0.08536133837971493, 0.6139359744026206, 0.07120821581270209, 0.2643758095005111, 0.47742314239842254, 0.07885028411923134}, 0.8905900103921126, 0.004982096787815786},
        {"uniform_100", {0.8506009797004154, 0.19239439037978856, 0.7583863647889454, 0.49481537498899064, 0.18172886838507063, 0.6423821210363813, 0.42211879617723125, 0.14203899033291167, 0.4525111541075685, 0.8431929502841847, 0.5887301417443271, 0.2970315281776701, 0.15829824813394033, 0.5730110742694753, 0.1643528312391267, 0.37233320367523337, 0.9617566061638492, 0.636235855326823, 0.6667189246827776, 0.6856451793226831, 0.3706045232373485, 0.029223342002623776, 0.6141965316312379, 0.9182792276671484, 0.7126400810855429, 0.298343055855252, 0.3897530108171351, 0.9082243864689815, 0.32406111921936964, 0.5008217260688594, 0.7164331500188499, 0.8579293104247911, 0.5617622817790887, 0.8034057454713818, 0.9270191176392044, 0.2132058803356912, 0.14030925657448867, 0.2599339863517275, 0.903518561049658, 0.8014185566073232, 0.7747553708613168, 0.0551949368832334, 0.8519181603500638, 0.6258434472241007, 0.7529917720779101, 0.531305642841778, 0.08033259383461178, 0.19798604626623917, 0.1947735667065682, 0.595251770151731, 0.11888049969825254, 0.9928647591510321, 0.40087428617782106, 0.3641859997000443, 0.8037754942719734, 0.5160586117389133, 0.6310220902872286, 0.848275648579526, 0.847386738777032, 0.5853309729307524, 0.12367903361779065, 0.6121584308766922, 0.30593454299399114, 0.7001510892247945, 0.8142068006560153, 0.19986172155954673, 0.12478856798992155, 0.9851158157232888, 0.8311768467999969, 0.9436969008591685, 0.28511109653868527, 0.06954936101002052, 0.3540916296599198, 0.3871192403225433, 0.3589514453519058, 0.9243263041737342, 0.3059240418279724, 0.7067272924864105, 0.2947322719130734, 0.492687935991064, 0.6841618870310807, 0.3655767514367577, 0.11256163920485784, 0.3474436193335815, 0.1445648771170106, 0.8475610003315138, 0.8167516300568823, 0.41890809695001274, 0.8619340603467621, 0.3890127610386601, 0.7951743565063949, 0.5793970413191365, 0.8374070060504432, 0.915082955491851, 0.21924475391768283, 0.6156169288202489, 0.8420594869183474, 0.441969529559898, 0.7587782643946365, 0.4434783690630082}, 0.9458886704514442, 0.0004491225063982626},
    };
    return cases;
}

#endif
