// High-precision cylindrical Bessel reference values (40-digit ambient
// precision, rounded to 20 significant digits). Regeneration recipe in
// bessel_oracle.hpp.
#pragma once

namespace issp_test {

struct BesselRef { int order; double x; double j; double y; };

inline constexpr BesselRef kBesselRef[] = {
    {0, 0.1, 0.99750156206604003200, -1.5342386513503668083},
    {0, 0.5, 0.93846980724081290423, -0.44451873350670655715},
    {0, 1.0, 0.76519768655796655145, 0.088256964215676957983},
    {0, 2.0, 0.22389077914123566805, 0.51037567264974511960},
    {0, 3.7, -0.39923020337119111533, 0.10607431532035411027},
    {0, 5.0, -0.17759677131433830435, -0.30851762524903378007},
    {0, 8.0, 0.17165080713755390609, 0.22352148938756622053},
    {0, 12.0, 0.047689310796833536624, -0.22523731263436143369},
    {0, 14.5, 0.087544868010376222906, 0.19030189118784451661},
    {0, 16.0, -0.17489907398362918483, 0.095810997080712403142},
    {0, 20.0, 0.16702466434058315473, 0.062640596809383831162},
    {0, 35.0, -0.12684568275631256981, 0.045797987195155641061},
    {0, 60.0, -0.091471804089061869531, 0.047358952209449399203},
    {0, 100.0, 0.019985850304223122424, -0.077244313365083152254},
    {1, 0.1, 0.049937526036242000321, -6.4589510947020266377},
    {1, 0.5, 0.24226845767487388638, -1.4714723926702430692},
    {1, 1.0, 0.44005058574493351596, -0.78121282130028871655},
    {1, 2.0, 0.57672480775687338720, -0.10703243154093754689},
    {1, 3.7, 0.053833987745461790513, 0.41667437268380749329},
    {1, 5.0, -0.32757913759146522204, 0.14786314339122684480},
    {1, 8.0, 0.23463634685391462438, -0.15806046173124749426},
    {1, 12.0, -0.22344710449062761237, -0.057099218260896521050},
    {1, 14.5, 0.19342946359604696006, -0.081042090928738752109},
    {1, 16.0, 0.090397175661304186239, 0.17797516893941685963},
    {1, 20.0, 0.066833124175850045579, -0.16551161436252129586},
    {1, 35.0, 0.043990942179625639970, 0.12751273354559011719},
    {1, 60.0, 0.046598383758166317869, 0.091869609369866895264},
    {1, 100.0, -0.077145352014112158033, -0.020372312002759793305},
    {2, 0.1, 0.0012489586587999189840, -127.64478324269015877},
    {2, 0.5, 0.030604023458682641307, -5.4413708371742657196},
    {2, 1.0, 0.11490348493190048047, -1.6506826068162543911},
    {2, 2.0, 0.35283402861563771915, -0.61740810419068266648},
    {2, 3.7, 0.42832965620657586556, 0.11915507531954182124},
    {2, 5.0, 0.046565116277752215532, 0.36766288260552451799},
    {2, 8.0, -0.11299172042407525000, -0.26303660482037809409},
    {2, 12.0, -0.084930494878604805352, 0.21572077625754534685},
    {2, 14.5, -0.060864941997128366347, -0.20148011062629124104},
    {2, 16.0, 0.18619872094129220811, -0.073564100963285295688},
    {2, 20.0, -0.16034135192299815017, -0.079191758245635960748},
    {2, 35.0, 0.12935945088086260638, -0.038511545278264777222},
    {2, 60.0, 0.093025083547667413460, -0.044296631897120502694},
    {2, 100.0, -0.021528757344505365585, 0.076836867125027956388},
    {3, 0.1, 0.000020820315754756264895, -5099.3323786129040409},
    {3, 0.5, 0.0025637299945872440754, -42.059494304723882688},
    {3, 1.0, 0.019563353982668405919, -5.8215176059647288478},
    {3, 2.0, 0.12894324947440205110, -1.1277837768404277861},
    {3, 3.7, 0.40922510004543101489, -0.28785807504105958462},
    {3, 5.0, 0.36483123061366699446, 0.14626716269319276959},
    {3, 8.0, -0.29113220706595224938, 0.026542159321058447210},
    {3, 12.0, 0.19513693953109267725, 0.12900614368007830333},
    {3, 14.5, -0.21021979242284099215, 0.025461370755968754581},
    {3, 16.0, -0.043847495425981134212, -0.19636619418023818355},
    {3, 20.0, -0.098901394560449675613, 0.14967326271339410371},
    {3, 35.0, -0.029207004936098484955, -0.13191405300596323459},
    {3, 60.0, -0.040396711521655156971, -0.094822718163008262111},
    {3, 100.0, 0.076284201720331943409, 0.023445786687760911560},
    {5, 0.1, 2.6030817909644415564e-9, -24461484.502303908563},
    {5, 0.5, 8.0536272413574740860e-6, -7946.3014788074733418},
    {5, 1.0, 0.00024975773021123443138, -260.40586662581222072},
    {5, 2.0, 0.0070396297558716854842, -9.9359891284819749810},
    {5, 3.7, 0.099485417008333909630, -0.97906506823354205704},
    {5, 5.0, 0.26114054612017009005, -0.45369482249110188076},
    {5, 8.0, 0.18577477219056331234, 0.25640106499011348229},
    {5, 12.0, -0.073470963101658581266, -0.22981794662508243345},
    {5, 14.5, 0.19580734645551886551, 0.091512891450624749249},
    {5, 16.0, -0.057473270437036432507, 0.19632958325308617198},
    {5, 20.0, 0.15116976798239497461, -0.10003576788953242697},
    {5, 35.0, -0.0015053072953907044842, 0.13554781474770029774},
    {5, 60.0, 0.027454744228344099750, 0.099464632840450885642},
    {5, 100.0, -0.074195736964513920834, -0.029480196281661895696},
    {8, 0.1, 9.6854292315946505495e-16, -41084285530817.021208},
    {8, 0.5, 3.7582231547976099550e-10, -106081857.51587979022},
    {8, 1.0, 9.4223441726045005454e-8, -425674.61848650669368},
    {8, 2.0, 0.000022179552287925904088, -1853.9221751598764179},
    {8, 3.7, 0.0023089067943833500518, -19.517110253441178857},
    {8, 5.0, 0.018405216654802000920, -2.8208693825455951774},
    {8, 8.0, 0.22345498635110295428, -0.38766993997718496854},
    {8, 12.0, 0.045095329080457240083, 0.26140472921203020024},
    {8, 14.5, -0.22144109572593412682, -0.058434927996632303135},
    {8, 16.0, -0.0070211419529606526289, -0.21399373926089764070},
    {8, 20.0, -0.073868928840750341319, 0.17100977770523653398},
    {8, 35.0, -0.11496575142656602650, -0.073918361082231268895},
    {8, 60.0, -0.10330342693895791159, -0.0058225493814843113432},
    {8, 100.0, 0.043349559882386455062, -0.067137173531197432044},
    {13, 0.1, 1.9599824694071794771e-27, -1.2493022262718505089e+25},
    {13, 0.5, 2.3823232712155035115e-18, -10285596069836542.551},
    {13, 1.0, 1.9256167644801728904e-14, -1275361870151.9837595},
    {13, 2.0, 1.4949420101531159484e-10, -165774198.13779064555},
    {13, 3.7, 3.7316369556796930088e-7, -68468.329753670244859},
    {13, 5.0, 0.000015207582205849454893, -1745.5617222856353096},
    {13, 8.0, 0.0032747932232966051380, -9.5431018727933544833},
    {13, 12.0, 0.12014788292670000256, -0.47997039464616460103},
    {13, 14.5, 0.27304681253673484702, -0.12190933824225857341},
    {13, 16.0, 0.23682250475024417808, 0.10104858974546367420},
    {13, 20.0, -0.20414505254842980368, -0.0065691935069595063839},
    {13, 35.0, -0.12112335074542397981, -0.070106602950286953258},
    {13, 60.0, -0.083938229259957834589, 0.061825238967951802741},
    {13, 100.0, -0.036393674340623354261, -0.071386931529074844317},
    {21, 0.1, 9.3320450718018017318e-48, -1.6242726818976413966e+45},
    {21, 0.5, 4.4377456110501701752e-33, -3.4165819642235911576e+30},
    {21, 1.0, 9.2276219820966702292e-27, -1.6445047095479364780e+24},
    {21, 2.0, 1.8702336817763727540e-20, -814175719616658887.27},
    {21, 3.7, 6.8307673383934831318e-15, -2254374652838.5140619},
    {21, 5.0, 3.3438199867531891546e-12, -4667608668.1512116100},
    {21, 8.0, 4.1101536638687014646e-8, -398970.67023001467291},
    {21, 12.0, 0.000078389272169461551082, -235.94220426972604236},
    {21, 14.5, 0.0018131821402166173979, -11.612709669867392175},
    {21, 16.0, 0.0078789915636653428233, -3.0086704335672556979},
    {21, 20.0, 0.11063364402897207349, -0.38492615895168717046},
    {21, 35.0, 0.018218225379314406131, 0.14961072477268224262},
    {21, 60.0, 0.0099873208764039745829, -0.10595346813600327899},
    {21, 100.0, 0.062980904563834676245, -0.050444908841112864459},
    {34, 0.1, 1.9714443502585063531e-83, -4.7488512690752734475e+80},
    {34, 0.5, 1.1455660799430411877e-59, -8.1733118798933347546e+56},
    {34, 1.0, 1.9575512101373197457e-49, -4.7846058411365987292e+46},
    {34, 2.0, 3.2917136862259783969e-39, -2.8490658852979459362e+36},
    {34, 3.7, 3.7251904794438440544e-30, -2.5282031506723694966e+27},
    {34, 5.0, 9.5951001758024278607e-26, -9.8644682107304530026e+22},
    {34, 8.0, 6.3104262289665137129e-19, -15264853532461819.114},
    {34, 12.0, 3.4169935929150680939e-13, -29285441145.962689766},
    {34, 14.5, 1.3022966829225338924e-10, -79490921.743066888851},
    {34, 16.0, 2.6249663353104269515e-9, -4042953.2275979855789},
    {34, 20.0, 1.7132431380166401104e-6, -6761.2421349202998981},
    {34, 35.0, 0.17434696165413325856, -0.16901788184557464103},
    {34, 60.0, -0.11345116337614449753, -0.0017399511941580559107},
    {34, 100.0, 0.015752770513722451268, 0.080753689639291674405},
    {50, 0.1, 2.9201425690996437633e-130, -2.1801026184716042088e+127},
    {50, 0.5, 2.5905580660785431235e-95, -2.4575848224461085522e+92},
    {50, 1.0, 2.9060049481732393945e-80, -2.1911428126053389736e+77},
    {50, 2.0, 3.2240958394363845645e-65, -1.9761505765184132876e+62},
    {50, 3.7, 7.0201783204584151726e-52, -9.0933693104209841717e+48},
    {50, 5.0, 2.2942476159525400713e-45, -2.7888370175838946899e+42},
    {50, 8.0, 3.0427141670979022490e-35, -2.1195943289820486483e+32},
    {50, 12.0, 1.3055942249573417767e-26, -5.0229670817577433781e+23},
    {50, 14.5, 1.2068974073756141834e-22, -55118254463210136199.},
    {50, 16.0, 1.3171467418935803381e-20, -510172642683171898.01},
    {50, 20.0, 4.4510392847006816162e-16, -15606426801663.735818},
    {50, 35.0, 7.6069951699272916558e-6, -1172.8690492895336108},
    {50, 60.0, -0.13798273148535212047, 0.0086417699626744902868},
    {50, 100.0, -0.038698339728525383467, 0.076505263944803040444},
};

struct SphHankelRef { int order; double x; double re; double im; };

inline constexpr SphHankelRef kSphHankelRef[] = {
    {0, 0.3, 0.98506735553779858478, -3.1844549637520201943},
    {0, 1.0, 0.84147098480789650665, -0.54030230586813971740},
    {0, 2.5, 0.23938885764158259762, 0.32045744621877348593},
    {0, 6.0, -0.046569249699820978802, -0.16002838110839433676},
    {0, 15.0, 0.043352522677141124389, 0.050645860857254751590},
    {0, 40.0, 0.018627829011983719675, 0.016673451541306546110},
    {1, 0.3, 0.099102888040641876539, -11.599917234711199625},
    {1, 1.0, 0.30116867893975678925, -1.3817732906760362241},
    {1, 2.5, 0.41621298927540652498, -0.11120587915407320325},
    {1, 6.0, -0.16778992272503116656, 0.019897852848421922676},
    {1, 15.0, 0.053536029035730826549, -0.039976131953324140949},
    {1, 40.0, 0.017139147266606139101, -0.018210992723451056022},
    {2, 0.3, 0.0059615248686202172803, -112.81471738335998035},
    {2, 1.0, 0.062035052011373861102, -3.6050175661599689548},
    {2, 2.5, 0.26006672948890523236, -0.45390450120366132983},
    {2, 6.0, -0.037325711662694604477, 0.16997730753260529810},
    {2, 15.0, -0.032645316869994959079, -0.058641087247919579780},
    {2, 40.0, -0.017342392966988259242, -0.018039275995565375311},
    {3, 0.3, 0.00025585976969508180926, -1868.6453724879552091},
    {3, 1.0, 0.0090065811171125162594, -16.643314540123808550},
    {3, 2.5, 0.10392046970240393973, -0.79660312325324945641},
    {3, 6.0, 0.13668516300611899616, 0.12174990342874915907},
    {3, 15.0, -0.064417801325729146242, 0.020429102870684281023},
    {3, 40.0, -0.019306946387479671507, 0.015956083224005384108},
    {5, 0.3, 2.3295825567290273037e-7, -1302798.6738475799885},
    {5, 1.0, 0.000092561158611258163567, -999.44034339223640949},
    {5, 2.5, 0.0073576387377689362884, -5.5991001548063242768},
    {5, 6.0, 0.15850243974863115384, -0.16365353372734607784},
    {5, 15.0, 0.065968007076521960742, 0.020475698281859065531},
    {5, 40.0, 0.022448773791045017771, -0.011268975348057962664},
    {10, 0.3, 4.2862929705600964686e-16, -370472999001932.35963},
    {10, 1.0, 7.1165526400473130240e-11, -672215008.25620844360},
    {10, 2.5, 6.0504362296385397812e-7, -32423.794085334419855},
    {10, 6.0, 0.0019579011995069084927, -4.9703181769130300684},
    {10, 15.0, 0.0018969790010883333311, 0.078461689849642581608},
    {10, 40.0, 0.013124803182748325864, -0.021803068636888071980},
    {20, 0.3, 2.6562331650069795822e-36, -3.0610844664868336371e+34},
    {20, 1.0, 7.5377957222368729940e-26, -3.2395922185789839244e+23},
    {20, 2.5, 6.4488532759578935148e-18, -1524247248298953.8663},
    {20, 6.0, 1.8272175875141640810e-10, -23269177.294943642882},
    {20, 15.0, 0.0015467058510412507907, -1.5559965765652175590},
    {20, 40.0, 0.026535391837540280915, -0.0048414810986760748921},
    {40, 0.3, 1.8803854400487983029e-82, -2.1885615703666566645e+80},
    {40, 1.0, 1.5382103742442297479e-61, -8.0284508508540570588e+58},
    {40, 2.5, 1.2327465623700150427e-45, -4.0135685089996996990e+42},
    {40, 6.0, 1.6643931157467498936e-30, -1.2500573681395750921e+27},
    {40, 15.0, 4.3134984072286627530e-15, -205429035189.85245123},
    {40, 40.0, 0.022425190568663448819, -0.050888168299639721583},
};

}  // namespace issp_test
