//! Reference values evaluated at 50-digit precision outside this crate.

use antijam::channel::GroundNode;

pub struct GridPoint {
    pub uav: [f64; 3],
    pub node: GroundNode,
    pub distance_m: f64,
    pub angle_deg: f64,
    pub terrestrial_db: f64,
    pub excess_db: f64,
    pub shadow_std_db: f64,
}

pub struct GaussianPair {
    pub mean_a: [f64; 4],
    pub cov_a: [[f64; 4]; 4],
    pub mean_b: [f64; 4],
    pub cov_b: [[f64; 4]; 4],
    pub distance: f64,
}

/// Ground nodes of the default scenario.
pub const GBS_POS: [f64; 3] = [0.0, 0.0, 30.0];
pub const JAMMER_POS: [f64; 3] = [500.0, 200.0, 10.0];

pub const CHANNEL_GRID: [GridPoint; 50] = [
    GridPoint { uav: [63.0, 104.75, 40.0], node: GroundNode::Gbs, distance_m: 122.23568423336943059, angle_deg: 4.6769050126842422167, terrestrial_db: 63.450819440094346473, excess_db: -5.3764541166452337943, shadow_std_db: 6.6024689447994606912 },
    GridPoint { uav: [-451.75, -203.5, 90.0], node: GroundNode::Jammer, distance_m: 1033.7506045947446023, angle_deg: 4.4251918088131703917, terrestrial_db: 91.638239607430117473, excess_db: -6.1693805237695262626, shadow_std_db: 6.7056713583866001394 },
    GridPoint { uav: [-481.75, -81.0, 40.0], node: GroundNode::Gbs, distance_m: 488.51209043379878256, angle_deg: 1.1726992982284711255, terrestrial_db: 81.741809629579328387, excess_db: -14.38549514642194821, shadow_std_db: 8.0391932877263268385 },
    GridPoint { uav: [288.5, -229.0, 40.0], node: GroundNode::Jammer, distance_m: 478.30246706451347761, angle_deg: 3.5889939485243629221, terrestrial_db: 81.462959676906500545, excess_db: -8.7613119587038914166, shadow_std_db: 7.0485124811050112019 },
    GridPoint { uav: [528.5, -239.25, 40.0], node: GroundNode::Gbs, distance_m: 580.13171995676981772, angle_deg: 0.98753617127279148819, terrestrial_db: 84.011209008055730769, excess_db: -14.569855439517350067, shadow_std_db: 8.1151101697781554898 },
    GridPoint { uav: [-142.75, 342.75, 40.0], node: GroundNode::Jammer, distance_m: 658.41106081231654837, angle_deg: 2.608834282222504907, terrestrial_db: 85.682312389853050116, excess_db: -11.548536876903011408, shadow_std_db: 7.4503779442887729881 },
    GridPoint { uav: [581.25, 106.0, 60.0], node: GroundNode::Gbs, distance_m: 590.83632462806482393, angle_deg: 2.9067246268553545568, terrestrial_db: 84.25260251196004855, excess_db: -10.747135617287689167, shadow_std_db: 7.3282429029893046317 },
    GridPoint { uav: [-504.75, 579.0, 60.0], node: GroundNode::Jammer, distance_m: 1073.8545350744671507, angle_deg: 2.6658372544153286903, terrestrial_db: 92.140741849586947252, excess_db: -11.399108865593499866, shadow_std_db: 7.427006725689715237 },
    GridPoint { uav: [258.0, 253.0, 90.0], node: GroundNode::Gbs, distance_m: 361.3488619049463673, angle_deg: 9.4276360082522035755, terrestrial_db: 77.76097141288985578, excess_db: 7.6775226069699175874, shadow_std_db: 4.6546692366165965341 },
    GridPoint { uav: [31.25, 535.75, 60.0], node: GroundNode::Jammer, distance_m: 576.58878327626180071, angle_deg: 4.9561149692764707005, terrestrial_db: 83.930332162201648073, excess_db: -4.4970894195204783927, shadow_std_db: 6.4879928625966470128 },
    GridPoint { uav: [-388.75, 284.75, 60.0], node: GroundNode::Gbs, distance_m: 481.88082032801430019, angle_deg: 3.5624116659352266102, terrestrial_db: 81.561365086095927755, excess_db: -8.8416003420314627347, shadow_std_db: 7.0594112169665570898 },
    GridPoint { uav: [162.0, 260.75, 40.0], node: GroundNode::Jammer, distance_m: 343.41601957392727313, angle_deg: 4.9925476912016741972, terrestrial_db: 77.08894472438713913, excess_db: -4.3825507743343111074, shadow_std_db: 6.4730554466073135791 },
    GridPoint { uav: [555.0, 333.0, 60.0], node: GroundNode::Gbs, distance_m: 647.23566032782835227, angle_deg: 2.6538154885596212901, terrestrial_db: 85.456298094156663878, excess_db: -11.430787287619718559, shadow_std_db: 7.431935649690555271 },
    GridPoint { uav: [793.25, 137.5, 60.0], node: GroundNode::Jammer, distance_m: 299.8363095090386147, angle_deg: 9.4673945085543706541, terrestrial_db: 75.297280403247913984, excess_db: 7.7626526827068777731, shadow_std_db: 4.6383682514927080318 },
    GridPoint { uav: [599.5, 70.5, 60.0], node: GroundNode::Gbs, distance_m: 603.63109595182387356, angle_deg: 2.8452150281368072364, terrestrial_db: 84.535456770269543024, excess_db: -10.916582208379589278, shadow_std_db: 7.3534618384639090331 },
    GridPoint { uav: [-231.75, 498.0, 40.0], node: GroundNode::Jammer, distance_m: 790.10256454462923101, angle_deg: 2.1744620784279960903, terrestrial_db: 88.089577532021512101, excess_db: -12.614288605854283034, shadow_std_db: 7.628470547844521603 },
    GridPoint { uav: [576.5, 237.5, 60.0], node: GroundNode::Gbs, distance_m: 623.50501200872475424, angle_deg: 2.7546671782286610592, terrestrial_db: 84.963134445936536417, excess_db: -11.162405485854634863, shadow_std_db: 7.3905864569262489657 },
    GridPoint { uav: [893.5, -5.25, 40.0], node: GroundNode::Jammer, distance_m: 443.81281245588212513, angle_deg: 3.8670865651144196711, terrestrial_db: 80.474875006728722056, excess_db: -7.9114717223394648949, shadow_std_db: 6.9344945083030879348 },
    GridPoint { uav: [-358.75, 128.0, 60.0], node: GroundNode::Gbs, distance_m: 380.90098779079058723, angle_deg: 4.5033549874022038595, terrestrial_db: 78.456687807124885389, excess_db: -5.9233318949587925896, shadow_std_db: 6.6736244551650964176 },
    GridPoint { uav: [-288.5, 131.0, 120.0], node: GroundNode::Jammer, distance_m: 791.51326583955622291, angle_deg: 7.9119635834366093738, terrestrial_db: 88.113129221548676906, excess_db: 4.1034277442669457196, shadow_std_db: 5.2760949307909901568 },
    GridPoint { uav: [-441.75, 286.5, 60.0], node: GroundNode::Gbs, distance_m: 526.52190125387946677, angle_deg: 3.2610550736854087258, terrestrial_db: 82.73105980186476211, excess_db: -9.7372326345301411406, shadow_std_db: 7.1829674197889824224 },
    GridPoint { uav: [823.5, 308.5, 90.0], node: GroundNode::Jammer, distance_m: 341.21034568136998387, angle_deg: 13.195198895577604605, terrestrial_db: 77.003874598423409248, excess_db: 13.94363114485238743, shadow_std_db: 3.109968452813182112 },
    GridPoint { uav: [334.0, 560.0, 60.0], node: GroundNode::Gbs, distance_m: 652.03987608121023567, angle_deg: 2.6342898791709387077, terrestrial_db: 85.553934348819574737, excess_db: -11.482052815872053332, shadow_std_db: 7.4399411495399151298 },
    GridPoint { uav: [370.25, 380.0, 40.0], node: GroundNode::Jammer, distance_m: 221.88975303064357595, angle_deg: 7.6998296800518467923, terrestrial_db: 71.322572302084370676, excess_db: 3.552482742788443119, shadow_std_db: 5.3630698311787428151 },
    GridPoint { uav: [897.25, 17.75, 90.0], node: GroundNode::Gbs, distance_m: 897.4255540154848967, angle_deg: 3.8249838429568766355, terrestrial_db: 89.77115232741192343, excess_db: -8.0411724121400802554, shadow_std_db: 6.9517566243876805794 },
    GridPoint { uav: [795.5, -8.25, 60.0], node: GroundNode::Jammer, distance_m: 361.50838510330572967, angle_deg: 7.8745850023473177366, terrestrial_db: 77.766798603263366286, excess_db: 4.0072342473095138855, shadow_std_db: 5.291420149037599728 },
    GridPoint { uav: [769.5, -276.5, 60.0], node: GroundNode::Gbs, distance_m: 817.66894278797210533, angle_deg: 2.1012204833320696952, terrestrial_db: 88.542356073609069876, excess_db: -12.779555660311759075, shadow_std_db: 7.658499601833851425 },
    GridPoint { uav: [-255.75, -180.5, 40.0], node: GroundNode::Jammer, distance_m: 846.13138016504269111, angle_deg: 2.0305991575794867027, terrestrial_db: 88.994109176839224565, excess_db: -12.934449105824180924, shadow_std_db: 7.6874543453924104519 },
    GridPoint { uav: [-153.5, -167.25, 60.0], node: GroundNode::Gbs, distance_m: 227.01280250241394701, angle_deg: 7.5280813799620923837, terrestrial_db: 71.623930644313283724, excess_db: 3.0975824341834556102, shadow_std_db: 5.4334866342155421227 },
    GridPoint { uav: [214.5, 638.5, 40.0], node: GroundNode::Jammer, distance_m: 523.2518514061847063, angle_deg: 3.2813905622133977707, terrestrial_db: 82.648807519399582806, excess_db: -9.6777331995021484906, shadow_std_db: 7.174629869492506914 },
    GridPoint { uav: [-259.5, 111.75, 60.0], node: GroundNode::Gbs, distance_m: 282.53904597418035453, angle_deg: 6.0609573052418933613, terrestrial_db: 74.512785621249664774, excess_db: -1.0839042619053405615, shadow_std_db: 6.0350075048508237219 },
    GridPoint { uav: [-319.5, 584.75, 60.0], node: GroundNode::Jammer, distance_m: 905.32470003861045656, angle_deg: 3.1611658760734120604, terrestrial_db: 89.886852830355206491, excess_db: -10.027255285582672379, shadow_std_db: 7.2239219908099010552 },
    GridPoint { uav: [846.5, 67.75, 60.0], node: GroundNode::Gbs, distance_m: 849.20687261703199195, angle_deg: 2.0232512511402879535, terrestrial_db: 89.042010407483559115, excess_db: -12.9503056157984523, shadow_std_db: 7.6904669870324819391 },
    GridPoint { uav: [-128.0, -216.0, 60.0], node: GroundNode::Jammer, distance_m: 753.28613421461568809, angle_deg: 3.7974851108142034187, terrestrial_db: 87.45958319197521232, excess_db: -8.1257032487008304219, shadow_std_db: 6.9630311045661765983 },
    GridPoint { uav: [-124.75, -62.0, 60.0], node: GroundNode::Gbs, distance_m: 139.30743878199756781, angle_deg: 12.153102527028126289, terrestrial_db: 65.176818952108326141, excess_db: 12.548651920389006595, shadow_std_db: 3.5372279639184682216 },
    GridPoint { uav: [606.0, -30.5, 40.0], node: GroundNode::Jammer, distance_m: 253.70504527896168742, angle_deg: 6.7437703421463758741, terrestrial_db: 73.091604757331628481, excess_db: 0.92409829440750751828, shadow_std_db: 5.7550541597199858916 },
    GridPoint { uav: [-301.5, 247.5, 90.0], node: GroundNode::Gbs, distance_m: 390.0749927898480395, angle_deg: 8.7445067853361531472, terrestrial_db: 78.77090251782640834, excess_db: 6.146018200701853736, shadow_std_db: 4.9347522180121772097 },
    GridPoint { uav: [559.5, 675.0, 120.0], node: GroundNode::Jammer, distance_m: 478.7120742158066771, angle_deg: 12.940967200730628539, terrestrial_db: 81.474261198281188618, excess_db: 13.624412629025078306, shadow_std_db: 3.2142034477004422991 },
    GridPoint { uav: [455.25, 370.75, 120.0], node: GroundNode::Gbs, distance_m: 587.11849315108445151, angle_deg: 8.7150889629115069274, terrestrial_db: 84.16926310610773561, excess_db: 6.0771350934825492581, shadow_std_db: 4.9468135252062821598 },
    GridPoint { uav: [-489.5, 621.75, 90.0], node: GroundNode::Jammer, distance_m: 1075.6315877195128189, angle_deg: 4.2535368527702513135, terrestrial_db: 92.162571844666630568, excess_db: -6.7085643889307131029, shadow_std_db: 6.7760498903641969615 },
    GridPoint { uav: [203.5, 108.5, 40.0], node: GroundNode::Gbs, distance_m: 230.61764893433459855, angle_deg: 2.4828936623665861409, terrestrial_db: 71.831933226515573018, excess_db: -11.871372472689412618, shadow_std_db: 7.5020135984296996822 },
    GridPoint { uav: [386.25, 110.0, 60.0], node: GroundNode::Jammer, distance_m: 145.04848327369714348, angle_deg: 19.019703684602998282, terrestrial_db: 65.710001033207359426, excess_db: 18.471841524834878446, shadow_std_db: 0.72192148931277070418 },
    GridPoint { uav: [-463.0, 151.0, 40.0], node: GroundNode::Gbs, distance_m: 487.00102669296293795, angle_deg: 1.176336921438417835, terrestrial_db: 81.70090825450434877, excess_db: -14.381342584982234586, shadow_std_db: 8.0377018622102486876 },
    GridPoint { uav: [96.25, -247.0, 40.0], node: GroundNode::Jammer, distance_m: 602.3479579943805205, angle_deg: 2.8512659914686532988, terrestrial_db: 84.507362248620781919, excess_db: -10.899998967892893902, shadow_std_db: 7.3509809434978521475 },
    GridPoint { uav: [560.0, 249.0, 60.0], node: GroundNode::Gbs, distance_m: 612.86295368540591858, angle_deg: 2.8024249909265573514, terrestrial_db: 84.735846445889065851, excess_db: -11.033302188019346406, shadow_std_db: 7.3710057537201114859 },
    GridPoint { uav: [656.0, -228.0, 90.0], node: GroundNode::Jammer, distance_m: 455.54363128025398836, angle_deg: 9.9603958032494917538, terrestrial_db: 80.819311372848073908, excess_db: 8.7821015399061811934, shadow_std_db: 4.436237720667708381 },
    GridPoint { uav: [170.0, 349.5, 60.0], node: GroundNode::Gbs, distance_m: 388.65183648093057737, angle_deg: 4.4139034809152409759, terrestrial_db: 78.72264601569965066, excess_db: -6.2048930615498157073, shadow_std_db: 6.7102995728247511999 },
    GridPoint { uav: [633.5, 185.0, 40.0], node: GroundNode::Jammer, distance_m: 134.34005359534437822, angle_deg: 12.588398454562424364, terrestrial_db: 64.697447723661902218, excess_db: 13.159565330136699122, shadow_std_db: 3.3587566336294060106 },
    GridPoint { uav: [399.5, 191.5, 60.0], node: GroundNode::Gbs, distance_m: 443.02652290805344062, angle_deg: 3.8739290437197224343, terrestrial_db: 80.451463705166131705, excess_db: -7.8903623938236095927, shadow_std_db: 6.931689092074913802 },
    GridPoint { uav: [-425.0, -195.25, 60.0], node: GroundNode::Jammer, distance_m: 1005.9063388308078457, angle_deg: 2.8456258652195172955, terrestrial_db: 91.277749365329193288, excess_db: -10.915456873403508462, shadow_std_db: 7.3532933952599979088 },
];

pub const BHATTACHARYYA_PAIRS: [GaussianPair; 20] = [
    GaussianPair { mean_a: [0.8, 1.5, 0.9, 0.8], cov_a: [[1.62, 0.97, -0.34, -0.68], [0.97, 1.24, -0.1, -0.06], [-0.34, -0.1, 1.87, 0.26], [-0.68, -0.06, 0.26, 2.2]], mean_b: [1.2, 1.7, -0.8, -0.9], cov_b: [[1.66, 0.19, -0.65, -0.07], [0.19, 1.57, -0.99, -0.14], [-0.65, -0.99, 1.68, -0.67], [-0.07, -0.14, -0.67, 1.91]], distance: 0.77362599634943019811 },
    GaussianPair { mean_a: [0.9, -0.3, 0.6, 1.5], cov_a: [[2.04, 0.78, 1.26, 0.2], [0.78, 1.87, 0.15, -0.24], [1.26, 0.15, 1.64, 0.84], [0.2, -0.24, 0.84, 1.88]], mean_b: [-1.5, -0.4, 0.0, -0.6], cov_b: [[0.95, -0.28, -0.11, -0.8], [-0.28, 1.65, -0.71, 1.22], [-0.11, -0.71, 0.76, -0.42], [-0.8, 1.22, -0.42, 1.83]], distance: 1.8268273940614413323 },
    GaussianPair { mean_a: [-0.5, -1.4, -2.0, -1.7], cov_a: [[1.17, 0.74, 0.17, 0.75], [0.74, 1.11, 0.46, 0.95], [0.17, 0.46, 1.4, 1.14], [0.75, 0.95, 1.14, 1.88]], mean_b: [0.9, 1.1, -0.9, 1.5], cov_b: [[1.4, 0.08, -0.29, -0.96], [0.08, 1.59, 0.2, 0.32], [-0.29, 0.2, 1.33, 0.53], [-0.96, 0.32, 0.53, 1.32]], distance: 1.5402682154122207401 },
    GaussianPair { mean_a: [-1.5, -0.7, 1.7, 2.0], cov_a: [[1.6, 1.09, -0.51, 0.73], [1.09, 1.76, -0.75, 0.05], [-0.51, -0.75, 0.7, 0.07], [0.73, 0.05, 0.07, 1.18]], mean_b: [-0.5, -2.0, 1.8, 0.3], cov_b: [[1.28, -0.3, 0.53, -0.3], [-0.3, 1.77, -0.7, -0.4], [0.53, -0.7, 1.43, -0.47], [-0.3, -0.4, -0.47, 0.87]], distance: 1.5993834971008934266 },
    GaussianPair { mean_a: [-0.2, 1.3, -0.9, -1.6], cov_a: [[0.93, 0.61, 0.15, 0.01], [0.61, 1.72, -0.55, 0.62], [0.15, -0.55, 1.82, -0.92], [0.01, 0.62, -0.92, 0.94]], mean_b: [-1.2, -0.6, 1.0, 1.5], cov_b: [[1.84, -0.63, 0.27, -1.25], [-0.63, 1.25, -1.17, 0.77], [0.27, -1.17, 2.76, -0.93], [-1.25, 0.77, -0.93, 1.46]], distance: 4.3751253103735788207 },
    GaussianPair { mean_a: [-1.8, -1.9, 1.8, 2.0], cov_a: [[1.49, 0.07, 0.25, 0.76], [0.07, 1.82, 0.43, 0.54], [0.25, 0.43, 1.04, 0.34], [0.76, 0.54, 0.34, 2.07]], mean_b: [-1.6, 1.0, -1.6, -0.1], cov_b: [[2.32, 1.59, -0.54, 0.33], [1.59, 2.45, -0.23, -0.69], [-0.54, -0.23, 1.6, -0.62], [0.33, -0.69, -0.62, 1.32]], distance: 2.5207750549076216389 },
    GaussianPair { mean_a: [0.9, 0.8, 0.9, 1.4], cov_a: [[1.91, 0.24, 0.75, 0.99], [0.24, 1.37, 0.68, 0.46], [0.75, 0.68, 1.11, 0.46], [0.99, 0.46, 0.46, 1.24]], mean_b: [-1.5, 1.3, 1.2, -1.9], cov_b: [[0.91, 0.16, -0.35, 0.55], [0.16, 0.45, -0.11, 0.33], [-0.35, -0.11, 0.68, -0.47], [0.55, 0.33, -0.47, 1.2]], distance: 1.8376387204992291307 },
    GaussianPair { mean_a: [-1.2, -1.2, 1.1, 0.2], cov_a: [[1.23, 0.49, -0.02, 0.04], [0.49, 1.08, 0.08, -0.7], [-0.02, 0.08, 0.88, -0.63], [0.04, -0.7, -0.63, 2.03]], mean_b: [-1.8, -1.6, -0.3, -1.0], cov_b: [[1.11, -1.0, -0.5, -0.59], [-1.0, 2.21, 1.14, 0.49], [-0.5, 1.14, 1.41, 0.83], [-0.59, 0.49, 0.83, 1.54]], distance: 0.94878206646056524717 },
    GaussianPair { mean_a: [0.8, -1.4, 2.0, 1.4], cov_a: [[0.87, 0.87, -0.07, 0.27], [0.87, 2.7, 0.0, 0.58], [-0.07, 0.0, 0.5, -0.61], [0.27, 0.58, -0.61, 2.03]], mean_b: [2.0, 0.3, -1.6, -0.8], cov_b: [[1.03, 0.04, 0.2, 0.26], [0.04, 1.09, 0.91, 0.22], [0.2, 0.91, 1.88, -0.47], [0.26, 0.22, -0.47, 1.81]], distance: 4.6703375644729723878 },
    GaussianPair { mean_a: [0.0, -0.7, -1.4, -1.3], cov_a: [[0.91, 0.3, 0.33, 0.07], [0.3, 2.08, 0.33, 0.67], [0.33, 0.33, 1.79, -1.03], [0.07, 0.67, -1.03, 1.59]], mean_b: [-0.7, -0.5, 0.4, -1.5], cov_b: [[1.63, 4.0091470651382934692e-52, -0.11, 0.35], [4.0091470651382934692e-52, 1.31, -0.92, 0.72], [-0.11, -0.92, 1.84, 0.14], [0.35, 0.72, 0.14, 2.16]], distance: 0.73592710295203767131 },
    GaussianPair { mean_a: [-0.6, 0.8, 1.3, 1.5], cov_a: [[1.88, -0.03, 0.78, 0.77], [-0.03, 0.43, 0.03, 0.27], [0.78, 0.03, 1.64, -0.22], [0.77, 0.27, -0.22, 1.67]], mean_b: [-0.2, 1.5, 2.0, -1.0], cov_b: [[2.55, 2.06, 0.13, -0.97], [2.06, 2.43, -0.14, -0.96], [0.13, -0.14, 2.28, -1.16], [-0.97, -0.96, -1.16, 1.62]], distance: 1.0411891164473921411 },
    GaussianPair { mean_a: [-1.6, 1.4, 0.9, 0.6], cov_a: [[1.03, -0.22, -0.51, -0.05], [-0.22, 1.47, 0.07, -0.83], [-0.51, 0.07, 1.32, 0.54], [-0.05, -0.83, 0.54, 2.04]], mean_b: [0.5, -0.3, -0.5, 1.0], cov_b: [[1.35, 0.09, -0.63, -0.06], [0.09, 0.7, -0.48, 0.53], [-0.63, -0.48, 2.14, -1.17], [-0.06, 0.53, -1.17, 1.33]], distance: 1.2484516489620843617 },
    GaussianPair { mean_a: [0.7, -1.9, 0.4, 2.0], cov_a: [[1.71, 1.02, -0.06, -0.1], [1.02, 2.28, -0.49, -0.47], [-0.06, -0.49, 0.74, -0.01], [-0.1, -0.47, -0.01, 0.45]], mean_b: [0.6, 1.3, 1.9, -1.0], cov_b: [[0.99, 0.56, -0.42, 0.36], [0.56, 1.09, 0.22, 0.16], [-0.42, 0.22, 1.57, -0.42], [0.36, 0.16, -0.42, 1.49]], distance: 2.3256551451820431183 },
    GaussianPair { mean_a: [-1.4, -0.8, 1.6, 0.2], cov_a: [[1.33, 0.47, -0.12, 0.28], [0.47, 2.42, -1.23, 0.72], [-0.12, -1.23, 2.55, -1.33], [0.28, 0.72, -1.33, 1.11]], mean_b: [0.3, -1.3, 1.2, 2.0], cov_b: [[0.66, 0.14, 0.37, -0.45], [0.14, 2.31, -0.5, -0.4], [0.37, -0.5, 1.36, -0.37], [-0.45, -0.4, -0.37, 1.24]], distance: 1.133233104675743666 },
    GaussianPair { mean_a: [0.2, 0.7, -0.7, 1.8], cov_a: [[0.91, -0.17, 0.19, 0.82], [-0.17, 0.51, 0.28, -0.3], [0.19, 0.28, 2.07, -0.22], [0.82, -0.3, -0.22, 1.65]], mean_b: [0.3, -2.0, 2.0, -1.8], cov_b: [[1.65, -0.62, -0.27, -0.11], [-0.62, 0.79, -0.36, 0.06], [-0.27, -0.36, 1.24, 0.06], [-0.11, 0.06, 0.06, 0.7]], distance: 3.9920622961898272394 },
    GaussianPair { mean_a: [-0.7, -0.9, -1.6, 0.1], cov_a: [[0.98, -0.05, 0.41, -0.59], [-0.05, 0.44, -0.49, -0.2], [0.41, -0.49, 2.35, 0.68], [-0.59, -0.2, 0.68, 1.28]], mean_b: [-0.1, 1.0, -1.4, -2.0], cov_b: [[2.32, 0.09, 1.14, -8.0182941302765869384e-52], [0.09, 1.02, -0.54, 0.24], [1.14, -0.54, 1.72, -0.21], [-8.0182941302765869384e-52, 0.24, -0.21, 1.6]], distance: 1.6948700710518251728 },
    GaussianPair { mean_a: [-0.4, -0.4, -0.3, 0.1], cov_a: [[2.16, 0.86, -0.57, 1.82], [0.86, 2.11, -0.08, 0.98], [-0.57, -0.08, 1.02, -0.64], [1.82, 0.98, -0.64, 2.05]], mean_b: [1.5, 1.4, 1.2, 0.6], cov_b: [[1.26, 0.67, 0.8, -0.63], [0.67, 0.87, 0.54, -0.81], [0.8, 0.54, 1.26, -0.63], [-0.63, -0.81, -0.63, 1.87]], distance: 1.1874038565115572876 },
    GaussianPair { mean_a: [-0.5, 1.7, -1.8, 2.0], cov_a: [[1.8, 0.32, -0.53, -0.96], [0.32, 0.95, -0.15, 0.19], [-0.53, -0.15, 1.3, 0.78], [-0.96, 0.19, 0.78, 1.6]], mean_b: [-1.0, 0.6, 0.4, -1.7], cov_b: [[1.45, 0.18, -0.3, 0.22], [0.18, 1.59, 0.31, -0.37], [-0.3, 0.31, 1.39, 0.4], [0.22, -0.37, 0.4, 0.95]], distance: 3.7089239736771142076 },
    GaussianPair { mean_a: [0.9, 1.8, -0.4, 2.0], cov_a: [[0.79, -0.65, -0.28, -0.28], [-0.65, 1.46, 0.23, -0.21], [-0.28, 0.23, 0.8, 0.85], [-0.28, -0.21, 0.85, 1.97]], mean_b: [1.7, 0.6, 0.3, 1.3], cov_b: [[0.91, -0.17, -0.66, 0.94], [-0.17, 2.43, 0.6, 0.16], [-0.66, 0.6, 1.24, -0.66], [0.94, 0.16, -0.66, 1.93]], distance: 0.99044970998655457121 },
    GaussianPair { mean_a: [-0.3, -1.6, -1.5, -1.0], cov_a: [[1.1, 0.39, -0.59, 0.43], [0.39, 0.88, 0.32, -0.12], [-0.59, 0.32, 1.44, -0.73], [0.43, -0.12, -0.73, 0.76]], mean_b: [1.5, -0.5, 2.0, 0.3], cov_b: [[0.8, 0.4, 0.43, -0.66], [0.4, 1.21, 1.16, -1.16], [0.43, 1.16, 1.71, -1.44], [-0.66, -1.16, -1.44, 1.88]], distance: 5.8607356909098781102 },
];
