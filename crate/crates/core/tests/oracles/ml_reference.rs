pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.1, -0.1, 8.6273512367592319004e-2),
    (0.1, 0.1, -1.0, 2.5082402118662146724e-2),
    (0.1, 0.1, 0.5, 4.3665345237723884337e-1),
    (0.1, 0.5, -0.1, 5.0396851133765865314e-1),
    (0.1, 0.5, -1.0, 2.5434503234937213449e-1),
    (0.1, 0.5, 0.5, 1.3232975459180541804),
    (0.1, 1.0, -0.1, 9.047657422574315108e-1),
    (0.1, 1.0, -1.0, 4.8556446431108210159e-1),
    (0.1, 1.0, 0.5, 2.0770042471194151855),
    (0.1, 1.1, -0.1, 9.5234257742568487379e-1),
    (0.1, 1.1, -1.0, 5.144355356889179197e-1),
    (0.1, 1.1, 0.5, 2.1540084942388304245),
    (0.1, 2.0, -0.1, 9.1273463957686515184e-1),
    (0.1, 2.0, -1.0, 5.105935387916558991e-1),
    (0.1, 2.0, 0.5, 1.9059319437701143864),
    (0.1, 2.1, -0.1, 8.7265360423134839827e-1),
    (0.1, 2.1, -1.0, 4.8940646120834408232e-1),
    (0.1, 2.1, 0.5, 1.811863887540228692),
    (0.3, 0.3, -0.1, 2.7549390039535821642e-1),
    (0.3, 0.3, -1.0, 7.7316799030089672914e-2),
    (0.3, 0.3, -3.0, 1.724331642174413418e-2),
    (0.3, 0.3, -8.0, 3.1107914239239980533e-3),
    (0.3, 0.3, 0.5, 1.1694769581219357611),
    (0.3, 0.3, 2.0, 4.0058643366882275972e+5),
    (0.3, 0.5, -0.1, 4.8778103817810137685e-1),
    (0.3, 0.5, -1.0, 1.9751221034659768747e-1),
    (0.3, 0.5, -3.0, 7.569461643574945119e-2),
    (0.3, 0.5, -8.0, 2.8221825241887244313e-2),
    (0.3, 0.5, 0.5, 1.5196111396142771869),
    (0.3, 0.5, 2.0, 2.5235354226878818899e+5),
    (0.3, 1.0, -0.1, 8.988115365027225481e-1),
    (0.3, 1.0, -1.0, 4.5659440832969067062e-1),
    (0.3, 1.0, -3.0, 2.1180263319643578203e-1),
    (0.3, 1.0, -8.0, 8.9493095818620724136e-2),
    (0.3, 1.0, 0.5, 2.0620157899559994895),
    (0.3, 1.0, 2.0, 7.9485907625183568623e+4),
    (0.3, 1.3, -0.1, 1.0118846349727744739),
    (0.3, 1.3, -1.0, 5.4340559167030933981e-1),
    (0.3, 1.3, -3.0, 2.6273245560118807931e-1),
    (0.3, 1.3, -8.0, 1.1381336302267241278e-1),
    (0.3, 1.3, 0.5, 2.1240315799119989736),
    (0.3, 1.3, 2.0, 3.9742453812591779214e+4),
    (0.3, 2.0, -0.1, 9.2077508722779025745e-1),
    (0.3, 2.0, -1.0, 5.3236426762590699952e-1),
    (0.3, 2.0, -3.0, 2.7195729780344930225e-1),
    (0.3, 2.0, -8.0, 1.2181776239171603075e-1),
    (0.3, 2.0, 0.5, 1.712064634648325041),
    (0.3, 2.0, 2.0, 7.8850134504584201732e+3),
    (0.3, 2.3, -0.1, 7.9224912772209745912e-1),
    (0.3, 2.3, -1.0, 4.6763573237409304144e-1),
    (0.3, 2.3, -3.0, 2.4268090073218358524e-1),
    (0.3, 2.3, -8.0, 1.0977277970103550435e-1),
    (0.3, 2.3, 0.5, 1.4241292692966502457),
    (0.3, 2.3, 2.0, 3.9420067252292116038e+3),
    (0.5, 0.5, -0.1, 4.7454388555084361831e-1),
    (0.5, 0.5, -1.0, 1.3660600739194928254e-1),
    (0.5, 0.5, -3.0, 2.718613000358643569e-2),
    (0.5, 0.5, -8.0, 4.3082539407088651661e-3),
    (0.5, 0.5, -15.0, 1.2454877201698007572e-3),
    (0.5, 0.5, 0.5, 1.5403698281390348336),
    (0.5, 0.5, 2.0, 2.1844599836350370111e+2),
    (0.5, 1.0, -0.1, 8.9645697996912663666e-1),
    (0.5, 1.0, -1.0, 4.2758357615580700441e-1),
    (0.5, 1.0, -3.0, 1.7900115118138995042e-1),
    (0.5, 1.0, -8.0, 6.9985166200880927723e-2),
    (0.5, 1.0, -15.0, 3.7529606388505765746e-2),
    (0.5, 1.0, 0.5, 1.9523604891825570933),
    (0.5, 1.0, 2.0, 1.0894090438997797241e+2),
    (0.5, 1.5, -0.1, 1.0354302003087335759),
    (0.5, 1.5, -1.0, 5.7241642384419299559e-1),
    (0.5, 1.5, -3.0, 2.7366628293953668319e-1),
    (0.5, 1.5, -8.0, 1.1625185422488988403e-1),
    (0.5, 1.5, -15.0, 6.416469290743294895e-2),
    (0.5, 1.5, 0.5, 1.9047209783651141866),
    (0.5, 1.5, 2.0, 5.3970452194988986206e+1),
    (0.5, 2.0, -0.1, 9.2948966786778992848e-1),
    (0.5, 2.0, -1.0, 5.5596274325131957831e-1),
    (0.5, 2.0, -3.0, 2.8490429471865863023e-1),
    (0.5, 2.0, -8.0, 1.2651591410882783623e-1),
    (0.5, 2.0, -15.0, 7.0947631612538641663e-2),
    (0.5, 2.0, 0.5, 1.5526836225392032253),
    (0.5, 2.0, 2.0, 2.6421036513946736816e+1),
    (0.5, 2.5, -0.1, 7.0510332132210067603e-1),
    (0.5, 2.5, -1.0, 4.4403725674868042169e-1),
    (0.5, 2.5, -3.0, 2.3836523509378045659e-1),
    (0.5, 2.5, -8.0, 1.0918551073639652047e-1),
    (0.5, 2.5, -15.0, 6.1936824559164090556e-2),
    (0.5, 2.5, 0.5, 1.1053672450784064506),
    (0.5, 2.5, 2.0, 1.2710518256973368408e+1),
    (0.7, 0.5, -0.1, 4.6501086003708867229e-1),
    (0.7, 0.5, -1.0, 6.9138974339373653112e-2),
    (0.7, 0.5, -3.0, -2.8803149722604609333e-2),
    (0.7, 0.5, -8.0, -1.9002424510624580671e-2),
    (0.7, 0.5, -15.0, -1.0890584099142690444e-2),
    (0.7, 0.5, -40.0, -4.2285273958089078533e-3),
    (0.7, 0.5, -100.0, -1.7079741079361271964e-3),
    (0.7, 0.5, 0.5, 1.485844893721835994),
    (0.7, 0.5, 2.0, 3.4674733981524184476e+1),
    (0.7, 0.7, -0.1, 6.6666528870184911948e-1),
    (0.7, 0.7, -1.0, 2.103933463890236887e-1),
    (0.7, 0.7, -3.0, 3.5901729730841232016e-2),
    (0.7, 0.7, -8.0, 4.4010656431003355197e-3),
    (0.7, 0.7, -15.0, 1.1541395031173380278e-3),
    (0.7, 0.7, -40.0, 1.5219492112585278421e-4),
    (0.7, 0.7, -100.0, 2.377720552356958089e-5),
    (0.7, 0.7, 0.5, 1.6711092247431752548),
    (0.7, 0.7, 2.0, 2.8404204226104490936e+1),
    (0.7, 1.0, -0.1, 8.9756112693138677065e-1),
    (0.7, 1.0, -1.0, 3.9961197811559939027e-1),
    (0.7, 1.0, -3.0, 1.3789710966502708216e-1),
    (0.7, 1.0, -8.0, 4.6069992385362385726e-2),
    (0.7, 1.0, -15.0, 2.3501440278040016091e-2),
    (0.7, 1.0, -40.0, 8.5261702309107443824e-3),
    (0.7, 1.0, -100.0, 3.3696874163059942732e-3),
    (0.7, 1.0, 0.5, 1.8249850568512024814),
    (0.7, 1.0, 2.0, 2.0966433131481956304e+1),
    (0.7, 1.7, -0.1, 1.0243887306861322367),
    (0.7, 1.7, -1.0, 6.0038802188440060973e-1),
    (0.7, 1.7, -3.0, 2.8736763011165763928e-1),
    (0.7, 1.7, -8.0, 1.1924125095182970178e-1),
    (0.7, 1.7, -15.0, 6.5099903981463998927e-2),
    (0.7, 1.7, -40.0, 2.478684574422723139e-2),
    (0.7, 1.7, -100.0, 9.9663031258369400573e-3),
    (0.7, 1.7, 0.5, 1.6499701137024049628),
    (0.7, 1.7, 2.0, 9.9832165657409781519),
    (0.7, 2.0, -0.1, 9.3847489844338404398e-1),
    (0.7, 2.0, -1.0, 5.8280466905639584944e-1),
    (0.7, 2.0, -3.0, 2.970729597074654573e-1),
    (0.7, 2.0, -8.0, 1.2866192138243877566e-1),
    (0.7, 2.0, -15.0, 7.1274674921895160304e-2),
    (0.7, 2.0, -40.0, 2.7434982261064659314e-2),
    (0.7, 2.0, -100.0, 1.1075182795717903647e-2),
    (0.7, 2.0, 0.5, 1.4301054475122011595),
    (0.7, 2.0, 2.0, 7.1226180130809373867),
    (0.7, 2.7, -0.1, 6.1525101556615941906e-1),
    (0.7, 2.7, -1.0, 4.1719533094360408693e-1),
    (0.7, 2.7, -3.0, 2.3430901343084481745e-1),
    (0.7, 2.7, -8.0, 1.0891725982719514105e-1),
    (0.7, 2.7, -15.0, 6.1915021671873649599e-2),
    (0.7, 2.7, -40.0, 2.4314125443473381148e-2),
    (0.7, 2.7, -100.0, 9.8892481720428200208e-3),
    (0.7, 2.7, 0.5, 8.6021089502440215129e-1),
    (0.7, 2.7, 2.0, 3.0613090065404678323),
    (0.9, 0.5, -0.1, 4.5965635448400752146e-1),
    (0.9, 0.5, -1.0, -5.0172483148519469026e-3),
    (0.9, 0.5, -3.0, -1.0025244677360001751e-1),
    (0.9, 0.5, -8.0, -3.9126298925561751925e-2),
    (0.9, 0.5, -15.0, -1.9387796675147188254e-2),
    (0.9, 0.5, -40.0, -6.910175485802586628e-3),
    (0.9, 0.5, -100.0, -2.7165250428292934157e-3),
    (0.9, 0.5, 0.5, 1.4042134129976267293),
    (0.9, 0.5, 2.0, 1.4252371471374127726e+1),
    (0.9, 0.9, -0.1, 8.3462474715172491326e-1),
    (0.9, 0.9, -1.0, 3.0814879777662195447e-1),
    (0.9, 0.9, -3.0, 4.4151271783037726131e-2),
    (0.9, 0.9, -8.0, 2.5808143045736155553e-3),
    (0.9, 0.9, -15.0, 5.4199570979589920131e-4),
    (0.9, 0.9, -40.0, 6.4491183205842505828e-5),
    (0.9, 0.9, -100.0, 9.7850635889096909486e-6),
    (0.9, 0.9, 0.5, 1.674248091065913674),
    (0.9, 0.9, 2.0, 1.0415849710921111519e+1),
    (0.9, 1.0, -0.1, 9.0175694244985939876e-1),
    (0.9, 1.0, -1.0, 3.7606602142464187902e-1),
    (0.9, 1.0, -3.0, 8.3888354033773262067e-2),
    (0.9, 1.0, -8.0, 1.7095144580796805831e-2),
    (0.9, 1.0, -15.0, 7.928602432344447057e-3),
    (0.9, 1.0, -40.0, 2.743449697792099487e-3),
    (0.9, 1.0, -100.0, 1.0689724182870890385e-3),
    (0.9, 1.0, 0.5, 1.7043087220993991136),
    (0.9, 1.0, 2.0, 9.6049277845715006791),
    (0.9, 1.9, -0.1, 9.8243057550140599375e-1),
    (0.9, 1.9, -1.0, 6.2393397857535812851e-1),
    (0.9, 1.9, -3.0, 3.0537054865540890583e-1),
    (0.9, 1.9, -8.0, 1.2286310692740039332e-1),
    (0.9, 1.9, -15.0, 6.6138093171177033156e-2),
    (0.9, 1.9, -40.0, 2.4931413757555195988e-2),
    (0.9, 1.9, -100.0, 9.989310275817128481e-3),
    (0.9, 1.9, 0.5, 1.4086174441987983055),
    (0.9, 1.9, 2.0, 4.3024638922857508072),
    (0.9, 2.0, -0.1, 9.4734318594770067697e-1),
    (0.9, 2.0, -1.0, 6.1431564477296476897e-1),
    (0.9, 2.0, -3.0, 3.0957669519125859758e-1),
    (0.9, 2.0, -8.0, 1.2737741429596876706e-1),
    (0.9, 2.0, -15.0, 6.902807705178662397e-2),
    (0.9, 2.0, -40.0, 2.613844828808780203e-2),
    (0.9, 2.0, -100.0, 1.0489349144902135677e-2),
    (0.9, 2.0, 0.5, 1.3361123402319689468),
    (0.9, 2.0, 2.0, 3.8970442595563376858),
    (0.9, 2.9, -0.1, 5.2656814052299325192e-1),
    (0.9, 2.9, -1.0, 3.8568435522703526429e-1),
    (0.9, 2.9, -3.0, 2.3014110160291381732e-1),
    (0.9, 2.9, -8.0, 1.090778232130039105e-1),
    (0.9, 2.9, -15.0, 6.2064794863214228379e-2),
    (0.9, 2.9, -40.0, 2.4346538792797806152e-2),
    (0.9, 2.9, -100.0, 9.8951065085509791174e-3),
    (0.9, 2.9, 0.5, 6.7222468046393796443e-1),
    (0.9, 2.9, 2.0, 1.4485221297781690358),
    (0.95, 0.5, -0.1, 4.5898735034995295989e-1),
    (0.95, 0.5, -1.0, -2.4051750909723418457e-2),
    (0.95, 0.5, -3.0, -1.2251078448496046802e-1),
    (0.95, 0.5, -8.0, -4.2990012855205485582e-2),
    (0.95, 0.5, -15.0, -2.0530981906433404448e-2),
    (0.95, 0.5, -40.0, -7.2096306128933848186e-3),
    (0.95, 0.5, -100.0, -2.8228690865053653505e-3),
    (0.95, 0.5, 0.5, 1.3822604078658790039),
    (0.95, 0.5, 2.0, 1.2156166717413966381e+1),
    (0.95, 0.95, -0.1, 8.7103958489859632834e-1),
    (0.95, 0.95, -1.0, 3.3712250268371988512e-1),
    (0.95, 0.95, -3.0, 4.6673470882574235753e-2),
    (0.95, 0.95, -8.0, 1.6189776922486760559e-3),
    (0.95, 0.95, -15.0, 2.9150261858797996103e-4),
    (0.95, 0.95, -40.0, 3.3623152372900237325e-5),
    (0.95, 0.95, -100.0, 5.0665820236802196337e-6),
    (0.95, 0.95, 0.5, 1.6631635260996615321),
    (0.95, 0.95, 2.0, 8.6934957559569537574),
    (0.95, 1.0, -0.1, 9.0322405462807574056e-1),
    (0.95, 1.0, -1.0, 3.7157362003067881398e-1),
    (0.95, 1.0, -3.0, 6.753202221407190526e-2),
    (0.95, 1.0, -8.0, 8.9310915218318228927e-3),
    (0.95, 1.0, -15.0, 3.9444851648296799484e-3),
    (0.95, 1.0, -40.0, 1.3474824487701776278e-3),
    (0.95, 1.0, -100.0, 5.2333064394704096118e-4),
    (0.95, 1.0, 0.5, 1.6760890928135578307),
    (0.95, 1.0, 2.0, 8.3633442941936385341),
    (0.95, 1.95, -0.1, 9.6775945371924254064e-1),
    (0.95, 1.95, -1.0, 6.2842637996932118602e-1),
    (0.95, 1.95, -3.0, 3.1082265926197603158e-1),
    (0.95, 1.95, -8.0, 1.2388361355977102214e-1),
    (0.95, 1.95, -15.0, 6.640370098901135467e-2),
    (0.95, 1.95, -40.0, 2.4966312938780745559e-2),
    (0.95, 1.95, -100.0, 9.9947666935605295904e-3),
    (0.95, 1.95, 0.5, 1.3521781856271156615),
    (0.95, 1.95, 2.0, 3.6816721470968192671),
    (0.95, 2.0, -0.1, 9.4950108327707974985e-1),
    (0.95, 2.0, -1.0, 6.2304324120743175269e-1),
    (0.95, 2.0, -3.0, 3.1302789399333819919e-1),
    (0.95, 2.0, -8.0, 1.2634683842942623488e-1),
    (0.95, 2.0, -15.0, 6.7965423606461379735e-2),
    (0.95, 2.0, -40.0, 2.5612457060250040374e-2),
    (0.95, 2.0, -100.0, 1.0261517392296981956e-2),
    (0.95, 2.0, 0.5, 1.3161678633661572163),
    (0.95, 2.0, 2.0, 3.5077964410448494144),
    (0.95, 2.95, -0.1, 5.0498916722920237349e-1),
    (0.95, 2.95, -1.0, 3.7695675879256818036e-1),
    (0.95, 2.95, -3.0, 2.2899070200222056644e-1),
    (0.95, 2.95, -8.0, 1.0920664519632170766e-1),
    (0.95, 2.95, -15.0, 6.213563842623590133e-2),
    (0.95, 2.95, -40.0, 2.4359688573493746577e-2),
    (0.95, 2.95, -100.0, 9.8973848260770292306e-3),
    (0.95, 2.95, 0.5, 6.3233572673231429711e-1),
    (0.95, 2.95, 2.0, 1.2538982205224243751),
    (1.0, 0.5, -0.1, 4.5858170305476820895e-1),
    (1.0, 0.5, -1.0, -4.2968122293637442167e-2),
    (1.0, 0.5, -3.0, -1.4740544177658248956e-1),
    (1.0, 0.5, -8.0, -4.6029510563520627924e-2),
    (1.0, 0.5, -15.0, -2.1111699423598890307e-2),
    (1.0, 0.5, -40.0, -7.3349985289032598988e-3),
    (1.0, 0.5, -100.0, -2.8643587811196539028e-3),
    (1.0, 0.5, 0.5, 1.360084006368273076),
    (1.0, 0.5, 2.0, 1.0538428671807382812e+1),
    (1.0, 1.0, -0.1, 9.0483741803595956814e-1),
    (1.0, 1.0, -1.0, 3.678794411714423216e-1),
    (1.0, 1.0, -3.0, 4.9787068367863942979e-2),
    (1.0, 1.0, -8.0, 3.3546262790251183882e-4),
    (1.0, 1.0, -15.0, 3.0590232050182578837e-7),
    (1.0, 1.0, -40.0, 4.2483542552915889953e-18),
    (1.0, 1.0, -100.0, 3.7201053551664812086e-44),
    (1.0, 1.0, 0.5, 1.6487212707001281468),
    (1.0, 1.0, 2.0, 7.3890560989306502272),
    (1.0, 2.0, -0.1, 9.5162581964040426576e-1),
    (1.0, 2.0, -1.0, 6.321205588285576784e-1),
    (1.0, 2.0, -3.0, 3.1673764387737868567e-1),
    (1.0, 2.0, -8.0, 1.2495806717151218602e-1),
    (1.0, 2.0, -15.0, 6.6666646273178633212e-2),
    (1.0, 2.0, -40.0, 2.4999999999999999894e-2),
    (1.0, 2.0, -100.0, 1.0e-2),
    (1.0, 2.0, 0.5, 1.2974425414002562937),
    (1.0, 2.0, 2.0, 3.1945280494653251136),
    (1.0, 3.0, -0.1, 4.8374180359595731554e-1),
    (1.0, 3.0, -1.0, 3.678794411714423216e-1),
    (1.0, 3.0, -3.0, 2.2775411870754043811e-1),
    (1.0, 3.0, -8.0, 1.0938024160356097675e-1),
    (1.0, 3.0, -15.0, 6.2222223581788091119e-2),
    (1.0, 3.0, -40.0, 2.4375000000000000003e-2),
    (1.0, 3.0, -100.0, 9.9e-3),
    (1.0, 3.0, 0.5, 5.9488508280051258739e-1),
    (1.0, 3.0, 2.0, 1.0972640247326625568),
];
