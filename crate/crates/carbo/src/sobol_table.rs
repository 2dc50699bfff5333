// Sobol direction integers, 64 dimensions x 30 bits, scaled by 2^30.
// Derived from the Joe-Kuo direction-number tables.
pub(crate) const SOBOL_BITS: u32 = 30;
pub(crate) const SOBOL_MAX_DIM: usize = 64;
pub(crate) const SOBOL_V: [[u32; 30]; 64] = [
    [536870912, 268435456, 134217728, 67108864, 33554432, 16777216, 8388608, 4194304, 2097152, 1048576, 524288, 262144, 131072, 65536, 32768, 16384, 8192, 4096, 2048, 1024, 512, 256, 128, 64, 32, 16, 8, 4, 2, 1],
    [536870912, 805306368, 671088640, 1006632960, 570425344, 855638016, 713031680, 1069547520, 538968064, 808452096, 673710080, 1010565120, 572653568, 858980352, 715816960, 1073725440, 536879104, 805318656, 671098880, 1006648320, 570434048, 855651072, 713042560, 1069563840, 538976288, 808464432, 673720360, 1010580540, 572662306, 858993459],
    [536870912, 805306368, 402653184, 603979776, 973078528, 385875968, 595591168, 826277888, 438304768, 657457152, 999817216, 358875136, 538574848, 807862272, 406552576, 605372416, 975183872, 389033984, 597170176, 828646400, 437926400, 656873216, 1002152832, 357921088, 536885792, 805312304, 402662296, 603992420, 973085210, 385885991],
    [536870912, 805306368, 134217728, 335544320, 1040187392, 486539264, 679477248, 616562688, 908066816, 156237824, 376963072, 968097792, 503447552, 755171328, 545292288, 817971200, 136568832, 340905984, 1056606208, 494291968, 673276416, 609457408, 922347392, 158784320, 371195936, 961544240, 511180808, 766771220, 537002046, 805503005],
    [536870912, 268435456, 134217728, 738197504, 1040187392, 922746880, 511705088, 658505728, 379584512, 200278016, 676855808, 1009516544, 916586496, 468779008, 542670848, 271499264, 144826368, 754085888, 1054435328, 929870848, 503351808, 654495488, 377744768, 188970688, 681697312, 1022521360, 920217608, 460108844, 536906302, 268619575],
    [536870912, 268435456, 402653184, 201326592, 838860800, 150994944, 360710144, 1052770304, 941621248, 470810624, 706215936, 84672512, 665976832, 935919616, 766869504, 586072064, 301998080, 419434496, 226498560, 851446784, 169882112, 353372416, 1066931584, 1003241152, 529676320, 735648784, 128821784, 669173004, 900859826, 784934857],
    [536870912, 805306368, 671088640, 872415232, 369098752, 620756992, 260046848, 952107008, 799014912, 149946368, 126353408, 1019478016, 295567360, 434176000, 504463360, 555335680, 832446464, 702623744, 907126784, 354022400, 664679936, 216077568, 965846912, 769248448, 138287520, 68230640, 1041866760, 287174660, 429918270, 502268945],
    [536870912, 268435456, 671088640, 335544320, 570425344, 150994944, 75497472, 188743680, 497025024, 663748608, 34078720, 419692544, 747241472, 524615680, 1068007424, 781336576, 109649920, 306630656, 825059328, 954000384, 1033896448, 932184320, 705168000, 218366272, 243925536, 373620880, 992510024, 634536116, 455680474, 903271033],
    [536870912, 268435456, 671088640, 335544320, 167772160, 889192448, 444596224, 473956352, 236978176, 370147328, 981991424, 205783040, 640286720, 34930688, 814383104, 961101824, 1017946112, 508694528, 1051265024, 794608640, 103416320, 303366400, 411730560, 759775552, 917282976, 726799184, 606669224, 857523652, 134873826, 67436641],
    [536870912, 268435456, 939524096, 738197504, 637534208, 620756992, 578813952, 381681664, 216006656, 913309696, 478674944, 264503296, 812515328, 700121088, 350322688, 175980544, 42901504, 113946624, 887404544, 444587008, 982385152, 717947136, 317293440, 1064911552, 402694752, 1006744144, 504183336, 151428460, 76456654, 868921959],
    [536870912, 268435456, 671088640, 67108864, 33554432, 452984832, 662700032, 146800640, 367001600, 728760320, 535298048, 611581952, 308412416, 867500032, 570589184, 184795136, 260268032, 214298624, 401348608, 813575168, 946037248, 750121216, 126098048, 415902784, 1038180896, 795930800, 502175992, 1065217228, 903873406, 997196295],
    [536870912, 268435456, 134217728, 201326592, 369098752, 721420288, 629145600, 180355072, 891289600, 38797312, 950534144, 345243648, 327811072, 835125248, 413630464, 77185024, 461692928, 1036808192, 245770240, 798041088, 1041162752, 923496704, 998353024, 768140480, 111805280, 597099440, 672105176, 470663276, 504291890, 655061653],
    [536870912, 805306368, 671088640, 335544320, 1040187392, 587202560, 947912704, 213909504, 65011712, 139460608, 627572736, 396099584, 906100736, 118030336, 780500992, 1003339776, 90284032, 664530944, 503764992, 319628288, 277062144, 415429376, 1038834304, 727508288, 501219808, 458228016, 904397064, 257687948, 199361502, 744030901],
    [536870912, 805306368, 402653184, 603979776, 234881024, 822083584, 276824064, 683671552, 1012924416, 714080256, 1060634624, 558104576, 939655168, 335740928, 369197056, 352468992, 511762432, 432214016, 752945152, 38964224, 56346112, 198617344, 121238400, 893719616, 771751968, 16777264, 142606360, 213909540, 845152270, 462422065],
    [536870912, 268435456, 134217728, 1006632960, 704643072, 352321536, 645922816, 658505728, 127926272, 389021696, 524812288, 591659008, 153223168, 477167616, 988315648, 494387200, 451452928, 225726464, 317253632, 829731840, 954751488, 611771136, 510377088, 53989440, 432709664, 335892496, 109078536, 927167548, 262208042, 724742933],
    [536870912, 805306368, 134217728, 872415232, 905969664, 822083584, 293601280, 557842432, 694157312, 498073600, 728236032, 447479808, 191496192, 716111872, 57311232, 514605056, 896131072, 800018432, 619247616, 250430464, 227175936, 324837120, 652269696, 166802880, 764046880, 593272624, 786487432, 1039218164, 462056982, 308059905],
    [536870912, 268435456, 134217728, 1006632960, 234881024, 83886080, 1031798784, 432013312, 601882624, 336592896, 581435392, 66846720, 78249984, 721223680, 1059749888, 171884544, 793403392, 49188864, 327268352, 214109184, 375490048, 835931392, 256584832, 317502144, 461473312, 818105616, 409152648, 886092540, 852198958, 187583765],
    [536870912, 805306368, 134217728, 1006632960, 436207616, 419430400, 226492416, 457179136, 274726912, 940572672, 884473856, 654049280, 54132736, 348061696, 383418368, 200065024, 671293440, 201412608, 302118912, 621011968, 394296832, 37987584, 501388672, 592468672, 618298912, 518825264, 931141000, 843094780, 367222330, 525530409],
    [536870912, 268435456, 671088640, 335544320, 637534208, 1023410176, 729808896, 784334848, 970981376, 628097024, 117964800, 873201664, 921305088, 360513536, 1071677440, 141574144, 76079104, 248418304, 688576512, 218905600, 325690880, 314374912, 193007232, 1052936128, 299976224, 829582096, 554423976, 151960532, 493412358, 1002344493],
    [536870912, 805306368, 939524096, 738197504, 771751936, 251658240, 864026624, 272629760, 140509184, 342884352, 39321600, 559677440, 1016987648, 598147072, 402685952, 469811200, 369156096, 587247616, 494974976, 524303360, 1004588544, 70271232, 171450752, 892096960, 1053165920, 50038128, 614363768, 1067929244, 234881026, 1056964611],
    [536870912, 805306368, 939524096, 872415232, 436207616, 251658240, 578813952, 339738624, 710934528, 930086912, 384303104, 242483200, 629014528, 364183552, 41975808, 608223232, 308338688, 57724928, 216557568, 24394752, 134121984, 32854272, 685779328, 321920448, 76069792, 218425808, 697761272, 348220116, 92143618, 632619011],
    [536870912, 268435456, 402653184, 872415232, 234881024, 587202560, 528482304, 473956352, 840957952, 19922944, 115867648, 786169856, 312868864, 820969472, 696287232, 457195520, 1000366080, 175165440, 625489920, 279743488, 971931136, 54751488, 267274368, 71517376, 107936672, 251865968, 634294936, 829677500, 243662850, 48168961],
    [536870912, 805306368, 671088640, 603979776, 33554432, 419430400, 444596224, 574619648, 694157312, 852492288, 101187584, 727973888, 736231424, 482148352, 157319168, 47235072, 772317184, 258248704, 702679040, 96297984, 333507072, 546326784, 124257664, 1035230016, 803868704, 786024848, 939672968, 1009597428, 235446274, 1063555075],
    [536870912, 805306368, 134217728, 872415232, 301989888, 587202560, 897581056, 239075328, 895483904, 210763776, 749207552, 478412800, 351666176, 548601856, 853573632, 298893312, 608706560, 710201344, 524175360, 329747456, 1061049856, 598210816, 926840192, 396829248, 624843424, 883420688, 280915416, 988227532, 635314178, 913821699],
    [536870912, 805306368, 134217728, 335544320, 905969664, 1023410176, 260046848, 624951296, 601882624, 256901120, 1019740160, 196870144, 728891392, 42139648, 583565312, 314359808, 452075520, 247681024, 950556672, 95171584, 173678080, 795854080, 217241472, 63113536, 1059613984, 887892976, 532339272, 490705740, 1069161986, 759153923],
    [536870912, 268435456, 671088640, 738197504, 637534208, 687865856, 511705088, 893386752, 10485760, 403701760, 343408640, 572260352, 587857920, 301006848, 49840128, 727465984, 766156800, 216117248, 771758080, 352379904, 276879872, 809526528, 941660800, 72401984, 173550560, 256662896, 936545960, 738011012, 898292226, 414278913],
    [536870912, 805306368, 671088640, 201326592, 100663296, 218103808, 578813952, 658505728, 434110464, 546308096, 272105472, 406585344, 609353728, 173080576, 190349312, 804044800, 92971008, 1056780288, 959617024, 813822976, 134261248, 1006660864, 771809152, 16811584, 612422368, 708889072, 996179144, 131085828, 165153282, 950820099],
    [536870912, 268435456, 939524096, 872415232, 33554432, 318767104, 8388608, 759169024, 228589568, 816840704, 84410368, 30670848, 117309440, 336396288, 304644096, 723795968, 886497280, 791269376, 519997440, 806161408, 673735168, 203695360, 911662720, 292118208, 333356576, 771604048, 545279864, 1027651572, 899711490, 78705921],
    [536870912, 805306368, 939524096, 335544320, 436207616, 318767104, 494927872, 1035993088, 228589568, 902823936, 569901056, 1003225088, 686424064, 894500864, 149585920, 89243648, 820666368, 290557952, 719980544, 38919168, 929725952, 1066478336, 986335360, 172096576, 456314720, 831329136, 869821640, 81577524, 993185634, 26022771],
    [536870912, 268435456, 402653184, 603979776, 838860800, 486539264, 343932928, 12582912, 987758592, 466616320, 421003264, 918290432, 98959360, 173998080, 694583296, 1050624000, 965140480, 474992640, 102639616, 926131200, 764967424, 645703424, 654709120, 898598976, 41850336, 354648752, 685779576, 382750668, 362321378, 310149809],
    [536870912, 805306368, 671088640, 872415232, 771751936, 16777216, 461373440, 633339904, 1017118720, 997195776, 81264640, 388235264, 919994368, 209256448, 41320448, 856276992, 11411456, 288165888, 66623488, 966005760, 648967680, 338510592, 511222912, 693419712, 797847520, 194901584, 1031799480, 549471412, 555749346, 733013587],
    [536870912, 805306368, 939524096, 201326592, 436207616, 989855744, 142606336, 180355072, 228589568, 659554304, 445120512, 94109696, 326762496, 214106112, 618299392, 546553856, 248668160, 600829952, 168298496, 861674496, 1020963328, 479459072, 752024704, 349149760, 411573920, 43798576, 972724552, 822305852, 1006272162, 906207283],
    [536870912, 805306368, 134217728, 201326592, 167772160, 889192448, 578813952, 1069547520, 555745280, 485490688, 80216064, 816578560, 1053687808, 226951168, 268861440, 942391296, 71868416, 107802624, 1064175616, 397927424, 493756928, 515369728, 1039052416, 410483904, 877535136, 239572336, 858188312, 500903852, 671104418, 1006665331],
    [536870912, 268435456, 671088640, 335544320, 771751936, 553648128, 109051904, 734003200, 794820608, 938475520, 87556096, 282329088, 915275776, 327614464, 322338816, 227753984, 173547520, 925110272, 464918528, 391369728, 196616704, 1058302720, 535693184, 293019840, 1049530720, 394746000, 355923160, 949203532, 584627042, 1038365585],
    [536870912, 268435456, 939524096, 469762048, 33554432, 1023410176, 1031798784, 583008256, 845152256, 357564416, 432537600, 1023148032, 220069888, 366018560, 112623616, 746405888, 710959104, 424685568, 600369152, 503088128, 849280512, 168918784, 156680064, 468557376, 29937312, 821860016, 924760920, 886120628, 959860898, 868080049],
    [536870912, 268435456, 939524096, 603979776, 436207616, 1023410176, 411041792, 935329792, 509607936, 927989760, 498597888, 188481536, 871235584, 343605248, 842432512, 555171840, 652238848, 277925888, 1004046336, 409756672, 878053888, 575089408, 425237376, 44843584, 179760992, 114778544, 8409432, 62966044, 1012958562, 777034417],
    [536870912, 805306368, 402653184, 335544320, 100663296, 922746880, 276824064, 230686720, 136314880, 1011875840, 169345024, 623116288, 568459264, 705626112, 358252544, 968605696, 1040244736, 318803968, 243300352, 784370688, 513825280, 110160640, 314073728, 347391552, 601491680, 863725008, 1050685416, 915471532, 179876578, 11804371],
    [536870912, 805306368, 134217728, 1006632960, 1040187392, 218103808, 411041792, 1027604480, 706740224, 1060110336, 596115456, 352059392, 836632576, 626851840, 771784704, 892944384, 748691456, 1064316928, 422053888, 713833472, 108412416, 59837696, 618043520, 970489152, 425626144, 270815024, 939559816, 876173564, 35661790, 858793053],
    [536870912, 805306368, 671088640, 1006632960, 1040187392, 989855744, 528482304, 406847488, 387973120, 967835648, 929562624, 177995776, 617480192, 83034112, 888373248, 484327424, 552083456, 517746688, 636364800, 977484800, 572243456, 889355008, 210124672, 1004480576, 827703072, 363939248, 290826600, 632373660, 961917774, 431050931],
    [536870912, 805306368, 134217728, 738197504, 369098752, 184549376, 645922816, 1044381696, 253755392, 749731840, 726138880, 244056064, 577110016, 287506432, 196771840, 467681280, 1002971136, 197931008, 63309824, 802368512, 970102272, 853297920, 342230656, 706940480, 624592672, 161497264, 585637192, 746337676, 235801830, 522126179],
    [536870912, 805306368, 134217728, 738197504, 905969664, 721420288, 595591168, 37748736, 664797184, 678428672, 849870848, 215744512, 626917376, 35061760, 153976832, 445464576, 282992640, 458698752, 84772864, 482176000, 869668352, 352000768, 830188416, 272002624, 939897248, 605123440, 438319400, 489689756, 143146238, 569126247],
    [536870912, 268435456, 939524096, 1006632960, 704643072, 184549376, 679477248, 188743680, 916455424, 1045430272, 991428608, 11272192, 257032192, 546766848, 525500416, 412631040, 594681856, 847712256, 678082560, 438598656, 588777984, 749476608, 491917440, 395786048, 500341920, 416838992, 1028797336, 127343596, 634552818, 618160839],
    [536870912, 805306368, 939524096, 201326592, 838860800, 520093696, 545259520, 331350016, 799014912, 997195776, 139984896, 719060992, 505020416, 488308736, 128352256, 1064484864, 239214592, 197603328, 331134976, 829017088, 459575808, 947252992, 316586112, 304017344, 790627744, 414193776, 536355544, 497822236, 608314170, 684141227],
    [536870912, 805306368, 134217728, 67108864, 637534208, 184549376, 25165824, 859832320, 580911104, 116391936, 1072168960, 726925312, 515768320, 754384896, 382435328, 130695168, 659955712, 1017327616, 32868352, 477971456, 893224448, 916028160, 416000384, 952780608, 148253856, 14891504, 81105000, 583882516, 703970206, 679305799],
    [536870912, 268435456, 671088640, 603979776, 637534208, 352321536, 243269632, 658505728, 530579456, 533725184, 96993280, 718536704, 461242368, 631832576, 552894464, 477642752, 808853504, 943525888, 204122112, 33645568, 856327680, 462505216, 702711424, 953504576, 7647648, 439910096, 789980488, 833432724, 1052935262, 88435769],
    [536870912, 805306368, 939524096, 738197504, 33554432, 553648128, 746586112, 775946240, 799014912, 334495744, 358088704, 1044119552, 722075648, 431292416, 750944256, 585973760, 837951488, 75051008, 714127360, 694447104, 876257792, 505499904, 455095424, 565195328, 16258464, 550248176, 282213336, 684274044, 82356266, 115893253],
    [536870912, 805306368, 402653184, 201326592, 503316480, 150994944, 662700032, 297795584, 434110464, 1037041664, 935854080, 751042560, 475660288, 588447744, 211058688, 963985408, 714383360, 209022976, 185907200, 414546944, 729064960, 1034253568, 584876416, 1030841536, 279877728, 259414288, 933769128, 970208724, 233968626, 801580743],
    [536870912, 805306368, 939524096, 738197504, 503316480, 654311424, 998244352, 113246208, 853540864, 818937856, 837287936, 21233664, 572129280, 823984128, 144080896, 258490368, 219586560, 514355200, 1014405120, 79191040, 561939968, 304904960, 151829888, 615873984, 291508064, 705694992, 621289096, 982793300, 913441938, 295248201],
    [536870912, 268435456, 402653184, 67108864, 369098752, 520093696, 813694976, 943718400, 56623104, 904921088, 178782208, 1028390912, 652869632, 809304064, 137461760, 470532096, 303669248, 151506944, 798210048, 147510272, 990522880, 915213056, 1064943232, 938992448, 465274336, 382124720, 939524424, 335553788, 234889506, 452993921],
    [536870912, 268435456, 134217728, 201326592, 771751936, 721420288, 478150656, 742391808, 14680064, 883949568, 811073536, 652476416, 328335360, 48037888, 563314688, 264421376, 436314112, 287297536, 496117760, 970791936, 890480128, 797107968, 887198336, 246404928, 826946656, 863569136, 643929784, 435156308, 623522122, 663303033],
    [536870912, 805306368, 939524096, 469762048, 570425344, 285212672, 310378496, 297795584, 929038336, 277872640, 818413568, 499384320, 493748224, 630915072, 475496448, 1059405824, 700030976, 914255872, 168695808, 84618240, 346003968, 1054952704, 383225984, 48591040, 81378784, 737045840, 172375464, 403648596, 739353894, 438985887],
    [536870912, 805306368, 134217728, 335544320, 905969664, 1056964608, 1031798784, 893386752, 803209216, 185597952, 1001914368, 39583744, 104988672, 140050432, 727351296, 885309440, 144744448, 633466880, 641214464, 119284736, 564280832, 390671104, 652381056, 161008192, 862106208, 416861776, 578993240, 952692044, 314221562, 819253509],
    [536870912, 268435456, 402653184, 335544320, 369098752, 721420288, 444596224, 557842432, 1054867456, 707788800, 554172416, 730595328, 314703872, 941424640, 69304320, 237223936, 1057726464, 209899520, 174077952, 611320832, 191368704, 536624896, 27921536, 870386240, 327918688, 381864816, 905986024, 989860284, 41954250, 893388689],
    [536870912, 805306368, 671088640, 335544320, 973078528, 285212672, 394264576, 725614592, 1004535808, 437256192, 555220992, 1066663936, 1061814272, 33357824, 186155008, 915652608, 348233728, 79163392, 467666944, 705694720, 152570368, 731120896, 88739456, 285017152, 479757792, 500419280, 790736632, 514324100, 989331526, 360973285],
    [536870912, 805306368, 402653184, 738197504, 100663296, 16777216, 914358272, 37748736, 144703488, 974127104, 790102016, 59506688, 517341184, 232980480, 87064576, 567492608, 645210112, 804147200, 102762496, 609225728, 968361472, 345770752, 21889408, 221184064, 633769376, 341852304, 83730984, 933305988, 295379910, 97606883],
    [536870912, 268435456, 134217728, 335544320, 570425344, 654311424, 192937984, 20971520, 719323136, 118489088, 461897728, 155451392, 1055522816, 620822528, 1016823808, 46252032, 1068146688, 267677696, 998770688, 423887872, 921305600, 822150400, 513509504, 633457088, 875209440, 246706256, 292029112, 508822980, 761398498, 944047953],
    [536870912, 805306368, 134217728, 335544320, 838860800, 251658240, 260046848, 432013312, 1046478848, 856686592, 429391872, 751042560, 719978496, 390660096, 826245120, 775143424, 430891008, 476721152, 68683776, 168037376, 319422976, 697894144, 617057408, 1055376320, 626844640, 1042757232, 565020568, 7258308, 570647654, 923074097],
    [536870912, 268435456, 134217728, 738197504, 369098752, 285212672, 528482304, 440401920, 383778816, 923795456, 378011648, 566493184, 917897216, 653983744, 789610496, 847495168, 467607552, 834039808, 677906432, 718537728, 1044251136, 977210112, 270960000, 523813952, 1034921952, 778417808, 870264248, 230062532, 912789410, 399771505],
    [536870912, 268435456, 671088640, 738197504, 301989888, 486539264, 813694976, 968884224, 761266176, 781189120, 650641408, 687079424, 197525504, 543227904, 906657792, 856047616, 394387456, 944648192, 908462080, 657523712, 362973696, 425872128, 680518784, 769341248, 996836384, 227953264, 424272216, 1018835108, 803210546, 441452925],
    [536870912, 268435456, 671088640, 1006632960, 637534208, 754974720, 343932928, 29360128, 803209216, 378535936, 247988224, 611581952, 885915648, 1065025536, 626163712, 373047296, 762830848, 38236160, 565053440, 690684928, 519735808, 874008320, 168946048, 588806976, 94014752, 860374128, 54125048, 771521188, 429687346, 88557149],
    [536870912, 805306368, 939524096, 469762048, 1040187392, 318767104, 696254464, 574619648, 463470592, 110100480, 98041856, 318504960, 683540480, 521601024, 529367040, 356958208, 270540800, 164319232, 619055104, 531303424, 345214464, 281134848, 880127872, 493982912, 905454176, 725046416, 878182632, 482085540, 891158774, 377948031],
    [536870912, 268435456, 134217728, 201326592, 771751936, 251658240, 931135488, 935329792, 174063616, 210763776, 977797120, 413401088, 477495296, 395247616, 667648000, 41533440, 10149888, 341684224, 398329856, 736822272, 542999040, 765903616, 251227008, 986739648, 217769440, 198031856, 1014368408, 126813220, 801867538, 242861801],
    [536870912, 268435456, 671088640, 872415232, 1040187392, 251658240, 461373440, 104857600, 337641472, 848297984, 516423680, 737411072, 636092416, 317128704, 359366656, 423346176, 1007296512, 437555200, 419563520, 545457152, 600410624, 493407488, 1026273152, 706237376, 554413792, 1015567760, 700688136, 746345892, 698985010, 937119805],
    [536870912, 268435456, 402653184, 872415232, 838860800, 788529152, 327155712, 364904448, 538968064, 42991616, 1061683200, 594280448, 1072300032, 698417152, 71532544, 318226432, 490070016, 773623808, 553781248, 580715520, 792823296, 996855040, 200567936, 464935872, 727084256, 24858992, 150988296, 237869476, 596217170, 499567131],
];
