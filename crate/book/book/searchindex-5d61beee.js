window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#a-thirty-second-example","introduction.html#layout","expressions.html#expressions","expressions.html#grammar","expressions.html#domain-validation","expressions.html#symbolic-differentiation","quadrature.html#quadrature-and-divergence","quadrature.html#the-adaptive-engine","quadrature.html#semi-infinite-tails","quadrature.html#deciding-divergence","quadrature.html#weighted-norms","hardy.html#the-hardy-criterion-and-doubling-weights","hardy.html#the-profile-and-its-supremum","hardy.html#per-coefficient-criterion-constants","hardy.html#the-doubling-class","operators.html#operators-norms-and-splitting","operators.html#the-operator-and-its-components","operators.html#discretization","operators.html#the-splitting-report","operators.html#sign-changing-kernels","gram.html#moment-systems-and-volume-ratios","gram.html#moment-matrices-and-the-normalized-volume","gram.html#the-non-degeneracy-scan","multipliers.html#sobolev-multipliers","multipliers.html#the-expansion-identity","cli.html#the-command-line","cli.html#exit-codes","cli.html#job-kinds","cli.html#csv-profiles"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":19,",":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4,"2":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"28":{"tf":1.0}},"df":3},"5":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"4":{"docs":{"20":{"tf":1.0}},"df":1},"5":{"docs":{"25":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":2}}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}},".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"6":{"docs":{"13":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"7":{"docs":{"20":{"tf":1.0}},"df":1}}},"1":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":2.23606797749979},"24":{"tf":2.8284271247461903},"25":{"tf":2.0},"27":{"tf":1.0},"28":{"tf":3.1622776601683795},"29":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":18,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":12}}}}}},")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0}},"df":9}}}}}},"/":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}}}},"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"e":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"2":{"docs":{"10":{"tf":1.0}},"df":1}},"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,"e":{"docs":{},"df":0,"6":{"docs":{"4":{"tf":1.0}},"df":1}}}},"5":{"docs":{"25":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"9":{"docs":{},"df":0,"8":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"/":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0},"22":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0}},"df":1}}}},"3":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":4},"4":{"docs":{"11":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0}},"df":1}}}},"x":{"docs":{"1":{"tf":1.0},"25":{"tf":1.0}},"df":2},"√":{"docs":{},"df":0,"2":{"docs":{"24":{"tf":1.0}},"df":1}}},"0":{"docs":{"17":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":3,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"2":{"docs":{},"df":0,"4":{"docs":{"28":{"tf":1.0}},"df":1}}},"1":{"docs":{"25":{"tf":1.0}},"df":1},"2":{"docs":{"22":{"tf":1.0}},"df":1,"8":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"4":{"docs":{"6":{"tf":1.0}},"df":1},"5":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":3},"7":{"docs":{"29":{"tf":1.0}},"df":1},"e":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"22":{"tf":2.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.7320508075688772},"25":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":20,"2":{"docs":{"23":{"tf":1.0},"28":{"tf":1.0}},"df":2},"3":{"docs":{"28":{"tf":1.0}},"df":1},"4":{"docs":{"28":{"tf":1.0}},"df":1},"6":{"docs":{"13":{"tf":1.0},"28":{"tf":1.0}},"df":2},"8":{"docs":{"5":{"tf":1.0}},"df":1}},"·":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}},"2":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":2.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":15,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":5}}}}}}},"*":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0}},"df":1}},".":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}},"4":{"docs":{},"df":0,"6":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"/":{"docs":{},"df":0,"3":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}},"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}},"0":{"docs":{"13":{"tf":1.0},"28":{"tf":1.0}},"df":2},"4":{"docs":{},"df":0,"8":{"docs":{"28":{"tf":1.0}},"df":1}}},"2":{"docs":{"18":{"tf":1.0}},"df":1},"5":{"docs":{},"df":0,"6":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"e":{"docs":{"4":{"tf":1.0}},"df":1},"h":{"docs":{"15":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"/":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"·":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"·":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"h":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}}}},"√":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}},"3":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"0":{"docs":{"25":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":4}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0}},"df":1,"}":{"docs":{},"df":0,"/":{"docs":{},"df":0,"√":{"docs":{},"df":0,"3":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{"23":{"tf":1.0}},"df":1}},"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0}},"df":2,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"0":{"docs":{"28":{"tf":1.0}},"df":1}},"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1}},"1":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0},"28":{"tf":1.0}},"df":2}}},"6":{"docs":{"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0}},"df":9,".":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}},"4":{"docs":{"5":{"tf":1.0}},"df":1,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"7":{"docs":{"8":{"tf":1.0}},"df":1,"1":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}},"8":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6},"9":{"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"_":{"docs":{"15":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.4142135623730951}},"df":1,",":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}},"/":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}},"0":{"docs":{"1":{"tf":1.4142135623730951}},"df":1},"_":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1},"k":{"docs":{"0":{"tf":1.0},"19":{"tf":1.7320508075688772}},"df":2,"(":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"·":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0}},"df":1,"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}},"m":{"docs":{"17":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":4}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"b":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":20}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"13":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0},"28":{"tf":1.0}},"df":2}},"t":{"docs":{"0":{"tf":1.0}},"df":1},"z":{"docs":{"3":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"27":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"25":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"15":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"29":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"·":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"j":{"docs":{"10":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"j":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"₀":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0}},"df":2}}},"₁":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}},"y":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"20":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"22":{"tf":1.0}},"df":4}}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}},"t":{"docs":{"14":{"tf":1.0},"29":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}},"df":3},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"8":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"18":{"tf":1.7320508075688772},"20":{"tf":1.0},"25":{"tf":1.0}},"df":4}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1},"t":{"docs":{"20":{"tf":1.0},"24":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}},"c":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2}}}},"p":{"docs":{"15":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}},"df":3},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0},"8":{"tf":1.0}},"df":4}}},"s":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"28":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":3}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":4,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":5},"f":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"2":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":3}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.0}},"df":10,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"14":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"29":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}},"e":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":6}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":2.0},"6":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":3,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":2.0},"2":{"tf":1.0},"20":{"tf":2.0},"27":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":14}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}},"x":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"u":{"docs":{"24":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}},"l":{"docs":{"22":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":11,"’":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.7320508075688772}},"df":1}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"·":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"u":{"docs":{},"df":0,"·":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}}}},"∫":{"docs":{},"df":0,"_":{"docs":{"15":{"tf":1.0}},"df":1}}}},"d":{"docs":{"6":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":3},"y":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"26":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951}},"df":4}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":2.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2}}},"s":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}},"t":{"docs":{"22":{"tf":1.7320508075688772}},"df":1,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":4}}}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}},"r":{"docs":{"26":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":2,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"10":{"tf":2.23606797749979},"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":9}}},"i":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}},"o":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0}},"df":9,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"15":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"26":{"tf":1.4142135623730951}},"df":1}}},"x":{"docs":{"22":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2}}}}}},"e":{"docs":{"15":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":2.0}},"df":5,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1},"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}},"^":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":8}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{"26":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"29":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"24":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":2.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}}}},"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":8}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":3,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":7}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"29":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}},"t":{"docs":{"27":{"tf":1.0}},"df":1}},"p":{"docs":{"15":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}},"x":{"docs":{"5":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0},"25":{"tf":1.0}},"df":2},"s":{"docs":{"28":{"tf":1.0},"29":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.7320508075688772},"18":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{"2":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":2.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":2.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":23,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":2.0},"17":{"tf":1.0},"24":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7,"(":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.7320508075688772},"2":{"tf":1.0}},"df":2},"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}},")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"4":{"docs":{"19":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"23":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}},"df":4,"u":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}},"r":{"docs":{"20":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0},"28":{"tf":1.4142135623730951}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":7,"e":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":20},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0},"28":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":8}}}}}}},"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"⁽":{"docs":{},"df":0,"ˡ":{"docs":{},"df":0,"⁾":{"docs":{},"df":0,"·":{"docs":{},"df":0,"u":{"docs":{"24":{"tf":1.0}},"df":1}}}},"ᵐ":{"docs":{},"df":0,"⁾":{"docs":{},"df":0,"·":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":2.0},"25":{"tf":3.1622776601683795}},"df":4,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"1":{"docs":{"25":{"tf":1.4142135623730951}},"df":1,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}},"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"j":{"docs":{"22":{"tf":1.0}},"df":1,"]":{"docs":{},"df":0,"/":{"docs":{},"df":0,"√":{"docs":{},"df":0,"(":{"docs":{},"df":0,"g":{"docs":{},"df":0,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"]":{"docs":{},"df":0,"·":{"docs":{},"df":0,"g":{"docs":{},"df":0,"[":{"docs":{},"df":0,"j":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"j":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":3,"n":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}},"df":3}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":6,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"28":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0}},"df":7,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"e":{"docs":{},"df":0,"2":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2},"3":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2},"4":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}},"’":{"docs":{"18":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"w":{"docs":{"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.7320508075688772},"23":{"tf":1.0},"6":{"tf":1.0}},"df":6,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"h":{"docs":{"15":{"tf":2.23606797749979}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":6}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":6},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"24":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1,"c":{"docs":{"24":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}},"u":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}}},"f":{"docs":{"29":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":5}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":4}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.7320508075688772},"25":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":11,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0}},"df":3,"’":{"docs":{"9":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{"9":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}},"n":{"docs":{"26":{"tf":1.0}},"df":1},"v":{"docs":{"15":{"tf":2.6457513110645907},"2":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"c":{"docs":{"26":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}}},"j":{"docs":{"9":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"b":{"docs":{"26":{"tf":1.0},"28":{"tf":1.0}},"df":2,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"29":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"26":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}}},"k":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"24":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":4,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":7}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":2.0},"21":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":10}}}},"y":{"docs":{},"df":0,"/":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.4142135623730951},"28":{"tf":2.0},"29":{"tf":1.4142135623730951}},"df":3}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"}":{"docs":{},"df":0,"·":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}},"l":{"docs":{"13":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":2.23606797749979},"25":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951}},"df":3,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"9":{"tf":1.0}},"df":2},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"w":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}},"v":{"docs":{"24":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":2.6457513110645907},"18":{"tf":1.0},"28":{"tf":1.0}},"df":3,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"f":{"docs":{"29":{"tf":1.0}},"df":1},"h":{"docs":{"25":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"?":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"g":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":7,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"–":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}},"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}},"²":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}},"df":3},"v":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}},"df":3}}},"−":{"docs":{},"df":0,"1":{"docs":{"24":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"m":{"docs":{"24":{"tf":1.7320508075688772},"25":{"tf":1.0}},"df":2,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"j":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":20}},"k":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}},"p":{"docs":{"13":{"tf":1.0},"9":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0}},"df":3}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1},"x":{"docs":{"18":{"tf":1.4142135623730951},"22":{"tf":2.0}},"df":2}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"27":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":2}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}},"u":{"docs":{"4":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"26":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":2.0},"25":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":9,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"24":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"ᵀ":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}},"n":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0}},"df":4}},"g":{"docs":{"20":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}},"df":3},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"28":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4}},"n":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0}},"df":4,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":12,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}}}},"t":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1},"h":{"docs":{"20":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"28":{"tf":1.0}},"df":3}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"ö":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"19":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"df":2}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"k":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":19},"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.0},"17":{"tf":1.7320508075688772},"18":{"tf":2.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":19,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":2.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"25":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1},"r":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"20":{"tf":1.0},"25":{"tf":2.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":12,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}},"df":5,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"26":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"29":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"13":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}}}},"p":{"docs":{"24":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"25":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.4142135623730951},"22":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0},"3":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2},"t":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5},"t":{"docs":{"23":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":7,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{"15":{"tf":1.0},"29":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":4,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}},"df":5}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951}},"df":6}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":3}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.0},"25":{"tf":1.7320508075688772}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"23":{"tf":1.0}},"df":1,"t":{"docs":{"13":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"26":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":6,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.7320508075688772}},"df":1}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"23":{"tf":2.8284271247461903},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,",":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,",":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"29":{"tf":1.7320508075688772}},"df":1}}}}},"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"j":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}}},"3":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"}":{"docs":{},"df":0,"/":{"docs":{},"df":0,"√":{"docs":{},"df":0,"3":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"28":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1},"u":{"docs":{"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"15":{"tf":2.23606797749979},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":4,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}},"w":{"docs":{"22":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}}}},"l":{"docs":{"4":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}},"v":{"docs":{"22":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1,"t":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{"7":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.7320508075688772},"26":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"26":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"23":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"w":{"docs":{"29":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"28":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.7320508075688772},"29":{"tf":1.0},"6":{"tf":1.0}},"df":7,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}}},"·":{"docs":{},"df":0,"x":{"docs":{"23":{"tf":1.0}},"df":1}}},"s":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}},"0":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2},"1":{"docs":{"14":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1},"k":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":2.449489742783178},"2":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":4}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"23":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":6,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}},"df":2}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}},"e":{"docs":{"10":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"28":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"24":{"tf":1.0}},"df":4,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":6}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"20":{"tf":1.4142135623730951}},"df":1,"d":{"docs":{"9":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"3":{"tf":1.0}},"df":2},"p":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.7320508075688772}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"w":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":4}},"g":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"20":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1,"f":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2,"g":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"18":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":3}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":2.449489742783178},"13":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}}},"w":{"docs":{"13":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"24":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"24":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":4}},"n":{"docs":{"18":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"5":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":8,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":5}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"l":{"docs":{"23":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2},"u":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}},"y":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"v":{"docs":{},"df":0,"w":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"28":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}},"m":{"docs":{"0":{"tf":1.0},"25":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":3},"p":{"docs":{"13":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,">":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0},"24":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":2.0},"2":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"27":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"20":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":5,"/":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"24":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0}},"df":6}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}},"e":{"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5}}}}}},"i":{"docs":{"19":{"tf":1.0}},"df":1,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}},"l":{"docs":{"26":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}},"p":{"docs":{"2":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{"3":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":2.23606797749979},"19":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":9}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"u":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":2.0},"24":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772}},"df":7,"1":{"docs":{"13":{"tf":1.7320508075688772},"14":{"tf":1.0}},"df":2,"⁻":{"docs":{},"df":0,"¹":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}}}},"t":{"docs":{"22":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{"15":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"s":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":2.0},"20":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"25":{"tf":2.23606797749979},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":20,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"·":{"docs":{},"df":0,"f":{"docs":{"18":{"tf":1.0}},"df":1}}},"v":{"docs":{"0":{"tf":1.0},"24":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772}},"df":3,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"u":{"docs":{},"df":0,"(":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"/":{"docs":{},"df":0,"u":{"docs":{"24":{"tf":1.0}},"df":1,"‖":{"docs":{},"df":0,"_":{"docs":{"24":{"tf":1.0}},"df":1}}}},"1":{"docs":{"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0}},"df":1}},"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}},"u":{"docs":{"15":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"29":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}},"df":6}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"25":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"23":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.7320508075688772},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"7":{"tf":1.0}},"df":7,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"u":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"a":{"docs":{"22":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.7320508075688772}},"df":4,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":19}}}},"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":19}}}}}}}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}},"·":{"docs":{},"df":0,"a":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}}}},"w":{"docs":{"15":{"tf":1.7320508075688772}},"df":1,"_":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.4142135623730951}},"df":1},"j":{"docs":{"18":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0}},"df":1}}},"y":{"docs":{"20":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":4}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"15":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":2.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"27":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":13,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"2":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"9":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"18":{"tf":2.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1},"k":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}},"x":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":2.449489742783178},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":2.23606797749979},"25":{"tf":2.23606797749979},"28":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.7320508075688772},"6":{"tf":2.23606797749979},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":19,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"20":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,"*":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{"4":{"tf":1.0}},"df":1}}}},"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"4":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"*":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"3":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"^":{"docs":{},"df":0,"2":{"docs":{"27":{"tf":1.0}},"df":1}},"k":{"docs":{"6":{"tf":1.0}},"df":1,"·":{"docs":{},"df":0,"u":{"docs":{},"df":0,"⁻":{"docs":{},"df":0,"¹":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"+":{"docs":{},"df":0,"j":{"docs":{},"df":0,"}":{"docs":{},"df":0,"·":{"docs":{},"df":0,"u":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"u":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"k":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"·":{"docs":{},"df":0,"u":{"docs":{},"df":0,"⁻":{"docs":{},"df":0,"¹":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1},"j":{"docs":{"18":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"u":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951}},"df":2,",":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}}}},"·":{"docs":{},"df":0,"u":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}},"ᵏ":{"docs":{},"df":0,")":{"docs":{},"df":0,"⁽":{"docs":{},"df":0,"ᵐ":{"docs":{},"df":0,"⁾":{"docs":{},"df":0,"·":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}}}}},"·":{"docs":{},"df":0,"u":{"docs":{},"df":0,"⁻":{"docs":{},"df":0,"¹":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"l":{"docs":{},"df":0,"²":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"ᵐ":{"docs":{},"df":0,"·":{"docs":{},"df":0,"u":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":4}}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951}},"df":4}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}},"df":4}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"28":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"28":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":2}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":6,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":5}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":2}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":5}}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":3}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}},"df":5}}}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"28":{"tf":1.0}},"df":1}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"28":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"volterra-weights decides a concrete analytic question numerically: given a\\nVolterra integral operator (A f)(x) = ∫₀ˣ A(x, t) f(t) dt, A(x, t) = a₀(x) + a₁(x)·t + … + a_m(x)·tᵐ, on the half-line (0, ∞), and two positive weights u, v, is there a\\nconstant c with ‖v·Af‖₂ ≤ c·‖u·f‖₂ for every f? In other words: is A\\nbounded from the weighted space L²_u into L²_v? Kernels of this polynomial-sum form are special enough to admit a complete\\nanswer and general enough to be interesting: the coefficients a_k may\\nchange sign, so the kernel itself may, which puts the family outside the\\nclassical nonnegative-kernel theory. The answer splits coefficient by\\ncoefficient. For each k one computes s_k = sup_{r>0} ‖a_k·v‖_{L²(r,∞)} · ‖x^k·u⁻¹‖_{L²(0,r)}, and, provided u⁻² satisfies an integral doubling condition, the operator is\\nbounded exactly when every s_k is finite. The library computes these\\nconstants with divergence diagnosis, estimates the operator norm directly by\\ndiscretization so the two routes can be compared, verifies the\\nGram-determinant geometry the splitting rests on, and applies the machinery\\nto characterize pointwise multipliers between weighted Sobolev spaces.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"The averaging kernel a₀(x) = 1/x between unweighted spaces is the\\nclassical test case: its criterion constant is exactly 1, and the operator\\nnorm is exactly 2. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::{coefficient_constant, SearchConfig}; let one: Expression = \\"1\\".parse()?;\\nlet a0: Expression = \\"x^(-1)\\".parse()?;\\nlet s0 = coefficient_constant(&one, &one, &a0, 0, &SearchConfig::default())?;\\nassert!((s0.supremum - 1.0).abs() < 1e-6);\\nassert!(s0.is_finite()); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"Introduction » A thirty-second example","id":"1","title":"A thirty-second example"},"10":{"body":"Whether an improper integral converges at all is decided before the\\nadaptive pass by a dyadic-shell scan: partial integrals over the geometric\\nshells (a·2^{j-1}, a·2^j) expose the power-law behavior of the integrand,\\nand the log–log slope of the shell increments is the growth exponent. A tail\\nwhose increments decay with slope above −0.05 is reported divergent together\\nwith that slope; at the origin the mirrored test uses a tighter margin,\\nbecause integrable singularities arbitrarily close to the critical exponent\\nare legitimate inputs. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::quadrature::{integrate_finite, integrate_tail, Status}; // logarithmic divergence at the origin: slope ≈ 0\\nlet f: Expression = \\"x^(-1)\\".parse()?;\\nmatch integrate_finite(&f, 0.0, 1.0, 1e-9)?.status { Status::Diverges { growth_exponent } => assert!(growth_exponent.abs() < 0.02), other => panic!(\\"expected divergence, got {other:?}\\"),\\n} // a non-decaying tail grows linearly: slope ≈ 1\\nlet one: Expression = \\"1\\".parse()?;\\nmatch integrate_tail(&one, 1.0, 1e-9)?.status { Status::Diverges { growth_exponent } => assert!((growth_exponent - 1.0).abs() < 0.02), other => panic!(\\"expected divergence, got {other:?}\\"),\\n} Ok::<(), volterra_weights::Error>(()) } The slope threshold makes the classifier deliberately conservative in a\\nnarrow band around the critical exponent: x^{-1.02} on a tail is reported\\ndivergent although it converges in the limit — at desk scale the two are\\nnumerically indistinguishable, and the criterion quantities this feeds are\\nsuprema where near-critical behavior means enormous constants anyway.","breadcrumbs":"Quadrature and divergence » Deciding divergence","id":"10","title":"Deciding divergence"},"11":{"body":"weighted_l2_norm squares the integrand, splits (0, ∞) at 1 when needed,\\nand propagates the error estimate through the square root: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::quadrature::weighted_l2_norm; let g: Expression = \\"x^(-1)\\".parse()?;\\n// ∫₄^∞ x⁻² = 1/4, so the norm is 1/2\\nlet n = weighted_l2_norm(&g, 4.0, f64::INFINITY, 1e-9)?;\\nassert!((n.value - 0.5).abs() < 1e-8); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"Quadrature and divergence » Weighted norms","id":"11","title":"Weighted norms"},"12":{"body":"","breadcrumbs":"The Hardy criterion and doubling weights » The Hardy criterion and doubling weights","id":"12","title":"The Hardy criterion and doubling weights"},"13":{"body":"The boundedness of the plain integration map f ↦ v1(x)·∫₀ˣ f from L² to\\nL² is equivalent to the finiteness of a supremum of tail/head norm products: F(r) = ‖v1‖_{L²(r,∞)} · ‖u1⁻¹‖_{L²(0,r)}, sup over r > 0. This is the engine the whole criterion runs on. hardy_profile computes one F(r); hardy_constant samples the profile on a log grid over\\n[1e-6, 1e6] (200 points by default), refines the best bracket by golden\\nsection, and watches both ends: if the profile still grows over the first or\\nlast decade of the grid — log–log slope beyond ±0.02 — the supremum lives in\\nthe limit and is reported infinite. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::{hardy_constant, SearchConfig, Verdict}; // v1 = x^{-2}, u1 = x^{-1}: tail r^{-3/2}/√3, head r^{3/2}/√3 — F ≡ 1/3\\nlet v1: Expression = \\"x^(-2)\\".parse()?;\\nlet u1: Expression = \\"x^(-1)\\".parse()?;\\nlet result = hardy_constant(&v1, &u1, &SearchConfig::default(), 1e-9)?;\\nassert_eq!(result.verdict, Verdict::Finite);\\nassert!((result.supremum - 1.0 / 3.0).abs() < 1e-6); // v1 = x^{-0.6}: every F(r) is finite but F ~ r^{0.4} grows — supremum ∞\\nlet slow: Expression = \\"x^(-0.6)\\".parse()?;\\nlet result = hardy_constant(&slow, &\\"1\\".parse()?, &SearchConfig::default(), 1e-9)?;\\nassert_eq!(result.verdict, Verdict::Infinite); Ok::<(), volterra_weights::Error>(()) } The returned HardyResult carries the sampled profile (for CSV output), the\\nsupremum and its location, and the two boundary slopes, so a divergent\\nverdict always comes with its evidence.","breadcrumbs":"The Hardy criterion and doubling weights » The profile and its supremum","id":"13","title":"The profile and its supremum"},"14":{"body":"A kernel component a_k(x)·∫₀ˣ tᵏ f(t) dt between L²_u and L²_v reduces\\nto exactly this Hardy question after the substitution that absorbs tᵏ into\\nthe function: the pair becomes v1 = a_k·v, u1 = x^{-k}·u, so the head\\nfactor reads ‖xᵏ·u⁻¹‖_{L²(0,r)}. coefficient_constant performs the\\nreduction and delegates — same code path, bit-identical results: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::{coefficient_constant, SearchConfig, Verdict}; let one: Expression = \\"1\\".parse()?;\\n// a_1 = x^{-2} at k = 1: the balanced pair above, so s_1 = 1/3\\nlet s1 = coefficient_constant(&one, &one, &\\"x^(-2)\\".parse()?, 1, &SearchConfig::default())?;\\nassert!((s1.supremum - 1.0 / 3.0).abs() < 1e-6); // a constant coefficient has a divergent tail norm at every r\\nlet s0 = coefficient_constant(&one, &one, &one, 0, &SearchConfig::default())?;\\nassert_eq!(s0.verdict, Verdict::Infinite); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"The Hardy criterion and doubling weights » Per-coefficient criterion constants","id":"14","title":"Per-coefficient criterion constants"},"15":{"body":"The splitting theory asks the weight u⁻² to be doubling: there must be a\\nconstant C with ∫_Δ w ≤ C·∫_{½Δ} w for every interval Δ ⊂ (0, ∞) of\\nlength at least some threshold, where ½Δ is the concentric interval of\\nhalf the length. Powers are doubling; genuine exponentials are not — for w = eˣ the ratio on an interval of length 2h is 2·cosh(h/2) at any\\nadmissible center, unbounded in h. doubling_constant estimates the smallest admissible C over a structured\\nfamily (log grid of centers × lengths, plus intervals anchored at the\\norigin) and declares non-membership when a sampled ratio passes the cap or\\nthe per-length maxima keep growing across the last decade of lengths. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::{doubling_constant, doubling_ratio, SamplingConfig}; let flat: Expression = \\"1\\".parse()?;\\nlet report = doubling_constant(&flat, 0.0, &SamplingConfig::default())?;\\nassert!(report.member);\\nassert!((report.constant_estimate - 2.0).abs() < 1e-6); let exp: Expression = \\"exp(x)\\".parse()?;\\nlet report = doubling_constant(&exp, 0.0, &SamplingConfig::default())?;\\nassert!(!report.member); // the growth law that disqualifies it, checked pointwise\\nlet h = 6.0;\\nlet ratio = doubling_ratio(&exp, 20.0, 2.0 * h)?;\\nassert!((ratio - 2.0 * (h / 2.0).cosh()).abs() < 1e-6 * ratio); Ok::<(), volterra_weights::Error>(()) } For anyone calibrating expectations: with the concentric convention the\\nflat-weight ratio is exactly 2 on every interval, the linear weight x also\\ngives exactly 2 (the integral over an interval is length × midpoint value),\\nand convex powers push the constant up only through intervals touching the\\norigin — x² attains 64/26 ≈ 2.4615 on (0, h).","breadcrumbs":"The Hardy criterion and doubling weights » The doubling class","id":"15","title":"The doubling class"},"16":{"body":"","breadcrumbs":"Operators, norms and splitting » Operators, norms and splitting","id":"16","title":"Operators, norms and splitting"},"17":{"body":"An operator::OperatorSpec is the coefficient list a₀ … a_m of the\\nkernel A(x,t) = Σ a_k(x)·tᵏ. Applying the operator pointwise runs one\\nmoment integral per coefficient: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::operator::{apply, OperatorSpec}; let spec = OperatorSpec::new(vec![ \\"x^(-1)\\".parse()?, \\"x^(-2)\\".parse()?,\\n])?;\\n// at x = 2 with f ≡ 1: (1/2)·2 + (1/4)·2 = 3/2\\nlet one: Expression = \\"1\\".parse()?;\\nassert!((apply(&spec, &one, 2.0, 1e-10)? - 1.5).abs() < 1e-9); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"Operators, norms and splitting » The operator and its components","id":"17","title":"The operator and its components"},"18":{"body":"Direct norm estimation needs a matrix. Substituting g = u·f turns\\nboundedness from L²_u to L²_v into plain L² boundedness of the kernel v(x)·A(x,t)/u(t); on a midpoint grid with quadrature weights w_i the\\nsymmetrized Nyström matrix M[i][j] = √w_i · v(x_i)·A(x_i, x_j)/u(x_j) · √w_j for x_j ≤ x_i, (diagonal at half weight — the midpoint treatment of the moving endpoint)\\nhas largest singular value approximating the norm of the operator truncated\\nto the grid’s window. The largest singular value comes from power iteration\\non MᵀM with a deterministic start vector. Grids are logarithmic by default, and the window matters: the truncated\\naveraging operator only approaches the sharp constant 2 as the window grows,\\nwith a defect falling off like the inverse square of the window length in\\nlog coordinates. Default grids therefore span 22 decades. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::operator::{discretize, norm_estimate, GridSpec, OperatorSpec}; let spec = OperatorSpec::new(vec![\\"x^(-1)\\".parse()?])?;\\nlet one: Expression = \\"1\\".parse()?;\\nlet disc = discretize(&spec, &one, &one, &GridSpec::log(1e4, 512))?;\\nlet est = norm_estimate(&disc, 1e-3);\\nassert!(est.converged);\\nassert!((est.value - 2.0).abs() < 0.05); // sharp constant 2 Ok::<(), volterra_weights::Error>(()) } A single truncation can only show boundedness of the truncation; the\\noperator on all of (0, ∞) is judged on a refinement ladder ( x_max and the\\nnode count grow together). Bounded operators stabilize along the ladder;\\nunbounded ones grow, and the log–log slope of the truncated norms against x_max is the growth exponent.","breadcrumbs":"Operators, norms and splitting » Discretization","id":"18","title":"Discretization"},"19":{"body":"operator::splitting_report ties the two routes together. It computes every criterion constant s_k through the Hardy reduction, the whole-operator norm across the ladder, every component norm ‖A_k‖ across the ladder, and compares them. Each finite component obeys the two-sided relation s_k ≤ ‖A_k‖ ≤ 2·s_k (the constant 2 comes from the sharp Hardy-inequality\\nrelation), and the triangle inequality gives the upper sandwich ‖A‖ ≤ Σ‖A_k‖ ≤ 2·Σ s_k. The matching lower constant is genuinely\\nproblem-dependent, so the report states the observed ratio ‖A‖ / Σ s_k\\nwithout asserting a bound on it. When some s_k is infinite the report\\ninstead carries the truncated-norm growth profile as divergence evidence. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::SearchConfig;\\nuse volterra_weights::operator::{splitting_report, GridSpec, OperatorSpec}; let spec = OperatorSpec::new(vec![\\"x^(-1)\\".parse()?, \\"x^(-2)\\".parse()?])?;\\nlet one: Expression = \\"1\\".parse()?;\\nlet grids = [GridSpec::log(1e2, 128), GridSpec::log(1e3, 256)];\\nlet report = splitting_report(&spec, &one, &one, &SearchConfig::default(), &grids, 1e-2)?; assert!((report.sum_s - 4.0 / 3.0).abs() < 1e-6); // s₀ = 1, s₁ = 1/3\\nassert!(report.sandwich_upper_ok);\\nlet comp_sum: f64 = report.component_norms.iter().map(|e| e.value).sum();\\nassert!(report.whole_norm.value <= comp_sum * (1.0 + 1e-6)); Ok::<(), volterra_weights::Error>(()) } For this operator the observed ratio ‖A‖ / Σ s_k is ≈ 1.98: the two\\nkernel components align where it matters, so the upper constant 2 is nearly\\nattained — a useful sanity check that neither route is slack.","breadcrumbs":"Operators, norms and splitting » The splitting report","id":"19","title":"The splitting report"},"2":{"body":"The library is organized in layers, bottom to top: expr — a small expression language with exact symbolic\\ndifferentiation; every weight, coefficient and test function is one of\\nthese. quadrature — adaptive integration on finite intervals\\nand semi-infinite tails, with error estimates and an explicit\\nfinite/divergent verdict. hardy — the criterion profile F(r), its supremum, the\\nper-coefficient constants s_k, and the doubling class of weights. operator — discretization of the truncated operator,\\nnorm estimation by power iteration, and the splitting report. gram — moment Gram matrices and the uniform non-degeneracy\\nscan behind the criterion’s necessity. multiplier — the three conditions characterizing\\npointwise Sobolev multipliers, and the induced Volterra operator. cli — a configuration-driven command line over all of the\\nabove, with CSV profile output. Every code block in this book compiles and runs against the current crate:\\nthe companion crate volterra-weights-book includes each chapter as\\ndocumentation, so cargo test --doc exercises all snippets.","breadcrumbs":"Introduction » Layout","id":"2","title":"Layout"},"20":{"body":"Nothing requires the coefficients to share a sign, and this is where the\\nclass parts ways with the classical nonnegative-kernel theory. The\\ncriterion constants are built from L² norms, so they are blind to signs;\\nthe direct norm is not, and opposing components cancel: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::SearchConfig;\\nuse volterra_weights::operator::{splitting_report, GridSpec, OperatorSpec}; // kernel (2t/x - 1)/x: negative for t < x/2, positive above\\nlet spec = OperatorSpec::new(vec![\\"-x^(-1)\\".parse()?, \\"2*x^(-2)\\".parse()?])?;\\nlet one: Expression = \\"1\\".parse()?;\\nlet grids = [GridSpec::log(1e2, 128), GridSpec::log(1e3, 256)];\\nlet report = splitting_report(&spec, &one, &one, &SearchConfig::default(), &grids, 1e-2)?; // the constants see absolute values: s₀ = 1, s₁ = 2/3\\nassert!((report.sum_s - 5.0 / 3.0).abs() < 1e-6);\\n// the norm sees the cancellation: ‖A‖ ≈ 2/3, far below Σ s_k\\nassert!(report.whole_norm.value < 0.7);\\nassert!(report.sandwich_upper_ok); Ok::<(), volterra_weights::Error>(()) } Boundedness itself still splits — both routes agree the operator is bounded\\n— but the observed ratio ‖A‖ / Σ s_k drops to ≈ 0.4 here, versus ≈ 1.98\\nfor the aligned kernel above. That spread is the point: the upper constant\\nin the two-sided bound is universal, while the matching lower constant\\ngenuinely depends on the kernel family, which is why the report only ever states the observed ratio.","breadcrumbs":"Operators, norms and splitting » Sign-changing kernels","id":"20","title":"Sign-changing kernels"},"21":{"body":"The necessity half of the splitting criterion is geometry: to isolate one\\nkernel coefficient, one needs test functions orthogonal to the span of the other shifted weights x·u⁻¹, …, xᵐ·u⁻¹ on (0, r), while keeping a\\nuniformly positive projection onto u⁻¹ itself. That is possible exactly\\nwhen the parallelepiped spanned by the system u⁻¹, x·u⁻¹, …, xᵐ·u⁻¹ restricted to (0, r) is uniformly non-degenerate in r. The gram module quantifies this.","breadcrumbs":"Moment systems and volume ratios » Moment systems and volume ratios","id":"21","title":"Moment systems and volume ratios"},"22":{"body":"The Gram matrix of the system has entries G[i][j] = ∫₀ʳ x^{i+j}·u⁻² dx —\\na Hilbert-like moment matrix. Its raw determinant scales like the product of\\nthe squared edge norms, so the dimensionless content is the normalized\\nvolume ρ = √(det R) of the correlation matrix R[i][j] = G[i][j]/√(G[i][i]·G[j][j]): always in (0, 1], equal to 1 exactly\\nfor orthogonal edges. Determinants are never expanded by cofactors — ρ is\\nthe product of the Cholesky diagonal of R, which also keeps the\\nHilbert-type conditioning at bay (degrees are capped at 8, beyond which\\ndouble precision gives out regardless). #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::gram::{moment_matrix, subspace_angle, volume_ratio}; let u: Expression = \\"1\\".parse()?;\\n// unit weight on (0,1): the Hilbert matrix [[1, 1/2], [1/2, 1/3]]\\nlet g = moment_matrix(&u, 1.0, 1, 1e-10)?;\\nassert!((g.entries[(0, 1)] - 0.5).abs() < 1e-12); // ρ = 1/2 for the pair (u⁻¹, x·u⁻¹) — at every radius, by scaling\\nassert!((volume_ratio(&g)? - 0.5).abs() < 1e-9); // the angle between the first edge and the span of the rest:\\n// sin θ = √(det G / (G₀₀ · det G\')), computed via the same Cholesky route\\nassert!((subspace_angle(&g)? - 0.5).abs() < 1e-9); Ok::<(), volterra_weights::Error>(()) } The two quantities factor exactly: ρ = sin θ · ρ(minor system), which is\\nalso how a chain of angles recovers the full volume.","breadcrumbs":"Moment systems and volume ratios » Moment matrices and the normalized volume","id":"22","title":"Moment matrices and the normalized volume"},"23":{"body":"gram::nondegeneracy_scan samples ρ(r) and sin θ(r) on a log grid of\\nradii and reports inf_ratio — the smallest normalized volume over the stable part of the\\nrange: the empirical uniform lower bound the splitting argument needs, and suggested_r0 — the smallest sampled radius past which ρ stops\\nundercutting its running minimum by more than 10% (0 when the whole range\\nqualifies). For pure power weights ρ(r) is exactly r-independent (substituting x → r·x rescales every moment by a power of r that the normalization\\ncancels), which makes them ideal calibration inputs: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::gram::nondegeneracy_scan; let u: Expression = \\"1\\".parse()?;\\nlet profile = nondegeneracy_scan(&u, 3, (1e-2, 1e2), 30, 1e-10)?;\\nlet rhos: Vec<f64> = profile.samples.iter().map(|s| s.rho).collect();\\nlet spread = rhos.iter().cloned().fold(f64::MIN, f64::max) - rhos.iter().cloned().fold(f64::MAX, f64::min);\\nassert!(spread <= 1e-6);\\nassert_eq!(profile.suggested_r0, 0.0);\\nassert!(profile.inf_ratio > 0.0); Ok::<(), volterra_weights::Error>(()) } Weights that are not scale invariant produce genuinely r-dependent\\nprofiles — for u = eˣ the moments saturate as r grows and ρ(r)\\nstabilizes — and the scan is how one reads off whether a uniform positive\\nlower bound is plausible for a given weight, and from which radius onward. A weight whose inverse square fails local integrability (such as u = x,\\nwhere u⁻² = x⁻² diverges at the origin) is rejected with a quadrature\\nerror naming the divergent moment: the moment system simply does not exist\\nin L² then.","breadcrumbs":"Moment systems and volume ratios » The non-degeneracy scan","id":"23","title":"The non-degeneracy scan"},"24":{"body":"A function φ is a pointwise multiplier from one weighted Sobolev space\\ninto another when φ·f lands in the target space for every f in the\\nsource. For the spaces on (0, ∞) with norms source: ‖f‖_{L²(0,1)} + ‖f⁽ˡ⁾·u‖₂ target: ‖f‖_{L²(0,1)} + ‖f⁽ᵐ⁾·v‖₂ (m ≤ l; the local term keeps polynomials of degree < l inside), the\\nmultipliers are characterized by finitely many checkable conditions, all\\nbuilt from the shifted derivatives (φ·xᵏ)⁽ᵐ⁾: Global norms — ‖(φ·xᵏ)⁽ᵐ⁾·v‖₂ < ∞ for k = 0 … l−1. Tail/head suprema — for each k, the Hardy-type supremum with v1 = (φ·xᵏ)⁽ᵐ⁾·v and head factor ‖x^{l−k−1}·u⁻¹‖_{L²(0,r)} is finite. Weight-ratio bound (only when m = l) — ‖φ·v/u‖_∞ < ∞. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::hardy::{SamplingConfig, SearchConfig};\\nuse volterra_weights::multiplier::{multiplier_verdict, MultiplierProblem}; let one: Expression = \\"1\\".parse()?;\\nlet p = MultiplierProblem::new(\\"exp(-x)\\".parse()?, one.clone(), one.clone(), 1, 1)?;\\nlet report = multiplier_verdict(&p, &SearchConfig::default(), &SamplingConfig::default(), 1e-9)?;\\nassert!(report.verdict);\\n// ‖(e^{-x})′‖₂ = 1/√2\\nassert!((report.derivative_norms[0].value - 0.5f64.sqrt()).abs() < 1e-6); // φ = x fails: (x)′ = 1 has infinite L² norm, and |φ·v/u| = x is unbounded\\nlet p = MultiplierProblem::new(\\"x\\".parse()?, one.clone(), one.clone(), 1, 1)?;\\nlet report = multiplier_verdict(&p, &SearchConfig::default(), &SamplingConfig::default(), 1e-9)?;\\nassert!(!report.verdict); Ok::<(), volterra_weights::Error>(()) } The characterization holds under side hypotheses — u⁻² doubling and v⁻¹\\nlocally square integrable — which the report records (membership verdict,\\ndoubling estimate, per-radius integrability) but does not enforce: a verdict\\ncomputed outside them is still printed, it just leaves the guaranteed\\nregime. In the special case m = l, u = v with (1 + x^{l−1})·u⁻¹\\nsquare integrable, condition 1 already implies condition 2, so the verdict\\ncollapses to conditions 1 and 3; the test suite checks this implication on a\\ncorpus.","breadcrumbs":"Sobolev multipliers » Sobolev multipliers","id":"24","title":"Sobolev multipliers"},"25":{"body":"Why do Volterra operators with polynomial-sum kernels govern this problem?\\nBecause of an exact differentiation identity: if g vanishes to order l\\nat the origin, then (φ·g)⁽ᵐ⁾ expands into moment integrals of g⁽ˡ⁾\\nagainst precisely the coefficients (φ·xᵏ)⁽ᵐ⁾, with binomial weights and\\nalternating-sign powers of t inside. expansion_residual evaluates both\\nsides independently — the left one purely symbolically, the right one\\nthrough quadrature — and returns the worst absolute mismatch: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::multiplier::expansion_residual; let phi: Expression = \\"x\\".parse()?;\\nlet g: Expression = \\"x^3\\".parse()?; // vanishes to order 2 at 0\\nlet residual = expansion_residual(&phi, &g, 2, 1, &[0.5, 1.0, 3.0])?;\\nassert!(residual <= 1e-8); Ok::<(), volterra_weights::Error>(()) } induced_operator packages the same sum as an OperatorSpec of degree\\nl−1, so the multiplier problem literally is an operator-boundedness\\nproblem for the criterion machinery. A pleasant special case: for φ = log x with l = m = 1 the induced kernel coefficient is 1/x — the\\nclassical averaging operator. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::multiplier::induced_operator;\\nuse volterra_weights::operator::apply; let phi: Expression = \\"log(x)\\".parse()?;\\nlet op = induced_operator(&phi, 1, 1)?;\\nassert_eq!(op.degree(), 0); // and the whole identity routed through the operator: for g = x²,\\n// apply(op, g′) + φ·g′ must equal (φ·g)′\\nlet g: Expression = \\"x^2\\".parse()?;\\nlet g1 = g.differentiate(1)?;\\nlet lhs = Expression::mul(phi.clone(), g).differentiate(1)?;\\nlet x = 1.5;\\nlet got = apply(&op, &g1, x, 1e-11)? + phi.eval(x)? * g1.eval(x)?;\\nassert!((got - lhs.eval(x)?).abs() < 1e-8); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"Sobolev multipliers » The expansion identity","id":"25","title":"The expansion identity"},"26":{"body":"The volterra-weights binary runs one analysis job per invocation, driven\\nby a TOML config file: volterra-weights run <config.toml> [--out DIR] [--tol T] [--quiet]\\nvolterra-weights dump-defaults <kind> run writes report.txt (human-readable key/value lines) and the job’s CSV\\nprofiles into the output directory (default out/, created if missing), and\\nechoes the report unless --quiet is given. dump-defaults prints a\\nrunnable config for a kind, which is also the quickest way to learn each\\njob’s fields. Internal parallelism honors RAYON_NUM_THREADS; results do\\nnot depend on the thread count.","breadcrumbs":"The command line » The command line","id":"26","title":"The command line"},"27":{"body":"Divergence is an answer, not an error, and the exit code keeps the two\\napart: code meaning 0 computed; finite / positive verdict 2 computed; divergent or negative verdict (infinite constant, weight not doubling, not a multiplier) 1 error: malformed config or expression, invalid grid, quadrature failure Expression errors carry positions: v1 = \\"x^^2\\" fails with syntax error at position 3: unexpected token Caret.","breadcrumbs":"The command line » Exit codes","id":"27","title":"Exit codes"},"28":{"body":"One kind per file: hardy, coefficient, doubling, operator, gram, multiplier, expansion. Expression fields are strings in the grammar from the expressions chapter; numeric fields all have defaults. A criterion-constant job: kind = \\"coefficient\\"\\nu = \\"1\\"\\nv = \\"1\\"\\na = \\"x^(-2)\\"\\nk = 1 [search] # optional, these are the defaults\\nr_min = 1e-6\\nr_max = 1e6\\nsamples = 200\\nslope_threshold = 0.02\\nrefine_iters = 40 A full operator analysis with its truncation ladder: kind = \\"operator\\"\\ncoefficients = [\\"x^(-1)\\", \\"x^(-2)\\"]\\nu = \\"1\\"\\nv = \\"1\\"\\nrtol = 1e-3 [ladder] # optional; x_max and nodes must have equal length\\nx_max = [1e2, 1e3, 1e4]\\nnodes = [512, 1024, 2048] A multiplier verdict: kind = \\"multiplier\\"\\nphi = \\"exp(-x)\\"\\nu = \\"1\\"\\nv = \\"1\\"\\nsource_order = 1\\ntarget_order = 1","breadcrumbs":"The command line » Job kinds","id":"28","title":"Job kinds"},"29":{"body":"Each profile is a header row plus one sample per line, every value printed\\nwith 17 significant digits and LF line endings — bit-identical across runs\\nof the same config: r,value\\n1.0000000000000000e0,5.0000000000000000e-1 kind file columns hardy profile.csv r,value coefficient profile.csv r,value doubling ratios.csv length,max_ratio operator ladder.csv x_max,norm gram profile.csv r,rho,sin_theta,ln_det multiplier conditions.csv k,derivative_norm,tail_head_sup Divergent profile values print as inf. The expansion kind writes the\\nreport only. The same runner is available programmatically: #![allow(unused)] fn main() {\\nuse volterra_weights::job::{run, JobConfig}; let dir = std::env::temp_dir().join(\\"vw-book-example\\");\\nlet config = JobConfig::defaults_for(\\"coefficient\\")?;\\nlet outcome = run(&config, &dir)?;\\nassert!(!outcome.divergent);\\nassert!(outcome.report.contains(\\"supremum: 1.0\\")); std::fs::remove_dir_all(&dir).ok(); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"The command line » CSV profiles","id":"29","title":"CSV profiles"},"3":{"body":"Everything the library analyzes — weights, kernel coefficients, multipliers,\\ntest functions — is a closed-form scalar function of x on (0, ∞),\\nrepresented by expr::Expression. The representation is a plain syntax\\ntree with shared subtrees; expressions are immutable and cheap to clone, and\\nevery operation on them is pure, so they can be evaluated from parallel\\nworkers freely.","breadcrumbs":"Expressions » Expressions","id":"3","title":"Expressions"},"4":{"body":"number literals 1 0.5 2e-3 1.25e6\\nthe variable x\\noperators + - * / ^ (usual precedence, unary minus)\\nfunctions exp( … ) log( … )\\nparentheses ( … ) ^ is right-associative and its exponent must be a real constant — any\\nexponent subexpression is accepted as long as it does not contain x, so x^(-1), x^0.5 and x^(1/3) all work, while x^x is rejected at parse\\ntime. This restriction is what keeps symbolic differentiation closed over\\nthe grammar. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression; let e: Expression = \\"x^(0.5)*exp(-x)\\".parse()?;\\nassert!((e.eval(4.0)? - 2.0 * (-4.0f64).exp()).abs() < 1e-15); // out of domain: the half-line is open at zero\\nassert!(e.eval(0.0).is_err()); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"Expressions » Grammar","id":"4","title":"Grammar"},"5":{"body":"Parsing validates the expression on (0, ∞) by sampling 64 log-spaced points\\nspanning [1e-8, 1e8]: every division denominator must stay positive and\\nfinite there, every log argument positive, every fractional-power base\\nnonnegative. A negative-exponent power is a division in disguise and is\\nchecked the same way. This is a sampling check, not interval arithmetic —\\nit catches the practical failure class (denominators vanishing somewhere on\\nthe half-line) cheaply. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression; // the denominator vanishes identically\\nassert!(Expression::parse(\\"x/(x-x)\\").is_err());\\n// a pole at x = 2, inside the domain\\nassert!(Expression::parse(\\"(x-2)^(-2)\\").is_err());\\n// fine: the denominator 1 + x never vanishes on (0, ∞)\\nassert!(Expression::parse(\\"x/(1+x)\\").is_ok()); } Note that exp(x) is accepted even though IEEE evaluation overflows around\\nx ≈ 710: the function is finite on all of (0, ∞) mathematically, and\\noverflow at a concrete point is reported as an evaluation error there, not a\\nparse error.","breadcrumbs":"Expressions » Domain validation","id":"5","title":"Domain validation"},"6":{"body":"Derivatives are exact and stay inside the grammar. Repeated differentiation\\ncan grow the tree combinatorially — exp(exp(x)) is the classic offender —\\nso each differentiation step enforces a 10,000-node budget and fails with a\\nsize-cap error beyond it rather than churning. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression; let e: Expression = \\"x^2*log(x)\\".parse()?;\\nlet d = e.differentiate(1)?; // 2x·log x + x\\nassert!((d.eval(1.0)? - 1.0).abs() < 1e-14); // order 0 is the identity\\nlet same = e.differentiate(0)?;\\nassert_eq!(e.eval(3.0)?, same.eval(3.0)?); // the node budget stops combinatorial blowup\\nlet tower: Expression = \\"exp(exp(x))\\".parse()?;\\nassert!(tower.differentiate(14).is_err()); Ok::<(), volterra_weights::Error>(()) } The helper multiply_by_power builds e · x^k — the shifted functions the\\ncriterion and the multiplier conditions are made of: #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression; let e: Expression = \\"x^(-1)\\".parse()?;\\nlet one = e.multiply_by_power(1); // x^{-1} · x\\nassert!((one.eval(123.0)? - 1.0).abs() < 1e-15); Ok::<(), volterra_weights::Error>(()) } A light constant-folding pass runs inside the expression constructors\\n( 1·e → e, e^0 → 1, constant subtrees collapse); it changes values by at\\nmost one rounding and keeps derivative trees small. No deeper simplification\\nis attempted — correctness never depends on it.","breadcrumbs":"Expressions » Symbolic differentiation","id":"6","title":"Symbolic differentiation"},"7":{"body":"Every quantity in the criterion machinery is an integral over (0, r), over\\n(r, ∞), or an L² norm built from one. The quadrature module provides these\\nwith two properties the upper layers rely on: an honest absolute error\\nestimate, and an explicit three-way status — Converged, Diverges (with a\\nmeasured growth exponent), or MaxSubdivisions. Divergence is a first-class\\nanswer here, not a failure: the criterion constants are defined through\\nfinite/infinite verdicts.","breadcrumbs":"Quadrature and divergence » Quadrature and divergence","id":"7","title":"Quadrature and divergence"},"8":{"body":"The core is globally adaptive bisection over an embedded 7-point Gauss /\\n15-point Kronrod pair: each panel carries the difference of the two rules as\\nits error estimate, the worst panel is split first, and the pass stops when\\nthe summed estimate meets the tolerance (subdivision budget: 10,000 panels).\\nAll quadrature nodes are interior, so integrable endpoint singularities are\\nnever evaluated at the endpoint itself. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::quadrature::{integrate_finite, Status}; let f: Expression = \\"x^(-0.5)\\".parse()?;\\nlet r = integrate_finite(&f, 0.0, 1.0, 1e-9)?; // antiderivative 2√x\\nassert_eq!(r.status, Status::Converged);\\nassert!((r.value - 2.0).abs() < 1e-8);\\nassert!(r.error_estimate <= 1e-9); Ok::<(), volterra_weights::Error>(()) } When a probe near the origin detects large integrand values, the\\nsubstitution x = s² is applied first; it doubles the effective exponent of\\na power singularity ( x^{-1/2} becomes bounded), making the usual weights\\nroutine.","breadcrumbs":"Quadrature and divergence » The adaptive engine","id":"8","title":"The adaptive engine"},"9":{"body":"Tails are mapped onto (0, 1) by the scale-invariant substitution x = a/t:\\ndyadic scales in x land at dyadic t, so the integrand’s structure is\\nequally resolvable whatever the lower limit, and the adaptive pass is seeded\\nwith panels at t = 2^{-j}. #![allow(unused)] fn main() {\\nuse volterra_weights::expr::Expression;\\nuse volterra_weights::quadrature::{integrate_tail, Status}; let f: Expression = \\"exp(-x)\\".parse()?;\\nlet r = integrate_tail(&f, 0.5, 1e-9)?;\\nassert!((r.value - (-0.5f64).exp()).abs() < 1e-8); Ok::<(), volterra_weights::Error>(()) }","breadcrumbs":"Quadrature and divergence » Semi-infinite tails","id":"9","title":"Semi-infinite tails"}},"docInfo":{"0":{"body":116,"breadcrumbs":2,"title":1},"1":{"body":46,"breadcrumbs":4,"title":3},"10":{"body":144,"breadcrumbs":4,"title":2},"11":{"body":40,"breadcrumbs":4,"title":2},"12":{"body":0,"breadcrumbs":8,"title":4},"13":{"body":150,"breadcrumbs":6,"title":2},"14":{"body":88,"breadcrumbs":8,"title":4},"15":{"body":154,"breadcrumbs":6,"title":2},"16":{"body":0,"breadcrumbs":6,"title":3},"17":{"body":50,"breadcrumbs":5,"title":2},"18":{"body":152,"breadcrumbs":4,"title":1},"19":{"body":144,"breadcrumbs":5,"title":2},"2":{"body":105,"breadcrumbs":2,"title":1},"20":{"body":129,"breadcrumbs":6,"title":3},"21":{"body":46,"breadcrumbs":8,"title":4},"22":{"body":134,"breadcrumbs":8,"title":4},"23":{"body":150,"breadcrumbs":7,"title":3},"24":{"body":182,"breadcrumbs":4,"title":2},"25":{"body":161,"breadcrumbs":4,"title":2},"26":{"body":68,"breadcrumbs":4,"title":2},"27":{"body":48,"breadcrumbs":4,"title":2},"28":{"body":95,"breadcrumbs":4,"title":2},"29":{"body":80,"breadcrumbs":4,"title":2},"3":{"body":33,"breadcrumbs":2,"title":1},"4":{"body":68,"breadcrumbs":2,"title":1},"5":{"body":96,"breadcrumbs":3,"title":2},"6":{"body":121,"breadcrumbs":3,"title":2},"7":{"body":47,"breadcrumbs":4,"title":2},"8":{"body":101,"breadcrumbs":4,"title":2},"9":{"body":53,"breadcrumbs":5,"title":3}},"length":30},"lang":"English"}}'));