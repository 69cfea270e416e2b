"""Golden sessions run by ``valx --selftest``.

Each entry maps a name to (session text, expected report).  The expected
reports were checked value by value against independent hand computations
in the test-suite.
"""

GOLDEN = {}

GOLDEN["above_all"] = (
    """\
base padic 3
gamma aboveall
pair 1/3
eval x - 1/3
eval x^2
ic
report
""",
    """\
omega(x - 1/3) = 0+1*gamma
omega(x^2) = -2
ic.verdict = Exact
ic.field = K^h
ic.degree = 1
ic.lower = K^h [1]
ic.upper = K^h [1]
ic.j = 1
ic.rule = gamma-above-all
kind = value-transcendental
omegaQ = 0+1*gamma
valuegroup = Z (+) Z*omegaQ
residuefield = F3
e = n/a
purity = PE1
keypoly = true
""",
)

GOLDEN["artin_schreier"] = (
    """\
base ratfun F3 t henselian
ext a1 : x^3 - x - 1/t @ -1/3
gamma rational 1/2
pair a1
conj
kras
newton x^3 - x - 1/t
ic
ostrowski 3 1 1 3
""",
    """\
conj = 0, 0
kras = 0
newton.segment = -1/3 3
ic.verdict = Exact
ic.field = K(a1)^h
ic.degree = 3
ic.lower = K(a1)^h [3]
ic.upper = K(a1)^h [3]
ic.j = 1
ic.rule = krasner
ostrowski.defect = 1
""",
)

GOLDEN["cubic3_above_kras"] = (
    """\
base padic 3
ext a : x^3 - 1/3 @ -1/3
gamma rational 53/300
pair a
kras
ic
""",
    """\
kras = 1/6
ic.verdict = Exact
ic.field = K(a)^h
ic.degree = 3
ic.lower = K(a)^h [3]
ic.upper = K(a)^h [3]
ic.j = 1
ic.rule = krasner
""",
)

GOLDEN["cubic3_at_kras"] = (
    """\
base padic 3
ext a : x^3 - 1/3 @ -1/3
gamma rational 1/6
pair a
kras
j
ic
""",
    """\
kras = 1/6
j = 3
ic.verdict = Exact
ic.field = K^h
ic.degree = 1
ic.lower = K^h [1]
ic.upper = K(a)^h [3]
ic.j = 3
ic.rule = prime-degree
""",
)

GOLDEN["cubic3_gamma_1_5"] = (
    """\
# Q with the 3-adic valuation, a^3 = 1/3
base padic 3
ext a : x^3 - 1/3 @ -1/3
gamma rational 1/5
pair a
kras
conj
eval x^3 - 1/3
eval (x^2 - 3)/(x + 1)
delta x^3 - 1/3
delta x - a
newton x^3 - 1/3
minpair
ic
report
""",
    """\
kras = 1/6
conj = 1/6, 1/6
omega(x^3 - 1/3) = 8/15
omega((x^2 - 3)/(x + 1)) = -1/3
delta(x^3 - 1/3) = 1/5
delta(x - a) = 1/5
newton.segment = -1/3 3
minpair = true
ic.verdict = Exact
ic.field = K(a)^h
ic.degree = 3
ic.lower = K(a)^h [3]
ic.upper = K(a)^h [3]
ic.j = 1
ic.rule = krasner
kind = residue-transcendental
omegaQ = 8/15
valuegroup = (1/15)Z
residuefield = F3(xi)
e = 5
purity = weakly-pure(e=5)
keypoly = true
""",
)

GOLDEN["cubic5_above_kras"] = (
    """\
base padic 5
ext a : x^5 - 1/5 @ -1/5
gamma rational 3/50
pair a
kras
ic
""",
    """\
kras = 1/20
ic.verdict = Exact
ic.field = K(a)^h
ic.degree = 5
ic.lower = K(a)^h [5]
ic.upper = K(a)^h [5]
ic.j = 1
ic.rule = krasner
""",
)

GOLDEN["cubic5_at_kras"] = (
    """\
base padic 5
ext a : x^5 - 1/5 @ -1/5
gamma rational 1/20
pair a
kras
j
ic
""",
    """\
kras = 1/20
j = 5
ic.verdict = Exact
ic.field = K^h
ic.degree = 1
ic.lower = K^h [1]
ic.upper = K(a)^h [5]
ic.j = 5
ic.rule = prime-degree
""",
)

GOLDEN["cubic3_irrational_gamma"] = (
    """\
# gamma = sqrt(2)/10 lies strictly between nu(a) and kras
base padic 3
ext a : x^3 - 1/3 @ -1/3
gamma quadirr 0 1/10 2
pair a
kras
j
ic
report
""",
    """\
kras = 1/6
j = 3
ic.verdict = Exact
ic.field = K^h
ic.degree = 1
ic.lower = K^h [1]
ic.upper = K(a)^h [3]
ic.j = 3
ic.rule = prime-degree
kind = value-transcendental
omegaQ = 0+3*gamma
valuegroup = (1/3)Z (+) Z*omegaQ
residuefield = F3
e = n/a
purity = PE1
keypoly = true
""",
)

GOLDEN["tower32_proper_subfield"] = (
    """\
# Artin-Schreier a1 and Kummer a2 over F3(t); a = a1/a2 has value 1/6
base ratfun F3 t henselian
ext a1 : x^3 - x - 1/t @ -1/3
ext a2 : x^2 - 1/t @ -1/2
gamma quadirr 0 1/4 2
pair a = a1/a2
eval a
conj
kras
j
minpair
ic
report
""",
    """\
omega(a) = 1/6
conj = 1/6, 1/6, 1/6, 1/2, 1/2
kras = 1/2
j = 3
minpair = true
ic.verdict = Exact
ic.field = K(a2)^h
ic.degree = 2
ic.lower = K(a2)^h [2]
ic.upper = K(a)^h [6]
ic.j = 3
ic.rule = divisor-pinning
kind = value-transcendental
omegaQ = 1/2+3*gamma
valuegroup = (1/6)Z (+) Z*omegaQ
residuefield = F3
e = n/a
purity = PE1
keypoly = true
""",
)

GOLDEN["nonic_inseparable"] = (
    """\
# lex valuation on F3(u,v); gamma = (sqrt(3)/3, 0)
base ratfun F3 u v henselian
ext a : x^9 + u*x^3 + v @ (0,1/9)
gamma quadirr 0 1/3 3 0
pair a
minpair
ic
report
""",
    """\
minpair = true
ic.verdict = Exact
ic.field = (K(a)^h|K)^sep
ic.degree = 3
ic.lower = (K(a)^h|K)^sep [3]
ic.upper = (K(a)^h|K)^sep [3]
ic.rule = krasner-separable-part
ic.note = separable generator a^3, kras = (1/2,0)
kind = value-transcendental
omegaQ = (1,0)+3*gamma
valuegroup = Z(1,0)+Z(0,1/9) (+) Z*omegaQ
residuefield = F3
e = n/a
purity = PE1
keypoly = true
""",
)

GOLDEN["pcs_prefix"] = (
    """\
base ratfun F3 t
seq z = 0, t, t + t^3, t + t^3 + t^4
pcs verify
pcs limit t + t^3 + t^4 + t^7
pcs limit 0
pcs track x - (t + t^3 + t^4 + t^7)
pcs track x^2 + 1
""",
    """\
pcs.verify = true
pcs.gaps = 1, 3, 4
pcs.limit = true
pcs.limit = false
pcs.track = IncreasingOnTail
pcs.values = 1, 3, 4
pcs.tail_start = 0
pcs.track = ConstantOnTail
pcs.values = 0, 0, 0
pcs.tail_start = 0
""",
)

GOLDEN["synthetic_chain"] = (
    """\
base padic 5 henselian
ext b : x^2 - 5 @ 1/2
ext c : x^3 - 5 @ 1/3
ext d : x^2 - 5*c/b @ 5/12
gamma rational 3
pair a0 = 1 + b + 25*(1 + c) + 5^5*(1 + d)
chain 1 + b + 25*(1 + c) + 5^5*(1 + d), 1 + b + 25*(1 + c), 1 + b, 0
minpair
ic
report
""",
    """\
minpair = false
minpair.chain_verified = true
minpair.chain_choice = 25*c + (b + 26)
ic.verdict = Exact
ic.field = K(a1)^h
ic.degree = 6
ic.lower = K(a1)^h [6]
ic.upper = K(a1)^h [6]
ic.j = 1
ic.rule = krasner
minimal_pair = a1 = 25*c + (b + 26)
kind = residue-transcendental
omegaQ = 55/6
valuegroup = (1/6)Z
residuefield = F5(xi)
e = 1
purity = PE2
keypoly = undecided
""",
)
