# The scaling monoid x -> a x on [0, 1], a in [0, 1/2] or a = 1.
from fractions import Fraction

from semiflows.engine import epsilon_minimality, modified_ap_search, return_set, syndetic_search
from semiflows.families import Truncation, enumerate_truncation, format_element
from semiflows.spaces import OpenInterval, UnitIntervalPoint

t = Truncation("scale", 20)
S = enumerate_truncation(t)
print(len(S), "maps, from", format_element(S[0]), "to", format_element(S[-1]))

x = UnitIntervalPoint(Fraction(1, 2))
U = OpenInterval(Fraction(1, 3), Fraction(2, 3))

# nothing but the identity keeps 1/2 inside the middle third
A = return_set(x, U, t)
print("return set:", [format_element(s) for s in A.members])

# so S = K A forces K to be all of S
cert = syndetic_search(t, A, max_k=len(S))
print("syndetic K size:", len(cert.K), "verified:", cert.verified)

# The modified notion fails: after s = 0 the point sits at 0 for good.
res = modified_ap_search(t, A)
print(type(res).__name__, res.reason, [format_element(s) for s in res.uncovered])

# and the orbit closure of 1/2 is not minimal, {0} sits inside it
v = epsilon_minimality(x, t, Fraction(1, 100))
print(v.status, v.witness, v.evidence)
