# Powers f^n, n in {0, 3, 4, 5, ...}, of the twist (r, theta) -> (r, theta + r) on the disk.
from fractions import Fraction

from semiflows import zplus
from semiflows.engine import (
    cascade_ap_bridge,
    epsilon_minimality,
    group_completion_certificate,
    modified_ap_search,
    proximal_pair_check,
    return_set,
    syndetic_search,
)
from semiflows.families import Truncation, group_completion
from semiflows.spaces import DiskPoint, polar_box

t = Truncation("twist", 200)
x = DiskPoint(Fraction(1, 2))
U = polar_box(x, Fraction(1, 8), Fraction(1, 8))

A = return_set(x, U, t)
exps = [s.n for s in A.members]
print(exps[:10], "...", exps[-1])

# the exponents as a subset of Z+, and the window lemma on them
W = cascade_ap_bridge(A)
print("min window:", zplus.min_window(W))

# S = K + A holds with a three element K
cert = syndetic_search(t, A)
print("syndetic:", [k.n for k in cert.K], cert.verified)

# the modified notion needs two
cert = modified_ap_search(t, A)
print("modified:", [k.n for k in cert.K], cert.verified)

# Distal: the twist is a rotation on each circle, so same-radius distances never change.
y = DiskPoint(Fraction(1, 2), Fraction(1, 4))
print(proximal_pair_check(x, y, t, Fraction(1, 100)).to_dict())

# Rational radii give finite cycles, hence minimal orbit closures.
for r in (Fraction(1, 2), Fraction(2, 5), Fraction(3, 7)):
    print(r, epsilon_minimality(DiskPoint(r, Fraction(1, 9)), t, Fraction(1, 100)).evidence)

# In the group generated by S, return times are the even integers.
print("group step:", group_completion(t).step)
print(group_completion_certificate(x, U).to_dict())
