# Maps x -> p x + q (mod 1) on the circle with rational p in (0, 1], q in [0, 1).
from fractions import Fraction

from semiflows.engine import (
    Certificate,
    SYNDETIC,
    arc_net,
    epsilon_minimality,
    modified_ap_search,
    proximal_pair_check,
    return_set,
    syndetic_search,
    verify_certificate,
)
from semiflows.families import Affine, Truncation, apply, compose, format_element, kolmogorov_check, truncation_size
from semiflows.spaces import Arc, CirclePoint

half, third = Affine(Fraction(1, 2), Fraction(1, 3)), Affine(Fraction(1, 3), Fraction(1, 4))
print(format_element(compose(half, third)))
print(apply(half, CirclePoint(Fraction(1, 2))))

# The parameter law reduces q mod 1 before scaling, so it disagrees with a(b(x)) once b wraps past 1.
a, b, x = Affine(Fraction(1, 2), 0), Affine(Fraction(1, 2), Fraction(3, 4)), CirclePoint(Fraction(1, 2))
print("wrap:", apply(compose(a, b), x), apply(a, apply(b, x)), kolmogorov_check(a, b, x))

# Minimal: the rotations in S_d alone leave no gap wider than 2 eps.
t = Truncation("affine", 200)
print(truncation_size(t), "elements")
print(epsilon_minimality(CirclePoint(0), t, Fraction(1, 100)).to_dict())

# Proximal: contraction by 1/d brings any two points within 1/(2d).
print(proximal_pair_check(CirclePoint(0), CirclePoint(Fraction(1, 2)), t, Fraction(1, 100)).to_dict())

# Return set of 0 for the arc of halfwidth 1/27, at a searchable size
ts = Truncation("affine", 10)
U = Arc(CirclePoint(0), Fraction(1, 27))
A = return_set(CirclePoint(0), U, ts)
print(len(A), "of", truncation_size(ts), "maps return")

# with the factor a restricted to S_10
print(syndetic_search(ts, A).to_dict())

# with a allowed anywhere in S: fourteen rotations j/14 cover
K = tuple(arc_net(U.halfwidth))
cert = Certificate(SYNDETIC, K, ts, quotient="exact")
print("arc net of", len(K), "rotations:", verify_certificate(cert, A))

# modified AP: a few contractions do it
print(modified_ap_search(ts, A).to_dict())
