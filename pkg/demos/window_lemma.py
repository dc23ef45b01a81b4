# Windows on subsets of Z+: covering by a sumset vs. hitting every window.
import numpy as np

from semiflows import zplus

# The return exponents of the disk twist at radius 1/2: zero, then every even number from 4.
A = zplus.parse_windowed_set("0,4..N:2", horizon=60)
print("A =", A)
print("min window:", zplus.min_window(A))  # the gap 0 -> 4 leaves 1, 2, 3 uncovered

for R in range(5):
    print(R, zplus.covers_by_window(A, R), zplus.window_hits(A, R))

# Every subset of [0, 14] that contains 0, one row each
M = zplus.all_subsets_with_zero(14)
print(M.shape)

# both conditions on every row, for every radius
agree = [np.array_equal(zplus.covers_by_window_batch(M, R), zplus.window_hits_batch(M, R))
         for R in range(15)]
print("all radii agree:", all(agree))

# how long the longest empty run is, across the corpus
mw = zplus.min_window_batch(M)
counts = np.bincount(mw)
for R, c in enumerate(counts):
    print(f"min window {R:2d}: {c:5d} sets")

# random sets at a longer horizon, sparse ones included
rng = np.random.default_rng(7)
Mr = zplus.random_subsets_with_zero(20000, 150, rng)
print("random, R = 12:", np.array_equal(zplus.covers_by_window_batch(Mr, 12), zplus.window_hits_batch(Mr, 12)))
