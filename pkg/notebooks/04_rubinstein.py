# coding: utf-8

# # p + z^k p*: a one-line polynomial construction
#
# If p has no zeros on the closed unit disc, then p + z^k p* is
# self-inversive and all of its roots lie on the unit circle; for large k it
# agrees with p on any smaller disc up to O(rho^k).

# In[1]:

import numpy as np

from zerocircle.grids import polar_grid
from zerocircle.transport import polynomial_roots, rubinstein_approx

P = np.polynomial.polynomial


# In[2]:

p = P.polyfromroots([1.5, -2 + 1j, 2.5j])
pts = polar_grid(0.9)
for k in (5, 10, 20, 40):
    q = rubinstein_approx(p, k)
    dev = np.max(np.abs(np.abs(polynomial_roots(q)) - 1))
    diff = np.max(np.abs(P.polyval(pts, q) - P.polyval(pts, p)))
    print(k, "root modulus deviation %.1e" % dev, "sup diff on |z|<=0.9 %.3e" % diff)
