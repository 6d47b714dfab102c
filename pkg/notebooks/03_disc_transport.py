# coding: utf-8

# # Moving the construction to an off-centre disc
#
# A Euclidean disc inside the unit disc is also a pseudohyperbolic disc, so a
# Moebius map alpha_a carries a centred disc onto it.  Approximating f o alpha_a
# at the origin and pulling back places the zeros where we want them.

# In[1]:

import numpy as np

from zerocircle.grids import square_grid
from zerocircle.transport import (
    approx_blaschke_on_disc,
    approx_poly_on_disc,
    factor_prescribed_zeros,
    pseudohyperbolic_distance,
    to_disc_spec,
)


# In[2]:

disc = to_disc_spec(0.3 + 0.1j, 0.2)
print(disc)
z, w = 0.1 + 0.2j, -0.3j
print(pseudohyperbolic_distance(disc.map(z), disc.map(w)), pseudohyperbolic_distance(z, w))


# Polynomial with every root on |z| = 1, close to e^z on the disc.

# In[3]:

poly = approx_poly_on_disc(np.exp, disc, eps=0.05)
pts = square_grid(0.2, 41, 0.3 + 0.1j)
print("error", np.max(np.abs(poly(pts) - np.exp(pts))), "root moduli", np.ptp(np.abs(poly.roots())))


# Blaschke product whose zeros lie on the boundary of D(0.1, 0.3).

# In[4]:

f = lambda z: 1 / (1 - z / 2)
disc = to_disc_spec(0.1, 0.3)
T = approx_blaschke_on_disc(f, disc, delta=0.05, eps=1e-2)
pts = square_grid(0.25, 41, 0.1)
print("error", np.max(np.abs(T(pts) - f(pts))))
print("distance of zeros from centre", np.abs(T.zeros() - 0.1).min(), np.abs(T.zeros() - 0.1).max())


# Prescribed interior zeros go into a finite Blaschke factor.

# In[5]:

approx = factor_prescribed_zeros([0.2, -0.1j], np.exp, to_disc_spec(0, 0.6), 0.1, 1e-2)
c0, C1, C2 = approx
print(abs(approx(0.2)), abs(approx(-0.1j)))
