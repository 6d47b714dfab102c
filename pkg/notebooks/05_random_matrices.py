# coding: utf-8

# # Characteristic polynomials of random unitary matrices
#
# Lambda(z) = det(I - U^* z) for Haar-random U has all zeros on the unit
# circle and Lambda(0) = 1.  How often is it close to a given target?

# In[1]:

import numpy as np
from scipy import stats

from zerocircle.rmt import approx_probability, char_poly, logderiv_tuples, sample_haar, sample_phases


# In[2]:

s = sample_haar(8, seed=0)
p = char_poly(s)
print(p(0), np.abs(p.roots()))


# Eigenphases are uniform on the circle (one-point marginal).

# In[3]:

phases = sample_phases(6, 10_000, seed=1)
print(stats.kstest(phases.ravel(), stats.uniform(0, 2 * np.pi).cdf))


# Probability that Lambda is within eps of 1 on |z| < 0.1 for N = 4.

# In[4]:

one = lambda z: np.ones_like(z)
for eps in (0.05, 0.1, 0.2, 0.5):
    est = approx_probability(one, 0.1, eps, N=4, trials=5000, seed=2)
    print(eps, est.probability, (round(est.low, 3), round(est.high, 3)))


# Log-derivative tuples at x = 0.5.

# In[5]:

T = logderiv_tuples(phases[:1000], 0.5, 3)
print(T.mean(axis=0))
