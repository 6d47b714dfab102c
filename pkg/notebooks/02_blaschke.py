# coding: utf-8

# # Blaschke products with zeros on |w| = r
#
# Using rational factors with denominator ratio R = r^2 and substituting
# z = w/r turns the factor product into a constant times a finite Blaschke
# product whose zeros all have modulus r.

# In[1]:

import time

import numpy as np

from zerocircle.blaschke import approximate_blaschke, blaschke_factor, blaschke_zeros, eval_blaschke
from zerocircle.grids import polar_grid
from zerocircle.series import series_from_function


# In[2]:

series = lambda n: series_from_function(np.exp, n, 0.9)
t0 = time.perf_counter()
B, res = approximate_blaschke(np.exp, series, r=0.5, delta=0.1, eps=1e-2)
print("J =", res.J, "degree =", B.degree, "time", round(time.perf_counter() - t0, 3))
print(res.history[-3:])


# The constant is enormous, so it is kept as a logarithm.

# In[3]:

print("log c_B =", B.log_c)


# In[4]:

zs = blaschke_zeros(B)
print("zero moduli:", np.abs(zs).min(), np.abs(zs).max())
w = polar_grid(0.45)
print("sup error on |w| <= 0.45:", np.max(np.abs(eval_blaschke(B, w) - np.exp(w))))
circle = np.exp(2j * np.pi * np.arange(256) / 256)
print("|C| on the unit circle:", np.abs(blaschke_factor(B, circle)).min(), np.abs(blaschke_factor(B, circle)).max())
