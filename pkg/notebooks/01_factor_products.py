# coding: utf-8

# # Zeros on the unit circle: matching a log-derivative
#
# A function f that does not vanish near 0 can be approximated on a small disc
# by a product of factors (1 + xi z^j)^nu (1 + eta z^j) with |xi| = |eta| = 1.
# Every zero of such a product lies on |z| = 1.  The parameters are chosen so
# that the Taylor coefficients of g'/g agree with those of f'/f.

# In[1]:

import numpy as np

from zerocircle import TruncatedSeries, decompose, log_derivative
from zerocircle.grids import polar_grid, sup_error
from zerocircle.matching import approximate, logderiv_of_factors
from zerocircle.series import series_from_function


# The parameter choice rests on writing a complex number as m*xi + eta with
# unimodular xi, eta and a positive integer m.

# In[2]:

t = decompose(3.5)
print(t, abs(t.xi), abs(t.eta), t.value())


# Taylor coefficients of e^z, taken from samples on a circle.

# In[3]:

f = series_from_function(np.exp, 30, 0.8)
print(np.round(f.coeffs[:6].real, 6))


# Match through J = 12 and J = 24 and compare on |z| <= 0.4.

# In[4]:

pts = polar_grid(0.4)
for J in (6, 12, 24):
    g = approximate(f.truncate(J), J)
    print(J, g.degree, sup_error(g, np.exp, pts))


# The matched coefficients agree with the target; the roots sit on the circle.

# In[5]:

g = approximate(f.truncate(12), 12)
print(np.max(np.abs(logderiv_of_factors(g, 11).coeffs - log_derivative(f.truncate(12)).coeffs)))
print(np.max(np.abs(np.abs(g.roots()) - 1)))
