"""Weight-3 paramodular nonlift eigenforms at levels 61, 73, 79.

Construction from theta blocks, Gritsenko lifts, and Borcherds products;
Hecke eigenvalues by restriction to modular curves; congruences to lifts
verified through number-ring ideal arithmetic.
"""

__version__ = "0.1.0"
