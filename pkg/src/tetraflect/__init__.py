"""Exact computational models of the tetrahedron reflection group.

One group, several exact realizations:

- ``lattice``/``coxeter``: a rank-10 even unimodular lattice of signature
  (1,9) with a distinguished 20-face Coxeter polytope, its diagram and cusps.
- ``autgroup``: the group generated by ten pair-indexed lattice isometries;
  word normal forms, integer matrices, chamber reduction, nef tests.
- ``quaternions``: the rotation model by unit Hurwitz quaternions acting on
  the cube's body diagonals.
- ``padic``/``tree``: the 3-adic splitting and the action on the 4-regular
  tree of local lattices.
- ``game``: the tetrahedron reflection game driven by the same word algebra.

All arithmetic is exact (integers, ``fractions.Fraction``, 3-adic digits);
no floating point anywhere.
"""

__version__ = "0.1.0"
