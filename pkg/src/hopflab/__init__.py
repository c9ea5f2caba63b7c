"""hopflab: exact computations and verification for finite-dimensional
Hopf algebras, their (co)induction adjunctions, projection formulas,
Drinfeld-center structures, and central monoids."""

__version__ = "0.1.0"
