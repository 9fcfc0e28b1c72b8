"""hoarekit - proof kernel for propositional calculus, Peano arithmetic and Hoare logic."""

__version__ = "1.0.0"
