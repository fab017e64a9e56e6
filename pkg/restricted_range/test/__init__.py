"""
Test suite for the semigroup algorithms.

Contains tests for:
- Transformation primitives and enumeration
- Regularity, quasi-inverses and idempotents
- Λ, L*, R* and their oracles, classes and abundance
- Counting formulas
- Input validation and the verify harness
"""
