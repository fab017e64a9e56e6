"""Exact computation in semigroups of transformations with restricted range."""
