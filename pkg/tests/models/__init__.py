"""
Finite model, semantics and model search tests.
"""
