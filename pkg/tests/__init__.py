"""
Tests for Submodel Lab.
"""
