"""
Parser and renderer tests.
"""
