"""
Normal form and rewriting tests.
"""
